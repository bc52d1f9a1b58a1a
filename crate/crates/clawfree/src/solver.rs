//! Strong stable sets: a brute-force oracle, a decomposition-guided cascade
//! that recurses on smaller instances, and the gadget constructions that move
//! prescribed vertices between instances.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::decompose::{find_one_join, find_proper_coherent_w_join, pair_neighborhood, OneJoin, WJoin};
use crate::error::{Error, Result};
use crate::graph::{is_strong_stable_set, maximal_cliques, Budget, Counter, Graph, PathMode, VertexSet};
use crate::linegraph::{find_augment_pairs, recover_root, suitable_matching};
use crate::recognizers::{
    chain_order, cobipartite_partition, find_cosimplicial_nonedge, find_twins, is_consistent_set, is_cosimplicial_nonedge,
    is_safe_vertex, linear_interval_order, peculiar_structure, simplicial_vertices, verify_peculiar, LinearIntervalOrder,
    PeculiarParts,
};

/// Peculiar structure search is only attempted up to this many vertices.
const PECULIAR_MAX_VERTICES: usize = 18;

/// A graph and a set of vertices the answer must contain.
#[derive(Clone, Debug)]
pub struct SolveInput {
    pub g: Graph,
    pub z: VertexSet,
    /// Skip checking that `z` is a consistent set of safe vertices.
    pub trusted: bool,
}

impl SolveInput {
    pub fn new(g: Graph) -> Self {
        SolveInput { g, z: VertexSet::new(), trusted: false }
    }

    pub fn with_required(g: Graph, z: VertexSet) -> Self {
        SolveInput { g, z, trusted: false }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// Produced by the structural branches alone.
    Found,
    /// Exhaustive search proved there is no answer.
    NoneExists,
    /// Correct, but some part came from exhaustive search.
    FallbackFound,
    /// A budget ran out first.
    Budget,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Found => "found",
            Status::NoneExists => "none-exists",
            Status::FallbackFound => "fallback-found",
            Status::Budget => "budget",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    Complete,
    Disconnected,
    Twins,
    Simplicial,
    Cobipartite,
    LinearInterval,
    WJoin,
    OneJoin,
    LineGraph,
    Augmentation,
    Peculiar,
    BruteForce,
}

impl Branch {
    pub const ALL: [Branch; 12] = [
        Branch::Complete,
        Branch::Disconnected,
        Branch::Twins,
        Branch::Simplicial,
        Branch::Cobipartite,
        Branch::LinearInterval,
        Branch::WJoin,
        Branch::OneJoin,
        Branch::LineGraph,
        Branch::Augmentation,
        Branch::Peculiar,
        Branch::BruteForce,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Branch::Complete => "complete",
            Branch::Disconnected => "disconnected",
            Branch::Twins => "twins",
            Branch::Simplicial => "simplicial",
            Branch::Cobipartite => "cobipartite",
            Branch::LinearInterval => "linear-interval",
            Branch::WJoin => "w-join",
            Branch::OneJoin => "one-join",
            Branch::LineGraph => "line-graph",
            Branch::Augmentation => "augmentation",
            Branch::Peculiar => "peculiar",
            Branch::BruteForce => "brute-force",
        }
    }

    /// Why the branch's answer is correct, in one line.
    pub fn reason(self) -> &'static str {
        match self {
            Branch::Complete => "every single vertex meets the only maximal clique",
            Branch::Disconnected => "maximal cliques live inside components",
            Branch::Twins => "a twin lies in exactly the maximal cliques of its partner",
            Branch::Simplicial => "a deleted simplicial vertex is added back when its clique is missed",
            Branch::Cobipartite => "a cosimplicial non-edge between the two cliques is strong",
            Branch::LinearInterval => "the first vertex is traded for the end of its neighbor's window",
            Branch::WJoin => "side solutions with an apex plus a cosimplicial non-edge of the pair",
            Branch::OneJoin => "side solutions with apex gadgets meet the joining clique once",
            Branch::LineGraph => "a suitable matching of the root is strong in the line graph",
            Branch::Augmentation => "the pair shrinks to its two complete vertices without changing the answer",
            Branch::Peculiar => "a cosimplicial non-edge of the free pair is strong",
            Branch::BruteForce => "exhaustive search",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Used,
    /// Applied, but its answer failed verification.
    Rejected,
    /// Its detector ran out of budget.
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceRecord {
    pub depth: usize,
    pub branch: Branch,
    pub outcome: Outcome,
    /// Vertex count of the instance.
    pub n: usize,
    /// Vertex counts of the instances it was reduced to.
    pub parts: Vec<usize>,
    pub reason: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub status: Status,
    pub s: Option<VertexSet>,
    pub trace: Vec<TraceRecord>,
}

impl SolveResult {
    /// How often each branch produced an accepted answer.
    pub fn branch_histogram(&self) -> BTreeMap<Branch, usize> {
        let mut h = BTreeMap::new();
        for r in self.trace.iter().filter(|r| r.outcome == Outcome::Used) {
            *h.entry(r.branch).or_insert(0) += 1;
        }
        h
    }
}

/// Checks that `z` is stable, consistent and made of safe vertices.
pub fn validate_required(g: &Graph, z: VertexSet, b: &Budget) -> Result<()> {
    if !z.is_subset(g.vertices()) {
        let v = (z - g.vertices()).first().expect("non-empty difference");
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    if !g.is_stable(z) {
        return Err(Error::precondition("required vertices must be pairwise non-adjacent"));
    }
    if !is_consistent_set(g, z, PathMode::default(), b)? {
        return Err(Error::precondition("required vertices are joined by an odd path"));
    }
    for v in z {
        if !is_safe_vertex(g, v, PathMode::default(), b)? {
            return Err(Error::precondition(format!("vertex {v} is not safe")));
        }
    }
    Ok(())
}

/// The lexicographically smallest strong stable set containing `z`, if any.
/// Sets are compared as increasing vertex lists.
pub fn brute_force(g: &Graph, z: VertexSet, b: &Budget) -> Result<Option<VertexSet>> {
    b.check_vertices(g.n(), "brute force")?;
    if !z.is_subset(g.vertices()) || !g.is_stable(z) {
        return Ok(None);
    }
    let cliques = maximal_cliques(g, b)?;
    let counter = b.counter("brute force");
    // A clique is hopeless once every vertex of it is below the next candidate.
    let last_of: Vec<usize> = cliques.iter().map(|k| k.last().unwrap_or(0)).collect();
    let mut found = None;
    // Depth-first in lexicographic order: a set precedes its extensions.
    fn visit(
        g: &Graph,
        z: VertexSet,
        cliques: &[VertexSet],
        last_of: &[usize],
        s: VertexSet,
        next: usize,
        counter: &Counter,
        found: &mut Option<VertexSet>,
    ) -> Result<()> {
        counter.tick()?;
        if z.is_subset(s) && cliques.iter().all(|k| k.intersects(s)) {
            *found = Some(s);
            return Ok(());
        }
        for v in next..g.n() {
            if g.neighbors(v).intersects(s) {
                continue;
            }
            // Skipping a required vertex is never recoverable.
            if (z & VertexSet::range(v)).iter().any(|w| !s.contains(w)) {
                break;
            }
            // Cliques ending before v must already be met.
            if cliques.iter().zip(last_of).any(|(k, &l)| l < v && !k.intersects(s)) {
                break;
            }
            visit(g, z, cliques, last_of, s.with(v), v + 1, counter, found)?;
            if found.is_some() {
                return Ok(());
            }
        }
        Ok(())
    }
    visit(g, z, &cliques, &last_of, VertexSet::new(), 0, &counter, &mut found)?;
    Ok(found)
}

/// Computes a strong stable set containing the required vertices.
pub fn solve(input: &SolveInput, b: &Budget) -> Result<SolveResult> {
    if !input.trusted {
        validate_required(&input.g, input.z, &Budget::default())?;
    }
    let mut ctx = Context { budget: b, trace: Vec::new(), depth: 0 };
    match ctx.solve(&input.g, input.z) {
        Ok(s) => {
            let fallback = ctx.trace.iter().any(|r| r.branch == Branch::BruteForce && r.outcome == Outcome::Used);
            let status = match s {
                None => Status::NoneExists,
                Some(_) if fallback => Status::FallbackFound,
                Some(_) => Status::Found,
            };
            Ok(SolveResult { status, s, trace: ctx.trace })
        }
        Err(e) if e.is_budget() => Ok(SolveResult { status: Status::Budget, s: None, trace: ctx.trace }),
        Err(e) => Err(e),
    }
}

struct Context<'a> {
    budget: &'a Budget,
    trace: Vec<TraceRecord>,
    depth: usize,
}

type Attempt = Result<Option<(VertexSet, Vec<usize>)>>;

impl Context<'_> {
    /// Returns `None` only after exhaustive search found nothing.
    fn solve(&mut self, g: &Graph, z: VertexSet) -> Result<Option<VertexSet>> {
        self.depth += 1;
        let r = self.solve_here(g, z);
        self.depth -= 1;
        r
    }

    fn record(&mut self, branch: Branch, outcome: Outcome, n: usize, parts: Vec<usize>) {
        self.trace.push(TraceRecord { depth: self.depth, branch, outcome, n, parts, reason: branch.reason() });
    }

    fn solve_here(&mut self, g: &Graph, z: VertexSet) -> Result<Option<VertexSet>> {
        for branch in &Branch::ALL[..11] {
            let attempt = match branch {
                Branch::Complete => self.complete(g, z),
                Branch::Disconnected => self.disconnected(g, z),
                Branch::Twins => self.twins(g, z),
                Branch::Simplicial => self.simplicial(g, z),
                Branch::Cobipartite => Ok(solve_cobipartite(g, z)?.map(|s| (s, Vec::new()))),
                Branch::LinearInterval => self.linear_interval(g, z),
                Branch::WJoin => self.w_join(g, z),
                Branch::OneJoin => self.one_join(g, z),
                Branch::LineGraph => line_graph_branch(g, z, self.budget),
                Branch::Augmentation => self.augmentation(g, z),
                Branch::Peculiar => self.peculiar(g, z),
                Branch::BruteForce => unreachable!("handled below"),
            };
            match attempt {
                Ok(None) => {}
                Ok(Some((s, parts))) => {
                    if z.is_subset(s) && is_strong_stable_set(g, s, self.budget)? {
                        self.record(*branch, Outcome::Used, g.n(), parts);
                        return Ok(Some(s));
                    }
                    self.record(*branch, Outcome::Rejected, g.n(), parts);
                }
                Err(e) if e.is_budget() => self.record(*branch, Outcome::Skipped, g.n(), Vec::new()),
                Err(e) => return Err(e),
            }
        }
        let s = brute_force(g, z, self.budget)?;
        self.record(Branch::BruteForce, Outcome::Used, g.n(), Vec::new());
        Ok(s)
    }

    /// Solves an induced subgraph given by host vertices, answering in host ids.
    fn solve_induced(&mut self, g: &Graph, keep: VertexSet, z: VertexSet) -> Result<Option<VertexSet>> {
        let sub = g.induced(keep);
        Ok(self.solve(&sub.graph, sub.local_set(z))?.map(|s| sub.host_set(s)))
    }

    fn complete(&mut self, g: &Graph, z: VertexSet) -> Attempt {
        if !g.is_clique(g.vertices()) {
            return Ok(None);
        }
        let s = match (z.first(), g.n()) {
            (Some(v), _) => VertexSet::singleton(v),
            (None, 0) => VertexSet::new(),
            (None, _) => VertexSet::singleton(0),
        };
        Ok(Some((s, Vec::new())))
    }

    fn disconnected(&mut self, g: &Graph, z: VertexSet) -> Attempt {
        let comps = g.components();
        if comps.len() < 2 {
            return Ok(None);
        }
        let mut s = VertexSet::new();
        for &c in &comps {
            match self.solve_induced(g, c, z & c)? {
                Some(part) => s = s | part,
                None => return Ok(None),
            }
        }
        Ok(Some((s, comps.iter().map(|c| c.len()).collect())))
    }

    fn twins(&mut self, g: &Graph, z: VertexSet) -> Attempt {
        let Some((u, v)) = find_twins(g) else { return Ok(None) };
        let gone = if z.contains(v) { u } else { v };
        let keep = g.vertices().without(gone);
        Ok(self.solve_induced(g, keep, z)?.map(|s| (s, vec![keep.len()])))
    }

    fn simplicial(&mut self, g: &Graph, z: VertexSet) -> Attempt {
        let Some(v) = (simplicial_vertices(g) - z).first() else { return Ok(None) };
        let keep = g.vertices().without(v);
        let Some(s) = self.solve_induced(g, keep, z)? else { return Ok(None) };
        // One of the two always works.
        let s = if is_strong_stable_set(g, s, self.budget)? { s } else { s.with(v) };
        Ok(Some((s, vec![keep.len()])))
    }

    fn linear_interval(&mut self, g: &Graph, z: VertexSet) -> Attempt {
        let Some(order) = linear_interval_order(g, self.budget)? else { return Ok(None) };
        let reversed = LinearIntervalOrder { order: order.order.iter().rev().copied().collect() };
        for o in [order, reversed] {
            if let Some(step) = linear_interval_step(g, z, &o) {
                let Some(s) = self.solve_induced(g, step.keep, step.z)? else { return Ok(None) };
                return Ok(Some((s.with(step.first), vec![step.keep.len()])));
            }
        }
        Ok(None)
    }

    fn w_join(&mut self, g: &Graph, z: VertexSet) -> Attempt {
        let Some(w) = find_proper_coherent_w_join(g, self.budget)? else { return Ok(None) };
        let Some(plan) = w_join_plan(g, &w, z) else { return Ok(None) };
        let mut sides = VertexSet::new();
        let mut parts = Vec::new();
        for (attach, rest) in [(plan.c, plan.f_c), (plan.d, plan.f_d)] {
            let Some(s) = self.solve_with_apex(g, attach, rest, z)? else { return Ok(None) };
            sides = sides | s;
            parts.push((attach | rest).len() + 1);
        }
        Ok(Some((sides.with(plan.pair.0).with(plan.pair.1), parts)))
    }

    /// Solves `G | (attach ∪ rest)` plus a required apex complete to
    /// `attach`, then drops the apex.
    fn solve_with_apex(&mut self, g: &Graph, attach: VertexSet, rest: VertexSet, z: VertexSet) -> Result<Option<VertexSet>> {
        let sub = g.induced(attach | rest);
        let apex = sub.graph.n();
        let h = sub.graph.with_vertex(sub.local_set(attach))?;
        let zl = sub.local_set(z).with(apex);
        Ok(self.solve(&h, zl)?.map(|s| sub.host_set(s.without(apex))))
    }

    fn one_join(&mut self, g: &Graph, z: VertexSet) -> Attempt {
        let Some(j) = find_one_join(g) else { return Ok(None) };
        let hit = z & (j.a1 | j.a2);
        if let Some(a) = hit.first() {
            // The required vertex of the joining clique already meets it.
            let j = if j.a2.contains(a) { j } else { j.swapped() };
            let Some(s1) = self.solve_induced(g, j.v1.with(a), (z & j.v1).with(a))? else { return Ok(None) };
            let Some(s2) = self.solve_induced(g, j.v2, z & j.v2)? else { return Ok(None) };
            return Ok(Some((s1 | s2, vec![j.v1.len() + 1, j.v2.len()])));
        }
        if j.rich {
            for oriented in [j.clone(), j.swapped()] {
                if let Some(found) = self.rich_one_join(g, &oriented, z)? {
                    return Ok(Some(found));
                }
            }
            return Ok(None);
        }
        let small = if j.v1.len() == 2 { j } else { j.swapped() };
        self.small_one_join(g, &small, z)
    }

    /// Side 1 gets an apex complete to its clique, side 2 a pendant path of
    /// length two ending in its clique; the apex ends are required.
    fn rich_one_join(&mut self, g: &Graph, j: &OneJoin, z: VertexSet) -> Attempt {
        if j.v1.len() + 2 >= g.n() || j.v2.len() + 2 >= g.n() {
            return Ok(None);
        }
        let Some(s1) = self.solve_with_apex(g, j.a1, j.b1(), z)? else { return Ok(None) };
        let sub = g.induced(j.v2);
        let mid = sub.graph.n();
        let h = sub.graph.with_vertex(sub.local_set(j.a2))?;
        let h = h.with_vertex(VertexSet::singleton(mid))?;
        let zl = sub.local_set(z).with(mid + 1);
        let Some(s2) = self.solve(&h, zl)? else { return Ok(None) };
        let s2 = sub.host_set(s2 - VertexSet::singleton(mid).with(mid + 1));
        Ok(Some((s1 | s2, vec![j.v1.len() + 1, j.v2.len() + 2])))
    }

    /// `v1 = {a1, b1}`: solve the other side with one vertex of its clique
    /// required, then add `b1`.
    fn small_one_join(&mut self, g: &Graph, j: &OneJoin, z: VertexSet) -> Attempt {
        let b1 = j.b1().first().expect("side has two vertices");
        for a2 in j.a2 {
            let keep = j.b2().with(a2);
            let zl = (z & j.b2()).with(a2);
            if !g.is_stable(zl) {
                continue;
            }
            if let Some(s) = self.solve_induced(g, keep, zl)? {
                let s = s.with(b1);
                if is_strong_stable_set(g, s, self.budget)? {
                    return Ok(Some((s, vec![keep.len()])));
                }
            }
        }
        Ok(None)
    }

    fn augmentation(&mut self, g: &Graph, z: VertexSet) -> Attempt {
        if !g.is_connected() {
            return Ok(None);
        }
        for (x, y) in find_augment_pairs(g, self.budget)? {
            if let Some((u, v)) = augment_reduction(g, x, y, z) {
                let keep = g.vertices() - (x.without(u) | y.without(v));
                let Some(s) = self.solve_induced(g, keep, z)? else { return Ok(None) };
                return Ok(Some((s, vec![keep.len()])));
            }
        }
        Ok(None)
    }

    fn peculiar(&mut self, g: &Graph, z: VertexSet) -> Attempt {
        if g.n() > PECULIAR_MAX_VERTICES {
            return Ok(None);
        }
        let Some(parts) = peculiar_structure(g, self.budget)? else { return Ok(None) };
        Ok(peculiar_pair(g, &parts, z).map(|s| (s, Vec::new())))
    }
}

/// The pair `(u, v)` for shrinking an augment pair `(x, y)`: `u` in `x`
/// complete to `y` and `v` in `y` complete to `x`, with the outside sides
/// cliques and no required vertex in the pair.
fn augment_reduction(g: &Graph, x: VertexSet, y: VertexSet, z: VertexSet) -> Option<(usize, usize)> {
    if z.intersects(x | y) {
        return None;
    }
    let p = pair_neighborhood(g, x, y);
    if !p.e.is_empty() || !g.is_clique(p.c) || !g.is_clique(p.d) {
        return None;
    }
    let u = x.iter().find(|&u| g.is_complete_to(VertexSet::singleton(u), y))?;
    let v = y.iter().find(|&v| g.is_complete_to(VertexSet::singleton(v), x))?;
    Some((u, v))
}

fn line_graph_branch(g: &Graph, z: VertexSet, b: &Budget) -> Attempt {
    if g.n() < 2 || !g.is_connected() {
        return Ok(None);
    }
    let Some(r) = recover_root(g, b)? else { return Ok(None) };
    let forced: Vec<usize> = z.iter().map(|v| r.edge_map[v]).collect();
    let Some(m) = suitable_matching(&r.root, &forced, b)? else { return Ok(None) };
    let s = (0..g.n()).filter(|&v| m.edges.contains(&r.edge_map[v])).collect();
    Ok(Some((s, vec![r.root.n()])))
}

/// Solution for a cobipartite graph: a cosimplicial non-edge containing `z`.
/// With one required vertex `a`, its partner is the non-neighbor of `a`
/// across whose neighborhood on `a`'s side is largest. A complete graph takes
/// a single vertex.
pub fn solve_cobipartite(g: &Graph, z: VertexSet) -> Result<Option<VertexSet>> {
    if g.is_clique(g.vertices()) {
        // Any one vertex meets the only maximal clique.
        return Ok(match z.len() {
            0 => g.vertices().first().map(VertexSet::singleton),
            1 => Some(z),
            _ => None,
        });
    }
    let Some(parts) = cobipartite_partition(g) else { return Ok(None) };
    if z.len() > 2 || !g.is_stable(z) {
        return Err(Error::precondition("a cobipartite graph has no stable set of three vertices"));
    }
    let pair = match z.to_vec().as_slice() {
        [a, b] => Some((*a, *b)),
        [a] => {
            let (own, other) = if parts.a.contains(*a) { (parts.a, parts.b) } else { (parts.b, parts.a) };
            let far = other - g.neighbors(*a);
            chain_order(g, far, own)?
                .and_then(|o| o.last().copied())
                .map(|b| (*a, b))
                .filter(|&(a, b)| is_cosimplicial_nonedge(g, a, b))
                .or(find_cosimplicial_nonedge(g, z)?)
        }
        _ => find_cosimplicial_nonedge(g, z)?,
    };
    Ok(pair.map(|(a, b)| VertexSet::singleton(a).with(b)))
}

/// Solution for a peculiar graph: a cosimplicial non-edge between the first
/// free pair that contains every required vertex.
pub fn solve_peculiar(g: &Graph, parts: &PeculiarParts) -> Result<VertexSet> {
    if !verify_peculiar(g, parts) {
        return Err(Error::precondition("parts do not form a peculiar graph"));
    }
    peculiar_pair(g, parts, VertexSet::new())
        .ok_or_else(|| Error::precondition("free pair has no cosimplicial non-edge; the graph has a long antihole"))
}

fn peculiar_pair(g: &Graph, parts: &PeculiarParts, z: VertexSet) -> Option<VertexSet> {
    let (a1, b2) = (parts.a[0], parts.b[1]);
    let sub = g.induced(a1 | b2);
    let mut best = None;
    for u in sub.local_set(a1) {
        for v in sub.local_set(b2) {
            if is_cosimplicial_nonedge(&sub.graph, u, v) {
                best = Some(VertexSet::singleton(sub.to_host[u]).with(sub.to_host[v]));
                break;
            }
        }
        if best.is_some() {
            break;
        }
    }
    best.filter(|s| z.is_subset(*s))
}

struct LinearStep {
    first: usize,
    keep: VertexSet,
    z: VertexSet,
}

/// With `v1` required, `v_i` the last neighbor of `v2`: drop `v1..v_{i-1}`
/// and require `v_i` instead of `v1`.
fn linear_interval_step(g: &Graph, z: VertexSet, o: &LinearIntervalOrder) -> Option<LinearStep> {
    let v = &o.order;
    if v.len() < 3 || !z.contains(v[0]) {
        return None;
    }
    let i = (0..v.len()).rev().find(|&t| t != 1 && g.adjacent(v[1], v[t]))?;
    if g.adjacent(v[0], v[i]) {
        return None;
    }
    let keep: VertexSet = v[i..].iter().collect();
    let z = (z & keep).with(v[i]);
    g.is_stable(z).then_some(LinearStep { first: v[0], keep, z })
}

/// A linear interval solution per the trading step, as a standalone entry
/// point. Falls back to exhaustive search on the residual instance.
pub fn solve_linear_interval(g: &Graph, z: VertexSet, order: &LinearIntervalOrder, b: &Budget) -> Result<Option<VertexSet>> {
    if !order.verify(g) {
        return Err(Error::precondition("not a linear interval order"));
    }
    match linear_interval_step(g, z, order) {
        Some(step) => {
            let sub = g.induced(step.keep);
            let res = solve(&SolveInput { g: sub.graph.clone(), z: sub.local_set(step.z), trusted: true }, b)?;
            Ok(res.s.map(|s| sub.host_set(s).with(step.first)))
        }
        None => brute_force(g, z, b),
    }
}

struct WJoinPlan {
    c: VertexSet,
    d: VertexSet,
    f_c: VertexSet,
    f_d: VertexSet,
    pair: (usize, usize),
}

/// Splits the anticomplete part into the pieces hanging off `C` and off `D`
/// and picks a cosimplicial non-edge of the pair.
fn w_join_plan(g: &Graph, w: &WJoin, z: VertexSet) -> Option<WJoinPlan> {
    let p = pair_neighborhood(g, w.a, w.b);
    if !z.is_subset(p.f) {
        return None;
    }
    let (mut f_c, mut f_d) = (VertexSet::new(), VertexSet::new());
    for comp in g.components_within(p.f) {
        let reach = g.neighborhood_of_set(comp);
        match (reach.intersects(p.c), reach.intersects(p.d)) {
            (true, true) => return None,
            (false, true) => f_d = f_d | comp,
            _ => f_c = f_c | comp,
        }
    }
    let sub = g.induced(w.a | w.b);
    let (x, y) = find_cosimplicial_nonedge(&sub.graph, VertexSet::new()).ok()??;
    Some(WJoinPlan { c: p.c, d: p.d, f_c, f_d, pair: (sub.to_host[x], sub.to_host[y]) })
}

/// The extension of a graph by three vertices per required vertex `z`:
/// `w` a twin of `z` plus `x`, and the path `z - y - x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gadget {
    pub graph: Graph,
    /// `(z, w, x, y)` for each required vertex.
    pub added: Vec<(usize, usize, usize, usize)>,
}

impl Gadget {
    /// Turns a strong stable set of the extension into one of the original
    /// graph containing every `z`.
    pub fn strip(&self, s: VertexSet) -> VertexSet {
        let n = self.graph.n() - 3 * self.added.len();
        let mut out = s & VertexSet::range(n);
        for &(z, w, _, _) in &self.added {
            if s.contains(w) {
                out.insert(z);
            }
        }
        out
    }
}

pub fn reduce_gadget(g: &Graph, z: VertexSet) -> Result<Gadget> {
    let mut h = g.clone();
    let mut added = Vec::new();
    for v in z {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
        let x = h.n();
        h = h.with_vertex(VertexSet::new())?;
        let w = h.n();
        h = h.with_vertex(g.closed_neighborhood(v).with(x))?;
        let y = h.n();
        h = h.with_vertex(VertexSet::singleton(v).with(x))?;
        added.push((v, w, x, y));
    }
    Ok(Gadget { graph: h, added })
}

/// Ways to grow a graph at a simplicial vertex `v0` while keeping it
/// claw-free and innocent when `v0` is safe.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SimplicialGrowth {
    /// An odd `m >= 3` closing a hole through `v0`; `v1` copies `N[v0]`.
    Hole { m: usize },
    /// A pendant path of even length `m >= 2`.
    Path { m: usize },
    /// A pendant path of even length `m >= 2` ending at the hat of a clown
    /// on an even hole of length `k >= 4`.
    PathToClown { m: usize, k: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extension {
    pub graph: Graph,
    pub v0: usize,
    /// `v1..vm`.
    pub path: Vec<usize>,
    /// `c0..ck`, hat first; empty unless a clown was attached.
    pub clown: Vec<usize>,
    pub growth: SimplicialGrowth,
}

impl Extension {
    /// A strong stable set of the extension from one of the original graph
    /// containing `v0`.
    pub fn lift(&self, s: VertexSet) -> VertexSet {
        let mut out = s;
        let last = match self.growth {
            SimplicialGrowth::Hole { m } => m - 1,
            _ => self.path.len(),
        };
        for i in (2..=last).step_by(2) {
            out.insert(self.path[i - 1]);
        }
        for i in (2..self.clown.len()).step_by(2) {
            out.insert(self.clown[i]);
        }
        out
    }
}

pub fn extend_at_simplicial(g: &Graph, v0: usize, growth: SimplicialGrowth) -> Result<Extension> {
    if v0 >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: v0, n: g.n() });
    }
    if !g.is_clique(g.neighbors(v0)) {
        return Err(Error::precondition(format!("vertex {v0} is not simplicial")));
    }
    let m = match growth {
        SimplicialGrowth::Hole { m } if m >= 3 && m % 2 == 1 => m,
        SimplicialGrowth::Path { m } | SimplicialGrowth::PathToClown { m, .. } if m >= 2 && m % 2 == 0 => m,
        _ => return Err(Error::precondition("path length has the wrong parity or is too short")),
    };
    if let SimplicialGrowth::PathToClown { k, .. } = growth {
        if k < 4 || k % 2 == 1 {
            return Err(Error::precondition("the clown needs an even hole of length at least four"));
        }
    }
    let mut h = g.clone();
    let mut path = Vec::with_capacity(m);
    for i in 1..=m {
        let nbrs = match (i, growth) {
            (1, SimplicialGrowth::Hole { .. }) => g.closed_neighborhood(v0),
            (1, _) => VertexSet::singleton(v0),
            _ => VertexSet::singleton(path[i - 2]),
        };
        path.push(h.n());
        h = h.with_vertex(nbrs)?;
    }
    if let SimplicialGrowth::Hole { .. } = growth {
        h = h.with_edges(&[(path[m - 1], v0)])?;
    }
    let mut clown = Vec::new();
    if let SimplicialGrowth::PathToClown { k, .. } = growth {
        let hat = h.n();
        h = h.with_vertex(VertexSet::singleton(path[m - 1]))?;
        clown.push(hat);
        for i in 1..=k {
            let mut nbrs = VertexSet::new();
            if i > 1 {
                nbrs.insert(clown[i - 1]);
            }
            if i <= 2 {
                nbrs.insert(hat);
            }
            clown.push(h.n());
            h = h.with_vertex(nbrs)?;
        }
        h = h.with_edges(&[(clown[k], clown[1])])?;
    }
    Ok(Extension { graph: h, v0, path, clown, growth })
}
