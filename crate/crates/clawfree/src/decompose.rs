//! Decompositions: clique cutsets, 0-joins, 1-joins and W-joins, with
//! verifiers that re-check each definition literally.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Budget, Counter, Graph, VertexSet};
use crate::recognizers::simplicial_vertices;

/// A clique `k` whose removal leaves `side_a` anticomplete to `side_b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueCutset {
    pub k: VertexSet,
    pub side_a: VertexSet,
    pub side_b: VertexSet,
}

impl CliqueCutset {
    pub fn is_internal(&self) -> bool {
        self.side_a.len() >= 2 && self.side_b.len() >= 2
    }
}

pub fn verify_clique_cutset(g: &Graph, c: &CliqueCutset) -> bool {
    let parts = [c.k, c.side_a, c.side_b];
    let disjoint = c.k.is_disjoint(c.side_a) && c.k.is_disjoint(c.side_b) && c.side_a.is_disjoint(c.side_b);
    disjoint
        && (parts[0] | parts[1] | parts[2]) == g.vertices()
        && !c.side_a.is_empty()
        && !c.side_b.is_empty()
        && g.is_clique(c.k)
        && g.is_anticomplete_to(c.side_a, c.side_b)
}

/// Splits the components left by a cutset into two sides, making both sides
/// hold at least two vertices whenever that is possible.
fn split_sides(mut comps: Vec<VertexSet>) -> (VertexSet, VertexSet) {
    comps.sort_by_key(|c| (std::cmp::Reverse(c.len()), c.first()));
    let mut a = comps[0];
    let mut i = 1;
    while a.len() < 2 && i + 1 < comps.len() {
        a = a | comps[i];
        i += 1;
    }
    let b = comps[i..].iter().fold(VertexSet::new(), |acc, &c| acc | c);
    (a, b)
}

/// Maximum cardinality search producing a minimal elimination ordering. Returns
/// the vertices in elimination order and, for each vertex, its later
/// neighbors in the minimal triangulation.
fn mcs_m(g: &Graph, within: VertexSet) -> (Vec<usize>, Vec<VertexSet>) {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut unnumbered = within;
    let mut picked = Vec::with_capacity(within.len());
    let mut madj = vec![VertexSet::new(); n];
    while let Some(first) = unnumbered.first() {
        let v = unnumbered.iter().fold(first, |best, u| if weight[u] > weight[best] { u } else { best });
        unnumbered.remove(v);
        let mut reached = Vec::new();
        for u in unnumbered {
            // u is reached if some path v..u has all inner vertices unnumbered and lighter than u.
            let inner = unnumbered.iter().filter(|&x| x != u && weight[x] < weight[u]).collect::<VertexSet>();
            let mut seen = g.neighbors(v) & inner;
            let mut frontier = seen;
            while !frontier.is_empty() {
                let next = g.neighborhood_of_set(frontier) & inner & !seen;
                seen = seen | next;
                frontier = next;
            }
            if g.adjacent(v, u) || g.neighbors(u).intersects(seen) {
                reached.push(u);
            }
        }
        for u in reached {
            weight[u] += 1;
            madj[u].insert(v);
        }
        picked.push(v);
    }
    picked.reverse();
    (picked, madj)
}

/// Every clique minimal separator of a connected vertex set, as sets.
fn clique_minimal_separators(g: &Graph, within: VertexSet) -> Vec<VertexSet> {
    let (order, madj) = mcs_m(g, within);
    let mut out: Vec<VertexSet> = Vec::new();
    for x in order {
        let s = madj[x];
        if s.is_empty() || !g.is_clique(s) || out.contains(&s) {
            continue;
        }
        if g.components_within(within - s).len() >= 2 {
            out.push(s);
        }
    }
    out
}

/// A clique cutset if one exists, preferring an internal one. A disconnected
/// graph has the empty clique as a cutset.
pub fn find_clique_cutset(g: &Graph) -> Option<CliqueCutset> {
    let comps = g.components();
    if comps.len() >= 2 {
        let (side_a, side_b) = split_sides(comps);
        return Some(CliqueCutset { k: VertexSet::new(), side_a, side_b });
    }
    let mut first = None;
    for k in clique_minimal_separators(g, g.vertices()) {
        let (side_a, side_b) = split_sides(g.components_within(g.vertices() - k));
        let c = CliqueCutset { k, side_a, side_b };
        if c.is_internal() {
            return Some(c);
        }
        first.get_or_insert(c);
    }
    first
}

/// A split into two non-empty anticomplete halves, iff the graph is disconnected.
pub fn find_zero_join(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    let comps = g.components();
    if comps.len() < 2 {
        return None;
    }
    Some((comps[0], g.vertices() - comps[0]))
}

/// A 1-join: the only edges between `v1` and `v2` are those between the
/// cliques `a1` and `a2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OneJoin {
    pub v1: VertexSet,
    pub v2: VertexSet,
    pub a1: VertexSet,
    pub a2: VertexSet,
    pub rich: bool,
}

impl OneJoin {
    pub fn b1(&self) -> VertexSet {
        self.v1 - self.a1
    }

    pub fn b2(&self) -> VertexSet {
        self.v2 - self.a2
    }

    /// The same join with the sides exchanged.
    pub fn swapped(&self) -> OneJoin {
        OneJoin { v1: self.v2, v2: self.v1, a1: self.a2, a2: self.a1, rich: self.rich }
    }
}

pub fn verify_one_join(g: &Graph, j: &OneJoin) -> bool {
    let (b1, b2) = (j.v1 - j.a1, j.v2 - j.a2);
    j.v1.is_disjoint(j.v2)
        && (j.v1 | j.v2) == g.vertices()
        && j.a1.is_subset(j.v1)
        && j.a2.is_subset(j.v2)
        && !j.a1.is_empty()
        && !j.a2.is_empty()
        && !b1.is_empty()
        && !b2.is_empty()
        && g.is_clique(j.a1 | j.a2)
        && g.is_anticomplete_to(b1, j.v2)
        && g.is_anticomplete_to(b2, j.v1)
        && j.rich == (j.v1.len() > 2 && j.v2.len() > 2)
}

/// Free classes beyond this count are not all enumerated.
const ONE_JOIN_FREE_CLASSES: usize = 12;

/// A 1-join if one exists, preferring a rich one; lowest seed edge first.
pub fn find_one_join(g: &Graph) -> Option<OneJoin> {
    let mut fallback = None;
    for (x, y) in g.edges() {
        for j in one_joins_from_seed(g, x, y) {
            if j.rich {
                return Some(j);
            }
            fallback.get_or_insert(j);
        }
    }
    fallback
}

/// All 1-joins with `x` in A1 and `y` in A2, up to the free-class cap.
fn one_joins_from_seed(g: &Graph, x: usize, y: usize) -> Vec<OneJoin> {
    let n = g.n();
    let common = g.neighbors(x) & g.neighbors(y);
    if !g.is_clique(common) {
        return Vec::new();
    }
    let x_only = g.neighbors(x) - g.closed_neighborhood(y);
    let y_only = g.neighbors(y) - g.closed_neighborhood(x);
    let rest = g.vertices() - g.closed_neighborhood(x) - g.closed_neighborhood(y);

    // Union-find over vertices; two extra tokens stand for the sides.
    let (side1, side2) = (n, n + 1);
    let mut parent: Vec<usize> = (0..n + 2).collect();
    fn find(p: &mut [usize], v: usize) -> usize {
        let mut r = v;
        while p[r] != r {
            r = p[r];
        }
        let mut c = v;
        while p[c] != r {
            let next = p[c];
            p[c] = r;
            c = next;
        }
        r
    }
    let union = |p: &mut Vec<usize>, a: usize, b: usize| {
        let (ra, rb) = (find(p, a), find(p, b));
        if ra != rb {
            p[ra.max(rb)] = ra.min(rb);
        }
    };
    union(&mut parent, x, side1);
    union(&mut parent, y, side2);
    for v in x_only {
        union(&mut parent, v, side1);
    }
    for v in y_only {
        union(&mut parent, v, side2);
    }
    // A vertex outside A has all its neighbors on its own side, except x and y themselves.
    for v in x_only | y_only | rest {
        for w in g.neighbors(v) - VertexSet::singleton(x).with(y) {
            union(&mut parent, v, w);
        }
    }
    if find(&mut parent, side1) == find(&mut parent, side2) {
        return Vec::new();
    }
    let mut classes: Vec<VertexSet> = Vec::new();
    let mut roots: Vec<usize> = Vec::new();
    let (r1, r2) = (find(&mut parent, side1), find(&mut parent, side2));
    let mut fixed1 = VertexSet::new();
    let mut fixed2 = VertexSet::new();
    for v in 0..n {
        let r = find(&mut parent, v);
        if r == r1 {
            fixed1.insert(v);
        } else if r == r2 {
            fixed2.insert(v);
        } else if let Some(i) = roots.iter().position(|&q| q == r) {
            classes[i].insert(v);
        } else {
            roots.push(r);
            classes.push(VertexSet::singleton(v));
        }
    }
    let k = classes.len().min(ONE_JOIN_FREE_CLASSES);
    let mut out = Vec::new();
    for mask in 0u32..(1 << k) {
        let mut v1 = fixed1;
        let mut v2 = fixed2;
        for (i, &c) in classes.iter().enumerate() {
            if i < k && mask & (1 << i) != 0 {
                v2 = v2 | c;
            } else {
                v1 = v1 | c;
            }
        }
        let a1 = (common & v1).with(x);
        let a2 = (common & v2).with(y);
        let j = OneJoin { v1, v2, a1, a2, rich: v1.len() > 2 && v2.len() > 2 };
        if verify_one_join(g, &j) {
            out.push(j);
        }
    }
    out
}

/// A W-join: two cliques forming a homogeneous pair, neither complete nor
/// anticomplete to each other.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WJoin {
    pub a: VertexSet,
    pub b: VertexSet,
    pub proper: bool,
    pub coherent: bool,
}

/// How the vertices outside a homogeneous pair (A, B) attach to it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairNeighborhood {
    /// Complete to A, anticomplete to B.
    pub c: VertexSet,
    /// Complete to B, anticomplete to A.
    pub d: VertexSet,
    /// Complete to both.
    pub e: VertexSet,
    /// Anticomplete to both.
    pub f: VertexSet,
}

pub fn is_homogeneous_pair(g: &Graph, a: VertexSet, b: VertexSet) -> bool {
    a.is_disjoint(b)
        && g.is_clique(a)
        && g.is_clique(b)
        && (g.vertices() - a - b).iter().all(|v| !g.is_mixed_on(v, a) && !g.is_mixed_on(v, b))
}

/// Partition of the outside of a homogeneous pair. Assumes the pair is homogeneous.
pub fn pair_neighborhood(g: &Graph, a: VertexSet, b: VertexSet) -> PairNeighborhood {
    let mut p = PairNeighborhood { c: VertexSet::new(), d: VertexSet::new(), e: VertexSet::new(), f: VertexSet::new() };
    for v in g.vertices() - a - b {
        let to_a = g.neighbors(v).intersects(a);
        let to_b = g.neighbors(v).intersects(b);
        match (to_a, to_b) {
            (true, true) => p.e.insert(v),
            (true, false) => p.c.insert(v),
            (false, true) => p.d.insert(v),
            (false, false) => p.f.insert(v),
        }
    }
    p
}

fn is_proper(g: &Graph, a: VertexSet, b: VertexSet) -> bool {
    a.iter().all(|v| g.is_mixed_on(v, b)) && b.iter().all(|v| g.is_mixed_on(v, a))
}

fn w_join_flags(g: &Graph, a: VertexSet, b: VertexSet) -> WJoin {
    let e = pair_neighborhood(g, a, b).e;
    WJoin { a, b, proper: is_proper(g, a, b), coherent: g.is_clique(e) }
}

pub fn verify_w_join(g: &Graph, w: &WJoin) -> bool {
    if w.a.is_empty() || w.b.is_empty() || !(w.a | w.b).is_subset(g.vertices()) {
        return false;
    }
    if !is_homogeneous_pair(g, w.a, w.b) {
        return false;
    }
    if g.is_complete_to(w.a, w.b) || g.is_anticomplete_to(w.a, w.b) {
        return false;
    }
    w_join_flags(g, w.a, w.b) == *w
}

/// A square s1-s2-t2-t1 inside (S, T) with `v` adjacent to s1 and not to s2.
fn witness_square(g: &Graph, v: usize, s: VertexSet, t: VertexSet) -> Option<[usize; 4]> {
    for s1 in s & g.neighbors(v) {
        for s2 in s - g.neighbors(v) - VertexSet::singleton(s1) {
            for t1 in t & g.neighbors(s1) & !g.neighbors(s2) {
                for t2 in t & g.neighbors(s2) & !g.neighbors(s1) {
                    if t1 != t2 {
                        return Some([s1, s2, t2, t1]);
                    }
                }
            }
        }
    }
    None
}

/// A vertex outside the growing pair that is mixed on one side via a square
/// but cannot be absorbed into the other side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisViolation {
    pub vertex: usize,
    /// s1, s2, t2, t1 with the vertex adjacent to s1 and not to s2.
    pub square: [usize; 4],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Growth {
    Joined(WJoin),
    Violation(HypothesisViolation),
}

/// Grows a maximal square-connected pair of cliques from the square
/// a1-b1-b2-a2: a vertex mixed on one side joins the other side, and two
/// non-adjacent vertices complete to both sides join one side each.
pub fn grow_square_connected_pair(g: &Graph, a_pair: (usize, usize), b_pair: (usize, usize), budget: &Budget) -> Result<Growth> {
    let (a1, a2) = a_pair;
    let (b1, b2) = b_pair;
    for v in [a1, a2, b1, b2] {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
    }
    let square = g.adjacent(a1, a2)
        && g.adjacent(b1, b2)
        && g.adjacent(a1, b1)
        && g.adjacent(a2, b2)
        && !g.adjacent(a1, b2)
        && !g.adjacent(a2, b1);
    if !square {
        return Err(Error::precondition("a1-b1-b2-a2 is not a square"));
    }
    let counter = budget.counter("square-connected growth");
    let mut s = VertexSet::singleton(a1).with(a2);
    let mut t = VertexSet::singleton(b1).with(b2);
    'grow: loop {
        counter.tick()?;
        for v in g.vertices() - s - t {
            for (own, other, into_s) in [(s, t, false), (t, s, true)] {
                if !g.is_mixed_on(v, own) {
                    continue;
                }
                let Some(sq) = witness_square(g, v, own, other) else {
                    return Err(Error::precondition("growing pair lost square-connectivity"));
                };
                if !g.is_complete_to(VertexSet::singleton(v), other) {
                    return Ok(Growth::Violation(HypothesisViolation { vertex: v, square: sq }));
                }
                if into_s {
                    s.insert(v);
                } else {
                    t.insert(v);
                }
                continue 'grow;
            }
        }
        let e = pair_neighborhood(g, s, t).e;
        for e1 in e {
            if let Some(e2) = (e - g.closed_neighborhood(e1)).first() {
                s.insert(e1);
                t.insert(e2);
                continue 'grow;
            }
        }
        break;
    }
    Ok(Growth::Joined(w_join_flags(g, s, t)))
}

/// Squares a1-b1-b2-a2, each once per choice of the A-side edge a1a2.
pub fn squares(g: &Graph) -> Vec<([usize; 2], [usize; 2])> {
    let mut out = Vec::new();
    for (a1, a2) in g.edges() {
        for b1 in g.neighbors(a1) - g.closed_neighborhood(a2) {
            for b2 in g.neighbors(a2) & g.neighbors(b1) & !g.neighbors(a1) {
                out.push(([a1, a2], [b1, b2]));
            }
        }
    }
    out
}

/// A proper coherent W-join if one exists. Every proper W-join contains a
/// square, so the search starts from each square and adds only vertices that
/// any proper coherent W-join extending the current pair must contain.
pub fn find_proper_coherent_w_join(g: &Graph, budget: &Budget) -> Result<Option<WJoin>> {
    budget.check_vertices(g.n(), "W-join search")?;
    let counter = budget.counter("W-join search");
    let mut seen = HashSet::new();
    for ([a1, a2], [b1, b2]) in squares(g) {
        let a = VertexSet::singleton(a1).with(a2);
        let b = VertexSet::singleton(b1).with(b2);
        if let Some(w) = extend_pair(g, a, b, &counter, &mut seen)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

fn extend_pair(
    g: &Graph,
    a: VertexSet,
    b: VertexSet,
    counter: &Counter,
    seen: &mut HashSet<(u128, u128)>,
) -> Result<Option<WJoin>> {
    if !seen.insert((a.bits(), b.bits())) {
        return Ok(None);
    }
    counter.tick()?;
    let outside = g.vertices() - a - b;
    let mut branches: Vec<(VertexSet, VertexSet)> = Vec::new();
    let add_a = |v: usize| g.is_complete_to(VertexSet::singleton(v), a).then(|| (a.with(v), b));
    let add_b = |v: usize| g.is_complete_to(VertexSet::singleton(v), b).then(|| (a, b.with(v)));
    if let Some(v) = outside.iter().find(|&v| g.is_mixed_on(v, a) || g.is_mixed_on(v, b)) {
        branches.extend(add_a(v));
        branches.extend(add_b(v));
    } else {
        let p = pair_neighborhood(g, a, b);
        let unmixed = |x: usize, other: VertexSet| -> Option<bool> {
            let nb = g.neighbors(x) & other;
            if nb == other {
                Some(true)
            } else if nb.is_empty() {
                Some(false)
            } else {
                None
            }
        };
        let bad_a = a.iter().find_map(|x| unmixed(x, b).map(|c| (x, c)));
        let bad_b = b.iter().find_map(|x| unmixed(x, a).map(|c| (x, c)));
        if let Some((_, complete)) = bad_a {
            // Needs a new B-vertex: one of D if x sees all of B, one of E otherwise.
            for y in if complete { p.d } else { p.e } {
                branches.push((a, b.with(y)));
            }
        } else if let Some((_, complete)) = bad_b {
            for y in if complete { p.c } else { p.e } {
                branches.push((a.with(y), b));
            }
        } else if let Some(e1) = p.e.iter().find(|&e1| !(p.e - g.closed_neighborhood(e1)).is_empty()) {
            let e2 = (p.e - g.closed_neighborhood(e1)).first().expect("non-neighbor exists");
            for v in [e1, e2] {
                branches.push((a.with(v), b));
                branches.push((a, b.with(v)));
            }
        } else {
            return Ok(Some(WJoin { a, b, proper: true, coherent: true }));
        }
    }
    for (na, nb) in branches {
        if let Some(w) = extend_pair(g, na, nb, counter, seen)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Lifts a clique cutset of the graph without its simplicial vertices to an
/// internal clique cutset: each simplicial vertex joins the side holding its
/// neighbors. Expects a graph without twins.
pub fn internal_clique_cutset_from_deletion(g: &Graph) -> Option<CliqueCutset> {
    let simp = simplicial_vertices(g);
    let rest = g.delete(simp);
    let c = find_clique_cutset(&rest.graph)?;
    let k = rest.host_set(c.k);
    let a1 = rest.host_set(c.side_a);
    let a2 = rest.host_set(c.side_b);
    let s1: VertexSet = simp.iter().filter(|&s| g.neighbors(s).intersects(a1)).collect();
    let lifted = CliqueCutset { k, side_a: a1 | s1, side_b: a2 | (simp - s1) };
    (verify_clique_cutset(g, &lifted) && lifted.is_internal()).then_some(lifted)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edge_list(n, edges).unwrap()
    }

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    #[test]
    fn clique_cutset_examples() {
        let bowtie = graph(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]);
        let c = find_clique_cutset(&bowtie).unwrap();
        assert_eq!(c.k, set(&[2]));
        assert!(verify_clique_cutset(&bowtie, &c));
        assert!(find_clique_cutset(&Graph::cycle(5)).is_none());
        let p5 = Graph::path(5);
        let c = find_clique_cutset(&p5).unwrap();
        assert_eq!(c.k, set(&[2]));
        assert!(c.is_internal());
    }

    #[test]
    fn zero_join_examples() {
        let two_triangles = graph(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]);
        let (a, b) = find_zero_join(&two_triangles).unwrap();
        assert_eq!((a, b), (set(&[0, 1, 2]), set(&[3, 4, 5])));
        assert!(find_zero_join(&Graph::cycle(6)).is_none());
        assert!(find_zero_join(&Graph::empty(1)).is_none());
    }

    #[test]
    fn one_join_examples() {
        let g = graph(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]);
        let j = find_one_join(&g).unwrap();
        assert!(verify_one_join(&g, &j));
        assert!(j.rich);
        let (a1, a2) = if j.a1 == set(&[2]) { (j.a1, j.a2) } else { (j.a2, j.a1) };
        assert_eq!((a1, a2), (set(&[2]), set(&[3])));
        assert!(find_one_join(&Graph::complete(4)).is_none());
        // A pendant on a triangle: the triangle's other corners see the pendant's
        // neighbor, so no split satisfies the definition.
        let pendant = graph(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]);
        assert!(find_one_join(&pendant).is_none());
        let p4 = Graph::path(4);
        let j = find_one_join(&p4).unwrap();
        assert!(!j.rich && verify_one_join(&p4, &j));
    }

    #[test]
    fn one_join_verifier_rejects_bad_input() {
        let g = graph(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]);
        let j = find_one_join(&g).unwrap();
        let mut empty_a = j.clone();
        empty_a.a1 = VertexSet::new();
        assert!(!verify_one_join(&g, &empty_a));
        let flipped = g.with_edges(&[(0, 4)]).unwrap();
        assert!(!verify_one_join(&flipped, &j));
    }

    fn square_host() -> Graph {
        // a1=0 a2=1 b1=2 b2=3; c=4 complete to {a1,a2}; d=5 complete to {b1,b2}.
        graph(6, &[(0, 1), (2, 3), (0, 2), (1, 3), (4, 0), (4, 1), (5, 2), (5, 3)])
    }

    #[test]
    fn growth_on_square_with_side_attachments() {
        let g = square_host();
        let Growth::Joined(w) = grow_square_connected_pair(&g, (0, 1), (2, 3), &Budget::default()).unwrap() else {
            panic!("expected a W-join");
        };
        assert_eq!((w.a, w.b), (set(&[0, 1]), set(&[2, 3])));
        assert!(w.proper && w.coherent && verify_w_join(&g, &w));
    }

    #[test]
    fn growth_on_bare_square() {
        let g = Graph::cycle(4);
        let Growth::Joined(w) = grow_square_connected_pair(&g, (0, 1), (3, 2), &Budget::default()).unwrap() else {
            panic!("expected a W-join");
        };
        assert_eq!((w.a, w.b), (set(&[0, 1]), set(&[2, 3])));
        assert!(verify_w_join(&g, &w));
        assert!(grow_square_connected_pair(&g, (0, 2), (1, 3), &Budget::default()).is_err());
    }

    #[test]
    fn growth_with_two_common_apexes() {
        // Square plus c, d as before, plus e=6 and e'=7 complete to the square only.
        let mut edges = vec![(0, 1), (2, 3), (0, 2), (1, 3), (4, 0), (4, 1), (5, 2), (5, 3)];
        for e in [6, 7] {
            edges.extend([(e, 0), (e, 1), (e, 2), (e, 3)]);
        }
        let g = graph(8, &edges);
        match grow_square_connected_pair(&g, (0, 1), (2, 3), &Budget::default()).unwrap() {
            Growth::Joined(w) => assert!(verify_w_join(&g, &w) && w.proper && w.coherent),
            Growth::Violation(v) => {
                let [s1, s2, t2, t1] = v.square;
                assert!(g.adjacent(v.vertex, s1) && !g.adjacent(v.vertex, s2));
                assert!(g.adjacent(s1, s2) && g.adjacent(s2, t2) && g.adjacent(t2, t1) && g.adjacent(t1, s1));
            }
        }
    }

    #[test]
    fn w_join_search_and_verifier() {
        let g = square_host();
        let w = find_proper_coherent_w_join(&g, &Budget::default()).unwrap().unwrap();
        assert!(verify_w_join(&g, &w) && w.proper && w.coherent);
        let mut bad = w.clone();
        bad.coherent = false;
        assert!(!verify_w_join(&g, &bad));
        let flipped = g.with_edges(&[(4, 2)]).unwrap();
        assert!(!verify_w_join(&flipped, &w));
        assert!(find_proper_coherent_w_join(&Graph::cycle(5), &Budget::default()).unwrap().is_none());
    }

    #[test]
    fn lifted_internal_cutsets() {
        let p5 = Graph::path(5);
        let c = internal_clique_cutset_from_deletion(&p5).unwrap();
        assert_eq!(c.k, set(&[2]));
        assert!(c.is_internal());
        assert!(internal_clique_cutset_from_deletion(&Graph::complete(4)).is_none());
        // Two triangles sharing edge 0-1, far corners 2 and 3 with pendants 4 and 5.
        let g = graph(6, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 4), (3, 5)]);
        let c = internal_clique_cutset_from_deletion(&g).unwrap();
        assert_eq!(c.k, set(&[0, 1]));
        assert!(verify_clique_cutset(&g, &c) && c.is_internal());
    }
}
