//! Local-structure recognizers: claws, simplicial objects, twins, cobipartite
//! and linear interval structure, chain orders, clowns, even pairs, safe
//! vertices and peculiar graphs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{for_each_hole, for_each_path, Budget, Counter, Graph, Path, PathMode, VertexSet};

/// An induced `K_{1,3}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClawWitness {
    pub center: usize,
    pub leaves: [usize; 3],
}

impl ClawWitness {
    pub fn verify(&self, g: &Graph) -> bool {
        let [x, y, z] = self.leaves;
        let leaves: VertexSet = self.leaves.iter().collect();
        leaves.len() == 3
            && !leaves.contains(self.center)
            && self.center < g.n()
            && leaves.iter().all(|l| l < g.n())
            && leaves.is_subset(g.neighbors(self.center))
            && !g.adjacent(x, y)
            && !g.adjacent(y, z)
            && !g.adjacent(x, z)
    }
}

/// First claw by center, then lexicographic leaves.
pub fn find_claw(g: &Graph) -> Option<ClawWitness> {
    for c in 0..g.n() {
        let nb = g.neighbors(c);
        for x in nb {
            let rest = (nb - g.closed_neighborhood(x)) & !VertexSet::range(x + 1);
            for y in rest {
                let third = (rest - g.closed_neighborhood(y)) & !VertexSet::range(y + 1);
                if let Some(z) = third.first() {
                    return Some(ClawWitness { center: c, leaves: [x, y, z] });
                }
            }
        }
    }
    None
}

pub fn is_claw_free(g: &Graph) -> bool {
    find_claw(g).is_none()
}

pub fn is_simplicial(g: &Graph, v: usize) -> bool {
    g.is_clique(g.neighbors(v))
}

pub fn simplicial_vertices(g: &Graph) -> VertexSet {
    (0..g.n()).filter(|&v| is_simplicial(g, v)).collect()
}

/// `uv` is an edge and `N(u) - v` is complete to `N(v) - u`; in particular the
/// two sets are disjoint, so `u` and `v` have no common neighbor.
pub fn is_simplicial_edge(g: &Graph, u: usize, v: usize) -> Result<bool> {
    if u >= g.n() || v >= g.n() || !g.adjacent(u, v) {
        return Err(Error::precondition(format!("{u}{v} is not an edge")));
    }
    Ok(g.is_complete_to(g.neighbors(u).without(v), g.neighbors(v).without(u)))
}

/// `uv` is a non-edge that is a simplicial edge of the complement.
pub fn is_cosimplicial_nonedge(g: &Graph, u: usize, v: usize) -> bool {
    if u == v || u >= g.n() || v >= g.n() || g.adjacent(u, v) {
        return false;
    }
    let all = g.vertices();
    let nu = all - g.closed_neighborhood(u) - VertexSet::singleton(v);
    let nv = all - g.closed_neighborhood(v) - VertexSet::singleton(u);
    nu.is_disjoint(nv) && g.is_anticomplete_to(nu, nv)
}

/// The lowest cosimplicial non-edge containing every vertex of `must_contain`.
pub fn find_cosimplicial_nonedge(g: &Graph, must_contain: VertexSet) -> Result<Option<(usize, usize)>> {
    if must_contain.len() > 2 {
        return Err(Error::precondition("a non-edge has only two ends"));
    }
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let pair = VertexSet::singleton(u).with(v);
            if must_contain.is_subset(pair) && is_cosimplicial_nonedge(g, u, v) {
                return Ok(Some((u, v)));
            }
        }
    }
    Ok(None)
}

/// The lowest adjacent pair with equal closed neighborhoods.
pub fn find_twins(g: &Graph) -> Option<(usize, usize)> {
    for u in 0..g.n() {
        for v in g.neighbors(u) {
            if v > u && g.closed_neighborhood(u) == g.closed_neighborhood(v) {
                return Some((u, v));
            }
        }
    }
    None
}

/// Two cliques covering the graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CobipartitePartition {
    pub a: VertexSet,
    pub b: VertexSet,
}

impl CobipartitePartition {
    pub fn verify(&self, g: &Graph) -> bool {
        self.a.is_disjoint(self.b) && (self.a | self.b) == g.vertices() && g.is_clique(self.a) && g.is_clique(self.b)
    }
}

/// Two-colours the complement, each component starting from its lowest vertex
/// on side `a`.
pub fn cobipartite_partition(g: &Graph) -> Option<CobipartitePartition> {
    let comp = g.complement();
    let mut a = VertexSet::new();
    let mut b = VertexSet::new();
    for c in comp.components() {
        let s = c.first().expect("non-empty");
        let mut side_a = VertexSet::singleton(s);
        let mut side_b = VertexSet::new();
        let mut frontier = side_a;
        let mut on_a = true;
        while !frontier.is_empty() {
            let mut next = VertexSet::new();
            for v in frontier {
                next = next | comp.neighbors(v);
            }
            next = next - side_a - side_b;
            on_a = !on_a;
            if on_a {
                side_a = side_a | next;
            } else {
                side_b = side_b | next;
            }
            frontier = next;
        }
        if !comp.is_stable(side_a) || !comp.is_stable(side_b) {
            return None;
        }
        a = a | side_a;
        b = b | side_b;
    }
    Some(CobipartitePartition { a, b })
}

/// A numbering `v_1..v_n` where every edge spans a clique interval.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearIntervalOrder {
    pub order: Vec<usize>,
}

impl LinearIntervalOrder {
    pub fn verify(&self, g: &Graph) -> bool {
        let o = &self.order;
        if o.len() != g.n() || o.iter().collect::<VertexSet>() != g.vertices() {
            return false;
        }
        for i in 0..o.len() {
            for j in i + 1..o.len() {
                if g.adjacent(o[i], o[j]) && !g.is_clique(o[i..=j].iter().collect()) {
                    return false;
                }
            }
        }
        true
    }
}

/// Backtracking over the next vertex. A placed vertex that already has a
/// non-neighbor after it is closed: no later vertex may be its neighbor, which
/// is exactly the clique-window condition.
pub fn linear_interval_order(g: &Graph, b: &Budget) -> Result<Option<LinearIntervalOrder>> {
    b.check_vertices(g.n(), "linear interval order search")?;
    let counter = b.counter("linear interval order search");
    let mut order = Vec::with_capacity(g.n());
    if li_extend(g, &mut order, VertexSet::new(), VertexSet::new(), &counter)? {
        Ok(Some(LinearIntervalOrder { order }))
    } else {
        Ok(None)
    }
}

fn li_extend(g: &Graph, order: &mut Vec<usize>, placed: VertexSet, closed: VertexSet, counter: &Counter) -> Result<bool> {
    counter.tick()?;
    if placed.len() == g.n() {
        return Ok(true);
    }
    let open = placed - closed;
    for v in g.vertices() - placed {
        let nv = g.neighbors(v);
        // Every placed neighbor must still be open, and together with all open
        // vertices placed after it they must see v.
        if nv.intersects(closed) {
            continue;
        }
        let placed_nbrs = nv & placed;
        let window_ok = match order.iter().position(|&w| placed_nbrs.contains(w)) {
            None => true,
            Some(i) => order[i..].iter().all(|&w| nv.contains(w)),
        };
        if !window_ok {
            continue;
        }
        // Open vertices not adjacent to v become closed.
        let new_closed = closed | (open - nv);
        // A closed vertex must not have unplaced neighbors left.
        let rest = g.vertices() - placed.with(v);
        if (open - nv).iter().any(|w| g.neighbors(w).intersects(rest)) {
            continue;
        }
        order.push(v);
        if li_extend(g, order, placed.with(v), new_closed, counter)? {
            return Ok(true);
        }
        order.pop();
    }
    Ok(false)
}

/// Orders `a` so that neighborhoods in `b` are nested increasingly, if possible.
/// Ties keep increasing vertex id.
pub fn chain_order(g: &Graph, a: VertexSet, b: VertexSet) -> Result<Option<Vec<usize>>> {
    if !a.is_disjoint(b) {
        return Err(Error::precondition("chain order needs disjoint sets"));
    }
    let mut order = a.to_vec();
    order.sort_by_key(|&v| ((g.neighbors(v) & b).len(), v));
    for w in order.windows(2) {
        if !(g.neighbors(w[0]) & b).is_subset(g.neighbors(w[1]) & b) {
            return Ok(None);
        }
    }
    Ok(Some(order))
}

/// An even hole `cycle` with a hat adjacent to exactly `cycle[0]` and `cycle[1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Clown {
    pub hat: usize,
    pub cycle: Vec<usize>,
}

impl Clown {
    pub fn set(&self) -> VertexSet {
        self.cycle.iter().collect::<VertexSet>().with(self.hat)
    }

    pub fn verify(&self, g: &Graph) -> bool {
        let cyc: VertexSet = self.cycle.iter().collect();
        crate::graph::is_hole(g, &self.cycle)
            && self.cycle.len() % 2 == 0
            && self.hat < g.n()
            && !cyc.contains(self.hat)
            && g.neighbors(self.hat) & cyc == VertexSet::singleton(self.cycle[0]).with(self.cycle[1])
    }
}

/// Every clown: each even hole with each hat, the cycle rotated so the hat's
/// neighbors come first (lower one first).
pub fn find_clowns(g: &Graph, b: &Budget) -> Result<Vec<Clown>> {
    let counter = b.counter("clown enumeration");
    let mut out = Vec::new();
    for_each_hole(g, g.vertices(), &counter, &mut |cycle| {
        if cycle.len() % 2 == 0 {
            clowns_on(g, cycle, &mut out);
        }
        Ok(true)
    })?;
    Ok(out)
}

pub(crate) fn clowns_on(g: &Graph, cycle: &[usize], out: &mut Vec<Clown>) {
    let k = cycle.len();
    let cyc: VertexSet = cycle.iter().collect();
    for h in g.vertices() - cyc {
        let att = g.neighbors(h) & cyc;
        if att.len() != 2 {
            continue;
        }
        let i = cycle.iter().position(|&c| att.contains(c)).expect("attachment on cycle");
        let (start, forward) = if att.contains(cycle[(i + 1) % k]) {
            (i, true)
        } else if i == 0 && att.contains(cycle[k - 1]) {
            (0, false)
        } else {
            continue;
        };
        let rotated: Vec<usize> = if forward {
            (0..k).map(|j| cycle[(start + j) % k]).collect()
        } else {
            (0..k).map(|j| cycle[(k + start - j) % k]).collect()
        };
        // Normalise to the lower attachment first, walking away from the higher one.
        let rotated = if rotated[0] > rotated[1] {
            let mut r = vec![rotated[1], rotated[0]];
            r.extend((2..k).rev().map(|j| rotated[j]));
            r
        } else {
            rotated
        };
        out.push(Clown { hat: h, cycle: rotated });
    }
}

/// An odd path between two vertices of `z`, if one exists.
pub fn consistency_violation(g: &Graph, z: VertexSet, mode: PathMode, b: &Budget) -> Result<Option<Path>> {
    if !z.is_subset(g.vertices()) {
        return Err(Error::VertexOutOfRange { vertex: (z - g.vertices()).first().unwrap_or(0), n: g.n() });
    }
    let counter = b.counter("even pair check");
    let zs = z.to_vec();
    for (i, &u) in zs.iter().enumerate() {
        for &v in &zs[i + 1..] {
            let mut found = None;
            for_each_path(g, u, v, g.vertices(), mode, &counter, &mut |p| {
                if p.len() % 2 == 0 {
                    found = Some(Path::new(p.to_vec()));
                    Ok(false)
                } else {
                    Ok(true)
                }
            })?;
            if found.is_some() {
                return Ok(found);
            }
        }
    }
    Ok(None)
}

/// Every pair of `z` is an even pair.
pub fn is_consistent_set(g: &Graph, z: VertexSet, mode: PathMode, b: &Budget) -> Result<bool> {
    Ok(consistency_violation(g, z, mode, b)?.is_none())
}

/// Why a vertex fails to be safe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SafetyViolation {
    NotSimplicial,
    /// An even path from the vertex to the clown's hat whose vertices other than
    /// the hat have no neighbor in the rest of the clown. Length zero when the
    /// vertex is the hat.
    EvenPathToHat { clown: Clown, path: Path },
}

pub fn safety_violation(g: &Graph, v: usize, mode: PathMode, b: &Budget) -> Result<Option<SafetyViolation>> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    if !is_simplicial(g, v) {
        return Ok(Some(SafetyViolation::NotSimplicial));
    }
    let counter = b.counter("safe vertex check");
    let mut result = None;
    for_each_hole(g, g.vertices(), &counter, &mut |cycle| {
        if cycle.len() % 2 == 1 {
            return Ok(true);
        }
        let mut clowns = Vec::new();
        clowns_on(g, cycle, &mut clowns);
        for clown in clowns {
            if let Some(path) = even_path_to_hat(g, v, &clown, mode, &counter)? {
                result = Some(SafetyViolation::EvenPathToHat { clown, path });
                return Ok(false);
            }
        }
        Ok(true)
    })?;
    Ok(result)
}

fn even_path_to_hat(g: &Graph, v: usize, clown: &Clown, mode: PathMode, counter: &Counter) -> Result<Option<Path>> {
    let h = clown.hat;
    if v == h {
        return Ok(Some(Path::new(vec![v])));
    }
    let body: VertexSet = clown.cycle.iter().collect();
    let region = g.vertices() - body - g.neighborhood_of_set(body);
    if !region.contains(v) {
        return Ok(None);
    }
    let mut found = None;
    for_each_path(g, v, h, region.without(h), mode, counter, &mut |p| {
        if p.len() % 2 == 1 {
            found = Some(Path::new(p.to_vec()));
            Ok(false)
        } else {
            Ok(true)
        }
    })?;
    Ok(found)
}

pub fn is_safe_vertex(g: &Graph, v: usize, mode: PathMode, b: &Budget) -> Result<bool> {
    Ok(safety_violation(g, v, mode, b)?.is_none())
}

/// The nine parts of a peculiar graph. Index `i` of each array is part `i + 1`;
/// the free (cobipartite) pairs are `(a[i], b[(i + 1) % 3])`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeculiarParts {
    pub a: [VertexSet; 3],
    pub b: [VertexSet; 3],
    pub k: [VertexSet; 3],
}

impl PeculiarParts {
    fn labelled(&self) -> [VertexSet; 9] {
        [self.a[0], self.a[1], self.a[2], self.b[0], self.b[1], self.b[2], self.k[0], self.k[1], self.k[2]]
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Need {
    Adjacent,
    NonAdjacent,
    Free,
}

/// Adjacency requirement between labels (0..3 = A_i, 3..6 = B_i, 6..9 = K_i).
fn need(x: usize, y: usize) -> Need {
    if x == y {
        return Need::Adjacent;
    }
    let (x, y) = (x.min(y), x.max(y));
    match (x / 3, y / 3) {
        (0, 0) | (1, 1) => Need::Adjacent,
        (0, 1) => {
            if y - 3 == (x + 1) % 3 {
                Need::Free
            } else {
                Need::Adjacent
            }
        }
        (2, 2) => Need::NonAdjacent,
        (_, 2) => {
            if x % 3 == y - 6 {
                Need::NonAdjacent
            } else {
                Need::Adjacent
            }
        }
        _ => unreachable!("labels are ordered"),
    }
}

/// Checks the peculiar definition literally; empty `K_i` are accepted.
pub fn verify_peculiar(g: &Graph, parts: &PeculiarParts) -> bool {
    let sets = parts.labelled();
    let mut union = VertexSet::new();
    for s in sets {
        if !s.is_disjoint(union) {
            return false;
        }
        union = union | s;
    }
    if union != g.vertices() {
        return false;
    }
    for i in 0..3 {
        let (a, b) = (parts.a[i], parts.b[(i + 1) % 3]);
        if a.is_empty() || b.is_empty() || g.is_complete_to(a, b) {
            return false;
        }
    }
    for x in 0..9 {
        for y in x..9 {
            let ok = match need(x, y) {
                Need::Free => true,
                Need::Adjacent if x == y => g.is_clique(sets[x]),
                Need::Adjacent => g.is_complete_to(sets[x], sets[y]),
                Need::NonAdjacent => g.is_anticomplete_to(sets[x], sets[y]),
            };
            if !ok {
                return false;
            }
        }
    }
    true
}

/// Searches for a peculiar structure by labelling vertices one at a time.
pub fn peculiar_structure(g: &Graph, b: &Budget) -> Result<Option<PeculiarParts>> {
    b.check_vertices(g.n(), "peculiar structure search")?;
    let n = g.n();
    if n < 6 || (0..n).any(|v| g.degree(v) < 4) || !g.is_connected() {
        return Ok(None);
    }
    // Visit vertices in BFS order so each new vertex meets labelled neighbors.
    let mut order = Vec::with_capacity(n);
    let mut seen = VertexSet::singleton(0);
    order.push(0);
    let mut i = 0;
    while i < order.len() {
        for w in g.neighbors(order[i]) - seen {
            seen.insert(w);
            order.push(w);
        }
        i += 1;
    }
    let counter = b.counter("peculiar structure search");
    let mut labels = vec![usize::MAX; n];
    let mut sets = [VertexSet::new(); 9];
    if peculiar_extend(g, &order, 0, &mut labels, &mut sets, &counter)? {
        Ok(Some(PeculiarParts {
            a: [sets[0], sets[1], sets[2]],
            b: [sets[3], sets[4], sets[5]],
            k: [sets[6], sets[7], sets[8]],
        }))
    } else {
        Ok(None)
    }
}

fn peculiar_extend(
    g: &Graph,
    order: &[usize],
    depth: usize,
    labels: &mut [usize],
    sets: &mut [VertexSet; 9],
    counter: &Counter,
) -> Result<bool> {
    counter.tick()?;
    if depth == order.len() {
        let parts = PeculiarParts {
            a: [sets[0], sets[1], sets[2]],
            b: [sets[3], sets[4], sets[5]],
            k: [sets[6], sets[7], sets[8]],
        };
        return Ok(verify_peculiar(g, &parts));
    }
    let v = order[depth];
    // Rotating indices is a symmetry, so the first vertex takes index 1 labels only.
    let choices: &[usize] = if depth == 0 { &[0, 3, 6] } else { &[0, 1, 2, 3, 4, 5, 6, 7, 8] };
    for &l in choices {
        let ok = (0..9).all(|m| match need(l, m) {
            Need::Free => true,
            Need::Adjacent => sets[m].is_subset(g.neighbors(v)),
            Need::NonAdjacent => sets[m].is_disjoint(g.neighbors(v)),
        });
        if !ok {
            continue;
        }
        labels[v] = l;
        sets[l].insert(v);
        if peculiar_extend(g, order, depth + 1, labels, sets, counter)? {
            return Ok(true);
        }
        sets[l].remove(v);
        labels[v] = usize::MAX;
    }
    Ok(false)
}

/// A non-empty clique whose members each have a clique of outside neighbors.
pub fn is_simplicial_clique(g: &Graph, k: VertexSet) -> Result<bool> {
    if !g.is_clique(k) || !k.is_subset(g.vertices()) {
        return Err(Error::precondition("simplicial clique test needs a clique"));
    }
    Ok(!k.is_empty() && k.iter().all(|v| g.is_clique(g.neighbors(v) - k)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edge_list(n, e).unwrap()
    }

    /// C4 on 1..=4 with hat 0 on edge 1-2, plus extra vertices appended.
    fn clown_c4(extra: &[(usize, usize)], n: usize) -> Graph {
        let mut e = vec![(1, 2), (2, 3), (3, 4), (4, 1), (0, 1), (0, 2)];
        e.extend_from_slice(extra);
        g(n, &e)
    }

    #[test]
    fn claws() {
        let star = g(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(find_claw(&star), Some(ClawWitness { center: 0, leaves: [1, 2, 3] }));
        assert!(find_claw(&Graph::cycle(6)).is_none());
        let k23 = g(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]);
        let w = find_claw(&k23).unwrap();
        assert!(w.verify(&k23));
        assert_eq!(w.center, 0);
    }

    #[test]
    fn simplicial_objects() {
        assert_eq!(simplicial_vertices(&Graph::path(4)), set(&[0, 3]));
        let c4 = Graph::cycle(4);
        assert!(is_cosimplicial_nonedge(&c4, 0, 2));
        assert_eq!(find_cosimplicial_nonedge(&c4, VertexSet::new()).unwrap(), Some((0, 2)));
        let empty4 = Graph::empty(4);
        let diamondish = g(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]);
        assert!(is_cosimplicial_nonedge(&diamondish, 2, 3));
        assert_eq!(find_cosimplicial_nonedge(&diamondish, set(&[3])).unwrap(), Some((2, 3)));
        assert!(find_cosimplicial_nonedge(&empty4, set(&[0, 1, 2])).is_err());
        assert!(is_simplicial_edge(&Graph::path(4), 0, 1).unwrap());
        assert!(!is_simplicial_edge(&Graph::path(4), 1, 2).unwrap());
        assert!(!is_simplicial_edge(&Graph::complete(3), 0, 1).unwrap());
        assert!(is_simplicial_edge(&Graph::path(4), 0, 2).is_err());
    }

    #[test]
    fn twins() {
        assert_eq!(find_twins(&Graph::complete(3)), Some((0, 1)));
        assert_eq!(find_twins(&Graph::cycle(5)), None);
    }

    #[test]
    fn cobipartite() {
        let p = cobipartite_partition(&Graph::cycle(4)).unwrap();
        assert!(p.verify(&Graph::cycle(4)));
        assert_eq!(p, CobipartitePartition { a: set(&[0, 1]), b: set(&[2, 3]) });
        assert!(cobipartite_partition(&Graph::cycle(5)).is_none());
        let k5 = Graph::complete(5);
        assert!(cobipartite_partition(&k5).unwrap().verify(&k5));
    }

    #[test]
    fn linear_interval() {
        let b = Budget::default();
        let p4 = Graph::path(4);
        assert!(linear_interval_order(&p4, &b).unwrap().unwrap().verify(&p4));
        assert!(linear_interval_order(&Graph::cycle(4), &b).unwrap().is_none());
        let k4 = Graph::complete(4);
        assert!(linear_interval_order(&k4, &b).unwrap().unwrap().verify(&k4));
        let claw = g(4, &[(0, 1), (0, 2), (0, 3)]);
        assert!(linear_interval_order(&claw, &b).unwrap().is_none());
    }

    #[test]
    fn chain_orders() {
        // a1=0, a2=1, b1=2, b2=3.
        let h = g(4, &[(0, 2), (1, 2), (1, 3)]);
        assert_eq!(chain_order(&h, set(&[0, 1]), set(&[2, 3])).unwrap(), Some(vec![0, 1]));
        let cross = g(4, &[(0, 2), (1, 3)]);
        assert_eq!(chain_order(&cross, set(&[0, 1]), set(&[2, 3])).unwrap(), None);
        assert_eq!(chain_order(&cross, set(&[0, 1]), VertexSet::new()).unwrap(), Some(vec![0, 1]));
    }

    #[test]
    fn clowns() {
        let b = Budget::default();
        let c = clown_c4(&[], 5);
        let found = find_clowns(&c, &b).unwrap();
        assert_eq!(found, vec![Clown { hat: 0, cycle: vec![1, 2, 3, 4] }]);
        assert!(found[0].verify(&c));
        let c5hat = g(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 0), (5, 1)]);
        assert!(find_clowns(&c5hat, &b).unwrap().is_empty());
        assert!(find_clowns(&Graph::cycle(6), &b).unwrap().is_empty());
    }

    #[test]
    fn consistency() {
        let b = Budget::default();
        let m = PathMode::InducedOnly;
        assert!(is_consistent_set(&Graph::path(5), set(&[0, 4]), m, &b).unwrap());
        let v = consistency_violation(&Graph::path(4), set(&[0, 3]), m, &b).unwrap();
        assert_eq!(v, Some(Path::new(vec![0, 1, 2, 3])));
        assert!(!is_consistent_set(&Graph::cycle(6), set(&[0, 3]), m, &b).unwrap());
        assert!(!is_consistent_set(&Graph::path(2), set(&[0, 1]), m, &b).unwrap());
    }

    #[test]
    fn safe_vertices() {
        let b = Budget::default();
        let m = PathMode::InducedOnly;
        // Pendant 5 on the hat.
        let one = clown_c4(&[(5, 0)], 6);
        assert!(is_safe_vertex(&one, 5, m, &b).unwrap());
        // Pendant path 6-5-hat.
        let two = clown_c4(&[(5, 0), (6, 5)], 7);
        match safety_violation(&two, 6, m, &b).unwrap() {
            Some(SafetyViolation::EvenPathToHat { path, .. }) => assert_eq!(path.vertices, vec![6, 5, 0]),
            other => panic!("unexpected {other:?}"),
        }
        assert!(is_safe_vertex(&Graph::path(4), 0, m, &b).unwrap());
        assert_eq!(safety_violation(&Graph::path(4), 1, m, &b).unwrap(), Some(SafetyViolation::NotSimplicial));
    }

    /// A1=0, A2=1, A3=2, B1=3, B2=4, B3=5 with free pairs non-adjacent.
    fn peculiar6() -> Graph {
        let mut e = Vec::new();
        for x in 0..6 {
            for y in x + 1..6 {
                if need(x, y) == Need::Adjacent {
                    e.push((x, y));
                }
            }
        }
        g(6, &e)
    }

    #[test]
    fn peculiar() {
        let b = Budget::default();
        let p = peculiar6();
        let parts = peculiar_structure(&p, &b).unwrap().unwrap();
        assert!(verify_peculiar(&p, &parts));
        assert!(peculiar_structure(&Graph::cycle(6), &b).unwrap().is_none());
        let fixed = PeculiarParts {
            a: [set(&[0]), set(&[1]), set(&[2])],
            b: [set(&[3]), set(&[4]), set(&[5])],
            k: [VertexSet::new(); 3],
        };
        assert!(verify_peculiar(&p, &fixed));
        let broken = g(6, &p.edges().into_iter().filter(|&e| e != (0, 1)).collect::<Vec<_>>());
        assert!(!verify_peculiar(&broken, &fixed));
    }

    #[test]
    fn simplicial_cliques() {
        // Triangle 0,1,2 with pendant 3 on 0: N(3) = {0} in G - 3.
        let h = g(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]);
        let del = h.delete(set(&[3]));
        assert!(is_simplicial_clique(&del.graph, del.local_set(set(&[0]))).unwrap());
        assert!(!is_simplicial_clique(&Graph::cycle(4), set(&[0])).unwrap());
        assert!(is_simplicial_clique(&Graph::complete(4), set(&[0, 1, 2, 3])).unwrap());
        assert!(is_simplicial_clique(&Graph::cycle(4), set(&[0, 2])).is_err());
    }
}
