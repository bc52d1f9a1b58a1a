//! Detectors for the five structures whose absence makes a graph innocent:
//! odd holes, antiholes of length at least six, odd prisms, eye masks and
//! handcuffs. Every witness can be re-verified from scratch.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{
    for_each_hole, for_each_hole_through_edge, for_each_induced_path_from, for_each_path, Budget, Counter,
    Graph, PathMode, VertexSet,
};
use crate::recognizers::{clowns_on, Clown};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ForbiddenKind {
    OddHole,
    LongAntihole,
    OddPrism,
    EyeMask,
    Handcuff,
}

impl ForbiddenKind {
    /// The order in which the innocence certificate looks for witnesses.
    pub const ALL: [ForbiddenKind; 5] = [
        ForbiddenKind::OddHole,
        ForbiddenKind::LongAntihole,
        ForbiddenKind::OddPrism,
        ForbiddenKind::EyeMask,
        ForbiddenKind::Handcuff,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ForbiddenKind::OddHole => "odd-hole",
            ForbiddenKind::LongAntihole => "long-antihole",
            ForbiddenKind::OddPrism => "odd-prism",
            ForbiddenKind::EyeMask => "eye-mask",
            ForbiddenKind::Handcuff => "handcuff",
        }
    }

    pub fn parse(s: &str) -> Option<ForbiddenKind> {
        ForbiddenKind::ALL.into_iter().find(|k| k.name() == s)
    }
}

impl fmt::Display for ForbiddenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Role labels of a witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "kebab-case")]
pub enum Anatomy {
    /// Vertices in cyclic order.
    Hole { cycle: Vec<usize> },
    /// Vertices in the cyclic order of the complement.
    Antihole { cycle: Vec<usize> },
    /// `paths[i]` runs from `a_i` to `b_i`; the `a_i` and the `b_i` form triangles.
    Prism { paths: [Vec<usize>; 3] },
    /// `cycle1[0..2]` is complete to `cycle2[0..2]`.
    EyeMask { cycle1: Vec<usize>, cycle2: Vec<usize> },
    /// `path[0]` forms a triangle with `cycle1[0..2]` and the last path vertex
    /// with `cycle2[0..2]`.
    Handcuff { cycle1: Vec<usize>, cycle2: Vec<usize>, path: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForbiddenWitness {
    pub kind: ForbiddenKind,
    pub vertices: Vec<usize>,
    pub anatomy: Anatomy,
}

impl ForbiddenWitness {
    fn new(kind: ForbiddenKind, anatomy: Anatomy) -> Self {
        let vertices = match &anatomy {
            Anatomy::Hole { cycle } | Anatomy::Antihole { cycle } => cycle.clone(),
            Anatomy::Prism { paths } => paths.concat(),
            Anatomy::EyeMask { cycle1, cycle2 } => [cycle1.as_slice(), cycle2].concat(),
            Anatomy::Handcuff { cycle1, cycle2, path } => [cycle1.as_slice(), cycle2, path].concat(),
        };
        let mut vertices = vertices;
        vertices.sort_unstable();
        ForbiddenWitness { kind, vertices, anatomy }
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().collect()
    }
}

/// Outcome of the innocence check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Innocence {
    Innocent,
    Guilty(ForbiddenWitness),
}

fn cycle_edges(c: &[usize], out: &mut BTreeSet<(usize, usize)>) {
    for i in 0..c.len() {
        add_edge(out, c[i], c[(i + 1) % c.len()]);
    }
}

fn path_edges(p: &[usize], out: &mut BTreeSet<(usize, usize)>) {
    for w in p.windows(2) {
        add_edge(out, w[0], w[1]);
    }
}

fn add_edge(out: &mut BTreeSet<(usize, usize)>, u: usize, v: usize) {
    out.insert((u.min(v), u.max(v)));
}

/// Re-checks the witness against the definition of its kind: the labelled
/// vertices must be distinct and induce exactly the prescribed edges, with the
/// prescribed parities and minimum sizes.
pub fn verify_witness(g: &Graph, w: &ForbiddenWitness) -> bool {
    let mut expected = BTreeSet::new();
    let shape_ok = match (&w.kind, &w.anatomy) {
        (ForbiddenKind::OddHole, Anatomy::Hole { cycle }) => {
            cycle_edges(cycle, &mut expected);
            cycle.len() >= 5 && cycle.len() % 2 == 1
        }
        (ForbiddenKind::LongAntihole, Anatomy::Antihole { cycle }) => {
            let k = cycle.len();
            for i in 0..k {
                for j in i + 1..k {
                    if j != i + 1 && !(i == 0 && j == k - 1) {
                        add_edge(&mut expected, cycle[i], cycle[j]);
                    }
                }
            }
            k >= 6
        }
        (ForbiddenKind::OddPrism, Anatomy::Prism { paths }) => {
            for p in paths {
                path_edges(p, &mut expected);
            }
            for (i, j) in [(0, 1), (1, 2), (0, 2)] {
                add_edge(&mut expected, paths[i][0], paths[j][0]);
                add_edge(&mut expected, *paths[i].last().unwrap_or(&0), *paths[j].last().unwrap_or(&0));
            }
            paths.iter().all(|p| p.len() >= 2 && p.len() % 2 == 0)
        }
        (ForbiddenKind::EyeMask, Anatomy::EyeMask { cycle1, cycle2 }) => {
            cycle_edges(cycle1, &mut expected);
            cycle_edges(cycle2, &mut expected);
            let ok = [cycle1, cycle2].iter().all(|c| c.len() >= 4 && c.len() % 2 == 0);
            if ok {
                for &x in &cycle1[..2] {
                    for &y in &cycle2[..2] {
                        add_edge(&mut expected, x, y);
                    }
                }
            }
            ok
        }
        (ForbiddenKind::Handcuff, Anatomy::Handcuff { cycle1, cycle2, path }) => {
            cycle_edges(cycle1, &mut expected);
            cycle_edges(cycle2, &mut expected);
            path_edges(path, &mut expected);
            let ok = [cycle1, cycle2].iter().all(|c| c.len() >= 4 && c.len() % 2 == 0)
                && path.len() >= 2
                && path.len() % 2 == 0;
            if ok {
                let (s, t) = (path[0], path[path.len() - 1]);
                for &x in &cycle1[..2] {
                    add_edge(&mut expected, s, x);
                }
                for &y in &cycle2[..2] {
                    add_edge(&mut expected, t, y);
                }
            }
            ok
        }
        _ => false,
    };
    if !shape_ok {
        return false;
    }
    let vs = &w.vertices;
    let set: VertexSet = vs.iter().filter(|&&v| v < g.n()).collect();
    if set.len() != vs.len() || vs.windows(2).any(|p| p[0] >= p[1]) {
        return false;
    }
    // The anatomy must list exactly the witness vertices, each once.
    let mut listed = anatomy_vertices(&w.anatomy);
    listed.sort_unstable();
    if listed != *vs || expected.iter().any(|&(u, v)| u == v) {
        return false;
    }
    let actual: BTreeSet<(usize, usize)> =
        g.edges().into_iter().filter(|&(u, v)| set.contains(u) && set.contains(v)).collect();
    actual == expected
}

fn anatomy_vertices(a: &Anatomy) -> Vec<usize> {
    match a {
        Anatomy::Hole { cycle } | Anatomy::Antihole { cycle } => cycle.clone(),
        Anatomy::Prism { paths } => paths.concat(),
        Anatomy::EyeMask { cycle1, cycle2 } => [cycle1.as_slice(), cycle2].concat(),
        Anatomy::Handcuff { cycle1, cycle2, path } => [cycle1.as_slice(), cycle2, path].concat(),
    }
}

/// A witness of the given kind, if `g` contains one as an induced subgraph.
pub fn find_structure(g: &Graph, kind: ForbiddenKind, b: &Budget) -> Result<Option<ForbiddenWitness>> {
    b.check_vertices(g.n(), "forbidden structure search")?;
    let counter = b.counter("forbidden structure search");
    let anatomy = match kind {
        ForbiddenKind::OddHole => find_odd_hole(g, &counter)?.map(|cycle| Anatomy::Hole { cycle }),
        ForbiddenKind::LongAntihole => {
            find_long_antihole(g, &counter)?.map(|cycle| Anatomy::Antihole { cycle })
        }
        ForbiddenKind::OddPrism => find_odd_prism(g, &counter)?.map(|paths| Anatomy::Prism { paths }),
        ForbiddenKind::EyeMask => find_eye_mask(g, &counter)?,
        ForbiddenKind::Handcuff => find_handcuff(g, &counter)?,
    };
    Ok(anatomy.map(|a| ForbiddenWitness::new(kind, a)))
}

/// `Innocent`, or the first witness in the order of [`ForbiddenKind::ALL`].
pub fn innocence_certificate(g: &Graph, b: &Budget) -> Result<Innocence> {
    for kind in ForbiddenKind::ALL {
        if let Some(w) = find_structure(g, kind, b)? {
            return Ok(Innocence::Guilty(w));
        }
    }
    Ok(Innocence::Innocent)
}

pub fn is_innocent(g: &Graph, b: &Budget) -> Result<bool> {
    Ok(innocence_certificate(g, b)? == Innocence::Innocent)
}

fn first_hole(g: &Graph, counter: &Counter, keep: impl Fn(&[usize]) -> bool) -> Result<Option<Vec<usize>>> {
    let mut found = None;
    for_each_hole(g, g.vertices(), counter, &mut |c| {
        if keep(c) {
            found = Some(c.to_vec());
            Ok(false)
        } else {
            Ok(true)
        }
    })?;
    Ok(found)
}

fn find_odd_hole(g: &Graph, counter: &Counter) -> Result<Option<Vec<usize>>> {
    first_hole(g, counter, |c| c.len() % 2 == 1)
}

fn find_long_antihole(g: &Graph, counter: &Counter) -> Result<Option<Vec<usize>>> {
    first_hole(&g.complement(), counter, |c| c.len() >= 6)
}

/// All induced paths from `x` to `y` in `allowed` with an even vertex count,
/// i.e. odd length. A single edge when `x` and `y` are adjacent.
fn odd_paths(
    g: &Graph,
    x: usize,
    y: usize,
    allowed: VertexSet,
    counter: &Counter,
    f: &mut dyn FnMut(&[usize]) -> Result<bool>,
) -> Result<bool> {
    for_each_path(g, x, y, allowed, PathMode::InducedOnly, counter, &mut |p| {
        if p.len() % 2 == 1 {
            return Ok(true);
        }
        f(p)
    })
}

fn triangles(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 0..g.n() {
        for b in g.neighbors(a) {
            if b <= a {
                continue;
            }
            for c in g.neighbors(a) & g.neighbors(b) {
                if c > b {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

fn find_odd_prism(g: &Graph, counter: &Counter) -> Result<Option<[Vec<usize>; 3]>> {
    let tris = triangles(g);
    for ta in &tris {
        let ta_set: VertexSet = ta.iter().collect();
        for tb in &tris {
            let tb_set: VertexSet = tb.iter().collect();
            if tb <= ta || !ta_set.is_disjoint(tb_set) {
                continue;
            }
            for perm in PERMS {
                let bs = [tb[perm[0]], tb[perm[1]], tb[perm[2]]];
                // a_i may only see b_i among the other triangle.
                let ok = (0..3).all(|i| (g.neighbors(ta[i]) & tb_set).is_subset(VertexSet::singleton(bs[i])));
                if !ok {
                    continue;
                }
                counter.tick()?;
                if let Some(paths) = prism_paths(g, *ta, bs, counter)? {
                    return Ok(Some(paths));
                }
            }
        }
    }
    Ok(None)
}

const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

fn prism_paths(g: &Graph, a: [usize; 3], b: [usize; 3], counter: &Counter) -> Result<Option<[Vec<usize>; 3]>> {
    let corners: VertexSet = a.iter().chain(b.iter()).collect();
    let outside = g.vertices() - corners;
    // Interior vertices of P_i avoid the other four corners.
    let region = |i: usize| {
        let others: VertexSet = (0..3).filter(|&j| j != i).flat_map(|j| [a[j], b[j]]).collect();
        outside - g.neighborhood_of_set(others)
    };
    let mut found = None;
    odd_paths(g, a[0], b[0], region(0), counter, &mut |p1| {
        let int1: VertexSet = p1[1..p1.len() - 1].iter().collect();
        let block1 = int1 | g.neighborhood_of_set(int1);
        let mut inner = None;
        let go = odd_paths(g, a[1], b[1], region(1) - block1, counter, &mut |p2| {
            let int2: VertexSet = p2[1..p2.len() - 1].iter().collect();
            let block2 = int2 | g.neighborhood_of_set(int2);
            let mut third = None;
            odd_paths(g, a[2], b[2], region(2) - block1 - block2, counter, &mut |p3| {
                third = Some(p3.to_vec());
                Ok(false)
            })?;
            if let Some(p3) = third {
                inner = Some([p1.to_vec(), p2.to_vec(), p3]);
                return Ok(false);
            }
            Ok(true)
        })?;
        if !go {
            found = inner;
            return Ok(false);
        }
        Ok(true)
    })?;
    Ok(found)
}

fn find_eye_mask(g: &Graph, counter: &Counter) -> Result<Option<Anatomy>> {
    for ta in triangles(g) {
        let [p, q, r] = ta;
        for s in g.neighbors(p) & g.neighbors(q) & g.neighbors(r) {
            if s <= r {
                continue;
            }
            let k4 = [p, q, r, s];
            for (x1, y1, x2, y2) in [(0, 1, 2, 3), (0, 2, 1, 3), (0, 3, 1, 2)] {
                counter.tick()?;
                if let Some(a) = eye_mask_on(g, [k4[x1], k4[y1]], [k4[x2], k4[y2]], counter)? {
                    return Ok(Some(a));
                }
            }
        }
    }
    Ok(None)
}

fn eye_mask_on(g: &Graph, e1: [usize; 2], e2: [usize; 2], counter: &Counter) -> Result<Option<Anatomy>> {
    let k4: VertexSet = e1.iter().chain(e2.iter()).collect();
    let nb2 = g.neighborhood_of_set(VertexSet::singleton(e2[0]).with(e2[1]));
    let region1 = g.vertices() - k4 - nb2;
    let mut found = None;
    for_each_hole_through_edge(g, e1[0], e1[1], region1, counter, &mut |c1| {
        if c1.len() % 2 == 1 {
            return Ok(true);
        }
        let body1: VertexSet = c1[2..].iter().collect();
        let region2 = g.vertices() - k4 - body1 - g.neighborhood_of_set(body1 | VertexSet::singleton(e1[0]).with(e1[1]));
        let mut inner = None;
        for_each_hole_through_edge(g, e2[0], e2[1], region2, counter, &mut |c2| {
            if c2.len() % 2 == 0 {
                inner = Some(c2.to_vec());
                Ok(false)
            } else {
                Ok(true)
            }
        })?;
        if let Some(c2) = inner {
            found = Some(Anatomy::EyeMask { cycle1: c1.to_vec(), cycle2: c2 });
            Ok(false)
        } else {
            Ok(true)
        }
    })?;
    Ok(found)
}

fn find_handcuff(g: &Graph, counter: &Counter) -> Result<Option<Anatomy>> {
    let mut clowns = Vec::new();
    for_each_hole(g, g.vertices(), counter, &mut |c| {
        if c.len() % 2 == 0 {
            clowns_on(g, c, &mut clowns);
        }
        Ok(true)
    })?;
    for clown in clowns {
        counter.tick()?;
        if let Some(a) = handcuff_from_clown(g, &clown, counter)? {
            return Ok(Some(a));
        }
    }
    Ok(None)
}

fn handcuff_from_clown(g: &Graph, clown: &Clown, counter: &Counter) -> Result<Option<Anatomy>> {
    let body1: VertexSet = clown.cycle.iter().collect();
    let far1 = g.vertices() - body1 - g.neighborhood_of_set(body1);
    let mut found = None;
    for_each_induced_path_from(g, clown.hat, far1, counter, &mut |path| {
        if path.len() % 2 == 1 {
            return Ok(true);
        }
        let t = *path.last().expect("non-empty");
        let before: VertexSet = path[..path.len() - 1].iter().collect();
        let region = far1 - VertexSet::singleton(t) - before - g.neighborhood_of_set(before);
        // The triangle at t: an edge xy of the second cycle inside N(t).
        let nt = g.neighbors(t) & region;
        for x in nt {
            for y in g.neighbors(x) & nt {
                if y <= x {
                    continue;
                }
                let cyc_region = (region - g.neighbors(t)) | VertexSet::singleton(x).with(y);
                let mut c2 = None;
                for_each_hole_through_edge(g, x, y, cyc_region, counter, &mut |c| {
                    if c.len() % 2 == 0 {
                        c2 = Some(c.to_vec());
                        Ok(false)
                    } else {
                        Ok(true)
                    }
                })?;
                if let Some(cycle2) = c2 {
                    found = Some(Anatomy::Handcuff { cycle1: clown.cycle.clone(), cycle2, path: path.to_vec() });
                    return Ok(false);
                }
            }
        }
        Ok(true)
    })?;
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{line_graph, Multigraph};

    fn b() -> Budget {
        Budget::default()
    }

    /// Two C4s (0..4 and 4..8 in the root) joined by a path of `len` edges.
    fn bicycle_root(len: usize) -> Multigraph {
        let mut e = vec![(0, 1), (1, 2), (2, 3), (3, 0)];
        let mut prev = 0;
        let mut next = 4;
        for _ in 0..len {
            e.push((prev, next));
            prev = next;
            next += 1;
        }
        let base = if len == 0 { 0 } else { prev };
        let c2 = if len == 0 { [0, next, next + 1, next + 2] } else { [base, next, next + 1, next + 2] };
        e.extend([(c2[0], c2[1]), (c2[1], c2[2]), (c2[2], c2[3]), (c2[3], c2[0])]);
        Multigraph::new(next + 3, e).unwrap()
    }

    #[test]
    fn odd_hole_on_c5() {
        let w = find_structure(&Graph::cycle(5), ForbiddenKind::OddHole, &b()).unwrap().unwrap();
        assert_eq!(w.vertices, vec![0, 1, 2, 3, 4]);
        assert!(verify_witness(&Graph::cycle(5), &w));
    }

    #[test]
    fn prism_on_line_graph_of_k23() {
        let k23 = Multigraph::new(5, vec![(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        let (l, _) = line_graph(&k23).unwrap();
        let w = find_structure(&l, ForbiddenKind::OddPrism, &b()).unwrap().unwrap();
        assert_eq!(w.vertices.len(), 6);
        match &w.anatomy {
            Anatomy::Prism { paths } => assert!(paths.iter().all(|p| p.len() == 2)),
            other => panic!("{other:?}"),
        }
        assert!(verify_witness(&l, &w));
    }

    #[test]
    fn handcuff_and_eye_mask_from_bicycles() {
        let (h, _) = line_graph(&bicycle_root(2)).unwrap();
        assert_eq!(h.n(), 10);
        let w = find_structure(&h, ForbiddenKind::Handcuff, &b()).unwrap().unwrap();
        assert_eq!(w.vertices.len(), 10);
        assert!(verify_witness(&h, &w));
        let (e, _) = line_graph(&bicycle_root(0)).unwrap();
        assert_eq!(e.n(), 8);
        assert_eq!(innocence_certificate(&e, &b()).unwrap(), Innocence::Guilty(
            find_structure(&e, ForbiddenKind::EyeMask, &b()).unwrap().unwrap()
        ));
    }

    #[test]
    fn certificate_examples() {
        assert_eq!(innocence_certificate(&Graph::cycle(6), &b()).unwrap(), Innocence::Innocent);
        match innocence_certificate(&Graph::cycle(7).complement(), &b()).unwrap() {
            Innocence::Guilty(w) => assert_eq!(w.kind, ForbiddenKind::LongAntihole),
            other => panic!("{other:?}"),
        }
        match innocence_certificate(&Graph::cycle(5).complement(), &b()).unwrap() {
            Innocence::Guilty(w) => assert_eq!(w.kind, ForbiddenKind::OddHole),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn verify_rejects_tampering() {
        let c5 = Graph::cycle(5);
        let w = find_structure(&c5, ForbiddenKind::OddHole, &b()).unwrap().unwrap();
        let chorded = c5.with_edges(&[(0, 2)]).unwrap();
        assert!(!verify_witness(&chorded, &w));
        let (h, _) = line_graph(&bicycle_root(2)).unwrap();
        let mut w = find_structure(&h, ForbiddenKind::Handcuff, &b()).unwrap().unwrap();
        if let Anatomy::Handcuff { path, .. } = &mut w.anatomy {
            path.pop();
        }
        assert!(!verify_witness(&h, &w));
    }
}
