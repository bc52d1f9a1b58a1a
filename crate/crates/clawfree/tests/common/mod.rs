//! Independent brute-force oracles and random instance builders shared by the
//! integration tests. Nothing here calls the library's search code; graphs are
//! only read through adjacency queries.

#![allow(dead_code)]

use clawfree::{Graph, Multigraph, VertexSet};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn mask(v: &[usize]) -> u128 {
    v.iter().fold(0, |m, &x| m | 1 << x)
}

pub fn members(m: u128) -> Vec<usize> {
    (0..128).filter(|&i| m >> i & 1 == 1).collect()
}

fn adjacent(g: &Graph, u: usize, v: usize) -> bool {
    g.adjacent(u, v)
}

pub fn is_clique(g: &Graph, m: u128) -> bool {
    let vs = members(m);
    vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| adjacent(g, u, v)))
}

pub fn is_stable(g: &Graph, m: u128) -> bool {
    let vs = members(m);
    vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| !adjacent(g, u, v)))
}

/// Maximal cliques by scanning every vertex subset.
pub fn maximal_cliques(g: &Graph) -> Vec<u128> {
    let n = g.n();
    assert!(n <= 16, "subset scan is for small graphs");
    let cliques: Vec<u128> = (1u128..1 << n).filter(|&m| is_clique(g, m)).collect();
    cliques
        .iter()
        .copied()
        .filter(|&c| (0..n).all(|v| c >> v & 1 == 1 || !is_clique(g, c | 1 << v)))
        .collect()
}

pub fn is_strong_stable(g: &Graph, s: u128) -> bool {
    is_stable(g, s) && maximal_cliques(g).iter().all(|&c| c & s != 0)
}

/// Every strong stable set containing `z`, found by scanning all subsets.
pub fn strong_stable_sets(g: &Graph, z: u128) -> Vec<u128> {
    let n = g.n();
    let cliques = maximal_cliques(g);
    (0u128..1 << n)
        .filter(|&s| s & z == z && is_stable(g, s) && cliques.iter().all(|&c| c & s != 0))
        .collect()
}

pub fn has_strong_stable(g: &Graph, z: u128) -> bool {
    let n = g.n();
    let cliques = maximal_cliques(g);
    (0u128..1 << n).any(|s| s & z == z && is_stable(g, s) && cliques.iter().all(|&c| c & s != 0))
}

pub fn has_claw(g: &Graph) -> bool {
    let n = g.n();
    for c in 0..n {
        let nb: Vec<usize> = (0..n).filter(|&v| adjacent(g, c, v)).collect();
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                for k in j + 1..nb.len() {
                    let (x, y, z) = (nb[i], nb[j], nb[k]);
                    if !adjacent(g, x, y) && !adjacent(g, y, z) && !adjacent(g, x, z) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// A small simple graph on local ids, used to test subset shapes.
#[derive(Clone)]
struct Local {
    n: usize,
    adj: Vec<Vec<bool>>,
}

impl Local {
    fn of(g: &Graph, vs: &[usize]) -> Local {
        let n = vs.len();
        let adj = (0..n).map(|i| (0..n).map(|j| i != j && adjacent(g, vs[i], vs[j])).collect()).collect();
        Local { n, adj }
    }

    fn degree(&self, v: usize) -> usize {
        self.adj[v].iter().filter(|&&b| b).count()
    }

    fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        let had = self.adj[u][v];
        self.adj[u][v] = false;
        self.adj[v][u] = false;
        had
    }

    fn complement(&self) -> Local {
        let adj = (0..self.n).map(|i| (0..self.n).map(|j| i != j && !self.adj[i][j]).collect()).collect();
        Local { n: self.n, adj }
    }

    fn component_of(&self, v: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        let mut stack = vec![v];
        seen[v] = true;
        let mut out = Vec::new();
        while let Some(u) = stack.pop() {
            out.push(u);
            for w in 0..self.n {
                if self.adj[u][w] && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        out.sort_unstable();
        out
    }

    fn components(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut count = 0;
        for v in 0..self.n {
            if !seen[v] {
                count += 1;
                for u in self.component_of(v) {
                    seen[u] = true;
                }
            }
        }
        count
    }

    /// Cycle length if the component of `v` is a cycle.
    fn cycle_len(&self, v: usize) -> Option<usize> {
        let comp = self.component_of(v);
        (comp.len() >= 3 && comp.iter().all(|&u| self.degree(u) == 2)).then_some(comp.len())
    }

    /// Path length if the component of `s` is a path with ends `s` and `t`.
    fn path_len(&self, s: usize, t: usize) -> Option<usize> {
        let comp = self.component_of(s);
        if !comp.contains(&t) || s == t {
            return None;
        }
        let ends_ok = self.degree(s) == 1 && self.degree(t) == 1;
        let inner_ok = comp.iter().filter(|&&u| u != s && u != t).all(|&u| self.degree(u) == 2);
        (ends_ok && inner_ok).then_some(comp.len() - 1)
    }

    fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in a + 1..self.n {
                for c in b + 1..self.n {
                    if self.adj[a][b] && self.adj[b][c] && self.adj[a][c] {
                        out.push([a, b, c]);
                    }
                }
            }
        }
        out
    }
}

fn is_odd_hole(h: &Local) -> bool {
    h.n >= 5 && h.n % 2 == 1 && h.components() == 1 && h.cycle_len(0) == Some(h.n)
}

fn is_long_antihole(h: &Local) -> bool {
    let c = h.complement();
    h.n >= 6 && c.components() == 1 && c.cycle_len(0) == Some(h.n)
}

/// Two disjoint triangles matched up so that deleting the triangle edges
/// leaves three odd paths joining matched corners, and nothing else.
fn is_odd_prism(h: &Local) -> bool {
    let tri = h.triangles();
    for t1 in &tri {
        for t2 in &tri {
            if t1.iter().any(|v| t2.contains(v)) {
                continue;
            }
            for perm in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
                let mut r = h.clone();
                for (i, j) in [(0, 1), (1, 2), (0, 2)] {
                    r.remove_edge(t1[i], t1[j]);
                    r.remove_edge(t2[i], t2[j]);
                }
                let mut covered = 0;
                let ok = (0..3).all(|i| match r.path_len(t1[i], t2[perm[i]]) {
                    Some(len) if len % 2 == 1 => {
                        covered += len + 1;
                        true
                    }
                    _ => false,
                });
                if ok && covered == h.n && r.components() == 3 {
                    return true;
                }
            }
        }
    }
    false
}

fn even_cycle_through(h: &Local, v: usize) -> bool {
    h.cycle_len(v).is_some_and(|k| k >= 4 && k % 2 == 0)
}

/// An edge of each of two disjoint even cycles, the four ends forming a K4.
fn is_eye_mask(h: &Local) -> bool {
    let n = h.n;
    for x1 in 0..n {
        for y1 in x1 + 1..n {
            for x2 in 0..n {
                for y2 in x2 + 1..n {
                    let q = [x1, y1, x2, y2];
                    if x2 <= x1 || q.iter().enumerate().any(|(i, a)| q[i + 1..].contains(a)) {
                        continue;
                    }
                    if !q.iter().enumerate().all(|(i, &a)| q[i + 1..].iter().all(|&b| h.adj[a][b])) {
                        continue;
                    }
                    let mut r = h.clone();
                    for a in [x1, y1] {
                        for b in [x2, y2] {
                            r.remove_edge(a, b);
                        }
                    }
                    let c1 = r.component_of(x1);
                    let c2 = r.component_of(x2);
                    if c1.contains(&x2) || c1.len() + c2.len() != n {
                        continue;
                    }
                    if even_cycle_through(&r, x1) && even_cycle_through(&r, x2) && r.adj[x1][y1] && r.adj[x2][y2] {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Two disjoint even cycles and an odd path whose ends each make a triangle
/// with an edge of one cycle.
fn is_handcuff(h: &Local) -> bool {
    let tri = h.triangles();
    for t1 in &tri {
        for t2 in &tri {
            if t1.iter().any(|v| t2.contains(v)) {
                continue;
            }
            for i in 0..3 {
                for j in 0..3 {
                    let (p, q) = (t1[i], t2[j]);
                    let mut r = h.clone();
                    for &a in t1.iter().filter(|&&a| a != p) {
                        r.remove_edge(p, a);
                    }
                    for &b in t2.iter().filter(|&&b| b != q) {
                        r.remove_edge(q, b);
                    }
                    let x = t1[(i + 1) % 3];
                    let y = t2[(j + 1) % 3];
                    let path_ok = r.path_len(p, q).is_some_and(|len| len % 2 == 1);
                    let parts = r.component_of(p).len() + r.component_of(x).len() + r.component_of(y).len();
                    if path_ok
                        && !r.component_of(x).contains(&y)
                        && even_cycle_through(&r, x)
                        && even_cycle_through(&r, y)
                        && r.components() == 3
                        && parts == h.n
                    {
                        return true;
                    }
                }
            }
        }
    }
    false
}

pub const KIND_NAMES: [&str; 5] = ["odd-hole", "long-antihole", "odd-prism", "eye-mask", "handcuff"];

/// Which of the five kinds occur as induced subgraphs, by testing every
/// vertex subset against each definition.
pub fn forbidden_kinds(g: &Graph) -> [bool; 5] {
    let n = g.n();
    assert!(n <= 14, "subset scan is for small graphs");
    let nbrs: Vec<u128> = (0..n).map(|v| (0..n).filter(|&u| adjacent(g, u, v)).fold(0, |m, u| m | 1 << u)).collect();
    let mut found = [false; 5];
    for m in 1u128..1 << n {
        let k = m.count_ones() as usize;
        if k < 5 {
            continue;
        }
        // Degree profile in the induced subgraph: count of each degree.
        let mut profile = [0usize; 16];
        for v in members(m) {
            profile[(nbrs[v] & m).count_ones() as usize] += 1;
        }
        let only = |d: usize| profile[d] == k;
        // Holes are 2-regular, antiholes (k-3)-regular; prisms and handcuffs
        // have six vertices of degree 3, eye masks four of degree 4, and
        // everything else has degree 2.
        let hole_like = only(2);
        let anti_like = k >= 6 && only(k - 3);
        let six_cubic = profile[3] == 6 && profile[2] == k - 6;
        let four_quartic = profile[4] == 4 && profile[2] == k - 4;
        if !(hole_like || anti_like || six_cubic || four_quartic) {
            continue;
        }
        let h = Local::of(g, &members(m));
        found[0] |= !found[0] && hole_like && is_odd_hole(&h);
        found[1] |= !found[1] && anti_like && is_long_antihole(&h);
        found[2] |= !found[2] && six_cubic && k >= 6 && is_odd_prism(&h);
        found[3] |= !found[3] && four_quartic && k >= 8 && is_eye_mask(&h);
        found[4] |= !found[4] && six_cubic && k >= 10 && is_handcuff(&h);
    }
    found
}

pub fn is_innocent(g: &Graph) -> bool {
    !forbidden_kinds(g).iter().any(|&b| b)
}

/// Complement is bipartite.
pub fn is_cobipartite(g: &Graph) -> bool {
    let n = g.n();
    let mut color: Vec<Option<bool>> = vec![None; n];
    for s in 0..n {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for v in (0..n).filter(|&v| v != u && !adjacent(g, u, v)) {
                match color[v] {
                    None => {
                        color[v] = Some(!color[u].unwrap());
                        stack.push(v);
                    }
                    Some(c) if c == color[u].unwrap() => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

/// Existence of a clique whose removal disconnects the graph.
pub fn has_clique_cutset(g: &Graph) -> bool {
    let n = g.n();
    (0u128..1 << n).any(|k| is_clique(g, k) && components_outside(g, k) >= 2)
}

pub fn components_outside(g: &Graph, removed: u128) -> usize {
    let n = g.n();
    let mut seen = removed;
    let mut count = 0;
    for s in 0..n {
        if seen >> s & 1 == 1 {
            continue;
        }
        count += 1;
        seen |= 1 << s;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for v in 0..n {
                if seen >> v & 1 == 0 && adjacent(g, u, v) {
                    seen |= 1 << v;
                    stack.push(v);
                }
            }
        }
    }
    count
}

/// The line graph of `b` computed directly: vertex `e` for edge `e`.
pub fn line_graph_of(b: &Multigraph) -> Graph {
    let m = b.edge_count();
    let mut edges = Vec::new();
    for e in 0..m {
        for f in e + 1..m {
            let (a, c) = b.endpoints(e);
            let (x, y) = b.endpoints(f);
            if a == x || a == y || c == x || c == y {
                edges.push((e, f));
            }
        }
    }
    Graph::from_edge_list(m, &edges).unwrap()
}

/// Invariants of a multigraph preserved by isomorphism: sorted degrees and
/// sorted edge multiplicities with their endpoint degrees.
pub fn multigraph_invariants(b: &Multigraph) -> (usize, usize, Vec<usize>, Vec<(usize, usize, usize)>) {
    let mut degrees: Vec<usize> = (0..b.n()).map(|v| b.degree(v)).collect();
    degrees.sort_unstable();
    let mut bundles = Vec::new();
    for u in 0..b.n() {
        for v in u + 1..b.n() {
            let k = b.multiplicity(u, v);
            if k > 0 {
                let (d1, d2) = (b.degree(u).min(b.degree(v)), b.degree(u).max(b.degree(v)));
                bundles.push((k, d1, d2));
            }
        }
    }
    bundles.sort_unstable();
    (b.n(), b.edge_count(), degrees, bundles)
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

/// A connected bipartite multigraph with exactly `m` edges: a random spanning
/// tree across the sides, then random cross edges, repeats allowed.
pub fn random_bipartite_multigraph<R: Rng>(rng: &mut R, m: usize) -> Multigraph {
    assert!(m >= 1);
    let n = rng.gen_range(2..=m + 1);
    let mut side = vec![false, true];
    let mut edges = vec![(0, 1)];
    for v in 2..n {
        let u = rng.gen_range(0..v);
        side.push(!side[u]);
        edges.push((u, v));
    }
    while edges.len() < m {
        let u = rng.gen_range(0..n);
        let opposite: Vec<usize> = (0..n).filter(|&v| side[v] != side[u]).collect();
        edges.push((u, *opposite.choose(rng).unwrap()));
    }
    edges.shuffle(rng);
    Multigraph::new(n, edges).unwrap()
}

pub fn set(v: &[usize]) -> VertexSet {
    v.iter().collect()
}
