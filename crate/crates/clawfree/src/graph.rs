//! Immutable graphs, vertex sets, paths, multigraphs and the exhaustive
//! primitives (maximal cliques, induced paths) the other modules build on.

use std::cell::Cell;
use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Not, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest vertex count a [`Graph`] can hold. Vertex sets are single `u128` words.
pub const MAX_VERTICES: usize = 128;

/// A set of vertex ids below [`MAX_VERTICES`], stored as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn new() -> Self {
        VertexSet(0)
    }

    pub fn from_bits(bits: u128) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u128 << v)
    }

    /// The set `{0, .., n-1}`.
    pub fn range(n: usize) -> Self {
        if n >= 128 {
            VertexSet(u128::MAX)
        } else {
            VertexSet((1u128 << n) - 1)
        }
    }

    pub fn contains(self, v: usize) -> bool {
        v < 128 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u128 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u128 << v);
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u128 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u128 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Lowest member.
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Highest member.
    pub fn last(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(127 - self.0.leading_zeros() as usize)
        }
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

pub struct VertexIter(u128);

impl Iterator for VertexIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<'a> FromIterator<&'a usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = &'a usize>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl BitXor for VertexSet {
    type Output = VertexSet;
    fn bitxor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 ^ rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    fn not(self) -> VertexSet {
        VertexSet(!self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

// Serialized as the sorted list of members.
impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let members = Vec::<usize>::deserialize(d)?;
        if let Some(&v) = members.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!("vertex {v} is out of range")));
        }
        Ok(members.into_iter().collect())
    }
}

/// Caps on exhaustive work.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_vertices: usize,
    pub max_enumerations: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_vertices: 24, max_enumerations: 1_000_000 }
    }
}

impl Budget {
    /// Default budget for the brute-force oracle, which is exponential in the vertex count.
    pub fn brute_force() -> Self {
        Budget { max_vertices: 16, max_enumerations: 1_000_000 }
    }

    pub fn new(max_vertices: usize, max_enumerations: u64) -> Result<Self> {
        if max_vertices == 0 || max_enumerations == 0 {
            return Err(Error::precondition("budget caps must be positive"));
        }
        Ok(Budget { max_vertices, max_enumerations })
    }

    /// Fails when `n` exceeds the vertex cap.
    pub fn check_vertices(&self, n: usize, what: &'static str) -> Result<()> {
        if n > self.max_vertices {
            Err(Error::VertexBudget { what, n, cap: self.max_vertices })
        } else {
            Ok(())
        }
    }

    pub fn counter(&self, what: &'static str) -> Counter {
        Counter { used: Cell::new(0), cap: self.max_enumerations, what }
    }
}

/// Counts enumeration steps against a budget.
/// Shared by reference between nested enumerations, hence the interior cell.
#[derive(Debug)]
pub struct Counter {
    used: Cell<u64>,
    cap: u64,
    what: &'static str,
}

impl Counter {
    pub fn tick(&self) -> Result<()> {
        let used = self.used.get() + 1;
        self.used.set(used);
        if used > self.cap {
            Err(Error::EnumerationBudget { what: self.what, cap: self.cap })
        } else {
            Ok(())
        }
    }

    pub fn used(&self) -> u64 {
        self.used.get()
    }
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

/// An induced subgraph together with the map back to host ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Graph,
    /// `to_host[i]` is the host id of local vertex `i`.
    pub to_host: Vec<usize>,
}

impl Subgraph {
    pub fn host_set(&self, local: VertexSet) -> VertexSet {
        local.iter().map(|v| self.to_host[v]).collect()
    }

    /// Local ids of the host vertices in `host` that survive in the subgraph.
    pub fn local_set(&self, host: VertexSet) -> VertexSet {
        (0..self.to_host.len()).filter(|&i| host.contains(self.to_host[i])).collect()
    }

    pub fn local(&self, host_vertex: usize) -> Option<usize> {
        self.to_host.iter().position(|&h| h == host_vertex)
    }
}

impl Graph {
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { n, max: MAX_VERTICES });
        }
        let mut adj = vec![VertexSet::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { adj })
    }

    /// Builds a graph from neighbor sets, checking symmetry and loops.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Graph> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { n, max: MAX_VERTICES });
        }
        let all = VertexSet::range(n);
        for (v, &nb) in adj.iter().enumerate() {
            if nb.contains(v) {
                return Err(Error::SelfLoop(v));
            }
            if let Some(w) = (nb - all).first() {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
            for w in nb {
                if !adj[w].contains(v) {
                    return Err(Error::precondition(format!("adjacency not symmetric at {v}-{w}")));
                }
            }
        }
        Ok(Graph { adj })
    }

    pub fn empty(n: usize) -> Graph {
        assert!(n <= MAX_VERTICES);
        Graph { adj: vec![VertexSet::new(); n] }
    }

    pub fn complete(n: usize) -> Graph {
        assert!(n <= MAX_VERTICES);
        let all = VertexSet::range(n);
        Graph { adj: (0..n).map(|v| all.without(v)).collect() }
    }

    /// The cycle `0-1-..-(n-1)-0`; needs `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).expect("cycle fits")
    }

    /// The path `0-1-..-(n-1)`.
    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &edges).expect("path fits")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::range(self.n())
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    /// Vertices outside `x` with a neighbor in `x`.
    pub fn neighborhood_of_set(&self, x: VertexSet) -> VertexSet {
        let mut out = VertexSet::new();
        for v in x {
            out = out | self.adj[v];
        }
        out - x
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            for v in self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        Graph { adj: (0..self.n()).map(|v| all - self.adj[v].with(v)).collect() }
    }

    /// The subgraph induced by `x`, local ids in increasing host order.
    pub fn induced(&self, x: VertexSet) -> Subgraph {
        let to_host: Vec<usize> = (x & self.vertices()).to_vec();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &h) in to_host.iter().enumerate() {
            index[h] = i;
        }
        let adj = to_host
            .iter()
            .map(|&h| (self.adj[h] & x).iter().map(|w| index[w]).collect())
            .collect();
        Subgraph { graph: Graph { adj }, to_host }
    }

    /// The subgraph after deleting `x`.
    pub fn delete(&self, x: VertexSet) -> Subgraph {
        self.induced(self.vertices() - x)
    }

    /// A copy of the graph with one new vertex `n` adjacent to `nbrs`.
    pub fn with_vertex(&self, nbrs: VertexSet) -> Result<Graph> {
        let n = self.n();
        if n + 1 > MAX_VERTICES {
            return Err(Error::TooLarge { n: n + 1, max: MAX_VERTICES });
        }
        if let Some(w) = (nbrs - self.vertices()).first() {
            return Err(Error::VertexOutOfRange { vertex: w, n });
        }
        let mut adj = self.adj.clone();
        for w in nbrs {
            adj[w].insert(n);
        }
        adj.push(nbrs);
        Ok(Graph { adj })
    }

    /// A copy with extra edges between existing vertices.
    pub fn with_edges(&self, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut all = self.edges();
        all.extend_from_slice(edges);
        Graph::from_edge_list(self.n(), &all)
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![VertexSet::new(); self.n()];
        for v in 0..self.n() {
            adj[perm[v]] = self.adj[v].iter().map(|w| perm[w]).collect();
        }
        Graph { adj }
    }

    pub fn is_clique(&self, x: VertexSet) -> bool {
        x.iter().all(|v| (x - self.adj[v]).without(v).is_empty())
    }

    pub fn is_stable(&self, x: VertexSet) -> bool {
        x.iter().all(|v| self.adj[v].is_disjoint(x))
    }

    /// `x` and `y` are disjoint and every vertex of `x` sees every vertex of `y`.
    pub fn is_complete_to(&self, x: VertexSet, y: VertexSet) -> bool {
        x.is_disjoint(y) && x.iter().all(|v| y.is_subset(self.adj[v]))
    }

    /// `x` and `y` are disjoint and no edge joins them.
    pub fn is_anticomplete_to(&self, x: VertexSet, y: VertexSet) -> bool {
        x.is_disjoint(y) && x.iter().all(|v| self.adj[v].is_disjoint(y))
    }

    /// `v` lies outside `x` and is neither complete nor anticomplete to it.
    pub fn is_mixed_on(&self, v: usize, x: VertexSet) -> bool {
        !x.contains(v) && self.adj[v].intersects(x) && !x.is_subset(self.adj[v])
    }

    /// Connected components of `G|x`, ordered by lowest member.
    pub fn components_within(&self, x: VertexSet) -> Vec<VertexSet> {
        let mut rest = x;
        let mut out = Vec::new();
        while let Some(s) = rest.first() {
            let mut comp = VertexSet::singleton(s);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::new();
                for v in frontier {
                    next = next | self.adj[v];
                }
                frontier = (next & x) - comp;
                comp = comp | frontier;
            }
            rest = rest - comp;
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Maximal anticonnected subsets of `s`.
    pub fn anticomponents(&self, s: VertexSet) -> Vec<VertexSet> {
        self.complement().components_within(s)
    }

    /// A vertex set is a (not necessarily induced) subgraph edge list check helper.
    pub fn has_edge(&self, e: (usize, usize)) -> bool {
        e.0 < self.n() && e.1 < self.n() && self.adjacent(e.0, e.1)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

/// Every inclusion-maximal clique, by Bron-Kerbosch with pivoting over a
/// degeneracy ordering. Cliques are sorted by their member lists.
pub fn maximal_cliques(g: &Graph, b: &Budget) -> Result<Vec<VertexSet>> {
    b.check_vertices(g.n(), "maximal clique enumeration")?;
    let counter = b.counter("maximal clique enumeration");
    let mut out = Vec::new();
    if g.n() == 0 {
        return Ok(out);
    }
    let order = degeneracy_order(g);
    let mut p = g.vertices();
    let mut x = VertexSet::new();
    for v in order {
        let nv = g.neighbors(v);
        bron_kerbosch(g, VertexSet::singleton(v), p & nv, x & nv, &mut out, &counter)?;
        p.remove(v);
        x.insert(v);
    }
    out.sort_by_key(|c| c.to_vec());
    Ok(out)
}

fn bron_kerbosch(
    g: &Graph,
    r: VertexSet,
    mut p: VertexSet,
    mut x: VertexSet,
    out: &mut Vec<VertexSet>,
    counter: &Counter,
) -> Result<()> {
    counter.tick()?;
    if p.is_empty() {
        if x.is_empty() {
            out.push(r);
        }
        return Ok(());
    }
    let pivot = (p | x).iter().max_by_key(|&u| (p & g.neighbors(u)).len()).expect("non-empty");
    for v in p - g.neighbors(pivot) {
        let nv = g.neighbors(v);
        bron_kerbosch(g, r.with(v), p & nv, x & nv, out, counter)?;
        p.remove(v);
        x.insert(v);
    }
    Ok(())
}

/// Repeatedly removes a vertex of minimum remaining degree.
fn degeneracy_order(g: &Graph) -> Vec<usize> {
    let mut left = g.vertices();
    let mut order = Vec::with_capacity(g.n());
    while !left.is_empty() {
        let v = left.iter().min_by_key(|&v| (g.neighbors(v) & left).len()).expect("non-empty");
        order.push(v);
        left.remove(v);
    }
    order
}

/// True iff `s` is stable and meets every maximal clique.
pub fn is_strong_stable_set(g: &Graph, s: VertexSet, b: &Budget) -> Result<bool> {
    if !s.is_subset(g.vertices()) || !g.is_stable(s) {
        return Ok(false);
    }
    // Any clique avoiding s extends to a maximal clique avoiding s exactly when
    // some maximal clique of G - s has no vertex of s complete to it.
    let rest = g.delete(s);
    for k in maximal_cliques(&rest.graph, b)? {
        let k = rest.host_set(k);
        if !s.iter().any(|v| k.is_subset(g.neighbors(v))) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A path `p0 - p1 - .. - pk` given by its vertex sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub vertices: Vec<usize>,
}

impl Path {
    pub fn new(vertices: Vec<usize>) -> Self {
        Path { vertices }
    }

    /// Number of edges.
    pub fn length(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_odd(&self) -> bool {
        self.length() % 2 == 1
    }

    pub fn set(&self) -> VertexSet {
        self.vertices.iter().collect()
    }

    /// Distinct vertices with `p_i ~ p_j` iff `|i - j| = 1`.
    pub fn is_induced_in(&self, g: &Graph) -> bool {
        let vs = &self.vertices;
        if vs.iter().any(|&v| v >= g.n()) || self.set().len() != vs.len() {
            return false;
        }
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                if g.adjacent(vs[i], vs[j]) != (j == i + 1) {
                    return false;
                }
            }
        }
        true
    }

    /// Distinct vertices with consecutive ones adjacent; chords allowed.
    pub fn is_walk_path_in(&self, g: &Graph) -> bool {
        let vs = &self.vertices;
        vs.iter().all(|&v| v < g.n())
            && self.set().len() == vs.len()
            && vs.windows(2).all(|w| g.adjacent(w[0], w[1]))
    }
}

/// Whether path enumeration requires induced paths or accepts any simple path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PathMode {
    /// Paths with no chords, the notion used by even pairs and safe vertices.
    #[default]
    InducedOnly,
    /// Every simple path, chords allowed. Stricter when used for parity conditions.
    AllPaths,
}

/// Calls `f` on every path from `u` to `v` whose vertices lie in `allowed`
/// (`u` and `v` need not be in `allowed`). Stops early when `f` returns false;
/// the return value is false exactly when stopped early.
pub fn for_each_path(
    g: &Graph,
    u: usize,
    v: usize,
    allowed: VertexSet,
    mode: PathMode,
    counter: &Counter,
    f: &mut dyn FnMut(&[usize]) -> Result<bool>,
) -> Result<bool> {
    if u == v {
        return Err(Error::precondition("path endpoints must differ"));
    }
    let allowed = (allowed & g.vertices()).with(v).without(u);
    let mut path = vec![u];
    match mode {
        PathMode::InducedOnly => induced_dfs(g, &mut path, VertexSet::new(), v, allowed, counter, f),
        PathMode::AllPaths => simple_dfs(g, &mut path, VertexSet::singleton(u), v, allowed, counter, f),
    }
}

fn induced_dfs(
    g: &Graph,
    path: &mut Vec<usize>,
    blocked: VertexSet,
    target: usize,
    allowed: VertexSet,
    counter: &Counter,
    f: &mut dyn FnMut(&[usize]) -> Result<bool>,
) -> Result<bool> {
    counter.tick()?;
    let x = *path.last().expect("non-empty path");
    if blocked.contains(target) {
        return Ok(true);
    }
    if g.adjacent(x, target) {
        path.push(target);
        let go = f(path)?;
        path.pop();
        return Ok(go);
    }
    let next_blocked = blocked | g.closed_neighborhood(x);
    for y in (g.neighbors(x) & allowed) - blocked {
        path.push(y);
        let go = induced_dfs(g, path, next_blocked, target, allowed, counter, f)?;
        path.pop();
        if !go {
            return Ok(false);
        }
    }
    Ok(true)
}

fn simple_dfs(
    g: &Graph,
    path: &mut Vec<usize>,
    visited: VertexSet,
    target: usize,
    allowed: VertexSet,
    counter: &Counter,
    f: &mut dyn FnMut(&[usize]) -> Result<bool>,
) -> Result<bool> {
    counter.tick()?;
    let x = *path.last().expect("non-empty path");
    for y in (g.neighbors(x) & allowed) - visited {
        path.push(y);
        let go = if y == target {
            f(path)?
        } else {
            simple_dfs(g, path, visited.with(y), target, allowed, counter, f)?
        };
        path.pop();
        if !go {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Calls `f` on every induced path of length at least one that starts at
/// `start` and continues inside `allowed`. Returns false if stopped early.
pub fn for_each_induced_path_from(
    g: &Graph,
    start: usize,
    allowed: VertexSet,
    counter: &Counter,
    f: &mut dyn FnMut(&[usize]) -> Result<bool>,
) -> Result<bool> {
    let mut path = vec![start];
    open_dfs(g, &mut path, VertexSet::new(), allowed.without(start), counter, f)
}

fn open_dfs(
    g: &Graph,
    path: &mut Vec<usize>,
    blocked: VertexSet,
    allowed: VertexSet,
    counter: &Counter,
    f: &mut dyn FnMut(&[usize]) -> Result<bool>,
) -> Result<bool> {
    counter.tick()?;
    let x = *path.last().expect("non-empty path");
    let next_blocked = blocked | g.closed_neighborhood(x);
    for y in (g.neighbors(x) & allowed) - blocked {
        path.push(y);
        let go = f(path)? && open_dfs(g, path, next_blocked, allowed, counter, f)?;
        path.pop();
        if !go {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Calls `f` on every hole through the edge `pq` whose other vertices lie in
/// `allowed`, as the cycle `p, q, ..`. Returns false if stopped early.
pub fn for_each_hole_through_edge(
    g: &Graph,
    p: usize,
    q: usize,
    allowed: VertexSet,
    counter: &Counter,
    f: &mut dyn FnMut(&[usize]) -> Result<bool>,
) -> Result<bool> {
    if !g.adjacent(p, q) {
        return Err(Error::precondition("hole search needs an edge"));
    }
    let inner = allowed - g.closed_neighborhood(p) - g.closed_neighborhood(q);
    let xs = (g.neighbors(q) - g.closed_neighborhood(p)) & allowed;
    let ys = (g.neighbors(p) - g.closed_neighborhood(q)) & allowed;
    for x in xs {
        for y in ys {
            if x == y {
                continue;
            }
            let mut cycle = vec![p, q];
            let go = if g.adjacent(x, y) {
                cycle.extend([x, y]);
                f(&cycle)?
            } else {
                for_each_path(g, x, y, inner, PathMode::InducedOnly, counter, &mut |path| {
                    cycle.truncate(2);
                    cycle.extend_from_slice(path);
                    f(&cycle)
                })?
            };
            if !go {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Every induced path from `u` to `v`, each exactly once.
pub fn induced_paths_between(g: &Graph, u: usize, v: usize, b: &Budget) -> Result<Vec<Path>> {
    let counter = b.counter("induced path enumeration");
    let mut out = Vec::new();
    for_each_path(g, u, v, g.vertices(), PathMode::InducedOnly, &counter, &mut |p| {
        out.push(Path::new(p.to_vec()));
        Ok(true)
    })?;
    Ok(out)
}

/// Calls `f` on every hole (induced cycle of length at least 4) whose vertices
/// lie in `within`, each exactly once. The cycle starts at its lowest vertex and
/// its second vertex is lower than its last. Returns false if stopped early.
pub fn for_each_hole(
    g: &Graph,
    within: VertexSet,
    counter: &Counter,
    f: &mut dyn FnMut(&[usize]) -> Result<bool>,
) -> Result<bool> {
    for s in within {
        let above = within & !VertexSet::range(s + 1);
        let nbrs = g.neighbors(s) & above;
        let region = above - g.neighbors(s);
        for a in nbrs {
            for b in nbrs {
                if b <= a || g.adjacent(a, b) {
                    continue;
                }
                let go = for_each_path(g, a, b, region, PathMode::InducedOnly, counter, &mut |p| {
                    let mut cycle = Vec::with_capacity(p.len() + 1);
                    cycle.push(s);
                    cycle.extend_from_slice(p);
                    f(&cycle)
                })?;
                if !go {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Every hole of `g`, in the normal form of [`for_each_hole`].
pub fn holes(g: &Graph, b: &Budget) -> Result<Vec<Vec<usize>>> {
    let counter = b.counter("hole enumeration");
    let mut out = Vec::new();
    for_each_hole(g, g.vertices(), &counter, &mut |c| {
        out.push(c.to_vec());
        Ok(true)
    })?;
    Ok(out)
}

/// True iff `cycle` lists the vertices of a hole of `g` in cyclic order.
pub fn is_hole(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 4 || cycle.iter().any(|&v| v >= g.n()) || cycle.iter().collect::<VertexSet>().len() != k {
        return false;
    }
    for i in 0..k {
        for j in i + 1..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if g.adjacent(cycle[i], cycle[j]) != consecutive {
                return false;
            }
        }
    }
    true
}

/// Undirected multigraph with stable edge ids `0..m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Multigraph> {
        for &(u, v) in &edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
        }
        Ok(Multigraph { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// The endpoint of `e` other than `v`.
    pub fn other_end(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    /// Ids of edges incident with `v`, increasing.
    pub fn incident(&self, v: usize) -> Vec<usize> {
        (0..self.edges.len()).filter(|&e| self.edges[e].0 == v || self.edges[e].1 == v).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Distinct neighbors of `v`, increasing.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.incident(v).into_iter().map(|e| self.other_end(e, v)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Number of parallel copies of the pair `{u, v}`.
    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| (a, b) == (u, v) || (a, b) == (v, u)).count()
    }

    /// Side of each vertex in a proper 2-colouring, if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        let adj = self.adjacency_lists();
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                let sv = side[v].expect("coloured");
                for &w in &adj[v] {
                    match side[w] {
                        None => {
                            side[w] = Some(!sv);
                            stack.push(w);
                        }
                        Some(sw) if sw == sv => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.expect("coloured")).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Connected, counting isolated vertices as separate components.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let adj = self.adjacency_lists();
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Distinct-neighbor lists.
    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        adj
    }

    /// The simple graph with the same adjacency.
    pub fn underlying_simple(&self) -> Result<Graph> {
        Graph::from_edge_list(self.n, &self.edges)
    }

    pub fn has_parallel_edges(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.edges.iter().any(|&(u, v)| !seen.insert((u.min(v), u.max(v))))
    }
}

/// The line graph; vertex `i` is edge `i`, so the returned map is the identity.
pub fn line_graph(b: &Multigraph) -> Result<(Graph, Vec<usize>)> {
    let m = b.edge_count();
    if m > MAX_VERTICES {
        return Err(Error::TooLarge { n: m, max: MAX_VERTICES });
    }
    let mut adj = vec![VertexSet::new(); m];
    for e in 0..m {
        for f in e + 1..m {
            let (a, c) = b.edges[e];
            let (x, y) = b.edges[f];
            if a == x || a == y || c == x || c == y {
                adj[e].insert(f);
                adj[f].insert(e);
            }
        }
    }
    Ok((Graph { adj }, (0..m).collect()))
}
