//! Line graphs of bipartite multigraphs: root recovery, theta and bicycle
//! subgraphs, suitable matchings, degree-two contraction and smooth
//! augmentations.

use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use crate::decompose::pair_neighborhood;
use crate::error::{Error, Result};
use crate::graph::{for_each_path, maximal_cliques, Budget, Counter, Graph, Multigraph, PathMode, VertexSet};

/// A multigraph whose line graph is the input, with the edge standing for
/// each input vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootRecovery {
    pub root: Multigraph,
    /// `edge_map[v]` is the root edge of input vertex `v`.
    pub edge_map: Vec<usize>,
    /// Set when the input is complete: a bundle of parallel edges and a star
    /// have the same line graph.
    pub ambiguous: bool,
}

/// True iff `edge_map` is a bijection onto the root's edges under which
/// adjacency is exactly sharing an endpoint.
pub fn verify_root(g: &Graph, r: &RootRecovery) -> bool {
    let m = r.root.edge_count();
    if r.edge_map.len() != g.n() || m != g.n() {
        return false;
    }
    let mut seen = vec![false; m];
    for &e in &r.edge_map {
        if e >= m || seen[e] {
            return false;
        }
        seen[e] = true;
    }
    (0..g.n()).all(|u| {
        (u + 1..g.n()).all(|v| share_endpoint(&r.root, r.edge_map[u], r.edge_map[v]) == g.adjacent(u, v))
    })
}

fn share_endpoint(b: &Multigraph, e: usize, f: usize) -> bool {
    let (a, c) = b.endpoints(e);
    let (x, y) = b.endpoints(f);
    a == x || a == y || c == x || c == y
}

/// A bipartite multigraph whose line graph is `g`, if one exists. Twins
/// become parallel edges; the twin-free rest has a triangle-free root whose
/// stars are exactly the maximal cliques.
pub fn recover_root(g: &Graph, b: &Budget) -> Result<Option<RootRecovery>> {
    b.check_vertices(g.n(), "root recovery")?;
    let n = g.n();
    if n == 0 {
        return Ok(Some(RootRecovery { root: Multigraph::new(0, Vec::new())?, edge_map: Vec::new(), ambiguous: false }));
    }
    if !g.is_connected() {
        return Err(Error::precondition("root recovery needs a connected graph"));
    }
    let mut classes: Vec<VertexSet> = Vec::new();
    for v in 0..n {
        match classes.iter_mut().find(|c| g.closed_neighborhood(c.first().expect("non-empty")) == g.closed_neighborhood(v)) {
            Some(c) => c.insert(v),
            None => classes.push(VertexSet::singleton(v)),
        }
    }
    let reps: VertexSet = classes.iter().map(|c| c.first().expect("non-empty")).collect();
    // Classes are listed by first member, so local id i of `h` is class i.
    let h = g.induced(reps);
    let Some((n_root, ends)) = simple_root(&h.graph, b)? else {
        return Ok(None);
    };
    let mut edges = Vec::with_capacity(n);
    let mut edge_map = vec![0; n];
    for (i, c) in classes.iter().enumerate() {
        for v in *c {
            edge_map[v] = edges.len();
            edges.push(ends[i]);
        }
    }
    let root = Multigraph::new(n_root, edges)?;
    if !root.is_bipartite() {
        return Ok(None);
    }
    let rec = RootRecovery { root, edge_map, ambiguous: classes.len() == 1 && n >= 2 };
    Ok(verify_root(g, &rec).then_some(rec))
}

fn simple_root(h: &Graph, b: &Budget) -> Result<Option<(usize, Vec<(usize, usize)>)>> {
    if h.n() == 1 {
        return Ok(Some((2, vec![(0, 1)])));
    }
    let cliques = maximal_cliques(h, b)?;
    let mut member: Vec<Vec<usize>> = vec![Vec::new(); h.n()];
    for (i, c) in cliques.iter().enumerate() {
        if c.len() < 2 {
            return Ok(None);
        }
        for v in *c {
            member[v].push(i);
        }
    }
    for (i, c) in cliques.iter().enumerate() {
        if cliques[i + 1..].iter().any(|d| (*c & *d).len() > 1) {
            return Ok(None);
        }
    }
    let mut n_root = cliques.len();
    let mut ends = Vec::with_capacity(h.n());
    for list in &member {
        match list.as_slice() {
            [i] => {
                ends.push((*i, n_root));
                n_root += 1;
            }
            [i, j] => ends.push((*i, *j)),
            _ => return Ok(None),
        }
    }
    Ok(Some((n_root, ends)))
}

fn multiplicity_matrix(b: &Multigraph) -> Vec<Vec<usize>> {
    let mut m = vec![vec![0; b.n()]; b.n()];
    for &(u, v) in b.edges() {
        m[u][v] += 1;
        m[v][u] += 1;
    }
    m
}

/// Exact isomorphism test by backtracking over degree-compatible images.
pub fn multigraphs_isomorphic(a: &Multigraph, b: &Multigraph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let (ma, mb) = (multiplicity_matrix(a), multiplicity_matrix(b));
    let deg = |m: &Vec<Vec<usize>>| -> Vec<usize> { m.iter().map(|r| r.iter().sum()).collect() };
    let (da, db) = (deg(&ma), deg(&mb));
    let mut sa = da.clone();
    let mut sb = db.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return false;
    }
    // Visit `a` in BFS order from high-degree vertices so constraints bite early.
    let n = a.n();
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let s = (0..n).filter(|&v| !placed[v]).max_by_key(|&v| (da[v], std::cmp::Reverse(v))).expect("unplaced vertex");
        placed[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for w in 0..n {
                if ma[v][w] > 0 && !placed[w] {
                    placed[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    fn extend(
        i: usize,
        order: &[usize],
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        ma: &[Vec<usize>],
        mb: &[Vec<usize>],
        da: &[usize],
        db: &[usize],
    ) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        for w in 0..mb.len() {
            if used[w] || da[v] != db[w] {
                continue;
            }
            if order[..i].iter().any(|&u| ma[v][u] != mb[w][image[u]]) {
                continue;
            }
            image[v] = w;
            used[w] = true;
            if extend(i + 1, order, image, used, ma, mb, da, db) {
                return true;
            }
            used[w] = false;
        }
        false
    }
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(0, &order, &mut image, &mut used, &ma, &mb, &da, &db)
}

/// Rewrites every bundle of parallel edges at a vertex with no other
/// neighbor as that many pendant edges. Such bundles and pendant stars have
/// the same line graph, so roots are compared in this form.
pub fn normalize_pendant_bundles(b: &Multigraph) -> Multigraph {
    let adj = b.adjacency_lists();
    let mut n = b.n();
    let mut edges = Vec::with_capacity(b.edge_count());
    let mut done: HashSet<(usize, usize)> = HashSet::new();
    for &(u, v) in b.edges() {
        let key = (u.min(v), u.max(v));
        // The leaf-like end; for an isolated bundle the larger id.
        let leaf = if adj[v].len() == 1 && (adj[u].len() != 1 || v > u) {
            Some((u, v))
        } else if adj[u].len() == 1 {
            Some((v, u))
        } else {
            None
        };
        match leaf {
            Some((center, l)) => {
                if done.insert(key) {
                    edges.push((center, l));
                } else {
                    edges.push((center, n));
                    n += 1;
                }
            }
            None => edges.push((u, v)),
        }
    }
    Multigraph::new(n, edges).expect("rewritten edges stay in range")
}

/// Two vertices of the same side joined by three internally disjoint paths.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theta {
    pub a: usize,
    pub b: usize,
    pub paths: [Vec<usize>; 3],
}

/// Two disjoint cycles joined by an even path, or two cycles sharing one
/// vertex (`shared_vertex`, path of that single vertex).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bicycle {
    pub cycle1: Vec<usize>,
    pub cycle2: Vec<usize>,
    pub path: Vec<usize>,
    pub shared_vertex: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Harm {
    Harmless,
    Theta(Theta),
    Bicycle(Bicycle),
}

fn is_walk(g: &Graph, p: &[usize]) -> bool {
    p.windows(2).all(|w| g.adjacent(w[0], w[1]))
}

fn distinct(p: &[usize]) -> bool {
    p.iter().collect::<VertexSet>().len() == p.len()
}

fn is_cycle(g: &Graph, c: &[usize]) -> bool {
    c.len() >= 4 && c.len() % 2 == 0 && distinct(c) && is_walk(g, c) && g.adjacent(c[0], c[c.len() - 1])
}

pub fn verify_theta(b: &Multigraph, t: &Theta) -> bool {
    let Ok(g) = b.underlying_simple() else { return false };
    if t.a == t.b || t.a >= g.n() || t.b >= g.n() {
        return false;
    }
    let mut interiors = VertexSet::new();
    for p in &t.paths {
        let ok = p.len() >= 3
            && p.len() % 2 == 1
            && p[0] == t.a
            && p[p.len() - 1] == t.b
            && p.iter().all(|&v| v < g.n())
            && distinct(p)
            && is_walk(&g, p);
        if !ok {
            return false;
        }
        let inner: VertexSet = p[1..p.len() - 1].iter().collect();
        if inner.intersects(interiors) {
            return false;
        }
        interiors = interiors | inner;
    }
    true
}

pub fn verify_bicycle(b: &Multigraph, w: &Bicycle) -> bool {
    let Ok(g) = b.underlying_simple() else { return false };
    let all_in = |p: &[usize]| p.iter().all(|&v| v < g.n());
    if !all_in(&w.cycle1) || !all_in(&w.cycle2) || !all_in(&w.path) {
        return false;
    }
    if !is_cycle(&g, &w.cycle1) || !is_cycle(&g, &w.cycle2) || w.path.is_empty() {
        return false;
    }
    let c1: VertexSet = w.cycle1.iter().collect();
    let c2: VertexSet = w.cycle2.iter().collect();
    let (s, t) = (w.path[0], w.path[w.path.len() - 1]);
    if w.shared_vertex {
        return w.path.len() == 1 && c1 & c2 == VertexSet::singleton(s);
    }
    let inner: VertexSet = w.path[1..w.path.len() - 1].iter().collect();
    c1.is_disjoint(c2)
        && w.path.len() % 2 == 1
        && w.path.len() >= 3
        && distinct(&w.path)
        && is_walk(&g, &w.path)
        && c1.contains(s)
        && c2.contains(t)
        && inner.is_disjoint(c1 | c2)
}

/// Up to `k` internally disjoint paths from `s` to `t`, by unit-capacity flow
/// on the vertex-split graph.
fn disjoint_paths(g: &Graph, s: usize, t: usize, k: usize) -> Vec<Vec<usize>> {
    let n = g.n();
    let nodes = 2 * n;
    let (vin, vout) = (|v: usize| 2 * v, |v: usize| 2 * v + 1);
    let mut cap = vec![vec![0i32; nodes]; nodes];
    for v in 0..n {
        cap[vin(v)][vout(v)] = if v == s || v == t { k as i32 } else { 1 };
        for w in g.neighbors(v) {
            cap[vout(v)][vin(w)] = 1;
        }
    }
    let mut flow = vec![vec![0i32; nodes]; nodes];
    let (source, sink) = (vout(s), vin(t));
    for _ in 0..k {
        let mut prev = vec![usize::MAX; nodes];
        prev[source] = source;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            if x == sink {
                break;
            }
            for y in 0..nodes {
                if prev[y] == usize::MAX && cap[x][y] - flow[x][y] > 0 {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if prev[sink] == usize::MAX {
            break;
        }
        let mut y = sink;
        while y != source {
            let x = prev[y];
            flow[x][y] += 1;
            flow[y][x] -= 1;
            y = x;
        }
    }
    let mut paths = Vec::new();
    for w in g.neighbors(s) {
        if flow[vout(s)][vin(w)] <= 0 {
            continue;
        }
        let mut p = vec![s, w];
        let mut v = w;
        while v != t {
            let next = g.neighbors(v).iter().find(|&x| flow[vout(v)][vin(x)] > 0).expect("flow is conserved");
            p.push(next);
            v = next;
        }
        paths.push(p);
    }
    paths
}

fn bipartition_of(b: &Multigraph, what: &str) -> Result<Vec<bool>> {
    b.bipartition().ok_or_else(|| Error::precondition(format!("{what} needs a bipartite multigraph")))
}

/// A theta subgraph (not necessarily induced), if one exists.
pub fn find_theta(b: &Multigraph, budget: &Budget) -> Result<Option<Theta>> {
    let side = bipartition_of(b, "theta search")?;
    let g = b.underlying_simple()?;
    let counter = budget.counter("theta search");
    for a in 0..g.n() {
        if g.degree(a) < 3 {
            continue;
        }
        for c in a + 1..g.n() {
            if side[a] != side[c] || g.degree(c) < 3 {
                continue;
            }
            counter.tick()?;
            let paths = disjoint_paths(&g, a, c, 3);
            if let Ok(paths) = <[Vec<usize>; 3]>::try_from(paths) {
                return Ok(Some(Theta { a, b: c, paths }));
            }
        }
    }
    Ok(None)
}

/// Every cycle of length at least three inside `within`, each once, starting
/// at its lowest vertex.
fn for_each_cycle(
    g: &Graph,
    within: VertexSet,
    counter: &Counter,
    f: &mut dyn FnMut(&[usize]) -> Result<bool>,
) -> Result<bool> {
    for s in within {
        let higher = within & !VertexSet::range(s + 1);
        let nbrs = g.neighbors(s) & higher;
        for x in nbrs {
            for y in nbrs {
                if y <= x {
                    continue;
                }
                let go = for_each_path(g, x, y, higher, PathMode::AllPaths, counter, &mut |p| {
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

/// A cycle through `c` using only vertices of `region` (which holds `c`).
fn cycle_through(g: &Graph, c: usize, region: VertexSet) -> Option<Vec<usize>> {
    let rest = region.without(c);
    let nbrs = g.neighbors(c) & rest;
    for x in nbrs {
        // Shortest path from x to another neighbor of c inside `rest`.
        let mut prev = vec![usize::MAX; g.n()];
        prev[x] = x;
        let mut queue = VecDeque::from([x]);
        while let Some(v) = queue.pop_front() {
            if v != x && nbrs.contains(v) {
                let mut cycle = vec![v];
                let mut u = v;
                while u != x {
                    u = prev[u];
                    cycle.push(u);
                }
                cycle.push(c);
                cycle.reverse();
                return Some(cycle);
            }
            for w in g.neighbors(v) & rest {
                if prev[w] == usize::MAX {
                    prev[w] = v;
                    queue.push_back(w);
                }
            }
        }
    }
    None
}

/// Every simple path of length at least one from `start` whose other
/// vertices lie in `region`.
fn for_each_path_from(
    g: &Graph,
    path: &mut Vec<usize>,
    region: VertexSet,
    counter: &Counter,
    f: &mut dyn FnMut(&[usize]) -> Result<bool>,
) -> Result<bool> {
    let last = *path.last().expect("non-empty");
    let used: VertexSet = path.iter().collect();
    for w in g.neighbors(last) & region & !used {
        counter.tick()?;
        path.push(w);
        let go = f(path)? && for_each_path_from(g, path, region, counter, f)?;
        path.pop();
        if !go {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A bicycle subgraph (not necessarily induced), if one exists.
pub fn find_bicycle(b: &Multigraph, budget: &Budget) -> Result<Option<Bicycle>> {
    let side = bipartition_of(b, "bicycle search")?;
    let g = b.underlying_simple()?;
    let counter = budget.counter("bicycle search");
    let mut found = None;
    for_each_cycle(&g, g.vertices(), &counter, &mut |c1| {
        let body: VertexSet = c1.iter().collect();
        let region = g.vertices() - body;
        for &c in c1 {
            if let Some(c2) = cycle_through(&g, c, region.with(c)) {
                found = Some(Bicycle { cycle1: c1.to_vec(), cycle2: c2, path: vec![c], shared_vertex: true });
                return Ok(false);
            }
        }
        for &c in c1 {
            let mut start = vec![c];
            let go = for_each_path_from(&g, &mut start, region, &counter, &mut |p| {
                let end = *p.last().expect("non-empty");
                if side[end] != side[c] {
                    return Ok(true);
                }
                let used: VertexSet = p.iter().collect();
                match cycle_through(&g, end, (region - used).with(end)) {
                    Some(c2) => {
                        found = Some(Bicycle { cycle1: c1.to_vec(), cycle2: c2, path: p.to_vec(), shared_vertex: false });
                        Ok(false)
                    }
                    None => Ok(true),
                }
            })?;
            if !go {
                return Ok(false);
            }
        }
        Ok(true)
    })?;
    Ok(found)
}

/// Harmless iff there is neither a theta nor a bicycle subgraph; parallel
/// edges are ignored since twins never take part in a forbidden structure.
pub fn is_harmless(b: &Multigraph, budget: &Budget) -> Result<Harm> {
    if let Some(t) = find_theta(b, budget)? {
        return Ok(Harm::Theta(t));
    }
    if let Some(w) = find_bicycle(b, budget)? {
        return Ok(Harm::Bicycle(w));
    }
    Ok(Harm::Harmless)
}

/// A matching covering every vertex whose star is a maximal clique of the
/// line graph, by edge ids. For simple roots these are the vertices of degree
/// at least two.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuitableMatching {
    pub edges: Vec<usize>,
}

/// Edges with an endpoint whose edges all run parallel to it: the edges that
/// are simplicial vertices of the line graph. For simple roots, the edges
/// with an endpoint of degree one.
pub fn singular_edges(b: &Multigraph) -> Vec<usize> {
    (0..b.edge_count())
        .filter(|&e| {
            let (u, v) = b.endpoints(e);
            b.neighbors(u).len() == 1 || b.neighbors(v).len() == 1
        })
        .collect()
}

/// The star at `v` is a maximal clique of the line graph unless it is empty
/// or every edge at `v` goes to one neighbor with a larger star.
pub fn star_is_maximal(b: &Multigraph, v: usize) -> bool {
    match b.neighbors(v).as_slice() {
        [] => false,
        [u] => b.degree(*u) <= b.degree(v),
        _ => true,
    }
}

fn is_matching(b: &Multigraph, edges: &[usize]) -> bool {
    let mut seen = vec![false; b.n()];
    for &e in edges {
        if e >= b.edge_count() {
            return false;
        }
        let (u, v) = b.endpoints(e);
        if seen[u] || seen[v] {
            return false;
        }
        seen[u] = true;
        seen[v] = true;
    }
    true
}

pub fn is_suitable_matching(b: &Multigraph, edges: &[usize]) -> bool {
    if !is_matching(b, edges) {
        return false;
    }
    let covered: HashSet<usize> = edges.iter().flat_map(|&e| [b.endpoints(e).0, b.endpoints(e).1]).collect();
    (0..b.n()).all(|v| !star_is_maximal(b, v) || covered.contains(&v))
}

/// A suitable matching containing `forced`, if one exists. Vertices needing
/// cover are added one at a time along alternating paths; since the sets a
/// matching can cover form a matroid, this finds one whenever it exists.
pub fn suitable_matching(b: &Multigraph, forced: &[usize], budget: &Budget) -> Result<Option<SuitableMatching>> {
    bipartition_of(b, "suitable matching")?;
    if !is_matching(b, forced) {
        return Err(Error::precondition("forced edges must form a matching"));
    }
    let counter = budget.counter("suitable matching");
    let n = b.n();
    let mut mate: Vec<Option<usize>> = vec![None; n];
    let mut locked = vec![false; n];
    for &e in forced {
        let (u, v) = b.endpoints(e);
        mate[u] = Some(e);
        mate[v] = Some(e);
        locked[u] = true;
        locked[v] = true;
    }
    let incident: Vec<Vec<usize>> = (0..n).map(|v| b.incident(v)).collect();
    let mut kept = vec![false; n];
    for p in 0..n {
        if !star_is_maximal(b, p) || locked[p] {
            continue;
        }
        if mate[p].is_none() && !cover_vertex(b, p, &mut mate, &locked, &kept, &incident, &counter)? {
            return Ok(None);
        }
        kept[p] = true;
    }
    let mut edges: Vec<usize> = mate.iter().flatten().copied().collect();
    edges.sort_unstable();
    edges.dedup();
    debug_assert!(is_suitable_matching(b, &edges));
    Ok(Some(SuitableMatching { edges }))
}

/// Matches the free vertex `p` along an alternating path that ends either at
/// a free vertex or by releasing a vertex not in `kept`.
fn cover_vertex(
    b: &Multigraph,
    p: usize,
    mate: &mut [Option<usize>],
    locked: &[bool],
    kept: &[bool],
    incident: &[Vec<usize>],
    counter: &Counter,
) -> Result<bool> {
    let n = b.n();
    // For a vertex x reached through a non-matching edge: that edge.
    let mut via: Vec<Option<usize>> = vec![None; n];
    let mut visited = vec![false; n];
    visited[p] = true;
    let mut queue = VecDeque::from([p]);
    while let Some(y) = queue.pop_front() {
        for &e in &incident[y] {
            counter.tick()?;
            let x = b.other_end(e, y);
            if visited[x] || locked[x] || mate[y] == Some(e) {
                continue;
            }
            visited[x] = true;
            via[x] = Some(e);
            let flip_end = match mate[x] {
                None => Some(None),
                Some(m) => {
                    let next = b.other_end(m, x);
                    if !kept[next] && next != p {
                        Some(Some(next))
                    } else {
                        visited[next] = true;
                        queue.push_back(next);
                        None
                    }
                }
            };
            if let Some(release) = flip_end {
                if let Some(r) = release {
                    mate[r] = None;
                }
                // Walk back, matching each x to the y it was reached from.
                let mut cur = x;
                loop {
                    let e = via[cur].expect("reached vertex");
                    let from = b.other_end(e, cur);
                    mate[cur] = Some(e);
                    let previous = mate[from];
                    mate[from] = Some(e);
                    if from == p {
                        break;
                    }
                    cur = b.other_end(previous.expect("inner vertex is matched"), from);
                }
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// The multigraph after deleting a degree-two vertex and identifying its two
/// neighbors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Contraction {
    pub graph: Multigraph,
    /// New id of the identified vertex.
    pub merged: usize,
    /// New id of each old vertex; `None` for the deleted one.
    pub vertex_map: Vec<Option<usize>>,
    /// Old id of each new edge.
    pub edge_origin: Vec<usize>,
}

pub fn contract_degree_two(b: &Multigraph, u: usize) -> Result<Contraction> {
    if u >= b.n() {
        return Err(Error::VertexOutOfRange { vertex: u, n: b.n() });
    }
    let inc = b.incident(u);
    if inc.len() != 2 {
        return Err(Error::precondition(format!("vertex {u} has degree {}, not two", inc.len())));
    }
    let (v, w) = (b.other_end(inc[0], u), b.other_end(inc[1], u));
    if v == w {
        return Err(Error::precondition(format!("vertex {u} has both edges to {v}")));
    }
    let (keep, gone) = (v.min(w), v.max(w));
    let mut vertex_map = vec![None; b.n()];
    let mut next = 0;
    for x in 0..b.n() {
        if x != u && x != gone {
            vertex_map[x] = Some(next);
            next += 1;
        }
    }
    vertex_map[gone] = vertex_map[keep];
    let mut edges = Vec::new();
    let mut edge_origin = Vec::new();
    for (e, &(x, y)) in b.edges().iter().enumerate() {
        if x == u || y == u {
            continue;
        }
        edges.push((vertex_map[x].expect("kept"), vertex_map[y].expect("kept")));
        edge_origin.push(e);
    }
    let graph = Multigraph::new(next, edges)?;
    Ok(Contraction { graph, merged: vertex_map[keep].expect("kept"), vertex_map, edge_origin })
}

/// A flat edge of the base line graph replaced by the cliques `x` and `y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Augment {
    pub x_edge: usize,
    pub y_edge: usize,
    pub x: VertexSet,
    pub y: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AugmentationStructure {
    pub base: Multigraph,
    /// Base edge standing for each input vertex.
    pub edge_of: Vec<usize>,
    pub augments: Vec<Augment>,
}

impl AugmentationStructure {
    /// Every vertex of each pair has a neighbor on the other side of it.
    pub fn is_smooth(&self, g: &Graph) -> bool {
        self.augments.iter().all(|a| {
            a.x.iter().all(|v| g.neighbors(v).intersects(a.y)) && a.y.iter().all(|v| g.neighbors(v).intersects(a.x))
        })
    }
}

/// Rebuilds the input from the base line graph and the augments.
pub fn verify_augmentation(g: &Graph, s: &AugmentationStructure) -> bool {
    let m = s.base.edge_count();
    if s.edge_of.len() != g.n() || s.edge_of.iter().any(|&e| e >= m) || !s.base.is_bipartite() {
        return false;
    }
    let mut pre = vec![VertexSet::new(); m];
    for (v, &e) in s.edge_of.iter().enumerate() {
        pre[e].insert(v);
    }
    let mut pair_of = vec![None; m];
    for (i, a) in s.augments.iter().enumerate() {
        if a.x_edge >= m || a.y_edge >= m || a.x_edge == a.y_edge {
            return false;
        }
        if pair_of[a.x_edge].is_some() || pair_of[a.y_edge].is_some() {
            return false;
        }
        pair_of[a.x_edge] = Some(i);
        pair_of[a.y_edge] = Some(i);
        if pre[a.x_edge] != a.x || pre[a.y_edge] != a.y || !g.is_clique(a.x) || !g.is_clique(a.y) {
            return false;
        }
        if g.components_within(a.x | a.y).len() != 1 || !flat_in_base(&s.base, a.x_edge, a.y_edge) {
            return false;
        }
    }
    if (0..m).any(|e| pre[e].is_empty() || (pair_of[e].is_none() && pre[e].len() != 1)) {
        return false;
    }
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let (e, f) = (s.edge_of[u], s.edge_of[v]);
            let expected = if e == f {
                true
            } else if pair_of[e].is_some() && pair_of[e] == pair_of[f] {
                continue;
            } else {
                share_endpoint(&s.base, e, f)
            };
            if expected != g.adjacent(u, v) {
                return false;
            }
        }
    }
    true
}

/// The two base edges meet at a vertex of degree two, so their line-graph
/// edge lies in no triangle.
fn flat_in_base(b: &Multigraph, e: usize, f: usize) -> bool {
    let (a, c) = b.endpoints(e);
    let (x, y) = b.endpoints(f);
    let shared: Vec<usize> = [a, c].into_iter().filter(|&p| p == x || p == y).collect();
    shared.len() == 1 && b.degree(shared[0]) == 2
}

/// Homogeneous pairs of cliques (X, Y) with no outside vertex complete to
/// both, X ∪ Y connected, every vertex seeing the other side, and at least
/// three vertices: the shape a smoothly augmented flat edge leaves behind.
pub fn find_augment_pairs(g: &Graph, budget: &Budget) -> Result<Vec<(VertexSet, VertexSet)>> {
    budget.check_vertices(g.n(), "augment pair search")?;
    let counter = budget.counter("augment pair search");
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut seeds: Vec<(VertexSet, VertexSet)> = Vec::new();
    for (p, q) in g.edges() {
        for r in g.neighbors(p) & g.neighbors(q) {
            if r > q {
                for (lone, pair) in [(p, (q, r)), (q, (p, r)), (r, (p, q))] {
                    let two = VertexSet::singleton(pair.0).with(pair.1);
                    seeds.push((two, VertexSet::singleton(lone)));
                    seeds.push((VertexSet::singleton(lone), two));
                }
            }
        }
    }
    for ([a1, a2], [b1, b2]) in crate::decompose::squares(g) {
        seeds.push((VertexSet::singleton(a1).with(a2), VertexSet::singleton(b1).with(b2)));
    }
    for (x, y) in seeds {
        close_pair(g, x, y, &counter, &mut seen, &mut out)?;
    }
    out.sort_by_key(|&(x, y)| (std::cmp::Reverse((x | y).len()), x.bits(), y.bits()));
    Ok(out)
}

fn close_pair(
    g: &Graph,
    x: VertexSet,
    y: VertexSet,
    counter: &Counter,
    seen: &mut HashSet<(u128, u128)>,
    out: &mut Vec<(VertexSet, VertexSet)>,
) -> Result<()> {
    if !seen.insert((x.bits(), y.bits())) {
        return Ok(());
    }
    counter.tick()?;
    let outside = g.vertices() - x - y;
    let pick = outside
        .iter()
        .find(|&v| g.is_mixed_on(v, x) || g.is_mixed_on(v, y))
        .or_else(|| outside.iter().find(|&v| g.is_complete_to(VertexSet::singleton(v), x | y)));
    match pick {
        Some(v) => {
            if g.is_complete_to(VertexSet::singleton(v), x) {
                close_pair(g, x.with(v), y, counter, seen, out)?;
            }
            if g.is_complete_to(VertexSet::singleton(v), y) {
                close_pair(g, x, y.with(v), counter, seen, out)?;
            }
        }
        None => {
            let smooth = x.iter().all(|v| g.neighbors(v).intersects(y)) && y.iter().all(|v| g.neighbors(v).intersects(x));
            let connected = g.components_within(x | y).len() == 1;
            if (x | y).len() >= 3 && smooth && connected && pair_neighborhood(g, x, y).e.is_empty() {
                out.push((x, y));
            }
        }
    }
    Ok(())
}

/// Structure as a smooth augmentation of the line graph of a bipartite
/// multigraph, found by contracting candidate pairs and recovering a root.
/// Failure only means no structure was found.
pub fn detect_smooth_augmentation(g: &Graph, budget: &Budget) -> Result<Option<AugmentationStructure>> {
    if !g.is_connected() {
        return Err(Error::precondition("augmentation detection needs a connected graph"));
    }
    if let Some(r) = recover_root(g, budget)? {
        return Ok(Some(AugmentationStructure { base: r.root, edge_of: r.edge_map, augments: Vec::new() }));
    }
    let pairs = find_augment_pairs(g, budget)?;
    let mut chosen: Vec<(VertexSet, VertexSet)> = Vec::new();
    for &(x, y) in &pairs {
        if chosen.iter().all(|&(cx, cy)| (cx | cy).is_disjoint(x | y)) {
            chosen.push((x, y));
        }
    }
    let mut attempts = vec![chosen];
    attempts.extend(pairs.iter().map(|&p| vec![p]));
    for attempt in attempts {
        if let Some(s) = contract_and_recover(g, &attempt, budget)? {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

fn contract_and_recover(g: &Graph, pairs: &[(VertexSet, VertexSet)], budget: &Budget) -> Result<Option<AugmentationStructure>> {
    if pairs.is_empty() {
        return Ok(None);
    }
    let covered = pairs.iter().fold(VertexSet::new(), |acc, &(x, y)| acc | x | y);
    let reps = pairs.iter().fold(g.vertices() - covered, |acc, &(x, y)| {
        acc.with(x.first().expect("non-empty")).with(y.first().expect("non-empty"))
    });
    // Homogeneity makes the representatives an exact contraction.
    let h = g.induced(reps);
    let Some(r) = recover_root(&h.graph, budget)? else {
        return Ok(None);
    };
    let mut edge_of = vec![0; g.n()];
    for v in g.vertices() - covered {
        edge_of[v] = r.edge_map[h.local(v).expect("representative")];
    }
    let mut augments = Vec::new();
    for &(x, y) in pairs {
        let xe = r.edge_map[h.local(x.first().expect("non-empty")).expect("representative")];
        let ye = r.edge_map[h.local(y.first().expect("non-empty")).expect("representative")];
        for v in x {
            edge_of[v] = xe;
        }
        for v in y {
            edge_of[v] = ye;
        }
        augments.push(Augment { x_edge: xe, y_edge: ye, x, y });
    }
    let s = AugmentationStructure { base: r.root, edge_of, augments };
    Ok((verify_augmentation(g, &s) && s.is_smooth(g)).then_some(s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::line_graph;

    fn multi(n: usize, edges: &[(usize, usize)]) -> Multigraph {
        Multigraph::new(n, edges.to_vec()).unwrap()
    }

    fn k23() -> Multigraph {
        multi(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
    }

    #[test]
    fn root_of_prism_is_k23() {
        let (g, _) = line_graph(&k23()).unwrap();
        let r = recover_root(&g, &Budget::default()).unwrap().unwrap();
        assert!(verify_root(&g, &r));
        assert!(multigraphs_isomorphic(&r.root, &k23()));
    }

    #[test]
    fn root_of_triangle_is_bipartite_and_flagged() {
        let r = recover_root(&Graph::complete(3), &Budget::default()).unwrap().unwrap();
        assert!(r.root.is_bipartite() && r.ambiguous);
        assert!(verify_root(&Graph::complete(3), &r));
    }

    #[test]
    fn odd_cycle_has_no_bipartite_root() {
        assert!(recover_root(&Graph::cycle(5), &Budget::default()).unwrap().is_none());
        let r = recover_root(&Graph::cycle(6), &Budget::default()).unwrap().unwrap();
        assert!(multigraphs_isomorphic(&r.root, &multi(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)])));
    }

    #[test]
    fn pendant_bundles_normalize_to_stars() {
        let bundle = multi(3, &[(0, 1), (0, 1), (1, 2), (1, 2)]);
        let star = multi(5, &[(1, 0), (1, 2), (1, 3), (1, 4)]);
        assert!(!multigraphs_isomorphic(&bundle, &star));
        assert!(multigraphs_isomorphic(&normalize_pendant_bundles(&bundle), &normalize_pendant_bundles(&star)));
    }

    #[test]
    fn theta_and_bicycle_examples() {
        let b = Budget::default();
        let t = find_theta(&k23(), &b).unwrap().unwrap();
        assert!(verify_theta(&k23(), &t));
        let two_squares = multi(7, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 0)]);
        assert!(find_theta(&two_squares, &b).unwrap().is_none());
        let w = find_bicycle(&two_squares, &b).unwrap().unwrap();
        assert!(w.shared_vertex && verify_bicycle(&two_squares, &w));
        let tree = multi(6, &[(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]);
        assert_eq!(is_harmless(&tree, &b).unwrap(), Harm::Harmless);
    }

    #[test]
    fn bicycle_with_long_path() {
        let b = multi(9, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 5)]);
        // Path 0-4-5 has length 2 and 5 lies on the square 5-6-7-8.
        let w = find_bicycle(&b, &Budget::default()).unwrap().unwrap();
        assert!(!w.shared_vertex && verify_bicycle(&b, &w));
        let odd = multi(8, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 7), (7, 4)]);
        assert!(find_bicycle(&odd, &Budget::default()).unwrap().is_none());
    }

    #[test]
    fn suitable_matching_examples() {
        let b = Budget::default();
        let p3 = multi(3, &[(0, 1), (1, 2)]);
        let m = suitable_matching(&p3, &[], &b).unwrap().unwrap();
        assert_eq!(m.edges.len(), 1);
        let c4 = multi(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let m = suitable_matching(&c4, &[], &b).unwrap().unwrap();
        assert_eq!(m.edges.len(), 2);
        let p6 = multi(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]);
        let m = suitable_matching(&p6, &[0, 4], &b).unwrap().unwrap();
        assert_eq!(m.edges, vec![0, 2, 4]);
        // Square with a pendant path of length three: forcing the far pendant edge fails.
        let bad = multi(7, &[(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (4, 5), (5, 6)]);
        assert!(suitable_matching(&bad, &[6], &b).unwrap().is_none());
        assert!(suitable_matching(&p3, &[0, 1], &b).is_err());
        // Bundles of three and two edges at vertex 0: the line graph is K5 and
        // only the star at 0 is a maximal clique.
        let bundles = multi(3, &[(0, 1), (0, 2), (2, 0), (0, 1), (1, 0)]);
        assert!(!star_is_maximal(&bundles, 1) && star_is_maximal(&bundles, 0));
        assert_eq!(suitable_matching(&bundles, &[0], &b).unwrap().unwrap().edges, vec![0]);
        assert_eq!(singular_edges(&bundles), vec![0, 1, 2, 3, 4]);
        // A single edge is a maximal clique of its own.
        let k2 = multi(2, &[(0, 1)]);
        assert_eq!(suitable_matching(&k2, &[], &b).unwrap().unwrap().edges, vec![0]);
    }

    #[test]
    fn contraction_examples() {
        let path = multi(3, &[(0, 1), (1, 2)]);
        assert!(contract_degree_two(&path, 1).is_ok());
        let c6 = multi(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        let c = contract_degree_two(&c6, 2).unwrap();
        assert!(multigraphs_isomorphic(&c.graph, &multi(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])));
        let c4 = multi(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let c = contract_degree_two(&c4, 0).unwrap();
        assert!(c.graph.has_parallel_edges());
        assert_eq!(c.graph.edge_count(), 2);
    }

    #[test]
    fn augmentation_round_trip() {
        let c6 = multi(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        let (h, _) = line_graph(&c6).unwrap();
        let plain = detect_smooth_augmentation(&h, &Budget::default()).unwrap().unwrap();
        assert!(plain.augments.is_empty());
        // Replace the flat edge 0-1 by the cliques X = {0, 6} and Y = {1, 7}.
        let mut edges: Vec<(usize, usize)> = h.edges();
        edges.extend([(6, 0), (6, 5), (6, 1), (6, 7), (7, 1), (7, 2)]);
        let g = Graph::from_edge_list(8, &edges).unwrap();
        let s = detect_smooth_augmentation(&g, &Budget::default()).unwrap().unwrap();
        assert!(verify_augmentation(&g, &s) && s.is_smooth(&g));
        assert_eq!(s.augments.len(), 1);
        assert!(detect_smooth_augmentation(&Graph::cycle(5), &Budget::default()).unwrap().is_none());
    }
}
