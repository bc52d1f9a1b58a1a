//! Generators for the named families, canonically labelled: cycles first and
//! consecutive, then paths, hats last.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::forbidden::is_innocent;
use crate::graph::{line_graph, Budget, Graph, Multigraph, PathMode, VertexSet};
use crate::linegraph::{is_harmless, Harm};
use crate::recognizers::{find_claw, is_consistent_set, is_safe_vertex, simplicial_vertices};
use crate::solver::reduce_gadget;

/// Attempts per requested edge before the harmless generator gives up.
const EDGE_ATTEMPTS: usize = 50;

#[derive(Clone, Debug, PartialEq)]
pub enum GenSpec {
    /// `C_k`, `k >= 4`.
    Hole { k: usize },
    /// Complement of `C_k`, `k >= 6`.
    Antihole { k: usize },
    /// Two triangles joined by paths of the given lengths, each at least one.
    Prism { paths: [usize; 3] },
    /// Even cycles joined by an odd path whose ends make triangles with them.
    Handcuff { c1: usize, c2: usize, path: usize },
    /// Even cycles with one edge of each complete to the other.
    EyeMask { c1: usize, c2: usize },
    /// Even hole of length `k` with a hat on its first edge.
    Clown { k: usize },
    /// Multigraph: two vertices joined by three even paths of length at least two.
    Theta { paths: [usize; 3] },
    /// Multigraph: even cycles joined by an even path, possibly of length zero.
    Bicycle { c1: usize, c2: usize, path: usize },
    /// Peculiar graph with parts of `size` vertices and `clique`-vertex `K_i`.
    Peculiar { size: usize, clique: usize, seed: u64 },
    /// Line graph of a random connected harmless bipartite multigraph with `size` edges.
    LineOfHarmless { size: usize, seed: u64 },
    /// The above with flat edges augmented at the given rate.
    AugmentedLine { size: usize, rate: f64, seed: u64 },
    /// An innocent line graph extended by the three-vertex gadget at a
    /// consistent set of safe vertices.
    GadgetExtension { size: usize, seed: u64 },
}

pub const KINDS: [&str; 12] = [
    "hole",
    "antihole",
    "prism",
    "handcuff",
    "eye-mask",
    "clown",
    "theta",
    "bicycle",
    "peculiar",
    "line-of-harmless",
    "augmented-line",
    "gadget-extension",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generated {
    Graph(Graph),
    Multigraph(Multigraph),
}

impl Generated {
    /// The graph itself, or the line graph of a multigraph.
    pub fn as_graph(&self) -> Result<Graph> {
        match self {
            Generated::Graph(g) => Ok(g.clone()),
            Generated::Multigraph(b) => Ok(line_graph(b)?.0),
        }
    }
}

fn bad(msg: impl Into<String>) -> Error {
    Error::precondition(msg)
}

fn even_cycle(name: &str, c: usize) -> Result<()> {
    if c < 4 || c % 2 == 1 {
        return Err(bad(format!("{name} must be an even cycle length of at least 4, got {c}")));
    }
    Ok(())
}

pub fn generate(spec: &GenSpec) -> Result<Generated> {
    Ok(match *spec {
        GenSpec::Hole { k } => Generated::Graph(hole(k)?),
        GenSpec::Antihole { k } => {
            if k < 6 {
                return Err(bad(format!("antiholes here have length at least 6, got {k}")));
            }
            Generated::Graph(Graph::cycle(k).complement())
        }
        GenSpec::Prism { paths } => Generated::Graph(prism(paths)?),
        GenSpec::Handcuff { c1, c2, path } => Generated::Graph(handcuff(c1, c2, path)?),
        GenSpec::EyeMask { c1, c2 } => Generated::Graph(eye_mask(c1, c2)?),
        GenSpec::Clown { k } => Generated::Graph(clown(k)?),
        GenSpec::Theta { paths } => Generated::Multigraph(theta(paths)?),
        GenSpec::Bicycle { c1, c2, path } => Generated::Multigraph(bicycle(c1, c2, path)?),
        GenSpec::Peculiar { size, clique, seed } => Generated::Graph(peculiar(size, clique, seed)?),
        GenSpec::LineOfHarmless { size, seed } => Generated::Graph(line_graph(&random_harmless(size, seed)?)?.0),
        GenSpec::AugmentedLine { size, rate, seed } => Generated::Graph(random_claw_free_innocent(seed, size, rate)?),
        GenSpec::GadgetExtension { size, seed } => Generated::Graph(gadget_extension(size, seed)?),
    })
}

pub fn hole(k: usize) -> Result<Graph> {
    if k < 4 {
        return Err(bad(format!("holes have length at least 4, got {k}")));
    }
    Ok(Graph::cycle(k))
}

fn cycle_edges(first: usize, len: usize, edges: &mut Vec<(usize, usize)>) {
    for i in 0..len {
        edges.push((first + i, first + (i + 1) % len));
    }
}

/// Path `i` occupies a consecutive block from `a_i` to `b_i`.
pub fn prism(paths: [usize; 3]) -> Result<Graph> {
    if paths.iter().any(|&l| l == 0) {
        return Err(bad("prism paths have length at least 1"));
    }
    let mut edges = Vec::new();
    let mut ends = Vec::new();
    let mut next = 0;
    for &l in &paths {
        for i in 0..l {
            edges.push((next + i, next + i + 1));
        }
        ends.push((next, next + l));
        next += l + 1;
    }
    for i in 0..3 {
        for j in i + 1..3 {
            edges.push((ends[i].0, ends[j].0));
            edges.push((ends[i].1, ends[j].1));
        }
    }
    Graph::from_edge_list(next, &edges)
}

pub fn handcuff(c1: usize, c2: usize, path: usize) -> Result<Graph> {
    even_cycle("c1", c1)?;
    even_cycle("c2", c2)?;
    if path % 2 == 0 {
        return Err(bad(format!("the handcuff path must have odd length, got {path}")));
    }
    let mut edges = Vec::new();
    cycle_edges(0, c1, &mut edges);
    cycle_edges(c1, c2, &mut edges);
    let p0 = c1 + c2;
    for i in 0..path {
        edges.push((p0 + i, p0 + i + 1));
    }
    let last = p0 + path;
    edges.extend([(p0, 0), (p0, 1), (last, c1), (last, c1 + 1)]);
    Graph::from_edge_list(last + 1, &edges)
}

pub fn eye_mask(c1: usize, c2: usize) -> Result<Graph> {
    even_cycle("c1", c1)?;
    even_cycle("c2", c2)?;
    let mut edges = Vec::new();
    cycle_edges(0, c1, &mut edges);
    cycle_edges(c1, c2, &mut edges);
    edges.extend([(0, c1), (0, c1 + 1), (1, c1), (1, c1 + 1)]);
    Graph::from_edge_list(c1 + c2, &edges)
}

pub fn clown(k: usize) -> Result<Graph> {
    even_cycle("k", k)?;
    let mut edges = Vec::new();
    cycle_edges(0, k, &mut edges);
    edges.extend([(k, 0), (k, 1)]);
    Graph::from_edge_list(k + 1, &edges)
}

/// Ends `0` and `1`; path interiors follow in order.
pub fn theta(paths: [usize; 3]) -> Result<Multigraph> {
    if paths.iter().any(|&l| l < 2 || l % 2 == 1) {
        return Err(bad("theta paths must be even with length at least 2"));
    }
    let mut edges = Vec::new();
    let mut next = 2;
    for &l in &paths {
        let mut prev = 0;
        for _ in 1..l {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, 1));
    }
    Multigraph::new(next, edges)
}

/// Cycle 1 on `0..c1`; the path leaves from vertex 0 and cycle 2 starts at
/// its far end (vertex 0 itself for a zero-length path).
pub fn bicycle(c1: usize, c2: usize, path: usize) -> Result<Multigraph> {
    even_cycle("c1", c1)?;
    even_cycle("c2", c2)?;
    if path % 2 == 1 {
        return Err(bad(format!("the bicycle path must have even length, got {path}")));
    }
    let mut edges = Vec::new();
    cycle_edges(0, c1, &mut edges);
    let mut next = c1;
    let mut end = 0;
    for _ in 0..path {
        edges.push((end, next));
        end = next;
        next += 1;
    }
    let mut prev = end;
    for _ in 1..c2 {
        edges.push((prev, next));
        prev = next;
        next += 1;
    }
    edges.push((prev, end));
    Multigraph::new(next, edges)
}

/// Blocks in the order `A_1, A_2, A_3, B_1, B_2, B_3, K_1, K_2, K_3`. Each
/// free pair `(A_i, B_{i+1})` gets nested neighborhoods with a non-edge.
pub fn peculiar(size: usize, clique: usize, seed: u64) -> Result<Graph> {
    if size == 0 {
        return Err(bad("peculiar parts need at least one vertex"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut blocks = Vec::new();
    let mut next = 0;
    for b in 0..9 {
        let len = if b < 6 { size } else { clique };
        blocks.push((next..next + len).collect::<Vec<usize>>());
        next += len;
    }
    let (a, b, k) = (&blocks[0..3], &blocks[3..6], &blocks[6..9]);
    let mut edges = Vec::new();
    let complete = |x: &[usize], y: &[usize], edges: &mut Vec<(usize, usize)>| {
        for &u in x {
            for &v in y {
                if u != v && !edges.contains(&(v, u)) {
                    edges.push((u, v));
                }
            }
        }
    };
    let all_a: Vec<usize> = a.concat();
    let all_b: Vec<usize> = b.concat();
    complete(&all_a, &all_a, &mut edges);
    complete(&all_b, &all_b, &mut edges);
    for i in 0..3 {
        complete(&k[i], &k[i], &mut edges);
        for j in 0..3 {
            if j != i {
                complete(&k[i], &a[j], &mut edges);
                complete(&k[i], &b[j], &mut edges);
            }
            if j != (i + 1) % 3 {
                complete(&a[i], &b[j], &mut edges);
            }
        }
        // a_t sees the first reach[t] vertices of B_{i+1}; reach[0] < size.
        let mut reach: Vec<usize> = (0..size).map(|_| rng.gen_range(0..=size)).collect();
        reach.sort_unstable();
        reach[0] = reach[0].min(size - 1);
        let partner = &b[(i + 1) % 3];
        for (t, &u) in a[i].iter().enumerate() {
            for &v in &partner[..reach[t]] {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(next, &edges)
}

/// A connected bipartite multigraph with `size` edges and no theta or bicycle
/// subgraph, grown one edge at a time; an edge that breaks harmlessness is
/// withdrawn and another tried.
pub fn random_harmless(size: usize, seed: u64) -> Result<Multigraph> {
    if size == 0 {
        return Err(bad("a root needs at least one edge"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut side = vec![false, true];
    let mut edges = vec![(0usize, 1usize)];
    let budget = Budget::default();
    let mut attempts = 0;
    while edges.len() < size {
        attempts += 1;
        if attempts > EDGE_ATTEMPTS * size {
            return Err(bad("harmless root generation ran out of attempts"));
        }
        let n = side.len();
        let roll: f64 = rng.gen();
        let candidate = if roll < 0.55 {
            let u = rng.gen_range(0..n);
            side.push(!side[u]);
            (u, n)
        } else if roll < 0.6 {
            edges[rng.gen_range(0..edges.len())]
        } else {
            let u = rng.gen_range(0..n);
            let opposite: Vec<usize> = (0..n).filter(|&v| side[v] != side[u]).collect();
            (u, *opposite.choose(&mut rng).expect("both sides are non-empty"))
        };
        edges.push(candidate);
        let b = Multigraph::new(side.len(), edges.clone())?;
        if is_harmless(&b, &budget)? != Harm::Harmless {
            edges.pop();
            if candidate.1 == side.len() - 1 && side.len() > n {
                side.pop();
            }
        }
    }
    Multigraph::new(side.len(), edges)
}

/// Edges in no triangle.
fn flat_edges(g: &Graph) -> Vec<(usize, usize)> {
    g.edges().into_iter().filter(|&(u, v)| !g.neighbors(u).intersects(g.neighbors(v))).collect()
}

/// Replaces the flat edge `xy` by cliques `{x, x'}` and `{y, y'}` with
/// `x - y`, `x' - y'` and optionally `x - y'`.
fn augment_flat_edge(g: &Graph, x: usize, y: usize, cross: bool) -> Result<Graph> {
    let xp = g.n();
    let h = g.with_vertex(g.neighbors(x).without(y).with(x))?;
    let mut nbrs = g.neighbors(y).without(x).with(y).with(xp);
    if cross {
        nbrs.insert(x);
    }
    h.with_vertex(nbrs)
}

fn claw_free_innocent(g: &Graph) -> Result<bool> {
    Ok(find_claw(g).is_none() && is_innocent(g, &Budget::default())?)
}

/// The line graph of a random harmless root with `size` edges, then each flat
/// edge augmented with probability `augment_rate`; augments that break
/// claw-freeness or innocence are undone.
pub fn random_claw_free_innocent(seed: u64, size: usize, augment_rate: f64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&augment_rate) {
        return Err(bad("augment rate must lie in [0, 1]"));
    }
    let root = random_harmless(size, seed)?;
    let mut g = line_graph(&root)?.0;
    if augment_rate > 0.0 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let mut used = VertexSet::new();
        let mut flat = flat_edges(&g);
        flat.shuffle(&mut rng);
        for (x, y) in flat {
            if used.contains(x) || used.contains(y) || !rng.gen_bool(augment_rate) {
                continue;
            }
            let h = augment_flat_edge(&g, x, y, rng.gen_bool(0.5))?;
            if claw_free_innocent(&h)? {
                g = h;
                used = used.with(x).with(y);
            }
        }
    }
    if !claw_free_innocent(&g)? {
        return Err(bad("generated graph failed the final claw-free and innocence check"));
    }
    Ok(g)
}

/// Greedy consistent set of safe vertices, lowest ids first.
pub fn consistent_safe_set(g: &Graph, b: &Budget) -> Result<VertexSet> {
    let mut z = VertexSet::new();
    for v in simplicial_vertices(g) {
        if g.neighbors(v).intersects(z) || !is_safe_vertex(g, v, PathMode::default(), b)? {
            continue;
        }
        if is_consistent_set(g, z.with(v), PathMode::default(), b)? {
            z.insert(v);
        }
    }
    Ok(z)
}

fn gadget_extension(size: usize, seed: u64) -> Result<Graph> {
    let g = random_claw_free_innocent(seed, size, 0.0)?;
    let z = consistent_safe_set(&g, &Budget::default())?;
    Ok(reduce_gadget(&g, z)?.graph)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forbidden::{find_structure, ForbiddenKind};
    use crate::linegraph::{find_bicycle, find_theta};

    #[test]
    fn sizes_and_constraints() {
        assert_eq!(hole(5).unwrap(), Graph::cycle(5));
        assert_eq!(handcuff(4, 4, 1).unwrap().n(), 10);
        assert_eq!(eye_mask(4, 4).unwrap().n(), 8);
        assert!(handcuff(4, 4, 2).is_err());
        assert!(eye_mask(5, 4).is_err());
        let p = prism([1, 1, 1]).unwrap();
        assert_eq!((p.n(), p.edge_count()), (6, 9));
    }

    #[test]
    fn detectors_confirm_members() {
        let b = Budget::default();
        let eye = eye_mask(4, 4).unwrap();
        assert!(find_structure(&eye, ForbiddenKind::EyeMask, &b).unwrap().is_some());
        let cuff = handcuff(4, 6, 3).unwrap();
        assert!(find_structure(&cuff, ForbiddenKind::Handcuff, &b).unwrap().is_some());
        let p = prism([1, 3, 5]).unwrap();
        assert!(find_structure(&p, ForbiddenKind::OddPrism, &b).unwrap().is_some());
        assert!(find_theta(&theta([2, 2, 4]).unwrap(), &b).unwrap().is_some());
        assert!(find_bicycle(&bicycle(4, 4, 0).unwrap(), &b).unwrap().is_some());
        assert!(find_bicycle(&bicycle(4, 6, 2).unwrap(), &b).unwrap().is_some());
    }

    #[test]
    fn random_generators_are_deterministic_and_innocent() {
        let root = random_harmless(10, 7).unwrap();
        assert_eq!(root.edge_count(), 10);
        assert!(root.is_connected() && root.is_bipartite());
        assert_eq!(root, random_harmless(10, 7).unwrap());
        let g = random_claw_free_innocent(3, 10, 0.5).unwrap();
        assert!(claw_free_innocent(&g).unwrap());
    }
}
