//! Exhaustive enumeration of small graphs up to isomorphism.

use std::collections::{BTreeMap, HashSet};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Canonical codes use one bit per vertex pair in a `u64`.
pub const MAX_ENUMERATION_VERTICES: usize = 11;

/// The largest upper-triangle code over relabellings that list vertices by
/// decreasing degree. Equal codes mean isomorphic graphs.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= MAX_ENUMERATION_VERTICES, "canonical codes need at most {MAX_ENUMERATION_VERTICES} vertices");
    let mut degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    let mut best = 0u64;
    let mut order = Vec::with_capacity(n);
    extend(g, &degrees, &mut order, VertexSet::new(), 0, &mut best);
    best
}

/// Position `p` takes a vertex of degree `degrees[p]`; `code` holds the bits
/// of the placed prefix, compared against `best` on the same prefix.
fn extend(g: &Graph, degrees: &[usize], order: &mut Vec<usize>, used: VertexSet, code: u64, best: &mut u64) {
    let p = order.len();
    let n = degrees.len();
    if p == n {
        *best = (*best).max(code);
        return;
    }
    let bits_after = pair_count(n) - pair_count(p + 1);
    for v in 0..n {
        if used.contains(v) || g.degree(v) != degrees[p] {
            continue;
        }
        let mut c = code;
        for &u in order.iter() {
            c = (c << 1) | g.adjacent(u, v) as u64;
        }
        // Prune when the prefix can no longer beat the best code.
        if (c << bits_after) | ((1u64 << bits_after) - 1) < *best {
            continue;
        }
        order.push(v);
        extend(g, degrees, order, used.with(v), c, best);
        order.pop();
    }
}

fn pair_count(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

/// The graph with the given canonical code.
pub fn from_code(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = pair_count(n);
    for j in 1..n {
        for i in 0..j {
            bit -= 1;
            if code >> bit & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edge_list(n, &edges).expect("codes describe simple graphs")
}

/// All graphs on `0..=max_n` vertices, one per isomorphism class, whose
/// every induced subgraph passes `keep`. `keep` must be hereditary; each
/// level is built by adding a vertex to the previous one in every way.
pub fn enumerate_hereditary(max_n: usize, keep: &dyn Fn(&Graph) -> bool) -> Result<Vec<Vec<Graph>>> {
    if max_n > MAX_ENUMERATION_VERTICES {
        return Err(Error::TooLarge { n: max_n, max: MAX_ENUMERATION_VERTICES });
    }
    let mut levels = vec![vec![Graph::empty(0)]];
    for n in 1..=max_n {
        let mut next: BTreeMap<u64, Graph> = BTreeMap::new();
        let mut rejected: HashSet<u64> = HashSet::new();
        for g in &levels[n - 1] {
            for mask in 0u128..(1u128 << (n - 1)) {
                let h = g.with_vertex(VertexSet::from_bits(mask))?;
                let code = canonical_code(&h);
                if next.contains_key(&code) || rejected.contains(&code) {
                    continue;
                }
                if keep(&h) {
                    next.insert(code, from_code(n, code));
                } else {
                    rejected.insert(code);
                }
            }
        }
        levels.push(next.into_values().collect());
    }
    Ok(levels)
}
