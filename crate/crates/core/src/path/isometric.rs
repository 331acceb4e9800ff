use super::{PathKind, PathWitness, SearchOutcome};
use crate::error::{Error, Result};
use crate::graph::{Distance, IncGraph};

/// Longest isometric path, from `from` or from the best start vertex.
///
/// An isometric path from `v` is a directed path in the BFS layer DAG of
/// `v` (edges between consecutive layers), so a longest-path pass over the
/// layers is exact; the result always has the eccentricity of its start
/// inside its component as length.
pub fn longest_isometric_path(g: &IncGraph, from: Option<usize>) -> SearchOutcome {
    let starts: Vec<usize> = match from {
        Some(v) => vec![v],
        None => (0..g.len()).collect(),
    };
    let mut best: Vec<usize> = Vec::new();
    let mut nodes = 0u64;
    for v in starts {
        let (path, work) = longest_from(g, v);
        nodes += work;
        if path.len() > best.len() {
            best = path;
        }
    }
    SearchOutcome {
        witness: PathWitness::new(best, PathKind::Isometric),
        optimal: true,
        nodes,
    }
}

fn longest_from(g: &IncGraph, v0: usize) -> (Vec<usize>, u64) {
    let dist = g.distances_from(v0);
    let mut order: Vec<usize> = (0..g.len()).filter(|&v| dist[v].is_finite()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(dist[v]));
    let mut height = vec![0usize; g.len()];
    let mut next = vec![usize::MAX; g.len()];
    let mut work = 0u64;
    for &v in &order {
        let dv = dist[v].finite().unwrap();
        for w in g.neighbors(v).iter() {
            work += 1;
            if dist[w] == Distance::Finite(dv + 1) && (next[v] == usize::MAX || height[w] + 1 > height[v]) {
                height[v] = height[w] + 1;
                next[v] = w;
            }
        }
    }
    let mut path = vec![v0];
    let mut cur = v0;
    while next[cur] != usize::MAX {
        cur = next[cur];
        path.push(cur);
    }
    (path, work)
}

/// Edges `(u, w)` of the BFS layer DAG of `v0`: `u ~ w` and
/// `d(v0, w) = d(v0, u) + 1`. Every isometric path from `v0` follows these.
pub fn isometric_layer_edges(g: &IncGraph, v0: usize) -> Vec<(usize, usize)> {
    let dist = g.distances_from(v0);
    let mut out = Vec::new();
    for u in 0..g.len() {
        let Some(du) = dist[u].finite() else { continue };
        for w in g.neighbors(u).iter() {
            if dist[w] == Distance::Finite(du + 1) {
                out.push((u, w));
            }
        }
    }
    out
}

/// Whether the isometric path `w` can be prolonged by one vertex.
///
/// With `x_next`, checks that appending it keeps the path isometric.
/// Without, tests `B(x_n, 1) ⊄ B(x_0, n)`: some neighbour of the last vertex
/// lies farther than `n` from the first.
pub fn can_extend_isometric(g: &IncGraph, w: &PathWitness, x_next: Option<usize>) -> Result<bool> {
    if w.kind != PathKind::Isometric {
        return Err(Error::KindMismatch {
            expected: PathKind::Isometric,
            got: w.kind,
        });
    }
    let (Some(x0), Some(xn)) = (w.first(), w.last()) else {
        return Ok(false);
    };
    let n = w.length();
    let row = g.distances_from(x0);
    Ok(match x_next {
        Some(x) => g.adjacent(xn, x) && row[x] == Distance::Finite(n + 1),
        None => g.neighbors(xn).iter().any(|y| !row[y].within(n)),
    })
}
