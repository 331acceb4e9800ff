use serde::Serialize;

use super::{PathKind, PathWitness};
use crate::error::{Error, Result};
use crate::graph::{Distance, IncGraph};
use crate::poset::Poset;
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, Serialize)]
pub struct GreedyInterval {
    pub path: PathWitness,
    /// The search ran on `Inc(x_0) ∪ ↓x_0` (through the dual order).
    pub lower_side: bool,
    /// Eligible next vertices that still had a continuation, per step.
    pub candidates: Vec<Vec<usize>>,
    /// Every recorded candidate set is an antichain of the poset.
    pub candidates_are_antichains: bool,
}

/// Greedy isometric path from `x0` in an interval order.
///
/// Works inside `F = Inc(x0) ∪ ↑x0` or `I = Inc(x0) ∪ ↓x0`, whichever holds
/// the longer isometric path from `x0`. Each step moves to a neighbour of
/// the last vertex one BFS layer farther from `x0`, above the vertex two
/// steps back, and among those picks the one with the longest isometric
/// continuation inside the side (ties to the least index).
pub fn greedy_isometric_interval(p: &Poset, x0: usize) -> Result<GreedyInterval> {
    if x0 >= p.len() {
        return Err(Error::IndexOutOfRange { index: x0, n: p.len() });
    }
    if !p.is_interval_order() {
        return Err(Error::NotIntervalOrder);
    }
    let g = IncGraph::from_poset(p);
    if !g.is_connected() {
        return Err(Error::IncGraphDisconnected);
    }
    let upper = run(p, &g, x0);
    let lower = run(&p.dual(), &g, x0);
    let (mut best, lower_side) = if lower.path.length() > upper.path.length() {
        (lower, true)
    } else {
        (upper, false)
    };
    best.lower_side = lower_side;
    best.candidates_are_antichains = best
        .candidates
        .iter()
        .all(|c| c.iter().all(|&a| c.iter().all(|&b| p.incomparable(a, b) || a == b)));
    Ok(best)
}

fn run(q: &Poset, g: &IncGraph, x0: usize) -> GreedyInterval {
    let n = q.len();
    let mut side = VertexSet::full(n);
    side.difference_with(q.strict_down(x0));
    let dist = g.distances_from(x0);
    let layer = |v: usize| dist[v].finite().expect("connected");

    // reach[v]: longest isometric continuation from v inside the side.
    let mut order: Vec<usize> = side.to_vec();
    order.sort_by_key(|&v| std::cmp::Reverse(layer(v)));
    let mut reach = vec![0usize; n];
    for &v in &order {
        reach[v] = g
            .neighbors(v)
            .iter()
            .filter(|&w| side.contains(w) && dist[w] == Distance::Finite(layer(v) + 1))
            .map(|w| reach[w] + 1)
            .max()
            .unwrap_or(0);
    }

    let mut path = vec![x0];
    let mut candidates = Vec::new();
    loop {
        let k = path.len() - 1;
        let last = path[k];
        let eligible: Vec<usize> = g
            .neighbors(last)
            .iter()
            .filter(|&w| side.contains(w) && dist[w] == Distance::Finite(k + 1))
            .filter(|&w| k == 0 || q.less(path[k - 1], w))
            .collect();
        let Some(&next) = eligible.iter().max_by_key(|&&w| (reach[w], std::cmp::Reverse(w))) else {
            break;
        };
        candidates.push(eligible.iter().copied().filter(|&w| reach[w] > 0).collect());
        path.push(next);
    }
    GreedyInterval {
        path: PathWitness::new(path, PathKind::Isometric),
        lower_side: false,
        candidates,
        candidates_are_antichains: true,
    }
}
