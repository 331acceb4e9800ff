use serde::Serialize;

use super::{PathKind, PathWitness};
use crate::error::{Error, Result};
use crate::graph::{Distance, IncGraph};
use crate::poset::Poset;

#[derive(Clone, Debug, Serialize)]
pub struct SpineResult {
    /// `x_0, x_1, ..., x_{3k}` as a walk in the inc graph.
    pub walk: PathWitness,
    /// `x_0, x_3, ..., x_{3k}`.
    pub anchors: Vec<usize>,
    /// Distinct walk vertices in order of first appearance.
    pub vertices: Vec<usize>,
    #[serde(skip)]
    pub subposet: Poset,
    pub steps_done: usize,
    /// No comparable vertex at distance 3 was left before `steps` steps.
    pub stopped_early: bool,
    /// The construction ran in the dual because the lower side of `x_0`
    /// reaches farther than the upper side.
    pub dualized: bool,
    /// `d(x_0, x_{3n}) >= n + 2` for every `1 <= n <= steps_done`.
    pub distance_bound_holds: bool,
    /// Largest inc-degree inside the spine subposet.
    pub max_spine_degree: usize,
}

impl SpineResult {
    pub fn degree_bound_holds(&self) -> bool {
        self.max_spine_degree <= 6
    }
}

fn farthest(g: &IncGraph, x0: usize, side: impl Iterator<Item = usize>) -> Option<Distance> {
    side.map(|y| g.dist(x0, y)).max()
}

/// Builds `x_0 < x_3 < x_6 < ...` where each `x_{3(n+1)}` is the least-index
/// element above `x_{3n}` at inc-graph distance exactly 3, joined by the
/// lexicographically least connecting path `x_{3n}, a, b, x_{3(n+1)}`.
/// The upper side is used unless elements below `x_0` reach strictly
/// farther, in which case the dual order is used.
pub fn spine_construction(p: &Poset, x0: usize, steps: usize) -> Result<SpineResult> {
    if x0 >= p.len() {
        return Err(Error::IndexOutOfRange { index: x0, n: p.len() });
    }
    let g = IncGraph::from_poset(p);
    if !g.is_connected() {
        return Err(Error::IncGraphDisconnected);
    }
    let up = farthest(&g, x0, p.strict_up(x0).iter());
    let down = farthest(&g, x0, p.strict_down(x0).iter());
    let dualized = down > up;
    let q = if dualized { p.dual() } else { p.clone() };

    let mut walk = vec![x0];
    let mut anchors = vec![x0];
    let mut stopped_early = false;
    let mut cur = x0;
    for _ in 0..steps {
        let Some(y) = q.strict_up(cur).iter().find(|&y| g.dist(cur, y) == Distance::Finite(3)) else {
            stopped_early = true;
            break;
        };
        let (a, b) = g
            .neighbors(cur)
            .iter()
            .find_map(|a| {
                g.neighbors(a)
                    .iter()
                    .find(|&b| g.adjacent(b, y))
                    .map(|b| (a, b))
            })
            .expect("distance 3 implies a connecting path");
        walk.extend([a, b, y]);
        anchors.push(y);
        cur = y;
    }

    let mut vertices = Vec::new();
    for &v in &walk {
        if !vertices.contains(&v) {
            vertices.push(v);
        }
    }
    let subposet = p.subposet(&vertices);
    let sub_g = IncGraph::from_poset(&subposet);
    let max_spine_degree = (0..sub_g.len()).map(|v| sub_g.degree(v)).max().unwrap_or(0);
    let distance_bound_holds = anchors
        .iter()
        .enumerate()
        .skip(1)
        .all(|(n, &a)| g.dist(x0, a) >= Distance::Finite(n + 2));
    Ok(SpineResult {
        walk: PathWitness::new(walk, PathKind::Walk),
        steps_done: anchors.len() - 1,
        anchors,
        vertices,
        subposet,
        stopped_early,
        dualized,
        distance_bound_holds,
        max_spine_degree,
    })
}
