//! Induced and isometric path search, the width-2 oscillation metric, and
//! the constructive path builders.

mod induced;
mod interval;
mod isometric;
mod radial;
mod spine;
mod width2;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Distance, IncGraph};

pub use induced::{
    for_each_induced_path, induced_path_through_marked, longest_induced_path,
    longest_induced_path_with_budget, pairwise_detour, MarkedSearch,
};
pub use interval::{greedy_isometric_interval, GreedyInterval};
pub use isometric::{can_extend_isometric, isometric_layer_edges, longest_isometric_path};
pub use radial::{radial_growth, RadialRow};
pub use spine::{spine_construction, SpineResult};
pub use width2::{
    oscillation_distance, two_chain_partition, verify_width2_metric_bounds, OscillationMetric,
};

/// Node budget used when none is given.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Strength of a vertex sequence, from weakest to strongest.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PathKind {
    Walk,
    Path,
    Induced,
    Isometric,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PathWitness {
    pub vertices: Vec<usize>,
    pub kind: PathKind,
}

impl PathWitness {
    pub fn new(vertices: Vec<usize>, kind: PathKind) -> PathWitness {
        PathWitness { vertices, kind }
    }

    /// Number of edges.
    pub fn length(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn first(&self) -> Option<usize> {
        self.vertices.first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.vertices.last().copied()
    }

    /// Strongest kind the sequence satisfies in `g`, or `None` if
    /// consecutive vertices are not adjacent.
    pub fn strongest_kind(g: &IncGraph, vertices: &[usize]) -> Option<PathKind> {
        if vertices.windows(2).any(|w| !g.adjacent(w[0], w[1])) {
            return None;
        }
        let mut seen = std::collections::HashSet::new();
        if !vertices.iter().all(|v| seen.insert(*v)) {
            return Some(PathKind::Walk);
        }
        for i in 0..vertices.len() {
            for j in i + 2..vertices.len() {
                if g.adjacent(vertices[i], vertices[j]) {
                    return Some(PathKind::Path);
                }
            }
        }
        let Some(&v0) = vertices.first() else {
            return Some(PathKind::Isometric);
        };
        let row = g.distances_from(v0);
        let geodesic = vertices
            .iter()
            .enumerate()
            .all(|(i, &v)| row[v] == Distance::Finite(i));
        Some(if geodesic {
            PathKind::Isometric
        } else {
            PathKind::Induced
        })
    }

    /// Re-checks the invariants of `self.kind` in `g`.
    pub fn verify(&self, g: &IncGraph) -> bool {
        if self.vertices.iter().any(|&v| v >= g.len()) {
            return false;
        }
        matches!(Self::strongest_kind(g, &self.vertices), Some(k) if k >= self.kind)
    }
}

/// Result of an exact search that may stop at its node budget.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchOutcome {
    pub witness: PathWitness,
    /// False when the budget ran out before the search space was exhausted.
    pub optimal: bool,
    pub nodes: u64,
}

impl SearchOutcome {
    pub fn into_optimal(self) -> Result<PathWitness> {
        if self.optimal {
            Ok(self.witness)
        } else {
            Err(Error::SearchBudgetExceeded { best: self.witness })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kinds_on_c4() {
        let c4 = IncGraph::cycle(4);
        assert_eq!(PathWitness::strongest_kind(&c4, &[0, 1, 2]), Some(PathKind::Isometric));
        assert_eq!(PathWitness::strongest_kind(&c4, &[0, 1, 2, 3]), Some(PathKind::Path));
        assert_eq!(PathWitness::strongest_kind(&c4, &[0, 1, 0]), Some(PathKind::Walk));
        assert_eq!(PathWitness::strongest_kind(&c4, &[0, 2]), None);
        let p = IncGraph::path(5);
        let w = PathWitness::new(vec![1, 2, 3], PathKind::Induced);
        assert!(w.verify(&p));
        assert_eq!(w.length(), 2);
    }

    #[test]
    fn induced_but_not_isometric() {
        let c5 = IncGraph::cycle(5);
        assert_eq!(PathWitness::strongest_kind(&c5, &[0, 1, 2, 3]), Some(PathKind::Induced));
    }
}
