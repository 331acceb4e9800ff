//! Incomparability graphs and their metric primitives.

use std::collections::VecDeque;
use std::fmt;
use std::sync::OnceLock;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::vertex_set::VertexSet;

/// Shortest-path length, or `Infinite` across components.
/// `Infinite` compares greater than every finite distance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }

    pub fn within(self, r: usize) -> bool {
        matches!(self, Distance::Finite(d) if d <= r)
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Distance {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Distance::Finite(d) => s.serialize_u64(*d as u64),
            Distance::Infinite => s.serialize_str("inf"),
        }
    }
}

/// A simple undirected graph, usually the incomparability graph of a poset.
/// BFS rows are computed on first use and cached.
#[derive(Clone)]
pub struct IncGraph {
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
    from_poset: bool,
    rows: Vec<OnceLock<Vec<Distance>>>,
}

impl PartialEq for IncGraph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for IncGraph {}

impl fmt::Debug for IncGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IncGraph")
            .field("n", &self.len())
            .field("edges", &self.edges())
            .finish()
    }
}

impl IncGraph {
    fn from_rows(adj: Vec<VertexSet>, labels: Option<Vec<String>>, from_poset: bool) -> IncGraph {
        let rows = (0..adj.len()).map(|_| OnceLock::new()).collect();
        IncGraph {
            adj,
            labels,
            from_poset,
            rows,
        }
    }

    /// Joins exactly the incomparable pairs of `p`.
    pub fn from_poset(p: &Poset) -> IncGraph {
        let n = p.len();
        let mut adj = vec![VertexSet::full(n); n];
        for (v, row) in adj.iter_mut().enumerate() {
            row.remove(v);
            row.difference_with(p.strict_up(v));
            row.difference_with(p.strict_down(v));
        }
        Self::from_rows(adj, p.labels().map(<[String]>::to_vec), true)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<IncGraph> {
        let mut adj = vec![VertexSet::new(n); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::IndexOutOfRange { index: x, n });
                }
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop at {u}")));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Self::from_rows(adj, None, false))
    }

    /// Path graph on `n` vertices `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> IncGraph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges).expect("valid path")
    }

    pub fn cycle(n: usize) -> IncGraph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edges(n, &edges).expect("valid cycle")
    }

    pub fn complete(n: usize) -> IncGraph {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j));
            }
        }
        Self::from_edges(n, &edges).expect("valid clique")
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> IncGraph {
        assert_eq!(labels.len(), self.len());
        self.labels = Some(labels);
        self
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn is_from_poset(&self) -> bool {
        self.from_poset
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.len() {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// `hist[d]` = number of vertices of degree `d`.
    pub fn degree_histogram(&self) -> Vec<usize> {
        let max = (0..self.len()).map(|v| self.degree(v)).max().unwrap_or(0);
        let mut hist = vec![0; max + 1];
        for v in 0..self.len() {
            hist[self.degree(v)] += 1;
        }
        hist
    }

    pub fn complement(&self) -> IncGraph {
        let n = self.len();
        let adj = (0..n)
            .map(|v| {
                let mut row = VertexSet::full(n);
                row.difference_with(&self.adj[v]);
                row.remove(v);
                row
            })
            .collect();
        Self::from_rows(adj, self.labels.clone(), false)
    }

    /// Induced subgraph on `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> IncGraph {
        let m = vertices.len();
        let mut adj = vec![VertexSet::new(m); m];
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate() {
                if self.adjacent(u, v) {
                    adj[a].insert(b);
                }
            }
        }
        let labels = self
            .labels
            .as_ref()
            .map(|l| vertices.iter().map(|&v| l[v].clone()).collect());
        Self::from_rows(adj, labels, false)
    }

    /// Distances from `x` to every vertex (cached).
    pub fn distances_from(&self, x: usize) -> &[Distance] {
        self.rows[x].get_or_init(|| self.bfs(&[x]))
    }

    fn bfs(&self, sources: &[usize]) -> Vec<Distance> {
        let mut dist = vec![Distance::Infinite; self.len()];
        let mut queue = VecDeque::new();
        for &s in sources {
            if dist[s] == Distance::Infinite {
                dist[s] = Distance::Finite(0);
                queue.push_back((s, 0));
            }
        }
        while let Some((u, d)) = queue.pop_front() {
            for v in self.adj[u].iter() {
                if dist[v] == Distance::Infinite {
                    dist[v] = Distance::Finite(d + 1);
                    queue.push_back((v, d + 1));
                }
            }
        }
        dist
    }

    /// Distance without bounds checks on the indices.
    pub fn dist(&self, x: usize, y: usize) -> Distance {
        self.distances_from(x)[y]
    }

    pub fn distance(&self, x: usize, y: usize) -> Result<Distance> {
        let n = self.len();
        for v in [x, y] {
            if v >= n {
                return Err(Error::IndexOutOfRange { index: v, n });
            }
        }
        Ok(self.dist(x, y))
    }

    /// `B(x, r)`.
    pub fn ball(&self, x: usize, r: usize) -> VertexSet {
        let mut out = VertexSet::new(self.len());
        for (v, d) in self.distances_from(x).iter().enumerate() {
            if d.within(r) {
                out.insert(v);
            }
        }
        out
    }

    /// `B(X, r)`: vertices within distance `r` of some member of `x`.
    pub fn ball_set(&self, x: &VertexSet, r: usize) -> VertexSet {
        let mut out = x.clone();
        let mut frontier = x.clone();
        for _ in 0..r {
            let mut next = VertexSet::new(self.len());
            for v in frontier.iter() {
                next.union_with(&self.adj[v]);
            }
            next.difference_with(&out);
            if next.is_empty() {
                break;
            }
            out.union_with(&next);
            frontier = next;
        }
        out
    }

    pub fn eccentricity(&self, x: usize) -> Distance {
        self.distances_from(x)
            .iter()
            .copied()
            .max()
            .unwrap_or(Distance::Finite(0))
    }

    /// Largest finite distance from `x`, i.e. its eccentricity inside its component.
    pub fn component_eccentricity(&self, x: usize) -> usize {
        self.distances_from(x)
            .iter()
            .filter_map(|d| d.finite())
            .max()
            .unwrap_or(0)
    }

    pub fn diameter(&self) -> Distance {
        (0..self.len())
            .map(|v| self.eccentricity(v))
            .max()
            .unwrap_or(Distance::Finite(0))
    }

    /// Largest distance in `G` between two members of `s`.
    pub fn diameter_of_set(&self, s: &VertexSet) -> Distance {
        let members = s.to_vec();
        let mut best = Distance::Finite(0);
        for (i, &u) in members.iter().enumerate() {
            let row = self.distances_from(u);
            for &v in &members[i + 1..] {
                best = best.max(row[v]);
            }
        }
        best
    }

    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::new(self.len());
        let mut out = Vec::new();
        for s in 0..self.len() {
            if seen.contains(s) {
                continue;
            }
            let comp = self.ball(s, self.len());
            seen.union_with(&comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.len() <= 1 || self.eccentricity(0).is_finite()
    }

    /// Intersection of all balls `B(v, r)` containing `x`, with `r` up to the
    /// eccentricity of `v` in its component. When `x` meets several
    /// components no such ball exists and the union of those components is
    /// returned.
    pub fn metric_convex_hull(&self, x: &VertexSet) -> VertexSet {
        let n = self.len();
        let Some(x0) = x.first() else {
            return VertexSet::new(n);
        };
        let comp = self.ball(x0, n);
        if !x.is_subset(&comp) {
            let mut out = VertexSet::new(n);
            for c in self.components() {
                if !c.is_disjoint(x) {
                    out.union_with(&c);
                }
            }
            return out;
        }
        let mut hull = comp.clone();
        for v in comp.iter() {
            let row = self.distances_from(v);
            let r = x.iter().filter_map(|u| row[u].finite()).max().unwrap_or(0);
            hull.intersect_with(&self.ball(v, r));
        }
        hull
    }

    /// Graphviz text; vertices are named by label.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph inc {\n");
        for v in 0..self.len() {
            out.push_str(&format!("  {v} [label=\"{}\"];\n", escape(&self.label(v))));
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
        out.push_str("}\n");
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fence4() -> Poset {
        Poset::from_relation(4, &[(0, 1), (2, 1), (2, 3)]).unwrap()
    }

    #[test]
    fn inc_graphs_of_small_posets() {
        assert_eq!(IncGraph::from_poset(&Poset::chain(4)).edge_count(), 0);
        assert_eq!(IncGraph::from_poset(&Poset::antichain(3)), IncGraph::complete(3));
        let c4 = IncGraph::from_poset(&Poset::two_plus_two());
        assert_eq!(c4.edges(), vec![(0, 2), (0, 3), (1, 2), (1, 3)]);
        let dual = IncGraph::from_poset(&Poset::two_plus_two().dual());
        assert_eq!(c4, dual);
    }

    #[test]
    fn distances() {
        let p5 = IncGraph::path(5);
        assert_eq!(p5.distance(0, 4), Ok(Distance::Finite(4)));
        let g = IncGraph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(g.dist(0, 2), Distance::Infinite);
        assert!(g.distance(0, 3).is_err());
        let f = IncGraph::from_poset(&fence4());
        assert_eq!(f.dist(2, 1), Distance::Finite(3));
    }

    #[test]
    fn balls() {
        let c4 = IncGraph::cycle(4);
        assert_eq!(c4.ball(0, 0).to_vec(), vec![0]);
        assert_eq!(c4.ball(0, 1).len(), 3);
        let p = IncGraph::path(7);
        let x = VertexSet::from_slice(7, &[1, 5]);
        for r in 1..4 {
            assert_eq!(p.ball_set(&x, r), p.ball_set(&p.ball_set(&x, 1), r - 1));
        }
    }

    #[test]
    fn diameters() {
        assert_eq!(IncGraph::cycle(4).diameter(), Distance::Finite(2));
        assert_eq!(IncGraph::from_edges(2, &[]).unwrap().diameter(), Distance::Infinite);
        let p = IncGraph::path(6);
        assert_eq!(p.diameter_of_set(&VertexSet::from_slice(6, &[1, 2, 4])), Distance::Finite(3));
    }

    #[test]
    fn metric_hulls() {
        let c4 = IncGraph::cycle(4);
        let x = VertexSet::from_slice(4, &[0, 2]);
        assert_eq!(c4.metric_convex_hull(&x), x);
        let single = VertexSet::from_slice(4, &[1]);
        assert_eq!(c4.metric_convex_hull(&single), single);
        assert!(c4.metric_convex_hull(&VertexSet::new(4)).is_empty());
        let p = IncGraph::path(5);
        assert_eq!(p.metric_convex_hull(&VertexSet::from_slice(5, &[1, 3])).to_vec(), vec![1, 2, 3]);
        let split = IncGraph::from_edges(4, &[(0, 1)]).unwrap();
        assert_eq!(split.metric_convex_hull(&VertexSet::from_slice(4, &[0, 2])).to_vec(), vec![0, 1, 2]);
    }

    #[test]
    fn dot_export() {
        let g = IncGraph::from_poset(&Poset::two_plus_two().with_labels(vec!["a", "b", "c", "d"]).unwrap());
        let dot = g.to_dot();
        assert_eq!(dot.matches(" -- ").count(), 4);
        assert!(dot.contains("label=\"c\""));
    }

    #[test]
    fn infinity_is_largest() {
        assert!(Distance::Infinite > Distance::Finite(usize::MAX));
        assert!(!Distance::Infinite.within(10));
    }
}
