use super::{PathKind, PathWitness, SearchOutcome, DEFAULT_BUDGET};
use crate::graph::IncGraph;
use crate::vertex_set::VertexSet;

/// Longest induced path with the default node budget. See
/// [`longest_induced_path_with_budget`].
pub fn longest_induced_path(g: &IncGraph, from: Option<usize>, cap: Option<usize>) -> SearchOutcome {
    longest_induced_path_with_budget(g, from, cap, DEFAULT_BUDGET)
}

/// Exhaustive DFS for a longest induced path, optionally anchored at `from`.
///
/// Candidates are tried in increasing degree order. A branch is cut when the
/// path plus every vertex still reachable through non-blocked vertices cannot
/// beat the incumbent. The search stops early once a path of `cap` edges is
/// found; in that case `optimal` means "a path of at least `cap` edges
/// exists". When `budget` nodes are expanded first, the best path so far
/// is returned with `optimal = false`.
pub fn longest_induced_path_with_budget(
    g: &IncGraph,
    from: Option<usize>,
    cap: Option<usize>,
    budget: u64,
) -> SearchOutcome {
    let n = g.len();
    let mut s = Search {
        g,
        path: Vec::new(),
        best: Vec::new(),
        nodes: 0,
        budget,
        cap_vertices: cap.map(|c| c + 1),
        exhausted: false,
        capped: false,
    };
    let starts: Vec<usize> = match from {
        Some(v) => vec![v],
        None => {
            let mut all: Vec<usize> = (0..n).collect();
            all.sort_by_key(|&v| (g.degree(v), v));
            all
        }
    };
    for v in starts {
        let comp = g.ball(v, n).len();
        if comp <= s.best.len() {
            continue;
        }
        s.path.push(v);
        s.extend(&VertexSet::new(n));
        s.path.pop();
        if s.exhausted || s.capped {
            break;
        }
    }
    SearchOutcome {
        witness: PathWitness::new(s.best, PathKind::Induced),
        optimal: !s.exhausted,
        nodes: s.nodes,
    }
}

struct Search<'a> {
    g: &'a IncGraph,
    path: Vec<usize>,
    best: Vec<usize>,
    nodes: u64,
    budget: u64,
    cap_vertices: Option<usize>,
    exhausted: bool,
    capped: bool,
}

impl Search<'_> {
    /// `forbidden` is the union of closed neighbourhoods of every path
    /// vertex except the last.
    fn extend(&mut self, forbidden: &VertexSet) {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return;
        }
        if self.path.len() > self.best.len() {
            self.best = self.path.clone();
            if self.cap_vertices.is_some_and(|c| self.best.len() >= c) {
                self.capped = true;
                return;
            }
        }
        let v = *self.path.last().expect("non-empty path");
        let mut open = VertexSet::full(self.g.len());
        open.difference_with(forbidden);
        open.remove(v);
        let mut candidates: Vec<usize> = self.g.neighbors(v).intersection(&open).to_vec();
        if candidates.is_empty() {
            return;
        }
        if self.path.len() + reachable(self.g, &candidates, &open) <= self.best.len() {
            return;
        }
        candidates.sort_by_key(|&c| (self.g.degree(c), c));
        let mut next = forbidden.union(self.g.neighbors(v));
        next.insert(v);
        for c in candidates {
            self.path.push(c);
            self.extend(&next);
            self.path.pop();
            if self.exhausted || self.capped {
                return;
            }
        }
    }
}

/// Number of vertices of `open` reachable from `seeds` inside `open`.
fn reachable(g: &IncGraph, seeds: &[usize], open: &VertexSet) -> usize {
    reachable_set(g, seeds, open).len()
}

fn reachable_set(g: &IncGraph, seeds: &[usize], open: &VertexSet) -> VertexSet {
    let mut seen = VertexSet::from_slice(g.len(), seeds);
    let mut frontier = seen.clone();
    while !frontier.is_empty() {
        let mut next = VertexSet::new(g.len());
        for u in frontier.iter() {
            next.union_with(g.neighbors(u));
        }
        next.intersect_with(open);
        next.difference_with(&seen);
        seen.union_with(&next);
        frontier = next;
    }
    seen
}

/// Result of [`induced_path_through_marked`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedSearch {
    pub witness: Option<PathWitness>,
    /// False when the budget ran out before the search space was exhausted.
    pub complete: bool,
    pub nodes: u64,
}

/// Looks for an induced path containing at least `k` vertices of `marked`.
/// Such a path can be cut down to one that starts at a marked vertex, so
/// only those are used as starts. A branch is cut when the marked vertices
/// still reachable through non-blocked vertices cannot reach `k`.
pub fn induced_path_through_marked(g: &IncGraph, marked: &VertexSet, k: usize, budget: u64) -> MarkedSearch {
    struct S<'a> {
        g: &'a IncGraph,
        marked: &'a VertexSet,
        k: usize,
        path: Vec<usize>,
        hits: usize,
        nodes: u64,
        budget: u64,
        found: Option<Vec<usize>>,
        exhausted: bool,
    }
    impl S<'_> {
        fn extend(&mut self, forbidden: &VertexSet) {
            self.nodes += 1;
            if self.nodes > self.budget {
                self.exhausted = true;
                return;
            }
            if self.hits >= self.k {
                self.found = Some(self.path.clone());
                return;
            }
            let v = *self.path.last().expect("non-empty path");
            let mut open = VertexSet::full(self.g.len());
            open.difference_with(forbidden);
            open.remove(v);
            let candidates: Vec<usize> = self.g.neighbors(v).intersection(&open).to_vec();
            if candidates.is_empty() {
                return;
            }
            let reach = reachable_set(self.g, &candidates, &open);
            if self.hits + reach.intersection_len(self.marked) < self.k {
                return;
            }
            let mut next = forbidden.union(self.g.neighbors(v));
            next.insert(v);
            for c in candidates {
                let hit = usize::from(self.marked.contains(c));
                self.path.push(c);
                self.hits += hit;
                self.extend(&next);
                self.hits -= hit;
                self.path.pop();
                if self.exhausted || self.found.is_some() {
                    return;
                }
            }
        }
    }
    let n = g.len();
    let mut s = S {
        g,
        marked,
        k,
        path: Vec::new(),
        hits: 0,
        nodes: 0,
        budget,
        found: None,
        exhausted: false,
    };
    for v in marked.iter() {
        s.path = vec![v];
        s.hits = 1;
        s.extend(&VertexSet::new(n));
        if s.exhausted || s.found.is_some() {
            break;
        }
    }
    if k == 0 {
        s.found = Some(Vec::new());
    }
    MarkedSearch {
        witness: s.found.map(|v| PathWitness::new(v, PathKind::Induced)),
        complete: !s.exhausted,
        nodes: s.nodes,
    }
}

/// Calls `visit` on every induced path starting at `start`, including the
/// one-vertex path. Returning `false` from `visit` prunes extensions of
/// that path.
pub fn for_each_induced_path(g: &IncGraph, start: usize, mut visit: impl FnMut(&[usize]) -> bool) {
    fn rec(g: &IncGraph, path: &mut Vec<usize>, forbidden: &VertexSet, visit: &mut dyn FnMut(&[usize]) -> bool) {
        if !visit(path) {
            return;
        }
        let v = *path.last().unwrap();
        let mut next = forbidden.union(g.neighbors(v));
        next.insert(v);
        let candidates = g.neighbors(v).difference(forbidden);
        for c in candidates.iter() {
            path.push(c);
            rec(g, path, &next, visit);
            path.pop();
        }
    }
    let mut path = vec![start];
    rec(g, &mut path, &VertexSet::new(g.len()), &mut visit);
}

/// `D(x, y)`: the largest length of an induced path with extremities `x`
/// and `y`, or `None` when they lie in different components.
pub fn pairwise_detour(g: &IncGraph) -> Vec<Vec<Option<usize>>> {
    let n = g.len();
    let mut d = vec![vec![None; n]; n];
    for (x, row) in d.iter_mut().enumerate() {
        for_each_induced_path(g, x, |p| {
            let y = *p.last().unwrap();
            let len = p.len() - 1;
            if row[y].is_none_or(|old| old < len) {
                row[y] = Some(len);
            }
            true
        });
    }
    d
}
