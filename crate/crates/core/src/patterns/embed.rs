use super::{classify_pattern, PatternMatch};
use crate::error::{Error, Result};
use crate::graph::IncGraph;
use crate::path::DEFAULT_BUDGET;

/// [`embeds_induced_with_budget`] with the default node budget.
pub fn embeds_induced(h: &IncGraph, g: &IncGraph) -> Result<Option<PatternMatch>> {
    embeds_induced_with_budget(h, g, DEFAULT_BUDGET)
}

/// Backtracking search for an induced copy of `h` in `g`.
///
/// Pattern vertices are placed most-constrained first (most already
/// placed neighbours, then highest degree); a host candidate must have at
/// least the pattern degree and agree on adjacency and non-adjacency with
/// every placed vertex.
pub fn embeds_induced_with_budget(h: &IncGraph, g: &IncGraph, budget: u64) -> Result<Option<PatternMatch>> {
    Ok(find_embedding(h, g, budget)?.map(|map| PatternMatch {
        kind: classify_pattern(h),
        map,
        spine_len: 0,
    }))
}

pub(super) fn find_embedding(h: &IncGraph, g: &IncGraph, budget: u64) -> Result<Option<Vec<usize>>> {
    let k = h.len();
    if k > g.len() {
        return Ok(None);
    }
    let mut order = Vec::with_capacity(k);
    let mut placed = vec![false; k];
    for _ in 0..k {
        let u = (0..k)
            .filter(|&u| !placed[u])
            .max_by_key(|&u| {
                let links = order.iter().filter(|&&w| h.adjacent(u, w)).count();
                (links, h.degree(u), std::cmp::Reverse(u))
            })
            .expect("unplaced vertex");
        placed[u] = true;
        order.push(u);
    }
    struct S<'a> {
        h: &'a IncGraph,
        g: &'a IncGraph,
        order: Vec<usize>,
        map: Vec<usize>,
        used: Vec<bool>,
        nodes: u64,
        budget: u64,
    }
    impl S<'_> {
        /// `Some(true)` on success, `Some(false)` when exhausted, `None`
        /// when the budget ran out.
        fn place(&mut self, depth: usize) -> Option<bool> {
            if depth == self.order.len() {
                return Some(true);
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return None;
            }
            let u = self.order[depth];
            let anchor = self.order[..depth].iter().copied().find(|&w| self.h.adjacent(u, w));
            let pool: Vec<usize> = match anchor {
                Some(w) => self.g.neighbors(self.map[w]).to_vec(),
                None => (0..self.g.len()).collect(),
            };
            for c in pool {
                if self.used[c] || self.g.degree(c) < self.h.degree(u) {
                    continue;
                }
                let fits = self.order[..depth]
                    .iter()
                    .all(|&w| self.h.adjacent(u, w) == self.g.adjacent(c, self.map[w]));
                if !fits {
                    continue;
                }
                self.map[u] = c;
                self.used[c] = true;
                let r = self.place(depth + 1);
                self.used[c] = false;
                if r != Some(false) {
                    return r;
                }
            }
            Some(false)
        }
    }
    let mut s = S {
        h,
        g,
        order,
        map: vec![usize::MAX; k],
        used: vec![false; g.len()],
        nodes: 0,
        budget,
    };
    match s.place(0) {
        Some(true) => Ok(Some(s.map)),
        Some(false) => Ok(None),
        None => Err(Error::EmbeddingBudgetExceeded { nodes: s.nodes }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::{gen_pattern, PatternKind, PatternParams};

    #[test]
    fn basic_embeddings() {
        let m = embeds_induced(&IncGraph::path(2), &IncGraph::path(3)).unwrap().unwrap();
        assert!(m.verify(&IncGraph::path(2), &IncGraph::path(3)));
        assert!(embeds_induced(&IncGraph::complete(3), &IncGraph::cycle(6)).unwrap().is_none());
        // P_3 is a subgraph of C_3 but not an induced one.
        assert!(embeds_induced(&IncGraph::path(3), &IncGraph::complete(3)).unwrap().is_none());
        assert!(embeds_induced(&IncGraph::path(4), &IncGraph::cycle(6)).unwrap().is_some());
    }

    #[test]
    fn double_forks_form_an_antichain() {
        let df = |k| gen_pattern(PatternKind::DoubleFork, &PatternParams::new(k, &[])).unwrap();
        assert!(embeds_induced(&df(3), &df(4)).unwrap().is_none());
        assert!(embeds_induced(&df(4), &df(3)).unwrap().is_none());
        assert!(embeds_induced(&df(3), &df(3)).unwrap().is_some());
    }

    #[test]
    fn budget_is_reported() {
        let r = embeds_induced_with_budget(&IncGraph::path(5), &IncGraph::cycle(40), 2);
        assert!(matches!(r, Err(Error::EmbeddingBudgetExceeded { .. })));
    }
}
