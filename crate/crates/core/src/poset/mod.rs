//! Finite posets stored as a transitively closed strict order on `0..n`.

mod format;
mod matching;

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

pub use format::{parse_poset, write_poset};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    n: usize,
    labels: Option<Vec<String>>,
    /// `above[i]` holds every `j` with `i < j`.
    above: Vec<VertexSet>,
    /// `below[j]` holds every `i` with `i < j`.
    below: Vec<VertexSet>,
}

/// A partition of the elements into chains, each listed in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainCover {
    pub chains: Vec<Vec<usize>>,
}

impl ChainCover {
    pub fn len(&self) -> usize {
        self.chains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chains.is_empty()
    }

    /// Index of the chain holding each element.
    pub fn chain_of(&self, n: usize) -> Vec<usize> {
        let mut of = vec![usize::MAX; n];
        for (c, chain) in self.chains.iter().enumerate() {
            for &v in chain {
                of[v] = c;
            }
        }
        of
    }
}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let pairs: Vec<(String, String)> = self
            .strict_pairs()
            .map(|(a, b)| (self.label(a), self.label(b)))
            .collect();
        f.debug_struct("Poset")
            .field("n", &self.n)
            .field("less", &pairs)
            .finish()
    }
}

fn check_index(i: usize, n: usize) -> Result<()> {
    if i >= n {
        Err(Error::IndexOutOfRange { index: i, n })
    } else {
        Ok(())
    }
}

impl Poset {
    /// Builds the order generated by `pairs` (each `(i, j)` meaning `i < j`).
    pub fn from_relation(n: usize, pairs: &[(usize, usize)]) -> Result<Poset> {
        let mut above = vec![VertexSet::new(n); n];
        for &(i, j) in pairs {
            check_index(i, n)?;
            check_index(j, n)?;
            if i == j {
                return Err(Error::CycleDetected(i));
            }
            above[i].insert(j);
        }
        for k in 0..n {
            let row_k = above[k].clone();
            for row in above.iter_mut() {
                if row.contains(k) {
                    row.union_with(&row_k);
                }
            }
        }
        if let Some(i) = (0..n).find(|&i| above[i].contains(i)) {
            return Err(Error::CycleDetected(i));
        }
        Ok(Self::from_closed_rows(n, above))
    }

    /// Same as [`Poset::from_relation`]; the pairs are read as cover relations.
    pub fn from_cover_relations(n: usize, covers: &[(usize, usize)]) -> Result<Poset> {
        Self::from_relation(n, covers)
    }

    /// Builds a poset from a predicate that is already a strict order.
    /// The result is validated; a non-transitive predicate is closed.
    pub fn from_fn(n: usize, less: impl Fn(usize, usize) -> bool) -> Result<Poset> {
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j && less(i, j) {
                    pairs.push((i, j));
                }
            }
        }
        Self::from_relation(n, &pairs)
    }

    fn from_closed_rows(n: usize, above: Vec<VertexSet>) -> Poset {
        let mut below = vec![VertexSet::new(n); n];
        for (i, row) in above.iter().enumerate() {
            for j in row.iter() {
                below[j].insert(i);
            }
        }
        Poset {
            n,
            labels: None,
            above,
            below,
        }
    }

    pub fn chain(n: usize) -> Poset {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_relation(n, &pairs).expect("a chain is acyclic")
    }

    pub fn antichain(n: usize) -> Poset {
        Self::from_closed_rows(n, vec![VertexSet::new(n); n])
    }

    /// The poset `2 ⊕ 2`: `0 < 1` and `2 < 3`, nothing else.
    pub fn two_plus_two() -> Poset {
        Self::from_relation(4, &[(0, 1), (2, 3)]).expect("acyclic")
    }

    pub fn with_labels<S: Into<String>>(mut self, labels: Vec<S>) -> Result<Poset> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() != self.n {
            return Err(Error::ArityMismatch {
                expected: self.n,
                got: labels.len(),
            });
        }
        let mut seen = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() || l.chars().any(char::is_whitespace) {
                return Err(Error::InvalidParameter(format!("label `{l}` is empty or has whitespace")));
            }
            if seen.insert(l.as_str(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Poset {
        self.labels = None;
        self
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of `i`: its label, or the index itself.
    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => i.to_string(),
        }
    }

    /// Resolves a label, falling back to a decimal index.
    pub fn resolve(&self, name: &str) -> Result<usize> {
        if let Some(labels) = &self.labels {
            if let Some(i) = labels.iter().position(|l| l == name) {
                return Ok(i);
            }
        }
        match name.parse::<usize>() {
            Ok(i) if i < self.n => Ok(i),
            _ => Err(Error::UnknownElement(name.to_string())),
        }
    }

    pub fn less(&self, i: usize, j: usize) -> bool {
        self.above[i].contains(j)
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        i == j || self.less(i, j)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        i == j || self.less(i, j) || self.less(j, i)
    }

    pub fn incomparable(&self, i: usize, j: usize) -> bool {
        !self.comparable(i, j)
    }

    /// Elements strictly above `i`.
    pub fn strict_up(&self, i: usize) -> &VertexSet {
        &self.above[i]
    }

    /// Elements strictly below `i`.
    pub fn strict_down(&self, i: usize) -> &VertexSet {
        &self.below[i]
    }

    pub fn strict_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |i| self.above[i].iter().map(move |j| (i, j)))
    }

    /// Cover pairs `(i, j)`: `i < j` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.strict_pairs()
            .filter(|&(i, j)| self.above[i].is_disjoint(&self.below[j]))
            .collect()
    }

    /// Re-checks irreflexivity, antisymmetry, transitivity and the
    /// consistency of the two row tables.
    pub fn validate(&self) -> bool {
        for i in 0..self.n {
            if self.above[i].contains(i) {
                return false;
            }
            for j in self.above[i].iter() {
                if self.above[j].contains(i) || !self.below[j].contains(i) {
                    return false;
                }
                if !self.above[j].is_subset(&self.above[i]) {
                    return false;
                }
            }
        }
        let forward: usize = self.above.iter().map(VertexSet::len).sum();
        let backward: usize = self.below.iter().map(VertexSet::len).sum();
        forward == backward
    }

    pub fn dual(&self) -> Poset {
        Poset {
            n: self.n,
            labels: self.labels.clone(),
            above: self.below.clone(),
            below: self.above.clone(),
        }
    }

    /// Induced subposet on `vertices`, in the given order; labels follow.
    pub fn subposet(&self, vertices: &[usize]) -> Poset {
        let m = vertices.len();
        let mut above = vec![VertexSet::new(m); m];
        for (a, &i) in vertices.iter().enumerate() {
            for (b, &j) in vertices.iter().enumerate() {
                if self.less(i, j) {
                    above[a].insert(b);
                }
            }
        }
        let mut p = Self::from_closed_rows(m, above);
        if let Some(l) = &self.labels {
            p.labels = Some(vertices.iter().map(|&v| l[v].clone()).collect());
        }
        p
    }

    pub fn remove_vertex(&self, v: usize) -> Poset {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.subposet(&keep)
    }

    /// Relabels element `i` as `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Poset {
        let mut above = vec![VertexSet::new(self.n); self.n];
        for (i, j) in self.strict_pairs() {
            above[perm[i]].insert(perm[j]);
        }
        let mut p = Self::from_closed_rows(self.n, above);
        if let Some(l) = &self.labels {
            let mut nl = vec![String::new(); self.n];
            for (i, name) in l.iter().enumerate() {
                nl[perm[i]] = name.clone();
            }
            p.labels = Some(nl);
        }
        p
    }

    /// Lexicographic sum: replaces element `k` of `index` by `components[k]`.
    /// Elements of different components compare as their indices do, elements
    /// of the same component as inside it.
    pub fn lexicographic_sum(index: &Poset, components: &[Poset]) -> Result<Poset> {
        if components.len() != index.len() {
            return Err(Error::ArityMismatch {
                expected: index.len(),
                got: components.len(),
            });
        }
        if let Some(k) = components.iter().position(Poset::is_empty) {
            return Err(Error::InvalidParameter(format!("component {k} is empty")));
        }
        let mut offset = Vec::with_capacity(components.len());
        let mut n = 0;
        for c in components {
            offset.push(n);
            n += c.len();
        }
        let mut above = vec![VertexSet::new(n); n];
        for (k, c) in components.iter().enumerate() {
            for (i, j) in c.strict_pairs() {
                above[offset[k] + i].insert(offset[k] + j);
            }
            for l in index.strict_up(k).iter() {
                for i in 0..c.len() {
                    for j in 0..components[l].len() {
                        above[offset[k] + i].insert(offset[l] + j);
                    }
                }
            }
        }
        Ok(Self::from_closed_rows(n, above))
    }

    pub fn direct_sum(components: &[Poset]) -> Poset {
        Self::lexicographic_sum(&Poset::antichain(components.len()), components)
            .expect("arity matches by construction")
    }

    pub fn linear_sum(components: &[Poset]) -> Poset {
        Self::lexicographic_sum(&Poset::chain(components.len()), components)
            .expect("arity matches by construction")
    }

    /// `↓X`: every element below or equal to some member of `x`.
    pub fn down_set(&self, x: &VertexSet) -> VertexSet {
        let mut out = x.clone();
        for v in x.iter() {
            out.union_with(&self.below[v]);
        }
        out
    }

    /// `↑X`: every element above or equal to some member of `x`.
    pub fn up_set(&self, x: &VertexSet) -> VertexSet {
        let mut out = x.clone();
        for v in x.iter() {
            out.union_with(&self.above[v]);
        }
        out
    }

    /// `↓X ∩ ↑X`, the smallest order-convex set containing `x`.
    pub fn order_convex_hull(&self, x: &VertexSet) -> VertexSet {
        self.down_set(x).intersection(&self.up_set(x))
    }

    pub fn is_order_convex(&self, x: &VertexSet) -> bool {
        self.order_convex_hull(x) == *x
    }

    /// Width and a minimum chain cover, from a maximum matching of the
    /// split graph `{(i, j') : i < j}`.
    pub fn width_and_chain_cover(&self) -> (usize, ChainCover) {
        let adj: Vec<Vec<usize>> = (0..self.n).map(|i| self.above[i].to_vec()).collect();
        let next = matching::hopcroft_karp(self.n, self.n, &adj);
        let mut has_pred = vec![false; self.n];
        for j in next.iter().flatten() {
            has_pred[*j] = true;
        }
        let mut chains = Vec::new();
        for start in 0..self.n {
            if has_pred[start] {
                continue;
            }
            let mut chain = vec![start];
            let mut cur = start;
            while let Some(j) = next[cur] {
                chain.push(j);
                cur = j;
            }
            chains.push(chain);
        }
        (chains.len(), ChainCover { chains })
    }

    pub fn width(&self) -> usize {
        self.width_and_chain_cover().0
    }

    /// Four elements `[a, b, c, d]` with `a < b`, `c < d` and every other
    /// pair incomparable, or `None` for an interval order.
    pub fn find_two_plus_two(&self) -> Option<[usize; 4]> {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| self.below[v].len());
        for w in order.windows(2) {
            let (x, y) = (w[0], w[1]);
            if !self.below[x].is_subset(&self.below[y]) {
                let a = self.below[x].difference(&self.below[y]).first()?;
                let c = self.below[y].difference(&self.below[x]).first()?;
                return Some([a, x, c, y]);
            }
        }
        None
    }

    pub fn is_interval_order(&self) -> bool {
        self.find_two_plus_two().is_none()
    }

    /// Connected components of the incomparability graph, listed in the
    /// order induced by the poset. Fails if two components are not totally
    /// ordered, which cannot happen for a valid poset.
    pub fn connected_components_chain(&self) -> Result<Vec<VertexSet>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut comps: Vec<VertexSet> = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = comps.len();
            let mut set = VertexSet::new(self.n);
            let mut queue = VecDeque::from([s]);
            comp[s] = id;
            while let Some(u) = queue.pop_front() {
                set.insert(u);
                for v in 0..self.n {
                    if comp[v] == usize::MAX && self.incomparable(u, v) {
                        comp[v] = id;
                        queue.push_back(v);
                    }
                }
            }
            comps.push(set);
        }
        let reps: Vec<usize> = comps.iter().map(|c| c.first().unwrap()).collect();
        let mut idx: Vec<usize> = (0..comps.len()).collect();
        idx.sort_by(|&a, &b| {
            if self.less(reps[a], reps[b]) {
                std::cmp::Ordering::Less
            } else if self.less(reps[b], reps[a]) {
                std::cmp::Ordering::Greater
            } else {
                a.cmp(&b)
            }
        });
        let ordered: Vec<VertexSet> = idx.iter().map(|&k| comps[k].clone()).collect();
        for e in 0..ordered.len() {
            for l in e + 1..ordered.len() {
                for u in ordered[e].iter() {
                    if !ordered[l].is_subset(&self.above[u]) {
                        return Err(Error::OrderViolation { earlier: e, later: l });
                    }
                }
            }
        }
        Ok(ordered)
    }
}
