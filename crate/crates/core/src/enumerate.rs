//! Isomorphism-free enumeration of small posets and graphs.

use std::collections::HashSet;

use crate::graph::IncGraph;
use crate::poset::Poset;

/// Least relation bitstring over the vertex orders that sort vertices by
/// `invariant`; two structures get the same key iff they are isomorphic.
fn canonical_key(n: usize, invariant: &[u64], bit: &dyn Fn(usize, usize) -> bool, symmetric: bool) -> (Vec<u64>, u64) {
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| invariant[v]);
    let sorted_inv: Vec<u64> = order.iter().map(|&v| invariant[v]).collect();
    // Slot k may hold any vertex whose invariant equals the k-th smallest.
    let candidates: Vec<Vec<usize>> = sorted_inv
        .iter()
        .map(|&inv| (0..n).filter(|&v| invariant[v] == inv).collect())
        .collect();
    fn assign(
        candidates: &[Vec<usize>],
        used: &mut Vec<bool>,
        slots: &mut Vec<usize>,
        finish: &mut dyn FnMut(&[usize]),
    ) {
        let k = slots.len();
        if k == candidates.len() {
            finish(slots);
            return;
        }
        for &v in &candidates[k] {
            if !used[v] {
                used[v] = true;
                slots.push(v);
                assign(candidates, used, slots, finish);
                slots.pop();
                used[v] = false;
            }
        }
    }
    let mut best = u64::MAX;
    let mut used = vec![false; n];
    let mut slots = Vec::with_capacity(n);
    assign(&candidates, &mut used, &mut slots, &mut |slots: &[usize]| {
        let mut key = 0u64;
        let mut idx = 0;
        for i in 0..n {
            for j in 0..n {
                if i == j || (symmetric && j < i) {
                    continue;
                }
                if bit(slots[i], slots[j]) {
                    key |= 1 << idx;
                }
                idx += 1;
            }
        }
        best = best.min(key);
    });
    (sorted_inv, best)
}

pub fn poset_key(p: &Poset) -> (Vec<u64>, u64) {
    assert!(p.len() <= 8, "canonical keys support at most 8 elements");
    let inv: Vec<u64> = (0..p.len())
        .map(|v| ((p.strict_down(v).len() as u64) << 8) | p.strict_up(v).len() as u64)
        .collect();
    canonical_key(p.len(), &inv, &|a, b| p.less(a, b), false)
}

pub fn graph_key(g: &IncGraph) -> (Vec<u64>, u64) {
    assert!(g.len() <= 11, "canonical keys support at most 11 vertices");
    let inv: Vec<u64> = (0..g.len()).map(|v| g.degree(v) as u64).collect();
    canonical_key(g.len(), &inv, &|a, b| g.adjacent(a, b), true)
}

/// One poset per isomorphism class on exactly `n` elements (`n <= 8`).
/// Every poset arises from a smaller one by adding a maximal element
/// above a down-closed set.
pub fn posets_up_to_iso(n: usize) -> Vec<Poset> {
    if n == 0 {
        return vec![Poset::antichain(0)];
    }
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for base in posets_up_to_iso(n - 1) {
        let m = n - 1;
        for mask in 0u32..1 << m {
            let closed = (0..m)
                .filter(|&v| mask & (1 << v) != 0)
                .all(|v| base.strict_down(v).iter().all(|u| mask & (1 << u) != 0));
            if !closed {
                continue;
            }
            let mut pairs: Vec<(usize, usize)> = base.strict_pairs().collect();
            pairs.extend((0..m).filter(|&v| mask & (1 << v) != 0).map(|v| (v, m)));
            let p = Poset::from_relation(n, &pairs).expect("adding a maximal element keeps acyclicity");
            if seen.insert(poset_key(&p)) {
                out.push(p);
            }
        }
    }
    out
}

/// One graph per isomorphism class on exactly `n` vertices (`n <= 8`).
pub fn graphs_up_to_iso(n: usize) -> Vec<IncGraph> {
    if n == 0 {
        return vec![IncGraph::from_edges(0, &[]).unwrap()];
    }
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for base in graphs_up_to_iso(n - 1) {
        let m = n - 1;
        for mask in 0u32..1 << m {
            let mut edges = base.edges();
            edges.extend((0..m).filter(|&v| mask & (1 << v) != 0).map(|v| (v, m)));
            let g = IncGraph::from_edges(n, &edges).unwrap();
            if seen.insert(graph_key(&g)) {
                out.push(g);
            }
        }
    }
    out
}
