use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Distance, IncGraph};
use crate::laws::{Counterexample, Verdict};
use crate::poset::{ChainCover, Poset};

use super::pairwise_detour;

/// The two-chain partition of a width-2 poset with connected inc graph.
/// The classes are the BFS parity classes of the inc graph from element 0;
/// the chain holding element 0 comes first.
pub fn two_chain_partition(p: &Poset) -> Result<ChainCover> {
    let w = p.width();
    if w > 2 {
        return Err(Error::WidthExceeded(w));
    }
    let g = IncGraph::from_poset(p);
    if p.len() < 2 || !g.is_connected() {
        return Err(Error::IncGraphDisconnected);
    }
    let mut parity = vec![usize::MAX; p.len()];
    parity[0] = 0;
    let mut queue = VecDeque::from([0]);
    while let Some(u) = queue.pop_front() {
        for v in g.neighbors(u).iter() {
            if parity[v] == usize::MAX {
                parity[v] = 1 - parity[u];
                queue.push_back(v);
            }
        }
    }
    let mut chains = vec![Vec::new(), Vec::new()];
    for v in 0..p.len() {
        chains[parity[v]].push(v);
    }
    for c in chains.iter_mut() {
        c.sort_by_key(|&v| p.strict_down(v).len());
        debug_assert!(c.windows(2).all(|w| p.less(w[0], w[1])));
    }
    Ok(ChainCover { chains })
}

/// The oscillation distance `d_P` of a width-2 poset with connected inc graph.
#[derive(Clone, Debug)]
pub struct OscillationMetric<'a> {
    p: &'a Poset,
    chain_of: Vec<usize>,
    /// Elements in a linear extension of `p`.
    order: Vec<usize>,
}

impl<'a> OscillationMetric<'a> {
    pub fn new(p: &'a Poset) -> Result<Self> {
        let cover = two_chain_partition(p)?;
        let chain_of = cover.chain_of(p.len());
        let mut order: Vec<usize> = (0..p.len()).collect();
        order.sort_by_key(|&v| p.strict_down(v).len());
        Ok(OscillationMetric { p, chain_of, order })
    }

    pub fn chain_of(&self, v: usize) -> usize {
        self.chain_of[v]
    }

    /// Largest oscillation of an alternating sequence with extremities
    /// `x` and `y`; `None` when `x`, `y` are incomparable or equal.
    pub fn max_oscillation(&self, x: usize, y: usize) -> Option<usize> {
        let (lo, hi) = if self.p.less(x, y) {
            (x, y)
        } else if self.p.less(y, x) {
            (y, x)
        } else {
            return None;
        };
        let n = self.p.len();
        let mut best: Vec<Option<usize>> = vec![None; n];
        best[lo] = Some(0);
        for &v in &self.order {
            if !self.p.less(lo, v) || !self.p.leq(v, hi) {
                continue;
            }
            for u in self.p.strict_down(v).iter() {
                if self.chain_of[u] == self.chain_of[v] {
                    continue;
                }
                if let Some(b) = best[u] {
                    if best[v].is_none_or(|old| old < b + 1) {
                        best[v] = Some(b + 1);
                    }
                }
            }
        }
        best[hi]
    }

    /// `d_P(x, y)`: 0 on equality, 1 on incomparability, 2 for comparable
    /// pairs without an alternating sequence of positive oscillation, and
    /// otherwise the maximum oscillation plus 2.
    pub fn distance(&self, x: usize, y: usize) -> usize {
        if x == y {
            return 0;
        }
        if self.p.incomparable(x, y) {
            return 1;
        }
        match self.max_oscillation(x, y) {
            Some(k) if k > 0 => k + 2,
            _ => 2,
        }
    }
}

pub fn oscillation_distance(p: &Poset, x: usize, y: usize) -> Result<usize> {
    for v in [x, y] {
        if v >= p.len() {
            return Err(Error::IndexOutOfRange { index: v, n: p.len() });
        }
    }
    Ok(OscillationMetric::new(p)?.distance(x, y))
}

/// Checks, on every pair, `0 <= d_G - d_P <= 2 floor(d_G / 3)`; on comparable
/// pairs `d_G >= d_P >= floor(D / 3) + eps` with `D` the pairwise detour and
/// `eps = 1` when `D = 1 mod 3`, else 2; and globally that the detour is
/// below three times the diameter. A disconnected inc graph (or fewer than
/// two elements) gives a vacuous verdict.
pub fn verify_width2_metric_bounds(p: &Poset) -> Result<Verdict> {
    const LAW: &str = "width2-metric-bounds";
    let w = p.width();
    if w > 2 {
        return Err(Error::WidthExceeded(w));
    }
    let g = IncGraph::from_poset(p);
    if p.len() < 2 || !g.is_connected() {
        return Ok(Verdict::vacuous(LAW));
    }
    let m = OscillationMetric::new(p)?;
    let detour = pairwise_detour(&g);
    let mut checked = 0u64;
    let fail = |args: Vec<String>, expected: String, actual: String, checked: u64| {
        Ok(Verdict::fail(LAW, Counterexample::new(p.clone(), args, expected, actual), checked))
    };
    for x in 0..p.len() {
        for y in 0..p.len() {
            checked += 1;
            let dg = g.dist(x, y).finite().expect("connected");
            let dp = m.distance(x, y);
            let args = vec![format!("x={}", p.label(x)), format!("y={}", p.label(y))];
            if dp > dg || dg - dp > 2 * (dg / 3) {
                return fail(
                    args,
                    format!("0 <= d_G - d_P <= {}", 2 * (dg / 3)),
                    format!("d_G = {dg}, d_P = {dp}"),
                    checked,
                );
            }
            if p.less(x, y) {
                let d = detour[x][y].expect("connected");
                let eps = if d % 3 == 1 { 1 } else { 2 };
                let lower = d / 3 + eps;
                if dp < lower {
                    return fail(
                        args,
                        format!("d_P >= floor(D/3) + eps = {lower} with D = {d}"),
                        format!("d_P = {dp}"),
                        checked,
                    );
                }
            }
        }
    }
    let Distance::Finite(diam) = g.diameter() else {
        unreachable!("connected")
    };
    let longest = detour.iter().flatten().filter_map(|d| *d).max().unwrap_or(0);
    checked += 1;
    if longest >= 3 * diam {
        return fail(
            vec![format!("diameter={diam}")],
            format!("detour < {}", 3 * diam),
            format!("detour = {longest}"),
            checked,
        );
    }
    Ok(Verdict::pass(LAW, checked))
}
