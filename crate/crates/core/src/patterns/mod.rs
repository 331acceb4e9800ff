//! Named graph patterns: generators, exact recognizers, induced embedding,
//! spine attachment analysis, comb/kite extraction, and recognition of
//! bipartite permutation graphs.

mod attach;
mod embed;
mod recognize;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::IncGraph;
use crate::path::{for_each_induced_path, DEFAULT_BUDGET};
use crate::vertex_set::VertexSet;

pub use attach::{
    attachment_type, find_comb_or_kite, find_comb_or_kite_with_budget, Attachment, AttachmentType,
};
pub use embed::{embeds_induced, embeds_induced_with_budget};
pub use recognize::{
    bipartite_permutation_realizer, caterpillar_conditions, check_caterpillar_equivalence, is_bipartite,
    is_bipartite_permutation, is_bipartite_permutation_brute_force, transitive_orientation, CaterpillarConditions,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PatternKind {
    Path,
    Caterpillar,
    Comb,
    Kite1,
    Kite2,
    Kite3,
    DoubleFork,
    DirectSumPaths,
    CompleteSumPaths,
}

impl PatternKind {
    pub const ALL: [PatternKind; 9] = [
        PatternKind::Path,
        PatternKind::Caterpillar,
        PatternKind::Comb,
        PatternKind::Kite1,
        PatternKind::Kite2,
        PatternKind::Kite3,
        PatternKind::DoubleFork,
        PatternKind::DirectSumPaths,
        PatternKind::CompleteSumPaths,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PatternKind::Path => "path",
            PatternKind::Caterpillar => "caterpillar",
            PatternKind::Comb => "comb",
            PatternKind::Kite1 => "kite1",
            PatternKind::Kite2 => "kite2",
            PatternKind::Kite3 => "kite3",
            PatternKind::DoubleFork => "double_fork",
            PatternKind::DirectSumPaths => "direct_sum_paths",
            PatternKind::CompleteSumPaths => "complete_sum_paths",
        }
    }

    pub fn is_kite(self) -> bool {
        matches!(self, PatternKind::Kite1 | PatternKind::Kite2 | PatternKind::Kite3)
    }
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PatternKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<PatternKind> {
        PatternKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown pattern `{s}`")))
    }
}

/// Parameters of [`gen_pattern`].
///
/// `size` is the vertex count for `path`, the spine vertex count for
/// caterpillars, combs and kites, the inner path length `k` for
/// `double_fork`, and the largest summand `N` for the sums of paths.
/// `attachments` lists spine positions: the spine neighbour of each leaf
/// for caterpillars and combs, the least spine neighbour of each extra
/// vertex for kites.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PatternParams {
    pub size: usize,
    pub attachments: Vec<usize>,
}

impl PatternParams {
    pub fn new(size: usize, attachments: &[usize]) -> Self {
        PatternParams {
            size,
            attachments: attachments.to_vec(),
        }
    }
}

/// An induced copy of a pattern: pattern vertex `i` sits at host vertex
/// `map[i]`. For extracted combs and kites the first `spine_len` entries
/// are the spine in order and the rest are the attached vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PatternMatch {
    pub kind: Option<PatternKind>,
    pub map: Vec<usize>,
    pub spine_len: usize,
}

impl PatternMatch {
    pub fn spine(&self) -> &[usize] {
        &self.map[..self.spine_len]
    }

    /// Whether `map` is an induced-subgraph isomorphism from `pattern`
    /// into `host`.
    pub fn verify(&self, pattern: &IncGraph, host: &IncGraph) -> bool {
        let k = pattern.len();
        if self.map.len() != k || self.map.iter().any(|&v| v >= host.len()) {
            return false;
        }
        let distinct = VertexSet::from_slice(host.len(), &self.map).len() == k;
        distinct
            && (0..k).all(|i| (i + 1..k).all(|j| pattern.adjacent(i, j) == host.adjacent(self.map[i], self.map[j])))
    }
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidAttachment(msg.into())
}

/// Builds a pattern graph. Spine vertices come first, in order, followed
/// by the attached vertices in the order of `attachments`.
pub fn gen_pattern(kind: PatternKind, params: &PatternParams) -> Result<IncGraph> {
    let s = params.size;
    let at = &params.attachments;
    let spine_edges = |s: usize| (1..s).map(|i| (i - 1, i)).collect::<Vec<_>>();
    let in_range = |reach: usize| -> Result<()> {
        match at.iter().find(|&&p| p + reach >= s) {
            Some(p) => Err(invalid(format!("position {p} does not fit on a spine of {s} vertices"))),
            None => Ok(()),
        }
    };
    let mut sorted = at.clone();
    sorted.sort();
    let spaced = |gap: usize| -> Result<()> {
        match sorted.windows(2).find(|w| w[1] < w[0] + gap) {
            Some(w) => Err(invalid(format!("positions {} and {} are closer than {gap}", w[0], w[1]))),
            None => Ok(()),
        }
    };
    let nonempty = || -> Result<()> {
        if at.is_empty() {
            Err(invalid(format!("{kind} needs at least one attachment")))
        } else {
            Ok(())
        }
    };
    match kind {
        PatternKind::Path => {
            if s == 0 || !at.is_empty() {
                return Err(Error::InvalidParameter("a path takes a positive size and no attachments".into()));
            }
            Ok(IncGraph::path(s))
        }
        PatternKind::Comb | PatternKind::Caterpillar => {
            in_range(0)?;
            let mut edges = spine_edges(s);
            edges.extend(at.iter().enumerate().map(|(k, &p)| (p, s + k)));
            let g = IncGraph::from_edges(s + at.len(), &edges)?;
            if kind == PatternKind::Comb {
                spaced(1)?;
                if !at.iter().any(|&p| p > 0 && p + 1 < s) {
                    return Err(invalid("a comb needs a tooth on an inner spine vertex"));
                }
                if s >= 3 && (at.contains(&1) && !at.contains(&0) || at.contains(&(s - 2)) && !at.contains(&(s - 1))) {
                    return Err(invalid("a tooth next to a bare spine end gives that vertex two leaves"));
                }
            } else {
                let two_leaves = (0..g.len()).any(|v| g.neighbors(v).iter().filter(|&u| g.degree(u) == 1).count() >= 2);
                if !two_leaves {
                    return Err(invalid("no vertex has two leaves, so this is a path or a comb"));
                }
                if double_fork_length(&g).is_some() {
                    return Err(invalid("these positions give a double-ended fork"));
                }
            }
            Ok(g)
        }
        PatternKind::Kite1 | PatternKind::Kite2 | PatternKind::Kite3 => {
            nonempty()?;
            let offsets: &[usize] = match kind {
                PatternKind::Kite1 => &[0, 1],
                PatternKind::Kite2 => &[0, 1, 2],
                _ => &[0, 2],
            };
            in_range(*offsets.last().unwrap())?;
            spaced(if kind == PatternKind::Kite1 { 1 } else { 2 })?;
            let mut edges = spine_edges(s);
            for (k, &p) in at.iter().enumerate() {
                edges.extend(offsets.iter().map(|o| (p + o, s + k)));
            }
            IncGraph::from_edges(s + at.len(), &edges)
        }
        PatternKind::DoubleFork => {
            if s == 0 || !at.is_empty() {
                return Err(Error::InvalidParameter("a double-ended fork takes a length k >= 1".into()));
            }
            let mut edges = spine_edges(s + 1);
            edges.extend([(0, s + 1), (0, s + 2), (s, s + 3), (s, s + 4)]);
            IncGraph::from_edges(s + 5, &edges)
        }
        PatternKind::DirectSumPaths | PatternKind::CompleteSumPaths => {
            let least = if kind == PatternKind::DirectSumPaths { 2 } else { 3 };
            if s < least || !at.is_empty() {
                return Err(Error::InvalidParameter(format!("{kind} takes N >= {least}")));
            }
            let total = s * (s + 1) / 2;
            let mut part = Vec::with_capacity(total);
            let mut edges = Vec::new();
            for len in 1..=s {
                let base = part.len();
                part.extend(std::iter::repeat_n(len, len));
                edges.extend((1..len).map(|i| (base + i - 1, base + i)));
            }
            if kind == PatternKind::CompleteSumPaths {
                for a in 0..total {
                    for b in a + 1..total {
                        if part[a] != part[b] {
                            edges.push((a, b));
                        }
                    }
                }
            }
            IncGraph::from_edges(total, &edges)
        }
    }
}

fn is_tree(g: &IncGraph) -> bool {
    !g.is_empty() && g.is_connected() && g.edge_count() + 1 == g.len()
}

fn max_degree(g: &IncGraph) -> usize {
    (0..g.len()).map(|v| g.degree(v)).max().unwrap_or(0)
}

/// Connected, and deleting the degree-1 vertices leaves a path.
pub fn is_caterpillar(g: &IncGraph) -> bool {
    if !is_tree(g) {
        return false;
    }
    let inner: Vec<usize> = (0..g.len()).filter(|&v| g.degree(v) >= 2).collect();
    max_degree(&g.induced(&inner)) <= 2
}

/// `k` when `g` is a path of length `k >= 1` with two pendant leaves at
/// each end.
fn double_fork_length(g: &IncGraph) -> Option<usize> {
    if !is_caterpillar(g) || g.len() < 6 {
        return None;
    }
    let inner: Vec<usize> = (0..g.len()).filter(|&v| g.degree(v) >= 2).collect();
    let leaves_at = |v: usize| g.neighbors(v).iter().filter(|&u| g.degree(u) == 1).count();
    let ends: Vec<usize> = inner
        .iter()
        .copied()
        .filter(|&v| g.neighbors(v).iter().filter(|&u| g.degree(u) >= 2).count() <= 1)
        .collect();
    let shape = ends.len() == 2
        && ends.iter().all(|&v| leaves_at(v) == 2)
        && inner.iter().all(|&v| ends.contains(&v) || leaves_at(v) == 0);
    shape.then(|| inner.len() - 1)
}

/// A spine and extra vertices realizing a kite, if any induced path of `g`
/// works as a spine.
fn kite_structure(g: &IncGraph) -> Option<(PatternKind, Vec<usize>)> {
    let n = g.len();
    let mut found = None;
    for s in 0..n {
        for_each_induced_path(g, s, |path| {
            if found.is_some() {
                return false;
            }
            if path.len() >= 2 && path[0] < path[path.len() - 1] {
                if let Some(kind) = kite_on_spine(g, path) {
                    found = Some((kind, path.to_vec()));
                }
            }
            true
        });
        if found.is_some() {
            break;
        }
    }
    found
}

fn kite_on_spine(g: &IncGraph, spine: &[usize]) -> Option<PatternKind> {
    let n = g.len();
    let on = VertexSet::from_slice(n, spine);
    let rest: Vec<usize> = (0..n).filter(|&v| !on.contains(v)).collect();
    if rest.is_empty() {
        return None;
    }
    let mut kind = None;
    let mut starts = Vec::new();
    for (i, &y) in rest.iter().enumerate() {
        if rest[i + 1..].iter().any(|&z| g.adjacent(y, z)) {
            return None;
        }
        let pos: Vec<usize> = (0..spine.len()).filter(|&k| g.adjacent(y, spine[k])).collect();
        let k = match pos.as_slice() {
            [a, b] if b - a == 1 => PatternKind::Kite1,
            [a, b, c] if b - a == 1 && c - b == 1 => PatternKind::Kite2,
            [a, b] if b - a == 2 => PatternKind::Kite3,
            _ => return None,
        };
        if kind.is_some_and(|old| old != k) {
            return None;
        }
        kind = Some(k);
        starts.push(pos[0]);
    }
    let kind = kind?;
    starts.sort();
    let gap = if kind == PatternKind::Kite1 { 1 } else { 2 };
    starts.windows(2).all(|w| w[1] >= w[0] + gap).then_some(kind)
}

fn sum_of_paths_size(g: &IncGraph) -> Option<usize> {
    let n = g.len();
    (1..=n).find(|s| s * (s + 1) / 2 >= n).filter(|s| s * (s + 1) / 2 == n)
}

/// Exact structural recognition. Kinds are tested in the order path,
/// double-ended fork, comb, caterpillar, direct sum, complete sum, kite
/// (1, 2, 3), so `P_3` is a caterpillar and not a comb.
pub fn classify_pattern(g: &IncGraph) -> Option<PatternKind> {
    if g.is_empty() {
        return None;
    }
    if is_tree(g) {
        if max_degree(g) <= 2 {
            return Some(PatternKind::Path);
        }
        if !is_caterpillar(g) {
            return None;
        }
        if double_fork_length(g).is_some() {
            return Some(PatternKind::DoubleFork);
        }
        let comb = (0..g.len()).all(|v| g.neighbors(v).iter().filter(|&u| g.degree(u) == 1).count() <= 1);
        return Some(if comb { PatternKind::Comb } else { PatternKind::Caterpillar });
    }
    if !g.is_connected() {
        let comps = g.components();
        let mut sizes = Vec::new();
        for c in &comps {
            let h = g.induced(&c.to_vec());
            if !is_tree(&h) || max_degree(&h) > 2 {
                return None;
            }
            sizes.push(h.len());
        }
        sizes.sort();
        let direct = sizes.len() >= 2 && sizes.iter().enumerate().all(|(i, &s)| s == i + 1);
        return direct.then_some(PatternKind::DirectSumPaths);
    }
    if let Some(s) = sum_of_paths_size(g).filter(|&s| s >= 3) {
        let model = gen_pattern(PatternKind::CompleteSumPaths, &PatternParams::new(s, &[])).expect("valid size");
        if model.edge_count() == g.edge_count() && matches!(embed::find_embedding(&model, g, DEFAULT_BUDGET), Ok(Some(_))) {
            return Some(PatternKind::CompleteSumPaths);
        }
    }
    kite_structure(g).map(|(k, _)| k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen(kind: PatternKind, size: usize, at: &[usize]) -> Result<IncGraph> {
        gen_pattern(kind, &PatternParams::new(size, at))
    }

    #[test]
    fn small_cases() {
        assert_eq!(gen(PatternKind::Path, 1, &[]).unwrap().len(), 1);
        assert_eq!(classify_pattern(&IncGraph::path(3)), Some(PatternKind::Path));
        let p3 = IncGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(is_caterpillar(&p3));
        // C4 is the smallest type-3 kite: a 3-vertex spine and one vertex on its ends.
        assert_eq!(classify_pattern(&IncGraph::cycle(4)), Some(PatternKind::Kite3));
        assert_eq!(classify_pattern(&IncGraph::cycle(5)), None);
        let star = IncGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(classify_pattern(&star), Some(PatternKind::Caterpillar));
    }

    #[test]
    fn kite2_degrees() {
        let g = gen(PatternKind::Kite2, 8, &[0, 3]).unwrap();
        assert_eq!(g.degree(8), 3);
        assert_eq!(g.degree(9), 3);
        assert_eq!(classify_pattern(&g), Some(PatternKind::Kite2));
        assert!(gen(PatternKind::Kite2, 8, &[0, 1]).is_err());
        assert!(gen(PatternKind::Kite3, 8, &[6]).is_err());
    }

    #[test]
    fn sums() {
        let d = gen(PatternKind::DirectSumPaths, 4, &[]).unwrap();
        assert_eq!(d.len(), 10);
        assert_eq!(d.components().len(), 4);
        assert_eq!(classify_pattern(&d), Some(PatternKind::DirectSumPaths));
        let c = gen(PatternKind::CompleteSumPaths, 4, &[]).unwrap();
        assert_eq!(classify_pattern(&c), Some(PatternKind::CompleteSumPaths));
    }

    #[test]
    fn double_forks() {
        for k in 1..=5 {
            let g = gen(PatternKind::DoubleFork, k, &[]).unwrap();
            assert_eq!(g.len(), k + 5);
            assert_eq!(classify_pattern(&g), Some(PatternKind::DoubleFork));
        }
    }

    #[test]
    fn comb_rules() {
        assert_eq!(classify_pattern(&gen(PatternKind::Comb, 5, &[0, 1, 2, 3, 4]).unwrap()), Some(PatternKind::Comb));
        assert!(gen(PatternKind::Comb, 5, &[1]).is_err());
        assert!(gen(PatternKind::Comb, 5, &[2, 2]).is_err());
        assert!(gen(PatternKind::Caterpillar, 5, &[2]).is_err());
        assert_eq!(
            classify_pattern(&gen(PatternKind::Caterpillar, 5, &[2, 2]).unwrap()),
            Some(PatternKind::Caterpillar)
        );
    }
}
