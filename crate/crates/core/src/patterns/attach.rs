use serde::Serialize;

use super::{classify_pattern, PatternKind, PatternMatch};
use crate::error::{Error, Result};
use crate::graph::IncGraph;
use crate::path::{for_each_induced_path, PathKind, PathWitness, DEFAULT_BUDGET};
use crate::vertex_set::VertexSet;

/// How an outside vertex meets an induced spine `x_0 .. x_k`, by its least
/// and largest spine neighbours `l <= r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum AttachmentType {
    /// `l = r`.
    #[serde(rename = "0")]
    Type0,
    /// `r = l + 1`.
    #[serde(rename = "1")]
    Type1,
    /// `r = l + 2`, adjacent to `x_{l+1}`.
    #[serde(rename = "2.1")]
    Type21,
    /// `r = l + 2`, not adjacent to `x_{l+1}`.
    #[serde(rename = "2.2")]
    Type22,
    /// `r >= l + 3`, adjacent to `x_{l+1}`.
    #[serde(rename = "3.1")]
    Type31,
    /// `r >= l + 3`, not adjacent to `x_{l+1}`.
    #[serde(rename = "3.2")]
    Type32,
    /// No spine neighbour.
    #[serde(rename = "far")]
    Far,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Attachment {
    pub vertex: usize,
    pub l: usize,
    pub r: usize,
    pub kind: AttachmentType,
}

fn classify_attachment(g: &IncGraph, spine: &[usize], y: usize) -> Attachment {
    let pos: Vec<usize> = (0..spine.len()).filter(|&k| g.adjacent(y, spine[k])).collect();
    let (Some(&l), Some(&r)) = (pos.first(), pos.last()) else {
        return Attachment {
            vertex: y,
            l: 0,
            r: 0,
            kind: AttachmentType::Far,
        };
    };
    let middle = l + 1 < spine.len() && g.adjacent(y, spine[l + 1]);
    let kind = match r - l {
        0 => AttachmentType::Type0,
        1 => AttachmentType::Type1,
        2 if middle => AttachmentType::Type21,
        2 => AttachmentType::Type22,
        _ if middle => AttachmentType::Type31,
        _ => AttachmentType::Type32,
    };
    Attachment { vertex: y, l, r, kind }
}

/// Classifies how `y` meets the induced path `spine`.
pub fn attachment_type(g: &IncGraph, spine: &PathWitness, y: usize) -> Result<Attachment> {
    if spine.kind < PathKind::Induced || !spine.verify(g) {
        return Err(Error::KindMismatch {
            expected: PathKind::Induced,
            got: spine.kind.min(PathWitness::strongest_kind(g, &spine.vertices).unwrap_or(PathKind::Walk)),
        });
    }
    if y >= g.len() {
        return Err(Error::IndexOutOfRange { index: y, n: g.len() });
    }
    if spine.vertices.contains(&y) {
        return Err(Error::InvalidParameter(format!("vertex {y} lies on the spine")));
    }
    let a = classify_attachment(g, &spine.vertices, y);
    if a.kind == AttachmentType::Far {
        return Err(Error::NoSpineNeighbor(y));
    }
    Ok(a)
}

/// [`find_comb_or_kite_with_budget`] with the default node budget.
pub fn find_comb_or_kite(g: &IncGraph, spine_min: usize) -> Result<Option<PatternMatch>> {
    find_comb_or_kite_with_budget(g, spine_min, DEFAULT_BUDGET)
}

/// Finite extraction of an induced comb or kite whose spine has at least
/// `spine_min` vertices.
///
/// Induced paths are tried as spines, longest first. Outside vertices are
/// sorted by attachment type; for each type a pairwise non-adjacent set is
/// picked greedily along the spine with the spacing its pattern needs:
/// type 0 gives a comb, type 1 a kite of type 1, type 2.1 type 2, type 2.2
/// type 3. Vertices of type 3 shortcut the spine: `y` replaces
/// `x_{l+1} .. x_{r-1}`; for type 3.1 the dropped `x_{l+1}` hangs on the
/// consecutive pair `x_l, y` (a type-1 kite), for type 3.2 the shortened
/// spine is searched again. Every candidate is re-classified before it is
/// returned.
pub fn find_comb_or_kite_with_budget(g: &IncGraph, spine_min: usize, budget: u64) -> Result<Option<PatternMatch>> {
    let mut spines: Vec<Vec<usize>> = Vec::new();
    let mut nodes = 0u64;
    let mut longest: Vec<usize> = Vec::new();
    let mut exhausted = false;
    for s in 0..g.len() {
        for_each_induced_path(g, s, |p| {
            nodes += 1;
            if nodes > budget {
                exhausted = true;
                return false;
            }
            if p.len() > longest.len() {
                longest = p.to_vec();
            }
            if p.len() >= spine_min.max(2) && p[0] < p[p.len() - 1] {
                spines.push(p.to_vec());
            }
            true
        });
        if exhausted {
            return Err(Error::SearchBudgetExceeded {
                best: PathWitness::new(longest, PathKind::Induced),
            });
        }
    }
    spines.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    for spine in &spines {
        if let Some(m) = harvest(g, spine, spine_min, true) {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

fn harvest(g: &IncGraph, spine: &[usize], spine_min: usize, allow_shortcut: bool) -> Option<PatternMatch> {
    let n = g.len();
    let on = VertexSet::from_slice(n, spine);
    let mut atts: Vec<Attachment> = (0..n)
        .filter(|&v| !on.contains(v))
        .map(|v| classify_attachment(g, spine, v))
        .filter(|a| a.kind != AttachmentType::Far)
        .collect();
    atts.sort_by_key(|a| (a.l, a.r, a.vertex));
    let of = |t: AttachmentType| atts.iter().filter(move |a| a.kind == t);

    let plain = [
        (AttachmentType::Type0, PatternKind::Comb, 1),
        (AttachmentType::Type1, PatternKind::Kite1, 1),
        (AttachmentType::Type21, PatternKind::Kite2, 2),
        (AttachmentType::Type22, PatternKind::Kite3, 2),
    ];
    for (t, kind, gap) in plain {
        let mut chosen: Vec<Attachment> = Vec::new();
        for a in of(t) {
            let spaced = chosen.last().is_none_or(|c| a.l >= c.l + gap);
            if spaced && chosen.iter().all(|c| !g.adjacent(c.vertex, a.vertex)) {
                chosen.push(*a);
            }
        }
        if chosen.is_empty() {
            continue;
        }
        let mut sp = spine.to_vec();
        if kind == PatternKind::Comb {
            // A bare spine end next to a toothed vertex would be a second leaf.
            let toothed = |i: usize| chosen.iter().any(|c| c.l == i);
            if sp.len() >= 3 && toothed(sp.len() - 2) && !toothed(sp.len() - 1) {
                sp.pop();
            }
            if sp.len() >= 3 && toothed(1) && !toothed(0) {
                sp.remove(0);
            }
        }
        let extra: Vec<usize> = chosen.iter().map(|c| c.vertex).collect();
        if let Some(m) = accept(g, sp, extra, kind, spine_min) {
            return Some(m);
        }
    }
    if !allow_shortcut {
        return None;
    }
    for t in [AttachmentType::Type31, AttachmentType::Type32] {
        let mut chosen: Vec<Attachment> = Vec::new();
        for a in of(t) {
            let spaced = chosen.last().is_none_or(|c| a.l >= c.r);
            if spaced && chosen.iter().all(|c| !g.adjacent(c.vertex, a.vertex)) {
                chosen.push(*a);
            }
        }
        if chosen.is_empty() {
            continue;
        }
        let mut sp = Vec::new();
        let mut i = 0;
        for c in &chosen {
            sp.extend_from_slice(&spine[i..=c.l]);
            sp.push(c.vertex);
            i = c.r;
        }
        sp.extend_from_slice(&spine[i..]);
        if t == AttachmentType::Type31 {
            let hung: Vec<usize> = chosen.iter().map(|c| spine[c.l + 1]).collect();
            if let Some(m) = accept(g, sp, hung, PatternKind::Kite1, spine_min) {
                return Some(m);
            }
        } else if sp.len() >= spine_min && PathWitness::strongest_kind(g, &sp) >= Some(PathKind::Induced) {
            if let Some(m) = harvest(g, &sp, spine_min, false) {
                return Some(m);
            }
        }
    }
    None
}

fn accept(g: &IncGraph, spine: Vec<usize>, extra: Vec<usize>, kind: PatternKind, spine_min: usize) -> Option<PatternMatch> {
    if spine.len() < spine_min {
        return None;
    }
    let spine_len = spine.len();
    let mut map = spine;
    map.extend(extra);
    (classify_pattern(&g.induced(&map)) == Some(kind)).then_some(PatternMatch {
        kind: Some(kind),
        map,
        spine_len,
    })
}
