use serde::Serialize;

use super::is_caterpillar;
use crate::error::{Error, Result};
use crate::graph::IncGraph;
use crate::laws::{Counterexample, Verdict};
use crate::poset::Poset;
use crate::vertex_set::VertexSet;

/// Two-colouring by BFS.
pub fn is_bipartite(g: &IncGraph) -> bool {
    let n = g.len();
    let mut colour = vec![u8::MAX; n];
    for s in 0..n {
        if colour[s] != u8::MAX {
            continue;
        }
        colour[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u).iter() {
                if colour[w] == u8::MAX {
                    colour[w] = 1 - colour[u];
                    queue.push_back(w);
                } else if colour[w] == colour[u] {
                    return false;
                }
            }
        }
    }
    true
}

/// A transitive orientation of `h`, as arcs `(u, v)` meaning `u < v`, or
/// `None` when `h` is not a comparability graph.
///
/// Implication classes are peeled off one at a time: an arc forces its
/// neighbours through the relation "`ab` and `ab'` share `a` and `bb'` is
/// not an edge of the remaining graph" (and the same at the head), the
/// class is removed, and the search continues on what is left. The graph
/// is a comparability graph iff no class contains an arc and its reverse,
/// and then the union of the classes is transitive.
pub fn transitive_orientation(h: &IncGraph) -> Option<Vec<(usize, usize)>> {
    let n = h.len();
    let mut rem: Vec<VertexSet> = (0..n).map(|v| h.neighbors(v).clone()).collect();
    let mut arcs = Vec::new();
    let mut mark = vec![VertexSet::new(n); n];
    loop {
        let Some((a, b)) = (0..n).find_map(|u| rem[u].iter().find(|&v| v > u).map(|v| (u, v))) else {
            break;
        };
        let mut class = vec![(a, b)];
        mark[a].insert(b);
        let mut next = 0;
        while next < class.len() {
            let (x, y) = class[next];
            next += 1;
            let mut forced = Vec::new();
            for z in rem[x].iter() {
                if z != y && !rem[y].contains(z) {
                    forced.push((x, z));
                }
            }
            for w in rem[y].iter() {
                if w != x && !rem[x].contains(w) {
                    forced.push((w, y));
                }
            }
            for (u, v) in forced {
                if mark[v].contains(u) {
                    return None;
                }
                if mark[u].insert(v) {
                    class.push((u, v));
                }
            }
        }
        for &(u, v) in &class {
            rem[u].remove(v);
            rem[v].remove(u);
        }
        arcs.extend(class);
    }
    Some(arcs)
}

/// The poset of width at most 2 whose inc graph is `g`, when there is one.
pub fn bipartite_permutation_realizer(g: &IncGraph) -> Option<Poset> {
    if !is_bipartite(g) {
        return None;
    }
    let arcs = transitive_orientation(&g.complement())?;
    let p = Poset::from_relation(g.len(), &arcs).ok()?;
    // Closing a transitive orientation adds nothing.
    if p.strict_pairs().count() != arcs.len() || p.width() > 2 {
        return None;
    }
    Some(p)
}

/// Whether `g` is the incomparability graph of a poset of width at most 2:
/// bipartite, with a transitively orientable complement.
pub fn is_bipartite_permutation(g: &IncGraph) -> bool {
    bipartite_permutation_realizer(g).is_some()
}

/// Reference check for [`is_bipartite_permutation`] that shares no code
/// with it: `g` must be triangle-free, and some orientation of the edges of
/// its complement, found by backtracking, must be transitive.
pub fn is_bipartite_permutation_brute_force(g: &IncGraph) -> bool {
    let n = g.len();
    for u in 0..n {
        for v in u + 1..n {
            for w in v + 1..n {
                if g.adjacent(u, v) && g.adjacent(v, w) && g.adjacent(u, w) {
                    return false;
                }
            }
        }
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if !g.adjacent(u, v) {
                edges.push((u, v));
            }
        }
    }
    // less[a][b]: a < b has been decided.
    let mut less = vec![vec![false; n]; n];
    fn consistent(g: &IncGraph, less: &[Vec<bool>], a: usize, b: usize) -> bool {
        let n = less.len();
        (0..n).all(|c| {
            let before = less[c][a] && (g.adjacent(c, b) || less[b][c]);
            let after = less[b][c] && (g.adjacent(a, c) || less[c][a]);
            !before && !after
        })
    }
    fn go(g: &IncGraph, edges: &[(usize, usize)], k: usize, less: &mut Vec<Vec<bool>>) -> bool {
        let Some(&(u, v)) = edges.get(k) else {
            return true;
        };
        for (a, b) in [(u, v), (v, u)] {
            if consistent(g, less, a, b) {
                less[a][b] = true;
                if go(g, edges, k + 1, less) {
                    return true;
                }
                less[a][b] = false;
            }
        }
        false
    }
    go(g, &edges, 0, &mut less)
}

/// The three conditions on the inc graph of a width-2 poset that are
/// expected to agree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CaterpillarConditions {
    /// No induced triangle or 4-cycle.
    pub no_c3_c4: bool,
    pub acyclic: bool,
    /// Every component is a caterpillar.
    pub caterpillars: bool,
}

impl CaterpillarConditions {
    pub fn consistent(&self) -> bool {
        self.no_c3_c4 == self.acyclic && self.acyclic == self.caterpillars
    }
}

pub fn caterpillar_conditions(p: &Poset) -> Result<CaterpillarConditions> {
    let w = p.width();
    if w > 2 {
        return Err(Error::WidthExceeded(w));
    }
    let g = IncGraph::from_poset(p);
    let n = g.len();
    let mut short_cycle = false;
    'outer: for u in 0..n {
        for v in u + 1..n {
            let common = g.neighbors(u).intersection(g.neighbors(v));
            if g.adjacent(u, v) {
                if !common.is_empty() {
                    short_cycle = true;
                    break 'outer;
                }
            } else {
                let c = common.to_vec();
                if c.iter().enumerate().any(|(i, &a)| c[i + 1..].iter().any(|&b| !g.adjacent(a, b))) {
                    short_cycle = true;
                    break 'outer;
                }
            }
        }
    }
    let comps = g.components();
    Ok(CaterpillarConditions {
        no_c3_c4: !short_cycle,
        acyclic: g.edge_count() + comps.len() == n,
        caterpillars: comps.iter().all(|c| is_caterpillar(&g.induced(&c.to_vec()))),
    })
}

/// Checks that for a poset of width at most 2 the inc graph has no induced
/// C3 or C4 exactly when it is acyclic, exactly when its components are
/// caterpillars.
pub fn check_caterpillar_equivalence(p: &Poset) -> Result<Verdict> {
    const NAME: &str = "caterpillar-equivalence";
    let c = caterpillar_conditions(p)?;
    if c.consistent() {
        return Ok(Verdict::pass(NAME, 3));
    }
    Ok(Verdict::fail(
        NAME,
        Counterexample::new(
            p.clone(),
            Vec::new(),
            "all three conditions agree".into(),
            format!("no C3/C4: {}, acyclic: {}, caterpillars: {}", c.no_c3_c4, c.acyclic, c.caterpillars),
        ),
        3,
    ))
}
