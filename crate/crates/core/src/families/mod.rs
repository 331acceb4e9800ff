//! Truncations of the counterexample posets plus generic generators, and
//! the per-family claim checks.

mod claims;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poset::Poset;

pub use claims::{verify_family_claims, ClaimCheck, FamilyReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// Width 3, diameter 3, unbounded induced paths, no infinite one.
    Width3NoPath,
    /// Width 2, infinite diameter, no isometric infinite path.
    Nn2NoIsometric,
    /// Interval order on the grid, infinite diameter, no isometric
    /// infinite path from the corner.
    IntervalStaircase,
    Fence,
    Random,
    RandomWidth2,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Width3NoPath,
        Family::Nn2NoIsometric,
        Family::IntervalStaircase,
        Family::Fence,
        Family::Random,
        Family::RandomWidth2,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::Width3NoPath => "width3_no_path",
            Family::Nn2NoIsometric => "nn2_no_isometric",
            Family::IntervalStaircase => "interval_staircase",
            Family::Fence => "fence",
            Family::Random => "random",
            Family::RandomWidth2 => "random_width2",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// One finite member of a family, with its elements named.
#[derive(Clone, Debug)]
pub struct FamilyTruncation {
    pub family: Family,
    pub n: usize,
    /// Labels are the element names.
    pub poset: Poset,
    pub name_of: BTreeMap<String, usize>,
    /// Whether the defining relation was already transitively closed, so
    /// that closing it added no pairs.
    pub relation_was_closed: bool,
}

impl FamilyTruncation {
    fn build(family: Family, n: usize, names: Vec<String>, less: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let k = names.len();
        let given = (0..k).flat_map(|a| (0..k).map(move |b| (a, b))).filter(|&(a, b)| a != b && less(a, b)).count();
        let poset = Poset::from_fn(k, less)?.with_labels(names.clone())?;
        let name_of = names.into_iter().enumerate().map(|(i, s)| (s, i)).collect();
        Ok(FamilyTruncation {
            family,
            n,
            relation_was_closed: poset.strict_pairs().count() == given,
            poset,
            name_of,
        })
    }

    pub fn index(&self, name: &str) -> Result<usize> {
        self.name_of
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    pub fn name(&self, v: usize) -> String {
        self.poset.label(v)
    }
}

/// Generates a member of `family`. `n` is the truncation parameter for
/// the three counterexample families and the element count otherwise;
/// `p` and `seed` only matter for the random families.
pub fn generate(family: Family, n: usize, p: f64, seed: u64) -> Result<FamilyTruncation> {
    match family {
        Family::Width3NoPath => gen_width3(n),
        Family::Nn2NoIsometric => gen_nn2(n),
        Family::IntervalStaircase => gen_interval_staircase(n),
        Family::Fence => gen_fence(n),
        Family::Random => random_poset(n, p, seed),
        Family::RandomWidth2 => random_width2(n, seed),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum W3 {
    Y,
    X(usize),
    /// `z(j, i)`: position `j` on the path `Z_i`.
    Z(usize, usize),
}

fn w3_less(a: W3, b: W3) -> bool {
    use W3::*;
    match (a, b) {
        (X(i), X(j)) => i < j,
        (Y, Z(..)) => true,
        (X(i), Z(j, k)) => k > i || (k == i && j >= 1),
        (Z(a, i), Z(b, k)) => i < k || (i == k && b >= a + 2),
        _ => false,
    }
}

/// `y`, `x(i)` for `i < N`, and the paths `Z_i = z(0,i) .. z(i+3,i)`.
pub fn gen_width3(n: usize) -> Result<FamilyTruncation> {
    if n < 1 {
        return Err(Error::InvalidParameter("width3_no_path needs N >= 1".into()));
    }
    let mut elems = vec![W3::Y];
    elems.extend((0..n).map(W3::X));
    for i in 0..n {
        elems.extend((0..=i + 3).map(|j| W3::Z(j, i)));
    }
    let names = elems
        .iter()
        .map(|e| match e {
            W3::Y => "y".to_string(),
            W3::X(i) => format!("x({i})"),
            W3::Z(j, i) => format!("z({j},{i})"),
        })
        .collect();
    FamilyTruncation::build(Family::Width3NoPath, n, names, |a, b| w3_less(elems[a], elems[b]))
}

fn nn2_leq(a: (usize, usize, usize), b: (usize, usize, usize)) -> bool {
    let ((m, n, i), (m2, n2, i2)) = (a, b);
    if i == i2 {
        n < n2 || (n == n2 && m <= m2)
    } else {
        n + 1 < n2 || (n + 1 == n2 && m <= m2)
    }
}

/// Elements `(m,n,i)` with `m, n < N` and `i` in `{0, 1}`.
pub fn gen_nn2(n: usize) -> Result<FamilyTruncation> {
    if n < 2 {
        return Err(Error::InvalidParameter("nn2_no_isometric needs N >= 2".into()));
    }
    let mut elems = Vec::new();
    for i in [1, 0] {
        for k in 0..n {
            for m in 0..n {
                elems.push((m, k, i));
            }
        }
    }
    let names = elems.iter().map(|(m, k, i)| format!("({m},{k},{i})")).collect();
    FamilyTruncation::build(Family::Nn2NoIsometric, n, names, |a, b| {
        a != b && nn2_leq(elems[a], elems[b])
    })
}

/// Intervals `X(n,m) = [(n,m), (n,m+1))` of the lexicographic grid chain,
/// for `n, m < N`.
pub fn gen_interval_staircase(n: usize) -> Result<FamilyTruncation> {
    if n < 2 {
        return Err(Error::InvalidParameter("interval_staircase needs N >= 2".into()));
    }
    let elems: Vec<(usize, usize)> = (0..n).flat_map(|m| (0..n).map(move |k| (k, m))).collect();
    let names = elems.iter().map(|(k, m)| format!("X({k},{m})")).collect();
    FamilyTruncation::build(Family::IntervalStaircase, n, names, |a, b| {
        let ((k, m), (k2, m2)) = (elems[a], elems[b]);
        m + 1 < m2 || (m + 1 == m2 && k <= k2)
    })
}

/// The width-2 poset whose inc graph is a path on `n` vertices: along the
/// path `p_0 .. p_{n-1}`, `p_s < p_t` iff `t >= s + 2`. The path visits the
/// even-named elements in decreasing order, then the odd ones, so that
/// `fence(4)` is the zigzag `x0 < x1 > x2 < x3`.
pub fn gen_fence(n: usize) -> Result<FamilyTruncation> {
    if n < 1 {
        return Err(Error::InvalidParameter("fence needs n >= 1".into()));
    }
    let mut route: Vec<usize> = (0..n).filter(|i| i % 2 == 0).rev().collect();
    route.extend((0..n).filter(|i| i % 2 == 1).rev());
    let mut pos = vec![0; n];
    for (s, &v) in route.iter().enumerate() {
        pos[v] = s;
    }
    let names = (0..n).map(|i| format!("x{i}")).collect();
    FamilyTruncation::build(Family::Fence, n, names, |a, b| pos[b] >= pos[a] + 2)
}

fn check_probability(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("edge probability {p} outside [0, 1]")))
    }
}

fn element_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v{i}")).collect()
}

/// Random DAG on a shuffled vertex order (each forward pair with
/// probability `p`), transitively closed.
pub fn random_poset(n: usize, p: f64, seed: u64) -> Result<FamilyTruncation> {
    check_probability(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                pairs.push((order[a], order[b]));
            }
        }
    }
    let poset = Poset::from_relation(n, &pairs)?.with_labels(element_names(n))?;
    let name_of = element_names(n).into_iter().enumerate().map(|(i, s)| (s, i)).collect();
    Ok(FamilyTruncation {
        family: Family::Random,
        n,
        poset,
        name_of,
        relation_was_closed: false,
    })
}

/// Random poset covered by two chains. Each element joins chain A or B at
/// random; a second linear order is a uniformly random interleaving of
/// the two chains, and the poset is the intersection of the two orders, so
/// both chains stay chains and the width is at most 2.
pub fn random_width2(n: usize, seed: u64) -> Result<FamilyTruncation> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let side: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    let mut a: Vec<usize> = (0..n).filter(|&v| side[v]).collect();
    let mut b: Vec<usize> = (0..n).filter(|&v| !side[v]).collect();
    a.reverse();
    b.reverse();
    let mut rank = vec![0; n];
    for r in 0..n {
        let take_a = match (a.is_empty(), b.is_empty()) {
            (false, false) => rng.gen_range(0..a.len() + b.len()) < a.len(),
            (empty_a, _) => !empty_a,
        };
        let v = if take_a { a.pop() } else { b.pop() }.expect("elements remain");
        rank[v] = r;
    }
    let names = element_names(n);
    let t = FamilyTruncation::build(Family::RandomWidth2, n, names, |x, y| x < y && rank[x] < rank[y])?;
    let w = t.poset.width();
    if w > 2 {
        return Err(Error::WidthExceeded(w));
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::IncGraph;

    #[test]
    fn sizes() {
        assert_eq!(gen_width3(2).unwrap().poset.len(), 12);
        assert_eq!(gen_nn2(3).unwrap().poset.len(), 18);
        assert_eq!(gen_interval_staircase(8).unwrap().poset.len(), 64);
        assert_eq!(gen_fence(6).unwrap().poset.len(), 6);
        assert!(gen_width3(0).is_err());
        assert!(gen_nn2(1).is_err());
        assert!(random_poset(3, 1.5, 0).is_err());
    }

    #[test]
    fn width3_relations() {
        let t = gen_width3(4).unwrap();
        let y = t.index("y").unwrap();
        for i in 0..4 {
            assert!(t.poset.incomparable(y, t.index(&format!("x({i})")).unwrap()));
        }
        let g = IncGraph::from_poset(&t.poset);
        let z1: Vec<usize> = (0..5).map(|j| t.index(&format!("z({j},1)")).unwrap()).collect();
        let sub = g.induced(&z1);
        assert_eq!(sub, IncGraph::path(5));
        assert_eq!(t.poset.width(), 3);
    }

    #[test]
    fn nn2_relations() {
        let t = gen_nn2(3).unwrap();
        let a = t.index("(0,0,0)").unwrap();
        let b = t.index("(0,1,1)").unwrap();
        assert!(t.poset.less(a, b));
        assert_eq!(t.poset.width(), 2);
    }

    #[test]
    fn staircase_adjacency_matches_the_edge_rule() {
        let t = gen_interval_staircase(5).unwrap();
        let g = IncGraph::from_poset(&t.poset);
        for (k, m) in (0..5).flat_map(|m| (0..5).map(move |k| (k, m))) {
            for (k2, m2) in (0..5).flat_map(|m| (0..5).map(move |k| (k, m))) {
                if (k, m) == (k2, m2) {
                    continue;
                }
                let expected = m == m2 || (m2 == m + 1 && k2 < k) || (m == m2 + 1 && k < k2);
                let u = t.index(&format!("X({k},{m})")).unwrap();
                let v = t.index(&format!("X({k2},{m2})")).unwrap();
                assert_eq!(g.adjacent(u, v), expected);
            }
        }
        assert!(t.poset.is_interval_order());
    }

    #[test]
    fn fence4_is_the_zigzag() {
        let t = gen_fence(4).unwrap();
        let x = |i: usize| t.index(&format!("x{i}")).unwrap();
        assert!(t.poset.less(x(0), x(1)));
        assert!(t.poset.less(x(2), x(1)));
        assert!(t.poset.less(x(2), x(3)));
        assert_eq!(t.poset.strict_pairs().count(), 3);
        for n in 1..=12 {
            let f = gen_fence(n).unwrap();
            let g = IncGraph::from_poset(&f.poset);
            assert_eq!(g.edge_count(), n - 1);
            assert!(g.is_connected());
            assert!(g.degree_histogram().len() <= 3);
        }
    }

    #[test]
    fn random_generators() {
        let t = random_poset(7, 0.0, 3).unwrap();
        assert_eq!(t.poset.width(), 7);
        let a = random_poset(10, 0.3, 7).unwrap();
        let b = random_poset(10, 0.3, 7).unwrap();
        assert_eq!(a.poset, b.poset);
        for seed in 0..50 {
            let t = random_width2(9, seed).unwrap();
            assert!(t.poset.width() <= 2);
            assert!(t.poset.validate());
        }
    }

    #[test]
    fn families_parse_by_name() {
        for f in Family::ALL {
            assert_eq!(f.as_str().parse::<Family>().unwrap(), f);
        }
        assert!("nope".parse::<Family>().is_err());
    }
}
