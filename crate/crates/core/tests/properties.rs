use ordermetrics::families::{gen_fence, random_width2};
use ordermetrics::path::{
    can_extend_isometric, longest_induced_path, longest_isometric_path, oscillation_distance,
    verify_width2_metric_bounds,
};
use ordermetrics::patterns::{bipartite_permutation_realizer, classify_pattern, gen_pattern, is_bipartite_permutation, PatternParams};
use ordermetrics::{parse_poset, write_poset, Distance, IncGraph, PathKind, PathWitness, PatternKind, Poset, VertexSet};
use proptest::prelude::*;

/// A poset on `n` elements: a random linear extension plus a random subset
/// of its forward pairs, closed transitively.
fn poset_strategy(max_n: usize) -> impl Strategy<Value = Poset> {
    (1..=max_n)
        .prop_flat_map(|n| {
            (
                Just(n),
                Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
                proptest::collection::vec(proptest::bool::weighted(0.3), n * n),
            )
        })
        .prop_map(|(n, perm, bits)| {
            let mut pairs = Vec::new();
            for a in 0..n {
                for b in a + 1..n {
                    if bits[a * n + b] {
                        pairs.push((perm[a], perm[b]));
                    }
                }
            }
            Poset::from_relation(n, &pairs).unwrap()
        })
}

fn subset_strategy(p: Poset) -> impl Strategy<Value = (Poset, VertexSet)> {
    let n = p.len();
    (Just(p), proptest::collection::vec(any::<bool>(), n)).prop_map(move |(p, bits)| {
        let mut x = VertexSet::new(n);
        for (v, &b) in bits.iter().enumerate() {
            if b {
                x.insert(v);
            }
        }
        (p, x)
    })
}

fn floyd_warshall(g: &IncGraph) -> Vec<Vec<Option<usize>>> {
    let n = g.len();
    let mut d = vec![vec![None; n]; n];
    for u in 0..n {
        d[u][u] = Some(0);
        for v in g.neighbors(u).iter() {
            d[u][v] = Some(1);
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

fn brute_width(p: &Poset) -> usize {
    let n = p.len();
    (0u32..1 << n)
        .filter(|&m| {
            (0..n).all(|a| (a + 1..n).all(|b| m >> a & 1 == 0 || m >> b & 1 == 0 || p.incomparable(a, b)))
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

fn has_two_plus_two(p: &Poset) -> bool {
    let n = p.len();
    (0..n).any(|a| {
        (0..n).any(|b| {
            p.less(a, b)
                && (0..n).any(|c| {
                    (0..n).any(|d| {
                        p.less(c, d)
                            && p.incomparable(a, c)
                            && p.incomparable(a, d)
                            && p.incomparable(b, c)
                            && p.incomparable(b, d)
                    })
                })
        })
    })
}

/// Longest induced path by extending every simple path one vertex at a time.
fn brute_detour(g: &IncGraph) -> usize {
    fn grow(g: &IncGraph, path: &mut Vec<usize>, best: &mut usize) {
        *best = (*best).max(path.len() - 1);
        let last = *path.last().unwrap();
        for v in g.neighbors(last).iter() {
            let ok = !path.contains(&v) && path[..path.len() - 1].iter().all(|&u| !g.adjacent(u, v));
            if ok {
                path.push(v);
                grow(g, path, best);
                path.pop();
            }
        }
    }
    let mut best = 0;
    for s in 0..g.len() {
        grow(g, &mut vec![s], &mut best);
    }
    best
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn closure_is_idempotent(p in poset_strategy(9)) {
        prop_assert!(p.validate());
        let pairs: Vec<_> = p.strict_pairs().collect();
        prop_assert_eq!(Poset::from_relation(p.len(), &pairs).unwrap(), p.clone());
        let covers = p.covers();
        prop_assert_eq!(Poset::from_cover_relations(p.len(), &covers).unwrap(), p);
    }

    #[test]
    fn dual_is_an_involution(p in poset_strategy(9)) {
        prop_assert_eq!(p.dual().dual(), p.clone());
        prop_assert_eq!(p.dual().width(), p.width());
        prop_assert_eq!(IncGraph::from_poset(&p.dual()), IncGraph::from_poset(&p));
    }

    #[test]
    fn width_matches_brute_force(p in poset_strategy(9)) {
        let (w, cover) = p.width_and_chain_cover();
        prop_assert_eq!(w, brute_width(&p));
        prop_assert_eq!(cover.len(), w);
        let mut seen = vec![false; p.len()];
        for chain in &cover.chains {
            for pair in chain.windows(2) {
                prop_assert!(p.less(pair[0], pair[1]));
            }
            for &v in chain {
                prop_assert!(!seen[v]);
                seen[v] = true;
            }
        }
        prop_assert!(seen.iter().all(|&s| s));
    }

    #[test]
    fn interval_order_iff_no_two_plus_two(p in poset_strategy(9)) {
        prop_assert_eq!(p.is_interval_order(), !has_two_plus_two(&p));
        prop_assert_eq!(p.find_two_plus_two().is_some(), has_two_plus_two(&p));
    }

    #[test]
    fn bfs_matches_floyd_warshall(p in poset_strategy(9)) {
        let g = IncGraph::from_poset(&p);
        let fw = floyd_warshall(&g);
        for u in 0..p.len() {
            for v in 0..p.len() {
                let d = g.dist(u, v);
                prop_assert_eq!(d.finite(), fw[u][v]);
                prop_assert_eq!(d, g.dist(v, u));
                prop_assert_eq!(d == Distance::Finite(1), p.incomparable(u, v));
            }
        }
    }

    #[test]
    fn write_then_parse_round_trips(p in poset_strategy(9)) {
        let labelled = p.clone().with_labels((0..p.len()).map(|i| format!("e{i}")).collect()).unwrap();
        prop_assert_eq!(parse_poset(&write_poset(&p)).unwrap(), p);
        prop_assert_eq!(parse_poset(&write_poset(&labelled)).unwrap(), labelled);
    }

    #[test]
    fn balls_preserve_order_convexity((p, x) in poset_strategy(8).prop_flat_map(subset_strategy), r in 0usize..4) {
        let g = IncGraph::from_poset(&p);
        let conv = p.order_convex_hull(&x);
        prop_assert!(x.is_subset(&conv));
        prop_assert_eq!(p.order_convex_hull(&conv), conv.clone());
        prop_assert!(p.is_order_convex(&g.ball_set(&conv, r)));
        let down = p.down_set(&x);
        prop_assert_eq!(p.down_set(&g.ball_set(&down, r)), g.ball_set(&down, r));
    }

    #[test]
    fn metric_hull_contains_and_is_idempotent((p, x) in poset_strategy(8).prop_flat_map(subset_strategy)) {
        let g = IncGraph::from_poset(&p);
        let h = g.metric_convex_hull(&x);
        prop_assert!(x.is_subset(&h));
        prop_assert_eq!(g.metric_convex_hull(&h), h.clone());
        prop_assert_eq!(g.diameter_of_set(&h), g.diameter_of_set(&x));
    }

    #[test]
    fn detour_matches_brute_force(p in poset_strategy(8)) {
        let g = IncGraph::from_poset(&p);
        let out = longest_induced_path(&g, None, None);
        prop_assert!(out.optimal);
        prop_assert!(out.witness.verify(&g));
        prop_assert_eq!(out.witness.length(), brute_detour(&g));
    }

    #[test]
    fn isometric_length_is_eccentricity(p in poset_strategy(8), pick in any::<prop::sample::Index>()) {
        let g = IncGraph::from_poset(&p);
        let v = pick.index(p.len());
        let out = longest_isometric_path(&g, Some(v));
        prop_assert!(out.optimal);
        prop_assert_eq!(out.witness.kind, PathKind::Isometric);
        prop_assert!(out.witness.verify(&g));
        prop_assert_eq!(out.witness.length(), g.component_eccentricity(v));
        prop_assert_eq!(can_extend_isometric(&g, &out.witness, None).unwrap(), false);
    }

    #[test]
    fn random_width2_inc_graphs_are_bipartite_permutation(n in 1usize..12, seed in any::<u64>()) {
        let p = random_width2(n, seed).unwrap().poset;
        let g = IncGraph::from_poset(&p);
        prop_assert!(is_bipartite_permutation(&g));
        let q = bipartite_permutation_realizer(&g).unwrap();
        prop_assert_eq!(IncGraph::from_poset(&q), g);
        prop_assert!(q.width() <= 2);
    }

    #[test]
    fn width2_metric_sandwich(n in 2usize..12, seed in any::<u64>()) {
        let p = random_width2(n, seed).unwrap().poset;
        let g = IncGraph::from_poset(&p);
        if g.is_connected() {
            prop_assert!(verify_width2_metric_bounds(&p).unwrap().passed());
            for u in 0..n {
                for v in 0..n {
                    let dg = g.dist(u, v).finite().unwrap();
                    let dp = oscillation_distance(&p, u, v).unwrap();
                    prop_assert!(dp <= dg && dg - dp <= 2 * (dg / 3));
                }
            }
        }
    }

    #[test]
    fn comb_generation_round_trips(size in 3usize..12, mask in any::<u16>()) {
        let teeth: Vec<usize> = (0..size).filter(|i| mask >> i & 1 == 1).collect();
        if let Ok(g) = gen_pattern(PatternKind::Comb, &PatternParams::new(size, &teeth)) {
            prop_assert_eq!(classify_pattern(&g), Some(PatternKind::Comb));
        }
    }
}

#[test]
fn fence_route_starts_with_even_names() {
    let p = gen_fence(10).unwrap();
    let g = IncGraph::from_poset(&p.poset);
    let route = PathWitness::new(vec![p.index("x8").unwrap(), p.index("x6").unwrap()], PathKind::Isometric);
    assert!(route.verify(&g));
}
