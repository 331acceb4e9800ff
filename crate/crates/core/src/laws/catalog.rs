use std::collections::HashSet;

use super::{Check, Ctx};
use crate::graph::{Distance, IncGraph};
use crate::path::PathWitness;
use crate::vertex_set::VertexSet;

pub struct Law {
    pub id: &'static str,
    pub statement: &'static str,
    /// Negative controls: statements that are false in general and must
    /// produce a counterexample.
    pub expected_to_fail: bool,
    pub(crate) check: fn(&Ctx) -> Check,
}

impl std::fmt::Debug for Law {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Law").field("id", &self.id).finish()
    }
}

/// Laws expected to hold on every poset.
pub const SUITE_LAWS: [&str; 12] = [
    "L1", "L2", "L3", "L4", "L5", "L6", "L7", "L8", "L9", "L10", "L12", "L13",
];

pub const NEGATIVE_CONTROLS: [&str; 1] = ["L11-negcontrol"];

static LAWS: [Law; 13] = [
    Law {
        id: "L1",
        statement: "B(X,r) is an initial segment, a final segment, or order convex whenever X is",
        expected_to_fail: false,
        check: ball_order_convexity,
    },
    Law {
        id: "L2",
        statement: "for order-convex X and r >= 1, the subgraph induced on B(X,r) is isometric",
        expected_to_fail: false,
        check: ball_isometry,
    },
    Law {
        id: "L3",
        statement: "B(↓X,r) = ↓X ∪ B(X,r) = ↓B(X,r), its dual, B(↑X∩↓X,r) = B(↑X,r) ∩ B(↓X,r), and B(Conv X,r) = Conv X ∪ B(X,r) = Conv B(X,r)",
        expected_to_fail: false,
        check: hull_ball_identities,
    },
    Law {
        id: "L4",
        statement: "d(u,v) <= d(x,y) whenever x <= u <= v <= y",
        expected_to_fail: false,
        check: monotone_distance,
    },
    Law {
        id: "L5",
        statement: "for x < z < y: max(d(x,z), d(z,y)) <= d(x,y) <= d(x,z) + d(z,y) <= d(x,y) + 2",
        expected_to_fail: false,
        check: triangle_plus_two,
    },
    Law {
        id: "L6",
        statement: "diam(X) = diam(order hull of X) = diam(metric hull of X)",
        expected_to_fail: false,
        check: diameter_hulls,
    },
    Law {
        id: "L7",
        statement: "an induced path x_0..x_n with x_0 < x_n has x_i < x_j whenever j - i >= 2",
        expected_to_fail: false,
        check: induced_path_order,
    },
    Law {
        id: "L8",
        statement: "the inc graph has no induced cycle of length at least five",
        expected_to_fail: false,
        check: no_long_induced_cycles,
    },
    Law {
        id: "L9",
        statement: "a sequence is an induced path iff each window of four consecutive vertices is an induced path",
        expected_to_fail: false,
        check: window_four,
    },
    Law {
        id: "L10",
        statement: "a cover pair a < b in one component has 2 <= d(a,b) <= 3",
        expected_to_fail: false,
        check: cover_distance,
    },
    Law {
        id: "L11-negcontrol",
        statement: "every ball contains every shortest path between two of its vertices (false in general)",
        expected_to_fail: true,
        check: geodesic_convexity,
    },
    Law {
        id: "L12",
        statement: "B(X,r) = B(B(X,1),r-1) = B(B(X,r-1),1) and B(X,r) is the union of the B(x,r), x in X",
        expected_to_fail: false,
        check: ball_recursion,
    },
    Law {
        id: "L13",
        statement: "a ball holding x_i and x_k of an induced path with x_0 < x_2 holds every x_j with i+2 <= j <= k-2",
        expected_to_fail: false,
        check: ball_along_induced_path,
    },
];

pub fn laws() -> &'static [Law] {
    &LAWS
}

pub fn law(id: &str) -> Option<&'static Law> {
    LAWS.iter().find(|l| l.id == id)
}

fn distinct<'a>(sets: impl Iterator<Item = VertexSet> + 'a) -> Vec<VertexSet> {
    let mut seen = HashSet::new();
    sets.filter(|s| seen.insert(s.clone())).collect()
}

fn ball_order_convexity(c: &Ctx) -> Check {
    let mut out = Check::new();
    let p = c.p;
    let downs = distinct(c.subsets.iter().map(|s| p.down_set(s)));
    let ups = distinct(c.subsets.iter().map(|s| p.up_set(s)));
    let convs = distinct(c.subsets.iter().map(|s| p.order_convex_hull(s)));
    for (kind, sets) in [("initial", &downs), ("final", &ups), ("convex", &convs)] {
        for x in sets {
            for &r in &c.radii {
                out.tick();
                let b = c.g.ball_set(x, r);
                let ok = match kind {
                    "initial" => p.down_set(&b) == b,
                    "final" => p.up_set(&b) == b,
                    _ => p.is_order_convex(&b),
                };
                if !ok {
                    out.fail(
                        vec![format!("X={}", c.set_str(x)), format!("r={r}")],
                        format!("B(X,r) {kind} like X"),
                        format!("B(X,r) = {}", c.set_str(&b)),
                    );
                    return out;
                }
            }
        }
    }
    out
}

fn isometric_on(g: &IncGraph, s: &VertexSet) -> Option<(usize, usize, Distance, Distance)> {
    let vs = s.to_vec();
    let sub = g.induced(&vs);
    for a in 0..vs.len() {
        for b in a + 1..vs.len() {
            let (inner, outer) = (sub.dist(a, b), g.dist(vs[a], vs[b]));
            if inner != outer {
                return Some((vs[a], vs[b], inner, outer));
            }
        }
    }
    None
}

fn ball_isometry(c: &Ctx) -> Check {
    let mut out = Check::new();
    let convs = distinct(c.subsets.iter().map(|s| c.p.order_convex_hull(s)));
    let balls = distinct(
        convs
            .iter()
            .flat_map(|x| c.radii.iter().filter(|&&r| r >= 1).map(|&r| c.g.ball_set(x, r))),
    );
    for b in &balls {
        out.tick();
        if let Some((u, v, inner, outer)) = isometric_on(&c.g, b) {
            out.fail(
                vec![format!("B={}", c.set_str(b)), format!("u={}", c.v(u)), format!("v={}", c.v(v))],
                format!("distance {outer} inside the ball"),
                format!("distance {inner} inside the ball"),
            );
            return out;
        }
    }
    out
}

fn hull_ball_identities(c: &Ctx) -> Check {
    let mut out = Check::new();
    let (p, g) = (c.p, &c.g);
    for x in &c.subsets {
        let down = p.down_set(x);
        let up = p.up_set(x);
        let conv = down.intersection(&up);
        for &r in &c.radii {
            out.tick();
            let bx = g.ball_set(x, r);
            let checks = [
                ("B(↓X,r) = ↓X ∪ B(X,r)", g.ball_set(&down, r), down.union(&bx)),
                ("B(↓X,r) = ↓B(X,r)", g.ball_set(&down, r), p.down_set(&bx)),
                ("B(↑X,r) = ↑X ∪ B(X,r)", g.ball_set(&up, r), up.union(&bx)),
                ("B(↑X,r) = ↑B(X,r)", g.ball_set(&up, r), p.up_set(&bx)),
                (
                    "B(↑X∩↓X,r) = B(↑X,r) ∩ B(↓X,r)",
                    g.ball_set(&conv, r),
                    g.ball_set(&up, r).intersection(&g.ball_set(&down, r)),
                ),
                ("B(Conv X,r) = Conv X ∪ B(X,r)", g.ball_set(&conv, r), conv.union(&bx)),
                ("B(Conv X,r) = Conv B(X,r)", g.ball_set(&conv, r), p.order_convex_hull(&bx)),
            ];
            for (name, lhs, rhs) in checks {
                if lhs != rhs {
                    out.fail(
                        vec![format!("X={}", c.set_str(x)), format!("r={r}")],
                        format!("{name}: {}", c.set_str(&lhs)),
                        c.set_str(&rhs),
                    );
                    return out;
                }
            }
        }
    }
    out
}

fn monotone_distance(c: &Ctx) -> Check {
    let mut out = Check::new();
    let (p, g) = (c.p, &c.g);
    for (x, y) in p.strict_pairs() {
        let dxy = g.dist(x, y);
        let mut between = p.strict_up(x).intersection(p.strict_down(y));
        between.insert(x);
        between.insert(y);
        for u in between.iter() {
            for v in between.iter().filter(|&v| p.leq(u, v)) {
                out.tick();
                if g.dist(u, v) > dxy {
                    out.fail(
                        vec![
                            format!("x={}", c.v(x)),
                            format!("u={}", c.v(u)),
                            format!("v={}", c.v(v)),
                            format!("y={}", c.v(y)),
                        ],
                        format!("d(u,v) <= d(x,y) = {dxy}"),
                        format!("d(u,v) = {}", g.dist(u, v)),
                    );
                    return out;
                }
            }
        }
    }
    out
}

fn triangle_plus_two(c: &Ctx) -> Check {
    let mut out = Check::new();
    let (p, g) = (c.p, &c.g);
    for (x, y) in p.strict_pairs() {
        let Some(dxy) = g.dist(x, y).finite() else { continue };
        for z in p.strict_up(x).intersection(p.strict_down(y)).iter() {
            out.tick();
            let (dxz, dzy) = (g.dist(x, z), g.dist(z, y));
            let ok = match (dxz.finite(), dzy.finite()) {
                (Some(a), Some(b)) => a.max(b) <= dxy && dxy <= a + b && a + b <= dxy + 2,
                _ => false,
            };
            if !ok {
                out.fail(
                    vec![format!("x={}", c.v(x)), format!("z={}", c.v(z)), format!("y={}", c.v(y))],
                    format!("max(d(x,z),d(z,y)) <= {dxy} <= d(x,z)+d(z,y) <= {}", dxy + 2),
                    format!("d(x,z) = {dxz}, d(z,y) = {dzy}"),
                );
                return out;
            }
        }
    }
    out
}

fn diameter_hulls(c: &Ctx) -> Check {
    let mut out = Check::new();
    for x in &c.subsets {
        out.tick();
        let d = c.g.diameter_of_set(x);
        let dp = c.g.diameter_of_set(&c.p.order_convex_hull(x));
        let dg = c.g.diameter_of_set(&c.g.metric_convex_hull(x));
        if d != dp || d != dg {
            out.fail(
                vec![format!("X={}", c.set_str(x))],
                format!("all three diameters equal {d}"),
                format!("order hull {dp}, metric hull {dg}"),
            );
            return out;
        }
    }
    out
}

fn induced_path_order(c: &Ctx) -> Check {
    let mut out = Check::new();
    let p = c.p;
    for path in c.induced_paths() {
        let n = path.len();
        if n < 3 || !p.less(path[0], path[n - 1]) {
            continue;
        }
        out.tick();
        for i in 0..n {
            for j in i + 2..n {
                if !p.less(path[i], path[j]) {
                    let names: Vec<String> = path.iter().map(|&v| c.v(v)).collect();
                    out.fail(
                        vec![format!("path={}", names.join("-")), format!("i={i}"), format!("j={j}")],
                        "x_i < x_j",
                        format!("{} not below {}", c.v(path[i]), c.v(path[j])),
                    );
                    return out;
                }
            }
        }
    }
    out
}

fn no_long_induced_cycles(c: &Ctx) -> Check {
    let mut out = Check::new();
    for path in c.induced_paths() {
        if path.len() < 5 {
            continue;
        }
        out.tick();
        if c.g.adjacent(path[0], path[path.len() - 1]) {
            let names: Vec<String> = path.iter().map(|&v| c.v(v)).collect();
            out.fail(
                vec![format!("cycle={}", names.join("-"))],
                "no induced cycle of length >= 5",
                format!("induced cycle of length {}", path.len()),
            );
            return out;
        }
    }
    out
}

fn window_four(c: &Ctx) -> Check {
    fn is_induced(g: &IncGraph, s: &[usize]) -> bool {
        matches!(PathWitness::strongest_kind(g, s), Some(k) if k >= crate::path::PathKind::Induced)
    }
    fn rec(c: &Ctx, seq: &mut Vec<usize>, out: &mut Check) {
        out.tick();
        if !is_induced(&c.g, seq) {
            let names: Vec<String> = seq.iter().map(|&v| c.v(v)).collect();
            out.fail(
                vec![format!("sequence={}", names.join("-"))],
                "an induced path (every 4-window is one)",
                "not an induced path",
            );
            return;
        }
        let k = seq.len();
        for w in 0..c.p.len() {
            let window = [seq[k - 3], seq[k - 2], seq[k - 1], w];
            if is_induced(&c.g, &window) {
                seq.push(w);
                rec(c, seq, out);
                seq.pop();
                if out.failed() {
                    return;
                }
            }
        }
    }
    let mut out = Check::new();
    for path in c.induced_paths() {
        if path.len() != 4 {
            continue;
        }
        let mut seq = path.clone();
        rec(c, &mut seq, &mut out);
        if out.failed() {
            return out;
        }
    }
    out
}

fn cover_distance(c: &Ctx) -> Check {
    let mut out = Check::new();
    for (a, b) in c.p.covers() {
        let Some(d) = c.g.dist(a, b).finite() else { continue };
        out.tick();
        if !(2..=3).contains(&d) {
            out.fail(
                vec![format!("a={}", c.v(a)), format!("b={}", c.v(b))],
                "2 <= d(a,b) <= 3",
                format!("d(a,b) = {d}"),
            );
            return out;
        }
    }
    out
}

fn geodesic_convexity(c: &Ctx) -> Check {
    let mut out = Check::new();
    let g = &c.g;
    let n = c.p.len();
    for x in 0..n {
        for &r in &c.radii {
            let b = g.ball(x, r);
            for u in b.iter() {
                for v in b.iter().filter(|&v| v > u) {
                    let Some(duv) = g.dist(u, v).finite() else { continue };
                    out.tick();
                    for w in 0..n {
                        let on_geodesic = matches!(
                            (g.dist(u, w).finite(), g.dist(w, v).finite()),
                            (Some(a), Some(b2)) if a + b2 == duv
                        );
                        if on_geodesic && !b.contains(w) {
                            out.fail(
                                vec![
                                    format!("x={}", c.v(x)),
                                    format!("r={r}"),
                                    format!("u={}", c.v(u)),
                                    format!("v={}", c.v(v)),
                                ],
                                format!("{} in B(x,r)", c.v(w)),
                                format!("B(x,r) = {}", c.set_str(&b)),
                            );
                            return out;
                        }
                    }
                }
            }
        }
    }
    out
}

fn ball_recursion(c: &Ctx) -> Check {
    let mut out = Check::new();
    let g = &c.g;
    for x in &c.subsets {
        for &r in c.radii.iter().filter(|&&r| r >= 1) {
            out.tick();
            let b = g.ball_set(x, r);
            let via_one = g.ball_set(&g.ball_set(x, 1), r - 1);
            let via_last = g.ball_set(&g.ball_set(x, r - 1), 1);
            let mut union = VertexSet::new(c.p.len());
            for v in x.iter() {
                union.union_with(&g.ball(v, r));
            }
            for (name, other) in [
                ("B(B(X,1),r-1)", via_one),
                ("B(B(X,r-1),1)", via_last),
                ("union of B(x,r)", union),
            ] {
                if other != b {
                    out.fail(
                        vec![format!("X={}", c.set_str(x)), format!("r={r}")],
                        format!("B(X,r) = {name} = {}", c.set_str(&b)),
                        c.set_str(&other),
                    );
                    return out;
                }
            }
        }
    }
    out
}

fn ball_along_induced_path(c: &Ctx) -> Check {
    let mut out = Check::new();
    let n = c.p.len();
    let balls: Vec<(usize, usize, VertexSet)> = (0..n)
        .flat_map(|x| c.radii.iter().map(move |&r| (x, r)))
        .map(|(x, r)| (x, r, c.g.ball(x, r)))
        .collect();
    for path in c.induced_paths() {
        let m = path.len();
        if m < 5 || !c.p.less(path[0], path[2]) {
            continue;
        }
        for (x, r, b) in &balls {
            out.tick();
            let inside: Vec<bool> = path.iter().map(|&v| b.contains(v)).collect();
            for j in 2..m - 2 {
                if inside[j] {
                    continue;
                }
                let before = inside[..=j - 2].iter().any(|&t| t);
                let after = inside[j + 2..].iter().any(|&t| t);
                if before && after {
                    let names: Vec<String> = path.iter().map(|&v| c.v(v)).collect();
                    out.fail(
                        vec![
                            format!("path={}", names.join("-")),
                            format!("x={}", c.v(*x)),
                            format!("r={r}"),
                        ],
                        format!("{} in B(x,r)", c.v(path[j])),
                        format!("B(x,r) = {}", c.set_str(b)),
                    );
                    return out;
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::{evaluate_law, run_law, Mode, Outcome};
    use super::*;
    use crate::poset::Poset;

    #[test]
    fn registry_is_complete() {
        assert_eq!(laws().len(), 13);
        for id in SUITE_LAWS.iter().chain(NEGATIVE_CONTROLS.iter()) {
            assert!(law(id).is_some(), "{id}");
        }
    }

    #[test]
    fn two_plus_two_passes_suite_laws() {
        let p = Poset::two_plus_two();
        for id in SUITE_LAWS {
            let v = evaluate_law(id, &p, Mode::Exhaustive).unwrap();
            assert_ne!(v.outcome, Outcome::Fail, "{id}: {v:?}");
        }
        assert!(evaluate_law("L1", &p, Mode::Exhaustive).unwrap().passed());
    }

    #[test]
    fn negative_control_fails_on_c4() {
        let v = run_law("L11-negcontrol", &Poset::two_plus_two(), Mode::Exhaustive).unwrap();
        assert!(v.failed());
        let cx = v.counterexample.unwrap();
        assert_eq!(cx.poset.len(), 4);
        assert!(cx.args.contains(&"r=1".to_string()));
    }

    #[test]
    fn triangle_law_vacuous_on_chain() {
        let v = run_law("L5", &Poset::chain(3), Mode::Exhaustive).unwrap();
        assert!(v.is_vacuous());
    }

    #[test]
    fn unknown_law() {
        assert!(run_law("L99", &Poset::chain(1), Mode::Exhaustive).is_err());
    }
}
