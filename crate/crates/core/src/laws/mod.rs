//! Executable laws about balls, hulls, distances and induced paths in
//! incomparability graphs, with counterexample search and shrinking.

mod catalog;
mod shrink;
mod suite;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::IncGraph;
use crate::poset::Poset;
use crate::vertex_set::VertexSet;

pub use catalog::{law, laws, Law, NEGATIVE_CONTROLS, SUITE_LAWS};
pub use shrink::shrink_counterexample;
pub use suite::{run_suite, splitmix64, trial_seed, LawTally, PosetSource, SuiteReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Vacuous,
}

/// A failing instance: the poset, the arguments, and what went wrong.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub poset: Poset,
    pub args: Vec<String>,
    pub expected: String,
    pub actual: String,
}

impl Counterexample {
    pub fn new(poset: Poset, args: Vec<String>, expected: String, actual: String) -> Self {
        Counterexample {
            poset,
            args,
            expected,
            actual,
        }
    }
}

impl Serialize for Counterexample {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let p = &self.poset;
        let labels: Vec<String> = (0..p.len()).map(|i| p.label(i)).collect();
        let covers: Vec<[String; 2]> = p
            .covers()
            .into_iter()
            .map(|(a, b)| [p.label(a), p.label(b)])
            .collect();
        let mut st = s.serialize_struct("Counterexample", 5)?;
        st.serialize_field("elements", &labels)?;
        st.serialize_field("covers", &covers)?;
        st.serialize_field("args", &self.args)?;
        st.serialize_field("expected", &self.expected)?;
        st.serialize_field("actual", &self.actual)?;
        st.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub law: String,
    pub outcome: Outcome,
    pub counterexample: Option<Counterexample>,
    /// Argument tuples examined.
    pub checked: u64,
}

impl Verdict {
    pub fn pass(law: &str, checked: u64) -> Verdict {
        Verdict {
            law: law.to_string(),
            outcome: Outcome::Pass,
            counterexample: None,
            checked,
        }
    }

    pub fn fail(law: &str, cx: Counterexample, checked: u64) -> Verdict {
        Verdict {
            law: law.to_string(),
            outcome: Outcome::Fail,
            counterexample: Some(cx),
            checked,
        }
    }

    pub fn vacuous(law: &str) -> Verdict {
        Verdict {
            law: law.to_string(),
            outcome: Outcome::Vacuous,
            counterexample: None,
            checked: 0,
        }
    }

    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    pub fn failed(&self) -> bool {
        self.outcome == Outcome::Fail
    }

    pub fn is_vacuous(&self) -> bool {
        self.outcome == Outcome::Vacuous
    }
}

/// How set-valued arguments are chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Every non-empty subset of at most three elements.
    Exhaustive,
    /// The exhaustive subsets plus `trials` random subsets of any size.
    Sampled { seed: u64, trials: usize },
}

/// Everything a law checker needs about one poset.
pub(crate) struct Ctx<'a> {
    pub p: &'a Poset,
    pub g: IncGraph,
    pub subsets: Vec<VertexSet>,
    /// Radii `0..=R+1` with `R` the largest finite distance.
    pub radii: Vec<usize>,
    paths: std::sync::OnceLock<Vec<Vec<usize>>>,
}

impl<'a> Ctx<'a> {
    pub fn new(p: &'a Poset, mode: Mode) -> Ctx<'a> {
        let g = IncGraph::from_poset(p);
        let n = p.len();
        let r_max = (0..n).map(|v| g.component_eccentricity(v)).max().unwrap_or(0);
        let mut subsets = Vec::new();
        for a in 0..n {
            subsets.push(VertexSet::from_slice(n, &[a]));
            for b in a + 1..n {
                subsets.push(VertexSet::from_slice(n, &[a, b]));
                for c in b + 1..n {
                    subsets.push(VertexSet::from_slice(n, &[a, b, c]));
                }
            }
        }
        if let Mode::Sampled { seed, trials } = mode {
            if n > 0 {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let all: Vec<usize> = (0..n).collect();
                for _ in 0..trials {
                    let k = rng.gen_range(1..=n);
                    let pick: Vec<usize> = all.choose_multiple(&mut rng, k).copied().collect();
                    subsets.push(VertexSet::from_slice(n, &pick));
                }
            }
        }
        Ctx {
            p,
            g,
            subsets,
            radii: (0..=r_max + 1).collect(),
            paths: std::sync::OnceLock::new(),
        }
    }

    /// Every induced path of the inc graph, in both directions.
    pub fn induced_paths(&self) -> &[Vec<usize>] {
        self.paths.get_or_init(|| {
            let mut out = Vec::new();
            for s in 0..self.p.len() {
                crate::path::for_each_induced_path(&self.g, s, |path| {
                    out.push(path.to_vec());
                    true
                });
            }
            out
        })
    }

    pub fn set_str(&self, x: &VertexSet) -> String {
        let names: Vec<String> = x.iter().map(|v| self.p.label(v)).collect();
        format!("{{{}}}", names.join(","))
    }

    pub fn v(&self, v: usize) -> String {
        self.p.label(v)
    }
}

/// Outcome of a checker before it is wrapped into a [`Verdict`].
pub(crate) struct Check {
    pub checked: u64,
    pub failure: Option<(Vec<String>, String, String)>,
}

impl Check {
    pub fn new() -> Check {
        Check {
            checked: 0,
            failure: None,
        }
    }

    pub fn tick(&mut self) {
        self.checked += 1;
    }

    pub fn fail(&mut self, args: Vec<String>, expected: impl Into<String>, actual: impl Into<String>) {
        if self.failure.is_none() {
            self.failure = Some((args, expected.into(), actual.into()));
        }
    }

    pub fn failed(&self) -> bool {
        self.failure.is_some()
    }
}

/// Evaluates one law on `p` without shrinking.
pub fn evaluate_law(law_id: &str, p: &Poset, mode: Mode) -> Result<Verdict> {
    let law = catalog::law(law_id).ok_or_else(|| Error::UnknownLaw(law_id.to_string()))?;
    let ctx = Ctx::new(p, mode);
    let check = (law.check)(&ctx);
    Ok(match check.failure {
        Some((args, expected, actual)) => Verdict::fail(
            law.id,
            Counterexample::new(p.clone(), args, expected, actual),
            check.checked,
        ),
        None if check.checked == 0 => Verdict::vacuous(law.id),
        None => Verdict::pass(law.id, check.checked),
    })
}

/// Evaluates a law; a failure is shrunk by deleting elements while it
/// persists, and the verdict carries the shrunk counterexample.
pub fn run_law(law_id: &str, p: &Poset, mode: Mode) -> Result<Verdict> {
    let v = evaluate_law(law_id, p, mode)?;
    if !v.failed() {
        return Ok(v);
    }
    let small = shrink_counterexample(law_id, p, mode)?;
    let mut shrunk = evaluate_law(law_id, &small, mode)?;
    shrunk.checked = v.checked;
    Ok(shrunk)
}
