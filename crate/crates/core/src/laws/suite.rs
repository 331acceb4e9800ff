use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{catalog, evaluate_law, run_law, Counterexample, Mode, Outcome};
use crate::enumerate::posets_up_to_iso;
use crate::error::{Error, Result};
use crate::families::random_poset;
use crate::poset::Poset;

/// Where the posets of a suite come from.
#[derive(Clone, Debug)]
pub enum PosetSource {
    /// Every poset with at most `max_n` elements, one per isomorphism class.
    Exhaustive { max_n: usize },
    /// `trials` random posets on `n` elements. Trial `i` draws its edge
    /// probability from `[0.05, 0.6)` and everything else from
    /// `trial_seed(seed, i)`.
    Random { n: usize, trials: usize, seed: u64 },
    Explicit(Vec<Poset>),
}

#[derive(Clone, Debug, Serialize)]
pub struct LawTally {
    pub law: String,
    pub expected_to_fail: bool,
    pub pass: usize,
    pub fail: usize,
    pub vacuous: usize,
    pub checked: u64,
    /// First failure, shrunk.
    pub counterexample: Option<Counterexample>,
}

impl LawTally {
    /// A failure of an ordinary law, or a negative control that never failed.
    pub fn is_violation(&self) -> bool {
        if self.expected_to_fail {
            self.fail == 0
        } else {
            self.fail > 0
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub posets: usize,
    pub laws: Vec<LawTally>,
    pub violations: usize,
}

pub fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Per-trial seed, independent of scheduling order.
pub fn trial_seed(master: u64, index: u64) -> u64 {
    splitmix64(master ^ splitmix64(index))
}

fn trial(source: &PosetSource, i: usize, all: &[Poset]) -> (Poset, Mode) {
    match source {
        PosetSource::Random { n, seed, .. } => {
            let s = trial_seed(*seed, i as u64);
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            let p = rng.gen_range(0.05..0.6);
            let poset = random_poset(*n, p, rng.gen()).expect("probability in range").poset;
            (poset, Mode::Sampled { seed: s, trials: 16 })
        }
        _ => (all[i].clone(), Mode::Exhaustive),
    }
}

/// Runs every listed law on every poset of `source`, in parallel.
pub fn run_suite(law_ids: &[&str], source: &PosetSource) -> Result<SuiteReport> {
    for id in law_ids {
        if catalog::law(id).is_none() {
            return Err(Error::UnknownLaw(id.to_string()));
        }
    }
    let all: Vec<Poset> = match source {
        PosetSource::Exhaustive { max_n } => (0..=*max_n).flat_map(posets_up_to_iso).collect(),
        PosetSource::Explicit(ps) => ps.clone(),
        PosetSource::Random { .. } => Vec::new(),
    };
    let count = match source {
        PosetSource::Random { trials, .. } => *trials,
        _ => all.len(),
    };
    let outcomes: Vec<Vec<(Outcome, u64, Option<(Poset, Mode)>)>> = (0..count)
        .into_par_iter()
        .map(|i| {
            let (p, mode) = trial(source, i, &all);
            law_ids
                .iter()
                .map(|id| {
                    let v = evaluate_law(id, &p, mode).expect("law ids checked above");
                    let failing = v.failed().then(|| (p.clone(), mode));
                    (v.outcome, v.checked, failing)
                })
                .collect()
        })
        .collect();

    let mut laws = Vec::new();
    let mut violations = 0;
    for (k, id) in law_ids.iter().enumerate() {
        let law = catalog::law(id).expect("checked");
        let mut tally = LawTally {
            law: id.to_string(),
            expected_to_fail: law.expected_to_fail,
            pass: 0,
            fail: 0,
            vacuous: 0,
            checked: 0,
            counterexample: None,
        };
        let mut first_failure: Option<(Poset, Mode)> = None;
        for row in &outcomes {
            let (outcome, checked, failing) = &row[k];
            tally.checked += checked;
            match outcome {
                Outcome::Pass => tally.pass += 1,
                Outcome::Vacuous => tally.vacuous += 1,
                Outcome::Fail => {
                    tally.fail += 1;
                    if first_failure.is_none() {
                        first_failure = failing.clone();
                    }
                }
            }
        }
        if let Some((p, mode)) = first_failure {
            tally.counterexample = run_law(id, &p, mode)?.counterexample;
        }
        if tally.is_violation() {
            violations += 1;
        }
        laws.push(tally);
    }
    Ok(SuiteReport {
        posets: count,
        laws,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laws::{NEGATIVE_CONTROLS, SUITE_LAWS};

    #[test]
    fn small_exhaustive_suite_is_clean() {
        let r = run_suite(&SUITE_LAWS, &PosetSource::Exhaustive { max_n: 4 }).unwrap();
        assert_eq!(r.posets, 1 + 1 + 2 + 5 + 16);
        assert_eq!(r.violations, 0, "{:#?}", r.laws);
    }

    #[test]
    fn negative_control_suite_fails_as_designed() {
        let r = run_suite(&NEGATIVE_CONTROLS, &PosetSource::Exhaustive { max_n: 4 }).unwrap();
        assert_eq!(r.violations, 0);
        assert!(r.laws[0].fail > 0);
        assert!(r.laws[0].counterexample.is_some());
    }

    #[test]
    fn seeds_do_not_depend_on_scheduling() {
        let src = PosetSource::Random { n: 6, trials: 8, seed: 3 };
        let a = run_suite(&["L4"], &src).unwrap();
        let b = run_suite(&["L4"], &src).unwrap();
        assert_eq!(a.laws[0].checked, b.laws[0].checked);
        assert_ne!(trial_seed(3, 0), trial_seed(3, 1));
    }
}
