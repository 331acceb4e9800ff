use super::{evaluate_law, Mode};
use crate::error::Result;
use crate::poset::Poset;

/// Deletes elements one at a time while the law keeps failing; the result
/// fails the law and every one-element deletion of it passes (or is vacuous).
pub fn shrink_counterexample(law_id: &str, p: &Poset, mode: Mode) -> Result<Poset> {
    let mut cur = p.clone();
    'outer: loop {
        for v in 0..cur.len() {
            let smaller = cur.remove_vertex(v);
            if evaluate_law(law_id, &smaller, mode)?.failed() {
                cur = smaller;
                continue 'outer;
            }
        }
        return Ok(cur);
    }
}
