use rand::Rng;

use super::grover::{statevector_schedule, use_statevector};
use super::{verify, BackendPolicy, IndexRange, Predicate, SimRng};
use crate::error::{Error, Result};

/// Threshold search over bounded-error evaluators.
///
/// With constant probability: returns a marked index when at least
/// `threshold` indices are marked, returns `None` when none are, and may
/// return either otherwise. About `c0·√(m / threshold)` evaluator runs are
/// spent searching; the candidate is then re-verified by a majority of
/// `⌈verify_factor · log2 m⌉` runs, so an index is only returned if the
/// evaluator confirms it.
///
/// Below the threshold the ideal backend succeeds with probability
/// `count / threshold`.
pub fn threshold_search<P: Predicate + ?Sized>(
    range: IndexRange,
    pred: &mut P,
    threshold: f64,
    policy: &BackendPolicy,
    rng: &mut SimRng,
) -> Result<Option<usize>> {
    if threshold.is_nan() || threshold < 1.0 {
        return Err(Error::InvalidParameter(format!(
            "threshold must be >= 1, got {threshold}"
        )));
    }
    let m = range.len();
    let ratio = (m as f64 / threshold).max(1.0);
    let candidate = if use_statevector(policy, pred, range) {
        statevector_schedule(range, pred, policy, rng, ratio)?
    } else {
        let (t, pick) = pred.marked_sample(range, rng);
        let p_hit = if t == 0 { 0.0 } else { (t as f64 / threshold).min(1.0) };
        let hit = p_hit > 0.0 && rng.gen_bool(p_hit);
        let success = hit != rng.flip(policy.eps);
        let executions = if success && t > 0 {
            policy.sqrt_budget(m as f64 / threshold.max(t as f64))
        } else {
            policy.sqrt_budget(ratio)
        };
        if policy.accounting {
            for _ in 0..executions {
                let i = range.sample(rng);
                pred.evaluate(i)?;
            }
        }
        match (success, t > 0) {
            (false, _) => None,
            (true, true) => pick,
            (true, false) => Some(range.sample(rng)),
        }
    };
    let Some(i) = candidate else {
        return Ok(None);
    };
    if !policy.accounting && !pred.is_deterministic() {
        return Ok(pred.truth(i).then_some(i));
    }
    Ok(verify(pred, i, policy.verify_runs(m))?.then_some(i))
}
