use rand::Rng;

use super::statevector::StateVector;
use super::{verify, BackendPolicy, Direction, IndexRange, Mode, Predicate, SimRng, STATEVECTOR_MAX_RANGE};
use crate::error::Result;

/// Even with `c0 = 1` the guess schedule needs a few multiples of `√N`
/// iterates to reach a single marked item with probability 0.9.
const SCHEDULE_BUDGET_FACTOR: f64 = 3.0;
const SCHEDULE_GROWTH: f64 = 6.0 / 5.0;

/// Bounded-error search for any index of `range` whose predicate holds.
///
/// Returns `None` when nothing was found. With probability at least
/// `1 - eps` the answer is a marked index when one exists and `None`
/// otherwise.
pub fn grover<P: Predicate + ?Sized>(
    range: IndexRange,
    pred: &mut P,
    policy: &BackendPolicy,
    rng: &mut SimRng,
) -> Result<Option<usize>> {
    if use_statevector(policy, pred, range) {
        statevector_schedule(range, pred, policy, rng, range.len() as f64)
    } else {
        ideal_grover(range, pred, policy, rng)
    }
}

pub(super) fn use_statevector<P: Predicate + ?Sized>(policy: &BackendPolicy, pred: &P, range: IndexRange) -> bool {
    policy.mode == Mode::Statevector && pred.is_deterministic() && range.len() <= STATEVECTOR_MAX_RANGE
}

fn ideal_grover<P: Predicate + ?Sized>(
    range: IndexRange,
    pred: &mut P,
    policy: &BackendPolicy,
    rng: &mut SimRng,
) -> Result<Option<usize>> {
    let m = range.len();
    let (t, pick) = pred.marked_sample(range, rng);
    let flipped = rng.flip(policy.eps);
    let success = (t > 0) != flipped;
    let executions = if t > 0 && success {
        policy.sqrt_budget(m as f64 / t as f64)
    } else {
        policy.sqrt_budget(m as f64)
    };
    if policy.accounting {
        for _ in 0..executions {
            let i = range.sample(rng);
            pred.evaluate(i)?;
        }
    }
    if !success {
        return Ok(None);
    }
    Ok(if t > 0 { pick } else { Some(range.sample(rng)) })
}

/// Exponentially growing random iteration counts on a dense state. Every
/// iterate charges one predicate execution, as does checking each
/// measurement. Solutions are expected when at least `m / max_ratio` of the
/// range is marked; `max_ratio = m` is plain search.
pub(super) fn statevector_schedule<P: Predicate + ?Sized>(
    range: IndexRange,
    pred: &mut P,
    policy: &BackendPolicy,
    rng: &mut SimRng,
    max_ratio: f64,
) -> Result<Option<usize>> {
    let m = range.len();
    let marked: Vec<bool> = (range.lo..=range.hi).map(|i| pred.truth(i)).collect();
    let budget = (SCHEDULE_BUDGET_FACTOR * policy.sqrt_budget(max_ratio) as f64).ceil() as u64;
    let cap = max_ratio.sqrt().max(1.0);
    let mut guess = 1.0f64;
    let mut spent = 0u64;
    while spent < budget {
        let iterations = rng.gen_range(0..guess.ceil() as u64);
        let mut state = StateVector::uniform(m);
        for _ in 0..iterations {
            state.grover_iterate(&marked);
            pred.evaluate(range.sample(rng))?;
        }
        let i = range.lo + state.measure(rng);
        spent += iterations + 1;
        if pred.evaluate(i)? {
            return Ok(Some(i));
        }
        guess = (guess * SCHEDULE_GROWTH).min(cap);
    }
    Ok(None)
}

/// Search for the marked index nearest the border the direction starts
/// from: `Right` returns the minimal marked index, `Left` the maximal one.
///
/// Windows of doubling width anchored at the near border are searched until
/// one yields a marked index; the answer is then pushed toward the border
/// by re-searching strictly beyond it. A refinement NULL is accepted after
/// `policy.boost` consecutive misses.
pub fn grover_first_one<P: Predicate + ?Sized>(
    range: IndexRange,
    pred: &mut P,
    dir: Direction,
    policy: &BackendPolicy,
    rng: &mut SimRng,
) -> Result<Option<usize>> {
    let runs = policy.verify_runs(range.len());
    let mut width = 1usize;
    let found = loop {
        let window = anchored(range, width, dir);
        if let Some(i) = grover(window, pred, policy, rng)? {
            if verify(pred, i, runs)? {
                break Some(i);
            }
        }
        if window.len() == range.len() {
            break None;
        }
        width = width.saturating_mul(2);
    };
    let Some(mut best) = found else {
        return Ok(None);
    };
    let mut misses = 0;
    while misses < policy.boost {
        let rest = match dir {
            Direction::Right if best > range.lo => IndexRange::new(range.lo, best - 1)?,
            Direction::Left if best < range.hi => IndexRange::new(best + 1, range.hi)?,
            _ => break,
        };
        match grover(rest, pred, policy, rng)? {
            Some(i) if verify(pred, i, runs)? => {
                best = i;
                misses = 0;
            }
            _ => misses += 1,
        }
    }
    Ok(Some(best))
}

/// The `width`-long prefix (`Right`) or suffix (`Left`) of `range`.
pub(crate) fn anchored(range: IndexRange, width: usize, dir: Direction) -> IndexRange {
    let width = width.clamp(1, range.len());
    match dir {
        Direction::Right => IndexRange {
            lo: range.lo,
            hi: range.lo + width - 1,
        },
        Direction::Left => IndexRange {
            lo: range.hi + 1 - width,
            hi: range.hi,
        },
    }
}
