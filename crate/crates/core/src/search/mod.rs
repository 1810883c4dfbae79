//! Bounded-error search primitives on two backends.
//!
//! The exact-statevector backend evolves a real amplitude vector and is
//! limited to deterministic predicates over at most `2^16` indices. The
//! ideal-stochastic backend never builds a state: it reads the true marked
//! set from the predicate's uncharged truth side channel, draws the outcome
//! with the success probability an ideal quantum routine would have, and
//! charges queries by actually executing the (possibly recursive) evaluator
//! at as many sampled indices as the routine would query.

mod amplify;
mod grover;
pub mod statevector;
mod threshold;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::minimal::Coverage;

pub use amplify::{amplitude_amplify, Procedure};
pub(crate) use grover::anchored;
pub use grover::{grover, grover_first_one};
pub use threshold::threshold_search;

/// Largest search range the statevector backend will simulate.
pub const STATEVECTOR_MAX_RANGE: usize = 1 << 16;

/// Scan direction. `Right` scans from the left border and yields the
/// minimal index; `Left` scans from the right border and yields the maximal
/// index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Statevector,
    Ideal,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Statevector => "statevector",
            Mode::Ideal => "ideal",
        }
    }
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mode> {
        match s {
            "statevector" | "exact" => Ok(Mode::Statevector),
            "ideal" | "stochastic" => Ok(Mode::Ideal),
            other => Err(Error::InvalidParameter(format!("unknown backend {other:?}"))),
        }
    }
}

/// Execution mode and the constants hidden inside the `O(·)` bounds.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BackendPolicy {
    pub mode: Mode,
    /// Multiplier on every `√·` query budget.
    pub c0: f64,
    /// Per-call failure probability injected by the ideal backend.
    pub eps: f64,
    pub seed: u64,
    /// Re-runs per recursive level before a NULL is accepted.
    pub boost: u32,
    /// Verification runs are `⌈verify_factor · log2 m⌉`.
    pub verify_factor: f64,
    /// When false, the ideal backend skips the charged evaluator executions
    /// and only draws outcomes. Answer distributions are unchanged; query
    /// counts are not produced.
    pub accounting: bool,
}

impl Default for BackendPolicy {
    fn default() -> Self {
        BackendPolicy {
            mode: Mode::Ideal,
            c0: 2.0,
            eps: 0.1,
            seed: 0,
            boost: 3,
            verify_factor: 3.0,
            accounting: true,
        }
    }
}

impl BackendPolicy {
    pub fn ideal(seed: u64) -> Self {
        BackendPolicy {
            seed,
            ..Default::default()
        }
    }

    pub fn statevector(seed: u64) -> Self {
        BackendPolicy {
            mode: Mode::Statevector,
            seed,
            ..Default::default()
        }
    }

    pub fn with_eps(mut self, eps: f64) -> Self {
        self.eps = eps;
        self
    }

    pub fn with_c0(mut self, c0: f64) -> Self {
        self.c0 = c0;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.c0.is_finite() && self.c0 > 0.0) {
            return Err(Error::InvalidParameter(format!("c0 must be positive, got {}", self.c0)));
        }
        if !(self.eps >= 0.0 && self.eps < 0.5) {
            return Err(Error::InvalidParameter(format!(
                "eps must lie in [0, 0.5), got {}",
                self.eps
            )));
        }
        if self.boost == 0 {
            return Err(Error::InvalidParameter("boost must be at least 1".into()));
        }
        if !(self.verify_factor.is_finite() && self.verify_factor > 0.0) {
            return Err(Error::InvalidParameter("verify_factor must be positive".into()));
        }
        Ok(())
    }

    pub fn rng(&self) -> SimRng {
        SimRng::new(self.seed)
    }

    /// `⌈c0 · √x⌉`, at least 1.
    pub(crate) fn sqrt_budget(&self, x: f64) -> u64 {
        ((self.c0 * x.max(0.0).sqrt()).ceil() as u64).max(1)
    }

    /// `⌈verify_factor · log2 m⌉`, at least 1.
    pub(crate) fn verify_runs(&self, m: usize) -> u64 {
        ((self.verify_factor * (m.max(1) as f64).log2()).ceil() as u64).max(1)
    }
}

/// Seeded stream; `split` hands a child stream to a sub-call.
#[derive(Clone, Debug)]
pub struct SimRng(ChaCha8Rng);

impl SimRng {
    pub fn new(seed: u64) -> Self {
        SimRng(ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn split(&mut self) -> SimRng {
        SimRng(ChaCha8Rng::seed_from_u64(self.0.next_u64()))
    }

    pub(crate) fn flip(&mut self, p: f64) -> bool {
        p > 0.0 && self.0.gen_bool(p.min(1.0))
    }
}

impl RngCore for SimRng {
    fn next_u32(&mut self) -> u32 {
        self.0.next_u32()
    }

    fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    fn fill_bytes(&mut self, dest: &mut [u8]) {
        self.0.fill_bytes(dest)
    }

    fn try_fill_bytes(&mut self, dest: &mut [u8]) -> std::result::Result<(), rand::Error> {
        self.0.try_fill_bytes(dest)
    }
}

/// Closed index interval `[lo, hi]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct IndexRange {
    pub lo: usize,
    pub hi: usize,
}

impl IndexRange {
    pub fn new(lo: usize, hi: usize) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidRange { lo, hi, len: hi + 1 });
        }
        Ok(IndexRange { lo, hi })
    }

    pub fn len(&self) -> usize {
        self.hi - self.lo + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, i: usize) -> bool {
        self.lo <= i && i <= self.hi
    }

    pub(crate) fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> usize {
        rng.gen_range(self.lo..=self.hi)
    }
}

/// A search predicate: a charged, possibly randomized evaluator plus an
/// exact uncharged reference used by the ideal backend.
pub trait Predicate {
    /// Charged execution at index `i`.
    fn evaluate(&mut self, i: usize) -> Result<bool>;

    /// Exact value at `i`, without charging queries.
    fn truth(&self, i: usize) -> bool;

    /// True marked set within `range`. The default scans `truth`.
    fn marked(&self, range: IndexRange) -> Coverage {
        let mut spans = Vec::new();
        let mut open: Option<usize> = None;
        for i in range.lo..=range.hi {
            match (self.truth(i), open) {
                (true, None) => open = Some(i),
                (false, Some(s)) => {
                    spans.push((s, i - 1));
                    open = None;
                }
                _ => {}
            }
        }
        if let Some(s) = open {
            spans.push((s, range.hi));
        }
        Coverage::from_spans(spans)
    }

    /// Size of the true marked set within `range` and one of its members
    /// drawn uniformly.
    fn marked_sample(&self, range: IndexRange, rng: &mut SimRng) -> (usize, Option<usize>) {
        let marked = self.marked(range);
        (marked.count(), marked.sample(rng))
    }

    /// Whether `evaluate` always agrees with `truth`. Required by the
    /// statevector backend.
    fn is_deterministic(&self) -> bool {
        false
    }
}

/// Predicate over a fixed marked set; each evaluation costs one query.
#[derive(Debug, Clone)]
pub struct MarkedSet {
    marked: Vec<bool>,
    evaluations: u64,
}

impl MarkedSet {
    pub fn new(len: usize, marked: &[usize]) -> Self {
        let mut v = vec![false; len];
        for &i in marked {
            v[i] = true;
        }
        MarkedSet {
            marked: v,
            evaluations: 0,
        }
    }

    pub fn evaluations(&self) -> u64 {
        self.evaluations
    }
}

impl Predicate for MarkedSet {
    fn evaluate(&mut self, i: usize) -> Result<bool> {
        self.evaluations += 1;
        self.marked.get(i).copied().ok_or(Error::OutOfBounds {
            index: i,
            len: self.marked.len(),
        })
    }

    fn truth(&self, i: usize) -> bool {
        self.marked.get(i).copied().unwrap_or(false)
    }

    fn is_deterministic(&self) -> bool {
        true
    }
}

/// Majority of `runs` evaluations at `i`. Deterministic predicates are
/// evaluated once.
pub(crate) fn verify<P: Predicate + ?Sized>(pred: &mut P, i: usize, runs: u64) -> Result<bool> {
    if pred.is_deterministic() {
        return pred.evaluate(i);
    }
    let mut yes = 0u64;
    for done in 0..runs {
        if pred.evaluate(i)? {
            yes += 1;
        }
        let remaining = runs - done - 1;
        if 2 * yes > runs || 2 * (yes + remaining) <= runs {
            break;
        }
    }
    Ok(2 * yes > runs)
}
