//! Bounded-height Dyck membership through the padding reduction: `x` is in
//! `Dyck_k` exactly when `1^k · x · 0^k` has no `±(k+1)`-substring.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::oracle::CountingOracle;
use crate::search::{BackendPolicy, SimRng};
use crate::substring::Searcher;
use crate::word::{SignSet, Word};

/// Outcome of one decision run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Decision {
    pub member: bool,
    /// Height bound actually used, after lowering for short words.
    pub k: u32,
    pub charged_queries: u64,
}

/// Decides `Dyck_k` membership of `w` with two-sided error.
pub fn decide_dyck(w: &Word, k: u32, policy: &BackendPolicy) -> Result<Decision> {
    decide_dyck_with(w, k, policy, &mut policy.rng())
}

/// As [`decide_dyck`], drawing randomness from `rng`.
pub fn decide_dyck_with(w: &Word, k: u32, policy: &BackendPolicy, rng: &mut SimRng) -> Result<Decision> {
    if k == 0 {
        return Err(Error::InvalidParameter("height bound k must be at least 1".into()));
    }
    policy.validate()?;
    let n = w.len();
    if n == 0 {
        return Ok(Decision {
            member: true,
            k,
            charged_queries: 0,
        });
    }
    let k = if n < 2 * k as usize { n.div_ceil(2) as u32 } else { k };
    let oracle = CountingOracle::padded(w.clone(), k as usize);
    let searcher = Searcher::new(&oracle, k + 1, *policy)?;
    let last = oracle.effective_len() - 1;
    let found = searcher.find_any(k + 1, 0, last, SignSet::BOTH, rng)?;
    Ok(Decision {
        member: found.is_none(),
        k,
        charged_queries: oracle.charged(),
    })
}

/// Number of independent runs the majority vote uses for `eps_target`.
pub fn amplification_runs(eps_target: f64) -> Result<u32> {
    if !(eps_target > 0.0 && eps_target < 0.5) {
        return Err(Error::InvalidParameter(format!(
            "eps_target must lie in (0, 0.5), got {eps_target}"
        )));
    }
    Ok(((18.0 * (1.0 / eps_target).ln()).ceil() as u32).max(1))
}

/// Majority vote over [`amplification_runs`] independent runs. The reported
/// query count is the total over all runs.
pub fn decide_dyck_amplified(w: &Word, k: u32, eps_target: f64, policy: &BackendPolicy) -> Result<Decision> {
    let runs = amplification_runs(eps_target)?;
    let mut rng = policy.rng();
    let seeds: Vec<SimRng> = (0..runs).map(|_| rng.split()).collect();
    let results: Vec<Decision> = seeds
        .into_par_iter()
        .map(|mut r| decide_dyck_with(w, k, policy, &mut r))
        .collect::<Result<_>>()?;
    let yes = results.iter().filter(|d| d.member).count();
    Ok(Decision {
        member: 2 * yes > results.len(),
        k: results[0].k,
        charged_queries: results.iter().map(|d| d.charged_queries).sum(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn small_examples() {
        let p = BackendPolicy::ideal(1).with_eps(0.0);
        assert!(decide_dyck(&word("01"), 1, &p).unwrap().member);
        assert!(!decide_dyck(&word("0011"), 1, &p).unwrap().member);
        assert!(decide_dyck(&word("0011"), 2, &p).unwrap().member);
        assert!(decide_dyck(&Word::empty(), 3, &p).unwrap().member);
    }

    #[test]
    fn short_words_lower_k() {
        let p = BackendPolicy::ideal(1).with_eps(0.0);
        let d = decide_dyck(&word("0101"), 5, &p).unwrap();
        assert_eq!(d.k, 2);
        assert!(d.member);
    }

    #[test]
    fn rejects_zero_height() {
        let p = BackendPolicy::ideal(1);
        assert!(decide_dyck(&word("01"), 0, &p).is_err());
    }

    #[test]
    fn run_counts() {
        assert_eq!(amplification_runs(0.01).unwrap(), 83);
        assert!(amplification_runs(0.4).unwrap() >= 1);
        assert!(amplification_runs(0.5).is_err());
        assert!(amplification_runs(0.0).is_err());
    }

    #[test]
    fn amplified_pair_is_member() {
        let mut ok = 0;
        for seed in 0..100 {
            let p = BackendPolicy::ideal(seed);
            if decide_dyck_amplified(&word("01"), 1, 0.01, &p).unwrap().member {
                ok += 1;
            }
        }
        assert!(ok >= 99);
    }

    #[test]
    fn certain_backend_matches_single_run() {
        let p = BackendPolicy::ideal(3).with_eps(0.0);
        for s in ["0101", "0011", "0110", "000111"] {
            let w = word(s);
            assert_eq!(
                decide_dyck_amplified(&w, 2, 0.1, &p).unwrap().member,
                decide_dyck(&w, 2, &p).unwrap().member
            );
        }
    }
}
