use super::{BackendPolicy, SimRng};
use crate::error::{Error, Result};

/// A randomized procedure that returns a value or NULL.
pub trait Procedure {
    type Output;

    /// One charged execution.
    fn run(&mut self, rng: &mut SimRng) -> Result<Option<Self::Output>>;

    /// A value the procedure can return with positive probability, or `None`
    /// if it never succeeds. Uncharged.
    fn truth_sample(&mut self, rng: &mut SimRng) -> Option<Self::Output>;
}

/// Amplitude amplification of a procedure that succeeds with probability at
/// least `p_min`.
///
/// The procedure is executed until it succeeds, at most `⌈c0·√(1/p_min)⌉`
/// times. With probability `1 - eps` the result is a genuine output when one
/// exists and `None` otherwise.
pub fn amplitude_amplify<P: Procedure + ?Sized>(
    proc: &mut P,
    p_min: f64,
    policy: &BackendPolicy,
    rng: &mut SimRng,
) -> Result<Option<P::Output>> {
    if !(p_min > 0.0 && p_min <= 1.0) {
        return Err(Error::InvalidParameter(format!(
            "success probability must lie in (0, 1], got {p_min}"
        )));
    }
    let budget = policy.sqrt_budget(1.0 / p_min);
    let truth = proc.truth_sample(rng);
    let flipped = rng.flip(policy.eps);
    match (truth, flipped) {
        (Some(value), false) => {
            if policy.accounting {
                for _ in 0..budget {
                    if let Some(v) = proc.run(rng)? {
                        return Ok(Some(v));
                    }
                }
            }
            Ok(Some(value))
        }
        (Some(_), true) | (None, false) => {
            if policy.accounting {
                for _ in 0..budget {
                    proc.run(rng)?;
                }
            }
            Ok(None)
        }
        (None, true) => {
            if !policy.accounting {
                return Ok(None);
            }
            for _ in 0..budget {
                proc.run(rng)?;
            }
            proc.run(rng)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    /// Succeeds with probability `p`, returning 42.
    struct Coin {
        p: f64,
        runs: u64,
    }

    impl Procedure for Coin {
        type Output = u32;

        fn run(&mut self, rng: &mut SimRng) -> Result<Option<u32>> {
            self.runs += 1;
            Ok((self.p > 0.0 && rng.gen_bool(self.p)).then_some(42))
        }

        fn truth_sample(&mut self, _rng: &mut SimRng) -> Option<u32> {
            (self.p > 0.0).then_some(42)
        }
    }

    #[test]
    fn amplifies_rare_success() {
        let policy = BackendPolicy::ideal(17);
        let mut rng = policy.rng();
        let mut ok = 0;
        for _ in 0..1000 {
            let mut c = Coin { p: 1.0 / 16.0, runs: 0 };
            if amplitude_amplify(&mut c, 1.0 / 16.0, &policy, &mut rng).unwrap() == Some(42) {
                ok += 1;
            }
            assert!(c.runs <= policy.sqrt_budget(16.0));
        }
        assert!(ok >= 850, "ok = {ok}");
    }

    #[test]
    fn certain_success_takes_one_run() {
        let policy = BackendPolicy::ideal(2).with_eps(0.0);
        let mut rng = policy.rng();
        let mut c = Coin { p: 1.0, runs: 0 };
        assert_eq!(amplitude_amplify(&mut c, 1.0, &policy, &mut rng).unwrap(), Some(42));
        assert_eq!(c.runs, 1);
    }

    #[test]
    fn never_succeeding_is_null() {
        let policy = BackendPolicy::ideal(4);
        let mut rng = policy.rng();
        for _ in 0..100 {
            let mut c = Coin { p: 0.0, runs: 0 };
            assert_eq!(amplitude_amplify(&mut c, 0.25, &policy, &mut rng).unwrap(), None);
        }
    }

    #[test]
    fn rejects_bad_probability() {
        let policy = BackendPolicy::ideal(4);
        let mut rng = policy.rng();
        let mut c = Coin { p: 0.5, runs: 0 };
        assert!(amplitude_amplify(&mut c, 0.0, &policy, &mut rng).is_err());
        assert!(amplitude_amplify(&mut c, 1.5, &policy, &mut rng).is_err());
    }
}
