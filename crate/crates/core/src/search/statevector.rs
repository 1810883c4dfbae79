//! Dense real-amplitude simulation of the Grover iterate over an index
//! register of arbitrary dimension `N`.

use rand::Rng;

/// Amplitudes over `N` basis states.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amps: Vec<f64>,
}

impl StateVector {
    /// The uniform superposition over `n` states.
    pub fn uniform(n: usize) -> Self {
        assert!(n > 0, "empty register");
        let a = 1.0 / (n as f64).sqrt();
        StateVector { amps: vec![a; n] }
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[f64] {
        &self.amps
    }

    /// Phase oracle: negate the marked amplitudes.
    pub fn apply_oracle(&mut self, marked: &[bool]) {
        for (a, &m) in self.amps.iter_mut().zip(marked) {
            if m {
                *a = -*a;
            }
        }
    }

    /// Inversion about the mean, `2|s><s| - I`.
    pub fn apply_diffusion(&mut self) {
        let mean = self.amps.iter().sum::<f64>() / self.amps.len() as f64;
        for a in &mut self.amps {
            *a = 2.0 * mean - *a;
        }
    }

    pub fn grover_iterate(&mut self, marked: &[bool]) {
        self.apply_oracle(marked);
        self.apply_diffusion();
    }

    pub fn probability_of(&self, marked: &[bool]) -> f64 {
        self.amps
            .iter()
            .zip(marked)
            .filter(|(_, &m)| m)
            .map(|(a, _)| a * a)
            .sum()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a * a).sum()
    }

    /// Samples a basis state with probability `|a_i|^2`.
    pub fn measure<R: Rng + ?Sized>(&self, rng: &mut R) -> usize {
        let total = self.norm_sqr();
        let mut u = rng.gen::<f64>() * total;
        for (i, a) in self.amps.iter().enumerate() {
            u -= a * a;
            if u <= 0.0 {
                return i;
            }
        }
        self.amps.len() - 1
    }
}

/// `sin²((2m + 1)·asin(√(t/N)))`, the probability of measuring a marked
/// state after `m` iterates from the uniform superposition.
pub fn grover_success_probability(n: usize, t: usize, m: u64) -> f64 {
    let theta = (t as f64 / n as f64).sqrt().asin();
    ((2 * m + 1) as f64 * theta).sin().powi(2)
}

/// Probability of measuring a marked state after `m` simulated iterates.
pub fn simulated_success_probability(n: usize, marked: &[bool], m: u64) -> f64 {
    let mut state = StateVector::uniform(n);
    for _ in 0..m {
        state.grover_iterate(marked);
    }
    state.probability_of(marked)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_iterate_on_four_states_is_certain() {
        let marked = [false, false, true, false];
        let p = simulated_success_probability(4, &marked, 1);
        assert!((p - 1.0).abs() < 1e-12);
        assert!((grover_success_probability(4, 1, 1) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn iterate_preserves_norm() {
        let marked: Vec<bool> = (0..37).map(|i| i % 5 == 0).collect();
        let mut s = StateVector::uniform(37);
        for _ in 0..9 {
            s.grover_iterate(&marked);
            assert!((s.norm_sqr() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn measurement_follows_amplitudes() {
        let marked = [false, false, true, false];
        let mut s = StateVector::uniform(4);
        s.grover_iterate(&marked);
        let mut rng = rand::thread_rng();
        for _ in 0..50 {
            assert_eq!(s.measure(&mut rng), 2);
        }
    }
}
