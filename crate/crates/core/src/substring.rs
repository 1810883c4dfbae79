//! Recursive search for minimal `±k`-substrings of an oracle word.
//!
//! Every routine has two sides. The charged side reads the word only through
//! the [`CountingOracle`] and bottoms out in the bounded-error primitives of
//! [`crate::search`]. The exact side ([`ExactSearch`]) answers the same
//! question from a [`MinimalIndex`] without charging anything; the ideal
//! backend uses it to know which indices are marked.
//!
//! For `k ≥ 3`, `find_from` builds a `±k` match around `t` out of two
//! consecutive same-sign `±(k-1)` matches: starting from a `±(k-1)` match at
//! `t`, it walks the chain of matches that contain `t` toward the left and
//! toward the right, trying to merge each with its neighbour. With no
//! `±(k-1)` match at `t`, the nearest matches on each side are merged. The
//! union of two consecutive minimal `±(k-1)`-substrings of equal sign is a
//! minimal `±k`-substring, and every minimal `±k`-substring arises this way.

use std::cell::Cell;

use crate::error::{Error, Result};
use crate::minimal::{Coverage, MinimalIndex};
use crate::oracle::CountingOracle;
use crate::search::{
    amplitude_amplify, grover, grover_first_one, threshold_search, BackendPolicy, Direction, IndexRange, Predicate,
    Procedure, SimRng,
};
use crate::word::{Match, Sign, SignSet};

/// Counters collected across one searcher's lifetime.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Merged candidates that failed the final minimality check.
    pub rejected_merges: u64,
    pub find_from_calls: u64,
}

/// Charged search over one oracle.
#[derive(Debug)]
pub struct Searcher<'a> {
    oracle: &'a CountingOracle,
    index: MinimalIndex,
    policy: BackendPolicy,
    rejected: Cell<u64>,
    from_calls: Cell<u64>,
}

impl<'a> Searcher<'a> {
    /// Prepares a searcher able to handle every `k ≤ max_k`.
    pub fn new(oracle: &'a CountingOracle, max_k: u32, policy: BackendPolicy) -> Result<Self> {
        policy.validate()?;
        if max_k < 2 {
            return Err(Error::InvalidParameter(format!(
                "max_k must be at least 2, got {max_k}"
            )));
        }
        Ok(Searcher {
            oracle,
            index: MinimalIndex::new(&oracle.materialize(), max_k),
            policy,
            rejected: Cell::new(0),
            from_calls: Cell::new(0),
        })
    }

    pub fn oracle(&self) -> &CountingOracle {
        self.oracle
    }

    pub fn policy(&self) -> &BackendPolicy {
        &self.policy
    }

    pub fn exact(&self) -> ExactSearch<'_> {
        ExactSearch { index: &self.index }
    }

    pub fn stats(&self) -> SearchStats {
        SearchStats {
            rejected_merges: self.rejected.get(),
            find_from_calls: self.from_calls.get(),
        }
    }

    fn len(&self) -> usize {
        self.index.len()
    }

    fn check_k(&self, k: u32) -> Result<()> {
        if k < 2 || k > self.index.max_k() {
            return Err(Error::InvalidParameter(format!(
                "k must lie in [2, {}], got {k}",
                self.index.max_k()
            )));
        }
        Ok(())
    }

    fn check_range(&self, l: usize, r: usize) -> Result<()> {
        if l > r || r >= self.len() {
            return Err(Error::InvalidRange {
                lo: l,
                hi: r,
                len: self.len(),
            });
        }
        Ok(())
    }

    /// A minimal `±k`-substring with sign in `s`, length at most `d`, inside
    /// `[l, r]` and containing `t`, or `None`.
    #[allow(clippy::too_many_arguments)]
    pub fn find_from(
        &self,
        k: u32,
        l: usize,
        r: usize,
        t: usize,
        d: usize,
        s: SignSet,
        rng: &mut SimRng,
    ) -> Result<Option<Match>> {
        self.check_k(k)?;
        self.check_range(l, r)?;
        if t < l || t > r {
            return Err(Error::OutOfBounds {
                index: t,
                len: self.len(),
            });
        }
        if d < k as usize || d > r - l + 1 {
            return Err(Error::InvalidParameter(format!(
                "length bound {d} outside [{k}, {}]",
                r - l + 1
            )));
        }
        self.locate_inner(k, l, r, t, d, s, rng)
    }

    /// The first minimal `±k`-substring inside `[l, r]` in direction `dir`:
    /// smallest start for `Right`, largest end for `Left`.
    pub fn find_first(
        &self,
        k: u32,
        l: usize,
        r: usize,
        s: SignSet,
        dir: Direction,
        rng: &mut SimRng,
    ) -> Result<Option<Match>> {
        self.check_k(k)?;
        self.check_range(l, r)?;
        self.first_inner(k, l, r, s, dir, rng)
    }

    /// Some minimal `±k`-substring inside `[l, r]` of length at most `d`.
    /// One exists with high probability whenever a match of length in
    /// `[d/2, d]` does.
    pub fn find_fixed_len(
        &self,
        k: u32,
        l: usize,
        r: usize,
        d: usize,
        s: SignSet,
        rng: &mut SimRng,
    ) -> Result<Option<Match>> {
        self.check_k(k)?;
        self.check_range(l, r)?;
        if d < k as usize {
            return Err(Error::InvalidParameter(format!("length bound {d} below k = {k}")));
        }
        self.fixed_len_inner(k, l, r, d, s, rng)
    }

    /// Any minimal `±k`-substring inside `[l, r]`.
    pub fn find_any(&self, k: u32, l: usize, r: usize, s: SignSet, rng: &mut SimRng) -> Result<Option<Match>> {
        self.check_k(k)?;
        self.check_range(l, r)?;
        self.any_inner(k, l, r, s, rng)
    }

    #[allow(clippy::too_many_arguments)]
    fn locate_inner(
        &self,
        k: u32,
        l: usize,
        r: usize,
        t: usize,
        d: usize,
        s: SignSet,
        rng: &mut SimRng,
    ) -> Result<Option<Match>> {
        self.from_calls.set(self.from_calls.get() + 1);
        if k == 2 {
            return self.locate_two(l, r, t, s);
        }
        for _ in 0..self.policy.boost {
            if let Some(m) = self.locate_once(k, l, r, t, d, s, rng)? {
                return Ok(Some(m));
            }
        }
        Ok(None)
    }

    fn locate_two(&self, l: usize, r: usize, t: usize, s: SignSet) -> Result<Option<Match>> {
        let here = self.oracle.read(t)?;
        let sign = Sign::of_bit(here);
        if !s.contains(sign) {
            return Ok(None);
        }
        if t < r && self.oracle.read(t + 1)? == here {
            return Ok(Some(Match::new(t, t + 1, sign)));
        }
        if t > l && self.oracle.read(t - 1)? == here {
            return Ok(Some(Match::new(t - 1, t, sign)));
        }
        Ok(None)
    }

    #[allow(clippy::too_many_arguments)]
    fn locate_once(
        &self,
        k: u32,
        l: usize,
        r: usize,
        t: usize,
        d: usize,
        s: SignSet,
        rng: &mut SimRng,
    ) -> Result<Option<Match>> {
        let c = k - 1;
        let lo = l.max((t + 1).saturating_sub(d));
        let hi = r.min(t + d - 1);
        let merge = |a: Match, b: Match| self.merge(k, a, b, l, r, t, d, s);
        let Some(anchor) = self.locate_inner(c, l, r, t, d - 1, SignSet::BOTH, rng)? else {
            let right = self.first_inner(c, t, hi, SignSet::BOTH, Direction::Right, rng)?;
            let left = self.first_inner(c, lo, t, SignSet::BOTH, Direction::Left, rng)?;
            return Ok(match (left, right) {
                (Some(a), Some(b)) => merge(a, b),
                _ => None,
            });
        };

        let mut e = anchor;
        while e.end > lo {
            let Some(b) = self.first_inner(c, lo, e.end - 1, SignSet::BOTH, Direction::Left, rng)? else {
                break;
            };
            if let Some(m) = merge(b, e) {
                return Ok(Some(m));
            }
            if b.end < t || b.end >= e.end {
                break;
            }
            e = b;
        }

        let mut e = anchor;
        while e.start < hi {
            let Some(b) = self.first_inner(c, e.start + 1, hi, SignSet::BOTH, Direction::Right, rng)? else {
                break;
            };
            if let Some(m) = merge(e, b) {
                return Ok(Some(m));
            }
            if b.start > t || b.start <= e.start {
                break;
            }
            e = b;
        }
        Ok(None)
    }

    /// Union of two same-sign matches, accepted only if it is a minimal
    /// `±k`-substring meeting every constraint of the query.
    #[allow(clippy::too_many_arguments)]
    fn merge(&self, k: u32, a: Match, b: Match, l: usize, r: usize, t: usize, d: usize, s: SignSet) -> Option<Match> {
        if a.sign != b.sign || !s.contains(a.sign) || a == b {
            return None;
        }
        let m = Match::new(a.start.min(b.start), a.end.max(b.end), a.sign);
        if m.len() > d || !m.contains(t) || m.start < l || m.end > r {
            return None;
        }
        if !self.index.is_minimal(k, &m) {
            self.rejected.set(self.rejected.get() + 1);
            return None;
        }
        Some(m)
    }

    fn first_inner(
        &self,
        k: u32,
        l: usize,
        r: usize,
        s: SignSet,
        dir: Direction,
        rng: &mut SimRng,
    ) -> Result<Option<Match>> {
        if r - l + 1 < k as usize {
            return Ok(None);
        }
        if k == 2 {
            let mut pred = AdjacentPair::new(self, s);
            let hit = grover_first_one(IndexRange::new(l, r - 1)?, &mut pred, dir, &self.policy, rng)?;
            return Ok(hit.map(|i| pred.to_match(i)));
        }
        let range = IndexRange::new(l, r)?;
        let mut width = 1usize << ceil_log2(k as usize);
        let mut best = loop {
            let window = crate::search::anchored(range, width, dir);
            if let Some(m) = self.any_inner(k, window.lo, window.hi, s, rng)? {
                break m;
            }
            if window.len() == range.len() {
                return Ok(None);
            }
            width = width.saturating_mul(2);
        };
        let mut misses = 0;
        while misses < self.policy.boost {
            let rest = match dir {
                Direction::Right if best.end > l => (l, best.end - 1),
                Direction::Left if best.start < r => (best.start + 1, r),
                _ => break,
            };
            if rest.1 < rest.0 || rest.1 - rest.0 + 1 < k as usize {
                break;
            }
            match self.any_inner(k, rest.0, rest.1, s, rng)? {
                Some(m) => {
                    best = m;
                    misses = 0;
                }
                None => misses += 1,
            }
        }
        Ok(Some(best))
    }

    fn fixed_len_inner(
        &self,
        k: u32,
        l: usize,
        r: usize,
        d: usize,
        s: SignSet,
        rng: &mut SimRng,
    ) -> Result<Option<Match>> {
        let len = r - l + 1;
        if len < k as usize {
            return Ok(None);
        }
        let d = d.min(len);
        let mut pred = StartsHere {
            searcher: self,
            k,
            l,
            r,
            d,
            s,
            rng: rng.split(),
            last_hit: None,
        };
        let threshold = (d as f64 / 2.0).max(1.0);
        let Some(t) = threshold_search(IndexRange::new(l, r)?, &mut pred, threshold, &self.policy, rng)? else {
            return Ok(None);
        };
        if let Some(m) = pred.last_hit.filter(|m| m.contains(t)) {
            return Ok(Some(m));
        }
        if self.policy.accounting {
            return self.locate_inner(k, l, r, t, d, s, rng);
        }
        Ok(self.exact().find_from(k, l, r, t, d, s))
    }

    fn any_inner(&self, k: u32, l: usize, r: usize, s: SignSet, rng: &mut SimRng) -> Result<Option<Match>> {
        let len = r - l + 1;
        if len < k as usize {
            return Ok(None);
        }
        if k == 2 {
            let mut pred = AdjacentPair::new(self, s);
            let range = IndexRange::new(l, r - 1)?;
            let Some(i) = grover(range, &mut pred, &self.policy, rng)? else {
                return Ok(None);
            };
            return Ok(if pred.evaluate(i)? {
                Some(pred.to_match(i))
            } else {
                None
            });
        }
        let lengths = candidate_lengths(k, len);
        let p_min = 1.0 / lengths.len() as f64;
        let mut proc = AnyLength {
            searcher: self,
            k,
            l,
            r,
            s,
            lengths,
        };
        amplitude_amplify(&mut proc, p_min, &self.policy, rng)
    }
}

/// `⌈log2 x⌉` for `x ≥ 1`.
fn ceil_log2(x: usize) -> u32 {
    usize::BITS - (x.max(1) - 1).leading_zeros()
}

/// Powers of two from `2^⌈log2 k⌉` through `2^⌈log2 len⌉`.
pub fn candidate_lengths(k: u32, len: usize) -> Vec<usize> {
    let lo = ceil_log2(k as usize);
    let hi = ceil_log2(len).max(lo);
    (lo..=hi).map(|j| 1usize << j).collect()
}

/// `x_i = x_{i+1}` with sign in `s`, over start positions.
struct AdjacentPair<'s, 'a> {
    searcher: &'s Searcher<'a>,
    s: SignSet,
}

impl<'s, 'a> AdjacentPair<'s, 'a> {
    fn new(searcher: &'s Searcher<'a>, s: SignSet) -> Self {
        AdjacentPair { searcher, s }
    }

    fn to_match(&self, i: usize) -> Match {
        Match::new(i, i + 1, Sign::of_bit(self.searcher.index.bit(i)))
    }
}

impl Predicate for AdjacentPair<'_, '_> {
    fn evaluate(&mut self, i: usize) -> Result<bool> {
        let o = self.searcher.oracle;
        let here = o.read(i)?;
        if !self.s.contains(Sign::of_bit(here)) {
            return Ok(false);
        }
        Ok(o.read(i + 1)? == here)
    }

    fn truth(&self, i: usize) -> bool {
        let idx = &self.searcher.index;
        i + 1 < idx.len() && idx.bit(i) == idx.bit(i + 1) && self.s.contains(Sign::of_bit(idx.bit(i)))
    }

    fn marked_sample(&self, range: IndexRange, rng: &mut SimRng) -> (usize, Option<usize>) {
        let (count, m) = self
            .searcher
            .index
            .sample_within(2, range.lo, range.hi + 1, self.s, rng);
        (count, m.map(|m| m.start))
    }

    fn is_deterministic(&self) -> bool {
        true
    }
}

/// Whether a short enough match passes through `t`.
struct StartsHere<'s, 'a> {
    searcher: &'s Searcher<'a>,
    k: u32,
    l: usize,
    r: usize,
    d: usize,
    s: SignSet,
    rng: SimRng,
    last_hit: Option<Match>,
}

impl Predicate for StartsHere<'_, '_> {
    fn evaluate(&mut self, t: usize) -> Result<bool> {
        let hit = self
            .searcher
            .locate_inner(self.k, self.l, self.r, t, self.d, self.s, &mut self.rng)?;
        if hit.is_some() {
            self.last_hit = hit;
        }
        Ok(hit.is_some())
    }

    fn truth(&self, t: usize) -> bool {
        self.searcher
            .exact()
            .find_from(self.k, self.l, self.r, t, self.d, self.s)
            .is_some()
    }

    fn marked(&self, _range: IndexRange) -> Coverage {
        self.searcher.index.coverage(self.k, self.l, self.r, self.d, self.s)
    }

    fn is_deterministic(&self) -> bool {
        self.k == 2
    }
}

/// One fixed-length search at a uniformly drawn candidate length.
struct AnyLength<'s, 'a> {
    searcher: &'s Searcher<'a>,
    k: u32,
    l: usize,
    r: usize,
    s: SignSet,
    lengths: Vec<usize>,
}

impl Procedure for AnyLength<'_, '_> {
    type Output = Match;

    fn run(&mut self, rng: &mut SimRng) -> Result<Option<Match>> {
        use rand::seq::SliceRandom;
        let d = *self.lengths.choose(rng).expect("non-empty candidate list");
        self.searcher.fixed_len_inner(self.k, self.l, self.r, d, self.s, rng)
    }

    fn truth_sample(&mut self, rng: &mut SimRng) -> Option<Match> {
        self.searcher.index.sample_within(self.k, self.l, self.r, self.s, rng).1
    }
}

/// Uncharged reference answers for every search routine.
#[derive(Clone, Copy, Debug)]
pub struct ExactSearch<'i> {
    index: &'i MinimalIndex,
}

impl<'i> ExactSearch<'i> {
    pub fn new(index: &'i MinimalIndex) -> Self {
        ExactSearch { index }
    }

    /// The earliest-starting qualifying match containing `t`.
    pub fn find_from(&self, k: u32, l: usize, r: usize, t: usize, d: usize, s: SignSet) -> Option<Match> {
        if l > r || r >= self.index.len() {
            return None;
        }
        let lo = l.max((t + 1).saturating_sub(d));
        let hi = r.min(t + d - 1);
        self.index
            .within(k, lo, hi, s)
            .into_iter()
            .find(|m| m.contains(t) && m.len() <= d)
    }

    pub fn find_first(&self, k: u32, l: usize, r: usize, s: SignSet, dir: Direction) -> Option<Match> {
        self.index.first(k, l, r, s, dir)
    }

    /// The earliest-starting match of length at most `d`.
    pub fn find_fixed_len(&self, k: u32, l: usize, r: usize, d: usize, s: SignSet) -> Option<Match> {
        if l > r || r >= self.index.len() {
            return None;
        }
        self.index.within(k, l, r, s).into_iter().find(|m| m.len() <= d)
    }

    pub fn find_any(&self, k: u32, l: usize, r: usize, s: SignSet) -> Option<Match> {
        self.index.first(k, l, r, s, Direction::Right)
    }

    /// Indices `t` of `[l, r]` for which `find_from` answers non-NULL.
    pub fn from_coverage(&self, k: u32, l: usize, r: usize, d: usize, s: SignSet) -> Coverage {
        self.index.coverage(k, l, r, d, s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{brute_force_substrings, Word};

    fn w(s: &str) -> CountingOracle {
        CountingOracle::new(Word::parse(s).unwrap())
    }

    fn exact_policy(seed: u64) -> BackendPolicy {
        BackendPolicy::ideal(seed).with_eps(0.0)
    }

    #[test]
    fn from_two_examples() {
        let o = w("0011");
        let s = Searcher::new(&o, 2, exact_policy(0)).unwrap();
        let mut rng = s.policy().rng();
        assert_eq!(
            s.find_from(2, 0, 3, 1, 2, SignSet::PLUS, &mut rng).unwrap(),
            Some(Match::new(0, 1, Sign::Plus))
        );
        assert!(o.charged() <= 3);
        let o = w("0101");
        let s = Searcher::new(&o, 2, exact_policy(0)).unwrap();
        for t in 0..4 {
            assert_eq!(s.find_from(2, 0, 3, t, 2, SignSet::BOTH, &mut rng).unwrap(), None);
        }
        let o = w("000");
        let s = Searcher::new(&o, 2, exact_policy(0)).unwrap();
        assert_eq!(s.find_from(2, 0, 2, 1, 2, SignSet::MINUS, &mut rng).unwrap(), None);
    }

    #[test]
    fn first_two_examples() {
        let o = w("010011");
        let s = Searcher::new(&o, 2, exact_policy(1)).unwrap();
        let mut rng = s.policy().rng();
        assert_eq!(
            s.find_first(2, 0, 5, SignSet::BOTH, Direction::Right, &mut rng)
                .unwrap(),
            Some(Match::new(2, 3, Sign::Plus))
        );
        assert_eq!(
            s.find_first(2, 0, 5, SignSet::BOTH, Direction::Left, &mut rng).unwrap(),
            Some(Match::new(4, 5, Sign::Minus))
        );
        let o = w("0101");
        let s = Searcher::new(&o, 2, exact_policy(1)).unwrap();
        assert_eq!(
            s.find_first(2, 0, 3, SignSet::BOTH, Direction::Right, &mut rng)
                .unwrap(),
            None
        );
    }

    #[test]
    fn from_three_examples() {
        let o = w("000111");
        let s = Searcher::new(&o, 3, exact_policy(2)).unwrap();
        let mut rng = s.policy().rng();
        assert_eq!(
            s.find_from(3, 0, 5, 1, 6, SignSet::BOTH, &mut rng).unwrap(),
            Some(Match::new(0, 2, Sign::Plus))
        );
        assert_eq!(
            s.find_from(3, 0, 5, 4, 6, SignSet::BOTH, &mut rng).unwrap(),
            Some(Match::new(3, 5, Sign::Minus))
        );
        let o = w("010101");
        let s = Searcher::new(&o, 3, exact_policy(2)).unwrap();
        for t in 0..6 {
            assert_eq!(s.find_from(3, 0, 5, t, 6, SignSet::BOTH, &mut rng).unwrap(), None);
        }
    }

    #[test]
    fn fixed_len_examples() {
        let o = w("000111");
        let s = Searcher::new(&o, 3, exact_policy(3)).unwrap();
        let mut rng = s.policy().rng();
        let m = s.find_fixed_len(3, 0, 5, 4, SignSet::BOTH, &mut rng).unwrap();
        assert!(m == Some(Match::new(0, 2, Sign::Plus)) || m == Some(Match::new(3, 5, Sign::Minus)));
        let o = w("0101010101");
        let s = Searcher::new(&o, 3, exact_policy(3)).unwrap();
        assert_eq!(s.find_fixed_len(3, 0, 9, 8, SignSet::BOTH, &mut rng).unwrap(), None);
    }

    #[test]
    fn fixed_len_long_bound_is_sound() {
        let mut text = String::from("000111");
        for _ in 0..29 {
            text.push_str("01");
        }
        let o = w(&text);
        let s = Searcher::new(&o, 3, BackendPolicy::ideal(8)).unwrap();
        let mut rng = s.policy().rng();
        for _ in 0..20 {
            if let Some(m) = s.find_fixed_len(3, 0, 63, 64, SignSet::BOTH, &mut rng).unwrap() {
                assert!(m == Match::new(0, 2, Sign::Plus) || m == Match::new(3, 5, Sign::Minus));
            }
        }
    }

    #[test]
    fn any_examples() {
        let o = w("111000");
        let s = Searcher::new(&o, 3, exact_policy(4)).unwrap();
        let mut rng = s.policy().rng();
        let m = s.find_any(3, 0, 5, SignSet::BOTH, &mut rng).unwrap().unwrap();
        assert!(m == Match::new(0, 2, Sign::Minus) || m == Match::new(3, 5, Sign::Plus));
        let o = w("0101001101");
        let s = Searcher::new(&o, 3, exact_policy(4)).unwrap();
        assert_eq!(s.find_any(3, 0, 9, SignSet::BOTH, &mut rng).unwrap(), None);
        let o = w("0110");
        let s = Searcher::new(&o, 2, exact_policy(4)).unwrap();
        assert_eq!(
            s.find_any(2, 0, 3, SignSet::BOTH, &mut rng).unwrap(),
            Some(Match::new(1, 2, Sign::Minus))
        );
    }

    #[test]
    fn first_k_matches_reference() {
        let o = w("0110110110110110011000");
        let s = Searcher::new(&o, 3, exact_policy(5)).unwrap();
        let mut rng = s.policy().rng();
        let all = brute_force_substrings(o.base(), 3, SignSet::BOTH, 0, o.base().len() - 1).unwrap();
        let got = s
            .find_first(3, 0, 21, SignSet::BOTH, Direction::Right, &mut rng)
            .unwrap();
        assert_eq!(got, all.first().copied());
        let o = w("0101010101");
        let s = Searcher::new(&o, 3, exact_policy(5)).unwrap();
        assert_eq!(
            s.find_first(3, 0, 9, SignSet::BOTH, Direction::Left, &mut rng).unwrap(),
            None
        );
    }

    #[test]
    fn rejects_bad_parameters() {
        let o = w("000111");
        let s = Searcher::new(&o, 3, exact_policy(6)).unwrap();
        let mut rng = s.policy().rng();
        assert!(s.find_from(3, 0, 5, 1, 2, SignSet::BOTH, &mut rng).is_err());
        assert!(s.find_from(3, 2, 5, 1, 3, SignSet::BOTH, &mut rng).is_err());
        assert!(s.find_any(4, 0, 5, SignSet::BOTH, &mut rng).is_err());
        assert!(s.find_any(3, 4, 2, SignSet::BOTH, &mut rng).is_err());
        assert!(Searcher::new(&o, 1, exact_policy(6)).is_err());
    }

    #[test]
    fn candidate_length_ladder() {
        assert_eq!(candidate_lengths(3, 6), vec![4, 8]);
        assert_eq!(candidate_lengths(4, 4), vec![4]);
        assert_eq!(candidate_lengths(5, 17), vec![8, 16, 32]);
    }
}
