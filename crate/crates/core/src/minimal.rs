//! Exact index of minimal `±k`-substrings, built from prefix sums.
//!
//! A window `x[i, j]` with balance `+k` is minimal exactly when the running
//! balance stays strictly between `P[i]` and `P[i] + k` on the interior, i.e.
//! the walk first reaches `P[i] + k` before it returns to `P[i]`. So every
//! start has at most one minimal substring per sign, and the lists below are
//! sorted by start and by end simultaneously.
//!
//! The index supplies the uncharged truth side channel of the ideal backend.
//! Search routines never read it to produce charged answers.

use rand::Rng;

use crate::search::Direction;
use crate::word::{Match, Sign, SignSet, Word};

#[derive(Debug, Clone, Default)]
struct SparseMin {
    table: Vec<Vec<u32>>,
}

impl SparseMin {
    fn new(values: &[u32]) -> Self {
        if values.is_empty() {
            return SparseMin::default();
        }
        let mut table = vec![values.to_vec()];
        let mut width = 1usize;
        while 2 * width <= values.len() {
            let prev = table.last().unwrap();
            let next: Vec<u32> = (0..=values.len() - 2 * width)
                .map(|i| prev[i].min(prev[i + width]))
                .collect();
            table.push(next);
            width *= 2;
        }
        SparseMin { table }
    }

    /// Minimum over `lo..hi` (non-empty).
    fn query(&self, lo: usize, hi: usize) -> u32 {
        let span = hi - lo;
        let level = (usize::BITS - 1 - span.leading_zeros()) as usize;
        let row = &self.table[level];
        row[lo].min(row[hi - (1 << level)])
    }
}

#[derive(Debug, Clone, Default)]
struct SignedList {
    starts: Vec<usize>,
    ends: Vec<usize>,
    lengths: SparseMin,
}

impl SignedList {
    /// List positions of the substrings lying inside `[l, r]`.
    fn slice(&self, l: usize, r: usize) -> std::ops::Range<usize> {
        let lo = self.starts.partition_point(|&s| s < l);
        let hi = self.ends.partition_point(|&e| e <= r);
        if lo < hi {
            lo..hi
        } else {
            lo..lo
        }
    }
}

#[derive(Debug, Clone, Default)]
struct Level {
    plus: SignedList,
    minus: SignedList,
}

impl Level {
    fn list(&self, sign: Sign) -> &SignedList {
        match sign {
            Sign::Plus => &self.plus,
            Sign::Minus => &self.minus,
        }
    }
}

/// Minimal `±k`-substrings of one word for every `k` up to a bound.
#[derive(Debug, Clone)]
pub struct MinimalIndex {
    bits: Vec<bool>,
    sums: Vec<i64>,
    levels: Vec<Level>,
}

impl MinimalIndex {
    pub fn new(word: &Word, max_k: u32) -> Self {
        let sums = word.prefix_sums();
        let n = word.len();
        let offset = n as i64;
        // next_at[v + offset]: smallest prefix position > current holding v.
        let mut levels = vec![Level::default(); max_k as usize + 1];
        for (k, level) in levels.iter_mut().enumerate().skip(1) {
            let k = k as i64;
            let mut next_at = vec![usize::MAX; 2 * n + 3];
            let mut plus_rev = Vec::new();
            let mut minus_rev = Vec::new();
            for i in (0..=n).rev() {
                let here = sums[i];
                let ret = next_at[(here + offset) as usize];
                let slot = |v: i64| -> usize {
                    let idx = v + offset;
                    if idx < 0 || idx as usize >= next_at.len() {
                        usize::MAX
                    } else {
                        next_at[idx as usize]
                    }
                };
                let up = slot(here + k);
                if up != usize::MAX && up < ret {
                    plus_rev.push((i, up - 1));
                }
                let down = slot(here - k);
                if down != usize::MAX && down < ret {
                    minus_rev.push((i, down - 1));
                }
                next_at[(here + offset) as usize] = i;
            }
            level.plus = build_list(plus_rev);
            level.minus = build_list(minus_rev);
        }
        MinimalIndex {
            bits: word.bits().to_vec(),
            sums,
            levels,
        }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn max_k(&self) -> u32 {
        (self.levels.len() - 1) as u32
    }

    pub fn bit(&self, i: usize) -> bool {
        self.bits[i]
    }

    pub fn balance(&self, i: usize, j: usize) -> i64 {
        self.sums[j + 1] - self.sums[i]
    }

    fn level(&self, k: u32) -> &Level {
        assert!(
            k >= 1 && (k as usize) < self.levels.len(),
            "index built for k <= {}, asked for {k}",
            self.max_k()
        );
        &self.levels[k as usize]
    }

    /// Number of minimal `±k`-substrings of the whole word with sign in `signs`.
    pub fn count(&self, k: u32, signs: SignSet) -> usize {
        let level = self.level(k);
        signs.signs().map(|s| level.list(s).starts.len()).sum()
    }

    /// All minimal substrings inside `[l, r]`, ordered by start.
    pub fn within(&self, k: u32, l: usize, r: usize, signs: SignSet) -> Vec<Match> {
        let level = self.level(k);
        let mut out = Vec::new();
        for sign in signs.signs() {
            let list = level.list(sign);
            for p in list.slice(l, r) {
                out.push(Match::new(list.starts[p], list.ends[p], sign));
            }
        }
        out.sort();
        out
    }

    /// The first minimal substring inside `[l, r]` in the given direction:
    /// smallest start for `Right`, largest end for `Left`.
    pub fn first(&self, k: u32, l: usize, r: usize, signs: SignSet, dir: Direction) -> Option<Match> {
        if l > r || r >= self.len() {
            return None;
        }
        let level = self.level(k);
        let mut best: Option<Match> = None;
        for sign in signs.signs() {
            let list = level.list(sign);
            let range = list.slice(l, r);
            if range.is_empty() {
                continue;
            }
            let p = match dir {
                Direction::Right => range.start,
                Direction::Left => range.end - 1,
            };
            let cand = Match::new(list.starts[p], list.ends[p], sign);
            best = match (best, dir) {
                (None, _) => Some(cand),
                (Some(b), Direction::Right) if cand.start < b.start => Some(cand),
                (Some(b), Direction::Left) if cand.end > b.end => Some(cand),
                (b, _) => b,
            };
        }
        best
    }

    /// Number of minimal substrings inside `[l, r]` and one of them drawn
    /// uniformly.
    pub fn sample_within<R: Rng + ?Sized>(
        &self,
        k: u32,
        l: usize,
        r: usize,
        signs: SignSet,
        rng: &mut R,
    ) -> (usize, Option<Match>) {
        if l > r || r >= self.len() {
            return (0, None);
        }
        let level = self.level(k);
        let slices: Vec<(Sign, std::ops::Range<usize>)> =
            signs.signs().map(|s| (s, level.list(s).slice(l, r))).collect();
        let total: usize = slices.iter().map(|(_, r)| r.len()).sum();
        if total == 0 {
            return (0, None);
        }
        let mut u = rng.gen_range(0..total);
        for (sign, range) in slices {
            if u < range.len() {
                let list = level.list(sign);
                let p = range.start + u;
                return (total, Some(Match::new(list.starts[p], list.ends[p], sign)));
            }
            u -= range.len();
        }
        unreachable!()
    }

    /// Length of the shortest minimal substring inside `[l, r]`.
    pub fn shortest(&self, k: u32, l: usize, r: usize, signs: SignSet) -> Option<usize> {
        if l > r || r >= self.len() {
            return None;
        }
        let level = self.level(k);
        signs
            .signs()
            .filter_map(|sign| {
                let list = level.list(sign);
                let range = list.slice(l, r);
                (!range.is_empty()).then(|| list.lengths.query(range.start, range.end) as usize)
            })
            .min()
    }

    /// Whether `m` is one of the minimal `±k`-substrings of the word.
    pub fn is_minimal(&self, k: u32, m: &Match) -> bool {
        let list = self.level(k).list(m.sign);
        match list.starts.binary_search(&m.start) {
            Ok(p) => list.ends[p] == m.end,
            Err(_) => false,
        }
    }

    /// Positions of `[l, r]` covered by some minimal substring of length at
    /// most `d` lying inside `[l, r]`.
    pub fn coverage(&self, k: u32, l: usize, r: usize, d: usize, signs: SignSet) -> Coverage {
        let mut spans: Vec<(usize, usize)> = Vec::new();
        if l <= r && r < self.len() {
            let level = self.level(k);
            for sign in signs.signs() {
                let list = level.list(sign);
                for p in list.slice(l, r) {
                    let (s, e) = (list.starts[p], list.ends[p]);
                    if e - s < d {
                        spans.push((s, e));
                    }
                }
            }
        }
        Coverage::from_spans(spans)
    }
}

fn build_list(mut rev: Vec<(usize, usize)>) -> SignedList {
    rev.reverse();
    let starts: Vec<usize> = rev.iter().map(|p| p.0).collect();
    let ends: Vec<usize> = rev.iter().map(|p| p.1).collect();
    let lens: Vec<u32> = rev.iter().map(|p| (p.1 - p.0 + 1) as u32).collect();
    debug_assert!(ends.windows(2).all(|w| w[0] < w[1]));
    SignedList {
        starts,
        ends,
        lengths: SparseMin::new(&lens),
    }
}

/// A union of disjoint closed intervals, with uniform sampling.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Coverage {
    intervals: Vec<(usize, usize)>,
    cumulative: Vec<usize>,
}

impl Coverage {
    pub fn from_spans(mut spans: Vec<(usize, usize)>) -> Self {
        spans.sort_unstable();
        let mut intervals: Vec<(usize, usize)> = Vec::with_capacity(spans.len());
        for (s, e) in spans {
            match intervals.last_mut() {
                Some(last) if s <= last.1 + 1 => last.1 = last.1.max(e),
                _ => intervals.push((s, e)),
            }
        }
        let mut cumulative = Vec::with_capacity(intervals.len());
        let mut acc = 0;
        for &(s, e) in &intervals {
            acc += e - s + 1;
            cumulative.push(acc);
        }
        Coverage { intervals, cumulative }
    }

    pub fn count(&self) -> usize {
        self.cumulative.last().copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn contains(&self, t: usize) -> bool {
        let p = self.intervals.partition_point(|&(_, e)| e < t);
        p < self.intervals.len() && self.intervals[p].0 <= t
    }

    pub fn intervals(&self) -> &[(usize, usize)] {
        &self.intervals
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Option<usize> {
        let total = self.count();
        if total == 0 {
            return None;
        }
        let u = rng.gen_range(0..total);
        let p = self.cumulative.partition_point(|&c| c <= u);
        let before = if p == 0 { 0 } else { self.cumulative[p - 1] };
        Some(self.intervals[p].0 + (u - before))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::brute_force_substrings;
    use proptest::prelude::*;

    #[test]
    fn small_word_lists() {
        let w = Word::parse("0011").unwrap();
        let idx = MinimalIndex::new(&w, 3);
        assert_eq!(
            idx.within(2, 0, 3, SignSet::BOTH),
            vec![Match::new(0, 1, Sign::Plus), Match::new(2, 3, Sign::Minus)]
        );
        assert_eq!(idx.count(3, SignSet::BOTH), 0);
        assert_eq!(
            idx.first(2, 0, 3, SignSet::BOTH, Direction::Left),
            Some(Match::new(2, 3, Sign::Minus))
        );
        assert_eq!(idx.first(2, 1, 3, SignSet::PLUS, Direction::Right), None);
        assert_eq!(idx.shortest(2, 0, 3, SignSet::BOTH), Some(2));
    }

    #[test]
    fn coverage_sampling_stays_inside() {
        let c = Coverage::from_spans(vec![(3, 5), (4, 8), (12, 12)]);
        assert_eq!(c.intervals(), &[(3, 8), (12, 12)]);
        assert_eq!(c.count(), 7);
        assert!(c.contains(8) && c.contains(12) && !c.contains(9) && !c.contains(2));
        let mut rng = rand::thread_rng();
        for _ in 0..200 {
            let t = c.sample(&mut rng).unwrap();
            assert!(c.contains(t));
        }
    }

    proptest! {
        #[test]
        fn index_matches_brute_force(bits in proptest::collection::vec(any::<bool>(), 1..40),
                                     k in 1u32..5, a in 0usize..40, b in 0usize..40) {
            let w = Word::new(bits);
            let n = w.len();
            let (l, r) = { let (x, y) = (a % n, b % n); (x.min(y), x.max(y)) };
            let idx = MinimalIndex::new(&w, 4);
            let want = brute_force_substrings(&w, k, SignSet::BOTH, l, r).unwrap();
            prop_assert_eq!(idx.within(k, l, r, SignSet::BOTH), want.clone());
            prop_assert_eq!(idx.first(k, l, r, SignSet::BOTH, Direction::Right), want.first().copied());
            prop_assert_eq!(idx.first(k, l, r, SignSet::BOTH, Direction::Left), want.last().copied());
            prop_assert_eq!(idx.shortest(k, l, r, SignSet::BOTH), want.iter().map(|m| m.len()).min());
        }
    }
}
