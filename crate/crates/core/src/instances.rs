//! Hard word families `M^i_k`, their gadget functions, random members and
//! near-miss nonmembers, and the plain-text corpus format.

use std::fmt;
use std::io::{BufRead, Write};
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::search::SimRng;
use crate::word::{classical_dyck, Word};

/// Parameters of the family `M^i_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub k: u32,
    pub i: u32,
}

impl FamilySpec {
    pub fn new(k: u32, i: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameter("family needs k >= 1".into()));
        }
        if i >= 1 && k < 2 {
            return Err(Error::Domain(
                "the gadget for k = 1 has a single input; use k >= 2".into(),
            ));
        }
        Ok(FamilySpec { k, i })
    }

    /// Children per block, `2k - 1`.
    pub fn arity(&self) -> usize {
        2 * self.k as usize - 1
    }

    /// Number of leaves, `(2k - 1)^i`.
    pub fn leaf_count(&self) -> Result<usize> {
        (self.arity() as u64)
            .checked_pow(self.i)
            .and_then(|v| usize::try_from(v).ok())
            .ok_or(Error::Overflow("leaf count"))
    }
}

/// `l_k(0) = 1`, `l_k(i) = 2k + (2k - 1)·l_k(i - 1)`.
pub fn family_length(k: u32, i: u32) -> Result<u64> {
    let k = u64::from(k);
    let mut len = 1u64;
    for _ in 0..i {
        len = (2 * k - 1)
            .checked_mul(len)
            .and_then(|v| v.checked_add(2 * k))
            .ok_or(Error::Overflow("family length"))?;
    }
    Ok(len)
}

/// Maximum height over the family, `(i + 1)·k`.
pub fn family_height(k: u32, i: u32) -> u64 {
    (u64::from(i) + 1) * u64::from(k)
}

/// The largest height actually reached by a member of `M^i_k`.
///
/// For `i ≥ 2` this exceeds `(i + 1)·k`: two leading children of value `+1`
/// stack their peaks one level higher than the recurrence suggests.
pub fn family_peak(spec: FamilySpec) -> i64 {
    // peak[v]: highest prefix of a member with value v (index 0 for -1)
    let k = i64::from(spec.k);
    let mut peak = [0i64, 1i64];
    for _ in 0..spec.i {
        let arity = spec.arity();
        let mut next = [i64::MIN, i64::MIN];
        for pattern in 0u64..(1 << arity) {
            let vals: Vec<i64> = (0..arity).map(|c| if pattern >> c & 1 == 1 { 1 } else { -1 }).collect();
            let total: i64 = vals.iter().sum();
            if total.abs() != 1 {
                continue;
            }
            let mut before = 0i64;
            let mut best = 0i64;
            for &v in &vals {
                best = best.max(before + peak[usize::from(v == 1)]);
                before += v;
            }
            let slot = &mut next[usize::from(total == 1)];
            *slot = (*slot).max(k + best);
        }
        peak = next;
    }
    peak[0].max(peak[1])
}

fn check_leaves(spec: FamilySpec, leaves: &[i8]) -> Result<()> {
    let want = spec.leaf_count()?;
    if leaves.len() != want {
        return Err(Error::InvalidParameter(format!(
            "expected {want} leaves for k={} i={}, got {}",
            spec.k,
            spec.i,
            leaves.len()
        )));
    }
    if let Some(p) = leaves.iter().position(|&v| v != 1 && v != -1) {
        return Err(Error::InvalidParameter(format!("leaf {p} is {}, not ±1", leaves[p])));
    }
    Ok(())
}

/// Values of every block one level up.
fn reduce_level(values: &[i8], arity: usize) -> Result<Vec<i8>> {
    values
        .chunks(arity)
        .enumerate()
        .map(|(b, block)| {
            let sum: i32 = block.iter().map(|&v| i32::from(v)).sum();
            match sum {
                1 => Ok(1),
                -1 => Ok(-1),
                _ => Err(Error::Domain(format!(
                    "block {b} sums to {sum}, outside the gadget domain"
                ))),
            }
        })
        .collect()
}

/// Value of `g_k^i` on the given inputs.
pub fn eval_gadget(k: u32, inputs: &[i8], depth: u32) -> Result<i8> {
    let spec = FamilySpec::new(k, depth)?;
    check_leaves(spec, inputs)?;
    let mut values = inputs.to_vec();
    for _ in 0..depth {
        values = reduce_level(&values, spec.arity())?;
    }
    Ok(values[0])
}

/// The member of `M^i_k` whose leaf symbols are `leaves` (`+1 ↦ a = 0`,
/// `-1 ↦ b = 1`).
pub fn gen_family_word(spec: FamilySpec, leaves: &[i8]) -> Result<Word> {
    check_leaves(spec, leaves)?;
    let k = spec.k as usize;
    let mut blocks: Vec<Vec<bool>> = leaves.iter().map(|&v| vec![v < 0]).collect();
    let mut values = leaves.to_vec();
    for _ in 0..spec.i {
        values = reduce_level(&values, spec.arity())?;
        blocks = blocks
            .chunks(spec.arity())
            .map(|children| {
                let mut out = vec![false; k];
                for c in children {
                    out.extend_from_slice(c);
                }
                out.extend(std::iter::repeat_n(true, k));
                out
            })
            .collect();
    }
    Ok(Word::new(blocks.pop().expect("one root block")))
}

/// A family member together with its leaves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyMember {
    pub spec: FamilySpec,
    pub leaves: Vec<i8>,
    pub word: Word,
    pub value: i8,
}

impl FamilyMember {
    pub fn from_leaves(spec: FamilySpec, leaves: Vec<i8>) -> Result<Self> {
        let word = gen_family_word(spec, &leaves)?;
        let value = eval_gadget_or_leaf(spec, &leaves)?;
        Ok(FamilyMember {
            spec,
            leaves,
            word,
            value,
        })
    }

    /// `(m·b, expected)`, where the word is to be tested against height
    /// `(i + 1)·k`.
    pub fn to_dyck_instance(&self) -> (Word, bool) {
        let mut w = self.word.clone();
        w.push(true);
        (w, self.value == 1)
    }
}

fn eval_gadget_or_leaf(spec: FamilySpec, leaves: &[i8]) -> Result<i8> {
    if spec.i == 0 {
        check_leaves(spec, leaves)?;
        return Ok(leaves[0]);
    }
    eval_gadget(spec.k, leaves, spec.i)
}

/// `(m·b, expected)` for a generated member.
pub fn to_dyck_instance(member: &FamilyMember) -> (Word, bool) {
    member.to_dyck_instance()
}

/// Every leaf vector of `M^i_k` with root value `value`, in lexicographic
/// order (`-1` before `+1`).
fn leaf_vectors(k: u32, i: u32, value: i8) -> Vec<Vec<i8>> {
    if i == 0 {
        return vec![vec![value]];
    }
    let arity = 2 * k as usize - 1;
    let below = [leaf_vectors(k, i - 1, -1), leaf_vectors(k, i - 1, 1)];
    let mut out = Vec::new();
    for pattern in 0u64..(1 << arity) {
        let vals: Vec<i8> = (0..arity)
            .map(|c| if pattern >> (arity - 1 - c) & 1 == 1 { 1 } else { -1 })
            .collect();
        if vals.iter().map(|&v| i32::from(v)).sum::<i32>() != i32::from(value) {
            continue;
        }
        let mut partial: Vec<Vec<i8>> = vec![Vec::new()];
        for &v in &vals {
            let options = &below[usize::from(v == 1)];
            partial = partial
                .iter()
                .flat_map(|p| {
                    options.iter().map(move |o| {
                        let mut q = p.clone();
                        q.extend_from_slice(o);
                        q
                    })
                })
                .collect();
        }
        out.extend(partial);
    }
    out
}

/// Every member of `M^i_k`. Grows doubly exponentially; intended for the
/// small cases only.
pub fn enumerate_family(spec: FamilySpec) -> Result<Vec<FamilyMember>> {
    let count = family_size(spec)?;
    if count > 1 << 22 {
        return Err(Error::Infeasible(format!("family has {count} members")));
    }
    let mut out = Vec::with_capacity(count as usize);
    for value in [-1, 1] {
        for leaves in leaf_vectors(spec.k, spec.i, value) {
            out.push(FamilyMember::from_leaves(spec, leaves)?);
        }
    }
    out.sort_by(|a, b| a.leaves.cmp(&b.leaves));
    Ok(out)
}

/// `|M^i_k|`.
pub fn family_size(spec: FamilySpec) -> Result<u64> {
    // members per root value: s(0) = 1, s(i) = patterns · s(i-1)^(2k-1)
    let arity = spec.arity() as u32;
    let patterns = binomial(arity as u64, spec.k as u64);
    let mut per_value = 1u64;
    for _ in 0..spec.i {
        per_value = per_value
            .checked_pow(arity)
            .and_then(|v| v.checked_mul(patterns))
            .ok_or(Error::Overflow("family size"))?;
    }
    per_value.checked_mul(2).ok_or(Error::Overflow("family size"))
}

fn binomial(n: u64, r: u64) -> u64 {
    (0..r).fold(1u64, |acc, j| acc * (n - j) / (j + 1))
}

/// A random member whose gadget value is `value` (or either, uniformly).
/// Child values of each block are drawn uniformly among the patterns summing
/// to the block's value, by rejection.
pub fn sample_family_member(spec: FamilySpec, value: Option<i8>, rng: &mut SimRng) -> Result<FamilyMember> {
    let root = match value {
        Some(v @ (1 | -1)) => v,
        Some(v) => return Err(Error::InvalidParameter(format!("gadget value must be ±1, got {v}"))),
        None => {
            if rng.gen_bool(0.5) {
                1
            } else {
                -1
            }
        }
    };
    spec.leaf_count()?;
    let mut leaves = Vec::new();
    sample_block(spec.k, spec.i, root, rng, &mut leaves);
    FamilyMember::from_leaves(spec, leaves)
}

fn sample_block(k: u32, i: u32, value: i8, rng: &mut SimRng, out: &mut Vec<i8>) {
    if i == 0 {
        out.push(value);
        return;
    }
    let arity = 2 * k as usize - 1;
    let children: Vec<i8> = loop {
        let draw: Vec<i8> = (0..arity).map(|_| if rng.gen_bool(0.5) { 1 } else { -1 }).collect();
        if draw.iter().map(|&v| i32::from(v)).sum::<i32>() == i32::from(value) {
            break draw;
        }
    };
    for c in children {
        sample_block(k, i - 1, c, rng, out);
    }
}

/// What [`gen_random_word`] should produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    Member,
    Nonmember,
    Uniform,
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Target> {
        match s {
            "member" | "members" => Ok(Target::Member),
            "nonmember" | "nonmembers" => Ok(Target::Nonmember),
            "uniform" => Ok(Target::Uniform),
            other => Err(Error::InvalidParameter(format!("unknown target {other:?}"))),
        }
    }
}

const MUTATION_ATTEMPTS: usize = 4096;

/// A random word of length `n`. Members are uniform over `Dyck_k ∩ {0,1}^n`;
/// nonmembers are a random member with two symbols exchanged (adjacent or
/// at random), kept only once `classical_dyck` rejects it.
pub fn gen_random_word(n: usize, k: u32, target: Target, seed: u64) -> Result<Word> {
    gen_random_word_with(n, k, target, &mut SimRng::new(seed))
}

pub fn gen_random_word_with(n: usize, k: u32, target: Target, rng: &mut SimRng) -> Result<Word> {
    match target {
        Target::Uniform => Ok(Word::new((0..n).map(|_| rng.gen_bool(0.5)).collect())),
        Target::Member => uniform_member(n, k, rng),
        Target::Nonmember => {
            if n % 2 == 1 {
                return Ok(Word::new((0..n).map(|_| rng.gen_bool(0.5)).collect()));
            }
            if n == 0 {
                return Err(Error::Infeasible("the empty word is always a member".into()));
            }
            let base = uniform_member(n, k, rng)?;
            for _ in 0..MUTATION_ATTEMPTS {
                let w = mutate(&base, rng);
                if !classical_dyck(&w, k) {
                    return Ok(w);
                }
            }
            Err(Error::Infeasible(format!(
                "no nonmember found near a member of length {n}"
            )))
        }
    }
}

fn mutate(w: &Word, rng: &mut SimRng) -> Word {
    let mut bits = w.bits().to_vec();
    let n = bits.len();
    if rng.gen_bool(0.5) {
        let diffs: Vec<usize> = (0..n - 1).filter(|&p| bits[p] != bits[p + 1]).collect();
        if let Some(&p) = diffs.choose(rng) {
            bits.swap(p, p + 1);
            return Word::new(bits);
        }
    }
    let zeros: Vec<usize> = (0..n).filter(|&p| !bits[p]).collect();
    let ones: Vec<usize> = (0..n).filter(|&p| bits[p]).collect();
    if let (Some(&a), Some(&b)) = (zeros.choose(rng), ones.choose(rng)) {
        bits.swap(a, b);
    }
    Word::new(bits)
}

/// Uniform sample of a height-`k` Dyck word of length `n` by backward path
/// counting. Counts are kept as per-row normalized floats, which preserves
/// the transition ratios.
fn uniform_member(n: usize, k: u32, rng: &mut SimRng) -> Result<Word> {
    if n % 2 == 1 {
        return Err(Error::Infeasible(format!("no balanced word has odd length {n}")));
    }
    if k == 0 && n > 0 {
        return Err(Error::Infeasible("height 0 admits only the empty word".into()));
    }
    let k = k as usize;
    let width = k + 1;
    // ways[p][h]: completions from position p at height h
    let mut ways = vec![vec![0.0f64; width]; n + 1];
    ways[n][0] = 1.0;
    for p in (0..n).rev() {
        let (cur, next) = {
            let (a, b) = ways.split_at_mut(p + 1);
            (&mut a[p], &b[0])
        };
        for h in 0..width {
            let up = if h < k { next[h + 1] } else { 0.0 };
            let down = if h > 0 { next[h - 1] } else { 0.0 };
            cur[h] = up + down;
        }
        let max = cur.iter().cloned().fold(0.0, f64::max);
        if max > 0.0 {
            cur.iter_mut().for_each(|v| *v /= max);
        }
    }
    let mut bits = Vec::with_capacity(n);
    let mut h = 0usize;
    for p in 0..n {
        let next = &ways[p + 1];
        let up = if h < k { next[h + 1] } else { 0.0 };
        let down = if h > 0 { next[h - 1] } else { 0.0 };
        let go_up = down == 0.0 || (up > 0.0 && rng.gen::<f64>() * (up + down) < up);
        bits.push(!go_up);
        if go_up {
            h += 1;
        } else {
            h -= 1;
        }
    }
    let w = Word::new(bits);
    debug_assert!(classical_dyck(&w, k as u32));
    Ok(w)
}

/// Where a corpus entry came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Family,
    Random,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::Family => "family",
            Source::Random => "random",
        })
    }
}

/// One labelled word of a corpus file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub word: Word,
    pub k: u32,
    pub label: bool,
    pub source: Source,
}

impl CorpusEntry {
    /// Labels `word` with `classical_dyck`.
    pub fn labelled(word: Word, k: u32, source: Source) -> Self {
        let label = classical_dyck(&word, k);
        CorpusEntry { word, k, label, source }
    }

    /// The Dyck instance of a family member, tested at height `(i + 1)·k`.
    pub fn from_family(member: &FamilyMember) -> Self {
        let (word, label) = member.to_dyck_instance();
        let k = family_height(member.spec.k, member.spec.i) as u32;
        CorpusEntry {
            word,
            k,
            label,
            source: Source::Family,
        }
    }
}

impl fmt::Display for CorpusEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "# n={} k={} label={} source={}",
            self.word.len(),
            self.k,
            u8::from(self.label),
            self.source
        )?;
        write!(f, "{}", self.word.to_parens())
    }
}

pub fn write_corpus<W: Write>(out: &mut W, entries: &[CorpusEntry]) -> std::io::Result<()> {
    for e in entries {
        writeln!(out, "{e}")?;
    }
    Ok(())
}

pub fn read_corpus<R: BufRead>(input: R) -> Result<Vec<CorpusEntry>> {
    let mut entries = Vec::new();
    let mut header: Option<(usize, usize, u32, bool, Source)> = None;
    for (lineno, line) in input.lines().enumerate() {
        let line = line.map_err(|e| Error::Corpus(e.to_string()))?;
        let line = line.trim();
        if let Some(rest) = line.strip_prefix('#') {
            header = Some(parse_header(rest, lineno + 1)?);
            continue;
        }
        let Some((hline, n, k, label, source)) = header.take() else {
            if line.is_empty() {
                continue;
            }
            return Err(Error::Corpus(format!("line {}: word without a header", lineno + 1)));
        };
        let word = if line.is_empty() {
            Word::empty()
        } else {
            Word::parse(line)?
        };
        if word.len() != n {
            return Err(Error::Corpus(format!(
                "line {hline}: header says n={n}, word has length {}",
                word.len()
            )));
        }
        entries.push(CorpusEntry { word, k, label, source });
    }
    if let Some((hline, ..)) = header {
        return Err(Error::Corpus(format!("line {hline}: header without a word")));
    }
    Ok(entries)
}

fn parse_header(text: &str, lineno: usize) -> Result<(usize, usize, u32, bool, Source)> {
    let bad = |what: &str| Error::Corpus(format!("line {lineno}: {what}"));
    let (mut n, mut k, mut label, mut source) = (None, None, None, None);
    for field in text.split_whitespace() {
        let (key, value) = field.split_once('=').ok_or_else(|| bad("expected key=value"))?;
        match key {
            "n" => n = Some(value.parse::<usize>().map_err(|_| bad("bad n"))?),
            "k" => k = Some(value.parse::<u32>().map_err(|_| bad("bad k"))?),
            "label" => {
                label = Some(match value {
                    "0" => false,
                    "1" => true,
                    _ => return Err(bad("label must be 0 or 1")),
                })
            }
            "source" => {
                source = Some(match value {
                    "family" => Source::Family,
                    "random" => Source::Random,
                    _ => return Err(bad("unknown source")),
                })
            }
            _ => return Err(bad("unknown header field")),
        }
    }
    match (n, k, label, source) {
        (Some(n), Some(k), Some(l), Some(s)) => Ok((lineno, n, k, l, s)),
        _ => Err(bad("header needs n, k, label and source")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{balance, prefix_heights};

    #[test]
    fn lengths_and_heights() {
        assert_eq!(family_length(2, 0).unwrap(), 1);
        assert_eq!(family_length(5, 0).unwrap(), 1);
        assert_eq!(family_length(2, 1).unwrap(), 7);
        assert_eq!(family_length(2, 2).unwrap(), 25);
        assert_eq!(family_height(2, 1), 4);
        assert_eq!(family_height(3, 2), 9);
        assert_eq!(family_height(7, 1), 14);
        assert!(family_length(50, 40).is_err());
    }

    #[test]
    fn length_ratio_approaches_asymptote() {
        for i in 1..4 {
            let r = family_length(200, i).unwrap() as f64 / (2.0 * 400f64.powi(i as i32));
            assert!((r - 1.0).abs() < 0.02, "i={i} ratio {r}");
        }
    }

    #[test]
    fn word_examples() {
        let spec = FamilySpec::new(2, 1).unwrap();
        assert_eq!(gen_family_word(spec, &[1, 1, -1]).unwrap().to_binary(), "0000111");
        assert_eq!(gen_family_word(spec, &[-1, 1, -1]).unwrap().to_binary(), "0010111");
        assert!(matches!(gen_family_word(spec, &[1, 1, 1]), Err(Error::Domain(_))));
        assert!(gen_family_word(spec, &[1, 1]).is_err());
    }

    #[test]
    fn gadget_examples() {
        assert_eq!(eval_gadget(2, &[1, 1, -1], 1).unwrap(), 1);
        assert_eq!(eval_gadget(2, &[-1, -1, 1], 1).unwrap(), -1);
        let leaves = [1, 1, -1, 1, 1, -1, -1, -1, 1];
        assert_eq!(eval_gadget(2, &leaves, 2).unwrap(), 1);
        assert!(eval_gadget(2, &[1, 1, -1, 1, 1, -1, 1, 1, -1], 2).is_err());
    }

    #[test]
    fn gadget_matches_direct_recursion_on_all_depth_two_inputs() {
        for code in 0u32..512 {
            let leaves: Vec<i8> = (0..9).map(|b| if code >> b & 1 == 1 { 1 } else { -1 }).collect();
            let blocks: Vec<i32> = leaves
                .chunks(3)
                .map(|c| c.iter().map(|&v| i32::from(v)).sum())
                .collect();
            let in_domain = blocks.iter().all(|b| b.abs() == 1) && blocks.iter().sum::<i32>().abs() == 1;
            match eval_gadget(2, &leaves, 2) {
                Ok(v) => {
                    assert!(in_domain);
                    assert_eq!(i32::from(v), blocks.iter().sum::<i32>());
                }
                Err(_) => assert!(!in_domain),
            }
        }
    }

    #[test]
    fn instance_examples() {
        let spec = FamilySpec::new(2, 1).unwrap();
        let m = FamilyMember::from_leaves(spec, vec![1, 1, -1]).unwrap();
        let (w, label) = m.to_dyck_instance();
        assert_eq!((w.to_binary().as_str(), label), ("00001111", true));
        let m = FamilyMember::from_leaves(spec, vec![-1, 1, -1]).unwrap();
        let (w, label) = to_dyck_instance(&m);
        assert_eq!((w.to_binary().as_str(), label), ("00101111", false));
        assert_eq!(w.len() as u64, family_length(2, 1).unwrap() + 1);
    }

    #[test]
    fn family_sizes() {
        assert_eq!(enumerate_family(FamilySpec::new(2, 0).unwrap()).unwrap().len(), 2);
        assert_eq!(enumerate_family(FamilySpec::new(2, 1).unwrap()).unwrap().len(), 6);
        assert_eq!(enumerate_family(FamilySpec::new(2, 2).unwrap()).unwrap().len(), 162);
        assert_eq!(family_size(FamilySpec::new(3, 1).unwrap()).unwrap(), 20);
    }

    #[test]
    fn members_are_balanced_up_to_one() {
        for i in 1..=2 {
            let spec = FamilySpec::new(2, i).unwrap();
            let mut top = 0;
            for m in enumerate_family(spec).unwrap() {
                assert_eq!(balance(&m.word), i64::from(m.value));
                let (hi, _) = prefix_heights(&m.word).unwrap();
                top = top.max(hi);
            }
            assert_eq!(top, family_peak(spec));
        }
    }

    #[test]
    fn peaks() {
        assert_eq!(family_peak(FamilySpec::new(2, 0).unwrap()), 1);
        assert_eq!(family_peak(FamilySpec::new(2, 1).unwrap()), 4);
        assert_eq!(family_peak(FamilySpec::new(3, 1).unwrap()), 6);
        assert_eq!(family_peak(FamilySpec::new(2, 2).unwrap()), 7);
        assert_eq!(family_peak(FamilySpec::new(3, 2).unwrap()), 11);
    }

    #[test]
    fn instance_label_matches_dyck_at_true_peak() {
        for i in 1..=2 {
            let spec = FamilySpec::new(2, i).unwrap();
            let h = family_peak(spec) as u32;
            for m in enumerate_family(spec).unwrap() {
                let (w, label) = m.to_dyck_instance();
                assert_eq!(classical_dyck(&w, h), label);
            }
        }
    }

    #[test]
    fn sampler_hits_requested_value() {
        let mut rng = SimRng::new(3);
        let spec = FamilySpec::new(3, 2).unwrap();
        for v in [1, -1] {
            for _ in 0..20 {
                let m = sample_family_member(spec, Some(v), &mut rng).unwrap();
                assert_eq!(m.value, v);
                assert_eq!(m.word.len() as u64, family_length(3, 2).unwrap());
            }
        }
    }

    #[test]
    fn random_word_examples() {
        assert!(gen_random_word(3, 2, Target::Member, 1).is_err());
        for seed in 0..50 {
            assert!(classical_dyck(&gen_random_word(8, 2, Target::Member, seed).unwrap(), 2));
            assert!(!classical_dyck(
                &gen_random_word(8, 2, Target::Nonmember, seed).unwrap(),
                2
            ));
            assert!(!classical_dyck(
                &gen_random_word(7, 2, Target::Nonmember, seed).unwrap(),
                2
            ));
        }
        assert_eq!(gen_random_word(0, 2, Target::Member, 0).unwrap(), Word::empty());
        assert!(gen_random_word(0, 2, Target::Nonmember, 0).is_err());
        assert_eq!(gen_random_word(64, 2, Target::Uniform, 9).unwrap().len(), 64);
    }

    #[test]
    fn member_sampler_is_uniform_on_small_case() {
        // Dyck_2 words of length 6: 001011 001101 010011 010101 ... there are 4
        let mut counts = std::collections::BTreeMap::new();
        let mut rng = SimRng::new(11);
        for _ in 0..4000 {
            let w = gen_random_word_with(6, 2, Target::Member, &mut rng).unwrap();
            *counts.entry(w.to_binary()).or_insert(0) += 1;
        }
        assert_eq!(counts.len(), 4);
        for (_, c) in counts {
            assert!((800..1200).contains(&c), "count {c}");
        }
    }

    #[test]
    fn long_members_do_not_underflow() {
        let w = gen_random_word(1 << 16, 3, Target::Member, 5).unwrap();
        assert!(classical_dyck(&w, 3));
    }

    #[test]
    fn corpus_round_trip() {
        let spec = FamilySpec::new(2, 1).unwrap();
        let mut entries: Vec<CorpusEntry> = enumerate_family(spec)
            .unwrap()
            .iter()
            .map(CorpusEntry::from_family)
            .collect();
        entries.push(CorpusEntry::labelled(Word::parse("(())").unwrap(), 2, Source::Random));
        let mut buf = Vec::new();
        write_corpus(&mut buf, &entries).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("# n=8 k=4 label="));
        assert_eq!(read_corpus(&buf[..]).unwrap(), entries);
    }

    #[test]
    fn corpus_rejects_malformed_input() {
        assert!(read_corpus("(())\n".as_bytes()).is_err());
        assert!(read_corpus("# n=3 k=2 label=1 source=random\n(())\n".as_bytes()).is_err());
        assert!(read_corpus("# n=4 k=2 label=7 source=random\n(())\n".as_bytes()).is_err());
        assert!(read_corpus("# n=4 k=2 source=random\n(())\n".as_bytes()).is_err());
    }
}
