//! Words over the single-bracket alphabet and the classical reference
//! algorithms every other module is checked against.
//!
//! Bit `0` encodes `(` and bit `1` encodes `)`. Indices are 0-based and
//! intervals are closed, so `x[i, j]` covers `j - i + 1` symbols.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite bit sequence. `false` is an opening symbol, `true` a closing one.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word {
    bits: Vec<bool>,
}

impl Word {
    pub fn new(bits: Vec<bool>) -> Self {
        Word { bits }
    }

    pub fn empty() -> Self {
        Word { bits: Vec::new() }
    }

    /// Builds a word from 0/1 values; any nonzero value is a closing symbol.
    pub fn from_bits<I: IntoIterator<Item = u8>>(bits: I) -> Self {
        Word {
            bits: bits.into_iter().map(|b| b != 0).collect(),
        }
    }

    /// The `n` low bits of `code`, most significant first.
    pub fn from_code(code: u64, n: usize) -> Self {
        Word {
            bits: (0..n).rev().map(|p| (code >> p) & 1 == 1).collect(),
        }
    }

    /// Parses either alphabet. `"()"` and `"01"` may not be mixed; ASCII
    /// whitespace is ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut parens = false;
        let mut digits = false;
        let mut bits = Vec::with_capacity(text.len());
        for (position, c) in text.chars().enumerate() {
            let bit = match c {
                '(' => {
                    parens = true;
                    false
                }
                ')' => {
                    parens = true;
                    true
                }
                '0' => {
                    digits = true;
                    false
                }
                '1' => {
                    digits = true;
                    true
                }
                c if c.is_ascii_whitespace() => continue,
                found => return Err(Error::InvalidSymbol { position, found }),
            };
            if parens && digits {
                return Err(Error::MixedAlphabet);
            }
            bits.push(bit);
        }
        Ok(Word { bits })
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// `true` when position `i` holds a closing symbol.
    pub fn bit(&self, i: usize) -> bool {
        self.bits[i]
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn push(&mut self, bit: bool) {
        self.bits.push(bit);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut bits = self.bits.clone();
        bits.extend_from_slice(&other.bits);
        Word { bits }
    }

    /// `1^pad · self · 0^pad`.
    pub fn padded(&self, pad: usize) -> Word {
        let mut bits = Vec::with_capacity(self.len() + 2 * pad);
        bits.extend(std::iter::repeat_n(true, pad));
        bits.extend_from_slice(&self.bits);
        bits.extend(std::iter::repeat_n(false, pad));
        Word { bits }
    }

    pub fn to_parens(&self) -> String {
        self.bits.iter().map(|&b| if b { ')' } else { '(' }).collect()
    }

    pub fn to_binary(&self) -> String {
        self.bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }

    /// Running balance `P[0..=n]` with `P[0] = 0`.
    pub fn prefix_sums(&self) -> Vec<i64> {
        let mut sums = Vec::with_capacity(self.len() + 1);
        let mut acc = 0i64;
        sums.push(acc);
        for &b in &self.bits {
            acc += step(b);
            sums.push(acc);
        }
        sums
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_parens())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::parse(s)
    }
}

#[inline]
pub(crate) fn step(bit: bool) -> i64 {
    if bit {
        -1
    } else {
        1
    }
}

/// Sign of a nonzero balance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn of(value: i64) -> Option<Sign> {
        match value.signum() {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    /// The sign of a single symbol's contribution to the balance.
    pub fn of_bit(bit: bool) -> Sign {
        if bit {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// Non-empty subset of `{+1, -1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignSet {
    plus: bool,
    minus: bool,
}

impl SignSet {
    pub const PLUS: SignSet = SignSet {
        plus: true,
        minus: false,
    };
    pub const MINUS: SignSet = SignSet {
        plus: false,
        minus: true,
    };
    pub const BOTH: SignSet = SignSet {
        plus: true,
        minus: true,
    };

    pub fn new(plus: bool, minus: bool) -> Result<SignSet> {
        if !plus && !minus {
            return Err(Error::InvalidParameter("sign set must be non-empty".into()));
        }
        Ok(SignSet { plus, minus })
    }

    pub fn only(sign: Sign) -> SignSet {
        match sign {
            Sign::Plus => SignSet::PLUS,
            Sign::Minus => SignSet::MINUS,
        }
    }

    pub fn contains(self, sign: Sign) -> bool {
        match sign {
            Sign::Plus => self.plus,
            Sign::Minus => self.minus,
        }
    }

    pub fn signs(self) -> impl Iterator<Item = Sign> {
        [Sign::Minus, Sign::Plus].into_iter().filter(move |&s| self.contains(s))
    }
}

/// A found substring `x[start, end]` whose balance is `sign · k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Match {
    pub start: usize,
    pub end: usize,
    pub sign: Sign,
}

impl Match {
    pub fn new(start: usize, end: usize, sign: Sign) -> Self {
        debug_assert!(start <= end);
        Match { start, end, sign }
    }

    pub fn len(&self) -> usize {
        self.end - self.start + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, t: usize) -> bool {
        self.start <= t && t <= self.end
    }
}

/// `|w|_0 - |w|_1`.
pub fn balance(w: &Word) -> i64 {
    w.bits.iter().map(|&b| step(b)).sum()
}

/// Balance of `w[i, j]`.
pub fn balance_range(w: &Word, i: usize, j: usize) -> Result<i64> {
    check_range(i, j, w.len())?;
    Ok(w.bits[i..=j].iter().map(|&b| step(b)).sum())
}

/// Maximum and minimum balance over the non-empty prefixes of `w`.
pub fn prefix_heights(w: &Word) -> Result<(i64, i64)> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let mut acc = 0i64;
    let mut hi = i64::MIN;
    let mut lo = i64::MAX;
    for &b in &w.bits {
        acc += step(b);
        hi = hi.max(acc);
        lo = lo.min(acc);
    }
    Ok((hi, lo))
}

/// Ground-truth membership in the height-`k` Dyck language: balance zero and
/// every prefix balance within `[0, k]`. The empty word is a member.
pub fn classical_dyck(w: &Word, k: u32) -> bool {
    let k = i64::from(k);
    let mut acc = 0i64;
    for &b in &w.bits {
        acc += step(b);
        if acc < 0 || acc > k {
            return false;
        }
    }
    acc == 0
}

pub(crate) fn check_range(lo: usize, hi: usize, len: usize) -> Result<()> {
    if lo > hi || hi >= len {
        return Err(Error::InvalidRange { lo, hi, len });
    }
    Ok(())
}

/// Every minimal `±k`-substring of `w[l, r]` whose sign lies in `signs`,
/// ordered by start.
///
/// Enumerates all windows, then discards any window that strictly contains
/// another window of the same balance. Quadratic in the range length; this
/// is the reference oracle, not a search routine.
pub fn brute_force_substrings(w: &Word, k: u32, signs: SignSet, l: usize, r: usize) -> Result<Vec<Match>> {
    check_range(l, r, w.len())?;
    if k == 0 {
        return Err(Error::InvalidParameter("k must be positive".into()));
    }
    let m = r - l + 1;
    let sums = {
        let mut s = vec![0i64; m + 1];
        for p in 0..m {
            s[p + 1] = s[p] + step(w.bits[l + p]);
        }
        s
    };
    let mut out = Vec::new();
    for sign in signs.signs() {
        let target = sign.value() * i64::from(k);
        // hit[a][b] marks window [a, b] (relative) with balance == target.
        let mut hit = vec![vec![0u32; m + 1]; m + 1];
        for a in 0..m {
            for b in a..m {
                if sums[b + 1] - sums[a] == target {
                    hit[a][b] = 1;
                }
            }
        }
        // inner[a][b] counts hits [a', b'] with a <= a' <= b' <= b.
        let mut inner = vec![vec![0u32; m + 1]; m + 2];
        for a in (0..m).rev() {
            for b in a..m {
                let mut c = hit[a][b];
                c += inner[a + 1][b];
                if b > a {
                    c += inner[a][b - 1];
                    c -= inner[a + 1][b - 1];
                }
                inner[a][b] = c;
            }
        }
        for a in 0..m {
            for b in a..m {
                if hit[a][b] == 1 && inner[a][b] == 1 {
                    out.push(Match::new(l + a, l + b, sign));
                }
            }
        }
    }
    out.sort();
    Ok(out)
}
