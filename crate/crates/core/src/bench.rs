//! Seeded experiment grids, their CSV/JSON serialization, and log-log
//! fitting of query counts.

use std::collections::BTreeMap;
use std::io::{Read, Write};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dyck::decide_dyck_with;
use crate::error::{Error, Result};
use crate::instances::{gen_random_word_with, Target};
use crate::search::{BackendPolicy, SimRng};
use crate::word::classical_dyck;

/// An `n × k × trials` experiment.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Grid {
    pub ns: Vec<usize>,
    pub ks: Vec<u32>,
    pub trials: u32,
    pub seed: u64,
    pub policy: BackendPolicy,
    /// Record wall-clock time per row. Off by default so that output bytes
    /// depend on the seed alone.
    pub timing: bool,
}

/// One decided instance. Field order is the CSV column order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchRow {
    pub n: usize,
    pub k: u32,
    pub seed: u64,
    pub trial: u32,
    pub backend: String,
    pub label: u8,
    pub result: u8,
    pub correct: u8,
    pub charged_queries: u64,
    pub wall_ns: u64,
}

/// Mixes `parts` into `seed`; each distinct tuple gets its own stream.
pub fn derive_seed(seed: u64, parts: &[u64]) -> u64 {
    let mut x = seed;
    for &p in parts {
        x = x
            .wrapping_add(0x9e37_79b9_7f4a_7c15)
            .wrapping_add(p.wrapping_mul(0xbf58_476d_1ce4_e5b9));
        x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        x ^= x >> 31;
    }
    x
}

impl Grid {
    pub fn validate(&self) -> Result<()> {
        if self.ns.is_empty() || self.ks.is_empty() || self.trials == 0 {
            return Err(Error::InvalidParameter(
                "grid must have at least one n, one k and one trial".into(),
            ));
        }
        if let Some(&k) = self.ks.iter().find(|&&k| k == 0) {
            return Err(Error::InvalidParameter(format!("k must be positive, got {k}")));
        }
        self.policy.validate()
    }

    pub fn len(&self) -> usize {
        self.ns.len() * self.ks.len() * self.trials as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Runs every cell; rows come back in `(n, k, trial)` order.
    pub fn run(&self) -> Result<Vec<BenchRow>> {
        self.validate()?;
        let cells: Vec<(usize, u32, u32)> = self
            .ns
            .iter()
            .flat_map(|&n| {
                self.ks
                    .iter()
                    .flat_map(move |&k| (0..self.trials).map(move |t| (n, k, t)))
            })
            .collect();
        cells.into_par_iter().map(|(n, k, t)| self.run_one(n, k, t)).collect()
    }

    /// The instance for one cell: even trials are members (when `n` allows
    /// one), odd trials nonmembers.
    pub fn instance(&self, n: usize, k: u32, trial: u32) -> Result<crate::word::Word> {
        let mut rng = SimRng::new(derive_seed(self.seed, &[n as u64, u64::from(k), u64::from(trial), 0]));
        let target = if n > 0 && (trial % 2 == 1 || n % 2 == 1) {
            Target::Nonmember
        } else {
            Target::Member
        };
        gen_random_word_with(n, k, target, &mut rng)
    }

    fn run_one(&self, n: usize, k: u32, trial: u32) -> Result<BenchRow> {
        let word = self.instance(n, k, trial)?;
        let label = classical_dyck(&word, k);
        let policy = BackendPolicy {
            seed: derive_seed(self.seed, &[n as u64, u64::from(k), u64::from(trial), 1]),
            ..self.policy
        };
        let start = Instant::now();
        let decision = decide_dyck_with(&word, k, &policy, &mut policy.rng())?;
        let wall_ns = if self.timing {
            start.elapsed().as_nanos() as u64
        } else {
            0
        };
        Ok(BenchRow {
            n,
            k,
            seed: self.seed,
            trial,
            backend: policy.mode.name().to_string(),
            label: u8::from(label),
            result: u8::from(decision.member),
            correct: u8::from(decision.member == label),
            charged_queries: decision.charged_queries,
            wall_ns,
        })
    }
}

pub fn write_csv<W: Write>(out: W, rows: &[BenchRow]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r).map_err(|e| Error::Corpus(e.to_string()))?;
    }
    w.flush().map_err(|e| Error::Corpus(e.to_string()))
}

pub fn read_csv<R: Read>(input: R) -> Result<Vec<BenchRow>> {
    csv::Reader::from_reader(input)
        .deserialize()
        .map(|r| r.map_err(|e| Error::Corpus(e.to_string())))
        .collect()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BenchReport {
    pub meta: serde_json::Value,
    pub rows: Vec<BenchRow>,
}

pub fn write_json<W: Write>(out: W, grid: &Grid, rows: &[BenchRow]) -> Result<()> {
    let report = BenchReport {
        meta: serde_json::json!({
            "version": env!("CARGO_PKG_VERSION"),
            "seed": grid.seed,
            "ns": grid.ns,
            "ks": grid.ks,
            "trials": grid.trials,
            "backend": grid.policy,
        }),
        rows: rows.to_vec(),
    };
    serde_json::to_writer_pretty(out, &report).map_err(|e| Error::Corpus(e.to_string()))
}

pub fn read_json<R: Read>(input: R) -> Result<Vec<BenchRow>> {
    let report: BenchReport = serde_json::from_reader(input).map_err(|e| Error::Corpus(e.to_string()))?;
    Ok(report.rows)
}

/// Rows from either serialization, sniffed by the first non-blank byte.
pub fn read_rows(text: &str) -> Result<Vec<BenchRow>> {
    if text.trim_start().starts_with('{') {
        read_json(text.as_bytes())
    } else {
        read_csv(text.as_bytes())
    }
}

/// Least-squares slope of `log(median queries)` against `log n`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Fit {
    pub k: u32,
    pub alpha: f64,
    pub intercept: f64,
    pub r2: f64,
    /// `(n, median charged queries)` per distinct `n`.
    pub points: Vec<(usize, f64)>,
}

pub fn median(values: &mut [f64]) -> Option<f64> {
    if values.is_empty() {
        return None;
    }
    values.sort_by(|a, b| a.total_cmp(b));
    let mid = values.len() / 2;
    Some(if values.len() % 2 == 1 {
        values[mid]
    } else {
        (values[mid - 1] + values[mid]) / 2.0
    })
}

/// Ordinary least squares `y = a + b·x`; returns `(b, a, r²)`.
pub fn linear_fit(xs: &[f64], ys: &[f64]) -> Result<(f64, f64, f64)> {
    let n = xs.len();
    if n < 2 || n != ys.len() {
        return Err(Error::InvalidParameter("fit needs at least two paired points".into()));
    }
    let mx = xs.iter().sum::<f64>() / n as f64;
    let my = ys.iter().sum::<f64>() / n as f64;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let syy: f64 = ys.iter().map(|y| (y - my).powi(2)).sum();
    if sxx == 0.0 {
        return Err(Error::InvalidParameter("fit needs distinct x values".into()));
    }
    let slope = sxy / sxx;
    let r2 = if syy == 0.0 { 1.0 } else { sxy * sxy / (sxx * syy) };
    Ok((slope, my - slope * mx, r2))
}

/// Fits rows of one `k` (the only one present, or the one given).
pub fn fit(rows: &[BenchRow], k: Option<u32>) -> Result<Fit> {
    let k = match k {
        Some(k) => k,
        None => {
            let mut ks: Vec<u32> = rows.iter().map(|r| r.k).collect();
            ks.sort_unstable();
            ks.dedup();
            match ks.as_slice() {
                [k] => *k,
                [] => return Err(Error::InvalidParameter("no rows to fit".into())),
                _ => return Err(Error::InvalidParameter(format!("rows mix k values {ks:?}; pick one"))),
            }
        }
    };
    let mut by_n: BTreeMap<usize, Vec<f64>> = BTreeMap::new();
    for r in rows.iter().filter(|r| r.k == k) {
        by_n.entry(r.n).or_default().push(r.charged_queries as f64);
    }
    if by_n.len() < 4 {
        return Err(Error::InvalidParameter(format!(
            "fit needs at least 4 distinct n at k={k}, got {}",
            by_n.len()
        )));
    }
    let points: Vec<(usize, f64)> = by_n
        .into_iter()
        .map(|(n, mut q)| (n, median(&mut q).unwrap()))
        .collect();
    if let Some((n, _)) = points.iter().find(|(n, q)| *n == 0 || *q <= 0.0) {
        return Err(Error::InvalidParameter(format!(
            "cannot take the log of a zero point at n={n}"
        )));
    }
    let xs: Vec<f64> = points.iter().map(|(n, _)| (*n as f64).ln()).collect();
    let ys: Vec<f64> = points.iter().map(|(_, q)| q.ln()).collect();
    let (alpha, intercept, r2) = linear_fit(&xs, &ys)?;
    Ok(Fit {
        k,
        alpha,
        intercept,
        r2,
        points,
    })
}

/// `key = value` lines; `#` starts a comment.
pub fn parse_config(text: &str) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| Error::InvalidParameter(format!("config line {}: expected key=value", lineno + 1)))?;
        out.insert(key.trim().replace('-', "_"), value.trim().to_string());
    }
    Ok(out)
}

/// Comma-separated integers; `2^e` and `lo..hi` (powers of two from `lo`
/// to `hi`, e.g. `2^10..2^16`) are accepted.
pub fn parse_list(text: &str) -> Result<Vec<u64>> {
    let bad = |s: &str| Error::InvalidParameter(format!("cannot parse {s:?} as a number list"));
    let one = |s: &str| -> Result<u64> {
        let s = s.trim();
        match s.split_once('^') {
            Some((b, e)) => {
                let b: u64 = b.trim().parse().map_err(|_| bad(s))?;
                let e: u32 = e.trim().parse().map_err(|_| bad(s))?;
                b.checked_pow(e).ok_or_else(|| bad(s))
            }
            None => s.parse().map_err(|_| bad(s)),
        }
    };
    let mut out = Vec::new();
    for part in text.split(',').filter(|p| !p.trim().is_empty()) {
        match part.split_once("..") {
            Some((lo, hi)) => {
                let (lo, hi) = (one(lo)?, one(hi)?);
                if lo == 0 || lo > hi {
                    return Err(bad(part));
                }
                let mut v = lo;
                while v <= hi {
                    out.push(v);
                    v = v.checked_mul(2).ok_or_else(|| bad(part))?;
                }
            }
            None => out.push(one(part)?),
        }
    }
    if out.is_empty() {
        return Err(bad(text));
    }
    Ok(out)
}
