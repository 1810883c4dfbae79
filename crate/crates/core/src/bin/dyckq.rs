use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use dyck_query::bench::{self, Grid};
use dyck_query::instances::{
    enumerate_family, gen_random_word_with, read_corpus, sample_family_member, write_corpus, CorpusEntry, FamilySpec,
    Source, Target,
};
use dyck_query::search::{statevector, IndexRange, MarkedSet};
use dyck_query::{
    brute_force_substrings, classical_dyck, decide_dyck, decide_dyck_amplified, BackendPolicy, Error, Mode, SignSet,
    SimRng, Word,
};

#[derive(Parser, Debug)]
#[command(
    name = "dyckq",
    version,
    about = "Query-counting simulator for bounded-height Dyck membership"
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Default)]
struct Common {
    /// Height bound (comma list for bench)
    #[arg(long, global = true)]
    k: Option<String>,
    /// Word length (comma list, `2^e` terms and `lo..hi` doubling ranges for bench)
    #[arg(long, global = true)]
    n: Option<String>,
    #[arg(long, global = true)]
    trials: Option<u32>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true, value_enum)]
    backend: Option<Backend>,
    #[arg(long, global = true)]
    c0: Option<f64>,
    #[arg(long, global = true)]
    eps: Option<f64>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// key=value file with defaults for any of the flags above
    #[arg(long, global = true)]
    config: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide one word (or every word of a file) and compare with the classical scan
    Decide {
        /// Word in `()` or `01` encoding, or a path to a word or corpus file
        input: String,
        /// Majority-vote over enough runs to reach this error
        #[arg(long)]
        eps_target: Option<f64>,
    },
    /// Run a seeded n × k × trials grid
    Bench {
        /// Record wall time per row (output then varies between runs)
        #[arg(long)]
        timing: bool,
        /// Extra key=value parameters
        params: Vec<String>,
    },
    /// Fit the scaling exponent of median charged queries
    Fit {
        /// CSV or JSON rows from `bench`; `-` reads stdin
        rows: String,
    },
    /// Write a labelled corpus
    Gen {
        /// Hard family members; needs k= and i=
        #[arg(long, conflicts_with = "random")]
        family: bool,
        /// Random words; needs n= and k=
        #[arg(long)]
        random: bool,
        /// Every member of the family
        #[arg(long)]
        all: bool,
        /// Number of sampled family members
        #[arg(long)]
        count: Option<usize>,
        #[arg(long)]
        members: Option<usize>,
        #[arg(long)]
        nonmembers: Option<usize>,
        #[arg(long)]
        uniform: Option<usize>,
        /// key=value parameters such as `k=2 i=1` or `n=8 k=2`
        params: Vec<String>,
    },
    /// Quick end-to-end checks
    Selftest,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Backend {
    Statevector,
    Ideal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

enum Failure {
    Usage(String),
    Disagree,
    Closed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        if e.kind() == io::ErrorKind::BrokenPipe {
            return Failure::Closed;
        }
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

/// Flags override the config file, which overrides defaults.
struct Settings {
    values: BTreeMap<String, String>,
}

impl Settings {
    fn new(common: &Common, extra: &[String]) -> Result<Self, Failure> {
        let mut values = match &common.config {
            Some(path) => bench::parse_config(&fs::read_to_string(path)?)?,
            None => BTreeMap::new(),
        };
        for p in extra {
            let (k, v) = p
                .split_once('=')
                .ok_or_else(|| Failure::Usage(format!("expected key=value, got {p:?}")))?;
            values.insert(k.trim().to_string(), v.trim().to_string());
        }
        let mut set = |key: &str, v: Option<String>| {
            if let Some(v) = v {
                values.insert(key.to_string(), v);
            }
        };
        set("k", common.k.clone());
        set("n", common.n.clone());
        set("trials", common.trials.map(|v| v.to_string()));
        set("seed", common.seed.map(|v| v.to_string()));
        set("backend", common.backend.map(|b| format!("{b:?}").to_lowercase()));
        set("c0", common.c0.map(|v| v.to_string()));
        set("eps", common.eps.map(|v| v.to_string()));
        set("format", common.format.map(|f| format!("{f:?}").to_lowercase()));
        set("out", common.out.as_ref().map(|p| p.display().to_string()));
        Ok(Settings { values })
    }

    fn get<T: FromStr>(&self, key: &str) -> Result<Option<T>, Failure> {
        match self.values.get(key) {
            None => Ok(None),
            Some(v) => v
                .parse()
                .map(Some)
                .map_err(|_| Failure::Usage(format!("invalid value {v:?} for {key}"))),
        }
    }

    fn get_or<T: FromStr>(&self, key: &str, default: T) -> Result<T, Failure> {
        Ok(self.get(key)?.unwrap_or(default))
    }

    fn list(&self, key: &str) -> Result<Option<Vec<u64>>, Failure> {
        self.values
            .get(key)
            .map(|v| bench::parse_list(v).map_err(Failure::from))
            .transpose()
    }

    fn policy(&self) -> Result<BackendPolicy, Failure> {
        let defaults = BackendPolicy::default();
        let mode = match self.values.get("backend") {
            Some(b) => Mode::from_str(b)?,
            None => defaults.mode,
        };
        let policy = BackendPolicy {
            mode,
            c0: self.get_or("c0", defaults.c0)?,
            eps: self.get_or("eps", defaults.eps)?,
            seed: self.get_or("seed", defaults.seed)?,
            boost: self.get_or("boost", defaults.boost)?,
            verify_factor: self.get_or("verify_factor", defaults.verify_factor)?,
            accounting: true,
        };
        policy.validate()?;
        Ok(policy)
    }

    fn format(&self) -> Result<Format, Failure> {
        match self.values.get("format").map(String::as_str) {
            None | Some("csv") => Ok(Format::Csv),
            Some("json") => Ok(Format::Json),
            Some(other) => Err(Failure::Usage(format!("unknown format {other:?}"))),
        }
    }

    fn output(&self) -> Result<Box<dyn Write>, Failure> {
        Ok(match self.values.get("out") {
            Some(p) if p != "-" => Box::new(io::BufWriter::new(fs::File::create(p)?)),
            _ => Box::new(io::stdout().lock()),
        })
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Decide { input, eps_target } => decide(&cli.common, input, *eps_target),
        Command::Bench { timing, params } => run_bench(&cli.common, *timing, params),
        Command::Fit { rows } => run_fit(&cli.common, rows),
        Command::Gen {
            family,
            random,
            all,
            count,
            members,
            nonmembers,
            uniform,
            params,
        } => gen(
            &cli.common,
            GenRequest {
                family: *family,
                random: *random,
                all: *all,
                count: *count,
                members: *members,
                nonmembers: *nonmembers,
                uniform: *uniform,
            },
            params,
        ),
        Command::Selftest => selftest(),
    };
    match result {
        Ok(()) | Err(Failure::Closed) => ExitCode::SUCCESS,
        Err(Failure::Disagree) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("dyckq: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load_inputs(input: &str, k: Option<u32>) -> Result<Vec<(Word, u32)>, Failure> {
    let path = Path::new(input);
    if !path.is_file() {
        let k = k.ok_or_else(|| Failure::Usage("--k is required".into()))?;
        return Ok(vec![(Word::parse(input)?, k)]);
    }
    let text = fs::read_to_string(path)?;
    if text.trim_start().starts_with('#') {
        let entries = read_corpus(text.as_bytes())?;
        return Ok(entries.into_iter().map(|e| (e.word, k.unwrap_or(e.k))).collect());
    }
    let k = k.ok_or_else(|| Failure::Usage("--k is required".into()))?;
    Ok(vec![(Word::parse(&text)?, k)])
}

fn decide(common: &Common, input: &str, eps_target: Option<f64>) -> Outcome {
    let settings = Settings::new(common, &[])?;
    let policy = settings.policy()?;
    let k: Option<u32> = settings.get("k")?;
    let mut out = settings.output()?;
    let mut agree = true;
    for (word, k) in load_inputs(input, k)? {
        let start = Instant::now();
        let decision = match eps_target {
            Some(eps) => decide_dyck_amplified(&word, k, eps, &policy)?,
            None => decide_dyck(&word, k, &policy)?,
        };
        let wall = start.elapsed();
        let reference = classical_dyck(&word, k);
        agree &= decision.member == reference;
        writeln!(
            out,
            "result={} reference={} charged_queries={} wall_time={:.3}ms",
            u8::from(decision.member),
            u8::from(reference),
            decision.charged_queries,
            wall.as_secs_f64() * 1e3
        )?;
    }
    out.flush()?;
    if agree {
        Ok(())
    } else {
        Err(Failure::Disagree)
    }
}

fn run_bench(common: &Common, timing: bool, params: &[String]) -> Outcome {
    let settings = Settings::new(common, params)?;
    let policy = settings.policy()?;
    let ns = settings
        .list("n")?
        .ok_or_else(|| Failure::Usage("bench needs --n".into()))?;
    let ks = settings.list("k")?.unwrap_or_else(|| vec![2]);
    let grid = Grid {
        ns: ns.into_iter().map(|v| v as usize).collect(),
        ks: ks.into_iter().map(|v| v as u32).collect(),
        trials: settings.get_or("trials", 10)?,
        seed: policy.seed,
        policy,
        timing: timing || settings.get_or("timing", false)?,
    };
    let rows = grid.run()?;
    let mut out = settings.output()?;
    match settings.format()? {
        Format::Csv => bench::write_csv(&mut out, &rows)?,
        Format::Json => {
            bench::write_json(&mut out, &grid, &rows)?;
            writeln!(out)?;
        }
    }
    out.flush()?;
    Ok(())
}

fn run_fit(common: &Common, source: &str) -> Outcome {
    let settings = Settings::new(common, &[])?;
    let text = if source == "-" {
        io::read_to_string(io::stdin())?
    } else {
        fs::read_to_string(source)?
    };
    let rows = bench::read_rows(&text)?;
    let fit = bench::fit(&rows, settings.get("k")?)?;
    let mut out = settings.output()?;
    match settings.format()? {
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&fit).map_err(|e| Failure::Usage(e.to_string()))?
        )?,
        Format::Csv => {
            writeln!(out, "k={} alpha={:.4} r2={:.4}", fit.k, fit.alpha, fit.r2)?;
            for (n, q) in &fit.points {
                writeln!(out, "n={n} median={q}")?;
            }
        }
    }
    out.flush()?;
    Ok(())
}

struct GenRequest {
    family: bool,
    random: bool,
    all: bool,
    count: Option<usize>,
    members: Option<usize>,
    nonmembers: Option<usize>,
    uniform: Option<usize>,
}

fn gen(common: &Common, req: GenRequest, params: &[String]) -> Outcome {
    let settings = Settings::new(common, params)?;
    let seed: u64 = settings.get_or("seed", 0)?;
    let mut rng = SimRng::new(seed);
    let need = |key: &str| -> Result<u64, Failure> {
        settings
            .get::<u64>(key)?
            .ok_or_else(|| Failure::Usage(format!("gen needs {key}=")))
    };
    let mut entries = Vec::new();
    if req.family {
        let spec = FamilySpec::new(need("k")? as u32, need("i")? as u32)?;
        if req.all {
            entries.extend(enumerate_family(spec)?.iter().map(CorpusEntry::from_family));
        }
        for _ in 0..req.count.unwrap_or(0) {
            entries.push(CorpusEntry::from_family(&sample_family_member(spec, None, &mut rng)?));
        }
        if !req.all && req.count.is_none() {
            return Err(Failure::Usage("gen --family needs --all or --count".into()));
        }
    } else if req.random {
        let n = need("n")? as usize;
        let k = need("k")? as u32;
        for (target, count) in [
            (Target::Member, req.members),
            (Target::Nonmember, req.nonmembers),
            (Target::Uniform, req.uniform),
        ] {
            for _ in 0..count.unwrap_or(0) {
                let word = gen_random_word_with(n, k, target, &mut rng)?;
                entries.push(CorpusEntry::labelled(word, k, Source::Random));
            }
        }
        if entries.is_empty() {
            return Err(Failure::Usage(
                "gen --random needs --members, --nonmembers or --uniform".into(),
            ));
        }
    } else {
        return Err(Failure::Usage("gen needs --family or --random".into()));
    }
    let mut out = settings.output()?;
    write_corpus(&mut out, &entries)?;
    out.flush()?;
    Ok(())
}

fn selftest() -> Outcome {
    let mut ok = true;
    let mut report = |name: &str, pass: bool| {
        println!("{} {name}", if pass { "PASS" } else { "FAIL" });
        ok &= pass;
    };

    let mut reduction = true;
    for n in 0..=10usize {
        for code in 0..(1u64 << n) {
            let w = Word::from_code(code, n);
            for k in 1..=3u32 {
                let padded = w.padded(k as usize);
                let none = padded.is_empty()
                    || brute_force_substrings(&padded, k + 1, SignSet::BOTH, 0, padded.len() - 1)
                        .map(|v| v.is_empty())
                        .unwrap_or(false);
                reduction &= none == classical_dyck(&w, k);
            }
        }
    }
    report("padding reduction, n <= 10", reduction);

    let mut exact = true;
    for n in 2..=16usize {
        for t in 0..=n {
            let marked: Vec<bool> = (0..n).map(|i| i < t).collect();
            for m in 0..=4 {
                let p = statevector::simulated_success_probability(n, &marked, m);
                exact &= (p - statevector::grover_success_probability(n, t, m)).abs() < 1e-9;
            }
        }
    }
    report("statevector iterate closed form", exact);

    let mut agree = true;
    let policy = BackendPolicy::ideal(1).with_eps(0.0);
    for code in 0..(1u64 << 8) {
        let w = Word::from_code(code, 8);
        for k in 1..=3 {
            agree &= decide_dyck(&w, k, &policy).map(|d| d.member).ok() == Some(classical_dyck(&w, k));
        }
    }
    report("decider on all words of length 8", agree);

    let policy = BackendPolicy::ideal(2);
    let mut rng = policy.rng();
    let mut hits = 0;
    for _ in 0..200 {
        let mut p = MarkedSet::new(64, &[7]);
        if dyck_query::search::grover(IndexRange::new(0, 63)?, &mut p, &policy, &mut rng)? == Some(7) {
            hits += 1;
        }
    }
    report("ideal search success rate", hits >= 160);

    if ok {
        Ok(())
    } else {
        Err(Failure::Disagree)
    }
}
