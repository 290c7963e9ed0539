//! The `cm-families` command line.
//!
//! Everything runs through [`run`], which returns the exit code and the text
//! destined for stdout and stderr, so tests can drive the CLI in-process.
//! Exit codes: 0 success, 1 a verification failed, 2 bad input, 3 `l < 2`.

use std::fmt::Write as _;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::alcove::{parse_rational_list, reduce_to_alcove, AlcoveDatum, FamilyParams, Rational};
use crate::beta::{beta, pi_truncated, tau};
use crate::error::Error;
use crate::families::{
    bridge_identity_check, c_tuple, cm_partition_via_jhearts, cm_partition_with, compare,
    rouquier_residue_partition, tilde_c, tilde_c_by, BlockPartition, Comparison,
};
use crate::laurent::LaurentPoly;
use crate::partition::{
    enumerate_multipartitions, enumerate_partitions, Multipartition, Partition,
};

pub const SCHEMA: &str = "cm-families/1";

#[derive(Debug, Parser)]
#[command(
    name = "cm-families",
    version,
    about = "Calogero-Moser and residue partitions for G(l,1,n)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Reduce the stability parameter into the fundamental alcove.
    Reduce {
        #[arg(long)]
        l: usize,
        /// H_1,..,H_{l-1} as exact rationals, e.g. 1/3,-1/2
        #[arg(long = "H", allow_hyphen_values = true)]
        h: String,
    },
    /// Calogero-Moser partition of P(l, n).
    Cm {
        #[command(flatten)]
        point: PointArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Truncation cutoff for the class multisets (expert override).
        #[arg(long, allow_hyphen_values = true)]
        cutoff: Option<i64>,
    },
    /// Residue partition of P(l, n).
    Rouquier {
        #[command(flatten)]
        point: PointArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Compute both partitions and check that they coincide.
    Verify {
        #[arg(long, required_unless_present = "grid")]
        l: Option<usize>,
        #[arg(long, required_unless_present = "grid")]
        n: Option<usize>,
        #[arg(
            long = "H",
            allow_hyphen_values = true,
            required_unless_present = "grid"
        )]
        h: Option<String>,
        /// File with one `l;n;H1,H2,..` point per line, `#` comments.
        #[arg(long, conflicts_with_all = ["l", "n", "h"])]
        grid: Option<std::path::PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Randomized checks of the identities the pipelines rely on.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
}

#[derive(Debug, Args)]
struct PointArgs {
    #[arg(long)]
    l: usize,
    #[arg(long)]
    n: usize,
    #[arg(long = "H", allow_hyphen_values = true)]
    h: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

/// Result of one CLI invocation.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn from_error(e: &Error) -> Self {
        let code = match e {
            Error::LevelTooSmall(_) => 3,
            _ => 2,
        };
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let result = match cli.command {
        Command::Reduce { l, h } => cmd_reduce(l, &h),
        Command::Cm {
            point,
            format,
            cutoff,
        } => cmd_partition(&point, format, Kind::Cm, cutoff),
        Command::Rouquier { point, format } => cmd_partition(&point, format, Kind::Rouquier, None),
        Command::Verify {
            l,
            n,
            h,
            grid,
            jobs,
        } => {
            let points = match grid {
                Some(path) => std::fs::read_to_string(&path)
                    .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
                    .and_then(|text| parse_grid(&text)),
                None => parse_point(l.unwrap(), n.unwrap(), h.as_deref().unwrap()).map(|p| vec![p]),
            };
            points.and_then(|points| cmd_verify(&points, jobs))
        }
        Command::Selftest { seed, samples } => Ok(cmd_selftest(seed, samples)),
    };
    result.unwrap_or_else(|e| Outcome::from_error(&e))
}

pub fn parse_point(l: usize, n: usize, h: &str) -> Result<FamilyParams, Error> {
    if l < 2 {
        return Err(Error::LevelTooSmall(l));
    }
    FamilyParams::new(l, n, parse_rational_list(h)?)
}

/// Parses a grid file: `l;n;H1,H2,..` per line, blank lines and `#`
/// comments ignored. An empty grid is an error.
pub fn parse_grid(text: &str) -> Result<Vec<FamilyParams>, Error> {
    let mut out = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(';').collect();
        let [l, n, h] = fields[..] else {
            return Err(Error::Parse(format!(
                "line {}: expected l;n;H, got {raw:?}",
                lineno + 1
            )));
        };
        let parse_int = |s: &str| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("line {}: bad integer {s:?}", lineno + 1)))
        };
        out.push(parse_point(parse_int(l)?, parse_int(n)?, h)?);
    }
    if out.is_empty() {
        return Err(Error::Parse("grid contains no parameter points".into()));
    }
    Ok(out)
}

fn rationals_json(v: &[Rational]) -> Value {
    Value::Array(
        v.iter()
            .map(|x| Value::String(format!("{}/{}", x.numer(), x.denom())))
            .collect(),
    )
}

/// JSON form of an [`AlcoveDatum`].
pub fn alcove_json(datum: &AlcoveDatum) -> Value {
    let classes: serde_json::Map<String, Value> = datum
        .classes
        .iter()
        .map(|(t, &(a, b))| (t.to_string(), json!([a, b])))
        .collect();
    json!({
        "d": datum.d,
        "epsilon": rationals_json(&datum.epsilon),
        "J": datum.j.members().iter().collect::<Vec<_>>(),
        "w": datum.element.w.images(),
        "r": datum.element.r,
        "I": classes,
    })
}

fn params_json(p: &FamilyParams) -> Value {
    json!({
        "l": p.level(),
        "n": p.size(),
        "H": rationals_json(p.h()),
        "d": p.denominator(),
    })
}

fn cmd_reduce(l: usize, h: &str) -> Result<Outcome, Error> {
    let p = parse_point(l, 0, h)?;
    let datum = reduce_to_alcove(&p);
    let mut out = json!({ "schema": SCHEMA, "l": l, "H": rationals_json(p.h()) });
    merge(&mut out, alcove_json(&datum));
    Ok(Outcome::ok(format!("{out}\n")))
}

fn merge(into: &mut Value, from: Value) {
    if let (Value::Object(a), Value::Object(b)) = (into, from) {
        a.extend(b);
    }
}

#[derive(Clone, Copy)]
enum Kind {
    Cm,
    Rouquier,
}

fn cmd_partition(
    point: &PointArgs,
    format: Format,
    kind: Kind,
    cutoff: Option<i64>,
) -> Result<Outcome, Error> {
    let p = parse_point(point.l, point.n, &point.h)?;
    let (name, blocks) = match kind {
        Kind::Cm => ("cm", cm_partition_with(&p, &reduce_to_alcove(&p), cutoff)?),
        Kind::Rouquier => ("rouquier", rouquier_residue_partition(&p)),
    };
    let text = match format {
        Format::Json => {
            let mut out = json!({ "schema": SCHEMA, "kind": name });
            merge(&mut out, params_json(&p));
            merge(&mut out, json!({ "blocks": blocks.block_strings() }));
            format!("{out}\n")
        }
        Format::Csv => blocks_csv(&blocks),
    };
    Ok(Outcome::ok(text))
}

/// `block,multipartition` rows; the multipartition field is always quoted.
pub fn blocks_csv(blocks: &BlockPartition) -> String {
    let mut s = String::from("block,multipartition\n");
    for (b, members) in blocks.block_strings().iter().enumerate() {
        for m in members {
            writeln!(s, "{b},\"{m}\"").unwrap();
        }
    }
    s
}

/// Everything computed for one parameter point by `verify`.
#[derive(Debug, Clone)]
pub struct RunReport {
    pub params: FamilyParams,
    pub datum: AlcoveDatum,
    pub cm: BlockPartition,
    pub rouquier: BlockPartition,
    pub verdict: Comparison,
    pub jheart_routes_agree: bool,
}

impl RunReport {
    pub fn compute(p: &FamilyParams) -> Result<Self, Error> {
        let datum = reduce_to_alcove(p);
        let cm = cm_partition_with(p, &datum, None)?;
        let rouquier = rouquier_residue_partition(p);
        let verdict = compare(&rouquier, &cm)?;
        let jheart_routes_agree =
            matches!(cm_partition_via_jhearts(p, &datum), Ok(ref b) if *b == cm);
        Ok(RunReport {
            params: p.clone(),
            datum,
            cm,
            rouquier,
            verdict,
            jheart_routes_agree,
        })
    }

    pub fn passed(&self) -> bool {
        self.verdict == Comparison::Equal && self.jheart_routes_agree
    }

    pub fn to_json(&self) -> Value {
        let mut out = json!({ "schema": SCHEMA });
        merge(&mut out, params_json(&self.params));
        merge(
            &mut out,
            json!({
                "alcove": alcove_json(&self.datum),
                "cm": self.cm.block_strings(),
                "rouquier": self.rouquier.block_strings(),
                "verdict": self.verdict.to_string(),
                "jheart_routes": if self.jheart_routes_agree { "agree" } else { "disagree" },
            }),
        );
        out
    }
}

pub fn cmd_verify(points: &[FamilyParams], jobs: usize) -> Result<Outcome, Error> {
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::InvalidParameter(format!("cannot start {jobs} workers: {e}")))?;
    let reports: Vec<RunReport> = pool.install(|| {
        points
            .par_iter()
            .map(RunReport::compute)
            .collect::<Result<_, _>>()
    })?;

    let mut stdout = String::new();
    for r in &reports {
        writeln!(stdout, "{}", r.to_json()).unwrap();
    }
    let failed: Vec<&RunReport> = reports.iter().filter(|r| !r.passed()).collect();
    let total = reports.len();
    let code = if failed.is_empty() {
        writeln!(stdout, "OK {total}/{total}").unwrap();
        0
    } else {
        for r in &failed {
            writeln!(stdout, "FAIL {} verdict={}", r.params, r.verdict).unwrap();
        }
        writeln!(stdout, "FAILED {}/{total}", failed.len()).unwrap();
        1
    };
    let stderr = format!(
        "verified {total} point(s) in {} ms\n",
        start.elapsed().as_millis()
    );
    Ok(Outcome {
        code,
        stdout,
        stderr,
    })
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    let den = rng.gen_range(1..=12i64);
    crate::alcove::rational(rng.gen_range(-3 * den..=3 * den), den)
}

fn random_partition(rng: &mut ChaCha8Rng, max: usize) -> Partition {
    let n = rng.gen_range(0..=max);
    let all = enumerate_partitions(n);
    all[rng.gen_range(0..all.len())].clone()
}

/// Randomized identity checks; `samples` draws per identity.
pub fn cmd_selftest(seed: u64, samples: usize) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let mut checks = 0usize;

    for _ in 0..samples {
        // (x - 1) x^r Res_λ(x) = π(β^r(λ))_{<=K} - (x^r + .. + x^{r+1-K}).
        let lam = random_partition(&mut rng, 8);
        let r = rng.gen_range(-3..=3i64);
        let k = lam.len().max(1) + rng.gen_range(0..6);
        let lhs = lam.residue().shift(r + 1) - lam.residue().shift(r);
        let rhs = pi_truncated(&beta(&lam, r), k) - LaurentPoly::geometric_segment(r, k as u64);
        checks += 1;
        if lhs != rhs {
            failures.push(format!("res-cont fails for {lam} r={r} K={k}"));
        }

        // Bridge identity and C-tilde order independence on a random point.
        let l = rng.gen_range(2..=4usize);
        let h: Vec<Rational> = (1..l).map(|_| random_rational(&mut rng)).collect();
        let n = rng.gen_range(0..=3usize);
        let p = FamilyParams::new(l, n, h).expect("valid random parameters");
        let all = enumerate_multipartitions(l, n);
        let m: &Multipartition = &all[rng.gen_range(0..all.len())];
        checks += 1;
        if !bridge_identity_check(m, &p) {
            failures.push(format!("bridge identity fails for {m} at {p}"));
        }
        let datum = reduce_to_alcove(&p);
        let expected = tilde_c(m, &datum);
        let shuffled = tilde_c_by(&c_tuple(m, &datum), &datum, |moves| {
            moves[rng.gen_range(0..moves.len())]
        });
        checks += 1;
        if shuffled != expected {
            failures.push(format!("C-tilde depends on move order for {m} at {p}"));
        }

        // τ is injective for fixed charges.
        let other = &all[rng.gen_range(0..all.len())];
        let charges: Vec<i64> = (0..l).map(|_| rng.gen_range(-2..=2)).collect();
        checks += 1;
        if other != m && tau(&charges, m).ok() == tau(&charges, other).ok() {
            failures.push(format!("tau collides on {m} and {other}"));
        }
    }

    if failures.is_empty() {
        Outcome::ok(format!("selftest seed={seed}: {checks} checks OK\n"))
    } else {
        let mut stdout = String::new();
        for f in &failures {
            writeln!(stdout, "FAIL {f}").unwrap();
        }
        writeln!(
            stdout,
            "selftest seed={seed}: {}/{checks} checks failed",
            failures.len()
        )
        .unwrap();
        Outcome {
            code: 1,
            stdout,
            stderr: String::new(),
        }
    }
}
