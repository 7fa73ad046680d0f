//! `tgl`: command-line front end for `tgl-core`.
//!
//! Exit codes: 0 on success, 1 when a verification ends in a status other
//! than `Sn` or an identity fails, 2 on usage or input errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use tgl_core::corpus::builtin_corpus;
use tgl_core::galois::{
    self, Status, VerificationReport, DEFAULT_MAX_SAMPLES, DEFAULT_PRIME_BOUND,
};
use tgl_core::graphs::{self, SimpleGraph};
use tgl_core::io::parse_matroid_json;
use tgl_core::poly::is_prime;
use tgl_core::tutte::{self, check_identities, Strategy};
use tgl_core::Matroid;

/// Graphs handed to the worker pool at a time; each batch is written out
/// before the next one starts.
const BATCH: usize = 1024;

#[derive(Debug, Parser)]
#[command(name = "tgl", version, about = "Multivariate Tutte polynomials and Galois certificates")]
struct Cli {
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum StrategyArg {
    StateSum,
    DeletionContraction,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CorpusArg {
    Builtin,
}

#[derive(Debug, Args)]
struct SeedArg {
    /// Global seed; per-input seeds are derived from it.
    #[arg(long, env = "TGL_SEED", default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Multivariate Tutte polynomial Ẑ_M(q, v) as JSON.
    Zhat {
        #[arg(long)]
        matroid: PathBuf,
        #[arg(long, value_enum, default_value_t = StrategyArg::StateSum)]
        strategy: StrategyArg,
    },
    /// Bivariate Tutte polynomial T(x, y) as JSON.
    Tutte {
        #[arg(long, required_unless_present = "matroid", conflicts_with = "matroid")]
        graph6: Option<String>,
        #[arg(long)]
        matroid: Option<PathBuf>,
    },
    /// Check the polynomial identities; exits 0 iff all pass.
    Identities {
        #[arg(long, value_enum, required_unless_present = "matroid", conflicts_with = "matroid")]
        corpus: Option<CorpusArg>,
        #[arg(long)]
        matroid: Option<PathBuf>,
    },
    /// Certify that the Galois group of Ẑ_M is symmetric.
    VerifyMain {
        #[arg(long)]
        matroid: PathBuf,
        /// 0 for the rationals, or a prime.
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
        #[command(flatten)]
        seed: SeedArg,
        #[arg(long, default_value_t = DEFAULT_PRIME_BOUND)]
        prime_bound: u64,
        #[arg(long, default_value_t = DEFAULT_MAX_SAMPLES)]
        max_samples: usize,
        /// Record wall time in the report.
        #[arg(long)]
        timings: bool,
    },
    /// Certify that the Galois group of T_G(x, y) is symmetric for every
    /// graph of a given order or in a graph6 file; NDJSON output.
    VerifyConjecture {
        #[arg(long, required_unless_present = "graph6_file", conflicts_with = "graph6_file")]
        order: Option<usize>,
        #[arg(long)]
        graph6_file: Option<PathBuf>,
        #[arg(long, default_value_t = 2, allow_negative_numbers = true)]
        y0: i64,
        /// Accepted for uniformity; the bivariate route draws no random values.
        #[command(flatten)]
        seed: SeedArg,
        #[arg(long, default_value_t = DEFAULT_PRIME_BOUND)]
        prime_bound: u64,
        /// Worker threads (default: available parallelism).
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        timings: bool,
    },
    /// Jacobian rank of the coefficients of Ẑ_M in q.
    Independence {
        #[arg(long)]
        matroid: PathBuf,
        #[arg(long, default_value_t = 5)]
        points: usize,
        #[command(flatten)]
        seed: SeedArg,
    },
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match &cli.output {
        Some(path) => fs::File::create(path)
            .with_context(|| format!("cannot create {}", path.display()))
            .and_then(|f| {
                let mut w = std::io::BufWriter::new(f);
                let code = execute(cli.command, &mut w)?;
                w.flush()?;
                Ok(code)
            }),
        None => execute(cli.command, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            2
        }
    }
}

fn read_matroid(path: &Path) -> Result<Matroid> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse_matroid_json(&text).with_context(|| format!("in {}", path.display()))
}

fn emit(out: &mut dyn Write, value: &impl Serialize) -> Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Zhat { matroid, strategy } => {
            let m = read_matroid(&matroid)?;
            let strategy = match strategy {
                StrategyArg::StateSum => Strategy::StateSum,
                StrategyArg::DeletionContraction => Strategy::DeletionContraction,
            };
            let z = tutte::zhat(&m, strategy)?;
            let poly = z.to_multi();
            emit(
                out,
                &json!({
                    "input": z.source(),
                    "ground_size": z.ground_size(),
                    "rank": z.rank(),
                    "polynomial": poly,
                    "display": poly.display(),
                }),
            )?;
            Ok(0)
        }
        Command::Tutte { graph6, matroid } => {
            let m = match (graph6, matroid) {
                (Some(g), _) => graphs::cycle_matroid(&graphs::parse_graph6(&g)?)?,
                (None, Some(path)) => read_matroid(&path)?,
                (None, None) => bail!("one of --graph6 or --matroid is required"),
            };
            let t = tutte::tutte_bivariate(&m)?;
            emit(
                out,
                &json!({
                    "input": m.descriptor(),
                    "rank": m.full_rank(),
                    "polynomial": t,
                    "display": t.to_string(),
                }),
            )?;
            Ok(0)
        }
        Command::Identities { corpus, matroid } => {
            let entries: Vec<(String, Matroid)> = match (corpus, matroid) {
                (Some(CorpusArg::Builtin), _) => builtin_corpus()
                    .into_iter()
                    .map(|e| (e.name, e.matroid))
                    .collect(),
                (None, Some(path)) => {
                    let m = read_matroid(&path)?;
                    vec![(m.descriptor(), m)]
                }
                (None, None) => bail!("one of --corpus or --matroid is required"),
            };
            let mut reports = Vec::with_capacity(entries.len());
            for (name, m) in &entries {
                let report = check_identities(m).with_context(|| format!("checking {name}"))?;
                reports.push(json!({ "name": name, "report": report }));
            }
            let all_pass = reports
                .iter()
                .all(|r| r["report"]["checks"].as_array().is_some_and(|cs| cs.iter().all(|c| c["outcome"] != "fail")));
            emit(out, &json!({ "all_pass": all_pass, "reports": reports }))?;
            Ok(if all_pass { 0 } else { 1 })
        }
        Command::VerifyMain {
            matroid,
            characteristic,
            seed,
            prime_bound,
            max_samples,
            timings,
        } => {
            let m = read_matroid(&matroid)?;
            let start = Instant::now();
            let mut report = match characteristic {
                0 => galois::verify_theorem_main(&m, seed.seed, prime_bound)?,
                p if is_prime(p) => {
                    if !m.is_loopless() {
                        bail!("positive-characteristic verification needs a loopless matroid");
                    }
                    galois::verify_theorem_mod_p(&m, p, seed.seed, max_samples)?
                }
                p => bail!("--char must be 0 or a prime, got {p}"),
            };
            if timings {
                report.wall_time_ms = Some(start.elapsed().as_millis() as u64);
            }
            emit(out, &report)?;
            Ok(if report.status == Status::Sn { 0 } else { 1 })
        }
        Command::VerifyConjecture {
            order,
            graph6_file,
            y0,
            seed: _,
            prime_bound,
            jobs,
            timings,
        } => {
            if y0 == 1 {
                bail!("--y0 must differ from 1");
            }
            let graphs: Vec<SimpleGraph> = match (order, graph6_file) {
                (Some(n), _) => graphs::enumerate_biconnected(n)?,
                (None, Some(path)) => {
                    let text = fs::read_to_string(&path)
                        .with_context(|| format!("cannot read {}", path.display()))?;
                    graphs::parse_graph6_file(&text)?
                }
                (None, None) => bail!("one of --order or --graph6-file is required"),
            };
            let mut builder = rayon::ThreadPoolBuilder::new();
            if let Some(j) = jobs {
                if j == 0 {
                    bail!("--jobs must be positive");
                }
                builder = builder.num_threads(j);
            }
            let pool = builder.build()?;
            let mut summary = Summary::default();
            for batch in graphs.chunks(BATCH) {
                let reports: Vec<VerificationReport> = pool.install(|| {
                    batch
                        .par_iter()
                        .map(|g| {
                            let start = Instant::now();
                            let mut r = galois::verify_conjecture_graph(g, y0, prime_bound)?;
                            if timings {
                                r.wall_time_ms = Some(start.elapsed().as_millis() as u64);
                            }
                            Ok(r)
                        })
                        .collect::<Result<_>>()
                })?;
                for r in &reports {
                    summary.add(r);
                    emit(out, r)?;
                }
            }
            let all_sn = summary.total == summary.sn;
            emit(out, &SummaryLine { summary: &summary })?;
            Ok(if all_sn { 0 } else { 1 })
        }
        Command::Independence {
            matroid,
            points,
            seed,
        } => {
            let m = read_matroid(&matroid)?;
            match galois::jacobian_independence_check(&m, points, seed.seed) {
                Ok(report) => {
                    emit(out, &report)?;
                    Ok(if report.independent { 0 } else { 1 })
                }
                Err(galois::GaloisError::NotConnected) => {
                    emit(out, &json!({ "input": m.descriptor(), "status": "NotConnected" }))?;
                    Ok(1)
                }
                Err(e) => Err(e.into()),
            }
        }
    }
}

#[derive(Serialize)]
struct SummaryLine<'a> {
    summary: &'a Summary,
}

/// Final NDJSON line of `verify-conjecture`.
#[derive(Debug, Default, Serialize)]
struct Summary {
    total: usize,
    sn: usize,
    inconclusive: usize,
    not_connected: usize,
    degenerate: usize,
    /// Distinct polynomial degrees among the `Sn` reports.
    degrees: Vec<usize>,
    all_sn: bool,
}

impl Summary {
    fn add(&mut self, r: &VerificationReport) {
        self.total += 1;
        match r.status {
            Status::Sn => {
                self.sn += 1;
                if let Err(i) = self.degrees.binary_search(&r.rank) {
                    self.degrees.insert(i, r.rank);
                }
            }
            Status::Inconclusive => self.inconclusive += 1,
            Status::NotConnected => self.not_connected += 1,
            Status::Degenerate => self.degenerate += 1,
        }
        self.all_sn = self.sn == self.total;
    }
}
