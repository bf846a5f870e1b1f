mod args;
mod config;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use multfree_core::{
    cross_check, decompose_product, omega_series, omega_tensor_tau, pieri_tensor, sweep, standard_instances, CaseId,
    Consistency, Family, FormalSum, IrrepLabel, Oracle, Partition, SweepRow, Verdict,
};
use serde::Serialize;

use crate::args::{make_label, parse_case, parse_ints, CaseArgs};
use crate::config::{cache_path, Config, CACHE_ENV};

#[derive(Parser, Debug)]
#[command(name = "multfree", version, about = "Multiplicity-freeness checks for metaplectic tensor products")]
struct Cli {
    /// JSON config file with optional keys degree, cache, threads.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Product cache file (overrides MULTFREE_CACHE and the config).
    #[arg(long, global = true)]
    cache: Option<PathBuf>,

    /// Neither read nor write the product cache.
    #[arg(long, global = true)]
    no_cache: bool,

    /// Worker threads for sweeps.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decompose η ⊗ η_(s) in Sp(n) by the Pieri rule.
    Pieri {
        /// Parts of η, weakly decreasing.
        #[arg(allow_negative_numbers = true)]
        parts: Vec<i64>,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        json: bool,
    },
    /// Decompose a tensor product of irreducibles: `tensor sp 2 -- 1 -- 1,1`.
    Tensor {
        /// sp, su, u, so or circle.
        family: String,
        /// n for Sp(n), m for SU(m), k for U(k), 2n for SO(2n), 1 for the circle.
        rank: u32,
        /// Use the brute-force oracle even where a closed form applies.
        #[arg(long)]
        oracle_only: bool,
        #[arg(long)]
        json: bool,
        /// Highest weights separated by `--`.
        #[arg(last = true, allow_hyphen_values = true)]
        weights: Vec<String>,
    },
    /// Decide whether ω ⊗ τ is multiplicity-free up to a degree.
    Classify {
        #[command(flatten)]
        case: CaseArgs,
        /// Truncation degree (default: |τ| + 4).
        #[arg(long)]
        degree: Option<u32>,
        #[arg(long)]
        json: bool,
        /// Print every route to the witness.
        #[arg(long)]
        witness: bool,
    },
    /// Print ω, or ω ⊗ τ when --tau is given, restricted to T × U.
    Series {
        #[command(flatten)]
        case: CaseArgs,
        #[arg(long)]
        degree: Option<u32>,
        #[arg(long)]
        json: bool,
    },
    /// Sweep the classification over small instances and all τ up to a weight bound.
    VerifyTheorem1 {
        /// Bound on the total weight size of each factor of τ.
        #[arg(long, default_value_t = 2)]
        bound: u32,
        /// Truncation degree (default 6).
        #[arg(long)]
        degree: Option<u32>,
        /// Restrict to these cases, comma separated.
        #[arg(long, value_delimiter = ',', value_parser = parse_case)]
        cases: Vec<CaseId>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Serialize)]
struct Summary {
    rows: usize,
    consistent: usize,
    inconclusive: usize,
    inconsistent: usize,
}

#[derive(Serialize)]
struct SweepReport<'a> {
    bound: u32,
    degree: u32,
    rows: &'a [SweepRow],
    summary: Summary,
}

const EXIT_INPUT: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn consistency_code(c: Consistency) -> u8 {
    match c {
        Consistency::Consistent => 0,
        Consistency::Inconclusive => 1,
        Consistency::Inconsistent => 3,
    }
}

fn run(cli: Cli) -> Result<u8> {
    let config = match &cli.config {
        Some(p) => Config::load(p)?,
        None => Config::default(),
    };
    if let Some(t) = cli.threads.or(config.threads) {
        rayon::ThreadPoolBuilder::new().num_threads(t).build_global().context("configuring threads")?;
    }
    let cache = (!cli.no_cache).then(|| cache_path(cli.cache.as_deref(), std::env::var(CACHE_ENV).ok(), &config));
    if let Some(path) = &cache {
        if let Err(e) = Oracle::global().load_cache(path) {
            eprintln!("warning: ignoring cache {}: {e}", path.display());
        }
    }

    let code = dispatch(cli.command, &config)?;

    if let Some(path) = &cache {
        if let Err(e) = Oracle::global().save_cache(path) {
            eprintln!("warning: could not write cache {}: {e}", path.display());
        }
    }
    Ok(code)
}

fn dispatch(command: Command, config: &Config) -> Result<u8> {
    match command {
        Command::Pieri { parts, s, n, json } => {
            let eta = Partition::from_signed(&parts)?;
            let out = pieri_tensor(&eta, s, n)?;
            let labels = out.terms.map(|p| IrrepLabel::sp_partition(n, p).expect("pieri output fits Sp(n)"));
            if json {
                println!("{}", serde_json::to_string(&labels)?);
            } else {
                println!("{}", render_short(&labels));
            }
            Ok(0)
        }
        Command::Tensor { family, rank, oracle_only, json, weights } => {
            let fam = Family::parse(&family).with_context(|| format!("unknown family {family:?}"))?;
            let labels = weights
                .split(|w| w == "--")
                .map(|group| make_label(fam, rank, parse_ints(&group.join(" "))?))
                .collect::<Result<Vec<_>>>()?;
            let out = tensor(&labels, oracle_only)?;
            if json {
                println!("{}", serde_json::to_string(&out)?);
            } else {
                println!("{}", render_short(&out));
            }
            Ok(0)
        }
        Command::Classify { case, degree, json, witness } => {
            let spec = case.spec()?;
            let tau = case.tau(&spec)?;
            let d = degree.or(config.degree).unwrap_or_else(|| multfree_core::deg_window(&tau));
            let check = cross_check(&spec, &tau, d)?;
            if json {
                let row = SweepRow {
                    case: spec.id(),
                    params: spec.clone(),
                    tau,
                    witness: check.verdict.witness().cloned(),
                    verdict: check.verdict,
                    expected: check.expected,
                    consistency: check.consistency,
                };
                println!("{}", serde_json::to_string(&row)?);
            } else {
                println!("{}", verdict_line(&check.verdict));
                if witness {
                    if let Verdict::MultiplicityFound { routes, .. } = &check.verdict {
                        for r in routes {
                            println!(
                                "  route at degree {} [{}]: {} ⊗ {} (copy {})",
                                r.degree,
                                r.params_string(),
                                r.omega_term,
                                r.tau_term,
                                r.copy + 1
                            );
                        }
                    }
                }
                let expected = match check.expected.outcome {
                    multfree_core::Expectation::Commutative => "commutative",
                    multfree_core::Expectation::NotCommutative => "not commutative",
                };
                println!("expected: {expected} ({}): {}", check.expected.source.describe(), check.consistency);
            }
            Ok(consistency_code(check.consistency))
        }
        Command::Series { case, degree, json } => {
            let spec = case.spec()?;
            let d = degree.or(config.degree).unwrap_or(4);
            let series = match case.tau {
                None => omega_series(&spec, d)?,
                Some(_) => omega_tensor_tau(&spec, &case.tau(&spec)?, d)?,
            };
            if json {
                println!("{}", serde_json::to_string(&series)?);
            } else {
                println!("{series}");
            }
            Ok(0)
        }
        Command::VerifyTheorem1 { bound, degree, cases, json } => {
            let d = degree.or(config.degree).unwrap_or(6);
            let mut rows = Vec::new();
            for spec in standard_instances() {
                if cases.is_empty() || cases.contains(&spec.id()) {
                    rows.extend(sweep(&spec, bound, d)?);
                }
            }
            let count = |c: Consistency| rows.iter().filter(|r| r.consistency == c).count();
            let summary = Summary {
                rows: rows.len(),
                consistent: count(Consistency::Consistent),
                inconclusive: count(Consistency::Inconclusive),
                inconsistent: count(Consistency::Inconsistent),
            };
            let code = if summary.inconsistent > 0 {
                3
            } else if summary.inconclusive > 0 {
                1
            } else {
                0
            };
            if json {
                println!("{}", serde_json::to_string(&SweepReport { bound, degree: d, rows: &rows, summary })?);
            } else {
                for r in &rows {
                    let verdict = match &r.verdict {
                        Verdict::MultiplicityFound { witness, degree, .. } => {
                            format!("multiplicity at {witness} (degree {degree})")
                        }
                        Verdict::MultiplicityFreeUpTo { degree } => format!("free up to degree {degree}"),
                    };
                    println!("{:<4} {:<14} {:<40} {:<48} {}", r.case, r.params.params_string(), r.tau, verdict, r.consistency);
                }
                println!(
                    "{} rows: {} consistent, {} inconclusive, {} inconsistent",
                    summary.rows, summary.consistent, summary.inconclusive, summary.inconsistent
                );
            }
            Ok(code)
        }
    }
}

/// Closed forms for `Sp(n)` products with a one-row factor, the oracle otherwise.
fn tensor(labels: &[IrrepLabel], oracle_only: bool) -> Result<FormalSum<IrrepLabel>> {
    if labels.is_empty() {
        bail!("no weights given; separate highest weights with --");
    }
    if let [a, b] = labels {
        if !oracle_only && a.family() == Family::Sp && a.same_group(b) {
            let n = a.rank();
            let (pa, pb) = (a.partition().unwrap(), b.partition().unwrap());
            let (eta, row) = if pb.len() <= 1 { (pa, pb) } else { (pb, pa) };
            if row.len() <= 1 {
                let out = pieri_tensor(&eta, row.size(), n)?;
                return Ok(out.terms.map(|p| IrrepLabel::sp_partition(n, p).expect("pieri output fits Sp(n)")));
            }
        }
    }
    Ok(decompose_product(labels)?)
}

fn render_short(sum: &FormalSum<IrrepLabel>) -> String {
    let terms: Vec<String> = sum
        .iter_desc()
        .map(|(l, &m)| if m == 1 { l.short() } else { format!("{m}·{}", l.short()) })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn verdict_line(v: &Verdict) -> String {
    match v {
        Verdict::MultiplicityFound { witness, mult, degree, .. } => {
            format!("MULTIPLICITY at {witness} — NOT commutative (multiplicity {mult}, second route at degree {degree})")
        }
        Verdict::MultiplicityFreeUpTo { degree } => {
            format!("multiplicity-free up to degree {degree} — commutative as far as checked (not a proof beyond degree {degree})")
        }
    }
}
