//! Command-line front end.
//!
//! One binary with subcommands; reports go to standard output, diagnostics
//! to standard error. Exit codes: 0 = success / no asserted failures,
//! 1 = falsification found by `verify`, 2 = configuration or input errors.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::dualpair::DualPair;
use crate::extension::{sample_extensions, ExtensionReport, ProperExtension};
use crate::harness::{run_campaign, GenConfig, Strategy, Suite};
use crate::io::{parse_relation_file, serialize_relation, to_pretty_json, ParsedRelation};
use crate::relation::LinearRelation;

#[derive(Parser)]
#[command(
    name = "linrel",
    about = "Exact calculus of linear relations, dual pairs, and quasi-selfadjoint extensions over Q(i)",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the adjoint of a relation and print its canonical form.
    Adjoint { file: PathBuf },
    /// Split a relation into its operator and pure multivalued parts.
    Decompose { file: PathBuf },
    /// Product A∘T of two relations (T applied first).
    Product { a: PathBuf, t: PathBuf },
    /// Single-relation report: parts, predicates, deficiency.
    Check { file: PathBuf },
    /// Full dual-pair analysis of {A, B}.
    Analyze {
        a: PathBuf,
        b: PathBuf,
        /// Evaluate hypothesis-gated identities even when their hypotheses
        /// fail (necessity-probe mode).
        #[arg(long)]
        override_hypotheses: bool,
    },
    /// Check proper extensions of the dual pair {A, B}.
    Extend {
        a: PathBuf,
        b: PathBuf,
        /// Extra generator pairs adjoined to A (a relation file; its pairs
        /// must lie in B*).
        #[arg(long, conflicts_with_all = ["k", "count"])]
        extra: Option<PathBuf>,
        /// Sample extensions with dim Ã = dim A + k instead.
        #[arg(long)]
        k: Option<usize>,
        /// Number of sampled extensions.
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Evaluate the gated formulas even when the pair hypotheses fail
        /// (necessity-probe mode).
        #[arg(long)]
        override_hypotheses: bool,
    },
    /// Run seeded verification campaigns.
    Verify {
        /// Suite name; repeatable. Defaults to every suite.
        #[arg(long = "suite")]
        suites: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        dim_min: usize,
        #[arg(long, default_value_t = 6)]
        dim_max: usize,
        #[arg(long, default_value_t = 3)]
        entry_bound: i64,
        #[arg(long, default_value = "free")]
        strategy: String,
        /// Evaluate hypothesis-gated identities outside their hypotheses and
        /// record the outcomes (necessity-probe mode).
        #[arg(long)]
        override_hypotheses: bool,
        /// Write the report to a file instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

/// Runs the CLI against the given arguments, returning the exit code and the
/// standard-output payload. Diagnostics are printed to standard error
/// directly, which keeps reports clean for golden-file comparison.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            return (0, e.to_string());
        }
        Err(e) => {
            eprint!("{e}");
            return (2, String::new());
        }
    };
    match dispatch(cli.command) {
        Ok((code, out)) => (code, out),
        Err(message) => {
            eprintln!("error: {message}");
            (2, String::new())
        }
    }
}

fn load(path: &Path) -> Result<ParsedRelation, String> {
    parse_relation_file(path).map_err(|e| e.to_string())
}

fn load_pair(a: &Path, b: &Path) -> Result<DualPair, String> {
    let a = load(a)?;
    let b = load(b)?;
    DualPair::new(a.relation, b.relation).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct DecomposeOut {
    op_part: serde_json::Value,
    multi_part: serde_json::Value,
}

#[derive(Serialize)]
struct CheckDims {
    graph: usize,
    domain: usize,
    range: usize,
    null: usize,
    multi: usize,
    adjoint: usize,
}

#[derive(Serialize)]
struct CheckOut {
    space_dim: usize,
    dims: CheckDims,
    hermitian: bool,
    selfadjoint: bool,
    deficiency: Option<[usize; 2]>,
    von_neumann: Option<bool>,
}

fn relation_json(rel: &LinearRelation) -> serde_json::Value {
    serde_json::from_str(&serialize_relation(rel)).expect("canonical serialization is valid JSON")
}

fn dispatch(command: Command) -> Result<(i32, String), String> {
    match command {
        Command::Adjoint { file } => {
            let rel = load(&file)?.relation;
            Ok((0, serialize_relation(&rel.adjoint())))
        }
        Command::Decompose { file } => {
            let rel = load(&file)?.relation;
            let parts = rel.arens_decompose();
            let out = DecomposeOut {
                op_part: relation_json(&parts.op_part),
                multi_part: relation_json(&parts.multi_part),
            };
            Ok((0, to_pretty_json(&out)))
        }
        Command::Product { a, t } => {
            let a = load(&a)?.relation;
            let t = load(&t)?.relation;
            let product = a.product(&t).map_err(|e| e.to_string())?;
            Ok((0, serialize_relation(&product)))
        }
        Command::Check { file } => {
            let rel = load(&file)?.relation;
            let deficiency = rel.deficiency().ok();
            let out = CheckOut {
                space_dim: rel.space_dim(),
                dims: CheckDims {
                    graph: rel.dim(),
                    domain: rel.domain().dim(),
                    range: rel.range().dim(),
                    null: rel.null_space().dim(),
                    multi: rel.multi().dim(),
                    adjoint: rel.adjoint().dim(),
                },
                hermitian: rel.is_hermitian(),
                selfadjoint: rel.is_selfadjoint(),
                deficiency: deficiency.map(|d| [d.n_plus, d.n_minus]),
                von_neumann: rel.von_neumann_check().ok(),
            };
            Ok((0, to_pretty_json(&out)))
        }
        Command::Analyze {
            a,
            b,
            override_hypotheses,
        } => {
            let pair = load_pair(&a, &b)?;
            Ok((0, to_pretty_json(&pair.analyze(override_hypotheses))))
        }
        Command::Extend {
            a,
            b,
            extra,
            k,
            count,
            seed,
            override_hypotheses,
        } => {
            let pair = load_pair(&a, &b)?;
            match (extra, k) {
                (Some(extra), None) => {
                    let parsed = load(&extra)?;
                    let ext = ProperExtension::new(&pair, &parsed.raw_pairs)
                        .map_err(|e| e.to_string())?;
                    Ok((0, to_pretty_json(&ext.report(override_hypotheses))))
                }
                (None, Some(k)) => {
                    let exts =
                        sample_extensions(&pair, k, count, seed).map_err(|e| e.to_string())?;
                    let reports: Vec<ExtensionReport> =
                        exts.iter().map(|e| e.report(override_hypotheses)).collect();
                    Ok((0, to_pretty_json(&reports)))
                }
                (None, None) => {
                    // No extension requested: report on Ã = A itself.
                    let ext =
                        ProperExtension::new(&pair, &[]).map_err(|e| e.to_string())?;
                    Ok((0, to_pretty_json(&ext.report(override_hypotheses))))
                }
                (Some(_), Some(_)) => unreachable!("clap forbids --extra with --k"),
            }
        }
        Command::Verify {
            suites,
            seed,
            trials,
            dim_min,
            dim_max,
            entry_bound,
            strategy,
            override_hypotheses,
            output,
        } => {
            let strategy = Strategy::from_str(&strategy)?;
            let suites: Vec<Suite> = if suites.is_empty() {
                Suite::ALL.to_vec()
            } else {
                suites
                    .iter()
                    .map(|s| Suite::from_str(s))
                    .collect::<Result<_, _>>()?
            };
            if dim_min == 0 || dim_min > dim_max {
                return Err(format!("invalid dimension range {dim_min}..{dim_max}"));
            }
            let config = GenConfig {
                seed,
                dim_min,
                dim_max,
                entry_bound,
                strategy,
                trials,
            };
            let report = run_campaign(&config, &suites, override_hypotheses);
            let payload = to_pretty_json(&report);
            let code = report.exit_code();
            match output {
                Some(path) => {
                    fs::write(&path, payload)
                        .map_err(|e| format!("{}: {e}", path.display()))?;
                    Ok((code, String::new()))
                }
                None => Ok((code, payload)),
            }
        }
    }
}
