use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};

use riordan_cli::cf::load_cf_file;
use riordan_cli::corpus::{load_corpus, run_corpus_with_order};
use riordan_cli::render::{render_sequence, render_triangle, Format};
use riordan_cli::source;
use riordan_core::contfrac::eval_cf;
use riordan_core::exp_riordan::exp_bang;
use riordan_core::inversion::{bang_riordan, revert_transform_sequence, BivariateGf};
use riordan_core::SeriesSupplier;

/// Exact Riordan arrays, their inversions, and the golden-file corpus.
///
/// Series sources are comma-separated coefficients ("1,-2,3"),
/// family:<name> (factorials, xfactorials, exp, cosh, bessel_i1_over_x),
/// or expressions in x ("1/(1+x)^2", "-x*(1+5*x)/(1+x)", "cosh(x)").
#[derive(Parser)]
#[command(name = "riordan", version, about)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the matrix of the Riordan array (g, f)
    Triangle {
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        /// Last row index N (rows 0..=N)
        #[arg(short = 'N', long = "order")]
        order: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Print the inversion of (g, f), or of [g, f] with --exp
    Bang {
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(short = 'N', long = "order")]
        order: usize,
        /// Treat the pair as an exponential Riordan array
        #[arg(long)]
        exp: bool,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Revert transform of an explicit sequence
    RevertSeq {
        /// Comma-separated rationals; needs at least N+1 terms
        #[arg(long, allow_hyphen_values = true)]
        seq: String,
        #[arg(short = 'N', long = "order")]
        order: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Run a golden-file corpus; exits 1 on any unexpected outcome
    Verify {
        #[arg(long)]
        corpus: PathBuf,
        /// Worker threads (default: one per core)
        #[arg(long)]
        jobs: Option<usize>,
        /// Override every case's truncation order (comparisons then cover
        /// the rows available at that order)
        #[arg(short = 'N', long = "order")]
        order: Option<usize>,
    },
    /// Evaluate a continued-fraction spec file into a triangle or sequence
    CfEval {
        #[arg(long)]
        spec: PathBuf,
        #[arg(short = 'N', long = "order")]
        order: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            // anything that fails before verification is a usage/parse error
            ExitCode::from(2)
        }
    }
}

fn run() -> Result<ExitCode> {
    match Cli::parse().cmd {
        Cmd::Triangle { g, f, order, format } => {
            let spec = source::riordan_spec_from(&g, &f)?;
            println!("{}", render_triangle(&spec.to_matrix(order), format));
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Bang { g, f, order, exp, format } => {
            let t = if exp {
                exp_bang(&source::exp_spec_from(&g, &f)?, order)?
            } else {
                bang_riordan(&source::riordan_spec_from(&g, &f)?, order)?
            };
            println!("{}", render_triangle(&t, format));
            Ok(ExitCode::SUCCESS)
        }
        Cmd::RevertSeq { seq, order, format } => {
            let terms = source::sequence_terms(&seq)?;
            if terms.len() < order + 1 {
                anyhow::bail!(
                    "sequence has {} terms but order {order} needs {}",
                    terms.len(),
                    order + 1
                );
            }
            let rt = revert_transform_sequence(&SeriesSupplier::polynomial(terms), order)?;
            println!("{}", render_sequence(rt.terms(), format));
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify { corpus, jobs, order } => {
            let cases = load_corpus(&corpus)?;
            let reports = run_corpus_with_order(&cases, jobs, order);
            let mut ok = 0usize;
            let mut xfail = 0usize;
            let mut failed = 0usize;
            for report in &reports {
                println!("{}", report.line());
                match (report.as_expected, &report.outcome) {
                    (true, riordan_cli::corpus::Outcome::Pass) => ok += 1,
                    (true, _) => xfail += 1,
                    (false, _) => failed += 1,
                }
            }
            println!(
                "{} cases: {ok} passed, {xfail} known discrepancies, {failed} failed",
                reports.len()
            );
            Ok(if failed == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Cmd::CfEval { spec, order, format } => {
            let (_, cf) = load_cf_file(&spec)?;
            let series = eval_cf(&cf, order)?;
            match series.lower() {
                Some(seq) => println!("{}", render_sequence(seq.coeffs(), format)),
                None => {
                    let t = BivariateGf::new(series)
                        .to_triangle()
                        .context("fraction does not expand to a triangular array")?;
                    println!("{}", render_triangle(&t, format));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
