//! The golden-file corpus: every printed triangle and sequence from the
//! source material, bound to a machine-checkable case.
//!
//! Cases are TOML records. Numbers are decimal strings throughout ("p" or
//! "p/q"), so there is no integer-width ceiling. A case either `pass`es or
//! is a recorded `known_discrepancy` (a printed typo), in which case it
//! must fail in exactly the recorded way: at the recorded first-mismatch
//! coordinates, or with the recorded error.

use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use rayon::prelude::*;
use serde::Deserialize;

use riordan_core::contfrac::eval_cf;
use riordan_core::inversion::{bang_bivariate, bang_riordan, reversal_gf_supplier};
use riordan_core::exp_riordan::exp_bang;
use riordan_core::{Rational, Triangle, XSeries, YPoly};

use crate::cf::{build_cf, CfDef};
use crate::source;

#[derive(Clone, Debug, Deserialize)]
pub struct CorpusFile {
    #[serde(default, rename = "case")]
    pub cases: Vec<CaseDef>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseKind {
    Ordinary,
    Exponential,
    Bivariate,
    Sequence,
    Cf,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Operation {
    Matrix,
    Bang,
    ExpBang,
    RevertSeq,
    RowSums,
    CfEval,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum Expectation {
    #[default]
    Pass,
    KnownDiscrepancy,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CaseDef {
    pub id: String,
    pub kind: CaseKind,
    pub operation: Operation,
    /// For row_sums: which triangle to sum (matrix | bang | exp_bang).
    #[serde(default)]
    pub of: Option<Operation>,
    pub source: SourceDef,
    /// Truncation order; defaults to the number of expected rows minus one.
    #[serde(default)]
    pub order: Option<usize>,
    #[serde(default)]
    pub expected_rows: Option<Vec<Vec<String>>>,
    #[serde(default)]
    pub expected_seq: Option<Vec<String>>,
    #[serde(default)]
    pub oeis: Option<String>,
    #[serde(default)]
    pub expectation: Expectation,
    /// Recorded first mismatch (n, k) for a known discrepancy.
    #[serde(default)]
    pub fails_at: Option<[usize; 2]>,
    /// Recorded error fragment for a known discrepancy that cannot evaluate.
    #[serde(default)]
    pub fails_with: Option<String>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SourceDef {
    #[serde(default)]
    pub g: Option<String>,
    #[serde(default)]
    pub f: Option<String>,
    /// Bivariate gf expression (kind = bivariate).
    #[serde(default)]
    pub gf: Option<String>,
    /// Explicit terms (kind = sequence).
    #[serde(default)]
    pub seq: Option<String>,
    /// Replace the array by its group inverse before the operation.
    #[serde(default)]
    pub invert: bool,
    /// Replace the array by its row reversal before the operation.
    #[serde(default)]
    pub reverse: bool,
    #[serde(default)]
    pub cf: Option<CfDef>,
}

#[derive(Clone, PartialEq, Debug)]
pub enum Outcome {
    Pass,
    Mismatch {
        n: usize,
        k: usize,
        got: String,
        want: String,
    },
    Failed(String),
}

#[derive(Clone, Debug)]
pub struct CaseReport {
    pub id: String,
    pub outcome: Outcome,
    /// Whether the outcome matches the case's expectation.
    pub as_expected: bool,
}

impl CaseReport {
    pub fn line(&self) -> String {
        match (&self.outcome, self.as_expected) {
            (Outcome::Pass, true) => format!("PASS  {}", self.id),
            (Outcome::Pass, false) => {
                format!("FAIL  {} (recorded discrepancy unexpectedly passed)", self.id)
            }
            (Outcome::Mismatch { n, k, got, want }, true) => format!(
                "XFAIL {} (known discrepancy at ({n},{k}): got {got}, printed {want})",
                self.id
            ),
            (Outcome::Mismatch { n, k, got, want }, false) => {
                format!("FAIL  {} at ({n},{k}): got {got}, want {want}", self.id)
            }
            (Outcome::Failed(e), true) => {
                format!("XFAIL {} (known discrepancy: {e})", self.id)
            }
            (Outcome::Failed(e), false) => format!("FAIL  {}: {e}", self.id),
        }
    }
}

pub fn load_corpus(path: &Path) -> Result<Vec<CaseDef>> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let file: CorpusFile =
        toml::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    let mut seen = BTreeMap::new();
    for (idx, case) in file.cases.iter().enumerate() {
        if let Some(first) = seen.insert(case.id.clone(), idx) {
            bail!("duplicate case id {:?} (records {} and {})", case.id, first, idx);
        }
        validate_case(case).with_context(|| format!("case {:?}", case.id))?;
    }
    Ok(file.cases)
}

fn validate_case(case: &CaseDef) -> Result<()> {
    if case.expected_rows.is_some() == case.expected_seq.is_some() {
        bail!("exactly one of expected_rows / expected_seq is required");
    }
    if let Some(rows) = &case.expected_rows {
        for (n, row) in rows.iter().enumerate() {
            if row.len() != n + 1 {
                bail!("expected_rows[{n}] must have {} entries", n + 1);
            }
            for cell in row {
                parse_rational(cell)?;
            }
        }
        if let Some(order) = case.order {
            if order + 1 != rows.len() {
                bail!("order {} disagrees with {} expected rows", order, rows.len());
            }
        }
    }
    if let Some(seq) = &case.expected_seq {
        if seq.is_empty() {
            bail!("expected_seq must not be empty");
        }
        for cell in seq {
            parse_rational(cell)?;
        }
    }
    if case.expectation == Expectation::KnownDiscrepancy
        && case.fails_at.is_none()
        && case.fails_with.is_none()
    {
        bail!("known_discrepancy cases must record fails_at or fails_with");
    }
    Ok(())
}

fn parse_rational(s: &str) -> Result<Rational> {
    Rational::from_str(s).map_err(|e| anyhow::anyhow!("bad rational {s:?}: {e}"))
}

fn effective_order(case: &CaseDef) -> usize {
    case.order.unwrap_or_else(|| match (&case.expected_rows, &case.expected_seq) {
        (Some(rows), _) => rows.len() - 1,
        (_, Some(seq)) => seq.len() - 1,
        _ => 0,
    })
}

/// Runs one case; pipeline errors land in the report, never a panic.
pub fn run_case(case: &CaseDef) -> CaseReport {
    run_case_with_order(case, None)
}

/// Same, with the truncation order overridden; comparisons then cover the
/// rows available at that order.
pub fn run_case_with_order(case: &CaseDef, order_override: Option<usize>) -> CaseReport {
    let outcome = match compute_outcome(case, order_override) {
        Ok(outcome) => outcome,
        Err(e) => Outcome::Failed(format!("{e:#}")),
    };
    let as_expected = match case.expectation {
        Expectation::Pass => outcome == Outcome::Pass,
        Expectation::KnownDiscrepancy => match &outcome {
            Outcome::Pass => false,
            Outcome::Mismatch { n, k, .. } => {
                case.fails_at.is_some_and(|[en, ek]| en == *n && ek == *k)
            }
            Outcome::Failed(msg) => case
                .fails_with
                .as_ref()
                .is_some_and(|frag| msg.contains(frag)),
        },
    };
    CaseReport {
        id: case.id.clone(),
        outcome,
        as_expected,
    }
}

fn compute_outcome(case: &CaseDef, order_override: Option<usize>) -> Result<Outcome> {
    let order = order_override.unwrap_or_else(|| effective_order(case));
    match case.operation {
        Operation::Matrix => compare_triangle(case, &case_triangle(case, Operation::Matrix, order)?),
        Operation::Bang => compare_triangle(case, &case_triangle(case, Operation::Bang, order)?),
        Operation::ExpBang => {
            compare_triangle(case, &case_triangle(case, Operation::ExpBang, order)?)
        }
        Operation::RowSums => {
            let of = case.of.unwrap_or(Operation::Matrix);
            let t = case_triangle(case, of, order)?;
            compare_sequence(case, t.row_sums().terms())
        }
        Operation::RevertSeq => {
            let seq = case
                .source
                .seq
                .as_deref()
                .context("revert_seq needs source.seq")?;
            let terms = source::sequence_terms(seq)?;
            // the explicit input bounds how far an order override can reach
            let order = order.min(terms.len() - 1);
            let supplier = riordan_core::SeriesSupplier::polynomial(terms);
            let rt = riordan_core::inversion::revert_transform_sequence(&supplier, order)?;
            compare_sequence(case, rt.terms())
        }
        Operation::CfEval => {
            let def = case.source.cf.as_ref().context("cf_eval needs source.cf")?;
            let cf = build_cf(def)?;
            let series = eval_cf(&cf, order)?;
            match (&case.expected_rows, &case.expected_seq) {
                (Some(rows), _) => Ok(compare_bivariate(&series, rows)),
                (_, Some(_)) => {
                    // a univariate fraction: y must not appear at all
                    for (n, p) in series.coeffs().iter().enumerate() {
                        for k in 1..=p.degree().unwrap_or(0) {
                            if !p.coeff(k).is_zero() {
                                return Ok(Outcome::Mismatch {
                                    n,
                                    k,
                                    got: p.coeff(k).to_string(),
                                    want: "0".to_string(),
                                });
                            }
                        }
                    }
                    let terms: Vec<Rational> =
                        series.coeffs().iter().map(|p| p.coeff(0)).collect();
                    compare_sequence(case, &terms)
                }
                _ => unreachable!("validated at load"),
            }
        }
    }
}

/// The array named by the source, rendered by the given operation.
fn case_triangle(case: &CaseDef, op: Operation, order: usize) -> Result<Triangle> {
    let src = &case.source;
    match case.kind {
        CaseKind::Ordinary => {
            let g = src.g.as_deref().context("ordinary case needs source.g")?;
            let f = src.f.as_deref().context("ordinary case needs source.f")?;
            let mut spec = source::riordan_spec_from(g, f)?;
            if src.invert {
                spec = spec.inverse();
            }
            match (op, src.reverse) {
                (Operation::Matrix, false) => Ok(spec.to_matrix(order)),
                (Operation::Matrix, true) => Ok(spec.to_matrix(order).reversal()),
                (Operation::Bang, false) => Ok(bang_riordan(&spec, order)?),
                (Operation::Bang, true) => {
                    Ok(bang_bivariate(&reversal_gf_supplier(&spec), order)?)
                }
                _ => bail!("operation {op:?} is not defined for ordinary sources"),
            }
        }
        CaseKind::Exponential => {
            let u = src.g.as_deref().context("exponential case needs source.g")?;
            let v = src.f.as_deref().context("exponential case needs source.f")?;
            let mut spec = source::exp_spec_from(u, v)?;
            if src.invert {
                spec = spec.inverse();
            }
            match op {
                Operation::Matrix => Ok(spec.to_matrix(order)),
                Operation::ExpBang => Ok(exp_bang(&spec, order)?),
                _ => bail!("operation {op:?} is not defined for exponential sources"),
            }
        }
        CaseKind::Bivariate => {
            let gf = src.gf.as_deref().context("bivariate case needs source.gf")?;
            let supplier = source::bivariate_supplier(gf)?;
            match op {
                Operation::Bang => Ok(bang_bivariate(&supplier, order)?),
                Operation::Matrix => Ok(riordan_core::BivariateGf::new(supplier.series(order))
                    .to_triangle()?),
                _ => bail!("operation {op:?} is not defined for bivariate sources"),
            }
        }
        CaseKind::Sequence | CaseKind::Cf => {
            bail!("kind {:?} has no triangle-producing operations here", case.kind)
        }
    }
}

fn compare_triangle(case: &CaseDef, got: &Triangle) -> Result<Outcome> {
    let rows = case
        .expected_rows
        .as_ref()
        .context("triangle operation needs expected_rows")?;
    for (n, row) in rows.iter().enumerate().take(got.n_rows()) {
        for (k, cell) in row.iter().enumerate() {
            let want = parse_rational(cell)?;
            let g = got.entry(n, k).expect("within triangle");
            if *g != want {
                return Ok(Outcome::Mismatch {
                    n,
                    k,
                    got: g.to_string(),
                    want: want.to_string(),
                });
            }
        }
    }
    Ok(Outcome::Pass)
}

fn compare_sequence(case: &CaseDef, got: &[Rational]) -> Result<Outcome> {
    let seq = case
        .expected_seq
        .as_ref()
        .context("sequence operation needs expected_seq")?;
    for (n, cell) in seq.iter().enumerate().take(got.len()) {
        let want = parse_rational(cell)?;
        if got[n] != want {
            return Ok(Outcome::Mismatch {
                n,
                k: 0,
                got: got[n].to_string(),
                want: want.to_string(),
            });
        }
    }
    Ok(Outcome::Pass)
}

/// Compares a bivariate expansion against triangle rows, scanning above the
/// diagonal too so stray y-degrees are caught (their expected value is 0).
fn compare_bivariate(series: &XSeries<YPoly>, rows: &[Vec<String>]) -> Outcome {
    for (n, row) in rows.iter().enumerate().take(series.order() + 1) {
        let p = series.coeff(n);
        let top = row.len().max(p.degree().map_or(0, |d| d + 1));
        for k in 0..top {
            let want = row
                .get(k)
                .map(|c| parse_rational(c).expect("validated at load"))
                .unwrap_or_else(Rational::zero);
            let got = p.coeff(k);
            if got != want {
                return Outcome::Mismatch {
                    n,
                    k,
                    got: got.to_string(),
                    want: want.to_string(),
                };
            }
        }
    }
    Outcome::Pass
}

/// Runs all cases, optionally on a bounded thread pool; reports come back
/// in corpus order regardless of scheduling.
pub fn run_corpus(cases: &[CaseDef], jobs: Option<usize>) -> Vec<CaseReport> {
    run_corpus_with_order(cases, jobs, None)
}

pub fn run_corpus_with_order(
    cases: &[CaseDef],
    jobs: Option<usize>,
    order_override: Option<usize>,
) -> Vec<CaseReport> {
    let run = |case: &CaseDef| run_case_with_order(case, order_override);
    match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .expect("thread pool")
            .install(|| cases.par_iter().map(run).collect()),
        None => cases.par_iter().map(run).collect(),
    }
}
