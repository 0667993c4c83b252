//! Source-string grammar shared by the CLI flags and the corpus format.
//!
//! A series source is one of:
//!   - a comma-separated list of rationals, read as polynomial coefficients
//!     ("1,-2,3" or "0,1/2"),
//!   - `family:<name>` for the built-in non-rational series
//!     (factorials, xfactorials, exp, cosh, bessel_i1_over_x),
//!   - otherwise an expression in x ("1/(1+x)^2", "-x*(1+5*x)/(1+x)",
//!     "exp(x)"); bivariate sources may also use y.

use std::collections::BTreeMap;
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use riordan_core::error::Error;
use riordan_core::{ExpRiordanSpec, Rational, RiordanSpec, SeriesSupplier, YPoly};

use crate::expr::{eval, parse};

/// Comma-separated rationals ("1,-2,3/4").
pub fn sequence_terms(src: &str) -> Result<Vec<Rational>> {
    src.split(',')
        .map(|t| {
            Rational::from_str(t).map_err(|e| anyhow::anyhow!("bad term {t:?}: {e}"))
        })
        .collect()
}

pub fn univariate_supplier(src: &str) -> Result<SeriesSupplier<Rational>> {
    if let Some(name) = src.strip_prefix("family:") {
        return family_supplier(name.trim());
    }
    if src.contains(',') {
        let terms = sequence_terms(src)?;
        return Ok(SeriesSupplier::polynomial(terms));
    }
    let expr = parse(src).with_context(|| format!("parsing series source {src:?}"))?;
    if expr.contains_y() {
        bail!("series source {src:?} must not involve y");
    }
    // evaluate once so malformed sources fail here, not inside a supplier
    eval(&expr, &BTreeMap::new(), 2)
        .with_context(|| format!("evaluating series source {src:?}"))?;
    Ok(SeriesSupplier::new(move |n| {
        eval(&expr, &BTreeMap::new(), n)
            .expect("validated at parse time")
            .lower()
            .expect("y-free by construction")
    }))
}

pub fn bivariate_supplier(src: &str) -> Result<SeriesSupplier<YPoly>> {
    let expr = parse(src).with_context(|| format!("parsing bivariate source {src:?}"))?;
    eval(&expr, &BTreeMap::new(), 2)
        .with_context(|| format!("evaluating bivariate source {src:?}"))?;
    Ok(SeriesSupplier::new(move |n| {
        eval(&expr, &BTreeMap::new(), n).expect("validated at parse time")
    }))
}

fn family_supplier(name: &str) -> Result<SeriesSupplier<Rational>> {
    Ok(match name {
        "factorials" => SeriesSupplier::factorials(),
        "xfactorials" => SeriesSupplier::x_factorials(),
        "exp" => SeriesSupplier::exp_x(),
        "cosh" => SeriesSupplier::cosh_x(),
        "bessel_i1_over_x" => SeriesSupplier::bessel_i1_over_x(),
        other => return Err(Error::UnknownFamily(other.to_string()).into()),
    })
}

pub fn riordan_spec_from(g_src: &str, f_src: &str) -> Result<RiordanSpec> {
    let g = univariate_supplier(g_src).context("in --g")?;
    let f = univariate_supplier(f_src).context("in --f")?;
    Ok(RiordanSpec::new(format!("({g_src}, {f_src})"), g, f)?)
}

pub fn exp_spec_from(u_src: &str, v_src: &str) -> Result<ExpRiordanSpec> {
    let u = univariate_supplier(u_src).context("in --g")?;
    let v = univariate_supplier(v_src).context("in --f")?;
    Ok(ExpRiordanSpec::new(format!("[{u_src}, {v_src}]"), u, v)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar_dispatch() {
        let poly = univariate_supplier("1,-2,3").unwrap();
        assert_eq!(poly.series(2).coeff(2), &Rational::from(3));
        let fam = univariate_supplier("family:factorials").unwrap();
        assert_eq!(fam.series(4).coeff(4), &Rational::from(24));
        let expr = univariate_supplier("1/(1-x)").unwrap();
        assert_eq!(expr.series(3).coeff(3), &Rational::from(1));
        assert!(univariate_supplier("family:nope").is_err());
        assert!(univariate_supplier("1/(1-x*y)").is_err());
        assert!(sequence_terms("1,1/0").is_err());
    }

    #[test]
    fn spec_construction() {
        let spec = riordan_spec_from("1/(1+x)", "-x").unwrap();
        assert_eq!(spec.element_at(3, 1).unwrap(), Rational::from(-1));
        assert!(riordan_spec_from("x", "x").is_err());
        let exp = exp_spec_from("cosh(x)", "x").unwrap();
        assert_eq!(exp.element_at(4, 2).unwrap(), Rational::from(6));
    }
}
