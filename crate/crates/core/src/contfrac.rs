//! Finite-depth continued fractions with series-valued levels.
//!
//! A spec describes `1/(b_0 + a_1/(b_1 + a_2/(b_2 + ...)))`,
//! where each a_i, b_i is a truncated series over Q[y] (minus-joined
//! fractions fold the sign into a_i). Evaluation is bottom-up from a chosen
//! depth d, with T_d = b_d and T_i = b_i + a_{i+1}/T_{i+1}, returning 1/T_0.
//! Under the stabilize policy the depth grows until the coefficients
//! through x^N stop changing between consecutive depths; a hard cap of
//! 4N + 8 turns divergent specs into an explicit error.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::inversion::{bang_bivariate_gf, riordan_gf_supplier};
use crate::riordan::RiordanSpec;
use crate::series::XSeries;
use crate::ypoly::YPoly;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DepthPolicy {
    Fixed(usize),
    Stabilize,
}

#[derive(Clone)]
pub struct CfSpec {
    /// Partial numerators a_i, queried for i >= 1, at the working order.
    numerators: Arc<dyn Fn(usize, usize) -> XSeries<YPoly> + Send + Sync>,
    /// Partial denominators b_i, queried for i >= 0, at the working order.
    denominators: Arc<dyn Fn(usize, usize) -> XSeries<YPoly> + Send + Sync>,
    depth: DepthPolicy,
}

impl CfSpec {
    pub fn new(
        numerators: impl Fn(usize, usize) -> XSeries<YPoly> + Send + Sync + 'static,
        denominators: impl Fn(usize, usize) -> XSeries<YPoly> + Send + Sync + 'static,
        depth: DepthPolicy,
    ) -> Self {
        CfSpec {
            numerators: Arc::new(numerators),
            denominators: Arc::new(denominators),
            depth,
        }
    }

    pub fn depth_policy(&self) -> DepthPolicy {
        self.depth
    }
}

fn eval_at_depth(spec: &CfSpec, depth: usize, order: usize) -> Result<XSeries<YPoly>> {
    let denom = |i: usize| {
        let b = (spec.denominators)(i, order);
        assert_eq!(b.order(), order, "denominator level {i} order mismatch");
        b
    };
    let check_unit = |s: &XSeries<YPoly>, level: usize| -> Result<()> {
        match s.coeff(0).as_constant() {
            Some(c) if !c.is_zero() => Ok(()),
            _ => Err(Error::NonUnitDenominator { level }),
        }
    };
    let mut tail = denom(depth);
    check_unit(&tail, depth)?;
    for i in (0..depth).rev() {
        let a = (spec.numerators)(i + 1, order);
        let b = denom(i);
        check_unit(&b, i)?;
        let recip = tail
            .reciprocal()
            .map_err(|_| Error::NonUnitDenominator { level: i })?;
        tail = b.add(&a.mul(&recip));
        // folding a non-vanishing numerator can break the unit head; caught
        // here so printed-typo fractions fail loudly rather than panic
        check_unit(&tail, i)?;
    }
    tail.reciprocal()
        .map_err(|_| Error::NonUnitDenominator { level: 0 })
}

/// Evaluates the fraction into a series at the given order, resolving the
/// depth per the spec's policy.
pub fn eval_cf(spec: &CfSpec, order: usize) -> Result<XSeries<YPoly>> {
    match spec.depth {
        DepthPolicy::Fixed(d) => eval_at_depth(spec, d, order),
        DepthPolicy::Stabilize => {
            let cap = 4 * order + 8;
            let mut prev: Option<XSeries<YPoly>> = None;
            for d in 1..=cap {
                let cur = eval_at_depth(spec, d, order)?;
                if prev.as_ref() == Some(&cur) {
                    return Ok(cur);
                }
                prev = Some(cur);
            }
            Err(Error::NoStabilization { cap })
        }
    }
}

/// True when the fraction expands to the bivariate gf of the spec's
/// inversion through the given order.
pub fn verify_cf_against_bang(cf: &CfSpec, spec: &RiordanSpec, order: usize) -> Result<bool> {
    let lhs = eval_cf(cf, order)?;
    let rhs = bang_bivariate_gf(&riordan_gf_supplier(spec), order)?;
    Ok(&lhs == rhs.series())
}
