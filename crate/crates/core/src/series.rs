//! Truncated formal power series with an explicit truncation order.
//!
//! An `XSeries` of order N knows the coefficients of x^0..x^N exactly and
//! nothing beyond. Binary operations truncate to the minimum of the two
//! orders; order changes are always explicit (`mul_x`, `div_x`,
//! `differentiate`, `integrate`), never silent.
//!
//! Reversion solves the triangular system sum_j g_j [x^n] f^j = [n=1]
//! order by order; the diagonal pivots are powers of the unit f_1, so every
//! division is exact.

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::ring::Ring;
use crate::ypoly::YPoly;

#[derive(Clone, PartialEq, Debug)]
pub struct XSeries<R: Ring> {
    coeffs: Vec<R>,
}

impl<R: Ring> XSeries<R> {
    /// Wraps explicit coefficients; `coeffs[n]` is the coefficient of x^n.
    pub fn new(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least x^0");
        XSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        XSeries {
            coeffs: vec![R::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(R::one(), order)
    }

    pub fn constant(c: R, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The series x (zero when the order is 0).
    pub fn x(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = R::one();
        }
        s
    }

    /// Coefficients c_0..c_k read as a polynomial, truncated or zero-padded
    /// to the requested order.
    pub fn from_polynomial(coeffs: &[R], order: usize) -> Self {
        let out = (0..=order)
            .map(|n| coeffs.get(n).cloned().unwrap_or_else(R::zero))
            .collect();
        XSeries { coeffs: out }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Coefficient of x^n; panics beyond the truncation order.
    pub fn coeff(&self, n: usize) -> &R {
        &self.coeffs[n]
    }

    pub fn truncated(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        XSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// True when `other` agrees with `self` on x^0..x^order.
    pub fn prefix_eq(&self, other: &Self, order: usize) -> bool {
        self.coeffs[..=order] == other.coeffs[..=order]
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        XSeries {
            coeffs: (0..=n).map(|i| self.coeffs[i].add(&rhs.coeffs[i])).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        XSeries {
            coeffs: (0..=n).map(|i| self.coeffs[i].sub(&rhs.coeffs[i])).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        XSeries {
            coeffs: self.coeffs.iter().map(Ring::neg).collect(),
        }
    }

    /// Cauchy product, truncated to the minimum order.
    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        let mut out = vec![R::zero(); n + 1];
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(n - i) {
                if rhs.coeffs[j].is_zero() {
                    continue;
                }
                let term = self.coeffs[i].mul(&rhs.coeffs[j]);
                out[i + j] = out[i + j].add(&term);
            }
        }
        XSeries { coeffs: out }
    }

    pub fn scale(&self, c: &R) -> Self {
        XSeries {
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    /// k-th power at this order (k = 0 gives 1).
    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// b with a*b = 1 up to the truncation order; a_0 must be a unit.
    pub fn reciprocal(&self) -> Result<Self> {
        let inv0 = self.coeffs[0]
            .try_invert()
            .ok_or(Error::NonUnitConstantTerm)?;
        let n = self.order();
        let mut out = vec![R::zero(); n + 1];
        out[0] = inv0.clone();
        for m in 1..=n {
            let mut acc = R::zero();
            for j in 1..=m {
                if !self.coeffs[j].is_zero() && !out[m - j].is_zero() {
                    acc = acc.add(&self.coeffs[j].mul(&out[m - j]));
                }
            }
            out[m] = inv0.mul(&acc).neg();
        }
        Ok(XSeries { coeffs: out })
    }

    /// a(b(x)) by Horner over the series ring; b(0) must be zero.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::CompositionNeedsZeroConstant);
        }
        let n = self.order().min(inner.order());
        let b = inner.truncated(n);
        let mut acc = Self::zero(n);
        // terms a_i b^i with i > n vanish below x^{n+1}
        for i in (0..=n).rev() {
            acc = acc.mul(&b);
            let head = acc.coeffs[0].add(&self.coeffs[i]);
            acc.coeffs[0] = head;
        }
        Ok(acc)
    }

    /// Compositional inverse: the unique abar with a(abar(x)) = x = abar(a(x))
    /// up to the truncation order. Needs a_0 = 0 and a_1 a unit.
    pub fn revert(&self) -> Result<Self> {
        if self.order() == 0 || !self.coeffs[0].is_zero() {
            return Err(Error::ReversionNeedsUnitLinearTerm);
        }
        let n = self.order();
        let f1_inv = self.coeffs[1]
            .try_invert()
            .ok_or(Error::ReversionNeedsUnitLinearTerm)?;

        // powers[j] = f^j truncated at order n
        let mut powers: Vec<XSeries<R>> = Vec::with_capacity(n + 1);
        powers.push(Self::one(n));
        for j in 1..=n {
            let next = powers[j - 1].mul(self);
            powers.push(next);
        }

        let mut g = vec![R::zero(); n + 1];
        let mut pivot_inv = R::one();
        for m in 1..=n {
            pivot_inv = pivot_inv.mul(&f1_inv);
            let mut rhs = if m == 1 { R::one() } else { R::zero() };
            for j in 1..m {
                let c = powers[j].coeff(m);
                if !c.is_zero() && !g[j].is_zero() {
                    rhs = rhs.sub(&g[j].mul(c));
                }
            }
            g[m] = rhs.mul(&pivot_inv);
        }
        Ok(XSeries { coeffs: g })
    }

    /// Termwise derivative; the order drops by one (a constant series maps
    /// to the zero series of order 0).
    pub fn differentiate(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        XSeries {
            coeffs: (1..=self.order())
                .map(|m| self.coeffs[m].mul(&R::from_int(m as i64)))
                .collect(),
        }
    }

    /// Termwise antiderivative with zero constant; the order rises by one.
    pub fn integrate(&self) -> Self {
        let mut out = Vec::with_capacity(self.order() + 2);
        out.push(R::zero());
        for m in 0..=self.order() {
            out.push(self.coeffs[m].div_nat(m as u64 + 1));
        }
        XSeries { coeffs: out }
    }

    /// Multiplication by x; the order rises by one.
    pub fn mul_x(&self) -> Self {
        let mut out = Vec::with_capacity(self.order() + 2);
        out.push(R::zero());
        out.extend(self.coeffs.iter().cloned());
        XSeries { coeffs: out }
    }

    /// Division by x; needs a zero constant term, the order drops by one.
    pub fn div_x(&self) -> Result<Self> {
        if self.order() == 0 || !self.coeffs[0].is_zero() {
            return Err(Error::NonUnitConstantTerm);
        }
        Ok(XSeries {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// exp(a) via E' = a'E; needs a_0 = 0.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::BadConstantTerm);
        }
        let n = self.order();
        let mut e = vec![R::zero(); n + 1];
        e[0] = R::one();
        for m in 1..=n {
            let mut acc = R::zero();
            for j in 1..=m {
                if self.coeffs[j].is_zero() || e[m - j].is_zero() {
                    continue;
                }
                let term = self.coeffs[j].mul(&e[m - j]).mul(&R::from_int(j as i64));
                acc = acc.add(&term);
            }
            e[m] = acc.div_nat(m as u64);
        }
        Ok(XSeries { coeffs: e })
    }

    /// log(a) = integral of a'/a; needs a_0 = 1.
    pub fn log(&self) -> Result<Self> {
        if self.coeffs[0] != R::one() {
            return Err(Error::BadConstantTerm);
        }
        if self.order() == 0 {
            return Ok(Self::zero(0));
        }
        Ok(self.differentiate().mul(&self.reciprocal()?).integrate())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> XSeries<S> {
        XSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

impl XSeries<Rational> {
    /// Borel map: divides the coefficient of x^n by n! (ogf -> egf carrier).
    pub fn borel(&self) -> Self {
        let mut fact = Rational::one();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| {
                if n > 0 {
                    fact = &fact * &Rational::from(n as i64);
                }
                c / &fact
            })
            .collect();
        XSeries { coeffs }
    }

    /// Inverse Borel map: multiplies the coefficient of x^n by n!.
    pub fn inv_borel(&self) -> Self {
        let mut fact = Rational::one();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| {
                if n > 0 {
                    fact = &fact * &Rational::from(n as i64);
                }
                c * &fact
            })
            .collect();
        XSeries { coeffs }
    }

    /// Lifts into the bivariate coefficient ring.
    pub fn lift(&self) -> XSeries<YPoly> {
        self.map(|c| YPoly::constant(c.clone()))
    }
}

impl XSeries<YPoly> {
    /// Drops back to rational coefficients; None if any poly is non-constant.
    pub fn lower(&self) -> Option<XSeries<Rational>> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for p in &self.coeffs {
            out.push(p.as_constant()?);
        }
        Some(XSeries { coeffs: out })
    }

    /// Substitutes a rational value for y.
    pub fn eval_y(&self, at: &Rational) -> XSeries<Rational> {
        self.map(|p| p.eval(at))
    }
}

/// Lagrange inversion: [x^n] H(revert(f)) = (1/n) [x^{n-1}] H'(x) (x/f)^n.
pub fn lagrange_coefficient<R: Ring>(h: &XSeries<R>, f: &XSeries<R>, n: usize) -> Result<R> {
    assert!(n >= 1, "lagrange_coefficient needs n >= 1");
    assert!(h.order() >= n && f.order() >= n, "series orders must reach n");
    if !f.coeffs[0].is_zero() || f.coeffs[1].try_invert().is_none() {
        return Err(Error::ReversionNeedsUnitLinearTerm);
    }
    let x_over_f = f.div_x()?.reciprocal()?;
    let prod = h.differentiate().mul(&x_over_f.pow(n));
    Ok(prod.coeff(n - 1).div_nat(n as u64))
}
