//! The coefficient-ring abstraction behind the series kernel.
//!
//! One reversion routine serves both coefficient rings used here: the
//! rationals, and polynomials in y over the rationals. Units in the latter
//! are exactly the nonzero constants.

use std::fmt;

use crate::rational::Rational;
use crate::ypoly::YPoly;

pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;

    /// Multiplicative inverse, when `self` is a unit.
    fn try_invert(&self) -> Option<Self>;

    /// Exact division by a positive machine integer (always exact over a
    /// Q-algebra; used by integrate, exp, and the Lagrange prefactors).
    fn div_nat(&self, n: u64) -> Self;

    fn from_int(v: i64) -> Self;
}

impl Ring for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        self.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn try_invert(&self) -> Option<Self> {
        self.recip()
    }
    fn div_nat(&self, n: u64) -> Self {
        self * &Rational::new(1, n as i64)
    }
    fn from_int(v: i64) -> Self {
        Rational::from(v)
    }
}

impl Ring for YPoly {
    fn zero() -> Self {
        YPoly::zero()
    }
    fn one() -> Self {
        YPoly::one()
    }
    fn is_zero(&self) -> bool {
        self.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn try_invert(&self) -> Option<Self> {
        let c = self.as_constant()?;
        Some(YPoly::constant(c.recip()?))
    }
    fn div_nat(&self, n: u64) -> Self {
        self.scale(&Rational::new(1, n as i64))
    }
    fn from_int(v: i64) -> Self {
        YPoly::constant(Rational::from(v))
    }
}
