//! Lazy series: a procedure that produces a fixed power series to any
//! requested truncation order.
//!
//! Suppliers must be prefix-consistent (the order-M output is a prefix of
//! the order-N output for M <= N) and stateless, so they can be shared
//! between threads and re-evaluated freely. Every operation in this crate
//! is prefix-stable, so closures built from them inherit the property.

use std::sync::Arc;

use crate::rational::Rational;
use crate::ring::Ring;
use crate::series::XSeries;

#[derive(Clone)]
pub struct SeriesSupplier<R: Ring> {
    gen: Arc<dyn Fn(usize) -> XSeries<R> + Send + Sync>,
}

impl<R: Ring> SeriesSupplier<R> {
    pub fn new(gen: impl Fn(usize) -> XSeries<R> + Send + Sync + 'static) -> Self {
        SeriesSupplier { gen: Arc::new(gen) }
    }

    /// The series truncated at exactly the requested order.
    pub fn series(&self, order: usize) -> XSeries<R> {
        let s = (self.gen)(order);
        assert_eq!(s.order(), order, "supplier returned the wrong order");
        s
    }

    pub fn constant(c: R) -> Self {
        SeriesSupplier::new(move |n| XSeries::constant(c.clone(), n))
    }

    pub fn one() -> Self {
        SeriesSupplier::new(XSeries::one)
    }

    pub fn x() -> Self {
        SeriesSupplier::new(XSeries::x)
    }

    pub fn polynomial(coeffs: Vec<R>) -> Self {
        SeriesSupplier::new(move |n| XSeries::from_polynomial(&coeffs, n))
    }

    /// num(x)/den(x); den must have a unit constant term (checked lazily).
    pub fn rational_fn(num: Vec<R>, den: Vec<R>) -> Self {
        SeriesSupplier::new(move |n| {
            let d = XSeries::from_polynomial(&den, n)
                .reciprocal()
                .expect("rational_fn denominator needs a unit constant term");
            XSeries::from_polynomial(&num, n).mul(&d)
        })
    }
}

impl SeriesSupplier<Rational> {
    /// sum_n n! x^n.
    pub fn factorials() -> Self {
        SeriesSupplier::new(|n| {
            let mut fact = Rational::one();
            let coeffs = (0..=n)
                .map(|m| {
                    if m > 0 {
                        fact = &fact * &Rational::from(m as i64);
                    }
                    fact.clone()
                })
                .collect();
            XSeries::new(coeffs)
        })
    }

    /// x * sum_n n! x^n.
    pub fn x_factorials() -> Self {
        let f = Self::factorials();
        SeriesSupplier::new(move |n| {
            if n == 0 {
                XSeries::zero(0)
            } else {
                f.series(n - 1).mul_x()
            }
        })
    }

    /// e^x.
    pub fn exp_x() -> Self {
        SeriesSupplier::new(|n| XSeries::x(n).exp().expect("exp(x)"))
    }

    /// cosh x = (e^x + e^{-x})/2.
    pub fn cosh_x() -> Self {
        SeriesSupplier::new(|n| {
            let e = XSeries::x(n).exp().expect("exp(x)");
            let em = XSeries::x(n).neg().exp().expect("exp(-x)");
            e.add(&em).scale(&Rational::new(1, 2))
        })
    }

    /// I_1(2x)/x = sum_m x^{2m} / (m! (m+1)!).
    pub fn bessel_i1_over_x() -> Self {
        SeriesSupplier::new(|n| {
            let mut coeffs = vec![Rational::zero(); n + 1];
            let mut m_fact = Rational::one();
            let mut m1_fact = Rational::one();
            for m in 0..=n / 2 {
                if m > 0 {
                    m_fact = &m_fact * &Rational::from(m as i64);
                }
                m1_fact = &m1_fact * &Rational::from(m as i64 + 1);
                coeffs[2 * m] = Rational::one() / (&m_fact * &m1_fact);
            }
            XSeries::new(coeffs)
        })
    }
}
