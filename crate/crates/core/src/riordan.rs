//! Ordinary Riordan arrays as (g, f) pairs of lazy series.
//!
//! The array of (g, f) has entries t_{n,k} = [x^n] g(x) f(x)^k. Products
//! and inverses follow the group law (g,f)(u,v) = (g*u(f), v(f)) and
//! (g,f)^{-1} = (1/g(fbar), fbar); both are realized as new lazy pairs so
//! no truncation order is baked in.
//!
//! Leading terms are only required to be units: g(0) may be any nonzero
//! rational (signed arrays like (-1/(1+rx), -x/(1+rx)) are first-class),
//! and f'(0) any nonzero rational.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::series::XSeries;
use crate::supplier::SeriesSupplier;
use crate::triangle::{Provenance, SequenceView, Triangle};

#[derive(Clone)]
pub struct RiordanSpec {
    g: SeriesSupplier<Rational>,
    f: SeriesSupplier<Rational>,
    name: String,
}

/// The four subgroup predicates of interest; membership is always relative
/// to a truncation order (series equality is undecidable from prefixes).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Subgroup {
    Appell,
    Lagrange,
    Bell,
    Derivative,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Direction {
    Forward,
    Inverse,
}

impl RiordanSpec {
    /// Checks g(0) != 0, f(0) = 0, f'(0) != 0 on order-1 prefixes.
    pub fn new(
        name: impl Into<String>,
        g: SeriesSupplier<Rational>,
        f: SeriesSupplier<Rational>,
    ) -> Result<Self> {
        let g1 = g.series(1);
        let f1 = f.series(1);
        if g1.coeff(0).is_zero() {
            return Err(Error::InvalidSpec("g(0) must be a unit"));
        }
        if !f1.coeff(0).is_zero() {
            return Err(Error::InvalidSpec("f(0) must be zero"));
        }
        if f1.coeff(1).is_zero() {
            return Err(Error::InvalidSpec("f'(0) must be a unit"));
        }
        Ok(RiordanSpec {
            g,
            f,
            name: name.into(),
        })
    }

    /// (num_g/den_g, num_f/den_f) from integer coefficient lists.
    pub fn from_rational_parts(
        name: impl Into<String>,
        g_num: &[i64],
        g_den: &[i64],
        f_num: &[i64],
        f_den: &[i64],
    ) -> Result<Self> {
        let conv = |cs: &[i64]| cs.iter().map(|&c| Rational::from(c)).collect::<Vec<_>>();
        RiordanSpec::new(
            name,
            SeriesSupplier::rational_fn(conv(g_num), conv(g_den)),
            SeriesSupplier::rational_fn(conv(f_num), conv(f_den)),
        )
    }

    pub fn identity() -> Self {
        RiordanSpec::new("identity", SeriesSupplier::one(), SeriesSupplier::x())
            .expect("identity spec")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn g(&self) -> &SeriesSupplier<Rational> {
        &self.g
    }

    pub fn f(&self) -> &SeriesSupplier<Rational> {
        &self.f
    }

    /// t_{n,k} = [x^n] g f^k, from order-n prefixes.
    pub fn element_at(&self, n: usize, k: usize) -> Result<Rational> {
        if k > n {
            return Err(Error::IndexAboveDiagonal { n, k });
        }
        let g = self.g.series(n);
        let f = self.f.series(n);
        Ok(g.mul(&f.pow(k)).coeff(n).clone())
    }

    /// All t_{n,k} for 0 <= k <= n <= order.
    pub fn to_matrix(&self, order: usize) -> Triangle {
        let g = self.g.series(order);
        let f = self.f.series(order);
        let mut col = g;
        let mut columns = vec![col.clone()];
        for _ in 1..=order {
            col = col.mul(&f);
            columns.push(col.clone());
        }
        Triangle::from_rows(
            (0..=order)
                .map(|n| (0..=n).map(|k| columns[k].coeff(n).clone()).collect())
                .collect(),
        )
    }

    /// Group law (g,f)(u,v) = (g*u(f), v(f)).
    pub fn product(&self, rhs: &RiordanSpec) -> RiordanSpec {
        let (g, f) = (self.g.clone(), self.f.clone());
        let (u, v) = (rhs.g.clone(), rhs.f.clone());
        let name = format!("({})*({})", self.name, rhs.name);
        let gf = {
            let (g, f, u) = (g.clone(), f.clone(), u);
            SeriesSupplier::new(move |n| {
                let fs = f.series(n);
                g.series(n).mul(&u.series(n).compose(&fs).expect("f(0)=0"))
            })
        };
        let ff = SeriesSupplier::new(move |n| {
            v.series(n).compose(&f.series(n)).expect("f(0)=0")
        });
        RiordanSpec::new(name, gf, ff).expect("product of valid specs")
    }

    /// Group inverse (1/g(fbar), fbar) with fbar = revert(f).
    pub fn inverse(&self) -> RiordanSpec {
        let (g, f) = (self.g.clone(), self.f.clone());
        let name = format!("({})^-1", self.name);
        let fbar = {
            let f = f.clone();
            // revert needs order >= 1; order-0 requests are prefix-truncated
            SeriesSupplier::new(move |n| {
                let m = n.max(1);
                f.series(m).revert().expect("f in F_1").truncated(n)
            })
        };
        let ginv = {
            let fbar = fbar.clone();
            SeriesSupplier::new(move |n| {
                g.series(n)
                    .compose(&fbar.series(n))
                    .expect("fbar(0)=0")
                    .reciprocal()
                    .expect("g(0) unit")
            })
        };
        RiordanSpec::new(name, ginv, fbar).expect("inverse of valid spec")
    }

    /// FTRA: the action h |-> g * h(f), as coefficients 0..order.
    pub fn ftra_apply(&self, h: &SeriesSupplier<Rational>, order: usize) -> SequenceView {
        let out = self
            .g
            .series(order)
            .mul(&h.series(order).compose(&self.f.series(order)).expect("f(0)=0"));
        SequenceView::new(out.coeffs().to_vec(), Provenance::Custom)
    }

    /// Membership (up to the given order) in the named subgroups:
    /// Appell f=x, Lagrange g=1, Bell f=xg, derivative g=f'.
    pub fn classify_subgroup(&self, order: usize) -> BTreeSet<Subgroup> {
        let g = self.g.series(order);
        let f = self.f.series(order);
        let mut set = BTreeSet::new();
        if f == XSeries::x(order) {
            set.insert(Subgroup::Appell);
        }
        if g == XSeries::one(order) {
            set.insert(Subgroup::Lagrange);
        }
        if order >= 1 && f == g.truncated(order - 1).mul_x() {
            set.insert(Subgroup::Bell);
        }
        if g == self.f.series(order + 1).differentiate() {
            set.insert(Subgroup::Derivative);
        }
        set
    }

    /// invert(alpha) on the array: (g/(1-a x g), f/(1-a x g)).
    pub fn invert_transform(&self, alpha: &Rational) -> RiordanSpec {
        let denom = {
            let g = self.g.clone();
            let alpha = alpha.clone();
            SeriesSupplier::new(move |n| {
                XSeries::one(n).sub(&g.series(n).mul_x().truncated(n).scale(&alpha))
            })
        };
        let gt = {
            let (g, d) = (self.g.clone(), denom.clone());
            SeriesSupplier::new(move |n| {
                g.series(n).mul(&d.series(n).reciprocal().expect("unit"))
            })
        };
        let ft = {
            let (f, d) = (self.f.clone(), denom);
            SeriesSupplier::new(move |n| {
                f.series(n).mul(&d.series(n).reciprocal().expect("unit"))
            })
        };
        RiordanSpec::new(format!("invert({})", self.name), gt, ft)
            .expect("invert transform of valid spec")
    }
}

/// invert(alpha) on a sequence gf: g / (1 - alpha x g).
pub fn invert_alpha(g: &SeriesSupplier<Rational>, alpha: &Rational) -> SeriesSupplier<Rational> {
    let g = g.clone();
    let alpha = alpha.clone();
    SeriesSupplier::new(move |n| {
        let gs = g.series(n);
        let denom = XSeries::one(n).sub(&gs.mul_x().truncated(n).scale(&alpha));
        gs.mul(&denom.reciprocal().expect("1 - a x g has unit constant"))
    })
}

/// The binomial matrix (1/(1-x), x/(1-x)).
pub fn binomial_spec() -> RiordanSpec {
    RiordanSpec::from_rational_parts("binomial", &[1], &[1, -1], &[0, 1], &[1, -1])
        .expect("binomial spec")
}

/// Its inverse (1/(1+x), x/(1+x)).
pub fn inverse_binomial_spec() -> RiordanSpec {
    RiordanSpec::from_rational_parts("binomial^-1", &[1], &[1, 1], &[0, 1], &[1, 1])
        .expect("inverse binomial spec")
}

/// Multiplies a sequence by B or B^{-1}.
pub fn binomial_transform_sequence(seq: &SequenceView, direction: Direction) -> SequenceView {
    let spec = match direction {
        Direction::Forward => binomial_spec(),
        Direction::Inverse => inverse_binomial_spec(),
    };
    let b = spec.to_matrix(seq.len() - 1);
    SequenceView::new(b.mul_vector(seq.terms()), Provenance::Custom)
}

/// Left-multiplies a triangle by B or B^{-1} (the x-transform).
pub fn binomial_transform_triangle(t: &Triangle, direction: Direction) -> Triangle {
    let spec = match direction {
        Direction::Forward => binomial_spec(),
        Direction::Inverse => inverse_binomial_spec(),
    };
    spec.to_matrix(t.n_rows() - 1).mul(t)
}
