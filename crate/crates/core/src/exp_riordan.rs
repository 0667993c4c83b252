//! Exponential Riordan arrays and their inversion.
//!
//! An exponential array [u, v] has entries (n!/k!) [x^n] u(x) v(x)^k. Its
//! bivariate egf G_e(x,y) = sum_k u v^k y^k / k! satisfies
//! [x^n y^k] G_e = t_{n,k}/n!, and the inversion is the expansion of
//! d/dx Rev(int_0^x G_e(t,y) dt), with the n! pulled back out only when a
//! triangle is rendered. One reversion kernel therefore serves both the
//! ordinary and the exponential case.

use crate::error::{Error, Result};
use crate::inversion::BivariateGf;
use crate::rational::Rational;
use crate::ring::Ring;
use crate::series::XSeries;
use crate::supplier::SeriesSupplier;
use crate::triangle::{Provenance, SequenceView, Triangle};
use crate::ypoly::YPoly;

#[derive(Clone)]
pub struct ExpRiordanSpec {
    u: SeriesSupplier<Rational>,
    v: SeriesSupplier<Rational>,
    name: String,
}

impl ExpRiordanSpec {
    /// Checks u(0) != 0, v(0) = 0, v'(0) != 0 on order-1 prefixes.
    pub fn new(
        name: impl Into<String>,
        u: SeriesSupplier<Rational>,
        v: SeriesSupplier<Rational>,
    ) -> Result<Self> {
        let u1 = u.series(1);
        let v1 = v.series(1);
        if u1.coeff(0).is_zero() {
            return Err(Error::InvalidSpec("u(0) must be a unit"));
        }
        if !v1.coeff(0).is_zero() {
            return Err(Error::InvalidSpec("v(0) must be zero"));
        }
        if v1.coeff(1).is_zero() {
            return Err(Error::InvalidSpec("v'(0) must be a unit"));
        }
        Ok(ExpRiordanSpec {
            u,
            v,
            name: name.into(),
        })
    }

    pub fn identity() -> Self {
        ExpRiordanSpec::new("[1, x]", SeriesSupplier::one(), SeriesSupplier::x())
            .expect("identity spec")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn u(&self) -> &SeriesSupplier<Rational> {
        &self.u
    }

    pub fn v(&self) -> &SeriesSupplier<Rational> {
        &self.v
    }

    /// t_{n,k} = (n!/k!) [x^n] u v^k.
    pub fn element_at(&self, n: usize, k: usize) -> Result<Rational> {
        if k > n {
            return Err(Error::IndexAboveDiagonal { n, k });
        }
        let u = self.u.series(n);
        let v = self.v.series(n);
        let c = u.mul(&v.pow(k)).coeff(n).clone();
        Ok(&c * &(&factorial(n) / &factorial(k)))
    }

    pub fn to_matrix(&self, order: usize) -> Triangle {
        let u = self.u.series(order);
        let v = self.v.series(order);
        let mut col = u;
        let mut columns = vec![col.clone()];
        for _ in 1..=order {
            col = col.mul(&v);
            columns.push(col.clone());
        }
        let facts = factorials_upto(order);
        Triangle::from_rows(
            (0..=order)
                .map(|n| {
                    (0..=n)
                        .map(|k| columns[k].coeff(n) * &(&facts[n] / &facts[k]))
                        .collect()
                })
                .collect(),
        )
    }

    /// G_e(x,y) = sum_k u v^k y^k / k!, with [x^n y^k] = t_{n,k}/n!.
    pub fn bivariate_egf(&self, order: usize) -> BivariateGf {
        let u = self.u.series(order);
        let v = self.v.series(order);
        let mut rows: Vec<Vec<Rational>> = vec![Vec::new(); order + 1];
        let mut uvk = u;
        let mut k_fact = Rational::one();
        for k in 0..=order {
            if k > 0 {
                uvk = uvk.mul(&v);
                k_fact = &k_fact * &Rational::from(k as i64);
            }
            let inv = k_fact.recip().expect("k! is nonzero");
            // v^k starts at x^k
            for n in k..=order {
                let c = uvk.coeff(n) * &inv;
                if !c.is_zero() {
                    let row = &mut rows[n];
                    while row.len() <= k {
                        row.push(Rational::zero());
                    }
                    row[k] = c;
                }
            }
        }
        BivariateGf::new(XSeries::new(
            rows.into_iter().map(YPoly::from_coeffs).collect(),
        ))
    }

    /// Group inverse [1/u(vbar), vbar]; the matrix is the exact inverse.
    pub fn inverse(&self) -> ExpRiordanSpec {
        let name = format!("({})^-1", self.name);
        let vbar = {
            let v = self.v.clone();
            SeriesSupplier::new(move |n| {
                let m = n.max(1);
                v.series(m).revert().expect("v in F_1").truncated(n)
            })
        };
        let uinv = {
            let u = self.u.clone();
            let vbar = vbar.clone();
            SeriesSupplier::new(move |n| {
                u.series(n)
                    .compose(&vbar.series(n))
                    .expect("vbar(0)=0")
                    .reciprocal()
                    .expect("u(0) unit")
            })
        };
        ExpRiordanSpec::new(name, uinv, vbar).expect("inverse of valid spec")
    }
}

fn factorial(n: usize) -> Rational {
    let mut f = Rational::one();
    for i in 1..=n {
        f = &f * &Rational::from(i as i64);
    }
    f
}

fn factorials_upto(n: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(Rational::one());
    for i in 1..=n {
        let next = &out[i - 1] * &Rational::from(i as i64);
        out.push(next);
    }
    out
}

/// The inversion: that_{n,k} = n! [x^n y^k] d/dx Rev(int G_e).
pub fn exp_bang(spec: &ExpRiordanSpec, order: usize) -> Result<Triangle> {
    let ge = spec.bivariate_egf(order);
    let hat = ge.series().integrate().revert()?.differentiate();
    let facts = factorials_upto(order);
    let mut rows = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let p = hat.coeff(n);
        if p.degree().is_some_and(|d| d > n) {
            return Err(Error::NonTriangularSupport { n });
        }
        rows.push((0..=n).map(|k| &p.coeff(k) * &facts[n]).collect());
    }
    Ok(Triangle::from_rows(rows))
}

/// The same rows read off the first column of [1, int G_e]^{-1}: the
/// polynomial p_n(y) sits at entry (n+1, 1) of the inverse, and
/// that_{n,k} = [y^k] p_n(y).
pub fn exp_bang_via_inverse_column(spec: &ExpRiordanSpec, order: usize) -> Result<Triangle> {
    let f = spec.bivariate_egf(order).series().integrate(); // order+1
    let top = order + 1;

    // the exponential array [1, F] over Q[y], rows 0..=order+1
    let mut columns: Vec<XSeries<YPoly>> = vec![XSeries::one(top)];
    for k in 1..=top {
        let next = columns[k - 1].mul(&f);
        columns.push(next);
    }
    let facts = factorials_upto(top);
    let matrix: Vec<Vec<YPoly>> = (0..=top)
        .map(|n| {
            (0..=n)
                .map(|k| columns[k].coeff(n).scale(&(&facts[n] / &facts[k])))
                .collect()
        })
        .collect();
    let inv = ypoly_lower_inverse(&matrix)?;

    let mut rows = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let p = &inv[n + 1][1];
        if p.degree().is_some_and(|d| d > n) {
            return Err(Error::NonTriangularSupport { n });
        }
        rows.push((0..=n).map(|k| p.coeff(k)).collect());
    }
    Ok(Triangle::from_rows(rows))
}

fn ypoly_lower_inverse(rows: &[Vec<YPoly>]) -> Result<Vec<Vec<YPoly>>> {
    let n_rows = rows.len();
    let mut out: Vec<Vec<YPoly>> = (0..n_rows).map(|n| vec![YPoly::zero(); n + 1]).collect();
    for k in 0..n_rows {
        let pivot = rows[k][k]
            .try_invert()
            .ok_or(Error::NonUnitDiagonal { n: k })?;
        out[k][k] = pivot;
        for n in (k + 1)..n_rows {
            let mut acc = YPoly::zero();
            for j in k..n {
                if !rows[n][j].is_zero() && !out[j][k].is_zero() {
                    acc = &acc + &(&rows[n][j] * &out[j][k]);
                }
            }
            let pivot_n = rows[n][n]
                .try_invert()
                .ok_or(Error::NonUnitDiagonal { n })?;
            out[n][k] = -&(&acc * &pivot_n);
        }
    }
    Ok(out)
}

/// Row sums of [cosh x, x]!: the exponential revert transform of e^x cosh x.
/// These are the coefficients of Airey's converging factor.
pub fn airey_row_sums(order: usize) -> SequenceView {
    let egf = SeriesSupplier::exp_x()
        .series(order)
        .mul(&SeriesSupplier::cosh_x().series(order));
    let hat = egf
        .integrate()
        .revert()
        .expect("e^x cosh x has unit constant term")
        .differentiate();
    SequenceView::new(hat.inv_borel().coeffs().to_vec(), Provenance::RowSums)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangle::rows_from_ints;

    fn tri(rows: &[&[i64]]) -> Triangle {
        Triangle::from_rows(rows_from_ints(rows))
    }

    fn exp_x_spec() -> ExpRiordanSpec {
        ExpRiordanSpec::new("[e^x, x]", SeriesSupplier::exp_x(), SeriesSupplier::x()).unwrap()
    }

    fn cosh_spec() -> ExpRiordanSpec {
        ExpRiordanSpec::new("[cosh x, x]", SeriesSupplier::cosh_x(), SeriesSupplier::x()).unwrap()
    }

    #[test]
    fn element_and_matrix() {
        // [e^x, x] is the binomial matrix
        assert_eq!(exp_x_spec().element_at(4, 2).unwrap(), Rational::from(6));
        // [cosh x, x] row 6
        let m = cosh_spec().to_matrix(6);
        assert_eq!(m.row(6), &rows_from_ints(&[&[1, 0, 15, 0, 15, 0, 1]])[0][..]);
        assert_eq!(
            m.row_sums().terms(),
            &[1i64, 1, 2, 4, 8, 16, 32].map(Rational::from)[..]
        );
        // [1, x] is the identity
        assert_eq!(ExpRiordanSpec::identity().to_matrix(4), Triangle::identity(5));
    }

    #[test]
    fn bivariate_egf_examples() {
        // [e^x, x]: e^{x(1+y)}, so [x^n] is (1+y)^n/n!
        let ge = exp_x_spec().bivariate_egf(4);
        let one_plus_y = YPoly::from_coeffs(vec![Rational::one(), Rational::one()]);
        let p = &(&one_plus_y * &one_plus_y) * &one_plus_y;
        assert_eq!(ge.series().coeff(3), &p.scale(&Rational::new(1, 6)));
        // [1, x]: sum x^n y^n / n!
        let gid = ExpRiordanSpec::identity().bivariate_egf(3);
        assert_eq!(
            gid.series().coeff(3),
            &YPoly::from_coeffs(vec![
                Rational::zero(),
                Rational::zero(),
                Rational::zero(),
                Rational::new(1, 6),
            ])
        );
        // [cosh x, x]: cosh(x) e^{xy} prefix; [x^2] = (1 + y^2)/2
        let gc = cosh_spec().bivariate_egf(4);
        assert_eq!(
            gc.series().coeff(2),
            &YPoly::from_coeffs(vec![
                Rational::new(1, 2),
                Rational::zero(),
                Rational::new(1, 2),
            ])
        );
        // and t_{n,k} scaling: coeff * n! recovers the matrix entry
        let gc6 = cosh_spec().bivariate_egf(6);
        assert_eq!(gc6.coeff(6, 2), Rational::new(15, 720));
    }

    #[test]
    fn exp_bang_displays() {
        // [e^x, x]! = ((-1)^n n! C(n,k))
        let b = exp_bang(&exp_x_spec(), 5).unwrap();
        assert_eq!(
            b,
            tri(&[
                &[1],
                &[-1, -1],
                &[2, 4, 2],
                &[-6, -18, -18, -6],
                &[24, 96, 144, 96, 24],
                &[-120, -600, -1200, -1200, -600, -120],
            ])
        );
        // [1, x]! has row 0 = 1 and alternating factorial diagonal
        let ib = exp_bang(&ExpRiordanSpec::identity(), 4).unwrap();
        assert_eq!(ib.row(0), &[Rational::one()][..]);
        assert_eq!(
            ib.diagonal().terms(),
            &[1i64, -1, 2, -6, 24].map(Rational::from)[..]
        );
        // [cosh x, x]! row 6
        let cb = exp_bang(&cosh_spec(), 6).unwrap();
        assert_eq!(
            cb.row(6),
            &rows_from_ints(&[&[-225, 0, 2134, 0, -2556, 0, 720]])[0][..]
        );
        // column 0: exponential revert transform of 1,0,1,0,...
        assert_eq!(
            cb.initial_column().terms(),
            &[1i64, 0, -1, 0, 9, 0, -225].map(Rational::from)[..]
        );
    }

    #[test]
    fn inverse_column_route() {
        // the displayed polynomial sequence 1, -y, 2y^2-1, y(7-6y^2)
        let via = exp_bang_via_inverse_column(&cosh_spec(), 6).unwrap();
        assert_eq!(via.row(2), &rows_from_ints(&[&[-1, 0, 2]])[0][..]);
        assert_eq!(via.row(3), &rows_from_ints(&[&[0, 7, 0, -6]])[0][..]);
        assert_eq!(via, exp_bang(&cosh_spec(), 6).unwrap());
        // [1, x]: reverting x gives the alternating diagonal rows
        let id_via = exp_bang_via_inverse_column(&ExpRiordanSpec::identity(), 4).unwrap();
        assert_eq!(id_via, exp_bang(&ExpRiordanSpec::identity(), 4).unwrap());
        // [e^x, x]: agreement to order 8
        assert_eq!(
            exp_bang_via_inverse_column(&exp_x_spec(), 8).unwrap(),
            exp_bang(&exp_x_spec(), 8).unwrap()
        );
    }

    #[test]
    fn exp_inverse_examples() {
        assert_eq!(
            ExpRiordanSpec::identity().inverse().to_matrix(4),
            Triangle::identity(5)
        );
        // [e^x, x]^{-1} = [e^{-x}, x]
        let inv = exp_x_spec().inverse();
        assert_eq!(inv.to_matrix(3).row(3), &rows_from_ints(&[&[-1, 3, -3, 1]])[0][..]);
        // matrix inverse law
        let m = cosh_spec().to_matrix(8);
        assert_eq!(
            cosh_spec().inverse().to_matrix(8),
            m.inverse().unwrap()
        );
    }

    #[test]
    fn airey() {
        let a = airey_row_sums(10);
        let want = [
            1i64, -1, 1, 1, -13, 47, 73, -2447, 16811, 15551, -1726511,
        ];
        assert_eq!(a.terms(), &want.map(Rational::from)[..]);
        // equals the row sums of [cosh x, x]!
        let cb = exp_bang(&cosh_spec(), 10).unwrap();
        assert_eq!(cb.row_sums().terms(), a.terms());
    }
}
