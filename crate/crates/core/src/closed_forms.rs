//! Exact combinatorial term formulas for the one-parameter families,
//! used as independent oracles against the inversion pipelines.
//!
//! Each `Family` knows both its (g, f) pair (to feed the series pipelines)
//! and its closed entry formula; the two must agree entrywise, which the
//! property suite checks for every family.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::riordan::RiordanSpec;
use crate::series::XSeries;
use crate::supplier::SeriesSupplier;
use crate::triangle::Triangle;

/// C(n, k) for nonnegative machine-sized inputs.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// Generalized C(a, k) = a(a-1)...(a-k+1)/k! for any integer a; always an
/// exact integer.
pub fn binomial_general(a: i64, k: usize) -> BigInt {
    let mut num = BigInt::one();
    for i in 0..k as i64 {
        num *= BigInt::from(a - i);
    }
    let mut den = BigInt::one();
    for i in 1..=k as i64 {
        den *= BigInt::from(i);
    }
    let (q, r) = num_integer::Integer::div_rem(&num, &den);
    debug_assert!(r.is_zero(), "falling factorial not divisible by k!");
    q
}

pub fn factorial(n: u64) -> BigInt {
    let mut f = BigInt::one();
    for i in 2..=n {
        f *= BigInt::from(i);
    }
    f
}

/// C_n = (1/(n+1)) C(2n, n).
pub fn catalan(n: u64) -> BigInt {
    binomial(2 * n, n) / BigInt::from(n + 1)
}

/// Narayana numbers (1/(k+1)) C(n,k) C(n+1,k).
pub fn narayana(n: u64, k: u64) -> Result<BigInt> {
    if k > n {
        return Err(Error::IndexAboveDiagonal {
            n: n as usize,
            k: k as usize,
        });
    }
    Ok(binomial(n, k) * binomial(n + 1, k) / BigInt::from(k + 1))
}

/// Ballot numbers ((n-k+1)/(n+1)) C(n+k, k), the A009766 triangle.
pub fn ballot(n: u64, k: u64) -> Result<BigInt> {
    if k > n {
        return Err(Error::IndexAboveDiagonal {
            n: n as usize,
            k: k as usize,
        });
    }
    Ok(binomial(n + k, k) * BigInt::from(n - k + 1) / BigInt::from(n + 1))
}

/// Fibonacci numbers with F_1 = F_2 = 1 (the indexing that reproduces the
/// A249925 cross-check).
pub fn fibonacci(n: u64) -> BigInt {
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..n {
        let next = &a + &b;
        a = b;
        b = next;
    }
    a
}

/// Fuss-Narayana numbers (1/(n+1)) C(n+1,k) C((n+1)m, n-k); with the sign
/// (-1)^n these are the entries of (1/(1-x)^m, x)!.
pub fn fuss_narayana(m: i64, n: usize, k: usize) -> Result<Rational> {
    if k > n {
        return Err(Error::IndexAboveDiagonal { n, k });
    }
    let c1 = binomial(n as u64 + 1, k as u64);
    let c2 = binomial_general(m * (n as i64 + 1), n - k);
    Ok(Rational::from_big(c1 * c2, BigInt::from(n + 1)))
}

/// The one-parameter families whose inversions have closed entry formulas.
#[derive(Clone, Debug)]
pub enum Family {
    /// (1 + rx, x)
    OnePlusRx { r: Rational },
    /// ((1 - x(r-1))/(1+x), -x)
    SecondFamily { r: Rational },
    /// (1/(1-x)^m, x)
    PowerAppell { m: i64 },
    /// (1/(1+x), -x(1+rx)/(1+x))
    PascalLike { r: Rational },
    /// (1/(1-x)^m, x/(1-x))
    PowerLagrange { m: i64 },
}

impl Family {
    /// The defining (g, f) pair.
    pub fn spec(&self) -> RiordanSpec {
        match self {
            Family::OnePlusRx { r } => RiordanSpec::new(
                format!("(1+{r}x, x)"),
                SeriesSupplier::polynomial(vec![Rational::one(), r.clone()]),
                SeriesSupplier::x(),
            ),
            Family::SecondFamily { r } => RiordanSpec::new(
                format!("((1-{r}x+x)/(1+x), -x)"),
                SeriesSupplier::rational_fn(
                    vec![Rational::one(), -&(r - &Rational::one())],
                    vec![Rational::one(), Rational::one()],
                ),
                SeriesSupplier::polynomial(vec![Rational::zero(), Rational::from(-1)]),
            ),
            Family::PowerAppell { m } => RiordanSpec::new(
                format!("(1/(1-x)^{m}, x)"),
                power_of_one_minus_x(-m),
                SeriesSupplier::x(),
            ),
            Family::PascalLike { r } => RiordanSpec::new(
                format!("(1/(1+x), -x(1+{r}x)/(1+x))"),
                SeriesSupplier::rational_fn(
                    vec![Rational::one()],
                    vec![Rational::one(), Rational::one()],
                ),
                SeriesSupplier::rational_fn(
                    vec![Rational::zero(), Rational::from(-1), -r],
                    vec![Rational::one(), Rational::one()],
                ),
            ),
            Family::PowerLagrange { m } => RiordanSpec::new(
                format!("(1/(1-x)^{m}, x/(1-x))"),
                power_of_one_minus_x(-m),
                SeriesSupplier::rational_fn(
                    vec![Rational::zero(), Rational::one()],
                    vec![Rational::one(), Rational::from(-1)],
                ),
            ),
        }
        .expect("family specs satisfy the pair invariants")
    }

    /// Closed formula for the (n,k) entry of the family's inversion.
    pub fn term(&self, n: usize, k: usize) -> Result<Rational> {
        if k > n {
            return Err(Error::IndexAboveDiagonal { n, k });
        }
        let n1 = n as u64 + 1;
        let prefactor = |sign_k: bool| {
            let mut c = Rational::from_big(binomial(n1, k as u64), BigInt::from(n1));
            if sign_k && k % 2 == 1 {
                c = -c;
            }
            c
        };
        match self {
            // ((-1)^k/(n+1)) C(n+1,k) C(2n-k, n-k) (-r)^{n-k}
            Family::OnePlusRx { r } => {
                let c = binomial((2 * n - k) as u64, (n - k) as u64);
                let rp = (-r).pow((n - k) as i32);
                Ok(&(&prefactor(true) * &Rational::from_big(c, BigInt::one())) * &rp)
            }
            // (1/(n+1)) C(n+1,k) sum_j C(n+1,j) C(2n-k-j, n-k-j) (r-1)^{n-k-j}
            Family::SecondFamily { r } => {
                let mut sum = Rational::zero();
                let r1 = r - &Rational::one();
                for j in 0..=(n - k) {
                    let c = binomial(n1, j as u64)
                        * binomial((2 * n - k - j) as u64, (n - k - j) as u64);
                    sum = &sum + &(&Rational::from_bigint(c) * &r1.pow((n - k - j) as i32));
                }
                Ok(&prefactor(false) * &sum)
            }
            // ((-1)^n/(n+1)) C(n+1,k) C((n+1)m, n-k)
            Family::PowerAppell { m } => {
                let mut c = fuss_narayana(*m, n, k)?;
                if n % 2 == 1 {
                    c = -c;
                }
                Ok(c)
            }
            // (1/(n+1)) C(n+1,k) sum_j C(k,j) r^j C(n-k+1, n-k-j)
            Family::PascalLike { r } => {
                let mut sum = Rational::zero();
                for j in 0..=k.min(n - k) {
                    let c = binomial(k as u64, j as u64)
                        * binomial((n - k + 1) as u64, (n - k - j) as u64);
                    sum = &sum + &(&Rational::from_bigint(c) * &r.pow(j as i32));
                }
                Ok(&prefactor(false) * &sum)
            }
            // ((-1)^n/(n+1)) C(n+1,k) C(m(n+1)-k, n-k)
            Family::PowerLagrange { m } => {
                let c = binomial_general(m * (n as i64 + 1) - k as i64, n - k);
                let mut out = &prefactor(false) * &Rational::from_bigint(c);
                if n % 2 == 1 {
                    out = -out;
                }
                Ok(out)
            }
        }
    }
}

/// (1-x)^p as a lazy series, for integer p of either sign.
fn power_of_one_minus_x(p: i64) -> SeriesSupplier<Rational> {
    let mut coeffs = vec![Rational::one()];
    if p >= 0 {
        for _ in 0..p {
            let mut next = vec![Rational::zero(); coeffs.len() + 1];
            for (i, c) in coeffs.iter().enumerate() {
                next[i] = &next[i] + c;
                next[i + 1] = &next[i + 1] - c;
            }
            coeffs = next;
        }
        SeriesSupplier::polynomial(coeffs)
    } else {
        let mut den = vec![Rational::one()];
        for _ in 0..(-p) {
            let mut next = vec![Rational::zero(); den.len() + 1];
            for (i, c) in den.iter().enumerate() {
                next[i] = &next[i] + c;
                next[i + 1] = &next[i + 1] - c;
            }
            den = next;
        }
        SeriesSupplier::rational_fn(coeffs, den)
    }
}

/// Row sums of the Pascal-like inversion as n! times the coefficients of
/// e^{2x} sum_m r^m x^{2m} / (m! (m+1)!)  (the Bessel-type egf; the radical
/// disappears because only even powers of sqrt(r) x survive).
pub fn pascal_like_row_sum_egf(r: &Rational, order: usize) -> Vec<Rational> {
    let e2x = XSeries::x(order)
        .scale(&Rational::from(2))
        .exp()
        .expect("2x has zero constant term");
    let mut coeffs = vec![Rational::zero(); order + 1];
    let mut m_fact = Rational::one();
    let mut m1_fact = Rational::one();
    let mut rp = Rational::one();
    for m in 0..=order / 2 {
        if m > 0 {
            m_fact = &m_fact * &Rational::from(m as i64);
            rp = &rp * r;
        }
        m1_fact = &m1_fact * &Rational::from(m as i64 + 1);
        coeffs[2 * m] = &rp / &(&m_fact * &m1_fact);
    }
    e2x.mul(&XSeries::new(coeffs)).inv_borel().coeffs().to_vec()
}

/// Compares the Pascal-like bang row sums against the Bessel egf route.
pub fn family_row_sum_egf_check(r: &Rational, order: usize) -> Result<bool> {
    let spec = Family::PascalLike { r: r.clone() }.spec();
    let sums = crate::inversion::bang_riordan(&spec, order)?.row_sums();
    Ok(sums.terms() == pascal_like_row_sum_egf(r, order))
}

/// Row sums of (w', w) for the second family: at r = 2 these count peaks
/// in Schroeder paths. Entry formula sum_j C(n+1,j) C(2n-k-j,n-k-j) (r-1)^{n-k-j}.
pub fn second_family_inner_term(r: &Rational, n: usize, k: usize) -> Result<Rational> {
    if k > n {
        return Err(Error::IndexAboveDiagonal { n, k });
    }
    let mut sum = Rational::zero();
    let r1 = r - &Rational::one();
    for j in 0..=(n - k) {
        let c = binomial(n as u64 + 1, j as u64)
            * binomial((2 * n - k - j) as u64, (n - k - j) as u64);
        sum = &sum + &(&Rational::from_bigint(c) * &r1.pow((n - k - j) as i32));
    }
    Ok(sum)
}

/// All five families at a handful of parameters, for property sweeps.
pub fn sample_families() -> Vec<Family> {
    let rats = |vals: &[i64]| vals.iter().map(|&v| Rational::from(v)).collect::<Vec<_>>();
    let mut out = Vec::new();
    for r in rats(&[-2, -1, 1, 2, 3]) {
        out.push(Family::OnePlusRx { r: r.clone() });
        out.push(Family::SecondFamily { r: r.clone() });
        out.push(Family::PascalLike { r });
    }
    for m in [-1, 0, 1, 2, 3] {
        out.push(Family::PowerAppell { m });
        out.push(Family::PowerLagrange { m });
    }
    out
}

/// Expected rows of a family's inversion from the closed formula alone.
pub fn family_triangle(family: &Family, order: usize) -> Result<Triangle> {
    let rows = (0..=order)
        .map(|n| (0..=n).map(|k| family.term(n, k)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(Triangle::from_rows(rows))
}
