//! Rendered lower-triangular arrays and sequence views.
//!
//! A `Triangle` with N+1 rows holds entries t_{n,k} for 0 <= k <= n <= N.
//! Entries stay rational throughout; where the source material prints
//! integers, `integer_rows` asserts integrality at extraction time.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Debug)]
pub struct Triangle {
    rows: Vec<Vec<Rational>>,
}

impl Triangle {
    /// Rows must satisfy `rows[n].len() == n + 1`.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        for (n, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n + 1, "row {n} must have {} entries", n + 1);
        }
        Triangle { rows }
    }

    pub fn identity(n_rows: usize) -> Self {
        let rows = (0..n_rows)
            .map(|n| {
                let mut row = vec![Rational::zero(); n + 1];
                row[n] = Rational::one();
                row
            })
            .collect();
        Triangle { rows }
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn row(&self, n: usize) -> &[Rational] {
        &self.rows[n]
    }

    pub fn entry(&self, n: usize, k: usize) -> Result<&Rational> {
        if k > n {
            return Err(Error::IndexAboveDiagonal { n, k });
        }
        Ok(&self.rows[n][k])
    }

    /// First `n_rows` rows.
    pub fn truncated(&self, n_rows: usize) -> Self {
        assert!(n_rows <= self.rows.len());
        Triangle {
            rows: self.rows[..n_rows].to_vec(),
        }
    }

    /// Exact lower-triangular matrix product (matching row counts).
    pub fn mul(&self, rhs: &Triangle) -> Triangle {
        assert_eq!(self.n_rows(), rhs.n_rows(), "size mismatch");
        let rows = (0..self.n_rows())
            .map(|n| {
                (0..=n)
                    .map(|k| {
                        let mut acc = Rational::zero();
                        for j in k..=n {
                            acc = &acc + &(&self.rows[n][j] * &rhs.rows[j][k]);
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        Triangle { rows }
    }

    /// Matrix-vector product (the FTRA oracle in matrix form).
    pub fn mul_vector(&self, v: &[Rational]) -> Vec<Rational> {
        assert!(v.len() >= self.n_rows(), "vector too short");
        (0..self.n_rows())
            .map(|n| {
                let mut acc = Rational::zero();
                for k in 0..=n {
                    acc = &acc + &(&self.rows[n][k] * &v[k]);
                }
                acc
            })
            .collect()
    }

    /// Exact inverse by forward substitution; needs unit diagonal entries.
    pub fn inverse(&self) -> Result<Triangle> {
        let n_rows = self.n_rows();
        let mut out: Vec<Vec<Rational>> = (0..n_rows)
            .map(|n| vec![Rational::zero(); n + 1])
            .collect();
        for k in 0..n_rows {
            let pivot = self.rows[k][k]
                .recip()
                .ok_or(Error::NonUnitDiagonal { n: k })?;
            out[k][k] = pivot;
            for n in (k + 1)..n_rows {
                let mut acc = Rational::zero();
                for j in k..n {
                    acc = &acc + &(&self.rows[n][j] * &out[j][k]);
                }
                let pivot_n = self.rows[n][n]
                    .recip()
                    .ok_or(Error::NonUnitDiagonal { n })?;
                out[n][k] = -(&acc * &pivot_n);
            }
        }
        Ok(Triangle { rows: out })
    }

    /// Rows reversed end to end: entry (n,k) moves to (n, n-k).
    pub fn reversal(&self) -> Triangle {
        Triangle {
            rows: self
                .rows
                .iter()
                .map(|row| row.iter().rev().cloned().collect())
                .collect(),
        }
    }

    pub fn row_sums(&self) -> SequenceView {
        let terms = self
            .rows
            .iter()
            .map(|row| {
                let mut acc = Rational::zero();
                for c in row {
                    acc = &acc + c;
                }
                acc
            })
            .collect();
        SequenceView::new(terms, Provenance::RowSums)
    }

    pub fn initial_column(&self) -> SequenceView {
        let terms = self.rows.iter().map(|row| row[0].clone()).collect();
        SequenceView::new(terms, Provenance::InitialColumn)
    }

    pub fn diagonal(&self) -> SequenceView {
        let terms = self
            .rows
            .iter()
            .enumerate()
            .map(|(n, row)| row[n].clone())
            .collect();
        SequenceView::new(terms, Provenance::Diagonal)
    }

    pub fn is_integral(&self) -> bool {
        self.rows.iter().flatten().all(Rational::is_integer)
    }

    /// Entries as integers; errors on the first non-integral one.
    pub fn integer_rows(&self) -> Result<Vec<Vec<BigInt>>> {
        self.rows
            .iter()
            .enumerate()
            .map(|(n, row)| {
                row.iter()
                    .enumerate()
                    .map(|(k, c)| {
                        c.to_integer().ok_or_else(|| Error::NonIntegralEntry {
                            n,
                            k,
                            value: c.to_string(),
                        })
                    })
                    .collect()
            })
            .collect()
    }
}

/// A rendered sequence together with where it came from.
#[derive(Clone, PartialEq, Debug)]
pub struct SequenceView {
    terms: Vec<Rational>,
    provenance: Provenance,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Provenance {
    InitialColumn,
    RowSums,
    Diagonal,
    Custom,
}

impl SequenceView {
    pub fn new(terms: Vec<Rational>, provenance: Provenance) -> Self {
        SequenceView { terms, provenance }
    }

    pub fn terms(&self) -> &[Rational] {
        &self.terms
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Convenience for tests and the corpus: parse rows of decimal strings.
pub fn rows_from_ints(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
    rows.iter()
        .map(|r| r.iter().map(|&c| Rational::from(c)).collect())
        .collect()
}
