//! Error type shared by all series and array operations.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Reciprocal (or division) of a series whose constant term is not a unit.
    #[error("constant term is not a unit")]
    NonUnitConstantTerm,

    /// Composition a(b(x)) with b(0) != 0.
    #[error("composition requires an inner series with zero constant term")]
    CompositionNeedsZeroConstant,

    /// Reversion of a series outside F_1 (needs a0 = 0 and a1 a unit).
    #[error("reversion requires zero constant term and a unit linear coefficient")]
    ReversionNeedsUnitLinearTerm,

    /// exp needs a0 = 0; log needs a0 = 1.
    #[error("bad constant term for exp/log")]
    BadConstantTerm,

    /// Triangle access with k > n.
    #[error("index ({n},{k}) lies above the diagonal")]
    IndexAboveDiagonal { n: usize, k: usize },

    /// A (g,f) pair violating g(0) != 0, f(0) = 0, f'(0) != 0.
    #[error("invalid Riordan pair: {0}")]
    InvalidSpec(&'static str),

    /// Appell-only operation applied to a spec with f != x.
    #[error("spec is not in the Appell subgroup (f != x at this order)")]
    NotAppell,

    /// Lagrange-only operation applied to a spec with g != 1.
    #[error("spec is not in the Lagrange subgroup (g != 1 at this order)")]
    NotLagrange,

    /// Family name outside the supported one-parameter families.
    #[error("unknown family: {0}")]
    UnknownFamily(String),

    /// Continued-fraction level whose denominator has a non-unit constant term.
    #[error("continued fraction has a non-unit partial denominator at level {level}")]
    NonUnitDenominator { level: usize },

    /// Stabilize depth policy exceeded its cap without converging.
    #[error("continued fraction did not stabilize within depth {cap}")]
    NoStabilization { cap: usize },

    /// Integrality assertion failed while rendering a triangle.
    #[error("entry ({n},{k}) = {value} is not an integer")]
    NonIntegralEntry { n: usize, k: usize, value: String },

    /// Bivariate expansion with y-degree above n at x^n.
    #[error("bivariate series is not triangular at x^{n}")]
    NonTriangularSupport { n: usize },

    /// Matrix inversion with a non-unit diagonal entry.
    #[error("matrix has a non-invertible diagonal entry at row {n}")]
    NonUnitDiagonal { n: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
