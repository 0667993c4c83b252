//! Exact-arithmetic Riordan arrays and their inversions.
//!
//! The crate builds up from truncated formal power series over exact
//! coefficient rings (rationals, and polynomials in a marker y) to ordinary
//! and exponential Riordan arrays, the group operations, and the inversion
//! operator A |-> expansion of (1/x) Rev_x(x G(x,y)) on an array's bivariate
//! generating function. Closed combinatorial term formulas and a
//! continued-fraction evaluator provide independent routes to the same
//! triangles; everything is exact, with no floating point anywhere.
//!
//! All values are immutable after construction and all operations are pure,
//! so everything here can be shared and evaluated concurrently.

pub mod closed_forms;
pub mod contfrac;
pub mod error;
pub mod exp_riordan;
pub mod inversion;
pub mod rational;
pub mod riordan;
pub mod ring;
pub mod series;
pub mod supplier;
pub mod triangle;
pub mod ypoly;

pub use error::{Error, Result};
pub use exp_riordan::ExpRiordanSpec;
pub use inversion::BivariateGf;
pub use rational::Rational;
pub use riordan::RiordanSpec;
pub use series::XSeries;
pub use supplier::SeriesSupplier;
pub use triangle::{SequenceView, Triangle};
pub use ypoly::YPoly;
