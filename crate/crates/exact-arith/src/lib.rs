//! Exact arithmetic substrate: rationals, dense univariate polynomials,
//! rational generating functions and sparse multivariate polynomials.
//!
//! Nothing in here rounds. Every value is an arbitrary-precision rational.

mod gf;
mod multipoly;
pub mod rational;
mod unipoly;

pub use gf::{gf_coeffs, RationalGF};
pub use multipoly::MultiPoly;
pub use rational::{int, parse_rational, rat, Rational};
pub use unipoly::{binom_poly, interpolate, UniPoly};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("interpolation needs at least one point")]
    NoPoints,
    #[error("duplicate interpolation node {0}")]
    DuplicateNode(String),
    #[error("denominator has zero constant term")]
    ZeroConstantTerm,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, ArithError>;
