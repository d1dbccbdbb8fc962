//! Exact arithmetic for degenerate Euler and Bernstein polynomials.
//!
//! Everything here is computed over ℚ with the deformation parameter λ kept
//! symbolic: polynomials live in the fixed variable set {x, x1, x2, λ},
//! truncated series use the exponential (t^n/n!) convention, and rational
//! functions are restricted to the denominator shapes the falling-factorial
//! partial fractions actually produce. On top of the arithmetic sit a
//! registry of polynomial identities that are verified by zero-residual
//! subtraction ([`identities`]) and finite fermionic sums whose p-adic
//! convergence can be checked level by level ([`padic`]).

pub mod bernstein;
pub mod degenerate;
pub mod identities;
pub mod linrat;
pub mod mpoly;
pub mod padic;
pub mod rational;
pub mod series;

pub use linrat::LinRational;
pub use mpoly::{Bindings, Exponents, MPoly, Var};
pub use rational::Rational;
pub use series::TruncSeries;

/// Errors shared across the crate. Most operations are total on their
/// documented domains; everything else reports one of these.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("series order mismatch: {0} vs {1}")]
    OrderMismatch(u32, u32),
    #[error("expected {want} node values, got {got}")]
    NodeCount { want: usize, got: usize },
    #[error("index out of range: {0}")]
    InvalidIndex(String),
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("work cap exceeded: {0}")]
    CapExceeded(String),
    #[error("{value} is not {p}-integral")]
    NotPIntegral { value: String, p: u64 },
    #[error("unknown identity id: {0}")]
    UnknownIdentity(String),
    #[error("parameters outside validity domain: {0}")]
    OutOfDomain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
