//! Exact E-polynomial engine for character varieties of torus links.
//!
//! The link `K^d_{n,m}` consists of `d` parallel copies of the `(n,m)` torus
//! knot (`n`, `m` coprime). This crate computes the E-polynomials of the
//! SL2(C)- and SL3(C)-character varieties of these links in two independent
//! ways — closed formulas and stratum-by-stratum assembly — and checks both
//! against a brute-force point count over small finite fields.
//!
//! All arithmetic is exact: polynomials and rational functions in the Hodge
//! variable `q` carry arbitrary-precision integer coefficients. Closed
//! formulas contain factors like `(q^3-q)^{d-2}` that are genuinely rational
//! for small `d` and only cancel in the final sum, so every intermediate
//! value is a [`qpoly::RatFunc`] and conversion to [`qpoly::IntPoly`] happens
//! (and is checked) only at the end.

pub mod fforacle;
pub mod freechar;
pub(crate) mod fx;
pub mod gitq;
pub mod qpoly;
pub mod report;
pub mod repring;
pub mod sl2link;
pub mod sl3link;

pub use qpoly::{IntPoly, RatFunc};
pub use report::{CheckStatus, EPolyReport, VerificationReport};
pub use repring::{S3Class, Z2Class};
pub use sl2link::LinkParams;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by the zero rational function")]
    DivisionByZero,
    #[error("zero base with negative exponent")]
    ZeroToNegativePower,
    #[error("not a polynomial: {0}")]
    NotAPolynomial(String),
    #[error("pole at q = {0}")]
    Pole(String),
    #[error("degenerate fiber: (F+)^2 = (F-)^2")]
    DegenerateFiber,
    #[error("invalid link parameters: {0}")]
    InvalidParams(String),
    #[error("internal formula mismatch: {0}")]
    InternalMismatch(String),
    #[error("budget exceeded: needs {needed}, cap {cap}")]
    BudgetExceeded { needed: u64, cap: u64 },
    #[error("unexpected commutant dimension {dim} for rank {rank}")]
    UnexpectedCommutant { dim: usize, rank: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("fixture mismatch for {id}: stored {stored}, observed {observed}")]
    FixtureMismatch {
        id: String,
        stored: String,
        observed: String,
    },
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
