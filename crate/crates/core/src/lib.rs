//! Counting and asymptotics for integer partitions and plane partitions.
//!
//! The crate has two halves that check each other:
//!
//! - **Exact combinatorics** ([`exact`]): arbitrary-precision counters for
//!   linear partitions p(n), plane partitions p2d(n), their restricted
//!   variants, and a brute-force plane-partition enumerator.
//! - **Statistical mechanics** ([`thermo`], [`asymptotic`], [`finite`],
//!   [`specfun`], [`fitlab`]): the bosonic-oscillator entropy models whose
//!   steepest-descent evaluation reproduces the classical asymptotic counts
//!   (Hardy–Ramanujan, Wright, Erdős–Lehner), the Bessel-K third-order
//!   corrections, the finite-N canonical recurrence, and a nonlinear fit of
//!   the intermediate-regime finite-size factor.
//!
//! Everything numeric is written log-domain first: counts near e^335 appear
//! routinely and the linear value is only a convenience projection.

#![forbid(unsafe_code)]

use thiserror::Error;

pub mod asymptotic;
pub mod dd;
pub mod exact;
pub mod finite;
pub mod fitlab;
pub mod specfun;
pub mod thermo;

/// Crate-wide error type. Every variant renders as a single line naming the
/// module and the violated precondition.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("{module}: domain error: {what}")]
    Domain { module: &'static str, what: String },

    #[error("exact: enumeration cap exceeded: n={n} > cap={cap}")]
    CapExceeded { n: u64, cap: u64 },

    #[error("exact: unsupported family: {what}")]
    UnsupportedFamily { what: String },

    #[error("specfun: out of range: {what}")]
    OutOfRange { what: String },

    #[error("specfun: empty input: {what}")]
    EmptyInput { what: &'static str },

    #[error("thermo: degenerate saddle: {what}")]
    DegenerateSaddle { what: String },

    #[error("finite: precision exhausted: {what}")]
    PrecisionExhausted { what: String },

    #[error(
        "fitlab: no convergence after {iterations} iterations \
         (gradient norm {gradient_norm:.3e}, residual norm {residual_norm:.3e}, \
         best point A={best_a:.6}, b={best_b:.6}, k={best_k:.6})"
    )]
    NonConvergence {
        iterations: usize,
        gradient_norm: f64,
        residual_norm: f64,
        best_a: f64,
        best_b: f64,
        best_k: f64,
    },

    #[error("fitlab: rank-deficient Jacobian: {what}")]
    RankDeficient { what: String },
}

impl Error {
    pub(crate) fn domain(module: &'static str, what: impl Into<String>) -> Self {
        Error::Domain {
            module,
            what: what.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
