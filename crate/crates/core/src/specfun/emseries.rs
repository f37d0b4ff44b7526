//! Euler–Maclaurin correction series for the constant term `c` of the
//! two-dimensional oscillator entropy.
//!
//! Summing `-sum_j j ln(1 - e^{-beta j})` by Euler–Maclaurin, the only
//! beta-independent contributions beyond `-1/6` come from the `-x ln x`
//! piece of the summand, and the k-th correction term has the closed form
//! `B_{2k} (2k-3)! / (2k)!` (k >= 2). The series is asymptotic with
//! alternating signs; truncating at the smallest term gives the classical
//! best estimate of `c`, which converges on zeta'(-1) without ever reaching
//! it.
//!
//! Sign conventions: `contribution` is the signed amount added to the
//! partial sum of `c` (so `-1/6 + sum contribution_k` is the estimate);
//! tabulations of the summand-side terms print the opposite sign. The
//! `magnitude` is what optimal truncation compares.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use crate::{Error, Result};

use super::bernoulli;

/// One Euler–Maclaurin correction term, exact.
#[derive(Debug, Clone, PartialEq)]
pub struct EmSeriesTerm {
    /// Term index k >= 2 (the B_{2k} term).
    pub k: u32,
    /// Signed net contribution to c: `-B_{2k} (2k-3)!/(2k)!`.
    pub contribution: BigRational,
    /// `|B_{2k}| (2k-3)!/(2k)!`, the truncation yardstick.
    pub magnitude: BigRational,
}

impl EmSeriesTerm {
    pub fn contribution_f64(&self) -> f64 {
        self.contribution.to_f64().unwrap()
    }
    pub fn magnitude_f64(&self) -> f64 {
        self.magnitude.to_f64().unwrap()
    }
}

/// The correction series for `c` through `k_max`, with exact partial sums.
#[derive(Debug, Clone)]
pub struct EmCSeries {
    pub terms: Vec<EmSeriesTerm>,
}

impl EmCSeries {
    /// Exact partial sum `-1/6 + sum_{k=2}^{through_k} contribution_k`.
    pub fn partial_sum(&self, through_k: u32) -> BigRational {
        let mut acc = BigRational::new(BigInt::from(-1), BigInt::from(6));
        for t in &self.terms {
            if t.k <= through_k {
                acc += t.contribution.clone();
            }
        }
        acc
    }

    /// Partial sums for every k in the series, in order.
    pub fn partial_sums(&self) -> Vec<(u32, BigRational)> {
        self.terms
            .iter()
            .map(|t| (t.k, self.partial_sum(t.k)))
            .collect()
    }
}

/// Correction terms for k = 2..=k_max (2 <= k_max <= 10).
pub fn em_c_series(k_max: u32) -> Result<EmCSeries> {
    if !(2..=10).contains(&k_max) {
        return Err(Error::OutOfRange {
            what: format!("em_c_series requires 2 <= k_max <= 10, got {k_max}"),
        });
    }
    let mut terms = Vec::with_capacity(k_max as usize - 1);
    for k in 2..=k_max {
        let b2k = bernoulli(2 * k as u64)?;
        let ratio = factorial_ratio(k); // (2k-3)!/(2k)!
        let contribution = -&b2k * &ratio;
        let magnitude = b2k.abs() * ratio;
        terms.push(EmSeriesTerm {
            k,
            contribution,
            magnitude,
        });
    }
    Ok(EmCSeries { terms })
}

/// `(2k-3)!/(2k)! = 1 / ((2k-2)(2k-1)(2k))` as an exact rational.
fn factorial_ratio(k: u32) -> BigRational {
    let d = BigInt::from(2 * k - 2) * BigInt::from(2 * k - 1) * BigInt::from(2 * k);
    BigRational::new(BigInt::one(), d)
}

/// Index k of the smallest-magnitude term (first one on ties): where an
/// alternating asymptotic series is optimally truncated.
pub fn optimal_truncation(terms: &[EmSeriesTerm]) -> Result<u32> {
    let first = terms.first().ok_or(Error::EmptyInput {
        what: "optimal_truncation on empty term list",
    })?;
    let mut best = first;
    for t in &terms[1..] {
        if t.magnitude < best.magnitude {
            best = t;
        }
    }
    Ok(best.k)
}
