//! Exact Bernoulli numbers B_m as big rationals.
//!
//! Computed once from the defining recurrence
//! `sum_{j=0}^{m} C(m+1, j) B_j = 0` with B_0 = 1 (so B_1 = -1/2), and cached.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Largest index served; enough for the optimally truncated entropy series
/// and the 60-digit zeta verification.
pub const MAX_INDEX: u64 = 60;

fn table() -> &'static Vec<BigRational> {
    static TABLE: OnceLock<Vec<BigRational>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let m_max = MAX_INDEX as usize;
        let mut b: Vec<BigRational> = Vec::with_capacity(m_max + 1);
        b.push(BigRational::one());
        for m in 1..=m_max {
            // C(m+1, j) running product, exact.
            let mut binom = BigInt::one();
            let mut acc = BigRational::zero();
            for (j, bj) in b.iter().enumerate() {
                // binom = C(m+1, j)
                acc += BigRational::from_integer(binom.clone()) * bj;
                binom = binom * BigInt::from(m + 1 - j) / BigInt::from(j + 1);
            }
            b.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
        }
        b
    })
}

/// Exact Bernoulli number B_m for even m (and m = 0) up to [`MAX_INDEX`].
pub fn bernoulli(m: u64) -> Result<BigRational> {
    if m > MAX_INDEX {
        return Err(Error::OutOfRange {
            what: format!("bernoulli index m={m} exceeds table limit {MAX_INDEX}"),
        });
    }
    if m != 0 && !m.is_multiple_of(2) {
        return Err(Error::OutOfRange {
            what: format!("bernoulli requires even m, got {m}"),
        });
    }
    Ok(table()[m as usize].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::binomial;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn small_known_values() {
        assert_eq!(bernoulli(0).unwrap(), rat(1, 1));
        assert_eq!(bernoulli(2).unwrap(), rat(1, 6));
        assert_eq!(bernoulli(4).unwrap(), rat(-1, 30));
        assert_eq!(bernoulli(6).unwrap(), rat(1, 42));
        assert_eq!(bernoulli(8).unwrap(), rat(-1, 30));
        assert_eq!(bernoulli(10).unwrap(), rat(5, 66));
        assert_eq!(bernoulli(12).unwrap(), rat(-691, 2730));
    }

    #[test]
    fn defining_recurrence_holds_everywhere() {
        // sum_{j=0}^{m} C(m+1,j) B_j = 0 for 1 <= m <= 60 (odd B_j = 0 for j>1).
        let full = table();
        for m in 1..=MAX_INDEX as usize {
            let mut acc = BigRational::zero();
            for (j, bj) in full.iter().take(m + 1).enumerate() {
                let c = binomial(BigInt::from(m + 1), BigInt::from(j));
                acc += BigRational::from_integer(c) * bj;
            }
            assert!(acc.is_zero(), "recurrence violated at m={m}");
        }
    }

    #[test]
    fn odd_and_oversized_rejected() {
        assert!(matches!(bernoulli(3), Err(Error::OutOfRange { .. })));
        assert!(matches!(bernoulli(62), Err(Error::OutOfRange { .. })));
    }
}
