//! Linear (one-dimensional) partition counters.
//!
//! - [`count_linear`]: p(n) via the Euler pentagonal-number recurrence,
//!   O(n^{3/2}) big-integer additions.
//! - [`count_linear_restricted`]: p_N(n), partitions into at most N parts,
//!   via the exactly-k-parts recurrence p(m,k) = p(m-1,k-1) + p(m-k,k).
//! - value-shaped variants (distinct / bounded part value / power parts) by
//!   dynamic programming over the allowed part multiset.
//!
//! The restricted counter and [`count_max_part_value`] are deliberately two
//! different recurrences for conjugate quantities; their agreement is one of
//! the standing cross-checks.

use num_bigint::BigUint;
use num_traits::Zero;

use super::BigCount;

/// p(0..=n_max) by the pentagonal recurrence
/// `p(i) = sum_k (-1)^{k+1} [p(i - k(3k-1)/2) + p(i - k(3k+1)/2)]`.
///
/// Positive and negative contributions are accumulated separately so the
/// whole computation stays in unsigned big integers.
pub fn linear_series(n_max: u64) -> Vec<BigCount> {
    let n_max = n_max as usize;
    let mut p: Vec<BigUint> = Vec::with_capacity(n_max + 1);
    p.push(BigUint::from(1u32));
    for i in 1..=n_max {
        let mut pos = BigUint::zero();
        let mut neg = BigUint::zero();
        let mut k = 1usize;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > i {
                break;
            }
            let plus = k % 2 == 1;
            if plus {
                pos += &p[i - g1];
            } else {
                neg += &p[i - g1];
            }
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= i {
                if plus {
                    pos += &p[i - g2];
                } else {
                    neg += &p[i - g2];
                }
            }
            k += 1;
        }
        p.push(pos - neg);
    }
    p
}

/// p(n), the number of unrestricted partitions of n; p(0) = 1.
pub fn count_linear(n: u64) -> BigCount {
    linear_series(n).pop().unwrap()
}

/// p_N(n) for N = 0..=max_parts: partitions of n into at most N parts.
///
/// Row k of the DP counts partitions with exactly k parts through
/// `p(m, k) = p(m-1, k-1) + p(m-k, k)`; the output accumulates rows.
pub fn restricted_series(n: u64, max_parts: u64) -> Vec<BigCount> {
    let n = n as usize;
    let kmax = max_parts as usize;
    // exact[m] = partitions of m into exactly k parts, rolled over k.
    let mut exact: Vec<BigUint> = vec![BigUint::zero(); n + 1];
    exact[0] = BigUint::from(1u32); // k = 0
    let mut cumulative: Vec<BigUint> = exact.clone();
    let mut out = Vec::with_capacity(kmax + 1);
    out.push(cumulative[n].clone());
    for k in 1..=kmax {
        let mut next: Vec<BigUint> = vec![BigUint::zero(); n + 1];
        for m in k..=n {
            // a partition of m-1 into exactly k-1 parts plus a new part 1,
            // or a partition of m-k into exactly k parts with every part grown
            let mut v = exact[m - 1].clone();
            v += &next[m - k];
            next[m] = v;
        }
        for m in 0..=n {
            cumulative[m] += &next[m];
        }
        out.push(cumulative[n].clone());
        exact = next;
    }
    out
}

/// p_N(n): partitions of n into at most `max_parts` parts.
pub fn count_linear_restricted(n: u64, max_parts: u64) -> BigCount {
    let capped = max_parts.min(n);
    let mut series = restricted_series(n, capped);
    series.pop().unwrap()
}

/// Partitions of n with every part <= s (the conjugate of at-most-s parts).
pub fn count_max_part_value(n: u64, s: u64) -> BigCount {
    let n = n as usize;
    let mut f: Vec<BigUint> = vec![BigUint::zero(); n + 1];
    f[0] = BigUint::from(1u32);
    for part in 1..=(s as usize).min(n.max(1)) {
        for m in part..=n {
            let (head, tail) = f.split_at_mut(m);
            tail[0] += &head[m - part];
        }
    }
    f[n].clone()
}

/// Partitions of n into pairwise distinct parts (0/1 multiplicity).
pub fn count_distinct(n: u64) -> BigCount {
    let n = n as usize;
    let mut f: Vec<BigUint> = vec![BigUint::zero(); n + 1];
    f[0] = BigUint::from(1u32);
    for part in 1..=n {
        for m in (part..=n).rev() {
            let (head, tail) = f.split_at_mut(m);
            tail[0] += &head[m - part];
        }
    }
    f[n].clone()
}

/// Partitions of n into parts of the form j^exponent (unbounded multiplicity).
pub fn count_power_parts(n: u64, exponent: u32) -> BigCount {
    let n = n as usize;
    let mut f: Vec<BigUint> = vec![BigUint::zero(); n + 1];
    f[0] = BigUint::from(1u32);
    let mut j = 1u64;
    loop {
        let part = match j.checked_pow(exponent) {
            Some(p) if p as usize <= n && n > 0 => p as usize,
            _ => break,
        };
        for m in part..=n {
            let (head, tail) = f.split_at_mut(m);
            tail[0] += &head[m - part];
        }
        j += 1;
    }
    f[n].clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: u64) -> BigCount {
        BigCount::from(v)
    }

    #[test]
    fn small_values_and_growth() {
        let p = linear_series(10);
        let expect = [1u64, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (i, &e) in expect.iter().enumerate() {
            assert_eq!(p[i], c(e), "p({i})");
        }
    }

    #[test]
    fn big_reference_values() {
        assert_eq!(count_linear(100), c(190_569_292));
        assert_eq!(
            count_linear(200),
            "3972999029388".parse::<BigUint>().unwrap()
        );
    }

    #[test]
    fn restricted_examples() {
        // partitions of 5 with at most 2 parts: 5, 4+1, 3+2
        assert_eq!(count_linear_restricted(5, 2), c(3));
        assert_eq!(count_linear_restricted(5, 5), c(7)); // saturation at N = n
        assert_eq!(count_linear_restricted(5, 40), c(7));
        assert_eq!(count_linear_restricted(0, 0), c(1));
        assert_eq!(count_linear_restricted(5, 0), c(0));
    }

    #[test]
    fn restricted_series_is_monotone_and_saturates() {
        let n = 30;
        let series = restricted_series(n, n);
        for w in series.windows(2) {
            assert!(w[0] <= w[1]);
        }
        assert_eq!(series[n as usize], count_linear(n));
        // Column-sum identity: the exactly-k increments add back to p(n).
        let mut total = BigUint::zero();
        for k in 1..series.len() {
            total += &series[k] - &series[k - 1];
        }
        total += &series[0];
        assert_eq!(total, count_linear(n));
    }

    #[test]
    fn conjugation_bridges_the_two_dps() {
        for n in 0..=40u64 {
            for parts in [0, 1, 2, 3, 5, 11, 40] {
                assert_eq!(
                    count_linear_restricted(n, parts),
                    count_max_part_value(n, parts),
                    "n={n} N={parts}"
                );
            }
        }
    }

    #[test]
    fn variant_examples() {
        assert_eq!(count_distinct(5), c(3)); // 5, 4+1, 3+2
        assert_eq!(count_max_part_value(5, 3), c(5));
        assert_eq!(count_power_parts(5, 2), c(2)); // 1+1+1+1+1, 4+1
        assert_eq!(count_power_parts(0, 2), c(1));
        // s >= n saturates to p(n); distinct counts never exceed p(n)
        for n in 1..=25u64 {
            assert_eq!(count_max_part_value(n, n + 3), count_linear(n));
            assert!(count_distinct(n) <= count_linear(n));
        }
    }

    /// Independent oracle: count partitions of n with parts <= cap by plain
    /// recursive enumeration (no DP, no memo).
    fn brute(n: u64, cap: u64) -> u64 {
        if n == 0 {
            return 1;
        }
        let mut total = 0;
        for first in 1..=cap.min(n) {
            total += brute(n - first, first);
        }
        total
    }

    #[test]
    fn brute_force_oracle_matches_to_60() {
        let p = linear_series(60);
        for n in 0..=60u64 {
            assert_eq!(p[n as usize], c(brute(n, n.max(1))), "p({n})");
        }
    }
}
