//! Plane (two-dimensional) partition counters and the brute-force enumerator.
//!
//! p2d(n) is extracted from the MacMahon product `prod_k (1-x^k)^{-k}` by
//! repeated in-place multiplication with each factor's expansion
//! ([`plane_series`]). A second, structurally different route
//! ([`plane_series_sigma`]) uses the log-derivative recurrence
//! `n a(n) = sum_j sigma_2(j) a(n-j)`; the two must agree coefficient by
//! coefficient.
//!
//! No product formula is known for plane partitions with at most N nonzero
//! entries, so the restricted counter enumerates. "Number of parts" of a
//! plane partition means its number of nonzero entries n_ij here, matching
//! the finite-boson reading used throughout the asymptotic side; rows,
//! columns and trace give different restricted families that are out of
//! scope.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::{Error, Result};

use super::BigCount;

/// Default ceiling for the enumerator; p2d(25) = 451194 arrays is the most
/// the test workloads ever materialize.
pub const DEFAULT_ENUMERATION_CAP: u64 = 25;

/// p2d(0..=n_max) by coefficient extraction from `prod_k (1-x^k)^{-k}`:
/// multiplying by `(1-x^k)^{-1}` is one in-place prefix pass, repeated k
/// times per factor.
pub fn plane_series(n_max: u64) -> Vec<BigCount> {
    let n = n_max as usize;
    let mut f: Vec<BigUint> = vec![BigUint::zero(); n + 1];
    f[0] = BigUint::from(1u32);
    for k in 1..=n {
        for _ in 0..k {
            for m in k..=n {
                let (head, tail) = f.split_at_mut(m);
                tail[0] += &head[m - k];
            }
        }
    }
    f
}

/// Same coefficients via `n a(n) = sum_{j=1}^{n} sigma_2(j) a(n-j)`, where
/// sigma_2 sums squared divisors. Independent cross-check route.
pub fn plane_series_sigma(n_max: u64) -> Vec<BigCount> {
    let n = n_max as usize;
    let mut sigma2 = vec![0u64; n + 1];
    for d in 1..=n {
        let dd = (d * d) as u64;
        for m in (d..=n).step_by(d) {
            sigma2[m] += dd;
        }
    }
    let mut a: Vec<BigUint> = Vec::with_capacity(n + 1);
    a.push(BigUint::from(1u32));
    for m in 1..=n {
        let mut acc = BigUint::zero();
        for j in 1..=m {
            acc += &a[m - j] * sigma2[j];
        }
        let (q, r) = num_integer::Integer::div_rem(&acc, &BigUint::from(m));
        debug_assert!(r.is_zero(), "sigma_2 recurrence must divide exactly");
        a.push(q);
    }
    a
}

/// p2d(n), the number of plane partitions of n; p2d(0) = 1.
pub fn count_plane(n: u64) -> BigCount {
    plane_series(n).pop().unwrap()
}

/// A plane partition stored as its nonzero rows; entries weakly decrease
/// along each row and down each column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanePartition {
    rows: Vec<Vec<u32>>,
}

impl PlanePartition {
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Sum of all entries.
    pub fn total(&self) -> u64 {
        self.rows
            .iter()
            .map(|r| r.iter().map(|&v| v as u64).sum::<u64>())
            .sum()
    }

    /// Number of parts = number of nonzero entries.
    pub fn part_count(&self) -> u64 {
        self.rows.iter().map(|r| r.len() as u64).sum()
    }

    /// Checks positivity plus weak decrease along rows and columns.
    pub fn is_valid(&self) -> bool {
        for (i, row) in self.rows.iter().enumerate() {
            if row.is_empty() || row.contains(&0) {
                return false;
            }
            if row.windows(2).any(|w| w[0] < w[1]) {
                return false;
            }
            if i > 0 {
                let above = &self.rows[i - 1];
                if row.len() > above.len() {
                    return false;
                }
                if row.iter().zip(above).any(|(&lo, &hi)| lo > hi) {
                    return false;
                }
            }
        }
        true
    }
}

impl std::fmt::Display for PlanePartition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// All plane partitions of n (n >= 1), subject to the default cap.
pub fn enumerate_plane(n: u64) -> Result<Vec<PlanePartition>> {
    enumerate_plane_capped(n, DEFAULT_ENUMERATION_CAP)
}

/// All plane partitions of n with an explicit enumeration cap.
pub fn enumerate_plane_capped(n: u64, cap: u64) -> Result<Vec<PlanePartition>> {
    if n == 0 {
        return Err(Error::domain("exact", "enumerate_plane requires n >= 1"));
    }
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let mut out = Vec::new();
    let bound = vec![n as u32; n as usize];
    let mut acc: Vec<Vec<u32>> = Vec::new();
    descend(n as u32, &bound, &mut acc, &mut out);
    Ok(out)
}

/// Extend `acc` by every admissible next row (pointwise below `bound`,
/// weakly decreasing, sum <= remaining), recursing until the target is hit.
fn descend(remaining: u32, bound: &[u32], acc: &mut Vec<Vec<u32>>, out: &mut Vec<PlanePartition>) {
    if remaining == 0 {
        out.push(PlanePartition { rows: acc.clone() });
        return;
    }
    let mut row: Vec<u32> = Vec::with_capacity(bound.len());
    grow_row(remaining, bound, 0, remaining, &mut row, acc, out);
}

fn grow_row(
    remaining: u32,
    bound: &[u32],
    idx: usize,
    prev_val: u32,
    row: &mut Vec<u32>,
    acc: &mut Vec<Vec<u32>>,
    out: &mut Vec<PlanePartition>,
) {
    if !row.is_empty() {
        let used: u32 = row.iter().sum();
        acc.push(row.clone());
        descend(remaining - used, row, acc, out);
        acc.pop();
    }
    if idx >= bound.len() {
        return;
    }
    let used: u32 = row.iter().sum();
    let hi = bound[idx].min(prev_val).min(remaining - used);
    for v in (1..=hi).rev() {
        row.push(v);
        grow_row(remaining, bound, idx + 1, v, row, acc, out);
        row.pop();
    }
}

/// p2d_N(n): plane partitions of n with at most `max_parts` nonzero entries,
/// via enumeration under the default cap.
pub fn count_plane_restricted(n: u64, max_parts: u64) -> Result<BigCount> {
    count_plane_restricted_capped(n, max_parts, DEFAULT_ENUMERATION_CAP)
}

/// As [`count_plane_restricted`] with an explicit enumeration cap.
pub fn count_plane_restricted_capped(n: u64, max_parts: u64, cap: u64) -> Result<BigCount> {
    if n == 0 {
        return Ok(BigCount::from(1u32)); // the empty array
    }
    if max_parts >= n {
        // Saturated: no array of n has more than n parts.
        return Ok(count_plane(n));
    }
    let arrays = enumerate_plane_capped(n, cap)?;
    let cnt = arrays
        .iter()
        .filter(|a| a.part_count() <= max_parts)
        .count();
    Ok(BigCount::from(cnt))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: u64) -> BigCount {
        BigCount::from(v)
    }

    #[test]
    fn small_counts() {
        let p2 = plane_series(10);
        // MacMahon numbers
        let expect = [1u64, 1, 3, 6, 13, 24, 48, 86, 160, 282, 500];
        for (i, &e) in expect.iter().enumerate() {
            assert_eq!(p2[i], c(e), "p2d({i})");
        }
    }

    #[test]
    fn two_routes_agree() {
        assert_eq!(plane_series(150), plane_series_sigma(150));
    }

    #[test]
    fn enumerator_matches_display_cases() {
        let three = enumerate_plane(3).unwrap();
        assert_eq!(three.len(), 6);
        let four = enumerate_plane(4).unwrap();
        assert_eq!(four.len(), 13);
        let one = enumerate_plane(1).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].rows(), &[vec![1]]);
    }

    #[test]
    fn enumerator_consistency_and_validity() {
        for n in 1..=14u64 {
            let arrays = enumerate_plane(n).unwrap();
            assert_eq!(BigCount::from(arrays.len()), count_plane(n), "n={n}");
            let mut seen = std::collections::HashSet::new();
            for a in &arrays {
                assert!(a.is_valid(), "invalid array for n={n}: {a}");
                assert_eq!(a.total(), n);
                assert!(seen.insert(format!("{a}")), "duplicate for n={n}");
            }
        }
    }

    #[test]
    fn cap_and_domain_errors() {
        assert!(matches!(
            enumerate_plane(DEFAULT_ENUMERATION_CAP + 1),
            Err(Error::CapExceeded { .. })
        ));
        assert!(enumerate_plane_capped(12, 11).is_err());
        assert!(enumerate_plane(0).is_err());
    }

    #[test]
    fn restricted_counts() {
        // the thirteen arrays of 4, filtered to at most 2 nonzero entries:
        // [4], [3 1], [3/1], [2 2], [2/2]
        assert_eq!(count_plane_restricted(4, 2).unwrap(), c(5));
        assert_eq!(count_plane_restricted(4, 4).unwrap(), c(13));
        assert_eq!(count_plane_restricted(3, 1).unwrap(), c(1));
        assert_eq!(count_plane_restricted(0, 0).unwrap(), c(1));
        // saturation shortcut works above the cap too
        assert_eq!(count_plane_restricted(400, 400).unwrap(), count_plane(400));
    }

    #[test]
    fn part_count_distribution_sums_back() {
        let n = 9;
        let arrays = enumerate_plane(n).unwrap();
        let mut by_parts = vec![0u64; (n + 1) as usize];
        for a in &arrays {
            by_parts[a.part_count() as usize] += 1;
        }
        let total: u64 = by_parts.iter().sum();
        assert_eq!(BigCount::from(total), count_plane(n));
        // cumulative counts equal the restricted counter
        let mut cum = 0u64;
        for parts in 1..=n {
            cum += by_parts[parts as usize];
            assert_eq!(
                count_plane_restricted(n, parts).unwrap(),
                c(cum),
                "parts={parts}"
            );
        }
    }
}
