//! Exact arbitrary-precision counters for partition families.
//!
//! Counts grow fast — p(200) already has 13 digits and plane counts grow
//! faster — so everything returns [`BigCount`] and overflow cannot happen by
//! construction. All functions are pure; DP tables are per call.

mod linear;
mod plane;

pub use linear::{
    count_distinct, count_linear, count_linear_restricted, count_max_part_value, count_power_parts,
    linear_series, restricted_series,
};
pub use plane::{
    count_plane, count_plane_restricted, count_plane_restricted_capped, enumerate_plane,
    enumerate_plane_capped, plane_series, plane_series_sigma, PlanePartition,
    DEFAULT_ENUMERATION_CAP,
};

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::{Error, Result};

/// Exact nonnegative partition count.
pub type BigCount = BigUint;

/// Which lattice the partition lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartitionKind {
    Linear,
    Plane,
}

/// Additional constraint on the partition family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Restriction {
    /// Unrestricted.
    None,
    /// At most N parts.
    MaxParts(u64),
    /// All parts pairwise different (linear only).
    DistinctParts,
    /// Every part at most s, s >= 1 (linear only).
    MaxPartValue(u64),
    /// Parts drawn from {1^e, 2^e, ...}, e >= 2 (linear only).
    PowerParts(u32),
}

/// A partition family: lattice kind plus restriction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartitionFamily {
    pub kind: PartitionKind,
    pub restriction: Restriction,
}

impl PartitionFamily {
    pub fn validate(&self) -> Result<()> {
        match (self.kind, self.restriction) {
            (_, Restriction::MaxPartValue(s)) if s < 1 => Err(Error::domain(
                "exact",
                "maxPartValue requires s >= 1".to_string(),
            )),
            (_, Restriction::PowerParts(e)) if e < 2 => Err(Error::domain(
                "exact",
                "powerParts requires exponent >= 2".to_string(),
            )),
            (PartitionKind::Plane, Restriction::DistinctParts)
            | (PartitionKind::Plane, Restriction::MaxPartValue(_))
            | (PartitionKind::Plane, Restriction::PowerParts(_)) => Err(Error::UnsupportedFamily {
                what: format!(
                    "{:?} is defined for linear partitions only",
                    self.restriction
                ),
            }),
            _ => Ok(()),
        }
    }
}

/// Exact count for a partition family.
///
/// Plane families with a part-count bound go through the enumerator and are
/// subject to its cap; the three value-shaped restrictions have no plane
/// analogue and are rejected.
pub fn count_variant(n: u64, family: &PartitionFamily) -> Result<BigCount> {
    family.validate()?;
    match (family.kind, family.restriction) {
        (PartitionKind::Linear, Restriction::None) => Ok(count_linear(n)),
        (PartitionKind::Linear, Restriction::MaxParts(parts)) => {
            Ok(count_linear_restricted(n, parts))
        }
        (PartitionKind::Linear, Restriction::DistinctParts) => Ok(count_distinct(n)),
        (PartitionKind::Linear, Restriction::MaxPartValue(s)) => Ok(count_max_part_value(n, s)),
        (PartitionKind::Linear, Restriction::PowerParts(e)) => Ok(count_power_parts(n, e)),
        (PartitionKind::Plane, Restriction::None) => Ok(count_plane(n)),
        (PartitionKind::Plane, Restriction::MaxParts(parts)) => count_plane_restricted(n, parts),
        _ => unreachable!("validate() rejects the rest"),
    }
}

/// Natural log of a positive big integer, accurate to ~1e-13 absolute.
///
/// Counts reach e^335 in routine use, far beyond what `to_f64` handles
/// gracefully near the representable edge, so take the top 64 bits plus a
/// power-of-two exponent.
pub fn ln_big(x: &BigCount) -> f64 {
    let bits = x.bits();
    assert!(bits > 0, "ln_big of zero");
    if bits <= 512 {
        x.to_f64().expect("fits f64 range").ln()
    } else {
        let shift = bits - 64;
        let top = (x >> shift).to_u64().unwrap();
        (top as f64).ln() + shift as f64 * std::f64::consts::LN_2
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn count_variant_dispatch() {
        let fam = |kind, restriction| PartitionFamily { kind, restriction };
        let lin = PartitionKind::Linear;
        let pl = PartitionKind::Plane;
        assert_eq!(
            count_variant(5, &fam(lin, Restriction::None)).unwrap(),
            BigCount::from(7u32)
        );
        assert_eq!(
            count_variant(5, &fam(lin, Restriction::DistinctParts)).unwrap(),
            BigCount::from(3u32)
        );
        assert_eq!(
            count_variant(5, &fam(lin, Restriction::MaxPartValue(3))).unwrap(),
            BigCount::from(5u32)
        );
        assert_eq!(
            count_variant(5, &fam(lin, Restriction::PowerParts(2))).unwrap(),
            BigCount::from(2u32)
        );
        assert_eq!(
            count_variant(4, &fam(pl, Restriction::None)).unwrap(),
            BigCount::from(13u32)
        );
        assert_eq!(
            count_variant(4, &fam(pl, Restriction::MaxParts(2))).unwrap(),
            BigCount::from(5u32)
        );
        assert!(matches!(
            count_variant(4, &fam(pl, Restriction::DistinctParts)),
            Err(Error::UnsupportedFamily { .. })
        ));
        assert!(count_variant(4, &fam(lin, Restriction::MaxPartValue(0))).is_err());
        assert!(count_variant(4, &fam(lin, Restriction::PowerParts(1))).is_err());
    }

    #[test]
    fn ln_big_matches_direct_and_huge() {
        let small = BigCount::from(190_569_292u64);
        assert!((ln_big(&small) - (190_569_292f64).ln()).abs() < 1e-12);
        // 2^4000 exactly
        let huge = BigCount::one() << 4000;
        assert!((ln_big(&huge) - 4000.0 * std::f64::consts::LN_2).abs() < 1e-9);
    }
}
