//! Named zeta constants.
//!
//! The decimal strings carry 70 significant digits; the `f64` accessors are
//! their correctly rounded binary64 values. The integration test suite
//! re-derives both strings from scratch with exact rational arithmetic
//! (an Apery-style series for zeta(3), Euler–Maclaurin with rational
//! logarithms for zeta'(-1)), so the digits below are pinned by independent
//! in-repo computations, not taken on faith.

/// zeta(3) = 1.2020569..., 70 digits.
pub const ZETA_3_DECIMAL: &str =
    "1.202056903159594285399738161511449990764986292340498881792271555341838";

/// zeta'(-1) = -0.1654211..., 70 digits. Also 1/12 - ln A with A the
/// Glaisher–Kinkelin constant.
pub const ZETA_PRIME_MINUS_ONE_DECIMAL: &str =
    "-0.1654211437004509292139196602427806427640363803352017836665223063573597";

/// ln A = 1/12 - zeta'(-1), 70 digits.
pub const LN_GLAISHER_DECIMAL: &str =
    "0.2487544770337842625472529935761139760973697136685351169998556396906930";

/// zeta(3) as binary64.
#[inline]
pub fn zeta3() -> f64 {
    1.202_056_903_159_594_3
}

/// 2*zeta(3), the combination the two-dimensional formulas actually use.
#[inline]
pub fn two_zeta3() -> f64 {
    2.404_113_806_319_188_6
}

/// zeta'(-1) as binary64 (Wright's constant c).
#[inline]
pub fn zeta_prime_minus1() -> f64 {
    -0.165_421_143_700_450_93
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f64_accessors_round_the_strings() {
        assert_eq!(zeta3(), ZETA_3_DECIMAL.parse::<f64>().unwrap());
        assert_eq!(
            zeta_prime_minus1(),
            ZETA_PRIME_MINUS_ONE_DECIMAL.parse::<f64>().unwrap()
        );
        assert_eq!(two_zeta3(), 2.0 * zeta3());
    }

    #[test]
    fn glaisher_relation() {
        let ln_a: f64 = LN_GLAISHER_DECIMAL.parse().unwrap();
        assert!((ln_a - (1.0 / 12.0 - zeta_prime_minus1())).abs() < 1e-16);
    }

    #[test]
    fn printed_six_digit_values() {
        // The six-digit values quoted everywhere downstream.
        assert!((zeta_prime_minus1() - (-0.165421)).abs() < 5e-7);
        assert!((zeta3() - 1.2020569).abs() < 5e-8);
        assert!((two_zeta3() - 2.4041138).abs() < 5e-8);
    }
}
