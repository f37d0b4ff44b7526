//! Special-function kernels used by the asymptotic machinery: exact Bernoulli
//! numbers, the zeta constants, the Euler–Maclaurin constant series for the
//! two-dimensional entropy, and the modified Bessel function K_nu.

mod bernoulli;
mod bessel;
mod constants;
mod emseries;
mod gamma;

pub use bernoulli::bernoulli;
pub use bessel::{bessel_k, bessel_k_integral, bessel_k_ln, bessel_k_scaled, bessel_k_series_asym};
pub use constants::{
    two_zeta3, zeta3, zeta_prime_minus1, LN_GLAISHER_DECIMAL, ZETA_3_DECIMAL,
    ZETA_PRIME_MINUS_ONE_DECIMAL,
};
pub use emseries::{em_c_series, optimal_truncation, EmCSeries, EmSeriesTerm};
pub use gamma::gamma as gamma_fn;
