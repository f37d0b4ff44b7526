//! Bosonic-oscillator entropy models and their steepest-descent evaluation.
//!
//! For an ensemble with partition function Z(beta), the microstate count at
//! energy E is recovered from the inverse Laplace transform through the
//! saddle beta0 of S(beta) = beta E + ln Z(beta):
//!
//! ```text
//! Gamma(E) = e^{S(beta0)} / sqrt(2 pi S''(beta0))
//! ```
//!
//! with the third-order refinement
//!
//! ```text
//! Gamma(E) = e^{S(beta0)}/(2 pi) * 2 S''/(sqrt(3)|S'''|) * e^a K_{1/3}(a),
//! a = (S'')^3 / (3 (S''')^2).
//! ```
//!
//! Two small-beta entropy models are built in:
//!
//! * `D1` (oscillators with unit degeneracy):
//!   `S = pi^2/(6 beta) + ln(beta)/2 - ln(2 pi)/2 + (E - shift) beta`,
//!   shift 1/24 behind a flag (droppable at large E, off by default).
//! * `D2` (degeneracy j at level j):
//!   `S = beta E + zeta(3)/beta^2 + ln(beta)/12 + c`, with the constant c
//!   selectable: -1/6 (one-term Euler–Maclaurin), an optimally truncated
//!   correction series, or zeta'(-1) (the exact constant; default).
//!
//! The saddle location and the S'', S''' entering Gamma use the leading
//! (power-law) part of S only — the logarithmic terms are subleading and
//! keeping them would break the closed forms the estimates must reproduce.
//! S evaluated *at* the saddle keeps everything.

use num_traits::ToPrimitive;

use crate::specfun::{em_c_series, optimal_truncation, two_zeta3, zeta_prime_minus1};
use crate::{Error, Result};

use std::f64::consts::PI;

/// Oscillator ensemble dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dimension {
    D1,
    D2,
}

/// Choice of the constant term c in the two-dimensional entropy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CConstant {
    /// -1/6, the single-term Euler–Maclaurin value.
    MinusOneSixth,
    /// Optimally-truncated correction series through the given k (2..=10).
    TruncatedSeries(u32),
    /// zeta'(-1), the exact constant. Default.
    ZetaPrime,
}

impl CConstant {
    pub fn value(self) -> Result<f64> {
        match self {
            CConstant::MinusOneSixth => Ok(-1.0 / 6.0),
            CConstant::ZetaPrime => Ok(zeta_prime_minus1()),
            CConstant::TruncatedSeries(k_max) => {
                let series = em_c_series(k_max)?;
                let k = optimal_truncation(&series.terms)?;
                Ok(series
                    .partial_sum(k)
                    .to_f64()
                    .expect("partial sum fits f64"))
            }
        }
    }
}

/// Immutable entropy model; shareable across threads.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermoModel {
    pub dimension: Dimension,
    /// D1 only: keep the 1/24 shift next to the energy.
    pub energy_shift: bool,
    /// D2 only: the constant c.
    pub c: CConstant,
}

/// Stationary point of S with the data Gamma needs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SaddlePoint {
    pub beta0: f64,
    /// S(beta0), full model including logarithmic and constant terms.
    pub s0: f64,
    /// S''(beta0) of the leading entropy.
    pub s2: f64,
    /// S'''(beta0) of the leading entropy.
    pub s3: f64,
    pub energy: f64,
}

impl ThermoModel {
    pub fn d1() -> Self {
        ThermoModel {
            dimension: Dimension::D1,
            energy_shift: false,
            c: CConstant::ZetaPrime,
        }
    }

    pub fn d1_shifted() -> Self {
        ThermoModel {
            energy_shift: true,
            ..Self::d1()
        }
    }

    pub fn d2() -> Self {
        ThermoModel {
            dimension: Dimension::D2,
            energy_shift: false,
            c: CConstant::ZetaPrime,
        }
    }

    pub fn d2_with_c(c: CConstant) -> Self {
        ThermoModel { c, ..Self::d2() }
    }

    fn check(beta: f64, energy: f64) -> Result<()> {
        if beta <= 0.0 || !beta.is_finite() {
            return Err(Error::domain(
                "thermo",
                format!("inverse temperature must be positive, got beta={beta}"),
            ));
        }
        if energy <= 0.0 || !energy.is_finite() {
            return Err(Error::domain(
                "thermo",
                format!("energy must be positive, got E={energy}"),
            ));
        }
        Ok(())
    }

    fn effective_energy(&self, energy: f64) -> f64 {
        if self.dimension == Dimension::D1 && self.energy_shift {
            energy - 1.0 / 24.0
        } else {
            energy
        }
    }

    /// Small-beta asymptotic entropy S(beta; E), full display.
    pub fn entropy(&self, beta: f64, energy: f64) -> Result<f64> {
        Self::check(beta, energy)?;
        let e = self.effective_energy(energy);
        Ok(match self.dimension {
            Dimension::D1 => {
                PI * PI / (6.0 * beta) + 0.5 * beta.ln() - 0.5 * (2.0 * PI).ln() + e * beta
            }
            Dimension::D2 => {
                beta * e + two_zeta3() / (2.0 * beta * beta) + beta.ln() / 12.0 + self.c.value()?
            }
        })
    }

    /// dS/dbeta of the full display.
    pub fn entropy_d1(&self, beta: f64, energy: f64) -> Result<f64> {
        Self::check(beta, energy)?;
        let e = self.effective_energy(energy);
        Ok(match self.dimension {
            Dimension::D1 => -PI * PI / (6.0 * beta * beta) + 0.5 / beta + e,
            Dimension::D2 => e - two_zeta3() / beta.powi(3) + 1.0 / (12.0 * beta),
        })
    }

    /// d2S/dbeta2 of the full display (beta only).
    pub fn entropy_d2(&self, beta: f64) -> Result<f64> {
        Self::check(beta, 1.0)?;
        Ok(match self.dimension {
            Dimension::D1 => PI * PI / (3.0 * beta.powi(3)) - 0.5 / (beta * beta),
            Dimension::D2 => 3.0 * two_zeta3() / beta.powi(4) - 1.0 / (12.0 * beta * beta),
        })
    }

    /// d3S/dbeta3 of the full display (beta only).
    pub fn entropy_d3(&self, beta: f64) -> Result<f64> {
        Self::check(beta, 1.0)?;
        Ok(match self.dimension {
            Dimension::D1 => -PI * PI / beta.powi(4) + 1.0 / beta.powi(3),
            Dimension::D2 => -12.0 * two_zeta3() / beta.powi(5) + 0.5 / (3.0 * beta.powi(3)),
        })
    }

    /// First derivative of the leading (saddle-defining) entropy.
    pub fn leading_d1(&self, beta: f64, energy: f64) -> Result<f64> {
        Self::check(beta, energy)?;
        let e = self.effective_energy(energy);
        Ok(match self.dimension {
            Dimension::D1 => e - PI * PI / (6.0 * beta * beta),
            Dimension::D2 => e - two_zeta3() / beta.powi(3),
        })
    }

    /// Second derivative of the leading entropy; positive for all beta > 0.
    pub fn leading_d2(&self, beta: f64) -> Result<f64> {
        Self::check(beta, 1.0)?;
        Ok(match self.dimension {
            Dimension::D1 => PI * PI / (3.0 * beta.powi(3)),
            Dimension::D2 => 3.0 * two_zeta3() / beta.powi(4),
        })
    }

    /// Closed-form stationary point with S, S'', S''' evaluated there.
    pub fn saddle(&self, energy: f64) -> Result<SaddlePoint> {
        Self::check(1.0, energy)?;
        let e = self.effective_energy(energy);
        if e <= 0.0 {
            return Err(Error::domain(
                "thermo",
                format!("shifted energy must stay positive, got {e}"),
            ));
        }
        let (beta0, s2, s3) = match self.dimension {
            Dimension::D1 => {
                let beta0 = PI / (6.0 * e).sqrt();
                let s2 = 2.0 * 6.0_f64.sqrt() / PI * e.powf(1.5);
                let s3 = -36.0 * e * e / (PI * PI);
                (beta0, s2, s3)
            }
            Dimension::D2 => {
                let tz = two_zeta3();
                let beta0 = (tz / e).powf(1.0 / 3.0);
                let s2 = 3.0 * e.powf(4.0 / 3.0) / tz.powf(1.0 / 3.0);
                let s3 = -12.0 * e.powf(5.0 / 3.0) / tz.powf(2.0 / 3.0);
                (beta0, s2, s3)
            }
        };
        let sp = SaddlePoint {
            beta0,
            s0: self.entropy(beta0, energy)?,
            s2,
            s3,
            energy,
        };
        debug_assert!(
            self.leading_d1(beta0, energy)?.abs() <= 1e-12 * energy,
            "stationarity residual too large"
        );
        Ok(sp)
    }

    /// Newton fallback on the leading S' with bisection bracketing; intended
    /// for entropy models without closed-form saddles, and cross-checks the
    /// closed forms here.
    pub fn saddle_newton(&self, energy: f64) -> Result<SaddlePoint> {
        Self::check(1.0, energy)?;
        // S' is increasing in beta: negative near 0+, -> E for large beta.
        let (mut lo, mut hi) = (1e-9, 1.0);
        while self.leading_d1(hi, energy)? < 0.0 {
            hi *= 2.0;
            if hi > 1e12 {
                return Err(Error::domain("thermo", "saddle bracket not found"));
            }
        }
        let mut beta = self.saddle(energy).map(|sp| sp.beta0).unwrap_or(0.5 * hi);
        for _ in 0..200 {
            let f = self.leading_d1(beta, energy)?;
            if f < 0.0 {
                lo = beta;
            } else {
                hi = beta;
            }
            let step = f / self.leading_d2(beta)?;
            let mut next = beta - step;
            if !(next > lo && next < hi) {
                next = 0.5 * (lo + hi);
            }
            if (next - beta).abs() <= 1e-15 * beta {
                beta = next;
                break;
            }
            beta = next;
        }
        let mut sp = self.saddle(energy)?;
        sp.beta0 = beta;
        sp.s0 = self.entropy(beta, energy)?;
        Ok(sp)
    }
}

/// Leading-order microstate count `e^{S0}/sqrt(2 pi S'')`.
pub fn gamma_leading(sp: &SaddlePoint) -> f64 {
    gamma_leading_ln(sp).exp()
}

/// Log of [`gamma_leading`]; always finite for valid saddles.
pub fn gamma_leading_ln(sp: &SaddlePoint) -> f64 {
    sp.s0 - 0.5 * (2.0 * PI * sp.s2).ln()
}

/// Third-order-corrected count with the K_{1/3} kernel.
pub fn gamma_third_order(sp: &SaddlePoint) -> Result<f64> {
    gamma_third_order_ln(sp).map(f64::exp)
}

/// Log of [`gamma_third_order`].
pub fn gamma_third_order_ln(sp: &SaddlePoint) -> Result<f64> {
    let s3 = sp.s3.abs();
    if !s3.is_finite() || s3 < 1e-300 * sp.s2.abs().max(1.0) {
        return Err(Error::DegenerateSaddle {
            what: format!("S''' = {} makes the correction singular", sp.s3),
        });
    }
    let a = sp.s2.powi(3) / (3.0 * sp.s3 * sp.s3);
    // e^a K_{1/3}(a) is exactly the scaled Bessel value.
    let scaled = crate::specfun::bessel_k_scaled(1.0 / 3.0, a)?;
    Ok(sp.s0 - (2.0 * PI).ln() + (2.0 * sp.s2 / (3.0_f64.sqrt() * s3)).ln() + scaled.ln())
}
