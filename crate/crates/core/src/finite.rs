//! Finite-N canonical partition functions for D-dimensional oscillator
//! ensembles.
//!
//! The N-particle partition function obeys the Borrmann–Franke-type
//! recurrence
//!
//! ```text
//! Z_N(x) = (1/N) sum_{k=1}^{N} B_k(x) Z_{N-k}(x),   Z_0 = 1,
//! B_k(x) = (1 - x^k)^{-D},   x = e^{-beta} in (0, 1).
//! ```
//!
//! Every term is positive, so the recurrence is evaluated in the log domain
//! with a per-step rescale by Z_{N-1} and no cancellation anywhere.
//!
//! Note on the N -> infinity limit: `B_k = (1-x^k)^{-D}` corresponds to a
//! single-particle spectrum whose level j >= 0 carries degeneracy
//! C(j+D-1, D-1), *including a zero-cost ground level*. Excess particles
//! park there, so `Z_N` increases to the finite limit
//! `prod_{j>=1} (1 - x^j)^{-C(j+D-1, D-1)}`. For D = 1 that is the Euler
//! product `prod (1-x^j)^{-1}` (consistent with the closed form
//! [`zn_closed_1d`]); for D = 2 the exponent is j+1, i.e. the MacMahon
//! product *times* the Euler product. [`ln_z_unrestricted`] computes this
//! recurrence-ensemble limit, which is what the saturated rows of the
//! N-sweep tables converge to.

use crate::dd::Dd;
use crate::thermo::Dimension;
use crate::{Error, Result};

/// Mantissa-width contract for the recurrence evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Precision {
    /// binary64 (53-bit mantissa).
    #[default]
    Double,
    /// double-double (106-bit mantissa).
    Extended,
}

impl Precision {
    pub fn mantissa_bits(self) -> u32 {
        match self {
            Precision::Double => 53,
            Precision::Extended => 106,
        }
    }

    fn epsilon(self) -> f64 {
        match self {
            Precision::Double => f64::EPSILON,
            Precision::Extended => 1.2e-32,
        }
    }
}

/// Inputs for one recurrence run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RecurrenceConfig {
    /// Spatial dimension D >= 1 of the oscillator ensemble.
    pub dimension: u32,
    /// Fugacity-like variable x = e^{-beta}, strictly inside (0, 1).
    pub x: f64,
    /// Largest particle number to compute.
    pub n_max: usize,
    pub precision: Precision,
}

impl RecurrenceConfig {
    pub fn new(dimension: u32, x: f64, n_max: usize) -> Self {
        RecurrenceConfig {
            dimension,
            x,
            n_max,
            precision: Precision::Double,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.dimension < 1 {
            return Err(Error::domain("finite", "dimension must be >= 1"));
        }
        if !(self.x > 0.0 && self.x < 1.0) {
            return Err(Error::domain(
                "finite",
                format!("x must lie in (0,1), got {}", self.x),
            ));
        }
        if self.n_max < 1 {
            return Err(Error::domain("finite", "n_max must be >= 1"));
        }
        Ok(())
    }
}

/// ln Z_N for N = 0..=n_max; `ln_z[0] = 0` and the sequence increases.
#[derive(Debug, Clone)]
pub struct ZnTable {
    pub ln_z: Vec<f64>,
    pub config: RecurrenceConfig,
}

/// Run the recurrence at the configured precision.
///
/// Absolute accuracy on ln Z_N is limited by the accumulated rescaled sums;
/// the post-hoc bound `n_max * max|ln Z| * eps` must clear the 1e-5 working
/// tolerance or the run reports precision exhaustion.
pub fn zn_recurrence(config: &RecurrenceConfig) -> Result<ZnTable> {
    config.validate()?;
    let ln_z = match config.precision {
        Precision::Double => recurrence_f64(config),
        Precision::Extended => recurrence_dd(config),
    };
    let max_abs = ln_z.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let err_bound = 4.0 * config.n_max as f64 * max_abs.max(1.0) * config.precision.epsilon();
    if err_bound > 1e-5 {
        return Err(Error::PrecisionExhausted {
            what: format!(
                "estimated ln Z error {err_bound:.2e} exceeds 1e-5 \
                 (n_max={}, mantissa bits {})",
                config.n_max,
                config.precision.mantissa_bits()
            ),
        });
    }
    // mathematically strictly increasing; saturated steps may wobble at
    // rounding level
    debug_assert!(ln_z
        .windows(2)
        .all(|w| w[1] >= w[0] - 1e-12 * (1.0 + w[0].abs())));
    Ok(ZnTable {
        ln_z,
        config: *config,
    })
}

fn recurrence_f64(config: &RecurrenceConfig) -> Vec<f64> {
    let n_max = config.n_max;
    let d = config.dimension as f64;
    // ln B_k = -D ln(1 - x^k), via exp(k ln x) to avoid pow drift.
    let ln_x = config.x.ln();
    let ln_b: Vec<f64> = (0..=n_max)
        .map(|k| {
            if k == 0 {
                0.0
            } else {
                -d * (-(ln_x * k as f64).exp()).ln_1p()
            }
        })
        .collect();
    let mut ln_z = vec![0.0f64; n_max + 1];
    for n in 1..=n_max {
        // rescale by Z_{n-1}: all addends <= B_1, no overflow, all positive
        let scale = ln_z[n - 1];
        let mut acc = 0.0f64;
        for k in 1..=n {
            acc += (ln_b[k] + ln_z[n - k] - scale).exp();
        }
        ln_z[n] = scale + (acc / n as f64).ln();
    }
    ln_z
}

fn recurrence_dd(config: &RecurrenceConfig) -> Vec<f64> {
    let n_max = config.n_max;
    let d = Dd::from_f64(config.dimension as f64);
    let ln_x = Dd::from_f64(config.x).ln();
    let one = Dd::ONE;
    let ln_b: Vec<Dd> = (0..=n_max)
        .map(|k| {
            if k == 0 {
                Dd::ZERO
            } else {
                let xk = (ln_x * Dd::from_f64(k as f64)).exp();
                -(d * (one - xk).ln())
            }
        })
        .collect();
    let mut ln_z = vec![Dd::ZERO; n_max + 1];
    for n in 1..=n_max {
        let scale = ln_z[n - 1];
        let mut acc = Dd::ZERO;
        for k in 1..=n {
            acc = acc + (ln_b[k] + ln_z[n - k] - scale).exp();
        }
        ln_z[n] = scale + (acc / Dd::from_f64(n as f64)).ln();
    }
    ln_z.into_iter().map(Dd::to_f64).collect()
}

/// Closed-form one-dimensional result:
/// `ln Z_N = -sum_{k=1}^{N} ln(1 - x^k)`.
pub fn zn_closed_1d(x: f64, parts: usize) -> Result<f64> {
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::domain(
            "finite",
            format!("x must lie in (0,1), got {x}"),
        ));
    }
    let ln_x = x.ln();
    let mut acc = 0.0;
    for k in 1..=parts {
        acc -= (-(ln_x * k as f64).exp()).ln_1p();
    }
    Ok(acc)
}

/// Leading-order finite-size factor ln y_N at the saddle of the matching
/// unrestricted ensemble: with `x = e^{-beta0}`, `beta0` from the
/// D1/D2 saddle at E = n,
///
/// * D1: `ln y_N = -e^{-beta0 N} / beta0` (the Erdős–Lehner factor),
/// * D2: `ln y_N = -N e^{-beta0 N} / beta0`.
pub fn log_yn(dimension: Dimension, n: f64, parts: u32) -> Result<f64> {
    if parts == 0 {
        return Err(Error::domain("finite", "log_yn requires N >= 1"));
    }
    let model = match dimension {
        Dimension::D1 => crate::thermo::ThermoModel::d1(),
        Dimension::D2 => crate::thermo::ThermoModel::d2(),
    };
    let beta0 = model.saddle(n)?.beta0;
    let damp = (-beta0 * parts as f64).exp();
    Ok(match dimension {
        Dimension::D1 => -damp / beta0,
        Dimension::D2 => -(parts as f64) * damp / beta0,
    })
}

/// N -> infinity limit of the recurrence ensemble:
/// D1: `-sum_k ln(1-x^k)`; D2: `-sum_k (k+1) ln(1-x^k)`.
///
/// The geometric tail is truncated once its analytic bound drops below
/// 1e-13.
pub fn ln_z_unrestricted(dimension: Dimension, x: f64) -> Result<f64> {
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::domain(
            "finite",
            format!("x must lie in (0,1), got {x}"),
        ));
    }
    let ln_x = x.ln();
    let mut acc = 0.0f64;
    let mut k = 1usize;
    loop {
        let xk = (ln_x * k as f64).exp();
        let weight = match dimension {
            Dimension::D1 => 1.0,
            Dimension::D2 => (k + 1) as f64,
        };
        acc -= weight * (-xk).ln_1p();
        // tail bound: sum_{j>k} (j+1) x^j / (1-x^{k+1})
        let xk1 = xk * x;
        let tail = match dimension {
            Dimension::D1 => xk1 / ((1.0 - x) * (1.0 - xk1)),
            Dimension::D2 => {
                let j = (k + 2) as f64;
                xk1 * (j - (j - 1.0) * x) / ((1.0 - x) * (1.0 - x) * (1.0 - xk1))
            }
        };
        if tail < 1e-13 {
            break;
        }
        k += 1;
        if k > 100_000_000 {
            return Err(Error::PrecisionExhausted {
                what: format!("unrestricted tail did not converge at x={x}"),
            });
        }
    }
    Ok(acc)
}

/// x = e^{-beta0} at the dimension's saddle for E = n; the argument the
/// N-sweep tables are evaluated at.
pub fn fugacity_at_saddle(dimension: Dimension, n: f64) -> Result<f64> {
    let model = match dimension {
        Dimension::D1 => crate::thermo::ThermoModel::d1(),
        Dimension::D2 => crate::thermo::ThermoModel::d2(),
    };
    Ok((-model.saddle(n)?.beta0).exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asymptotic;

    #[test]
    fn first_step_is_ln_b1() {
        for d in [1u32, 2, 3] {
            let cfg = RecurrenceConfig::new(d, 0.4, 1);
            let t = zn_recurrence(&cfg).unwrap();
            let want = -(d as f64) * (1.0f64 - 0.4).ln();
            assert!((t.ln_z[1] - want).abs() < 1e-14);
        }
    }

    #[test]
    fn d1_matches_closed_form() {
        for &(x, n) in &[(0.2, 17), (0.55, 60), (0.9, 200)] {
            let cfg = RecurrenceConfig::new(1, x, n);
            let t = zn_recurrence(&cfg).unwrap();
            for parts in [1, n / 2, n] {
                let closed = zn_closed_1d(x, parts).unwrap();
                assert!(
                    (t.ln_z[parts] - closed).abs() < 1e-10 * closed.abs().max(1.0),
                    "x={x} N={parts}"
                );
            }
        }
    }

    #[test]
    fn closed_1d_basics() {
        assert!((zn_closed_1d(0.5, 1).unwrap() - std::f64::consts::LN_2).abs() < 1e-15);
        // convergence of the tail: ln Z_inf - ln Z_N -> 0
        let inf = ln_z_unrestricted(Dimension::D1, 0.5).unwrap();
        let z40 = zn_closed_1d(0.5, 40).unwrap();
        assert!(inf > z40 && inf - z40 < 1e-11);
        assert!(zn_closed_1d(1.0, 5).is_err());
    }

    #[test]
    fn table_is_strictly_increasing_and_bounded() {
        let x = fugacity_at_saddle(Dimension::D2, 100.0).unwrap();
        let cfg = RecurrenceConfig::new(2, x, 120);
        let t = zn_recurrence(&cfg).unwrap();
        assert_eq!(t.ln_z[0], 0.0);
        for w in t.ln_z.windows(2) {
            assert!(w[1] >= w[0]);
        }
        // strict growth while visibly below saturation
        for w in t.ln_z[..40].windows(2) {
            assert!(w[1] > w[0]);
        }
        let lim = ln_z_unrestricted(Dimension::D2, x).unwrap();
        for v in &t.ln_z {
            assert!(*v < lim + 1e-9);
        }
        // saturation reached well below the limit index
        assert!(lim - t.ln_z[120] < 1e-5);
    }

    #[test]
    fn extended_precision_agrees_with_double() {
        let x = fugacity_at_saddle(Dimension::D2, 500.0).unwrap();
        let mut cfg = RecurrenceConfig::new(2, x, 80);
        let a = zn_recurrence(&cfg).unwrap();
        cfg.precision = Precision::Extended;
        let b = zn_recurrence(&cfg).unwrap();
        for (u, v) in a.ln_z.iter().zip(&b.ln_z) {
            assert!((u - v).abs() < 1e-9 * v.abs().max(1.0));
        }
    }

    #[test]
    fn log_yn_closed_identities() {
        // D1 reproduces the Erdős–Lehner factor exactly
        for &(n, parts) in &[(400.0, 30u32), (10_000.0, 250)] {
            let a = log_yn(Dimension::D1, n, parts).unwrap();
            let b = asymptotic::erdos_lehner_log_ratio(n, parts as f64).unwrap();
            assert!((a - b).abs() <= 1e-15 * b.abs());
        }
        // D2 is the main conjecture re-expressed through beta0
        for &(n, parts) in &[(1000.0, 500u32), (20.0, 18)] {
            let a = log_yn(Dimension::D2, n, parts).unwrap();
            let b = asymptotic::conjecture_main(n, parts as f64).unwrap();
            assert!((a - b).abs() <= 1e-14 * b.abs());
        }
        // y_N -> 1 from below as N grows
        let v = log_yn(Dimension::D2, 100.0, 3000).unwrap();
        assert!(v <= 0.0 && v > -1e-30);
        assert!(log_yn(Dimension::D2, 100.0, 0).is_err());
    }

    #[test]
    fn unrestricted_limits() {
        // x -> 0+: empty system
        assert!(ln_z_unrestricted(Dimension::D2, 1e-12).unwrap() < 1e-11);
        assert!(ln_z_unrestricted(Dimension::D2, 1.0).is_err());
    }

    #[test]
    fn precision_exhaustion_reported() {
        let cfg = RecurrenceConfig {
            dimension: 2,
            x: 0.99999,
            n_max: 2_000_000_000,
            precision: Precision::Double,
        };
        // validation of n_max happens before any allocation only through the
        // error bound, so fabricate a small run with a forced bound instead:
        // a direct call would allocate; use the validator path.
        assert!(cfg.validate().is_ok());
        // The bound n_max * maxln * eps > 1e-5 triggers for huge n_max; the
        // cheap way to exercise the code path is a modest table with a tiny
        // mantissa contract — not available — so assert the arithmetic here.
        let err_bound = 4.0 * cfg.n_max as f64 * 300.0 * f64::EPSILON;
        assert!(err_bound > 1e-5);
    }

    #[test]
    fn generic_dimension_runs() {
        let cfg = RecurrenceConfig::new(3, 0.3, 40);
        let t = zn_recurrence(&cfg).unwrap();
        assert!(t.ln_z[40] > t.ln_z[10]);
        assert!(zn_recurrence(&RecurrenceConfig::new(0, 0.3, 10)).is_err());
        assert!(zn_recurrence(&RecurrenceConfig::new(2, 1.2, 10)).is_err());
    }
}
