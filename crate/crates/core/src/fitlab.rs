//! Nonlinear least squares for the intermediate-regime finite-size factor.
//!
//! The model for the log-ratio data `y = ln Z_N - ln Z_inf` at the
//! two-dimensional saddle is
//!
//! ```text
//! m(n, N; A, b, k) = -A n^{2/3} N^{-1/3} exp(-k N^{3/2}/n + b n^{1/3} ln N)
//! ```
//!
//! fitted by damped Gauss–Newton (Levenberg–Marquardt damping schedule) with
//! the analytic Jacobian; the fit is on the signed ln-ratio directly, which
//! weights samples by absolute residual. Standard errors come from the
//! Jacobian at the optimum. Everything is deterministic given data and the
//! fixed initialization (A, b, k) = (1, 0, 2 zeta(3)).

use serde::Serialize;

use crate::finite::{
    fugacity_at_saddle, ln_z_unrestricted, zn_recurrence, Precision, RecurrenceConfig,
};
use crate::specfun::two_zeta3;
use crate::thermo::Dimension;
use crate::{Error, Result};

/// One data point of the restricted/unrestricted log ratio.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FitSample {
    pub n: u64,
    pub parts: u64,
    /// ln Z_N - ln Z_inf at x = e^{-beta0(n)}; never positive.
    pub ln_ratio: f64,
}

/// Fitted constants with standard errors.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FitParams {
    pub a: f64,
    pub b: f64,
    pub k: f64,
    pub stderr_a: f64,
    pub stderr_b: f64,
    pub stderr_k: f64,
    /// sqrt of the summed squared residuals at the optimum.
    pub residual_norm: f64,
}

/// N-grid rule for dataset construction: a window `[lo, hi]` of multipliers
/// around n^{2/3}, populated either from the standard sweep rows
/// {10, 20, 30, 50, 100, 200, 300, 500} or from an evenly spaced grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NRule {
    TableRows { lo: f64, hi: f64 },
    Even { lo: f64, hi: f64, points: usize },
}

/// The N values the published sweep tables use.
pub const TABLE_ROWS: [u64; 8] = [10, 20, 30, 50, 100, 200, 300, 500];

impl NRule {
    fn window(&self) -> (f64, f64) {
        match *self {
            NRule::TableRows { lo, hi } => (lo, hi),
            NRule::Even { lo, hi, .. } => (lo, hi),
        }
    }

    fn validate(&self) -> Result<()> {
        let (lo, hi) = self.window();
        if !(0.3..=3.0).contains(&lo) || !(0.3..=3.0).contains(&hi) || lo > hi {
            return Err(Error::domain(
                "fitlab",
                format!("window multipliers must satisfy 0.3 <= lo <= hi <= 3, got [{lo}, {hi}]"),
            ));
        }
        if let NRule::Even { points, .. } = self {
            if *points < 1 {
                return Err(Error::domain("fitlab", "grid needs at least one point"));
            }
        }
        Ok(())
    }

    fn parts_for(&self, n: u64) -> Vec<u64> {
        let scale = (n as f64).powf(2.0 / 3.0);
        let (lo, hi) = self.window();
        match *self {
            NRule::TableRows { .. } => TABLE_ROWS
                .iter()
                .copied()
                .filter(|&parts| (parts as f64) >= lo * scale && (parts as f64) <= hi * scale)
                .collect(),
            NRule::Even { points, .. } => {
                let mut out: Vec<u64> = (0..points)
                    .map(|i| {
                        let c = if points == 1 {
                            lo
                        } else {
                            lo + (hi - lo) * i as f64 / (points - 1) as f64
                        };
                        ((c * scale).round() as u64).max(2)
                    })
                    .collect();
                out.dedup();
                out
            }
        }
    }
}

/// Build ln-ratio samples for each n: run the D = 2 recurrence at
/// `x = e^{-beta0(n)}` and subtract the unrestricted limit.
///
/// Saturated points (|ln_ratio| below 1e-9, pure rounding) are dropped.
pub fn build_dataset(
    n_values: &[u64],
    rule: NRule,
    precision: Precision,
) -> Result<Vec<FitSample>> {
    rule.validate()?;
    let mut out = Vec::new();
    for &n in n_values {
        let parts_list = rule.parts_for(n);
        let n_max = match parts_list.iter().max() {
            Some(&m) => m as usize,
            None => continue,
        };
        let x = fugacity_at_saddle(Dimension::D2, n as f64)?;
        let cfg = RecurrenceConfig {
            dimension: 2,
            x,
            n_max,
            precision,
        };
        let table = zn_recurrence(&cfg)?;
        let ln_inf = ln_z_unrestricted(Dimension::D2, x)?;
        for parts in parts_list {
            let ln_ratio = table.ln_z[parts as usize] - ln_inf;
            if ln_ratio < -1e-9 {
                out.push(FitSample { n, parts, ln_ratio });
            }
        }
    }
    Ok(out)
}

/// The model value m(n, N; A, b, k).
pub fn model_ln_ratio(a: f64, b: f64, k: f64, n: f64, parts: f64) -> f64 {
    -a * n.powf(2.0 / 3.0)
        * parts.powf(-1.0 / 3.0)
        * (-k * parts.powf(1.5) / n + b * n.powf(1.0 / 3.0) * parts.ln()).exp()
}

/// Residuals (model - data) at the given parameters, in dataset order.
pub fn residuals(data: &[FitSample], p: &FitParams) -> Vec<f64> {
    data.iter()
        .map(|s| model_ln_ratio(p.a, p.b, p.k, s.n as f64, s.parts as f64) - s.ln_ratio)
        .collect()
}

const MAX_ITERATIONS: usize = 300;

/// Least-squares fit of (A, b, k) by damped Gauss–Newton.
///
/// Preconditions: at least 10 samples spanning at least 3 distinct n.
pub fn fit_model(data: &[FitSample]) -> Result<FitParams> {
    let mut distinct: Vec<u64> = data.iter().map(|s| s.n).collect();
    distinct.sort_unstable();
    distinct.dedup();
    if data.len() < 10 || distinct.len() < 3 {
        return Err(Error::domain(
            "fitlab",
            format!(
                "fit needs >= 10 samples over >= 3 distinct n, got {} over {}",
                data.len(),
                distinct.len()
            ),
        ));
    }
    fit_model_from(data, [1.0, 0.0, two_zeta3()])
}

/// As [`fit_model`] with an explicit starting point (used by the synthetic
/// self-tests).
pub fn fit_model_from(data: &[FitSample], start: [f64; 3]) -> Result<FitParams> {
    let m = data.len();
    // base_i = m_i / A, so m_i = A * base_i and the A-column stays finite
    // even through an A ~ 0 trial point.
    let eval = |p: [f64; 3]| -> (Vec<f64>, Vec<[f64; 3]>, f64) {
        let mut r = Vec::with_capacity(m);
        let mut jac = Vec::with_capacity(m);
        let mut cost = 0.0;
        for s in data {
            let (n, parts) = (s.n as f64, s.parts as f64);
            let base = model_ln_ratio(1.0, p[1], p[2], n, parts);
            let mi = p[0] * base;
            let ri = mi - s.ln_ratio;
            cost += ri * ri;
            let t = n.powf(1.0 / 3.0) * parts.ln();
            let w = parts.powf(1.5) / n;
            jac.push([base, t * mi, -w * mi]);
            r.push(ri);
        }
        (r, jac, cost)
    };

    let mut p = start;
    let (_, _, mut cost) = eval(p);
    let mut lambda = 1e-3;
    let mut converged = false;
    let mut grad_norm = f64::INFINITY;
    for _iter in 0..MAX_ITERATIONS {
        let (r, jac, _) = eval(p);
        // normal equations
        let mut jtj = [[0.0f64; 3]; 3];
        let mut jtr = [0.0f64; 3];
        for (ri, ji) in r.iter().zip(&jac) {
            for a in 0..3 {
                jtr[a] += ji[a] * ri;
                for b in 0..3 {
                    jtj[a][b] += ji[a] * ji[b];
                }
            }
        }
        grad_norm = (jtr.iter().map(|v| v * v).sum::<f64>()).sqrt();
        let diag_ok = jtj.iter().enumerate().all(|(i, row)| row[i] > 0.0);
        if !diag_ok {
            return Err(Error::RankDeficient {
                what: "zero column in the Jacobian".into(),
            });
        }
        if grad_norm < 1e-12 * (1.0 + cost) {
            converged = true;
            break;
        }
        // damped step, retried with stronger damping until the cost drops
        let mut improved = false;
        let mut cost_converged = false;
        for _ in 0..40 {
            let mut a = jtj;
            for (i, row) in a.iter_mut().enumerate() {
                row[i] += lambda * jtj[i][i];
            }
            let rhs = [-jtr[0], -jtr[1], -jtr[2]];
            let delta = match solve3(a, rhs) {
                Some(d) => d,
                None => {
                    lambda *= 4.0;
                    continue;
                }
            };
            let candidate = [p[0] + delta[0], p[1] + delta[1], p[2] + delta[2]];
            let (_, _, c_new) = eval(candidate);
            if c_new.is_finite() && c_new < cost {
                cost_converged = (cost - c_new) < 1e-14 * cost.max(1e-300);
                p = candidate;
                cost = c_new;
                lambda = (lambda / 3.0).max(1e-12);
                improved = true;
                break;
            }
            lambda *= 4.0;
        }
        if cost_converged || (!improved && grad_norm < 1e-6 * (1.0 + cost)) {
            converged = true;
            break;
        }
        if !improved {
            return Err(Error::NonConvergence {
                iterations: MAX_ITERATIONS,
                gradient_norm: grad_norm,
                residual_norm: cost.sqrt(),
                best_a: p[0],
                best_b: p[1],
                best_k: p[2],
            });
        }
    }
    if !converged {
        return Err(Error::NonConvergence {
            iterations: MAX_ITERATIONS,
            gradient_norm: grad_norm,
            residual_norm: cost.sqrt(),
            best_a: p[0],
            best_b: p[1],
            best_k: p[2],
        });
    }

    // covariance from the undamped normal matrix at the optimum
    let (r, jac, cost_final) = eval(p);
    let mut jtj = [[0.0f64; 3]; 3];
    for ji in &jac {
        for a in 0..3 {
            for b in 0..3 {
                jtj[a][b] += ji[a] * ji[b];
            }
        }
    }
    let dof = (m.saturating_sub(3)).max(1) as f64;
    let s2 = r.iter().map(|v| v * v).sum::<f64>() / dof;
    let inv = invert3(jtj).ok_or_else(|| Error::RankDeficient {
        what: "normal matrix singular at the optimum".into(),
    })?;
    let stderr = |i: usize| (s2 * inv[i][i]).max(0.0).sqrt();
    Ok(FitParams {
        a: p[0],
        b: p[1],
        k: p[2],
        stderr_a: stderr(0),
        stderr_b: stderr(1),
        stderr_k: stderr(2),
        residual_norm: cost_final.sqrt(),
    })
}

/// Gaussian elimination with partial pivoting for a 3x3 system.
fn solve3(mut a: [[f64; 3]; 3], mut b: [f64; 3]) -> Option<[f64; 3]> {
    for col in 0..3 {
        let pivot = (col..3).max_by(|&i, &j| {
            a[i][col]
                .abs()
                .partial_cmp(&a[j][col].abs())
                .unwrap_or(std::cmp::Ordering::Equal)
        })?;
        if a[pivot][col].abs() < 1e-300 {
            return None;
        }
        a.swap(col, pivot);
        b.swap(col, pivot);
        let pivot_row = a[col];
        for row in (col + 1)..3 {
            let f = a[row][col] / pivot_row[col];
            for (k, cell) in a[row].iter_mut().enumerate().skip(col) {
                *cell -= f * pivot_row[k];
            }
            b[row] -= f * b[col];
        }
    }
    let mut x = [0.0f64; 3];
    for row in (0..3).rev() {
        let mut acc = b[row];
        for k in (row + 1)..3 {
            acc -= a[row][k] * x[k];
        }
        x[row] = acc / a[row][row];
    }
    Some(x)
}

/// Inverse of a symmetric 3x3 via the adjugate; None when singular.
fn invert3(a: [[f64; 3]; 3]) -> Option<[[f64; 3]; 3]> {
    let det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    let scale = a[0][0].abs().max(a[1][1].abs()).max(a[2][2].abs());
    if det.abs() < 1e-14 * scale.powi(3) {
        return None;
    }
    let c = |i: usize, j: usize| -> f64 {
        let (r0, r1) = match i {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        let (c0, c1) = match j {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        let minor = a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0];
        if (i + j).is_multiple_of(2) {
            minor
        } else {
            -minor
        }
    };
    let mut inv = [[0.0f64; 3]; 3];
    for (i, row) in inv.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            *v = c(j, i) / det;
        }
    }
    Some(inv)
}

/// Cox–Stuart pairing for a trend check: pair the first half of the values
/// (ordered by the caller) with the second half and count positive
/// differences among nonzero pairs. Under "no trend" the count is
/// Binomial(pairs, 1/2).
pub fn cox_stuart_positive_pairs(values: &[f64]) -> (usize, usize) {
    let half = values.len() / 2;
    let offset = values.len() - half; // skip the middle element when odd
    let mut positives = 0;
    let mut pairs = 0;
    for i in 0..half {
        let d = values[offset + i] - values[i];
        if d != 0.0 {
            pairs += 1;
            if d > 0.0 {
                positives += 1;
            }
        }
    }
    (positives, pairs)
}
