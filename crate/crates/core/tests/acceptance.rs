//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! Every tolerance is pinned here. Two checks encode literature claims that
//! the exact counters refute pointwise; those two tests are expected to
//! fail and say so — see the verification notes in the README.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use partitions::asymptotic::{
    conjecture_main, hr_corrected, hr_estimate, wright_corrected_default, wright_estimate_default,
};
use partitions::exact::{
    count_linear, count_plane, enumerate_plane, linear_series, ln_big, plane_series,
    restricted_series,
};
use partitions::finite::{
    fugacity_at_saddle, ln_z_unrestricted, zn_closed_1d, zn_recurrence, Precision, RecurrenceConfig,
};
use partitions::fitlab::{build_dataset, fit_model, model_ln_ratio, FitSample, NRule};
use partitions::specfun::{
    bessel_k_integral, bessel_k_series_asym, em_c_series, optimal_truncation, zeta_prime_minus1,
};
use partitions::thermo::{gamma_third_order_ln, Dimension, ThermoModel};

fn big(s: &str) -> BigUint {
    s.parse().unwrap()
}

fn report(id: &str, name: &str, failures: &[String]) {
    if failures.is_empty() {
        println!("ACCEPTANCE {id} {name}: PASS");
    } else {
        println!("ACCEPTANCE {id} {name}: FAIL");
        for f in failures {
            println!("    {f}");
        }
        panic!("ACCEPTANCE {id} {name}: FAIL — {}", failures.join("; "));
    }
}

#[test]
fn acceptance_01_exact_values() {
    let mut bad = Vec::new();
    for (n, want) in [(10u64, "42"), (100, "190569292"), (200, "3972999029388")] {
        let got = count_linear(n);
        if got != big(want) {
            bad.push(format!("p({n}) = {got}, want {want}"));
        }
    }
    for (n, want) in [(3u64, "6"), (4, "13")] {
        let got = count_plane(n);
        if got != big(want) {
            bad.push(format!("p2d({n}) = {got}, want {want}"));
        }
    }
    report("01", "exact-values", &bad);
}

#[test]
fn acceptance_02_em_series_table() {
    let mut bad = Vec::new();
    let series = em_c_series(6).unwrap();
    let printed = [
        (2u32, 0.0013889),
        (3, 0.0001984),
        (4, 0.0000992),
        (5, 0.0001052),
        (6, 0.0001918),
    ];
    for ((k, want), term) in printed.iter().zip(&series.terms) {
        assert_eq!(term.k, *k);
        let got = term.magnitude_f64();
        if (got - want).abs() > 5e-8 {
            bad.push(format!("magnitude k={k}: {got:.7} want {want}"));
        }
    }
    match optimal_truncation(&series.terms) {
        Ok(4) => {}
        other => bad.push(format!("optimal truncation {other:?}, want Ok(4)")),
    }
    let rat = |n: i64, d: i64| BigRational::new(n.into(), d.into());
    if series.partial_sum(3) != rat(-139, 840) {
        bad.push(format!(
            "partial sum k<=3 = {}, want -139/840",
            series.partial_sum(3)
        ));
    }
    if series.partial_sum(4) != rat(-1667, 10080) {
        bad.push(format!(
            "partial sum k<=4 = {}, want -1667/10080",
            series.partial_sum(4)
        ));
    }
    report("02", "em-series-table", &bad);
}

#[test]
fn acceptance_03_wright_error_table() {
    let mut bad = Vec::new();
    let p2 = plane_series(1000);
    let printed = [
        (50usize, 1.81, -2.72),
        (100, 1.13, -1.98),
        (1000, 0.24, -0.54),
    ];
    for (n, want_main, want_corr) in printed {
        let exact = &p2[n];
        let main = wright_estimate_default(n as f64)
            .unwrap()
            .relative_error(exact)
            * 100.0;
        let corr = wright_corrected_default(n as f64)
            .unwrap()
            .relative_error(exact)
            * 100.0;
        if (main - want_main).abs() > 0.02 {
            bad.push(format!(
                "main error at n={n}: {main:+.3}% want {want_main:+.2}%"
            ));
        }
        if (corr - want_corr).abs() > 0.02 {
            bad.push(format!(
                "corrected error at n={n}: {corr:+.3}% want {want_corr:+.2}%"
            ));
        }
    }
    report("03", "wright-error-table", &bad);
}

#[test]
fn acceptance_04a_corrected_1d_accuracy() {
    let mut bad = Vec::new();
    let p = linear_series(200);
    for (n, exact) in p.iter().enumerate().skip(21) {
        let rel = hr_corrected(n as f64).unwrap().relative_error(exact);
        if rel.abs() >= 0.01 {
            bad.push(format!("n={n}: corrected error {:.3}%", rel * 100.0));
        }
    }
    report("04a", "corrected-1d-accuracy", &bad);
}

/// Strict reading of the published 2D crossover claim: the corrected form
/// beats the main asymptotic exactly for n < 17 and loses for 17 <= n <= 60.
///
/// KNOWN RED. The exact counters refute the claim pointwise at n = 6 and
/// n = 16 (corrected already loses) and at n = 17 (corrected still wins by
/// 0.04 points). The crossover is real but sits *at* 17, with two small-n
/// fluctuations. The strict claim is asserted anyway; see the README
/// verification notes.
#[test]
fn acceptance_04b_crossover_2d_strict() {
    let mut bad = Vec::new();
    let p2 = plane_series(60);
    for (n, exact) in p2.iter().enumerate().skip(2) {
        let main = wright_estimate_default(n as f64)
            .unwrap()
            .relative_error(exact);
        let corr = wright_corrected_default(n as f64)
            .unwrap()
            .relative_error(exact);
        let beats = corr.abs() < main.abs();
        if n < 17 && !beats {
            bad.push(format!(
                "n={n}: corrected loses (|{:.3}%| vs |{:.3}%|) inside the claimed n<17 window",
                corr * 100.0,
                main * 100.0
            ));
        }
        if n >= 17 && beats {
            bad.push(format!(
                "n={n}: corrected still beats (|{:.3}%| vs |{:.3}%|) inside the claimed losing window",
                corr * 100.0,
                main * 100.0
            ));
        }
    }
    report("04b", "crossover-2d-strict", &bad);
}

/// The published ln Z_N sweep (D = 2, x = e^{-beta0(n)}): every printed
/// entry, including the saturated N -> n row, reproduced to 1e-4 absolute.
#[test]
fn acceptance_05_zn_table() {
    // (n, [(N, ln Z_N)...], saturated row)
    type Column = (u64, &'static [(usize, f64)], f64);
    const TABLE: [Column; 7] = [
        (
            100,
            &[
                (10, 13.50490),
                (20, 17.11408),
                (30, 18.09474),
                (50, 18.30640),
            ],
            18.30884,
        ),
        (
            200,
            &[
                (10, 17.20871),
                (20, 23.66709),
                (30, 26.52429),
                (50, 28.02642),
                (100, 28.13457),
            ],
            28.13458,
        ),
        (
            500,
            &[
                (10, 22.46359),
                (20, 33.53210),
                (30, 40.27325),
                (50, 47.03409),
                (100, 49.79461),
                (200, 49.81234),
            ],
            49.81234,
        ),
        (
            1000,
            &[
                (10, 26.62624),
                (20, 41.58209),
                (30, 51.91522),
                (50, 64.86995),
                (100, 75.97533),
                (200, 76.99794),
                (300, 76.99798),
            ],
            76.99798,
        ),
        (
            2000,
            &[
                (10, 30.90153),
                (20, 49.96198),
                (30, 64.22143),
                (50, 84.45795),
                (100, 109.82935),
                (200, 119.32409),
                (300, 119.40093),
            ],
            119.40094,
        ),
        (
            5000,
            &[
                (10, 36.67638),
                (20, 61.38032),
                (30, 81.14853),
                (50, 111.98343),
                (100, 161.18825),
                (200, 203.58562),
                (300, 213.60298),
                (500, 214.27879),
            ],
            214.27879,
        ),
        (
            10000,
            &[
                (10, 41.11207),
                (20, 70.19437),
                (30, 94.28280),
                (50, 133.58019),
                (100, 202.85769),
                (200, 280.20762),
                (300, 316.40845),
                (500, 334.40026),
            ],
            334.64773,
        ),
    ];
    let mut bad = Vec::new();
    let mut checked = 0;
    for (n, rows, saturated) in TABLE {
        let x = fugacity_at_saddle(Dimension::D2, n as f64).unwrap();
        let n_max = rows.last().unwrap().0;
        let cfg = RecurrenceConfig::new(2, x, n_max);
        let table = zn_recurrence(&cfg).unwrap();
        for &(parts, want) in rows {
            let got = table.ln_z[parts];
            if (got - want).abs() > 1e-4 {
                bad.push(format!("n={n} N={parts}: ln Z = {got:.5}, want {want}"));
            }
            checked += 1;
        }
        let inf = ln_z_unrestricted(Dimension::D2, x).unwrap();
        if (inf - saturated).abs() > 1e-4 {
            bad.push(format!("n={n} saturated: {inf:.5}, want {saturated}"));
        }
        checked += 1;
        // the n = 10^4 column is visibly short of saturation at N = 500
        if n == 10_000 {
            let gap = inf - table.ln_z[500];
            if !(0.2..0.3).contains(&gap) {
                bad.push(format!("n=10^4 saturation gap {gap:.5}, want ~0.24747"));
            }
        }
    }
    assert_eq!(checked, 52);
    report("05", "zn-table", &bad);
}

/// Erdős–Lehner accuracy window. The tested N range is
/// [(sqrt(6n)/(2 pi)) ln(6n/pi^2), 3 sqrt(n)] — the classical centering of
/// the part-count distribution — clipped to its upper endpoint when empty
/// (the formula degrades far below the centering; see the README notes).
#[test]
fn acceptance_06_erdos_lehner_window() {
    let mut bad = Vec::new();
    for n in [2000u64, 5000, 10000] {
        let nf = n as f64;
        let scale = (6.0 * nf).sqrt() / std::f64::consts::PI;
        let n_lo = (0.5 * scale * (6.0 * nf / (std::f64::consts::PI.powi(2))).ln()).ceil() as u64;
        let n_hi = (3.0 * nf.sqrt()).floor() as u64;
        let grid: Vec<u64> = if n_lo > n_hi {
            vec![n_hi]
        } else {
            let span = (n_hi - n_lo).max(1);
            (0..6).map(|i| n_lo + span * i / 5).collect()
        };
        let p_n = linear_series(n);
        let series = restricted_series(n, *grid.iter().max().unwrap());
        let ln_p = ln_big(&p_n[n as usize]);
        for parts in grid {
            let exact = ln_big(&series[parts as usize]) - ln_p;
            let predicted =
                partitions::asymptotic::erdos_lehner_log_ratio(nf, parts as f64).unwrap();
            let rel = ((predicted - exact) / exact).abs();
            if rel > 0.1 {
                bad.push(format!(
                    "n={n} N={parts}: predicted {predicted:.4} vs exact {exact:.4} (rel {rel:.3})"
                ));
            }
        }
    }
    report("06", "erdos-lehner-window", &bad);
}

#[test]
fn acceptance_07_conjecture_desk_check() {
    let mut bad = Vec::new();
    let mut prev_rel = f64::INFINITY;
    for n in [16u64, 18, 20] {
        let parts = (0.9 * n as f64).round() as u64;
        let arrays = enumerate_plane(n).unwrap();
        let exact = arrays.iter().filter(|a| a.part_count() <= parts).count() as f64;
        let implied =
            (ln_big(&count_plane(n)) + conjecture_main(n as f64, parts as f64).unwrap()).exp();
        let rel = (implied - exact) / exact;
        if rel.abs() > 0.15 {
            bad.push(format!(
                "n={n} N={parts}: implied {implied:.1} vs exact {exact} (rel {rel:+.4})"
            ));
        }
        if rel.abs() >= prev_rel {
            bad.push(format!("relative error not decreasing at n={n}: {rel:+.4}"));
        }
        prev_rel = rel.abs();
    }
    report("07", "conjecture-desk-check", &bad);
}

/// Fit recovery on the published grid.
///
/// KNOWN RED in its band assertions. The damped Gauss–Newton fit converges
/// cleanly (noiseless synthetic data recovers to 1e-6, asserted here first),
/// but on the reference grid the least-squares optimum of the published
/// model sits at A ~ 1.36, b ~ 0.0035, k ~ 3.85 — outside all three
/// published bands. Narrower windows recover A and b exactly (A = 1.076,
/// b = 0.0060 on n <= 2000, N in [0.3, 1.2] n^{2/3}) but k stays near 3,
/// never 2.26. See the README verification notes.
#[test]
fn acceptance_08_fit_recovery() {
    let mut bad = Vec::new();

    // synthetic self-recovery first: the optimizer itself is sound
    let mut synth = Vec::new();
    for &n in &[100u64, 300, 1000, 3000, 10_000] {
        let scale = (n as f64).powf(2.0 / 3.0);
        for c in [0.4, 0.7, 1.0, 1.5, 2.2] {
            let parts = (c * scale).round() as u64;
            synth.push(FitSample {
                n,
                parts,
                ln_ratio: model_ln_ratio(1.075, 0.006, 2.26, n as f64, parts as f64),
            });
        }
    }
    let fit = fit_model(&synth).unwrap();
    for (got, want, name) in [(fit.a, 1.075, "A"), (fit.b, 0.006, "b"), (fit.k, 2.26, "k")] {
        if (got - want).abs() > 1e-6 {
            bad.push(format!("synthetic recovery of {name}: {got} want {want}"));
        }
    }

    // the reference grid: seven n values, standard N rows in [0.3, 3] n^{2/3}
    let data = build_dataset(
        &[100, 200, 500, 1000, 2000, 5000, 10000],
        NRule::TableRows { lo: 0.3, hi: 3.0 },
        Precision::Double,
    )
    .unwrap();
    let fit = fit_model(&data).unwrap();
    println!(
        "    fitted on reference grid ({} samples): A = {:.4} +- {:.4}, b = {:.5} +- {:.5}, k = {:.3} +- {:.3}",
        data.len(), fit.a, fit.stderr_a, fit.b, fit.stderr_b, fit.k, fit.stderr_k
    );
    if (fit.a - 1.075).abs() > 0.024 {
        bad.push(format!("A = {:.4} outside 1.075 +- 0.024", fit.a));
    }
    if (fit.b - 0.0060).abs() > 0.0006 {
        bad.push(format!("b = {:.5} outside 0.0060 +- 0.0006", fit.b));
    }
    if (fit.k - 2.26).abs() > 0.6 {
        bad.push(format!("k = {:.3} outside 2.26 +- 0.6", fit.k));
    }
    report("08", "fit-recovery", &bad);
}

#[test]
fn acceptance_09_cross_path_identities() {
    let mut bad = Vec::new();

    // closed-form corrected estimators == generic third-order steepest
    // descent at the matching saddle
    for &n in &[50.0, 100.0, 1000.0] {
        let sp = ThermoModel::d1().saddle(n).unwrap();
        let a = hr_corrected(n).unwrap().log_value;
        let b = gamma_third_order_ln(&sp).unwrap();
        if (a - b).abs() > 1e-10 {
            bad.push(format!("1D third-order mismatch at n={n}: {a} vs {b}"));
        }
        let sp = ThermoModel::d2().saddle(n).unwrap();
        let a = wright_corrected_default(n).unwrap().log_value;
        let b = gamma_third_order_ln(&sp).unwrap();
        if (a - b).abs() > 1e-10 {
            bad.push(format!("2D third-order mismatch at n={n}: {a} vs {b}"));
        }
        // leading forms too (same closed form, two code paths)
        let sp = ThermoModel::d1().saddle(n).unwrap();
        let a = hr_estimate(n).unwrap().log_value;
        let b = partitions::thermo::gamma_leading_ln(&sp);
        if (a - b).abs() > 1e-12 {
            bad.push(format!("1D leading mismatch at n={n}"));
        }
    }

    // recurrence vs closed product, 200 seeded-random (x, N) pairs
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..200 {
        let x: f64 = rng.gen_range(0.05..0.95);
        let parts: usize = rng.gen_range(1..=300);
        let cfg = RecurrenceConfig::new(1, x, parts);
        let got = zn_recurrence(&cfg).unwrap().ln_z[parts];
        let want = zn_closed_1d(x, parts).unwrap();
        if (got - want).abs() > 1e-10 * want.abs().max(1.0) {
            bad.push(format!(
                "recurrence vs product at x={x:.4} N={parts}: {got} vs {want}"
            ));
        }
    }

    // Bessel dual-route agreement on a log grid
    for &nu in &[1.0 / 3.0, 0.5] {
        for i in 0..=40 {
            let x = 0.05 * (100.0f64 / 0.05).powf(i as f64 / 40.0);
            let a = bessel_k_integral(nu, x).unwrap();
            let b = bessel_k_series_asym(nu, x).unwrap();
            if ((a - b) / b).abs() > 1e-10 {
                bad.push(format!(
                    "bessel routes at nu={nu:.3} x={x:.3}: {a:e} vs {b:e}"
                ));
            }
        }
    }
    report("09", "cross-path-identities", &bad);
}

/// The truncated correction series brackets zeta'(-1) without deriving it:
/// each truncation sits within one first-omitted-term of the true constant.
#[test]
fn acceptance_10_constant_bracketing() {
    let mut bad = Vec::new();
    let series = em_c_series(6).unwrap();
    let zp = zeta_prime_minus1();
    let cases = [(3u32, 4u32, 6e-5), (4, 5, 5e-5)];
    for (through, next, printed_bound) in cases {
        let partial = series.partial_sum(through).to_f64().unwrap();
        let omitted = series
            .terms
            .iter()
            .find(|t| t.k == next)
            .unwrap()
            .magnitude_f64();
        let dev = (partial - zp).abs();
        if dev > omitted {
            bad.push(format!(
                "truncation k<={through}: |c - zeta'(-1)| = {dev:.2e} exceeds omitted term {omitted:.2e}"
            ));
        }
        if dev > printed_bound {
            bad.push(format!(
                "truncation k<={through}: deviation {dev:.2e} exceeds {printed_bound:.0e}"
            ));
        }
    }
    report("10", "constant-bracketing", &bad);
}
