//! Acceptance gate: ten end-to-end checks covering normalization,
//! large-order convergence, ensemble reduction, Monte Carlo agreement with
//! the analytic curves, the displaced-block gap, fluctuation statistics,
//! determinism, and exact identities. Each check prints one PASS line with
//! its measured numbers (visible with `--nocapture`).

// Reference constants keep their full 20 digits; f64 rounds them anyway.
#![allow(clippy::excessive_precision)]

use std::path::Path;
use std::process::Command;

use rmt_core::{
    delta_mu_theory, density_finite_n, density_semicircle, erfc, fermi_level, fermi_width,
    ks_critical, run_density_experiment, run_fermi_fluctuation_experiment, run_gap_experiment,
    run_number_variance_experiment, sample_hermitian_gaussian, sample_joint_ground,
    semicircle_quantile, support_radius, two_sample_ks, EnsembleParams, ExperimentConfig,
    NumberVarianceConfig, OccupiedDensity, Rho0, RngStream, Sector,
};

/// Composite Simpson rule; `points` must be odd.
fn simpson(lo: f64, hi: f64, points: usize, f: impl Fn(f64) -> f64) -> f64 {
    assert!(points >= 3 && points % 2 == 1);
    let n = points - 1;
    let h = (hi - lo) / n as f64;
    let mut sum = f(lo) + f(hi);
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        sum += w * f(lo + i as f64 * h);
    }
    sum * h / 3.0
}

#[test]
fn criterion_01_normalization() {
    let mut worst_finite = 0.0f64;
    for n in [1usize, 2, 4, 16, 64] {
        let l = support_radius(n, 1.0).unwrap() + 8.0;
        let mass = simpson(-l, l, 40_001, |x| density_finite_n(x, n, 1.0).unwrap());
        let err = (mass - n as f64).abs();
        assert!(err < 1e-6, "finite-order mass at N={n}: {mass}");
        worst_finite = worst_finite.max(err);
    }

    let mut worst_semi = 0.0f64;
    for n in [1usize, 2, 4, 16, 64] {
        let r = support_radius(n, 1.0).unwrap();
        let mass = simpson(
            -std::f64::consts::FRAC_PI_2,
            std::f64::consts::FRAC_PI_2,
            4_001,
            |theta| density_semicircle(r * theta.sin(), n, 1.0).unwrap() * r * theta.cos(),
        );
        let err = (mass - n as f64).abs();
        assert!(err < 1e-8, "semicircle mass at N={n}: {mass}");
        worst_semi = worst_semi.max(err);
    }

    let sets = [
        (16usize, 12usize, 1.0, 1.0, 5.0),
        (28, 14, 1.0, 0.04, 8.0),
        (8, 4, 2.0, 1.0, 0.0),
    ];
    let mut worst_split = 0.0f64;
    for (n, n_f, omega, omega_tilde, g) in sets {
        let params = EnsembleParams::new(n, n_f, omega, omega_tilde, g).unwrap();
        let occ = OccupiedDensity::new(&params, Rho0::Semicircle).unwrap();
        let l = params.support_radius() + params.shift() + 1.0;
        let mass = simpson(-l, l, 40_001, |x| {
            occ.eval(x, Sector::Filled).unwrap() + occ.eval(x, Sector::Empty).unwrap()
        });
        let rel = ((mass - n as f64) / n as f64).abs();
        assert!(rel < 1e-4, "filled+empty mass at ({n},{n_f},{g}): {mass}");
        worst_split = worst_split.max(rel);
    }

    println!(
        "PASS: [1] normalization — finite-order mass err {worst_finite:.1e} (<1e-6), \
         semicircle {worst_semi:.1e} (<1e-8), filled+empty rel {worst_split:.1e} (<1e-4)"
    );
}

#[test]
fn criterion_02_semicircle_convergence_at_n200() {
    let (n, c) = (200usize, 1.0);
    let r = support_radius(n, c).unwrap();
    let mut sup = 0.0f64;
    let points = 24_001;
    for i in 0..points {
        let x = -1.2 * r + 2.4 * r * i as f64 / (points - 1) as f64;
        let diff =
            (density_finite_n(x, n, c).unwrap() - density_semicircle(x, n, c).unwrap()).abs();
        sup = sup.max(diff);
    }
    let metric = sup * r / n as f64;
    assert!(metric <= 0.05, "scaled sup distance {metric}");
    println!("PASS: [2] semicircle convergence — sup distance x R/N = {metric:.4} (<= 0.05)");
}

#[test]
fn criterion_03_ensemble_reduction_ks() {
    let params = EnsembleParams::new(16, 8, 1.0, 1.0, 0.0).unwrap();
    let c = params.effective_stiffness();
    let matrices = 625u64; // 10^4 eigenvalues per side

    let mut joint = Vec::with_capacity(10_000);
    let mut direct = Vec::with_capacity(10_000);
    for i in 0..matrices {
        let (_, m) = sample_joint_ground(&params, &mut RngStream::new(9100, i).rng()).unwrap();
        joint.extend(rmt_core::eigenvalues_hermitian(&m).unwrap().values());
        let d = sample_hermitian_gaussian(params.n, c, &mut RngStream::new(9200, i).rng()).unwrap();
        direct.extend(rmt_core::eigenvalues_hermitian(&d).unwrap().values());
    }

    let d = two_sample_ks(&joint, &direct).unwrap();
    let crit = ks_critical(0.01, joint.len(), direct.len()).unwrap();
    assert!(d < crit, "KS {d} >= critical {crit}");
    println!(
        "PASS: [3] ensemble reduction — KS = {d:.4} < {crit:.4} (1% level, {} eigenvalues/side)",
        joint.len()
    );
}

#[test]
fn criterion_04_density_experiment_l1() {
    let params = EnsembleParams::new(8, 4, 2.0, 1.0, 0.0).unwrap();
    let cfg = ExperimentConfig::new(params, 10_000, 9300).unwrap();
    let report = run_density_experiment(&cfg).unwrap();
    let per_level = report.scalars["l1_finite_n"] / params.n as f64;
    assert!(per_level <= 0.05, "L1/N = {per_level}");
    println!(
        "PASS: [4] density experiment — L1(empirical, finite-order)/N = {per_level:.4} (<= 0.05)"
    );
}

#[test]
fn criterion_05_gap_reproduction_at_figure_parameters() {
    let params = EnsembleParams::new(28, 14, 1.0, 0.04, 8.0).unwrap();
    // Bin width chosen so the tolerance window 2*bin + 2/sqrt(omega_F)
    // accommodates the finite-stiffness smearing of the block edges.
    let grid = ExperimentConfig::default_grid(&params, 41).unwrap();
    let cfg = ExperimentConfig {
        grid,
        ..ExperimentConfig::new(params, 10_000, 9400).unwrap()
    };
    let report = run_gap_experiment(&cfg).unwrap();

    let n = params.n as f64;
    let l1_filled = report.scalars["l1_filled"] / n;
    let l1_empty = report.scalars["l1_empty"] / n;
    assert!(l1_filled <= 0.08, "filled L1/N = {l1_filled}");
    assert!(l1_empty <= 0.08, "empty L1/N = {l1_empty}");

    let predicted = report.scalars["gap_width_predicted"];
    assert_eq!(predicted, params.g / (params.omega * params.omega));
    let measured = report.scalars["gap_width_empirical"];
    let omega_f = report.scalars["omega_f"];
    let tol = 2.0 * cfg.grid.bin_width() + 2.0 / omega_f.sqrt();
    let diff = (measured - predicted).abs();
    assert!(
        diff <= tol,
        "gap width {measured} vs {predicted}, |diff| {diff} > tol {tol}"
    );
    println!(
        "PASS: [5] gap reproduction — L1/N filled {l1_filled:.4}, empty {l1_empty:.4} (<= 0.08); \
         gap {measured:.2} vs {predicted} within {tol:.2}"
    );
}

#[test]
fn criterion_06_sharp_cutoff_limit() {
    let params = EnsembleParams::new(16, 12, 1.0, 1.0, 5.0).unwrap();
    let occ = OccupiedDensity::new(&params, Rho0::Semicircle)
        .unwrap()
        .with_fermi_width(1e12)
        .unwrap();
    let c = params.effective_stiffness();
    let (mu, s) = (occ.mu_f(), occ.shift());
    let half = params.support_radius() + s + 1.0;
    let bins = 2001;
    let step = 2.0 * half / bins as f64;
    let mut worst = 0.0f64;
    for i in 0..bins {
        let x = -half + (i as f64 + 0.5) * step;
        if (x + s - mu).abs() <= step {
            continue; // within one grid step of the jump
        }
        let want = if x + s < mu {
            density_semicircle(x + s, 16, c).unwrap()
        } else {
            0.0
        };
        let got = occ.eval(x, Sector::Filled).unwrap();
        let err = (got - want).abs();
        assert!(err < 1e-6, "at {x}: {got} vs {want}");
        worst = worst.max(err);
    }
    println!(
        "PASS: [6] sharp cutoff — filled density matches hard truncation within {worst:.1e} \
         (<1e-6) off the edge"
    );
}

#[test]
fn criterion_07_fermi_fluctuation_width() {
    let params = EnsembleParams::new(64, 32, 1.0, 1.0, 0.0).unwrap();
    let cfg = ExperimentConfig::new(params, 10_000, 9500).unwrap();
    let report = run_fermi_fluctuation_experiment(&cfg).unwrap();
    let std = report.scalars["mu_std"];
    let predicted = report.scalars["delta_mu_predicted"];
    let ratio = std / predicted;
    assert!(
        (0.5..=2.0).contains(&ratio),
        "std {std} vs predicted {predicted}: ratio {ratio}"
    );
    // Symmetric filling also pins the center at zero.
    let mean = report.scalars["mu_mean"];
    let se = std / (cfg.n_samples as f64).sqrt();
    assert!(mean.abs() < 4.0 * se, "mean {mean} vs standard error {se}");
    println!(
        "PASS: [7] fermi fluctuation width — sample std {std:.4} vs predicted {predicted:.4}, \
         ratio {ratio:.2} (within factor 2)"
    );
}

#[test]
fn criterion_08_number_variance() {
    let order = 64usize;
    // Centered window holding half the levels at half filling.
    let half_window = semicircle_quantile(order, 1.0, 0.75 * order as f64).unwrap();
    let cfg = NumberVarianceConfig {
        order,
        stiffness: 1.0,
        interval: Some((-half_window, half_window)),
        n_samples: 10_000,
        seed: 9600,
        workers: None,
    };
    let report = run_number_variance_experiment(&cfg).unwrap();
    let variance = report.scalars["count_variance"];
    let predicted = report.scalars["variance_predicted"];
    let ratio = variance / predicted;
    assert!(
        (0.5..=2.0).contains(&ratio),
        "variance {variance} vs {predicted}: ratio {ratio}"
    );
    let mean = report.scalars["count_mean"];
    assert!((mean - 32.0).abs() < 0.5, "window count mean {mean}");
    println!(
        "PASS: [8] number variance — {variance:.3} vs ln(N)/pi^2 = {predicted:.3}, \
         ratio {ratio:.2} (within factor 2); mean count {mean:.2}"
    );
}

#[test]
fn criterion_09_determinism_across_workers() {
    let bin = env!("CARGO_BIN_EXE_rmt");
    let dir = tempfile::tempdir().unwrap();
    #[rustfmt::skip]
    let experiments: &[&[&str]] = &[
        &["density", "--n", "8", "--samples", "500", "--seed", "11"],
        &["gap", "--n", "8", "--nf", "4", "--g", "6", "--omega-tilde", "0.2",
          "--samples", "300", "--seed", "12"],
        &["fermi-fluct", "--n", "12", "--nf", "6", "--samples", "400", "--seed", "13"],
        &["number-variance", "--n", "24", "--samples", "400", "--seed", "14"],
    ];
    for args in experiments {
        let mut outputs: Vec<(Vec<u8>, Vec<u8>, serde_json::Value)> = Vec::new();
        for workers in ["1", "2", "8"] {
            let out_dir = dir.path().join(format!("{}-w{workers}", args[0]));
            let status = Command::new(bin)
                .args(*args)
                .args(["--workers", workers])
                .arg("--out")
                .arg(&out_dir)
                .output()
                .unwrap();
            assert!(
                status.status.success(),
                "{args:?} --workers {workers}: {}",
                String::from_utf8_lossy(&status.stderr)
            );
            outputs.push((
                std::fs::read(out_dir.join("curves.csv")).unwrap(),
                std::fs::read(out_dir.join("scalars.json")).unwrap(),
                manifest_modulo_wall_time(&out_dir),
            ));
        }
        for other in &outputs[1..] {
            assert_eq!(outputs[0].0, other.0, "{} curves differ", args[0]);
            assert_eq!(outputs[0].1, other.1, "{} scalars differ", args[0]);
            assert_eq!(outputs[0].2, other.2, "{} manifests differ", args[0]);
        }
    }
    println!(
        "PASS: [9] determinism — density/gap/fermi-fluct/number-variance byte-identical \
         across 1, 2, and 8 workers"
    );
}

fn manifest_modulo_wall_time(dir: &Path) -> serde_json::Value {
    let raw = std::fs::read_to_string(dir.join("manifest.json")).unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&raw).unwrap();
    v.as_object_mut()
        .unwrap()
        .remove("wall_time_seconds")
        .unwrap();
    v
}

#[test]
fn criterion_10_identity_micro_suite() {
    // Half filling centers the fermi level exactly.
    assert!(fermi_level(16, 8, 1.0).unwrap().abs() <= 1e-12);
    assert!(fermi_level(64, 32, 0.3).unwrap().abs() <= 1e-12);

    // erfc anchors and reflection.
    assert_eq!(erfc(0.0), 1.0);
    for z in [0.25, 0.5, 1.0, 2.0, 3.0] {
        assert!(
            (erfc(-z) - (2.0 - erfc(z))).abs() <= 1e-12,
            "reflection at {z}"
        );
    }

    // The smearing stiffness is the inverse double variance of the
    // fluctuation width: omega_F * 2 * delta_mu^2 = 1.
    for (n, rho) in [
        (16usize, 1.8006326323142121391),
        (64, 3.2943330906745717954),
        (200, 0.7),
    ] {
        let prod = fermi_width(n, rho).unwrap() * 2.0 * delta_mu_theory(n, rho).unwrap().powi(2);
        assert!(
            (prod - 1.0).abs() <= 1e-12,
            "width identity at n={n}: {prod}"
        );
    }

    // Mirror symmetry of the split at half filling, over the full grid.
    let params = EnsembleParams::new(16, 8, 1.0, 1.0, 5.0).unwrap();
    let occ = OccupiedDensity::new(&params, Rho0::Semicircle).unwrap();
    let grid = ExperimentConfig::default_grid(&params, 101).unwrap();
    for x in grid.centers() {
        let f = occ.eval(x, Sector::Filled).unwrap();
        let e = occ.eval(-x, Sector::Empty).unwrap();
        assert!(
            (f - e).abs() <= 1e-12 * f.max(1.0),
            "mirror at {x}: {f} vs {e}"
        );
    }

    println!(
        "PASS: [10] identity micro-suite — half-filling center, erfc reflection, \
         width identity, and mirror symmetry all within 1e-12"
    );
}
