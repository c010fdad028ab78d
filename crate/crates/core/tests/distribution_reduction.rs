//! The combined matrix M0 + X is itself Gaussian at the effective
//! stiffness, so its eigenvalue distribution must be indistinguishable from
//! a direct draw at c. Checked with a two-sample KS test on pooled spectra.

use rmt_core::{
    eigenvalues_hermitian, ks_critical, sample_hermitian_gaussian, sample_joint_ground,
    two_sample_ks, EnsembleParams, RngStream,
};

fn pooled_joint_spectrum(params: &EnsembleParams, matrices: u64, seed: u64) -> Vec<f64> {
    let mut out = Vec::with_capacity(matrices as usize * params.n);
    for i in 0..matrices {
        let (_, m) = sample_joint_ground(params, &mut RngStream::new(seed, i).rng()).unwrap();
        out.extend(eigenvalues_hermitian(&m).unwrap().values());
    }
    out
}

fn pooled_direct_spectrum(n: usize, k: f64, matrices: u64, seed: u64) -> Vec<f64> {
    let mut out = Vec::with_capacity(matrices as usize * n);
    for i in 0..matrices {
        let m = sample_hermitian_gaussian(n, k, &mut RngStream::new(seed, i).rng()).unwrap();
        out.extend(eigenvalues_hermitian(&m).unwrap().values());
    }
    out
}

#[test]
fn joint_reduces_to_direct_effective_stiffness() {
    let params = EnsembleParams::new(16, 8, 1.0, 1.0, 0.0).unwrap();
    let c = params.effective_stiffness();
    let matrices = 625u64; // 10^4 eigenvalues per side

    let joint = pooled_joint_spectrum(&params, matrices, 200);
    let direct = pooled_direct_spectrum(params.n, c, matrices, 201);

    let d = two_sample_ks(&joint, &direct).unwrap();
    let crit = ks_critical(0.01, joint.len(), direct.len()).unwrap();
    assert!(
        d < crit,
        "KS statistic {d} exceeds the 1% critical value {crit}"
    );
}

#[test]
fn distinct_stiffnesses_are_told_apart() {
    // Same machinery must reject a genuinely different ensemble, otherwise
    // the test above proves nothing.
    let a = pooled_direct_spectrum(16, 0.5, 400, 210);
    let b = pooled_direct_spectrum(16, 1.0, 400, 211);
    let d = two_sample_ks(&a, &b).unwrap();
    let crit = ks_critical(0.01, a.len(), b.len()).unwrap();
    assert!(
        d > crit,
        "KS statistic {d} fails to separate stiffness 0.5 from 1.0 (critical {crit})"
    );
}
