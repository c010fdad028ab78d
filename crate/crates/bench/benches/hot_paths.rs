use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use rmt_core::{
    density_finite_n, eigenvalues_hermitian, erfc, run_density_experiment,
    sample_hermitian_gaussian, EnsembleParams, ExperimentConfig, RngStream,
};

fn bench_sample_and_solve(c: &mut Criterion) {
    let mut group = c.benchmark_group("sample_eigensolve");
    for &n in &[16usize, 64] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            let mut rng = RngStream::new(1, 0).rng();
            b.iter(|| {
                let m = sample_hermitian_gaussian(n, 1.0, &mut rng).unwrap();
                eigenvalues_hermitian(&m).unwrap()
            });
        });
    }
    group.finish();
}

fn bench_finite_n_density(c: &mut Criterion) {
    let mut group = c.benchmark_group("density_finite_n");
    for &n in &[64usize, 256, 1024] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| density_finite_n(0.37, n, 1.0).unwrap());
        });
    }
    group.finish();
}

fn bench_erfc(c: &mut Criterion) {
    c.bench_function("erfc_sweep", |b| {
        b.iter(|| {
            let mut acc = 0.0;
            let mut z = -6.0;
            while z < 6.0 {
                acc += erfc(z);
                z += 0.01;
            }
            acc
        });
    });
}

fn bench_density_experiment(c: &mut Criterion) {
    c.bench_function("density_experiment_n8_s100", |b| {
        let params = EnsembleParams::new(8, 4, 2.0, 1.0, 0.0).unwrap();
        let cfg = ExperimentConfig::new(params, 100, 42).unwrap();
        b.iter(|| run_density_experiment(&cfg).unwrap());
    });
}

criterion_group!(
    benches,
    bench_sample_and_solve,
    bench_finite_n_density,
    bench_erfc,
    bench_density_experiment
);
criterion_main!(benches);
