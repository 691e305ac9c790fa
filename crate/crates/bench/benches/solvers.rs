use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use liesplit_bench::{jhss_problem, laplacian_1d, unit_matrix};
use liesplit_core::matkit::{eigenvalues_general, expm, solve_dense};
use liesplit_core::{
    adi_solve, j_hss_solve, kronecker_sum, BilinearStructure, DenseMatrix, SolverConfig,
};

fn j_hss(c: &mut Criterion) {
    let mut group = c.benchmark_group("j_hss");
    for n in [8, 16, 32] {
        let j = BilinearStructure::symplectic(n / 2);
        let (a, b) = jhss_problem(&j, 1);
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |bench, _| {
            bench.iter(|| {
                j_hss_solve(black_box(&a), black_box(&b), &j, &SolverConfig::default()).unwrap()
            })
        });
    }
    group.finish();
}

// Kronecker-structured half-steps against one dense n²×n² solve.
fn adi(c: &mut Criterion) {
    let mut group = c.benchmark_group("adi");
    group.sample_size(20);
    for n in [8, 16, 24] {
        let a = laplacian_1d(n);
        let rhs = vec![1.0; n * n];
        group.bench_with_input(BenchmarkId::new("kronecker", n), &n, |bench, _| {
            bench.iter(|| {
                adi_solve(
                    black_box(&a),
                    &a,
                    black_box(&rhs),
                    &SolverConfig::with_alpha(1.0),
                )
                .unwrap()
            })
        });
        let m = kronecker_sum(&a, &a).unwrap();
        let rhs_col = DenseMatrix::column(&rhs);
        group.bench_with_input(BenchmarkId::new("dense", n), &n, |bench, _| {
            bench.iter(|| solve_dense(black_box(&m), black_box(&rhs_col)).unwrap())
        });
    }
    group.finish();
}

fn kernels(c: &mut Criterion) {
    let a = unit_matrix(32, 2);
    c.bench_function("expm 32", |b| b.iter(|| expm(black_box(&a))));
    c.bench_function("eigenvalues_general 32", |b| {
        b.iter(|| eigenvalues_general(black_box(&a)).unwrap())
    });
}

criterion_group!(benches, j_hss, adi, kernels);
criterion_main!(benches);
