use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use riordan::bexpand::bcomp_matrix;
use riordan::matrix_log::{bell_log, l_matrix};
use riordan_bench::{rna_b_function, rna_series, x_rna};

fn bcomp(c: &mut Criterion) {
    let b = rna_b_function(64);
    let mut group = c.benchmark_group("bcomp_matrix");
    group.sample_size(10);
    for rows in [16, 32, 64] {
        group.bench_function(format!("1/(1-x), {rows} rows"), |bench| {
            bench.iter(|| bcomp_matrix(black_box(&b), rows).unwrap())
        });
    }
    group.finish();
}

fn series_ops(c: &mut Criterion) {
    let f = x_rna(48);
    c.bench_function("revert x R(x), order 48", |b| {
        b.iter(|| black_box(&f).revert().unwrap())
    });
    let g = rna_series(24);
    c.bench_function("bell_log R, order 24", |b| {
        b.iter(|| bell_log(black_box(&g), 24).unwrap())
    });
    c.bench_function("l_matrix R, order 24", |b| {
        b.iter(|| l_matrix(black_box(&g), 24).unwrap())
    });
}

criterion_group!(benches, bcomp, series_ops);
criterion_main!(benches);
