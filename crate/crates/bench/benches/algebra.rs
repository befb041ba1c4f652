use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use skein_bench::{full_twist, partition};
use skein_core::hecke::{a_n, e_lambda};
use skein_core::partitions::{schur_expand, schur_h};

fn hecke_mul(c: &mut Criterion) {
    let mut group = c.benchmark_group("hecke_mul");
    group.sample_size(10);
    for n in [3, 4, 5] {
        let a = a_n(n);
        let t = full_twist(n);
        group.bench_with_input(BenchmarkId::new("a_n * twist", n), &n, |b, _| b.iter(|| black_box(&a).mul(black_box(&t))));
    }
    group.finish();
}

fn idempotents(c: &mut Criterion) {
    let mut group = c.benchmark_group("e_lambda");
    group.sample_size(10);
    for shape in ["2,1", "3,1", "2,2", "3,2"] {
        let l = partition(shape);
        group.bench_with_input(BenchmarkId::from_parameter(shape), &l, |b, l| b.iter(|| e_lambda(black_box(l))));
    }
    group.finish();
}

fn symmetric_functions(c: &mut Criterion) {
    let l = partition("3,2,1");
    let m = partition("2,1");
    let product = &schur_h(&l) * &schur_h(&m);
    c.bench_function("schur_h 4,3,2,1", |b| b.iter(|| schur_h(black_box(&partition("4,3,2,1")))));
    c.bench_function("schur_expand (3,2,1)x(2,1)", |b| b.iter(|| schur_expand(black_box(&product), 9)));
}

criterion_group!(benches, hecke_mul, idempotents, symmetric_functions);
criterion_main!(benches);
