use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use skein_bench::{braid, full_twist};
use skein_core::annulus::ClosureExpander;
use skein_core::trace::{homfly, meridian};
use skein_core::HeckeElement;

fn traces(c: &mut Criterion) {
    let mut group = c.benchmark_group("homfly");
    group.sample_size(10);
    for n in [3, 4, 5] {
        let t = full_twist(n);
        group.bench_with_input(BenchmarkId::new("full twist", n), &t, |b, t| b.iter(|| homfly(black_box(t))));
    }
    let knot = braid("1 -2 1 -2", 3);
    group.bench_function("figure eight", |b| b.iter(|| homfly(black_box(&knot))));
    group.finish();
}

fn meridians(c: &mut Criterion) {
    let mut group = c.benchmark_group("meridian");
    group.sample_size(10);
    for n in [2, 3, 4] {
        let t = full_twist(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &t, |b, t| b.iter(|| meridian(black_box(t))));
    }
    group.finish();
}

fn expansions(c: &mut Criterion) {
    let mut group = c.benchmark_group("expand_closure");
    group.sample_size(10);
    for n in [2, 3, 4] {
        let e = ClosureExpander::new(n).unwrap();
        let x = HeckeElement::identity(n);
        group.bench_with_input(BenchmarkId::new("identity", n), &x, |b, x| b.iter(|| e.expand(black_box(x))));
    }
    group.finish();
}

criterion_group!(benches, traces, meridians, expansions);
criterion_main!(benches);
