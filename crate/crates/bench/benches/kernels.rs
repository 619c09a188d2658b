use criterion::{black_box, criterion_group, criterion_main, BatchSize, BenchmarkId, Criterion};

use aci_bench::{field_matrix, PRIME};
use aci_core::brill::brill_minor;
use aci_core::resolution::{check_complex, minor_product_signs, rank_vote};
use aci_core::{build, generic_skew, IndexSet, Parity, SubsetPoset, Variant};

fn pfaffians(c: &mut Criterion) {
    let mut g = c.benchmark_group("pfaffian");
    for n in [6, 8, 10] {
        g.bench_with_input(BenchmarkId::new("symbolic", n), &n, |b, &n| {
            b.iter_batched(|| generic_skew(n), |x| x.pfaffian(), BatchSize::SmallInput)
        });
    }
    for n in [10, 14] {
        g.bench_with_input(BenchmarkId::new("mod p", n), &n, |b, &n| {
            b.iter_batched(|| field_matrix(n), |m| m.pfaffian(), BatchSize::SmallInput)
        });
    }
    g.finish();
}

fn brill(c: &mut Criterion) {
    let mut g = c.benchmark_group("brill-minor");
    let (rows, cols) = (IndexSet::from([1, 2, 3, 4]), IndexSet::from([2, 4, 5, 7]));
    g.bench_function("symbolic n=7 size 4", |b| {
        b.iter_batched(|| generic_skew(7), |x| brill_minor(&x, black_box(rows), black_box(cols)), BatchSize::SmallInput)
    });
    let (rows, cols) = (IndexSet::from([1, 2, 3, 5, 8]), IndexSet::from([2, 3, 4, 6, 9]));
    g.bench_function("mod p n=9 size 5", |b| {
        b.iter_batched(|| field_matrix(9), |m| brill_minor(&m, black_box(rows), black_box(cols)), BatchSize::SmallInput)
    });
    g.finish();
}

fn resolution(c: &mut Criterion) {
    let mut g = c.benchmark_group("resolution");
    g.sample_size(10);
    for n in [5, 6, 7, 8] {
        let parity = Parity::of(n);
        g.bench_with_input(BenchmarkId::new("build+check", n), &n, |b, &n| {
            b.iter(|| check_complex(&build(n, parity, Variant::Generic).unwrap()))
        });
        let cx = build(n, parity, Variant::Generic).unwrap();
        g.bench_with_input(BenchmarkId::new("rank vote", n), &cx, |b, cx| {
            b.iter(|| rank_vote(cx, &[0, 1, 2, 3, 4], PRIME))
        });
    }
    let cx = build(6, Parity::Even, Variant::Generic).unwrap();
    g.bench_function("minor products n=6", |b| b.iter(|| minor_product_signs(&cx)));
    g.finish();
}

fn poset(c: &mut Criterion) {
    let mut g = c.benchmark_group("poset");
    g.sample_size(10);
    for n in [6, 9, 12] {
        g.bench_with_input(BenchmarkId::new("spinor", n), &n, |b, &n| b.iter(|| SubsetPoset::spinor(n)));
    }
    g.finish();
}

criterion_group!(benches, pfaffians, brill, resolution, poset);
criterion_main!(benches);
