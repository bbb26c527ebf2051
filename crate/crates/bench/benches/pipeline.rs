use std::hint::black_box;
use std::time::Duration;

use criterion::{criterion_group, criterion_main, Criterion};
use fano212_bench::{involution_instance, order_eight_instance};
use fano212_core::chars::{curve_action_oracle, ij_oracle};
use fano212_core::coh::koszul_cohomology_on_x;
use fano212_core::model::{determinantal_quartic, full_smoothness, minor_cubics, Side};
use fano212_core::polyalg::hilbert_polynomial;
use fano212_core::CyclotomicField;

fn arithmetic(c: &mut Criterion) {
    let field = CyclotomicField::new(24);
    let a = &field.root_of_unity(5) + &field.int(3);
    let b = &field.root_of_unity(7) - &field.int(2);
    let mut group = c.benchmark_group("cyclotomic_24");
    group.bench_function("mul", |bch| bch.iter(|| black_box(&a) * black_box(&b)));
    group.bench_function("inv", |bch| bch.iter(|| black_box(&a).inv().unwrap()));
    group.finish();
}

fn geometry(c: &mut Criterion) {
    let (spec, model, pencil) = order_eight_instance();
    let small = involution_instance();
    let r = spec.all_weights();
    let mut group = c.benchmark_group("order_8_swap");
    group.bench_function("determinantal_quartic", |b| b.iter(|| determinantal_quartic(black_box(&model)).unwrap()));
    group.bench_function("curve_action_oracle", |b| b.iter(|| curve_action_oracle(black_box(&pencil), &r, 8).unwrap()));
    group.bench_function("ij_oracle", |b| b.iter(|| ij_oracle(black_box(&pencil), &r, 8, true).unwrap()));
    group.sample_size(10).measurement_time(Duration::from_secs(10));
    group.bench_function("hilbert_polynomial", |b| {
        b.iter(|| hilbert_polynomial(&minor_cubics(black_box(&model), Side::First).unwrap()).unwrap())
    });
    group.finish();

    let mut group = c.benchmark_group("involution");
    group.sample_size(10).measurement_time(Duration::from_secs(10));
    group.bench_function("full_smoothness", |b| b.iter(|| full_smoothness(black_box(&small)).unwrap()));
    group.finish();
}

fn cohomology(c: &mut Criterion) {
    c.bench_function("koszul_cohomology_on_x", |b| {
        b.iter(|| {
            for (a, bb) in [(0, 0), (-1, 0), (-1, -1), (0, -1)] {
                black_box(koszul_cohomology_on_x(a, bb).unwrap());
            }
        })
    });
}

criterion_group!(benches, arithmetic, geometry, cohomology);
criterion_main!(benches);
