use criterion::{criterion_group, criterion_main, Criterion};
use mod2cohom::{verify_relations, BarComplex, FgAbGroup, FiniteGroup, DEFAULT_BAR_BUDGET_BYTES};
use std::hint::black_box;

fn bench_differential_matrix(c: &mut Criterion) {
    let complex = BarComplex::new(FiniteGroup::new(vec![2, 4]).unwrap());
    c.bench_function("bar_differential_matrix_deg3_order8", |b| {
        b.iter(|| black_box(complex.differential_matrix(3).unwrap()))
    });
}

fn bench_cohomology_dim(c: &mut Criterion) {
    let complex = BarComplex::new(FiniteGroup::new(vec![8]).unwrap());
    c.bench_function("bar_cohomology_dim_deg3_order8", |b| {
        b.iter(|| black_box(complex.cohomology_dim(3).unwrap()))
    });
}

fn bench_verify_relations(c: &mut Criterion) {
    let a = FgAbGroup::parse("Z/2 x Z/4").unwrap();
    c.bench_function("bar_verify_relations_deg3", |b| {
        b.iter(|| black_box(verify_relations(&a, 3, DEFAULT_BAR_BUDGET_BYTES).unwrap()))
    });
}

criterion_group!(
    benches,
    bench_differential_matrix,
    bench_cohomology_dim,
    bench_verify_relations
);
criterion_main!(benches);
