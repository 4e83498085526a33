//! Benchmarks for the pipeline stages: complex construction plus homology,
//! full table sweeps, the counting-only invariants, and a fuzz batch.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use pilehom::{
    betti_table, fuzz_duality, highest_syzygy, make_weights, partition_count, pile_complex,
    reduced_betti_dims, veronese_generators, FieldSpec, FuzzConfig, GeneratorSet, Method,
    MultiDegree, TableOptions,
};

fn surface() -> GeneratorSet {
    let weights = make_weights(&[1, 1, 1]).unwrap();
    veronese_generators(&weights, 2).unwrap()
}

fn bench_pile_homology(c: &mut Criterion) {
    let set = surface();
    let degree = MultiDegree::new(vec![2, 2, 2]);
    c.bench_function("pile_homology_surface_222", |b| {
        b.iter(|| {
            let complex = pile_complex(black_box(&set), black_box(&degree)).unwrap();
            reduced_betti_dims(&complex, &FieldSpec::Rationals)
        })
    });
}

fn bench_betti_table(c: &mut Criterion) {
    let set = surface();
    c.bench_function("betti_table_surface_both", |b| {
        b.iter(|| {
            betti_table(
                black_box(&set),
                &FieldSpec::Rationals,
                Method::Both,
                &TableOptions::default(),
            )
            .unwrap()
        })
    });
}

fn bench_highest_syzygy(c: &mut Criterion) {
    let weights = make_weights(&[3, 3, 3, 2, 2, 2, 2]).unwrap();
    c.bench_function("highest_syzygy_3332222_d1", |b| {
        b.iter(|| highest_syzygy(black_box(&weights), black_box(1)).unwrap())
    });
}

fn bench_partition_count(c: &mut Criterion) {
    let weights = [3, 2, 1, 1, 1, 1, 1, 1];
    c.bench_function("partition_count_32111111_k671", |b| {
        b.iter(|| partition_count(black_box(&weights), black_box(671)).unwrap())
    });
}

fn bench_duality_fuzz(c: &mut Criterion) {
    let config = FuzzConfig {
        trials: 8,
        ..FuzzConfig::default()
    };
    c.bench_function("duality_fuzz_8_trials", |b| {
        b.iter(|| fuzz_duality(black_box(&config)).unwrap())
    });
}

criterion_group!(
    benches,
    bench_pile_homology,
    bench_betti_table,
    bench_highest_syzygy,
    bench_partition_count,
    bench_duality_fuzz
);
criterion_main!(benches);
