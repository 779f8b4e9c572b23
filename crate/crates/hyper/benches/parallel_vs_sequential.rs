//! Compares the rayon-backed census and suite sweeps against the
//! sequential fallbacks on the same inputs.

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use hyperlab_hyper::{census, census_seq, check_hypergroup, CensusSuite, Hypermagma};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

fn census_order_three(c: &mut Criterion) {
    let mut group = c.benchmark_group("census_order_3_hypergroup");
    group.bench_function("sequential", |b| {
        b.iter(|| census_seq(3, CensusSuite::Hypergroup).unwrap())
    });
    group.bench_function("parallel", |b| {
        b.iter(|| census(3, CensusSuite::Hypergroup).unwrap())
    });
    group.finish();
}

fn suite_sweep(c: &mut Criterion) {
    let tables: Vec<Hypermagma> = census_seq(3, CensusSuite::Hypersemigroup).unwrap();
    let mut group = c.benchmark_group("hypergroup_sweep_over_census_3");
    group.bench_function("sequential", |b| {
        b.iter_batched(
            || tables.clone(),
            |tables| {
                tables
                    .iter()
                    .filter(|h| check_hypergroup(h).unwrap().report.passed())
                    .count()
            },
            BatchSize::SmallInput,
        )
    });
    #[cfg(feature = "parallel")]
    group.bench_function("parallel", |b| {
        b.iter_batched(
            || tables.clone(),
            |tables| {
                tables
                    .par_iter()
                    .filter(|h| check_hypergroup(h).unwrap().report.passed())
                    .count()
            },
            BatchSize::SmallInput,
        )
    });
    group.finish();
}

criterion_group!(benches, census_order_three, suite_sweep);
criterion_main!(benches);
