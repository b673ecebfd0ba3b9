//! Criterion benches comparing the data-parallel battery path against the
//! sequential reference on representative workloads. Placeholder until the
//! batteries exist; filled in alongside the acceptance suite.

use criterion::{criterion_group, criterion_main, Criterion};

fn bench_placeholder(c: &mut Criterion) {
    c.bench_function("noop", |b| b.iter(|| 1 + 1));
}

criterion_group!(benches, bench_placeholder);
criterion_main!(benches);
