//! The per-column Z_N recurrence is the performance-sensitive workload:
//! O(N^2) rescaled exponentials per column.

use criterion::{criterion_group, criterion_main, Criterion};

use partitions::finite::{fugacity_at_saddle, zn_recurrence, RecurrenceConfig};
use partitions::thermo::Dimension;

fn bench_recurrence(c: &mut Criterion) {
    let x = fugacity_at_saddle(Dimension::D2, 1e4).unwrap();
    c.bench_function("zn_recurrence d2 n=1e4 column N=500", |b| {
        let cfg = RecurrenceConfig::new(2, x, 500);
        b.iter(|| zn_recurrence(&cfg).unwrap().ln_z[500])
    });
    c.bench_function("plane_series n=300", |b| {
        b.iter(|| partitions::exact::plane_series(300).pop().unwrap())
    });
}

criterion_group!(benches, bench_recurrence);
criterion_main!(benches);
