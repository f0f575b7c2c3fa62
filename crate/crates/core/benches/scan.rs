//! Parallel and sequential proportionality scans. Character values are
//! memoised process-wide, so after warm-up both variants time table assembly
//! and the pairwise proportionality tests.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use spinbrauer::charvalues::{scan, scan_sequential};

fn bench_scan(c: &mut Criterion) {
    let mut g = c.benchmark_group("scan");
    g.sample_size(20);
    for n in [10usize, 12, 14] {
        g.bench_with_input(BenchmarkId::new("parallel", n), &n, |b, &n| b.iter(|| scan(n).unwrap()));
        g.bench_with_input(BenchmarkId::new("sequential", n), &n, |b, &n| {
            b.iter(|| scan_sequential(n).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, bench_scan);
criterion_main!(benches);
