use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use liequot::intmat::{row_hermite, smith};
use liequot_bench::random_matrix;

fn normal_forms(c: &mut Criterion) {
    let mut group = c.benchmark_group("normal_forms");
    for n in [5, 10, 20, 40] {
        let m = random_matrix(n as u64, n, n, 100);
        group.bench_with_input(BenchmarkId::new("hermite", n), &m, |b, m| b.iter(|| row_hermite(m)));
        group.bench_with_input(BenchmarkId::new("smith", n), &m, |b, m| b.iter(|| smith(m)));
    }
    group.finish();
}

criterion_group!(benches, normal_forms);
criterion_main!(benches);
