use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use liequot::{nilpotent_quotient, parse_presentation, Mode, QuotientOptions};
use liequot_bench::{A10_POSITIVE, FREE2, THIN_A, THIN_B, WISLICENY};

fn quotients(c: &mut Criterion) {
    let cases = [
        ("free2", FREE2, Mode::Plain, 10),
        ("free2", FREE2, Mode::Graded, 12),
        ("thin_a", THIN_A, Mode::Plain, 14),
        ("thin_a", THIN_A, Mode::Canonical, 14),
        ("thin_b", THIN_B, Mode::Canonical, 12),
        ("wisliceny", WISLICENY, Mode::Plain, 7),
        ("wisliceny", WISLICENY, Mode::Canonical, 30),
        ("a10_positive", A10_POSITIVE, Mode::Canonical, 10),
    ];
    let mut group = c.benchmark_group("nilpotent_quotient");
    group.sample_size(10);
    for (name, text, mode, class) in cases {
        let fp = parse_presentation(text).unwrap();
        let options = QuotientOptions::new(mode).class_bound(class);
        group.bench_with_input(BenchmarkId::new(format!("{name}/{mode}"), class), &options, |b, options| {
            b.iter(|| nilpotent_quotient(&fp, options).unwrap())
        });
    }
    group.finish();
}

fn verification(c: &mut Criterion) {
    let fp = parse_presentation(THIN_A).unwrap();
    let q = nilpotent_quotient(&fp, &QuotientOptions::new(Mode::Plain).class_bound(14)).unwrap();
    c.bench_function("verify/thin_a/plain/14", |b| b.iter(|| q.verify().unwrap()));
}

criterion_group!(benches, quotients, verification);
criterion_main!(benches);
