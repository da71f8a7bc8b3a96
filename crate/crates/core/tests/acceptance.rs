//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

mod common;

use std::time::{Duration, Instant};

use common::*;
use liequot::intmat::{row_hermite, smith};
use liequot::{ExprTree, Int, IntMatrix, LcsFactor, Mode, Quotient};
use num_integer::Integer;
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

struct Report {
    failures: usize,
}

impl Report {
    fn check(&mut self, id: &str, ok: bool, detail: String) {
        println!("{} criterion {id}: {detail}", if ok { "PASS" } else { "FAIL" });
        if !ok {
            self.failures += 1;
        }
    }

    fn note(&self, id: &str, detail: String) {
        println!("INFO criterion {id}: {detail}");
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn counts(q: &Quotient) -> (usize, usize) {
    (q.presentation.num_generators(), q.presentation.torsion_rank())
}

fn witt_dims(class: usize) -> Vec<usize> {
    (1..=class).map(|c| witt(2, c)).collect()
}

fn factor(torsion: &[i64], free_rank: usize) -> LcsFactor {
    LcsFactor { torsion: torsion.iter().map(|&t| Int::from(t)).collect(), free_rank }
}

fn label(q: &Quotient) -> String {
    format!("{} mode, class {}", q.presentation.mode(), q.class())
}

fn main() {
    let mut report = Report { failures: 0 };
    let mut computed: Vec<(&str, Quotient)> = Vec::new();

    // 1. Free Lie ring on two generators, plain mode, class 10.
    let (l1, t) = timed(|| quotient(FREE2, Mode::Plain, Some(10)));
    report.check(
        "1",
        counts(&l1) == (226, 0) && l1.dimensions() == witt_dims(10) && t < Duration::from_secs(60),
        format!(
            "L1 plain class 10: {:?} generators/torsion (want (226, 0)), dimensions {:?}, {:.2?}",
            counts(&l1),
            l1.dimensions(),
            t
        ),
    );
    computed.push(("L1", l1));

    // 2. Graded, class 12: Witt dimensions for every class.
    let l1g = quotient(FREE2, Mode::Graded, Some(12));
    let total: usize = l1g.dimensions().iter().sum();
    report.check(
        "2",
        l1g.dimensions() == witt_dims(12),
        format!("L1 graded class 12: dimensions {:?}, total {total} (Witt total 747)", l1g.dimensions()),
    );
    computed.push(("L1", l1g));

    // 3. Positive part of A10: stabilizes at class 10 with free layers 10, 9, ..., 1.
    let expected: Vec<LcsFactor> = (1..=10).rev().map(LcsFactor::free).collect();
    for mode in [Mode::Graded, Mode::Canonical] {
        let l5 = quotient(A10_POSITIVE, mode, None);
        report.check(
            "3",
            l5.stabilized && l5.class() == 10 && counts(&l5) == (55, 0) && l5.lcs_structure() == expected,
            format!(
                "L5 {mode} unbounded: stabilized {} at class {}, {:?} generators/torsion (want (55, 0))",
                l5.stabilized,
                l5.class(),
                counts(&l5)
            ),
        );
        computed.push(("L5", l5));
    }
    let l5p = quotient(A10_POSITIVE, Mode::Plain, Some(6));
    report.check("3", counts(&l5p) == (45, 0), format!("L5 plain class 6: {:?} (want (45, 0))", counts(&l5p)));
    computed.push(("L5", l5p));

    // 4. L2. The graded counts tabulated for this ring are those of Smith-reduced
    // layers, so they are checked in canonical mode.
    let l2c = quotient(THIN_A, Mode::Canonical, Some(14));
    report.check("4", counts(&l2c) == (57, 38), format!("L2 canonical class 14: {:?} (want (57, 38))", counts(&l2c)));
    let l2g = quotient(THIN_A, Mode::Graded, Some(14));
    report.note("4", format!("L2 graded (Hermite) class 14: {:?}", counts(&l2g)));
    let l2p = quotient(THIN_A, Mode::Plain, Some(14));
    report.check("4", counts(&l2p) == (89, 70), format!("L2 plain class 14: {:?} (want (89, 70))", counts(&l2p)));
    let agree = (1..=8).all(|c| l2p.lcs_structure()[c - 1] == l2g.lcs_structure()[c - 1]);
    report.check("4", agree, "L2 plain and graded lower central factors agree through class 8".into());
    computed.push(("L2", l2c));
    computed.push(("L2", l2g));
    computed.push(("L2", l2p));

    // 5. L3, class 12.
    for mode in [Mode::Graded, Mode::Canonical] {
        let l3 = quotient(THIN_B, mode, Some(12));
        report.check("5", counts(&l3) == (81, 63), format!("L3 {mode} class 12: {:?} (want (81, 63))", counts(&l3)));
        computed.push(("L3", l3));
    }

    // 6. L4.
    let l4p = quotient(WISLICENY, Mode::Plain, Some(7));
    report.check("6", counts(&l4p) == (51, 22), format!("L4 plain class 7: {:?} (want (51, 22))", counts(&l4p)));
    computed.push(("L4", l4p));
    let l4g = quotient(WISLICENY, Mode::Graded, Some(16));
    let lcs = l4g.lcs_structure();
    let want = |i: usize| if i.is_multiple_of(2) { factor(&[(i / 2) as i64], 3) } else { LcsFactor::free(5) };
    // Literal reading: index i describes L^{i+1}/L^{i+2}.
    let literal: Vec<usize> = (4..=14).filter(|&i| lcs[i] != want(i)).collect();
    report.check(
        "6",
        literal.is_empty(),
        format!(
            "L4 graded, L^(i+1)/L^(i+2) for i = 4..14: mismatches at i = {literal:?}; e.g. i = 4 gives {} (want {})",
            lcs[4],
            want(4)
        ),
    );
    // Shifted reading: index i describes L^i/L^(i+1).
    let shifted: Vec<usize> = (3..=16).filter(|&i| lcs[i - 1] != want(i)).collect();
    report.note(
        "6",
        format!("L4 graded, L^i/L^(i+1) for i = 3..16: mismatches at i = {shifted:?}; e.g. i = 4 gives {}", lcs[3]),
    );
    computed.push(("L4", l4g));

    // 7. Smith form of a single row is its gcd.
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut bad = 0;
    for _ in 0..100 {
        let n = rng.gen_range(1..=12);
        let row: Vec<i64> = (0..n).map(|_| rng.gen_range(-10_000..=10_000)).collect();
        let g = row.iter().fold(0, |g, &x| gcd_i64(g, x));
        let d = smith(&matrix(std::slice::from_ref(&row), n)).diagonal();
        if d[0] != Int::from(g) || d[1..].iter().any(|x| !x.is_zero()) {
            bad += 1;
        }
    }
    report.check("7", bad == 0, format!("100 random rows reduce to (gcd, 0, ..., 0); {bad} mismatches"));

    // 8. Integer matrix property suite.
    let (bad, t) = timed(|| {
        let mut bad = 0;
        for _ in 0..500 {
            let (rows, cols) = (rng.gen_range(1..=20), rng.gen_range(1..=20));
            let m = random_matrix(&mut rng, rows, cols, 100);
            let r = smith(&m);
            let d = r.diagonal();
            let chain = d.windows(2).all(|w| w[1].is_zero() || (!w[0].is_zero() && w[1].is_multiple_of(&w[0])));
            let inverse = &r.q * &r.q_inv == IntMatrix::identity(cols) && &r.q_inv * &r.q == IntMatrix::identity(cols);
            let s_rows: Vec<Vec<Int>> =
                r.s.row_vecs().into_iter().filter(|row| row.iter().any(|x| !x.is_zero())).collect();
            let hermite = row_hermite(&(&m * &r.q)) == IntMatrix::from_rows(cols, s_rows);
            let u = random_unimodular(&mut rng, rows, 3 * rows);
            let v = random_unimodular(&mut rng, cols, 3 * cols);
            let scrambled = smith(&(&(&u * &m) * &v)).diagonal() == d;
            if !(r.s.is_diagonal() && chain && inverse && hermite && scrambled) {
                bad += 1;
            }
        }
        bad
    });
    report.check(
        "8",
        bad == 0 && t < Duration::from_secs(30),
        format!("500 random matrices up to 20x20: {bad} failures, {t:.2?} (limit 30 s)"),
    );

    // 9. Consistency of every computed quotient.
    for (name, q) in &computed {
        let result = q.verify();
        report.check(
            "9",
            result.is_ok(),
            format!("{name} {}: Jacobi, torsion compatibility, definitions, relators: {result:?}", label(q)),
        );
    }

    // 10. Word problem on randomized identities and on the source generators.
    for (name, q) in &computed {
        let identities = vanishing_identities(&mut rng, q, 50);
        let wrong: Vec<&str> =
            identities.iter().filter(|(_, e)| !q.is_zero(e).unwrap()).map(|(kind, _)| *kind).collect();
        let gens = q.input.generators.len();
        let nonzero =
            (0..gens).filter(|&s| survives_abelianization(q, s)).all(|s| !q.is_zero(&ExprTree::Generator(s)).unwrap());
        report.check(
            "10",
            wrong.is_empty() && nonzero,
            format!(
                "{name} {}: {} identities, nonzero ones {wrong:?}; source generators nonzero: {nonzero}",
                label(q),
                identities.len()
            ),
        );
    }

    // 11. Transformer diagnostic on L3's class-10 layer.
    let l3 = quotient(THIN_B, Mode::Canonical, Some(10));
    let entry = l3.layers[9].max_transformer_entry.clone();
    report.check(
        "11",
        entry.is_some(),
        format!(
            "L3 canonical class-10 layer: max transformer entry {}",
            entry.map_or("missing".to_string(), |e| e.to_string())
        ),
    );

    println!("{} failure(s)", report.failures);
    if report.failures > 0 {
        std::process::exit(1);
    }
}
