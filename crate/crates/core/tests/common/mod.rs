#![allow(dead_code)]

use liequot::{
    nilpotent_quotient, parse_presentation, Definition, ExprTree, Int, IntMatrix, Mode, NilpotentPresentation,
    NormalWord, Quotient, QuotientOptions,
};
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::Rng;

pub const FREE2: &str = include_str!("../../../../presentations/free2.lie");
pub const THIN_A: &str = include_str!("../../../../presentations/thin_a.lie");
pub const THIN_B: &str = include_str!("../../../../presentations/thin_b.lie");
pub const WISLICENY: &str = include_str!("../../../../presentations/wisliceny.lie");
pub const A10_POSITIVE: &str = include_str!("../../../../presentations/a10_positive.lie");

pub fn quotient(text: &str, mode: Mode, class: Option<usize>) -> Quotient {
    let fp = parse_presentation(text).unwrap();
    let mut options = QuotientOptions::new(mode);
    options.class_bound = class;
    nilpotent_quotient(&fp, &options).unwrap()
}

fn mobius(mut n: usize) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Rank of the degree-`c` component of the free Lie ring on `n` generators.
pub fn witt(n: usize, c: usize) -> usize {
    let sum: i64 = (1..=c).filter(|d| c.is_multiple_of(*d)).map(|d| mobius(d) * (n as i64).pow((c / d) as u32)).sum();
    (sum / c as i64) as usize
}

pub fn matrix(rows: &[Vec<i64>], cols: usize) -> IntMatrix {
    IntMatrix::from_rows(cols, rows.iter().map(|r| r.iter().map(|&x| Int::from(x)).collect()).collect())
}

pub fn random_matrix(rng: &mut StdRng, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    let data: Vec<Vec<i64>> = (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(-bound..=bound)).collect()).collect();
    matrix(&data, cols)
}

/// A random product of elementary unimodular matrices.
pub fn random_unimodular(rng: &mut StdRng, n: usize, steps: usize) -> IntMatrix {
    let mut u = IntMatrix::identity(n);
    if n == 0 {
        return u;
    }
    for _ in 0..steps {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        match rng.gen_range(0..4) {
            0 => u.swap_rows(a, b),
            1 => u.negate_row(a),
            _ if a != b => u.add_row_multiple(a, b, &Int::from(rng.gen_range(-3..=3))),
            _ => {}
        }
    }
    u
}

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Random bracket with `weight` generator leaves and random nesting.
pub fn random_bracket(rng: &mut StdRng, gens: usize, weight: usize) -> ExprTree {
    if weight == 1 {
        return ExprTree::Generator(rng.gen_range(0..gens));
    }
    let left = rng.gen_range(1..weight);
    ExprTree::bracket(random_bracket(rng, gens, left), random_bracket(rng, gens, weight - left))
}

/// Random sum of a few scaled brackets of weight at most `max_weight`.
pub fn random_element(rng: &mut StdRng, gens: usize, max_weight: usize) -> ExprTree {
    let terms = rng.gen_range(1..=3);
    let items: Vec<ExprTree> = (0..terms)
        .map(|_| {
            let w = rng.gen_range(1..=max_weight);
            let mut c = rng.gen_range(-3..=3);
            if c == 0 {
                c = 1;
            }
            ExprTree::multiple(c, random_bracket(rng, gens, w))
        })
        .collect();
    ExprTree::Sum(items)
}

/// Expressions over the source generators mapping onto each generator,
/// read off the definitions. `None` where the tree would exceed `limit` nodes.
pub fn definition_trees(p: &NilpotentPresentation, limit: usize) -> Vec<Option<ExprTree>> {
    let mut out: Vec<Option<ExprTree>> = Vec::with_capacity(p.num_generators());
    let size = |e: &ExprTree| tree_size(e);
    for k in 0..p.num_generators() {
        let tree = match p.definition(k) {
            Definition::Image(s) => Some(ExprTree::Generator(*s)),
            Definition::ImageCombination(terms) => Some(ExprTree::Sum(
                terms.iter().map(|(c, s)| ExprTree::Multiple(c.clone(), Box::new(ExprTree::Generator(*s)))).collect(),
            )),
            def => {
                let terms = def.bracket_terms().unwrap();
                let mut items = Vec::new();
                let mut ok = true;
                for (c, l, r) in terms {
                    match (&out[l], &out[r]) {
                        (Some(a), Some(b)) => {
                            items.push(ExprTree::Multiple(c, Box::new(ExprTree::bracket(a.clone(), b.clone()))))
                        }
                        _ => ok = false,
                    }
                }
                ok.then_some(ExprTree::Sum(items))
            }
        };
        out.push(tree.filter(|t| size(t) <= limit));
    }
    out
}

pub fn tree_size(e: &ExprTree) -> usize {
    match e {
        ExprTree::Generator(_) => 1,
        ExprTree::Multiple(_, c) => 1 + tree_size(c),
        ExprTree::Sum(cs) => 1 + cs.iter().map(tree_size).sum::<usize>(),
        ExprTree::Bracket(l, r) => 1 + tree_size(l) + tree_size(r),
    }
}

fn word_tree(w: &NormalWord, trees: &[Option<ExprTree>]) -> Option<ExprTree> {
    let mut items = Vec::new();
    for (k, c) in w.terms() {
        items.push(ExprTree::Multiple(c.clone(), Box::new(trees[*k].clone()?)));
    }
    Some(ExprTree::Sum(items))
}

/// Randomized expressions that vanish in `q` by construction.
pub fn vanishing_identities(rng: &mut StdRng, q: &Quotient, count: usize) -> Vec<(&'static str, ExprTree)> {
    let p = &q.presentation;
    let gens = q.input.generators.len();
    let class = q.class();
    let small = class.clamp(1, 3);
    let trees = definition_trees(p, 4000);
    let torsion: Vec<usize> = (0..p.num_generators())
        .filter(|&t| p.is_torsion(t) && trees[t].is_some() && word_tree(p.power(t), &trees).is_some())
        .collect();
    let relators = &q.input.relators;
    let mut out = Vec::with_capacity(count);
    for n in 0..count {
        let u = random_element(rng, gens, small);
        let v = random_element(rng, gens, small);
        let w = random_element(rng, gens, small);
        let item = match n % 5 {
            0 => (
                "jacobi",
                ExprTree::Sum(vec![
                    ExprTree::bracket(ExprTree::bracket(u.clone(), v.clone()), w.clone()),
                    ExprTree::bracket(ExprTree::bracket(v.clone(), w.clone()), u.clone()),
                    ExprTree::bracket(ExprTree::bracket(w, u), v),
                ]),
            ),
            1 => {
                ("antisymmetry", ExprTree::Sum(vec![ExprTree::bracket(u.clone(), v.clone()), ExprTree::bracket(v, u)]))
            }
            2 if !torsion.is_empty() => {
                let t = torsion[rng.gen_range(0..torsion.len())];
                let power = word_tree(p.power(t), &trees).unwrap();
                (
                    "torsion multiple",
                    ExprTree::Sum(vec![
                        ExprTree::Multiple(p.coefficient(t).clone(), Box::new(trees[t].clone().unwrap())),
                        ExprTree::multiple(-1, power),
                    ]),
                )
            }
            3 => ("above class", random_bracket(rng, gens, class + 1)),
            4 if !relators.is_empty() => {
                let r = relators[rng.gen_range(0..relators.len())].clone();
                ("relator consequence", ExprTree::bracket(ExprTree::multiple(rng.gen_range(1..=5), r), u))
            }
            _ => (
                "bilinearity",
                ExprTree::Sum(vec![
                    ExprTree::bracket(u.clone(), ExprTree::Sum(vec![v.clone(), w.clone()])),
                    ExprTree::multiple(-1, ExprTree::bracket(u.clone(), v)),
                    ExprTree::multiple(-1, ExprTree::bracket(u, w)),
                ]),
            ),
        };
        out.push(item);
    }
    out
}

/// Whether source generator `s` survives in `L / L^2`.
pub fn survives_abelianization(q: &Quotient, s: usize) -> bool {
    let p = &q.presentation;
    let image = &p.epimorphism()[s];
    image.terms().iter().any(|(k, c)| p.weight(*k) == 1 && !c.is_zero())
}
