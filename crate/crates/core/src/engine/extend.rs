use std::collections::HashSet;

use num_traits::One;

use super::PendingLayer;
use crate::error::{Error, Result};
use crate::int::Int;
use crate::presentation::{Definition, NilpotentPresentation};
use crate::word::NormalWord;

/// Where a pending generator came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Origin {
    /// Tail of the image of a source generator.
    Image(usize),
    /// Tail of the torsion relation of `a_i`.
    Power(usize),
    /// Tail of the product `[a_j, a_i]`, `i` of weight one.
    Product(usize, usize),
}

/// Appends the central generators of the next class.
///
/// Plain mode adds a tail to every epimorphic image that is not a definition,
/// to every torsion relation and to every product `[a_j, a_i]` with `a_i` of
/// weight one that is not a definition. Graded modes only add tails for the
/// products of the top layer with weight one. Products `[a_j, a_i]` with
/// `weight(a_j)` equal to the current class are numbered last, so Hermite
/// elimination removes every other pending generator first.
pub fn extend_presentation(p: &mut NilpotentPresentation) -> PendingLayer {
    let old = p.num_generators();
    let class = p.class() + 1;
    let graded = p.mode().is_graded();
    let mut origins = Vec::new();

    let image_defs: HashSet<usize> =
        p.definitions.iter().filter_map(|d| if let Definition::Image(s) = d { Some(*s) } else { None }).collect();
    let bracket_defs: HashSet<(usize, usize)> = p
        .definitions
        .iter()
        .filter_map(|d| if let Definition::Bracket { left, right } = d { Some((*left, *right)) } else { None })
        .collect();

    if class == 1 {
        origins.extend((0..p.source.len()).map(Origin::Image));
    } else if !graded {
        origins.extend((0..p.source.len()).filter(|s| !image_defs.contains(s)).map(Origin::Image));
        origins.extend((0..old).filter(|&i| p.is_torsion(i)).map(Origin::Power));
        let top = class - 1;
        for j in 0..old {
            if p.weights[j] >= top {
                break;
            }
            for i in p.layer(1).take_while(|&i| i < j) {
                if !bracket_defs.contains(&(j, i)) {
                    origins.push(Origin::Product(j, i));
                }
            }
        }
    }
    let candidates_from = if class == 1 { 0 } else { origins.len() };
    if class > 1 {
        for j in p.layer(class - 1) {
            for i in p.layer(1).take_while(|&i| i < j) {
                origins.push(Origin::Product(j, i));
            }
        }
    }

    for origin in &origins {
        let k = p.push_generator(class, Definition::Image(0));
        match *origin {
            Origin::Image(s) => p.epimorphism[s].push_generator(k),
            Origin::Power(i) => p.powers[i].push_generator(k),
            Origin::Product(j, i) => p.products[j][i].push_generator(k),
        }
    }
    PendingLayer { old, class, origins, candidates_from }
}

/// Recomputes the products `[a_j, a_i]` with `weight(a_i) > 1` from the
/// definition `a_i = Σ c*[a_k, a_l]`:
/// `[a_j, a_i] = Σ c*([a_j, a_k, a_l] - [a_j, a_l, a_k])`.
///
/// Pairs are processed by increasing `i`, so every product used on the right
/// has a second factor of smaller weight and is already up to date.
pub fn compute_tails(p: &mut NilpotentPresentation, layer: &PendingLayer) -> Result<()> {
    let graded = p.mode().is_graded();
    let class = layer.class;
    for i in 0..layer.old {
        let wi = p.weights[i];
        if wi < 2 {
            continue;
        }
        let def = p.definitions[i]
            .bracket_terms()
            .ok_or_else(|| Error::Internal(format!("a{} of weight {wi} has no bracket definition", i + 1)))?;
        for j in i + 1..layer.old {
            let total = p.weights[j] + wi;
            if total > class {
                break;
            }
            if graded && total != class {
                continue;
            }
            let mut acc = Vec::new();
            for (coef, k, l) in &def {
                let jk = bracket_of_generators(p, j, *k);
                p.push_bracket(&jk, &NormalWord::generator(*l), coef, &mut acc);
                let jl = bracket_of_generators(p, j, *l);
                p.push_bracket(&jl, &NormalWord::generator(*k), &-coef, &mut acc);
            }
            let value = p.collect(acc);
            p.products[j][i] = value;
        }
    }
    Ok(())
}

pub(crate) fn bracket_of_generators(p: &NilpotentPresentation, j: usize, i: usize) -> NormalWord {
    let mut acc = Vec::new();
    p.push_bracket_generators(j, i, &Int::one(), &mut acc);
    p.collect(acc)
}
