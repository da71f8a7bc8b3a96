use num_traits::{One, Zero};

use super::extend::bracket_of_generators;
use crate::int::Int;
use crate::presentation::{Definition, NilpotentPresentation};
use crate::word::NormalWord;

/// Checks that `p` is consistent: every stored word is normal, every torsion
/// relation is compatible with every product, the Jacobi identity holds for
/// every triple of generators and every definition collects to its generator.
///
/// Triples whose weights add up to more than the class are skipped once the
/// grading check has passed, since all their brackets are then zero.
pub fn check_consistency(p: &NilpotentPresentation) -> Result<(), String> {
    p.check_structure()?;
    let n = p.num_generators();
    let class = p.class();
    let normal = |w: &NormalWord| p.collect(w.terms().to_vec()) == *w;
    for j in 0..n {
        if !normal(&p.powers[j]) {
            return Err(format!("power word of a{} is not normal", j + 1));
        }
        for i in 0..j {
            if !normal(&p.products[j][i]) {
                return Err(format!("[a{}, a{}] is not normal", j + 1, i + 1));
            }
        }
    }
    for (s, w) in p.epimorphism.iter().enumerate() {
        if !normal(w) {
            return Err(format!("image of {} is not normal", p.source[s]));
        }
    }

    let minus_one = -Int::one();
    for j in (0..n).filter(|&j| p.is_torsion(j)) {
        for i in 0..n {
            let mut acc = Vec::new();
            p.push_bracket_generators(j, i, &p.coefficients[j], &mut acc);
            p.push_bracket(&p.powers[j], &NormalWord::generator(i), &minus_one, &mut acc);
            if !p.collect(acc).is_zero() {
                return Err(format!("torsion of a{} is incompatible with a{}", j + 1, i + 1));
            }
        }
    }

    let one = Int::one();
    for i in 0..n {
        for j in i + 1..n {
            if p.weights[i] + p.weights[j] + p.weights[j] > class {
                break;
            }
            let ij = bracket_of_generators(p, i, j);
            for k in j + 1..n {
                if p.weights[i] + p.weights[j] + p.weights[k] > class {
                    break;
                }
                let jk = bracket_of_generators(p, j, k);
                let ki = bracket_of_generators(p, k, i);
                let mut acc = Vec::new();
                p.push_bracket(&ij, &NormalWord::generator(k), &one, &mut acc);
                p.push_bracket(&jk, &NormalWord::generator(i), &one, &mut acc);
                p.push_bracket(&ki, &NormalWord::generator(j), &one, &mut acc);
                if !p.collect(acc).is_zero() {
                    return Err(format!("Jacobi identity fails for a{}, a{}, a{}", i + 1, j + 1, k + 1));
                }
            }
        }
    }

    for k in 0..n {
        if definition_value(p, &p.definitions[k]) != NormalWord::generator(k) {
            return Err(format!("definition of a{} does not collect to a{}", k + 1, k + 1));
        }
    }
    Ok(())
}

/// The collected value of a definition in `p`.
pub fn definition_value(p: &NilpotentPresentation, def: &Definition) -> NormalWord {
    let mut acc = Vec::new();
    match def {
        Definition::Image(s) => return p.epimorphism[*s].clone(),
        Definition::ImageCombination(terms) => {
            for (c, s) in terms {
                acc.extend(p.epimorphism[*s].terms().iter().map(|(k, a)| (*k, a * c)));
            }
        }
        _ => {
            for (c, l, r) in def.bracket_terms().unwrap_or_default() {
                if !c.is_zero() {
                    p.push_bracket_generators(l, r, &c, &mut acc);
                }
            }
        }
    }
    p.collect(acc)
}
