//! Canonical layers: Smith normal form of the relations of a new layer.
//!
//! With `S = P·M·Q`, the pending generators `x` are replaced by `a = Q⁻¹·x`.
//! The relations become `d_k·a_k = 0`; generators with `d_k = 1` vanish and
//! the others are kept, torsion first (by increasing order) and free last.

use num_traits::{One, Zero};

use crate::engine::eliminate::{check_layer, substitute, truncate};
use crate::engine::{LayerOutcome, Origin, PendingLayer};
use crate::error::{Error, Result};
use crate::int::Int;
use crate::intmat::IntMatrix;
use crate::intmat::{max_transformer_entry, row_hermite, smith};
use crate::presentation::{Definition, Mode, NilpotentPresentation};

/// Replaces the pending layer by its canonical form under the relation
/// matrix `m`.
pub fn canonicalize_layer(p: &mut NilpotentPresentation, layer: &PendingLayer, m: &IntMatrix) -> Result<LayerOutcome> {
    if p.mode() != Mode::Canonical {
        return Err(Error::NotCanonical);
    }
    check_layer(p, layer, m)?;
    let s = layer.origins.len();
    let snf = smith(&row_hermite(m));
    let diag: Vec<Int> = (0..s).map(|k| if k < snf.s.rows() { snf.s[(k, k)].clone() } else { Int::zero() }).collect();
    let survivors: Vec<usize> = (0..s).filter(|&k| !diag[k].is_one()).collect();

    let replacement: Vec<Vec<(usize, Int)>> = (0..s)
        .map(|x| {
            survivors
                .iter()
                .enumerate()
                .filter(|(_, &k)| !snf.q[(x, k)].is_zero())
                .map(|(pos, &k)| (layer.old + pos, snf.q[(x, k)].clone()))
                .collect()
        })
        .collect();

    truncate(p, layer.old);
    let mut torsion = 0;
    for &k in &survivors {
        let terms = (0..s).filter(|&x| !snf.q_inv[(k, x)].is_zero()).map(|x| (snf.q_inv[(k, x)].clone(), x));
        let definition = if layer.class == 1 {
            Definition::ImageCombination(
                terms
                    .map(|(c, x)| match layer.origins[x] {
                        Origin::Image(src) => Ok((c, src)),
                        other => Err(Error::Internal(format!("unexpected weight-one tail {other:?}"))),
                    })
                    .collect::<Result<_>>()?,
            )
        } else {
            Definition::BracketCombination(
                terms
                    .map(|(c, x)| match layer.origins[x] {
                        Origin::Product(j, i) => Ok((c, j, i)),
                        other => Err(Error::Internal(format!("unexpected tail {other:?} in a graded layer"))),
                    })
                    .collect::<Result<_>>()?,
            )
        };
        let a = p.push_generator(layer.class, definition);
        if !diag[k].is_zero() {
            p.coefficients[a] = diag[k].clone();
            torsion += 1;
        }
    }
    substitute(p, layer, &replacement);
    Ok(LayerOutcome { generators: survivors.len(), torsion, max_transformer_entry: Some(max_transformer_entry(&snf)) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::extend_presentation;
    use crate::parser::parse_presentation;

    #[test]
    fn two_by_three_merges_into_six() {
        let fp = parse_presentation("< x, y | >").unwrap();
        let mut p = NilpotentPresentation::empty(fp.generators.clone(), Mode::Canonical);
        let layer = extend_presentation(&mut p);
        let m = IntMatrix::from_i64(&[&[2, 0], &[0, 3]]);
        let outcome = canonicalize_layer(&mut p, &layer, &m).unwrap();
        assert_eq!(outcome.generators, 1);
        assert_eq!(p.num_generators(), 1);
        assert_eq!(p.coefficient(0), &Int::from(6));
        assert!(p.power(0).is_zero());
        assert!(p.check_structure().is_ok());
    }

    #[test]
    fn plain_mode_is_rejected() {
        let fp = parse_presentation("< x | >").unwrap();
        let mut p = NilpotentPresentation::empty(fp.generators, Mode::Graded);
        let layer = extend_presentation(&mut p);
        let m = IntMatrix::zeros(0, 1);
        assert!(matches!(canonicalize_layer(&mut p, &layer, &m), Err(Error::NotCanonical)));
    }
}
