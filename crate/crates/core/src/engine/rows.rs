use num_traits::{One, Zero};

use super::extend::bracket_of_generators;
use super::PendingLayer;
use crate::error::{Error, Result};
use crate::int::Int;
use crate::intmat::{HermiteBuilder, IntMatrix};
use crate::parser::{homogeneous_weight, FinitePresentation, Homogeneity};
use crate::presentation::NilpotentPresentation;
use crate::word::NormalWord;

/// Collects relation rows over the pending generators.
///
/// Every word handed to [`RowSink::push`] must vanish on the old generators;
/// a nonzero old component means the presentation was inconsistent before
/// the extension, which the algorithm rules out.
pub(crate) struct RowSink<'a> {
    layer: &'a PendingLayer,
    rows: Vec<Vec<Int>>,
}

impl<'a> RowSink<'a> {
    pub(crate) fn new(layer: &'a PendingLayer) -> Self {
        RowSink { layer, rows: Vec::new() }
    }

    pub(crate) fn push(&mut self, word: &NormalWord, what: impl FnOnce() -> String) -> Result<()> {
        if word.is_zero() {
            return Ok(());
        }
        let old = self.layer.old;
        if let Some((k, _)) = word.terms().iter().find(|(k, _)| *k < old) {
            return Err(Error::Internal(format!(
                "{} has a nonzero component on a{} of the previous class",
                what(),
                k + 1
            )));
        }
        let mut row = vec![Int::zero(); self.layer.origins.len()];
        for (k, c) in word.terms() {
            row[k - old] = c.clone();
        }
        self.rows.push(row);
        Ok(())
    }

    pub(crate) fn into_rows(self) -> Vec<Vec<Int>> {
        self.rows
    }

    pub(crate) fn into_matrix(self) -> IntMatrix {
        IntMatrix::from_rows(self.layer.origins.len(), self.rows)
    }
}

fn in_range(graded: bool, total: usize, class: usize) -> bool {
    if graded {
        total == class
    } else {
        total <= class
    }
}

pub(crate) fn push_consistency_rows(p: &NilpotentPresentation, layer: &PendingLayer, sink: &mut RowSink) -> Result<()> {
    let graded = p.mode().is_graded();
    let (old, class) = (layer.old, layer.class);

    // γ_j*[a_j, a_i] = [γ_j*a_j, a_i] = [w_j, a_i]
    for j in (0..old).filter(|&j| p.is_torsion(j)) {
        for i in 0..old {
            if !in_range(graded, p.weights[j] + p.weights[i], class) {
                continue;
            }
            let mut acc = Vec::new();
            p.push_bracket_generators(j, i, &p.coefficients[j], &mut acc);
            p.push_bracket(&p.powers[j], &NormalWord::generator(i), &-Int::one(), &mut acc);
            let word = p.collect(acc);
            sink.push(&word, || format!("torsion check ({}, {})", j + 1, i + 1))?;
        }
    }

    // Jacobi identity for a_i of weight one and i < j < k.
    let one = Int::one();
    for i in p.layer(1) {
        for j in i + 1..old {
            let wij = p.weights[i] + p.weights[j];
            if wij + p.weights[j] > class {
                break;
            }
            let ij = bracket_of_generators(p, i, j);
            for k in j + 1..old {
                let total = wij + p.weights[k];
                if total > class {
                    break;
                }
                if graded && total != class {
                    continue;
                }
                let jk = bracket_of_generators(p, j, k);
                let ki = bracket_of_generators(p, k, i);
                let mut acc = Vec::new();
                p.push_bracket(&ij, &NormalWord::generator(k), &one, &mut acc);
                p.push_bracket(&jk, &NormalWord::generator(i), &one, &mut acc);
                p.push_bracket(&ki, &NormalWord::generator(j), &one, &mut acc);
                let word = p.collect(acc);
                sink.push(&word, || format!("Jacobi check ({}, {}, {})", i + 1, j + 1, k + 1))?;
            }
        }
    }
    Ok(())
}

pub(crate) fn push_relator_rows(
    fp: &FinitePresentation,
    p: &NilpotentPresentation,
    layer: &PendingLayer,
    sink: &mut RowSink,
) -> Result<()> {
    let graded = p.mode().is_graded();
    for (r, rel) in fp.relators.iter().enumerate() {
        if graded && homogeneous_weight(rel) != Homogeneity::Weight(layer.class) {
            continue;
        }
        let word = p.image_of(rel)?;
        sink.push(&word, || format!("relator {}", r + 1))?;
    }
    Ok(())
}

/// Consistency relations (torsion and Jacobi checks) among the pending
/// generators, one row per nonzero check.
pub fn consistency_rows(p: &NilpotentPresentation, layer: &PendingLayer) -> Result<IntMatrix> {
    let mut sink = RowSink::new(layer);
    push_consistency_rows(p, layer, &mut sink)?;
    Ok(sink.into_matrix())
}

/// Images of the relators, restricted to the pending generators.
pub fn relator_rows(fp: &FinitePresentation, p: &NilpotentPresentation, layer: &PendingLayer) -> Result<IntMatrix> {
    let mut sink = RowSink::new(layer);
    push_relator_rows(fp, p, layer, &mut sink)?;
    Ok(sink.into_matrix())
}

/// Hermite form of all relation rows of a pending layer.
pub(crate) fn layer_relations(
    fp: &FinitePresentation,
    p: &NilpotentPresentation,
    layer: &PendingLayer,
) -> Result<IntMatrix> {
    let mut sink = RowSink::new(layer);
    push_consistency_rows(p, layer, &mut sink)?;
    push_relator_rows(fp, p, layer, &mut sink)?;
    let mut hnf = HermiteBuilder::new(layer.origins.len());
    for row in sink.into_rows() {
        hnf.insert(row);
    }
    Ok(hnf.finish())
}
