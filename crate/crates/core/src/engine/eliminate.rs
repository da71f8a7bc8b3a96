use num_traits::{One, Zero};

use super::extend::Origin;
use super::{LayerOutcome, PendingLayer};
use crate::error::{Error, Result};
use crate::int::Int;
use crate::intmat::{row_hermite, IntMatrix};
use crate::presentation::{Definition, Mode, NilpotentPresentation};
use crate::word::NormalWord;

/// Eliminates pending generators using the Hermite form of the relation
/// matrix `m` (one column per pending generator).
///
/// A pivot equal to one expresses its generator through later ones and
/// removes it. A larger pivot keeps the generator with that torsion
/// coefficient. Columns without a pivot become free generators.
pub fn eliminate_and_update(
    p: &mut NilpotentPresentation,
    layer: &PendingLayer,
    m: &IntMatrix,
) -> Result<LayerOutcome> {
    if p.mode() == Mode::Canonical {
        return Err(Error::Invalid("canonical presentations are built with canonicalize_layer".into()));
    }
    check_layer(p, layer, m)?;
    let s = layer.origins.len();
    let h = row_hermite(m);
    let mut pivot_row = vec![None; s];
    for r in 0..h.rows() {
        let c = h.row(r).iter().position(|x| !x.is_zero()).expect("Hermite rows are nonzero");
        pivot_row[c] = Some(r);
    }
    let survivors: Vec<usize> = (0..s).filter(|&c| pivot_row[c].is_none_or(|r| !h[(r, c)].is_one())).collect();
    if let Some(&c) = survivors.iter().find(|&&c| c < layer.candidates_from) {
        return Err(Error::Internal(format!("tail {:?} survived elimination but cannot be defined", layer.origins[c])));
    }
    let mut new_index = vec![usize::MAX; s];
    for (pos, &c) in survivors.iter().enumerate() {
        new_index[c] = layer.old + pos;
    }

    let tail = |r: usize, c: usize| -> Vec<(usize, Int)> {
        (c + 1..s)
            .filter(|&q| !h[(r, q)].is_zero())
            .map(|q| {
                debug_assert!(new_index[q] != usize::MAX, "reduced Hermite form has no entries above unit pivots");
                (new_index[q], -&h[(r, q)])
            })
            .collect()
    };
    let replacement: Vec<Vec<(usize, Int)>> = (0..s)
        .map(|c| match pivot_row[c] {
            Some(r) if h[(r, c)].is_one() => tail(r, c),
            _ => vec![(new_index[c], Int::one())],
        })
        .collect();

    truncate(p, layer.old);
    let mut torsion = 0;
    let mut raw_powers = Vec::with_capacity(survivors.len());
    for &c in &survivors {
        let k = p.push_generator(layer.class, Definition::Image(0));
        match pivot_row[c] {
            Some(r) => {
                p.coefficients[k] = h[(r, c)].clone();
                raw_powers.push((k, tail(r, c)));
                torsion += 1;
            }
            None => raw_powers.push((k, Vec::new())),
        }
    }
    for (k, raw) in raw_powers.into_iter().rev() {
        p.powers[k] = p.collect(raw);
    }
    substitute(p, layer, &replacement);
    assign_definitions(p, layer, &survivors, &new_index)?;
    Ok(LayerOutcome { generators: survivors.len(), torsion, max_transformer_entry: None })
}

pub(crate) fn check_layer(p: &NilpotentPresentation, layer: &PendingLayer, m: &IntMatrix) -> Result<()> {
    if p.num_generators() != layer.old + layer.origins.len() {
        return Err(Error::Invalid("presentation does not match the pending layer".into()));
    }
    if m.rows() > 0 && m.cols() != layer.origins.len() {
        return Err(Error::Invalid(format!(
            "relation matrix has {} columns for {} pending generators",
            m.cols(),
            layer.origins.len()
        )));
    }
    Ok(())
}

pub(crate) fn truncate(p: &mut NilpotentPresentation, n: usize) {
    p.coefficients.truncate(n);
    p.powers.truncate(n);
    p.products.truncate(n);
    p.weights.truncate(n);
    p.definitions.truncate(n);
}

/// Rewrites every stored word of the previous class, replacing pending
/// generator `old + c` by `replacement[c]`, and collects the result.
pub(crate) fn substitute(p: &mut NilpotentPresentation, layer: &PendingLayer, replacement: &[Vec<(usize, Int)>]) {
    let old = layer.old;
    let rewrite = |p: &NilpotentPresentation, w: &NormalWord| -> Option<NormalWord> {
        if !w.terms().iter().any(|(k, _)| *k >= old) {
            return None;
        }
        let mut raw = Vec::with_capacity(w.len());
        for (k, c) in w.terms() {
            if *k < old {
                raw.push((*k, c.clone()));
            } else {
                raw.extend(replacement[k - old].iter().map(|(t, a)| (*t, a * c)));
            }
        }
        Some(p.collect(raw))
    };
    for j in 0..old {
        for i in 0..j {
            if let Some(w) = rewrite(p, &p.products[j][i]) {
                p.products[j][i] = w;
            }
        }
        if let Some(w) = rewrite(p, &p.powers[j]) {
            p.powers[j] = w;
        }
    }
    for s in 0..p.epimorphism.len() {
        if let Some(w) = rewrite(p, &p.epimorphism[s]) {
            p.epimorphism[s] = w;
        }
    }
}

/// Gives each surviving generator the first candidate relation whose
/// right-hand side is exactly that generator.
fn assign_definitions(
    p: &mut NilpotentPresentation,
    layer: &PendingLayer,
    survivors: &[usize],
    new_index: &[usize],
) -> Result<()> {
    let first = layer.old;
    let mut defined = vec![false; survivors.len()];
    for origin in &layer.origins[layer.candidates_from..] {
        let word = match *origin {
            Origin::Image(s) => &p.epimorphism[s],
            Origin::Product(j, i) => &p.products[j][i],
            Origin::Power(_) => continue,
        };
        let Some(k) = word.as_generator() else { continue };
        if k < first || defined[k - first] {
            continue;
        }
        defined[k - first] = true;
        p.definitions[k] = match *origin {
            Origin::Image(s) => Definition::Image(s),
            Origin::Product(j, i) => Definition::Bracket { left: j, right: i },
            Origin::Power(_) => unreachable!(),
        };
    }
    if let Some(pos) = defined.iter().position(|d| !d) {
        return Err(Error::Internal(format!(
            "generator a{} (tail {:?}) has no defining relation",
            new_index[survivors[pos]] + 1,
            layer.origins[survivors[pos]]
        )));
    }
    Ok(())
}
