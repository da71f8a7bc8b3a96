//! The nilpotent quotient algorithm.
//!
//! Each step extends the presentation of `L / L^c` by central generators of
//! weight `c`, recomputes the products that follow from definitions, gathers
//! consistency and relator relations among the new generators and reduces
//! them by Hermite elimination (or Smith form in canonical mode).

pub(crate) mod eliminate;
mod extend;
mod rows;
mod verify;

use std::time::{Duration, Instant};

use num_traits::Zero;

pub use eliminate::eliminate_and_update;
pub use extend::{compute_tails, extend_presentation, Origin};
pub use rows::{consistency_rows, relator_rows};
pub use verify::{check_consistency, definition_value};

use crate::canonical::canonicalize_layer;
use crate::error::{Error, Result};
use crate::int::Int;
use crate::intmat::{abelian_invariants, IntMatrix, LcsFactor};
use crate::parser::{homogeneous_weight, ExprTree, FinitePresentation, Homogeneity};
use crate::presentation::{Mode, NilpotentPresentation};

/// Generators appended by [`extend_presentation`] and not yet reduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PendingLayer {
    /// Number of generators before the extension; pending generator `k`
    /// has index `old + k`.
    pub old: usize,
    /// Weight of the pending generators.
    pub class: usize,
    pub origins: Vec<Origin>,
    /// Index of the first pending generator that may survive elimination.
    pub candidates_from: usize,
}

/// What a reduction step left behind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerOutcome {
    pub generators: usize,
    /// How many of them have a torsion relation.
    pub torsion: usize,
    /// Largest entry of the Smith transformer (canonical mode only).
    pub max_transformer_entry: Option<Int>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QuotientOptions {
    /// Largest class to compute; `None` runs until the series stabilizes.
    pub class_bound: Option<usize>,
    pub mode: Mode,
}

impl QuotientOptions {
    pub fn new(mode: Mode) -> Self {
        QuotientOptions { class_bound: None, mode }
    }

    pub fn class_bound(mut self, c: usize) -> Self {
        self.class_bound = Some(c);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerStats {
    pub class: usize,
    pub generators: usize,
    pub torsion: usize,
    /// Pending generators before reduction.
    pub pending: usize,
    /// Rank of the relation matrix.
    pub relations: usize,
    pub max_transformer_entry: Option<Int>,
    pub elapsed: Duration,
}

/// A computed nilpotent quotient.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub input: FinitePresentation,
    pub presentation: NilpotentPresentation,
    /// True when the last step produced no generators, so the presentation
    /// describes the largest nilpotent quotient of the input.
    pub stabilized: bool,
    /// One entry per step, including a final empty step when stabilized.
    pub layers: Vec<LayerStats>,
}

impl Quotient {
    pub fn class(&self) -> usize {
        self.presentation.class()
    }

    pub fn dimensions(&self) -> Vec<usize> {
        self.presentation.dimensions()
    }

    /// Decides whether an expression over the source generators vanishes in
    /// the quotient.
    pub fn is_zero(&self, expr: &ExprTree) -> Result<bool> {
        is_zero(expr, &self.presentation)
    }

    pub fn lcs_structure(&self) -> Vec<LcsFactor> {
        lcs_structure(&self.presentation)
    }

    /// Full consistency check of the presentation plus the epimorphism
    /// property: every relator maps to zero.
    pub fn verify(&self) -> std::result::Result<(), String> {
        check_consistency(&self.presentation)?;
        for (r, rel) in self.input.relators.iter().enumerate() {
            let image = self.presentation.image_of(rel).map_err(|e| e.to_string())?;
            if !image.is_zero() {
                return Err(format!("relator {} maps to {}", r + 1, image.display()));
            }
        }
        Ok(())
    }
}

pub fn is_zero(expr: &ExprTree, p: &NilpotentPresentation) -> Result<bool> {
    Ok(p.image_of(expr)?.is_zero())
}

/// Abelian invariants of `L^c / L^{c+1}` for `c = 1..=class`.
pub fn lcs_structure(p: &NilpotentPresentation) -> Vec<LcsFactor> {
    (1..=p.class())
        .map(|c| {
            let range = p.layer(c);
            if p.mode() == Mode::Canonical {
                let torsion: Vec<Int> =
                    range.clone().filter(|&i| p.is_torsion(i)).map(|i| p.coefficients[i].clone()).collect();
                let free_rank = range.len() - torsion.len();
                return LcsFactor { torsion, free_rank };
            }
            let n = range.len();
            let rows: Vec<Vec<Int>> = range
                .clone()
                .filter(|&i| p.is_torsion(i))
                .map(|i| {
                    let mut row = vec![Int::zero(); n];
                    row[i - range.start] = p.coefficients[i].clone();
                    for (k, a) in p.powers[i].terms() {
                        if range.contains(k) {
                            row[k - range.start] -= a;
                        }
                    }
                    row
                })
                .collect();
            abelian_invariants(&IntMatrix::from_rows(n, rows), n)
        })
        .collect()
}

/// Computes the class-one quotient `L / L^2`.
pub fn init_abelian(fp: &FinitePresentation, mode: Mode) -> Result<NilpotentPresentation> {
    check_mode(fp, mode)?;
    let mut p = NilpotentPresentation::empty(fp.generators.clone(), mode);
    step(fp, &mut p)?;
    Ok(p)
}

fn check_mode(fp: &FinitePresentation, mode: Mode) -> Result<()> {
    if mode.is_graded() {
        if let Some(r) = fp.relators.iter().position(|r| homogeneous_weight(r) == Homogeneity::Mixed) {
            return Err(Error::NonHomogeneous(r));
        }
    }
    Ok(())
}

fn step(fp: &FinitePresentation, p: &mut NilpotentPresentation) -> Result<LayerStats> {
    let start = Instant::now();
    let layer = extend_presentation(p);
    compute_tails(p, &layer)?;
    let m = rows::layer_relations(fp, p, &layer)?;
    let outcome = if p.mode() == Mode::Canonical {
        canonicalize_layer(p, &layer, &m)?
    } else {
        eliminate_and_update(p, &layer, &m)?
    };
    Ok(LayerStats {
        class: layer.class,
        generators: outcome.generators,
        torsion: outcome.torsion,
        pending: layer.origins.len(),
        relations: m.rows(),
        max_transformer_entry: outcome.max_transformer_entry,
        elapsed: start.elapsed(),
    })
}

pub fn nilpotent_quotient(fp: &FinitePresentation, options: &QuotientOptions) -> Result<Quotient> {
    nilpotent_quotient_with(fp, options, |_| {})
}

/// Like [`nilpotent_quotient`], calling `progress` after every step.
pub fn nilpotent_quotient_with(
    fp: &FinitePresentation,
    options: &QuotientOptions,
    mut progress: impl FnMut(&LayerStats),
) -> Result<Quotient> {
    check_mode(fp, options.mode)?;
    if options.class_bound == Some(0) {
        return Err(Error::Invalid("class bound must be positive".into()));
    }
    let mut p = NilpotentPresentation::empty(fp.generators.clone(), options.mode);
    let mut layers = Vec::new();
    let mut stabilized = false;
    let mut class = 0;
    while options.class_bound.is_none_or(|c| class < c) {
        let stats = step(fp, &mut p)?;
        progress(&stats);
        class = stats.class;
        let empty = stats.generators == 0;
        layers.push(stats);
        if empty {
            stabilized = true;
            break;
        }
    }
    Ok(Quotient { input: fp.clone(), presentation: p, stabilized, layers })
}
