//! Weighted nilpotent presentations.
//!
//! Generators `a_1, ..., a_n` carry a weight, an optional torsion relation
//! `c_i*a_i = w_i` (the power word) and, for each pair `j > i`, a product
//! relation `[a_j, a_i] = w_ji`. Missing products are zero.

use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::int::Int;
use crate::word::NormalWord;

/// How the engine treats the input.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// General (non-graded) algorithm with Hermite elimination.
    #[default]
    Plain,
    /// Homogeneous relators; only the top layer is touched at each step.
    Graded,
    /// Graded, with each layer put in Smith normal form.
    Canonical,
}

impl Mode {
    pub fn is_graded(self) -> bool {
        !matches!(self, Mode::Plain)
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Plain => "plain",
            Mode::Graded => "graded",
            Mode::Canonical => "canonical",
        })
    }
}

/// The relation that introduced a generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Definition {
    /// `x_s ϕ = a_k` for source generator `s`.
    Image(usize),
    /// `[a_left, a_right] = a_k` with `a_right` of weight one.
    Bracket { left: usize, right: usize },
    /// `a_k = Σ c*[a_left, a_right]`, used for canonical layers above weight one.
    BracketCombination(Vec<(Int, usize, usize)>),
    /// `a_k = Σ c*(x_s ϕ)`, used for the canonical weight-one layer.
    ImageCombination(Vec<(Int, usize)>),
}

impl Definition {
    /// The definition as a linear combination of brackets, if it is one.
    pub fn bracket_terms(&self) -> Option<Vec<(Int, usize, usize)>> {
        match self {
            Definition::Bracket { left, right } => Some(vec![(Int::from(1), *left, *right)]),
            Definition::BracketCombination(terms) => Some(terms.clone()),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilpotentPresentation {
    pub(crate) mode: Mode,
    /// Names of the source generators `x_1, ..., x_m`.
    pub(crate) source: Vec<String>,
    /// `c_i`, zero when `a_i` has no torsion relation.
    pub(crate) coefficients: Vec<Int>,
    pub(crate) powers: Vec<NormalWord>,
    /// `products[j][i]` for `i < j`.
    pub(crate) products: Vec<Vec<NormalWord>>,
    pub(crate) weights: Vec<usize>,
    pub(crate) definitions: Vec<Definition>,
    /// Image of each source generator.
    pub(crate) epimorphism: Vec<NormalWord>,
}

impl NilpotentPresentation {
    /// The presentation with no generators; every source generator maps to 0.
    pub fn empty(source: Vec<String>, mode: Mode) -> Self {
        let m = source.len();
        NilpotentPresentation {
            mode,
            source,
            coefficients: Vec::new(),
            powers: Vec::new(),
            products: Vec::new(),
            weights: Vec::new(),
            definitions: Vec::new(),
            epimorphism: vec![NormalWord::zero(); m],
        }
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn source_generators(&self) -> &[String] {
        &self.source
    }

    pub fn num_generators(&self) -> usize {
        self.weights.len()
    }

    pub fn weight(&self, i: usize) -> usize {
        self.weights[i]
    }

    pub fn weights(&self) -> &[usize] {
        &self.weights
    }

    /// Nilpotency class of the presented ring (largest weight).
    pub fn class(&self) -> usize {
        self.weights.last().copied().unwrap_or(0)
    }

    /// `c_i` of the torsion relation, or zero.
    pub fn coefficient(&self, i: usize) -> &Int {
        &self.coefficients[i]
    }

    pub fn is_torsion(&self, i: usize) -> bool {
        !self.coefficients[i].is_zero()
    }

    pub fn power(&self, i: usize) -> &NormalWord {
        &self.powers[i]
    }

    /// Stored right-hand side of `[a_j, a_i]` for `j > i`.
    pub fn product(&self, j: usize, i: usize) -> &NormalWord {
        assert!(j > i, "products are stored for j > i");
        &self.products[j][i]
    }

    pub fn definition(&self, i: usize) -> &Definition {
        &self.definitions[i]
    }

    pub fn epimorphism(&self) -> &[NormalWord] {
        &self.epimorphism
    }

    /// Number of generators of each weight `1..=class`.
    pub fn dimensions(&self) -> Vec<usize> {
        let mut dims = vec![0; self.class()];
        for &w in &self.weights {
            dims[w - 1] += 1;
        }
        dims
    }

    /// Number of torsion relations.
    pub fn torsion_rank(&self) -> usize {
        self.coefficients.iter().filter(|c| !c.is_zero()).count()
    }

    /// Indices of the generators of weight `w`.
    pub fn layer(&self, w: usize) -> std::ops::Range<usize> {
        let start = self.weights.partition_point(|&x| x < w);
        let end = self.weights.partition_point(|&x| x <= w);
        start..end
    }

    /// Largest absolute coefficient on any right-hand side.
    pub fn max_coefficient(&self) -> Int {
        let products = self.products.iter().flatten();
        products
            .chain(&self.powers)
            .chain(&self.epimorphism)
            .map(NormalWord::max_abs_coefficient)
            .max()
            .unwrap_or_default()
    }

    pub(crate) fn push_generator(&mut self, weight: usize, definition: Definition) -> usize {
        let k = self.weights.len();
        self.coefficients.push(Int::zero());
        self.powers.push(NormalWord::zero());
        self.products.push(vec![NormalWord::zero(); k]);
        self.weights.push(weight);
        self.definitions.push(definition);
        k
    }

    /// Structural checks that do not need collection: index ranges, word
    /// shape, weight monotonicity and the weight grading of stored words.
    pub fn check_structure(&self) -> Result<(), String> {
        let n = self.num_generators();
        let sizes = [self.coefficients.len(), self.powers.len(), self.products.len(), self.definitions.len()];
        if sizes.iter().any(|&s| s != n) {
            return Err("field lengths disagree".into());
        }
        if self.epimorphism.len() != self.source.len() {
            return Err("epimorphism length differs from source generator count".into());
        }
        if n > 0 && self.weights[0] != 1 {
            return Err("first generator must have weight 1".into());
        }
        if self.weights.windows(2).any(|w| w[0] > w[1]) {
            return Err("weights must be nondecreasing".into());
        }
        let well_formed = |w: &NormalWord| {
            w.terms().windows(2).all(|p| p[0].0 < p[1].0) && w.terms().iter().all(|(i, c)| *i < n && !c.is_zero())
        };
        let graded = self.mode.is_graded();
        let bound_ok = |w: &NormalWord, bound: usize| {
            w.terms().iter().all(|(k, _)| {
                let wk = self.weights[*k];
                if graded {
                    wk == bound
                } else {
                    wk >= bound
                }
            })
        };
        for i in 0..n {
            let c = &self.coefficients[i];
            if c.is_negative() || (*c == Int::from(1)) {
                return Err(format!("a{} has torsion coefficient {c}", i + 1));
            }
            let p = &self.powers[i];
            if !well_formed(p) {
                return Err(format!("power word of a{} is malformed", i + 1));
            }
            if c.is_zero() && !p.is_zero() {
                return Err(format!("a{} is free but has a power word", i + 1));
            }
            if p.leading_index().is_some_and(|k| k <= i) {
                return Err(format!("power word of a{} is not supported after it", i + 1));
            }
            if !bound_ok(p, self.weights[i]) {
                return Err(format!("power word of a{} violates the weight grading", i + 1));
            }
            if self.products[i].len() != i {
                return Err(format!("product row {} has wrong length", i + 1));
            }
            for (k, w) in self.products[i].iter().enumerate() {
                if !well_formed(w) {
                    return Err(format!("[a{}, a{}] is malformed", i + 1, k + 1));
                }
                if !w.is_zero() && !bound_ok(w, self.weights[i] + self.weights[k]) {
                    return Err(format!("[a{}, a{}] violates the weight grading", i + 1, k + 1));
                }
            }
            let def_ok = match &self.definitions[i] {
                Definition::Image(s) => *s < self.source.len() && self.weights[i] == 1,
                Definition::ImageCombination(t) => {
                    self.weights[i] == 1 && t.iter().all(|(_, s)| *s < self.source.len())
                }
                Definition::Bracket { left, right } => {
                    *left < i
                        && *right < *left
                        && self.weights[*right] == 1
                        && self.weights[*left] + 1 == self.weights[i]
                }
                Definition::BracketCombination(t) => t.iter().all(|(_, l, r)| {
                    *l < i && *r < *l && self.weights[*r] == 1 && self.weights[*l] + 1 == self.weights[i]
                }),
            };
            if !def_ok {
                return Err(format!("definition of a{} is malformed", i + 1));
            }
        }
        for (s, w) in self.epimorphism.iter().enumerate() {
            if !well_formed(w) {
                return Err(format!("image of {} is malformed", self.source[s]));
            }
        }
        Ok(())
    }
}
