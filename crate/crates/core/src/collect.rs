//! Collection: arithmetic of normal words relative to a presentation.
//!
//! Products are substituted by their stored right-hand sides and then each
//! torsion coefficient is reduced into `[0, c_i)`, pushing the quotient into
//! the power word. Power words are supported strictly after their generator,
//! so a single left-to-right sweep reaches a fixpoint.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::int::{div_rem_euclid, Int};
use crate::parser::ExprTree;
use crate::presentation::NilpotentPresentation;
use crate::word::{merge_terms, NormalWord};

impl NilpotentPresentation {
    /// Normal form of an arbitrary sum of generator multiples.
    pub fn normalize(&self, raw: impl IntoIterator<Item = (usize, Int)>) -> Result<NormalWord> {
        let terms: Vec<_> = raw.into_iter().collect();
        let n = self.num_generators();
        if let Some(&(index, _)) = terms.iter().find(|(i, _)| *i >= n) {
            return Err(Error::GeneratorOutOfRange { index, len: n });
        }
        Ok(self.collect(terms))
    }

    fn out_of_range(&self, i: usize, c: &Int) -> bool {
        let gamma = &self.coefficients[i];
        !gamma.is_zero() && (c.is_negative() || c >= gamma)
    }

    /// Unchecked normalization used on hot paths.
    pub(crate) fn collect(&self, mut terms: Vec<(usize, Int)>) -> NormalWord {
        merge_terms(&mut terms);
        if !terms.iter().any(|(i, c)| self.out_of_range(*i, c)) {
            return NormalWord::from_sorted_unchecked(terms);
        }
        let mut pending: BTreeMap<usize, Int> = terms.into_iter().collect();
        let mut cursor = 0;
        while let Some((&i, c)) = pending.range(cursor..).next() {
            cursor = i + 1;
            if !self.out_of_range(i, c) {
                continue;
            }
            let (q, r) = div_rem_euclid(c, &self.coefficients[i]);
            if r.is_zero() {
                pending.remove(&i);
            } else {
                pending.insert(i, r);
            }
            for (k, a) in self.powers[i].terms() {
                let slot = pending.entry(*k).or_default();
                *slot += &q * a;
                if slot.is_zero() {
                    pending.remove(k);
                }
            }
        }
        NormalWord::from_sorted_unchecked(pending.into_iter().collect())
    }

    pub fn add(&self, u: &NormalWord, v: &NormalWord) -> NormalWord {
        let mut terms = Vec::with_capacity(u.len() + v.len());
        terms.extend_from_slice(u.terms());
        terms.extend_from_slice(v.terms());
        self.collect(terms)
    }

    pub fn sub(&self, u: &NormalWord, v: &NormalWord) -> NormalWord {
        let mut terms = Vec::with_capacity(u.len() + v.len());
        terms.extend_from_slice(u.terms());
        terms.extend(v.terms().iter().map(|(i, c)| (*i, -c)));
        self.collect(terms)
    }

    pub fn scalar_multiply(&self, c: &Int, u: &NormalWord) -> NormalWord {
        if c.is_zero() {
            return NormalWord::zero();
        }
        self.collect(u.terms().iter().map(|(i, a)| (*i, a * c)).collect())
    }

    /// `[a_j, a_i]` as stored, with the sign convention for `j < i`.
    pub fn bracket_generators(&self, j: usize, i: usize) -> Result<NormalWord> {
        let n = self.num_generators();
        for index in [j, i] {
            if index >= n {
                return Err(Error::GeneratorOutOfRange { index, len: n });
            }
        }
        let mut terms = Vec::new();
        self.push_bracket_generators(j, i, &Int::one(), &mut terms);
        Ok(self.collect(terms))
    }

    /// Appends `coef * [a_j, a_i]` (unreduced) to `acc`.
    #[inline]
    pub(crate) fn push_bracket_generators(&self, j: usize, i: usize, coef: &Int, acc: &mut Vec<(usize, Int)>) {
        use std::cmp::Ordering;
        let (word, negate) = match j.cmp(&i) {
            Ordering::Equal => return,
            Ordering::Greater => (&self.products[j][i], false),
            Ordering::Less => (&self.products[i][j], true),
        };
        if word.is_zero() {
            return;
        }
        let coef = if negate { -coef } else { coef.clone() };
        if coef.is_one() {
            acc.extend_from_slice(word.terms());
        } else if (-&coef).is_one() {
            acc.extend(word.terms().iter().map(|(k, c)| (*k, -c)));
        } else {
            acc.extend(word.terms().iter().map(|(k, c)| (*k, c * &coef)));
        }
    }

    /// Appends `coef * [u, v]` (unreduced) to `acc`; `u`, `v` must be normal.
    pub(crate) fn push_bracket(&self, u: &NormalWord, v: &NormalWord, coef: &Int, acc: &mut Vec<(usize, Int)>) {
        for (j, a) in u.terms() {
            let ca = a * coef;
            for (i, b) in v.terms() {
                if i == j {
                    continue;
                }
                let c = &ca * b;
                self.push_bracket_generators(*j, *i, &c, acc);
            }
        }
    }

    /// Bilinear extension of the product relations to normal words.
    pub fn bracket(&self, u: &NormalWord, v: &NormalWord) -> NormalWord {
        let mut acc = Vec::new();
        self.push_bracket(u, v, &Int::one(), &mut acc);
        self.collect(acc)
    }

    /// `[[u, v], w]`, collecting the inner bracket first.
    pub fn bracket3(&self, u: &NormalWord, v: &NormalWord, w: &NormalWord) -> NormalWord {
        let inner = self.bracket(u, v);
        self.bracket(&inner, w)
    }

    /// Evaluates an expression tree with `images[s]` substituted for source
    /// generator `s`.
    pub fn evaluate(&self, expr: &ExprTree, images: &[NormalWord]) -> Result<NormalWord> {
        Ok(match expr {
            ExprTree::Generator(s) => images.get(*s).cloned().ok_or(Error::MissingImage(*s))?,
            ExprTree::Multiple(c, child) => {
                let inner = self.evaluate(child, images)?;
                self.scalar_multiply(c, &inner)
            }
            ExprTree::Sum(children) => {
                let mut terms = Vec::new();
                for child in children {
                    terms.extend(self.evaluate(child, images)?.into_terms());
                }
                self.collect(terms)
            }
            ExprTree::Bracket(l, r) => {
                let l = self.evaluate(l, images)?;
                let r = self.evaluate(r, images)?;
                self.bracket(&l, &r)
            }
        })
    }

    /// Evaluates `expr` under the stored epimorphism.
    pub fn image_of(&self, expr: &ExprTree) -> Result<NormalWord> {
        self.evaluate(expr, &self.epimorphism)
    }
}
