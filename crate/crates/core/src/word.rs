//! Sparse normal words: sorted `(generator, coefficient)` pairs.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::int::Int;

/// A sum `c_1*a_{i_1} + ... + c_k*a_{i_k}` with strictly increasing generator
/// indices and nonzero coefficients. Indices are 0-based; they print 1-based.
///
/// Whether the coefficients are reduced modulo torsion is a property relative
/// to a presentation, see [`crate::NilpotentPresentation::normalize`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NormalWord {
    terms: Vec<(usize, Int)>,
}

impl NormalWord {
    pub fn zero() -> Self {
        NormalWord { terms: Vec::new() }
    }

    pub fn generator(index: usize) -> Self {
        NormalWord { terms: vec![(index, Int::one())] }
    }

    pub fn monomial(index: usize, coefficient: Int) -> Self {
        if coefficient.is_zero() {
            Self::zero()
        } else {
            NormalWord { terms: vec![(index, coefficient)] }
        }
    }

    /// Sorts and merges arbitrary terms. No torsion reduction happens here.
    pub fn from_terms(terms: impl IntoIterator<Item = (usize, Int)>) -> Self {
        let mut terms: Vec<_> = terms.into_iter().collect();
        merge_terms(&mut terms);
        NormalWord { terms }
    }

    /// Wraps terms already sorted, merged and nonzero.
    pub(crate) fn from_sorted_unchecked(terms: Vec<(usize, Int)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        NormalWord { terms }
    }

    pub fn terms(&self) -> &[(usize, Int)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(usize, Int)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, index: usize) -> Int {
        match self.terms.binary_search_by_key(&index, |(i, _)| *i) {
            Ok(k) => self.terms[k].1.clone(),
            Err(_) => Int::zero(),
        }
    }

    /// `Some(k)` when the word is exactly `a_k`.
    pub fn as_generator(&self) -> Option<usize> {
        match self.terms.as_slice() {
            [(k, c)] if c.is_one() => Some(*k),
            _ => None,
        }
    }

    pub fn leading_index(&self) -> Option<usize> {
        self.terms.first().map(|(i, _)| *i)
    }

    pub fn max_abs_coefficient(&self) -> Int {
        self.terms.iter().map(|(_, c)| c.abs()).max().unwrap_or_default()
    }

    /// Splits the word at `boundary`: terms below it and terms at or above it.
    pub fn split_at_index(&self, boundary: usize) -> (NormalWord, NormalWord) {
        let cut = self.terms.partition_point(|(i, _)| *i < boundary);
        (NormalWord { terms: self.terms[..cut].to_vec() }, NormalWord { terms: self.terms[cut..].to_vec() })
    }

    pub(crate) fn push_generator(&mut self, index: usize) {
        debug_assert!(self.terms.last().is_none_or(|(i, _)| *i < index));
        self.terms.push((index, Int::one()));
    }

    pub fn display(&self) -> DisplayWord<'_> {
        DisplayWord(self)
    }
}

/// Sorts by index, sums equal indices and drops zeros.
pub(crate) fn merge_terms(terms: &mut Vec<(usize, Int)>) {
    if terms.len() > 1 {
        terms.sort_unstable_by_key(|(i, _)| *i);
    }
    let mut out = 0;
    for k in 0..terms.len() {
        if out > 0 && terms[out - 1].0 == terms[k].0 {
            let c = std::mem::take(&mut terms[k].1);
            terms[out - 1].1 += c;
        } else {
            if out > 0 && terms[out - 1].1.is_zero() {
                out -= 1;
            }
            terms.swap(out, k);
            out += 1;
        }
    }
    if out > 0 && terms[out - 1].1.is_zero() {
        out -= 1;
    }
    terms.truncate(out);
}

pub struct DisplayWord<'a>(&'a NormalWord);

impl fmt::Display for DisplayWord<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_zero() {
            return f.write_str("0");
        }
        for (k, (i, c)) in self.0.terms.iter().enumerate() {
            let abs = c.abs();
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            write!(f, "a{}", i + 1)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(pairs: &[(usize, i64)]) -> Vec<(usize, Int)> {
        pairs.iter().map(|&(i, c)| (i, Int::from(c))).collect()
    }

    #[test]
    fn merge_cancels_and_sorts() {
        let word = NormalWord::from_terms(w(&[(3, 2), (1, 1), (3, -2), (0, 4), (1, 2)]));
        assert_eq!(word.terms(), w(&[(0, 4), (1, 3)]).as_slice());
        let zero = NormalWord::from_terms(w(&[(2, 1), (2, -1)]));
        assert!(zero.is_zero());
        let tail_zero = NormalWord::from_terms(w(&[(0, 1), (2, 1), (2, -1)]));
        assert_eq!(tail_zero.terms(), w(&[(0, 1)]).as_slice());
        let mid_zero = NormalWord::from_terms(w(&[(0, 1), (1, 1), (1, -1), (2, 5)]));
        assert_eq!(mid_zero.terms(), w(&[(0, 1), (2, 5)]).as_slice());
    }

    #[test]
    fn display() {
        let word = NormalWord::from_terms(w(&[(2, 2), (3, -4), (0, -1)]));
        assert_eq!(word.display().to_string(), "-a1 + 2*a3 - 4*a4");
        assert_eq!(NormalWord::zero().display().to_string(), "0");
    }
}
