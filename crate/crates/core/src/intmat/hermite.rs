//! Row Hermite normal form.
//!
//! Convention: pivots strictly move right, pivots are positive, entries above
//! a pivot lie in `[0, pivot)` and zero rows are dropped.

use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;
use crate::int::Int;

/// An elementary unimodular operation on rows (or, when recorded for the
/// transformer matrix, on columns).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ElementaryOp {
    Swap(usize, usize),
    Negate(usize),
    /// `line[target] += factor * line[source]`.
    AddMultiple {
        target: usize,
        source: usize,
        factor: Int,
    },
}

/// Incremental echelon form over the integers.
///
/// Rows are buffered and periodically folded into the current basis with
/// [`hermite_in_place`], so memory stays proportional to the rank plus the
/// buffer size.
#[derive(Clone, Debug)]
pub struct HermiteBuilder {
    cols: usize,
    basis: Vec<Vec<Int>>,
    buffer: Vec<Vec<Int>>,
}

impl HermiteBuilder {
    pub fn new(cols: usize) -> Self {
        HermiteBuilder { cols, basis: Vec::new(), buffer: Vec::new() }
    }

    /// Rank of the rows inserted so far.
    pub fn rank(&mut self) -> usize {
        self.compact();
        self.basis.len()
    }

    pub fn insert(&mut self, row: Vec<Int>) {
        assert_eq!(row.len(), self.cols, "row width mismatch");
        if row.iter().all(Zero::is_zero) {
            return;
        }
        self.buffer.push(row);
        if self.buffer.len() >= self.cols.max(32) {
            self.compact();
        }
    }

    fn compact(&mut self) {
        if self.buffer.is_empty() {
            return;
        }
        let mut rows = std::mem::take(&mut self.basis);
        rows.append(&mut self.buffer);
        let mut m = IntMatrix::from_rows(self.cols, rows);
        hermite_in_place(&mut m, &mut |_| {});
        self.basis = m.row_vecs().into_iter().take_while(|r| r.iter().any(|x| !x.is_zero())).collect();
    }

    /// Reduced echelon rows, ordered by pivot column.
    pub fn finish(mut self) -> IntMatrix {
        self.compact();
        IntMatrix::from_rows(self.cols, self.basis)
    }
}

/// `a / b` rounded to the nearest integer, so the remainder satisfies
/// `|r| <= |b| / 2`.
fn nearest_quotient(a: &Int, b: &Int) -> Int {
    let (q, r) = a.div_mod_floor(b);
    // The floor remainder has the sign of `b`; `r - b` has the other sign.
    if (&r + &r).abs() > b.abs() {
        q + 1
    } else {
        q
    }
}

/// Row Hermite normal form of `m` (zero rows dropped).
pub fn row_hermite(m: &IntMatrix) -> IntMatrix {
    let mut builder = HermiteBuilder::new(m.cols());
    for i in 0..m.rows() {
        builder.insert(m.row(i).to_vec());
    }
    builder.finish()
}

/// In-place Hermite form by repeated smallest-pivot division, keeping the
/// matrix shape (zero rows end up at the bottom). Every row operation is
/// reported to `record`.
pub(crate) fn hermite_in_place(m: &mut IntMatrix, record: &mut dyn FnMut(ElementaryOp)) {
    let (rows, cols) = (m.rows(), m.cols());
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        loop {
            let best =
                (r..rows).filter(|&k| !m[(k, c)].is_zero()).min_by(|&x, &y| m[(x, c)].abs().cmp(&m[(y, c)].abs()));
            let Some(best) = best else { break };
            if best != r {
                m.swap_rows(r, best);
                record(ElementaryOp::Swap(r, best));
            }
            let mut done = true;
            for k in r + 1..rows {
                if m[(k, c)].is_zero() {
                    continue;
                }
                let factor = -nearest_quotient(&m[(k, c)], &m[(r, c)]);
                m.add_row_multiple(k, r, &factor);
                record(ElementaryOp::AddMultiple { target: k, source: r, factor });
                if !m[(k, c)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if m[(r, c)].is_zero() {
            continue;
        }
        if m[(r, c)].is_negative() {
            m.negate_row(r);
            record(ElementaryOp::Negate(r));
        }
        for k in 0..r {
            let q = m[(k, c)].div_floor(&m[(r, c)]);
            if !q.is_zero() {
                let factor = -q;
                m.add_row_multiple(k, r, &factor);
                record(ElementaryOp::AddMultiple { target: k, source: r, factor });
            }
        }
        r += 1;
    }
}
