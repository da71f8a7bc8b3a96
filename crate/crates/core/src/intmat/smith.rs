//! Smith normal form by alternating Hermite reduction and transposition.
//!
//! Row operations made while the matrix is in its original orientation are
//! discarded (the left transformer is never needed). Row operations made on
//! the transposed matrix are column operations on the original and are
//! replayed on `Q` and, inverted, on `Q⁻¹`.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::hermite::{hermite_in_place, ElementaryOp};
use super::matrix::IntMatrix;
use crate::int::{ext_gcd, Int};

/// `S = P·M·Q` with `S` diagonal, `d_1 | d_2 | ...`, and `Q` unimodular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub s: IntMatrix,
    pub q: IntMatrix,
    pub q_inv: IntMatrix,
}

impl SnfResult {
    /// Diagonal entries of `S`.
    pub fn diagonal(&self) -> Vec<Int> {
        self.s.diagonal_entries()
    }
}

/// Column transformer bookkeeping: `Q` and `Q⁻¹` updated together.
struct Transformer {
    q: IntMatrix,
    q_inv: IntMatrix,
}

impl Transformer {
    fn new(n: usize) -> Self {
        Transformer { q: IntMatrix::identity(n), q_inv: IntMatrix::identity(n) }
    }

    fn apply(&mut self, op: &ElementaryOp) {
        match op {
            ElementaryOp::Swap(a, b) => {
                self.q.swap_cols(*a, *b);
                self.q_inv.swap_rows(*a, *b);
            }
            ElementaryOp::Negate(a) => {
                self.q.negate_col(*a);
                self.q_inv.negate_row(*a);
            }
            ElementaryOp::AddMultiple { target, source, factor } => {
                // Q·E with E = I + f·e_s·e_tᵀ; E⁻¹ = I - f·e_s·e_tᵀ.
                self.q.add_col_multiple(*target, *source, factor);
                self.q_inv.add_row_multiple(*source, *target, &-factor);
            }
        }
    }
}

/// Applies a column operation to a matrix.
pub fn apply_column_op(m: &mut IntMatrix, op: &ElementaryOp) {
    match op {
        ElementaryOp::Swap(a, b) => m.swap_cols(*a, *b),
        ElementaryOp::Negate(a) => m.negate_col(*a),
        ElementaryOp::AddMultiple { target, source, factor } => m.add_col_multiple(*target, *source, factor),
    }
}

/// Makes the diagonal a divisibility chain with zeros last.
///
/// Adjacent-style violations `(a, b)` are replaced by `(gcd, lcm)`. The
/// returned log holds the column operations; the row operations are implied.
pub fn enforce_divisibility(d: &IntMatrix) -> (IntMatrix, Vec<ElementaryOp>) {
    assert!(d.is_diagonal(), "enforce_divisibility needs a diagonal matrix");
    let mut m = d.clone();
    let mut log = Vec::new();
    let k = m.rows().min(m.cols());
    for i in 0..k {
        if m[(i, i)].is_negative() {
            m.negate_col(i);
            log.push(ElementaryOp::Negate(i));
        }
    }
    let mut r = 0;
    for i in 0..k {
        if !m[(i, i)].is_zero() {
            if i != r {
                m.swap_cols(i, r);
                m.swap_rows(i, r);
                log.push(ElementaryOp::Swap(i, r));
            }
            r += 1;
        }
    }
    for i in 0..r {
        for j in i + 1..r {
            let (a, b) = (m[(i, i)].clone(), m[(j, j)].clone());
            if b.is_multiple_of(&a) {
                continue;
            }
            let (g, x, y) = ext_gcd(&a, &b);
            // col_i += col_j: rows become (a, 0), (b, b).
            let one = Int::one();
            m.add_col_multiple(i, j, &one);
            log.push(ElementaryOp::AddMultiple { target: i, source: j, factor: one });
            // Rows (i, j) <- [[x, y], [-b/g, a/g]]: now (g, y*b), (0, lcm).
            let (bg, ag) = (&b / &g, &a / &g);
            for c in [i, j] {
                let (ri, rj) = (m[(i, c)].clone(), m[(j, c)].clone());
                m[(i, c)] = &x * &ri + &y * &rj;
                m[(j, c)] = &ag * &rj - &bg * &ri;
            }
            // col_j -= (y*b/g) col_i clears the last off-diagonal entry.
            let factor = -(&y * &bg);
            m.add_col_multiple(j, i, &factor);
            log.push(ElementaryOp::AddMultiple { target: j, source: i, factor });
            debug_assert!(m[(i, j)].is_zero() && m[(j, i)].is_zero());
            debug_assert!(m[(i, i)] == g && m[(j, j)] == a.lcm(&b));
        }
    }
    (m, log)
}

/// Number of Hermite/transpose rounds performed by the last [`smith`] call
/// together with the result; exposed for termination tests.
pub fn smith_with_rounds(m: &IntMatrix) -> (SnfResult, usize) {
    let n = m.cols();
    let mut t = Transformer::new(n);
    let mut cur = m.clone();
    let mut transposed = false;
    let mut rounds = 0;
    let bits: u64 = (0..m.rows()).flat_map(|i| m.row(i).iter()).map(|x| x.bits()).sum();
    let budget = 16 + 4 * (m.rows() + m.cols()) as u64 * (1 + bits);
    while !cur.is_diagonal() {
        rounds += 1;
        assert!((rounds as u64) <= budget, "Smith normal form loop exceeded its iteration budget");
        if transposed {
            hermite_in_place(&mut cur, &mut |op| t.apply(&op));
        } else {
            hermite_in_place(&mut cur, &mut |_| {});
        }
        cur = cur.transpose();
        transposed = !transposed;
    }
    if transposed {
        cur = cur.transpose();
    }
    let (s, log) = enforce_divisibility(&cur);
    for op in &log {
        t.apply(op);
    }
    (SnfResult { s, q: t.q, q_inv: t.q_inv }, rounds)
}

pub fn smith(m: &IntMatrix) -> SnfResult {
    smith_with_rounds(m).0
}

/// Largest absolute entry of the column transformer.
pub fn max_transformer_entry(r: &SnfResult) -> Int {
    r.q.max_abs_entry()
}

/// Isomorphism type of a finitely generated abelian group:
/// `C_{t_1} ⊕ ... ⊕ C_{t_k} ⊕ C_∞^{free_rank}` with `t_1 | t_2 | ...`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LcsFactor {
    pub torsion: Vec<Int>,
    pub free_rank: usize,
}

impl LcsFactor {
    pub fn free(rank: usize) -> Self {
        LcsFactor { torsion: Vec::new(), free_rank: rank }
    }

    pub fn is_trivial(&self) -> bool {
        self.torsion.is_empty() && self.free_rank == 0
    }

    /// Number of cyclic factors.
    pub fn rank(&self) -> usize {
        self.torsion.len() + self.free_rank
    }
}

impl fmt::Display for LcsFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut parts: Vec<String> = self.torsion.iter().map(|t| format!("C_{t}")).collect();
        match self.free_rank {
            0 => {}
            1 => parts.push("C_∞".into()),
            r => parts.push(format!("C_∞^{r}")),
        }
        f.write_str(&parts.join(" ⊕ "))
    }
}

/// Invariants of the abelian group with `n` generators and relation rows `m`.
pub fn abelian_invariants(m: &IntMatrix, n: usize) -> LcsFactor {
    assert!(m.rows() == 0 || m.cols() == n, "relation matrix must have one column per generator");
    if m.rows() == 0 {
        return LcsFactor::free(n);
    }
    let diag = smith(m).diagonal();
    let nonzero = diag.iter().filter(|d| !d.is_zero()).count();
    LcsFactor { torsion: diag.into_iter().filter(|d| *d > Int::one()).collect(), free_rank: n - nonzero }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| Int::from(x)).collect()
    }

    fn check(m: &IntMatrix, r: &SnfResult) {
        let n = m.cols();
        assert!(r.s.is_diagonal());
        assert_eq!(&r.q * &r.q_inv, IntMatrix::identity(n));
        assert_eq!(&r.q_inv * &r.q, IntMatrix::identity(n));
        let d = r.diagonal();
        for w in d.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]) || w[1].is_zero());
        }
        let mq = m * &r.q;
        let s_rows: Vec<Vec<Int>> = r.s.row_vecs().into_iter().filter(|row| row.iter().any(|x| !x.is_zero())).collect();
        assert_eq!(super::super::row_hermite(&mq), IntMatrix::from_rows(n, s_rows));
    }

    #[test]
    fn single_row_gcd() {
        let m = IntMatrix::from_i64(&[&[6, 10, 15]]);
        let r = smith(&m);
        assert_eq!(r.s, IntMatrix::from_i64(&[&[1, 0, 0]]));
        check(&m, &r);
        assert!(max_transformer_entry(&r) >= Int::one());
    }

    #[test]
    fn diagonal_examples() {
        let m = IntMatrix::from_i64(&[&[4, 0], &[0, 6]]);
        let r = smith(&m);
        assert_eq!(r.diagonal(), ints(&[2, 12]));
        check(&m, &r);

        let z = IntMatrix::zeros(2, 3);
        let r = smith(&z);
        assert!(r.s.is_zero());
        assert_eq!(r.q, IntMatrix::identity(3));
    }

    #[test]
    fn divisibility_examples() {
        let (d, _) = enforce_divisibility(&IntMatrix::from_i64(&[&[4, 0], &[0, 6]]));
        assert_eq!(d.diagonal_entries(), ints(&[2, 12]));
        let (d, log) = enforce_divisibility(&IntMatrix::from_i64(&[&[1, 0], &[0, 5]]));
        assert_eq!(d.diagonal_entries(), ints(&[1, 5]));
        assert!(log.is_empty());
        let (d, _) = enforce_divisibility(&IntMatrix::from_i64(&[&[2, 0], &[0, 3]]));
        assert_eq!(d.diagonal_entries(), ints(&[1, 6]));
        let (d, _) = enforce_divisibility(&IntMatrix::from_i64(&[&[0, 0, 0], &[0, 4, 0], &[0, 0, 6]]));
        assert_eq!(d.diagonal_entries(), ints(&[2, 12, 0]));
    }

    #[test]
    fn divisibility_log_replays() {
        let d = IntMatrix::from_i64(&[&[6, 0, 0], &[0, 0, 0], &[0, 0, 4]]);
        let (out, log) = enforce_divisibility(&d);
        let mut replay = d.clone();
        for op in &log {
            apply_column_op(&mut replay, op);
        }
        // Column side alone yields a matrix row-equivalent to the result.
        assert_eq!(super::super::row_hermite(&replay), super::super::row_hermite(&out));
    }

    #[test]
    fn invariants() {
        let f = abelian_invariants(&IntMatrix::from_i64(&[&[2, 0], &[0, 3]]), 2);
        assert_eq!(f, LcsFactor { torsion: ints(&[6]), free_rank: 0 });
        assert_eq!(abelian_invariants(&IntMatrix::zeros(0, 3), 3), LcsFactor::free(3));
        assert_eq!(abelian_invariants(&IntMatrix::from_i64(&[&[1, 0]]), 2), LcsFactor::free(1));
        assert_eq!(f.to_string(), "C_6");
        assert_eq!(LcsFactor { torsion: ints(&[2]), free_rank: 3 }.to_string(), "C_2 ⊕ C_∞^3");
    }

    #[test]
    fn transformer_of_permutation() {
        let r = SnfResult {
            s: IntMatrix::zeros(1, 2),
            q: IntMatrix::from_i64(&[&[0, 1], &[1, 0]]),
            q_inv: IntMatrix::identity(2),
        };
        assert_eq!(max_transformer_entry(&r), Int::one());
    }
}
