//! Shared inputs for the benchmarks.

use liequot::{Int, IntMatrix};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub const FREE2: &str = include_str!("../../../presentations/free2.lie");
pub const THIN_A: &str = include_str!("../../../presentations/thin_a.lie");
pub const THIN_B: &str = include_str!("../../../presentations/thin_b.lie");
pub const WISLICENY: &str = include_str!("../../../presentations/wisliceny.lie");
pub const A10_POSITIVE: &str = include_str!("../../../presentations/a10_positive.lie");

/// Deterministic random matrix with entries in `[-bound, bound]`.
pub fn random_matrix(seed: u64, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    let mut rng = StdRng::seed_from_u64(seed);
    let data = (0..rows).map(|_| (0..cols).map(|_| Int::from(rng.gen_range(-bound..=bound))).collect()).collect();
    IntMatrix::from_rows(cols, data)
}
