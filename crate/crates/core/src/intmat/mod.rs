//! Exact integer linear algebra: Hermite and Smith normal forms.

mod hermite;
mod matrix;
mod smith;

pub use hermite::{row_hermite, ElementaryOp, HermiteBuilder};
pub use matrix::IntMatrix;
pub use smith::{
    abelian_invariants, apply_column_op, enforce_divisibility, max_transformer_entry, smith, smith_with_rounds,
    LcsFactor, SnfResult,
};
