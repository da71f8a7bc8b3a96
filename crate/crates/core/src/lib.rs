//! Nilpotent quotients of finitely presented Lie rings over the integers.
//!
//! Given `< X | R >`, [`nilpotent_quotient`] builds a consistent weighted
//! nilpotent presentation of `L / L^{c+1}` together with the epimorphism from
//! the free Lie ring on `X`. Normal-form collection in the result decides the
//! word problem of the quotient ([`Quotient::is_zero`]). For homogeneous
//! relators the graded engine can also put each lower central factor in
//! Smith form, giving canonical presentations.

pub mod canonical;
mod collect;
pub mod engine;
pub mod error;
pub mod export;
pub mod int;
pub mod intmat;
pub mod parser;
pub mod presentation;
pub mod word;

pub use engine::{lcs_structure, nilpotent_quotient, nilpotent_quotient_with, LayerStats, Quotient, QuotientOptions};
pub use error::{Error, Result};
pub use int::Int;
pub use intmat::{IntMatrix, LcsFactor, SnfResult};
pub use parser::{homogeneous_weight, parse_expression, parse_presentation, ExprTree, FinitePresentation, Homogeneity};
pub use presentation::{Definition, Mode, NilpotentPresentation};
pub use word::NormalWord;
