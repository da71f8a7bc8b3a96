use crate::parser::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("generator a{} does not exist (presentation has {len} generators)", .index + 1)]
    GeneratorOutOfRange { index: usize, len: usize },
    #[error("no image given for source generator #{}", .0 + 1)]
    MissingImage(usize),
    #[error("relator {} is not homogeneous; graded and canonical modes need homogeneous relators", .0 + 1)]
    NonHomogeneous(usize),
    #[error("layer canonicalization is only available in canonical mode")]
    NotCanonical,
    #[error("invalid presentation: {0}")]
    Invalid(String),
    /// A condition the algorithm guarantees was violated.
    #[error("internal error: {0}")]
    Internal(String),
}
