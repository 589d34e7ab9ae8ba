use crate::scalar::Rat;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("product table not commutative at ({i},{j}), coordinate {k}")]
    NotCommutative { i: usize, j: usize, k: usize },
    #[error("Jordan identity fails on basis quadruple ({i},{j},{k};{l})")]
    JordanIdentityFails { i: usize, j: usize, k: usize, l: usize },
    #[error("declared unit index {index} is not a unit")]
    InvalidDeclaredUnit { index: usize },
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("algebra has no unit")]
    NoUnit,
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("Peirce eigenspace dimensions do not sum to the algebra dimension")]
    PeirceDefect,
    #[error("nilpotent element detected: {}", crate::error::coords_str(witness))]
    NilpotentDetected { witness: Vec<Rat> },
    #[error("spectral split has irrational roots; exact mode cannot refine further")]
    SplitOverReals,
    #[error("hermitian octonion algebras exist only for rank <= 3 (got {n})")]
    UnsupportedRank { n: usize },
    #[error("off-diagonal Peirce dimensions differ across pairs: {0:?}")]
    UnequalPeirceDims(Vec<usize>),
    #[error("illegal coordinate dimension {d} at frame size {n}")]
    IllegalCoordinateDim { n: usize, d: usize },
    #[error("algebra has nilpotent elements; decomposition requires none certified")]
    NilpotentObstruction,
    #[error("associativity fails at basis triple ({i},{j},{k})")]
    NotAssociative { i: usize, j: usize, k: usize },
    #[error("invalid involution: {0}")]
    InvolutionInvalid(String),
    #[error("float iteration failed to converge within {0} steps")]
    NoConvergence(usize),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub(crate) fn coords_str(v: &[Rat]) -> String {
    v.iter()
        .map(|r| r.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
