use thiserror::Error;

/// Errors raised by the library.
///
/// `NonIntegralSolution` signals a broken internal invariant (it cannot occur
/// for extensible diagrams); everything else is a violated precondition of
/// the operation that returned it.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not a generalized Cartan matrix: {0}")]
    NotGcm(String),

    #[error("Cartan matrix is not symmetrizable")]
    NotSymmetrizable,

    #[error("marked node {marked} out of range 1..={d}")]
    MarkedOutOfRange { marked: usize, d: usize },

    #[error("level {n} below node count {d}")]
    LevelBelowRank { n: usize, d: usize },

    #[error("level {n} too small; the smallest legal level is {required}")]
    LevelTooSmall { n: usize, required: usize },

    #[error("diagram {name:?} is not extensible: {reason}")]
    NotExtensible { name: String, reason: String },

    #[error("weight has a nonzero box count ({boxes}); operation requires |gamma|_X = 0")]
    BoxesNonzero { boxes: i64 },

    #[error("weights are not comparable in the partial order")]
    NotComparable,

    #[error("level mismatch: {left} vs {right}")]
    LevelMismatch { left: usize, right: usize },

    #[error("budget vector must be nonnegative and integral")]
    NonIntegralBudget,

    #[error("sequence entry must be nonnegative")]
    NegativeEntry,

    #[error("internal inconsistency: linear system has no integral solution ({context})")]
    NonIntegralSolution { context: String },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
