use thiserror::Error;

/// Everything that can go wrong while building or checking a multiplet.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("arity mismatch: {left} vs {right} indeterminates")]
    ArityMismatch { left: usize, right: usize },

    #[error("unsupported rank {0}: need an even rank >= 4")]
    UnsupportedRank(usize),

    #[error("brute-force Weyl group oracle is only available up to rank 6 (got {0})")]
    OracleUnavailable(usize),

    #[error("label m{index} = 0: degenerate multiplets (limits of irreps) are not supported")]
    DegenerateLabel { index: usize },

    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },

    #[error("conformal weight d is only defined for rank 6 (got {0})")]
    ConformalWeightUnavailable(usize),

    #[error("signature label n{index} = {form} is not generically positive")]
    NonDominant { index: usize, form: String },

    #[error("cannot order {left} against {right} for all admissible labels")]
    Incomparable { left: String, right: String },

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("golden fixture line {line}: {msg}")]
    Fixture { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
