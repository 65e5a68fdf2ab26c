use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("the algebra is not semisimple: {0}")]
    NotSemisimple(String),

    #[error("quantum integer [{rho}] of an axial distance vanishes")]
    SingularAxialDistance { rho: i64 },

    #[error("gamma coefficients depend on the path (residual {residual:e})")]
    GammaInconsistent { residual: f64 },

    #[error("matrix is numerically singular: {0}")]
    Singular(String),

    #[error("rank deficiency: expected {expected}, got {got}")]
    RankDeficient { expected: usize, got: usize },

    #[error("the dimension hypothesis fails for residue sequences {offending:?}")]
    HypothesisViolation { offending: Vec<Vec<i64>> },

    #[error("dimension mismatch: computed {computed}, expected {expected}")]
    DimensionMismatch { computed: usize, expected: usize },

    #[error("subspace is not invariant (leakage {leakage:e})")]
    InvarianceFailure { leakage: f64 },

    #[error("certificate failed: {0}")]
    Certificate(String),

    #[error("element is not in the span of the basis (residual {residual:e})")]
    NotInSpan { residual: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
