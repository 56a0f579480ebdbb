use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// The input violates the standing conventions on `A` or `B`.
    #[error("convention violated: {0}")]
    Convention(String),

    #[error("degenerate point set: {0}")]
    Degenerate(String),

    #[error("subgraph exploration exceeded the cap of {cap} levels: undetermined (possible Andean/infinite μ)")]
    CapExceeded { cap: usize },

    #[error("component of {0:?} is unbounded")]
    UnboundedComponent(Vec<i64>),

    #[error("resonance: {0}")]
    Resonance(String),

    #[error("parameter is not very generic: {0}")]
    NotVeryGeneric(String),

    #[error("holonomic rank is infinite for all parameters (full-dimensional Andean direction)")]
    InfiniteRank,

    #[error("input too large: {0}")]
    TooLarge(String),

    #[error("integer overflow while exploring lattice points")]
    Overflow,

    #[error("field mismatch: {0}")]
    Field(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}
