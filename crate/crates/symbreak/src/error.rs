use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("permutation is not an automorphism of the graph")]
    NotAnAutomorphism,

    #[error("automorphism group larger than cap {cap} (found at least {partial} elements)")]
    GroupTooLarge { cap: u64, partial: u64 },

    #[error("search budget exhausted: best certified lower bound {best_lower}, {labelings_tested} labelings tested")]
    Timeout {
        best_lower: usize,
        labelings_tested: u64,
        failure_proofs: Vec<usize>,
    },

    #[error("no distinguishing labeling found with up to {max_labels} labels")]
    NotFound { max_labels: usize },

    #[error("witness labeling is not distinguishing")]
    InvalidWitness,

    #[error("wrong regime: {0}")]
    WrongRegime(String),

    #[error("construction produced a non-distinguishing labeling: {0}")]
    ConstructionFailure(String),

    #[error("not enough count vectors: {have} available with {k} labels, need {need}")]
    NotEnoughVectors { k: usize, have: u64, need: u64 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
