use thiserror::Error;

use crate::fock::Statistics;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("statistics mismatch: {left:?} vs {right:?}")]
    StatisticsMismatch { left: Statistics, right: Statistics },
    #[error("particle-number sector mismatch: {left} vs {right}")]
    SectorMismatch { left: usize, right: usize },
    #[error("the zero vector has no particle number")]
    ZeroVector,
    #[error("enumeration would produce {count} entries, cap is {cap}")]
    CapExceeded { count: String, cap: u64 },
    #[error("size {size} exceeds the limit of {limit}")]
    SizeExceeded { size: usize, limit: usize },
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("invalid Greechie diagram: {0}")]
    InvalidDiagram(String),
    #[error("not an orthomodular lattice: {0}")]
    NotOrthomodular(String),
    #[error("not an ortholattice embedding: {0}")]
    NotEmbedding(String),
    #[error("extension is not Boolean saturated: {0}")]
    NotSaturated(String),
    #[error("homomorphism domain does not match the possibility space")]
    DomainMismatch,
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::StatisticsMismatch { .. } => "StatisticsMismatch",
            Error::SectorMismatch { .. } => "SectorMismatch",
            Error::ZeroVector => "ZeroVector",
            Error::CapExceeded { .. } => "CapExceeded",
            Error::SizeExceeded { .. } => "SizeExceeded",
            Error::UnknownElement(_) => "UnknownElement",
            Error::InvalidDiagram(_) => "InvalidDiagram",
            Error::NotOrthomodular(_) => "NotOrthomodular",
            Error::NotEmbedding(_) => "NotEmbedding",
            Error::NotSaturated(_) => "NotSaturated",
            Error::DomainMismatch => "DomainMismatch",
            Error::Parse { .. } => "Parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
