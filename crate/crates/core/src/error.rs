use thiserror::Error;

/// Errors raised for contract violations. A search that finds nothing is
/// not an error; it returns `None`.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid symbol {found:?} at position {position}")]
    InvalidSymbol { position: usize, found: char },

    #[error("word mixes the \"()\" and \"01\" alphabets")]
    MixedAlphabet,

    #[error("prefix heights are undefined for the empty word")]
    EmptyWord,

    #[error("invalid range [{lo}, {hi}] for length {len}")]
    InvalidRange { lo: usize, hi: usize, len: usize },

    #[error("index {index} out of bounds for length {len}")]
    OutOfBounds { index: usize, len: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("leaf block outside the gadget domain: {0}")]
    Domain(String),

    #[error("infeasible request: {0}")]
    Infeasible(String),

    #[error("arithmetic overflow computing {0}")]
    Overflow(&'static str),

    #[error("malformed corpus: {0}")]
    Corpus(String),
}

pub type Result<T> = std::result::Result<T, Error>;
