use thiserror::Error;

/// Errors reported by graph construction and matching operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{dim} is wrapped and must be at least 3, got {len}")]
    WrappedTooShort { dim: &'static str, len: usize },

    #[error("{dim} must be at least 2, got {len}")]
    DimensionTooShort { dim: &'static str, len: usize },

    #[error("{what} index {index} out of range (1..={max})")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        max: usize,
    },

    #[error("matching is bound to a different graph")]
    GraphMismatch,

    #[error("matching is not a perfect matching of this graph")]
    NotPerfect,

    #[error("face {face} is not alternating in this matching")]
    NotAlternating { face: usize },

    #[error("edge set is not a subset of the matching")]
    NotASubset,

    #[error("operation requires {required}")]
    UnsupportedTopology { required: &'static str },

    #[error("translation ({dx},{dy}) shifts an unwrapped direction")]
    ShiftNotWrapped { dx: i64, dy: i64 },

    #[error("matching store is incomplete: a flip neighbor is missing")]
    IncompleteStore,

    #[error("matching occupies edges of column class {class}")]
    ClassNotEmpty { class: usize },

    #[error("cannot export {object} as {format}")]
    UnsupportedExport {
        format: &'static str,
        object: &'static str,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
