use thiserror::Error;

/// Errors surfaced by the library. Everything else is a plain value:
/// the algebraic operations themselves are total on their domains.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed tree or forest text. `offset` is a byte offset into the input.
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    /// A requested enumeration or matrix exceeds the configured desk-scale cap.
    #[error("resource limit: {what} = {requested} exceeds the supported bound {max}")]
    ResourceLimit {
        what: &'static str,
        requested: usize,
        max: usize,
    },

    /// Multiplicities n(t;t') and m(t;t') require |t| <= |t'|.
    #[error("argument order: first tree has {left} vertices, second has {right}; expected |t| <= |t'|")]
    ArgumentOrder { left: u64, right: u64 },

    /// Triple multiplicities require |t1| + |t2| = |t3|.
    #[error("degree mismatch: |t1| + |t2| = {sum} but |t3| = {target}")]
    DegreeMismatch { sum: u64, target: u64 },

    /// A word in the growth/pruning letters fails the validity conditions
    /// for the given target grade.
    #[error("invalid word {word:?} for grade {grade}: {reason}")]
    InvalidWord {
        word: String,
        grade: usize,
        reason: String,
    },

    /// Characteristic polynomials are only defined for square matrices.
    #[error("matrix is not square: {rows} rows, {cols} columns")]
    NotSquare { rows: usize, cols: usize },

    /// Unknown identity name passed to the verification driver.
    #[error("unknown identity {name:?}; available: {available}")]
    UnknownIdentity { name: String, available: String },
}

pub type Result<T> = std::result::Result<T, Error>;
