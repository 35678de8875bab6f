use thiserror::Error;

use crate::matrix::ShapeRatio;

/// Precondition violations raised by the library operations.
///
/// Every variant names the operation that rejected its input together with the
/// offending dimensions, so a message can be surfaced to a user unchanged.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DomainError {
    #[error("{op}: matrices must have at least one row and one column (got {rows}x{cols})")]
    EmptyMatrix { op: &'static str, rows: usize, cols: usize },

    #[error("{op}: entry count {len} does not match {rows}x{cols}")]
    EntryCount {
        op: &'static str,
        rows: usize,
        cols: usize,
        len: usize,
    },

    #[error("{op}: dimension mismatch between {left_rows}x{left_cols} and {right_rows}x{right_cols}")]
    DimensionMismatch {
        op: &'static str,
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },

    #[error("{op}: requires a square matrix (got {rows}x{cols})")]
    NotSquare { op: &'static str, rows: usize, cols: usize },

    #[error("{op}: block size {k} with block index ({i},{j}) is not aligned with a {rows}x{cols} matrix")]
    BlockMisaligned {
        op: &'static str,
        rows: usize,
        cols: usize,
        i: usize,
        j: usize,
        k: usize,
    },

    #[error("{op}: {name} must be a positive integer")]
    NonPositive { op: &'static str, name: &'static str },

    #[error("{op}: different shape ratios {left} ({left_rows}x{left_cols}) and {right} ({right_rows}x{right_cols}); different M_mu components cannot be combined")]
    ShapeRatioMismatch {
        op: &'static str,
        left: ShapeRatio,
        left_rows: usize,
        left_cols: usize,
        right: ShapeRatio,
        right_rows: usize,
        right_cols: usize,
    },

    #[error("{op}: interpolation weight {value} lies outside [0, 1]")]
    WeightOutOfRange { op: &'static str, value: String },
}

pub type Result<T, E = DomainError> = std::result::Result<T, E>;
