//! Exact linear algebra on finite-dimensional spaces and their tensor powers.

mod echelon;
mod field;
mod map;

pub use echelon::{
    coequalizer, equalizer, image_basis, inverse, kernel_basis, rank, same_image, split_idempotent, Echelon, Splitting,
};
pub use field::{Field, FieldError, Scalar, MAX_PRIME};
pub use map::{flip, tensor_all, LinMap, SparseColumn};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch in {op}: expected {expected}, found {found}")]
    DimensionMismatch { op: &'static str, expected: usize, found: usize },
    #[error("maps are defined over different fields")]
    FieldMismatch,
    #[error("map is not idempotent")]
    NotIdempotent,
    #[error("map is not invertible")]
    NotInvertible,
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("label list has length {found}, expected {expected}")]
    LabelLength { expected: usize, found: usize },
    #[error("duplicate entry at ({row}, {col})")]
    DuplicateEntry { row: usize, col: usize },
    #[error("index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: usize, bound: usize },
}
