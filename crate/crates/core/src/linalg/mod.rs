//! Exact linear algebra: dense reference routines and the sparse engine used
//! by the degreewise computations.

mod dense;
mod echelon;
mod sparse;

pub use dense::{ExactMatrix, Rref};
pub use echelon::{first_dependency, left_kernel, rank, Echelon};
pub use sparse::{combine, SparseVec};
