pub mod algebra;
pub mod betti;
pub mod corpus;
pub mod criteria;
pub mod error;
pub mod field;
pub mod linalg;
pub mod module;
pub mod properties;
pub mod resolution;
pub mod series;
pub mod simplicial;
pub mod stanley_reisner;

pub use error::{Error, Result};
pub use field::{DynFp, FieldSpec, Fp, Gf32003, Rational, Scalar};
pub use linalg::{ExactMatrix, SparseVec};
