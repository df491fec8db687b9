//! Exact arithmetic in GF(p^e) and dense linear algebra over it.

mod field;
mod matrix;

pub use field::{is_prime, ArithOp, Field, FieldElement, MAX_ORDER};
pub use matrix::{Matrix, Rref};

pub(crate) use matrix::{dot, same_field, weight};
