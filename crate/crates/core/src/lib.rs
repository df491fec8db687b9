//! Semilinear (σ) hulls of linear and matrix-product codes over GF(p^e).
//!
//! The crate computes σ duals and σ hull dimensions of linear codes through
//! rank formulas, evaluates the hull of a matrix-product code from its
//! constituents, steers hull dimensions through monomial equivalence, and
//! derives entanglement-assisted quantum code parameters from the results.
//! Every formula has a brute-force counterpart in [`oracle`].
//!
//! ```
//! use sigmahull::{Field, LinearCode, SemilinearIsometry, semilinear::sigma_hull};
//!
//! let gf3 = Field::prime(3).unwrap();
//! let rep = LinearCode::repetition(&gf3, 3);
//! let euclidean = SemilinearIsometry::euclidean(&gf3, 3);
//! assert_eq!(sigma_hull(&rep, &euclidean).unwrap().dim, 1);
//! ```

pub mod algebra;
pub mod code;
pub mod eaqecc;
pub mod error;
pub mod hullsteer;
pub mod io;
pub mod mpcode;
pub mod oracle;
pub mod semilinear;
pub mod verify;

pub use algebra::{ArithOp, Field, FieldElement, Matrix, Rref};
pub use code::LinearCode;
pub use error::{Error, Result};
pub use mpcode::{MatrixProductSpec, MpSigma, RhoMonomialWitness};
pub use semilinear::{MonomialMatrix, SemilinearIsometry};

/// Environment variable overriding every enumeration budget.
pub const BUDGET_ENV: &str = "SIGMAHULL_BUDGET";

pub(crate) fn budget_override() -> Option<u128> {
    std::env::var(BUDGET_ENV).ok()?.trim().parse().ok()
}
