//! Exact computations with the cd-index of the Boolean and cubical lattices.

pub mod algebra;
pub mod analysis;
pub mod coalgebra;
pub mod dual;
pub mod error;
pub mod lattice;
pub mod oracle;
pub mod verify;

pub use algebra::{CdMonomial, CdPolynomial, TensorElement};
pub use error::{Error, Result};
