//! Monomials, polynomials, tensors and ab-polynomials.

pub mod ab;
mod json;
pub mod monomial;
pub mod poly;
pub mod qpoly;
pub mod tensor;

pub use ab::{ab_to_cd, expand_to_ab, Ab, AbPolynomial, AbWord, Coeff};
pub use monomial::{CdMonomial, Letter};
pub use poly::CdPolynomial;
pub use qpoly::{gaussian_binomial, QPoly};
pub use tensor::TensorElement;
