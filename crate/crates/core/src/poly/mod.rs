//! Exact sparse multivariate polynomials over the rationals.

mod int;
mod json;
mod monomial;
mod parse;
mod polynomial;
mod var;

pub use int::Int;
pub use json::{PolyJson, TermJson};
pub use monomial::Monomial;
pub use parse::parse_polynomial;
pub use polynomial::Polynomial;
pub use var::{indexed_var, lambda_var, sigma_var, VarId};

#[cfg(test)]
mod tests;
