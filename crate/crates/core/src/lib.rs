pub mod error;
pub mod expr;
pub mod motives;
pub mod poly;
pub mod simplifier;
pub mod symfunc;
pub mod universal;

pub use error::{Error, Result};
pub use expr::{depth, parse, DepthVector, Expr, Vocabulary};
pub use poly::{Monomial, Polynomial, VarId};
