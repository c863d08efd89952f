//! Shared inputs for the criterion benches.

use lambdasimp::{parse, Expr, Vocabulary};

/// Expressions over `x, y` of increasing depth.
pub const EXPRESSIONS: [(&str, &str); 4] = [
    ("sigma2", "sigma^2(x)"),
    ("product", "lambda^3(x*y)"),
    ("nested", "lambda^2(sigma^2(x) + y)"),
    ("worked", "lambda^3(y + sigma^2(x*y) + psi^3(y)) * lambda^2(x)"),
];

pub fn two_generators() -> Vocabulary {
    Vocabulary::new(["x", "y"]).expect("valid names")
}

pub fn expression(text: &str) -> Expr {
    parse(text, &two_generators()).expect("bench expression parses")
}
