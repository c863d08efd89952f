use std::fmt;

use super::{Expr, Vocabulary};

impl Expr {
    /// Text form that `parse` maps back to the same tree.
    pub fn render(&self, vocab: &Vocabulary) -> String {
        let mut s = String::new();
        write_expr(&mut s, self, vocab);
        s
    }
}

fn write_expr(out: &mut String, e: &Expr, v: &Vocabulary) {
    match e {
        Expr::Add(a, b) => {
            write_expr(out, a, v);
            match &**b {
                Expr::Neg(inner) => {
                    out.push_str(" - ");
                    write_term(out, inner, v);
                }
                _ => {
                    out.push_str(" + ");
                    write_term(out, b, v);
                }
            }
        }
        _ => write_term(out, e, v),
    }
}

fn write_term(out: &mut String, e: &Expr, v: &Vocabulary) {
    match e {
        Expr::Mul(a, b) => {
            write_term(out, a, v);
            out.push_str(" * ");
            write_factor(out, b, v);
        }
        _ => write_factor(out, e, v),
    }
}

fn write_factor(out: &mut String, e: &Expr, v: &Vocabulary) {
    match e {
        Expr::Neg(a) => {
            out.push('-');
            write_atom(out, a, v);
        }
        _ => write_atom(out, e, v),
    }
}

fn write_atom(out: &mut String, e: &Expr, v: &Vocabulary) {
    match e {
        Expr::Zero => out.push('0'),
        Expr::One => out.push('1'),
        Expr::Int(n) => out.push_str(&n.to_string()),
        Expr::Gen(i) => out.push_str(v.name(*i)),
        Expr::Lambda(k, a) => op(out, "lambda", *k, a, v),
        Expr::Sigma(k, a) => op(out, "sigma", *k, a, v),
        Expr::Psi(k, a) => op(out, "psi", *k, a, v),
        Expr::Neg(_) | Expr::Add(..) | Expr::Mul(..) => {
            out.push('(');
            write_expr(out, e, v);
            out.push(')');
        }
    }
}

fn op(out: &mut String, name: &str, k: u32, a: &Expr, v: &Vocabulary) {
    out.push_str(name);
    out.push('^');
    out.push_str(&k.to_string());
    out.push('(');
    write_expr(out, a, v);
    out.push(')');
}

impl fmt::Display for Expr {
    /// Renders with generic generator names `g1, g2, ...`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.max_generator();
        let vocab = Vocabulary::new((1..=n).map(|i| format!("g{i}"))).unwrap();
        f.write_str(&self.render(&vocab))
    }
}
