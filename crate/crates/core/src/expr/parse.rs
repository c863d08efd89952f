use num_bigint::BigInt;

use super::Expr;
use crate::error::{Error, Result};

/// Guard on λ/σ/ψ indices.
pub const MAX_OPERATOR_INDEX: u32 = 10_000;

/// Declared generator names; `Gen(i)` refers to `names[i - 1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vocabulary {
    names: Vec<String>,
}

impl Vocabulary {
    pub fn new<I, S>(names: I) -> Result<Vocabulary>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (k, n) in names.iter().enumerate() {
            let ok = n.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok || matches!(n.as_str(), "lambda" | "sigma" | "psi") {
                return Err(Error::InvalidArgument(format!("invalid generator name `{n}`")));
            }
            if names[..k].contains(n) {
                return Err(Error::InvalidArgument(format!("duplicate generator `{n}`")));
            }
        }
        Ok(Vocabulary { names })
    }

    /// Abstract generators `x1, ..., xn`.
    pub fn abstract_n(n: usize) -> Vocabulary {
        Vocabulary::new((1..=n).map(|i| format!("x{i}"))).unwrap()
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i - 1]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name).map(|k| k + 1)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vocab: &'a Vocabulary,
}

impl Parser<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::SyntaxError {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected `{}`", c as char))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = acc.add(self.term()?);
            } else if self.eat(b'-') {
                acc = acc.add(self.term()?.neg());
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = acc.mul(self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Expr> {
        let negate = self.eat(b'-');
        let mut base = self.atom()?;
        if self.eat(b'^') {
            let at = self.pos;
            let e = self.small_uint("exponent")?;
            if e > MAX_OPERATOR_INDEX {
                self.pos = at;
                return self.err(format!("exponent exceeds {MAX_OPERATOR_INDEX}"));
            }
            base = power(base, e);
        }
        Ok(if negate { base.neg() } else { base })
    }

    fn digits(&mut self) -> Option<&str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (start != self.pos).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn small_uint(&mut self, what: &str) -> Result<u32> {
        let at = self.pos;
        match self.digits() {
            Some(d) => d.parse::<u32>().or_else(|_| {
                self.pos = at;
                self.err(format!("{what} too large"))
            }),
            None => self.err(format!("expected integer {what}")),
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits().unwrap();
                Ok(Expr::int(d.parse::<BigInt>().unwrap()))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match name {
                    "lambda" | "sigma" | "psi" => self.operator(name, start),
                    _ => match self.vocab.index_of(name) {
                        Some(i) => Ok(Expr::Gen(i)),
                        None => Err(Error::UnknownGenerator(name.to_string())),
                    },
                }
            }
            Some(_) => self.err("unexpected character"),
            None => self.err("unexpected end of input"),
        }
    }

    fn operator(&mut self, name: &str, start: usize) -> Result<Expr> {
        self.expect(b'^')?;
        let at = self.pos;
        let k = self.small_uint("operator index")?;
        if k > MAX_OPERATOR_INDEX {
            self.pos = at;
            return self.err(format!("operator index exceeds {MAX_OPERATOR_INDEX}"));
        }
        self.expect(b'(')?;
        let inner = self.expr()?;
        self.expect(b')')?;
        Ok(match name {
            "lambda" => Expr::lambda(k, inner),
            "sigma" => Expr::sigma(k, inner),
            _ => {
                if k == 0 {
                    self.pos = start;
                    return self.err("psi index must be at least 1");
                }
                Expr::psi(k, inner)
            }
        })
    }
}

fn power(base: Expr, e: u32) -> Expr {
    match e {
        0 => Expr::One,
        _ => (1..e).fold(base.clone(), |acc, _| acc.mul(base.clone())),
    }
}

/// Parses `text` against the declared generators.
pub fn parse(text: &str, vocab: &Vocabulary) -> Result<Expr> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        vocab,
    };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}
