//! The term language: rings with two opposite λ-structures and Adams
//! operations over named generators.

mod parse;
mod render;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use parse::{parse, Vocabulary, MAX_OPERATOR_INDEX};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Expr {
    Zero,
    One,
    /// Integer literal `n >= 2`; smaller values are `Zero`, `One` or `Neg`.
    Int(BigInt),
    /// 1-based generator index into the vocabulary.
    Gen(usize),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Lambda(u32, Box<Expr>),
    Sigma(u32, Box<Expr>),
    Psi(u32, Box<Expr>),
}

impl Expr {
    /// Integer constant in normal form.
    pub fn int(n: impl Into<BigInt>) -> Expr {
        let n: BigInt = n.into();
        if n.is_zero() {
            Expr::Zero
        } else if n.is_one() {
            Expr::One
        } else if n < BigInt::zero() {
            Expr::Neg(Box::new(Expr::int(-n)))
        } else {
            Expr::Int(n)
        }
    }

    pub fn gen(i: usize) -> Expr {
        Expr::Gen(i)
    }

    pub fn neg(self) -> Expr {
        Expr::Neg(Box::new(self))
    }

    pub fn add(self, o: Expr) -> Expr {
        Expr::Add(Box::new(self), Box::new(o))
    }

    pub fn sub(self, o: Expr) -> Expr {
        self.add(o.neg())
    }

    pub fn mul(self, o: Expr) -> Expr {
        Expr::Mul(Box::new(self), Box::new(o))
    }

    /// `λ^k`, normalizing `λ^0` to `One`.
    pub fn lambda(k: u32, e: Expr) -> Expr {
        if k == 0 {
            Expr::One
        } else {
            Expr::Lambda(k, Box::new(e))
        }
    }

    /// `σ^k`, normalizing `σ^0` to `One`.
    pub fn sigma(k: u32, e: Expr) -> Expr {
        if k == 0 {
            Expr::One
        } else {
            Expr::Sigma(k, Box::new(e))
        }
    }

    pub fn psi(k: u32, e: Expr) -> Expr {
        assert!(k >= 1, "psi index must be positive");
        Expr::Psi(k, Box::new(e))
    }

    /// Number of AST nodes.
    pub fn size(&self) -> usize {
        match self {
            Expr::Zero | Expr::One | Expr::Int(_) | Expr::Gen(_) => 1,
            Expr::Neg(a) | Expr::Lambda(_, a) | Expr::Sigma(_, a) | Expr::Psi(_, a) => 1 + a.size(),
            Expr::Add(a, b) | Expr::Mul(a, b) => 1 + a.size() + b.size(),
        }
    }

    /// Largest generator index used.
    pub fn max_generator(&self) -> usize {
        match self {
            Expr::Zero | Expr::One | Expr::Int(_) => 0,
            Expr::Gen(i) => *i,
            Expr::Neg(a) | Expr::Lambda(_, a) | Expr::Sigma(_, a) | Expr::Psi(_, a) => a.max_generator(),
            Expr::Add(a, b) | Expr::Mul(a, b) => a.max_generator().max(b.max_generator()),
        }
    }
}

/// Per-generator maximum λ-depth.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DepthVector(pub Vec<usize>);

impl DepthVector {
    pub fn zeros(n: usize) -> DepthVector {
        DepthVector(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> DepthVector {
        let mut d = vec![0; n];
        d[i - 1] = 1;
        DepthVector(d)
    }

    pub fn max(&self, o: &DepthVector) -> DepthVector {
        DepthVector(self.0.iter().zip(&o.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn scale(&self, k: usize) -> DepthVector {
        DepthVector(self.0.iter().map(|a| a * k).collect())
    }

    /// Component-wise partial order.
    pub fn le(&self, o: &DepthVector) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a <= b)
    }

    pub fn get(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for DepthVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, d) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// Maximum λ-depth of `e` over `n` generators. Constants have depth 0,
/// generators unit vectors; `+`, `·` take the component-wise maximum and
/// `λ^k`, `σ^k`, `ψ_k` multiply by `k`.
pub fn depth(e: &Expr, n: usize) -> DepthVector {
    match e {
        Expr::Zero | Expr::One | Expr::Int(_) => DepthVector::zeros(n),
        Expr::Gen(i) => DepthVector::unit(n, *i),
        Expr::Neg(a) => depth(a, n),
        Expr::Add(a, b) | Expr::Mul(a, b) => depth(a, n).max(&depth(b, n)),
        Expr::Lambda(k, a) | Expr::Sigma(k, a) | Expr::Psi(k, a) => depth(a, n).scale(*k as usize),
    }
}
