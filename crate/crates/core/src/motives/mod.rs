//! Motives of curves: simplification in `L` and `a<i>_<k> = λ^k(h¹(X_i))`,
//! the zeta function, the closed rank 1-3 formulas, and the conjectural
//! ADHM/plethystic formula together with the comparison of both.

mod adhm;
mod bb;
mod partition;
mod series;
mod verify;

use crate::error::{Error, Result};
use crate::expr::{Expr, Vocabulary};
use crate::poly::{Polynomial, VarId};
use crate::simplifier::{simplify_with, GenValue, MuTable, Source};
use crate::universal::l_op_seq;

pub use adhm::{zeta_series, adhm_hn, adhm_motive, adhm_motive_with, mobius, plog_hr, psi_series, AdhmConfig, AdhmResult};
pub use bb::bb_motive;
pub use partition::{partitions_of, Cell, Partition, DEFAULT_PARTITION_BOUND};
pub use series::LaurentSeries;
pub use verify::{report_json, sweep, verify_pair, PairReport};

/// The Lefschetz variable `L`.
pub fn l_var() -> VarId {
    VarId::named("L")
}

pub fn l_poly() -> Polynomial {
    Polynomial::var(l_var())
}

/// `L^e`.
pub fn l_pow(e: u32) -> Polynomial {
    Polynomial::var_pow(l_var(), e)
}

/// `a<i>_<k> = λ^k(h¹(X_i))`.
pub fn a_var(i: usize, k: usize) -> VarId {
    VarId::named(&format!("a{i}_{k}"))
}

/// A smooth projective curve `X_i` of genus `g >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Curve {
    pub index: usize,
    pub genus: usize,
}

impl Curve {
    pub fn new(index: usize, genus: usize) -> Result<Curve> {
        if genus < 2 {
            return Err(Error::InvalidArgument(format!("curve genus must be at least 2, got {genus}")));
        }
        if index == 0 {
            return Err(Error::InvalidArgument("curve index must be positive".into()));
        }
        Ok(Curve { index, genus })
    }

    /// `a_{i,1}, ..., a_{i,g}`.
    pub fn a_vars(&self) -> Vec<VarId> {
        (1..=self.genus).map(|k| a_var(self.index, k)).collect()
    }

    /// `λ^k(h¹(X))`: `a_k` for `k <= g`, `L^{k-g} a_{2g-k}` up to `2g`, then 0.
    pub fn lambda_h1(&self, k: usize) -> Polynomial {
        let g = self.genus;
        match k {
            0 => Polynomial::one(),
            _ if k <= g => Polynomial::var(a_var(self.index, k)),
            _ if k < 2 * g => l_pow((k - g) as u32) * Polynomial::var(a_var(self.index, 2 * g - k)),
            _ if k == 2 * g => l_pow(g as u32),
            _ => Polynomial::zero(),
        }
    }

    /// The motive `[X] = 1 + a_1 + L`.
    pub fn motive(&self) -> Polynomial {
        Polynomial::one() + Polynomial::var(a_var(self.index, 1)) + l_poly()
    }

    fn source(&self) -> Source {
        Source::Relations {
            vars: self.a_vars(),
            powers: (1..=2 * self.genus).map(|k| self.lambda_h1(k)).collect(),
        }
    }
}

/// `P_X(arg) = Σ_{k=0}^{2g} λ^k(h¹(X)) arg^k`.
pub fn px_at(curve: &Curve, arg: &Polynomial) -> Polynomial {
    // Horner
    let mut acc = Polynomial::zero();
    for k in (0..=2 * curve.genus).rev() {
        acc = &acc * arg + curve.lambda_h1(k);
    }
    acc
}

/// Generator names for motivic expressions: `L`, then `X1..Xn`, then
/// `H1..Hn` for `h¹(X_i)`, numbered by the curves' indices.
pub fn motivic_vocabulary(curves: &[Curve]) -> Vocabulary {
    let mut names = vec!["L".to_string()];
    names.extend(curves.iter().map(|c| format!("X{}", c.index)));
    names.extend(curves.iter().map(|c| format!("H{}", c.index)));
    Vocabulary::new(names).expect("curve indices are distinct")
}

/// Per-computation state for motivic simplification: the μ-tables of the
/// curves, with `L` treated as a line element.
#[derive(Debug, Clone)]
pub struct MotiveContext {
    curves: Vec<Curve>,
    table: MuTable,
    gens: Vec<GenValue>,
}

impl MotiveContext {
    pub fn new(curves: &[Curve]) -> Result<MotiveContext> {
        for (k, c) in curves.iter().enumerate() {
            if curves[..k].iter().any(|d| d.index == c.index) {
                return Err(Error::InvalidArgument(format!("curve X{} declared twice", c.index)));
            }
        }
        let table = MuTable::new(curves.iter().map(Curve::source).collect(), vec![l_var()]);
        let mut gens = vec![GenValue::Poly(l_poly())];
        gens.extend(curves.iter().map(|c| GenValue::Poly(c.motive())));
        gens.extend((1..=curves.len()).map(GenValue::Source));
        Ok(MotiveContext {
            curves: curves.to_vec(),
            table,
            gens,
        })
    }

    pub fn curves(&self) -> &[Curve] {
        &self.curves
    }

    pub fn vocabulary(&self) -> Vocabulary {
        motivic_vocabulary(&self.curves)
    }

    pub fn simplify(&mut self, e: &Expr) -> Result<Polynomial> {
        simplify_with(e, &mut self.table, &self.gens)?.assert_integral()
    }

    pub fn parse_and_simplify(&mut self, text: &str) -> Result<Polynomial> {
        let e = crate::expr::parse(text, &self.vocabulary())?;
        self.simplify(&e)
    }

    /// ψ_k of a polynomial in `L` and the `a` variables.
    pub fn apply_psi(&mut self, p: &Polynomial, k: u32) -> Result<Polynomial> {
        self.table.apply_psi(p, k)
    }

    /// `[λ^0(w), ..., λ^n(w)]`, all from one list of Adams operations.
    pub fn lambda_all(&mut self, w: &Polynomial, n: usize) -> Result<Vec<Polynomial>> {
        let psis = (1..=n as u32)
            .map(|j| self.table.apply_psi(w, j))
            .collect::<Result<Vec<_>>>()?;
        l_op_seq(&psis)
            .into_iter()
            .map(Polynomial::assert_integral)
            .collect()
    }
}

/// Simplifies a motivic expression over `L`, `[X_i]` and `h¹(X_i)` into a
/// polynomial in `L` and `a<i>_<k>`.
pub fn motive_simp(e: &Expr, curves: &[Curve]) -> Result<Polynomial> {
    MotiveContext::new(curves)?.simplify(e)
}

/// The single-curve context used by the rank formulas.
pub(crate) fn curve_context(g: usize) -> Result<(Curve, MotiveContext)> {
    let curve = Curve::new(1, g)?;
    let ctx = MotiveContext::new(&[curve])?;
    Ok((curve, ctx))
}

/// Quotient of `m` by the Jacobian factor `P_X(1)`, which is monic of degree
/// one in `a_g`.
pub fn jacobian_quotient(m: &Polynomial, curve: &Curve) -> Result<Polynomial> {
    m.div_exact_in(&px_at(curve, &Polynomial::one()), a_var(curve.index, curve.genus))
}

#[cfg(test)]
mod tests;
