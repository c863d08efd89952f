//! Simplification of λ/σ/ψ terms into canonical polynomials in the
//! λ-powers of the generators, and conversion to the σ basis.

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::expr::{depth, Expr};
use crate::poly::{lambda_var, sigma_var, Int, Polynomial, VarId};
use crate::universal::{l_op_seq, l_seq, n_op_seq, p_op_seq};

/// How the λ-powers of one generator are represented.
#[derive(Debug, Clone)]
pub enum Source {
    /// Free generator: `λ^j(x_i)` is the variable `x<i>_<j>` for `j <= bound`.
    Free { bound: usize },
    /// Generator with relations: `vars[j-1]` stands for `λ^j` for `j <= vars.len()`,
    /// `powers[k-1]` is `λ^k` as a polynomial, and `λ^k = 0` past the end.
    Relations { vars: Vec<VarId>, powers: Vec<Polynomial> },
}

/// Lazily filled tables of `Ψ_{i,k}` (Adams operations of generator `i` in
/// the λ basis) and `μ_{a,b}(x_i) = ψ_a(λ^b(x_i))`.
#[derive(Debug, Clone)]
pub struct MuTable {
    sources: Vec<Source>,
    lines: Vec<VarId>,
    var_index: FxHashMap<VarId, (usize, usize)>,
    psi: Vec<Vec<Polynomial>>,
    mu: FxHashMap<(usize, u32), Vec<Polynomial>>,
}

impl MuTable {
    /// `sources[i-1]` describes generator `i`; `lines` are variables with
    /// `ψ_k(v) = v^k`.
    pub fn new(sources: Vec<Source>, lines: Vec<VarId>) -> MuTable {
        let mut var_index = FxHashMap::default();
        for (i0, s) in sources.iter().enumerate() {
            match s {
                Source::Free { bound } => {
                    for j in 1..=*bound {
                        var_index.insert(lambda_var(i0 + 1, j), (i0 + 1, j));
                    }
                }
                Source::Relations { vars, .. } => {
                    for (j0, v) in vars.iter().enumerate() {
                        var_index.insert(*v, (i0 + 1, j0 + 1));
                    }
                }
            }
        }
        let n = sources.len();
        MuTable {
            sources,
            lines,
            var_index,
            psi: vec![Vec::new(); n],
            mu: FxHashMap::default(),
        }
    }

    /// Table for free generators with the given depth bounds.
    pub fn free(bounds: &[usize]) -> MuTable {
        MuTable::new(bounds.iter().map(|&bound| Source::Free { bound }).collect(), Vec::new())
    }

    pub fn generators(&self) -> usize {
        self.sources.len()
    }

    fn source(&self, i: usize) -> Result<&Source> {
        self.sources
            .get(i.wrapping_sub(1))
            .ok_or_else(|| Error::UnknownGenerator(format!("#{i}")))
    }

    /// `λ^k` of generator `i` in the table's variables.
    pub fn lambda_power(&self, i: usize, k: usize) -> Result<Polynomial> {
        if k == 0 {
            return Ok(Polynomial::one());
        }
        match self.source(i)? {
            Source::Free { bound } => {
                if k > *bound {
                    return Err(Error::DepthExceeded {
                        generator: i,
                        needed: k,
                        bound: *bound,
                    });
                }
                Ok(Polynomial::var(lambda_var(i, k)))
            }
            Source::Relations { powers, .. } => {
                Ok(powers.get(k - 1).cloned().unwrap_or_else(Polynomial::zero))
            }
        }
    }

    /// `Ψ_{i,k} = ψ_k(x_i)`.
    pub fn psi(&mut self, i: usize, k: usize) -> Result<Polynomial> {
        self.ensure_psi(i, k)?;
        Ok(self.psi[i - 1][k - 1].clone())
    }

    fn ensure_psi(&mut self, i: usize, k: usize) -> Result<()> {
        let have = self.psi[i - 1].len();
        if k <= have {
            return Ok(());
        }
        let mut want = k.max(2 * have);
        if let Source::Free { bound } = self.source(i)? {
            if k > *bound {
                return Err(Error::DepthExceeded {
                    generator: i,
                    needed: k,
                    bound: *bound,
                });
            }
            want = want.min(*bound);
        }
        let args = (1..=want)
            .map(|j| self.lambda_power(i, j))
            .collect::<Result<Vec<_>>>()?;
        let mut seq = n_op_seq(&args);
        seq.remove(0);
        for p in &seq[have..] {
            if !p.is_integral() {
                return Err(Error::NonIntegralResult(format!("Ψ for generator {i}")));
            }
        }
        self.psi[i - 1] = seq;
        Ok(())
    }

    /// `μ_{a,b}(x_i) = L^op_b(Ψ_{i,a}, Ψ_{i,2a}, ..., Ψ_{i,ba})`.
    pub fn mu(&mut self, i: usize, a: u32, b: usize) -> Result<Polynomial> {
        self.ensure_mu(i, a, b)?;
        Ok(self.mu[&(i, a)][b - 1].clone())
    }

    fn ensure_mu(&mut self, i: usize, a: u32, b: usize) -> Result<()> {
        let have = self.mu.get(&(i, a)).map_or(0, Vec::len);
        if b <= have {
            return Ok(());
        }
        let au = a as usize;
        let mut want = b.max(2 * have);
        if let Source::Free { bound } = self.source(i)? {
            if au * b > *bound {
                return Err(Error::DepthExceeded {
                    generator: i,
                    needed: au * b,
                    bound: *bound,
                });
            }
            want = want.min(*bound / au);
        }
        let seq = if a == 1 {
            (1..=want)
                .map(|j| self.lambda_power(i, j))
                .collect::<Result<Vec<_>>>()?
        } else {
            self.ensure_psi(i, au * want)?;
            let args: Vec<Polynomial> = (1..=want).map(|j| self.psi[i - 1][au * j - 1].clone()).collect();
            let mut seq = l_op_seq(&args);
            seq.remove(0);
            for (j, p) in seq.iter().enumerate().skip(have) {
                if !p.is_integral() {
                    return Err(Error::NonIntegralResult(format!(
                        "μ({a},{}) for generator {i}",
                        j + 1
                    )));
                }
            }
            seq
        };
        self.mu.insert((i, a), seq);
        Ok(())
    }

    /// ψ_k applied to the element represented by `p`: every λ-variable
    /// `λ^j(x_i)` becomes `μ_{k,j}(x_i)` and every line variable `v` becomes `v^k`.
    pub fn apply_psi(&mut self, p: &Polynomial, k: u32) -> Result<Polynomial> {
        if k == 0 {
            return Err(Error::InvalidArgument("ψ index must be at least 1".into()));
        }
        if k == 1 {
            return Ok(p.clone());
        }
        let mut needed: Vec<(usize, usize)> = Vec::new();
        for v in p.variables() {
            if self.lines.contains(&v) {
                continue;
            }
            match self.var_index.get(&v) {
                Some(&ij) => needed.push(ij),
                None => {
                    return Err(Error::InvalidArgument(format!(
                        "variable `{}` is not a λ-power of a declared generator",
                        v.name()
                    )))
                }
            }
        }
        let mut maxb: FxHashMap<usize, usize> = FxHashMap::default();
        for (i, j) in needed {
            let e = maxb.entry(i).or_insert(0);
            *e = (*e).max(j);
        }
        let mut gens: Vec<_> = maxb.into_iter().collect();
        gens.sort_unstable();
        for (i, b) in gens {
            self.ensure_mu(i, k, b)?;
        }
        let table = &*self;
        Ok(p.substitute_with(|v| {
            if table.lines.contains(&v) {
                return Some(Polynomial::var_pow(v, k));
            }
            let &(i, j) = table.var_index.get(&v)?;
            Some(table.mu[&(i, k)][j - 1].clone())
        }))
    }
}

/// Meaning of a generator of the term language.
#[derive(Debug, Clone)]
pub enum GenValue {
    /// Generator `i` of the μ-table; `λ^k` of it is read off directly.
    Source(usize),
    /// A fixed polynomial in the table's variables.
    Poly(Polynomial),
}

/// Simplifies `e` bottom-up: each λ, σ and ψ node is eliminated once its
/// argument is a polynomial. `gens[i-1]` gives the value of `Gen(i)`.
pub fn simplify_with(e: &Expr, table: &mut MuTable, gens: &[GenValue]) -> Result<Polynomial> {
    Ok(match e {
        Expr::Zero => Polynomial::zero(),
        Expr::One => Polynomial::one(),
        Expr::Int(n) => Polynomial::from_int(Int::from_big(n.clone())),
        Expr::Gen(i) => match gens.get(i.wrapping_sub(1)) {
            Some(GenValue::Source(s)) => table.lambda_power(*s, 1)?,
            Some(GenValue::Poly(p)) => p.clone(),
            None => return Err(Error::UnknownGenerator(format!("#{i}"))),
        },
        Expr::Neg(a) => -simplify_with(a, table, gens)?,
        Expr::Add(a, b) => simplify_with(a, table, gens)? + simplify_with(b, table, gens)?,
        Expr::Mul(a, b) => simplify_with(a, table, gens)? * simplify_with(b, table, gens)?,
        Expr::Psi(k, a) => {
            let w = simplify_with(a, table, gens)?;
            checked(table.apply_psi(&w, *k)?, "ψ")?
        }
        Expr::Lambda(k, a) => {
            if let Expr::Gen(i) = &**a {
                if let Some(GenValue::Source(s)) = gens.get(i.wrapping_sub(1)) {
                    return table.lambda_power(*s, *k as usize);
                }
            }
            let w = simplify_with(a, table, gens)?;
            let args = adams_list(&w, *k, table)?;
            checked(l_op_seq(&args).swap_remove(*k as usize), "λ")?
        }
        Expr::Sigma(k, a) => {
            let w = simplify_with(a, table, gens)?;
            let args = adams_list(&w, *k, table)?;
            checked(l_seq(&args).swap_remove(*k as usize), "σ")?
        }
    })
}

fn adams_list(w: &Polynomial, k: u32, table: &mut MuTable) -> Result<Vec<Polynomial>> {
    (1..=k).map(|j| table.apply_psi(w, j)).collect()
}

fn checked(p: Polynomial, op: &str) -> Result<Polynomial> {
    if p.is_integral() {
        Ok(p)
    } else {
        Err(Error::NonIntegralResult(format!("after eliminating {op}: {p}")))
    }
}

/// The canonical polynomial of an abstract term over `n` generators, in the
/// variables `x<i>_<j> = λ^j(x_i)` with `j <= depth(e)_i`.
pub fn lambda_simp(e: &Expr, n: usize) -> Result<Polynomial> {
    if e.max_generator() > n {
        return Err(Error::UnknownGenerator(format!("#{}", e.max_generator())));
    }
    let d = depth(e, n);
    let mut table = MuTable::free(&d.0);
    let gens: Vec<GenValue> = (1..=n).map(GenValue::Source).collect();
    simplify_with(e, &mut table, &gens)?.assert_integral()
}

/// Rewrites a polynomial in `x<i>_<j>` into the σ basis `s<i>_<j> = σ^j(x_i)`.
pub fn to_sigma_basis(p: &Polynomial) -> Result<Polynomial> {
    let mut maxj: FxHashMap<usize, usize> = FxHashMap::default();
    let mut map = Vec::new();
    for v in p.variables() {
        let (i, j) = parse_lambda_var(v).ok_or_else(|| {
            Error::InvalidArgument(format!("`{}` is not a λ-basis variable", v.name()))
        })?;
        let e = maxj.entry(i).or_insert(0);
        *e = (*e).max(j);
        map.push((v, i, j));
    }
    let mut pop: FxHashMap<usize, Vec<Polynomial>> = FxHashMap::default();
    for (&i, &d) in &maxj {
        let args: Vec<Polynomial> = (1..=d).map(|j| Polynomial::var(sigma_var(i, j))).collect();
        pop.insert(i, p_op_seq(&args));
    }
    let image: FxHashMap<VarId, Polynomial> = map
        .into_iter()
        .map(|(v, i, j)| (v, pop[&i][j].clone()))
        .collect();
    p.substitute_with(|v| image.get(&v).cloned()).assert_integral()
}

/// `(i, j)` for a variable named `x<i>_<j>`.
pub fn parse_lambda_var(v: VarId) -> Option<(usize, usize)> {
    let rest = v.name().strip_prefix('x')?;
    let (i, j) = rest.split_once('_')?;
    let parse = |s: &str| -> Option<usize> {
        (!s.is_empty() && s.bytes().all(|b| b.is_ascii_digit()) && !s.starts_with('0'))
            .then(|| s.parse().ok())
            .flatten()
    };
    Some((parse(i)?, parse(j)?))
}

#[cfg(test)]
mod tests;
