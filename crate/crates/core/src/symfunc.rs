//! Symmetric functions over finite alphabets of line variables: elementary
//! and complete homogeneous polynomials, reduction of symmetric polynomials
//! to the elementary basis, and the splitting-principle oracle.

use std::collections::HashMap;

use num_rational::BigRational;
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::poly::{Int, Monomial, Polynomial, VarId};

/// Finite alphabet `u_1, ..., u_m` of line variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    vars: Vec<VarId>,
}

impl Alphabet {
    /// `m` fresh variables named `<prefix>1 .. <prefix>m`.
    pub fn new(prefix: &str, m: usize) -> Result<Alphabet> {
        if m == 0 {
            return Err(Error::InvalidArgument("alphabet size must be positive".into()));
        }
        let vars = (1..=m)
            .map(|k| VarId::new(&format!("{prefix}{k}")))
            .collect::<Result<Vec<_>>>()?;
        Ok(Alphabet { vars })
    }

    pub fn from_vars(vars: Vec<VarId>) -> Result<Alphabet> {
        if vars.is_empty() {
            return Err(Error::InvalidArgument("alphabet size must be positive".into()));
        }
        Ok(Alphabet { vars })
    }

    pub fn size(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[VarId] {
        &self.vars
    }

    /// Sum of the line variables.
    pub fn sum(&self) -> Polynomial {
        self.vars.iter().map(|&v| Polynomial::var(v)).sum()
    }
}

/// Elementary symmetric polynomial `e_n(u_1..u_m)`.
pub fn elem_sym(n: usize, alphabet: &Alphabet) -> Polynomial {
    elem_sym_all(n, alphabet).pop().unwrap()
}

/// `[e_0, e_1, ..., e_n]`, from the product of `(1 + u_i t)` truncated at `t^n`.
pub fn elem_sym_all(n: usize, alphabet: &Alphabet) -> Vec<Polynomial> {
    let mut c = vec![Polynomial::zero(); n + 1];
    c[0] = Polynomial::one();
    for &u in alphabet.vars() {
        let u = Polynomial::var(u);
        for k in (1..=n).rev() {
            if !c[k - 1].is_zero() {
                let t = &c[k - 1] * &u;
                c[k] += &t;
            }
        }
    }
    c
}

/// Complete homogeneous symmetric polynomial `h_n`: the sum of all
/// monomials of degree `n` in the alphabet.
pub fn complete_homogeneous(n: usize, alphabet: &Alphabet) -> Polynomial {
    fn rec(vars: &[VarId], left: u32, cur: &mut Vec<(VarId, u32)>, out: &mut Vec<Monomial>) {
        match vars.split_first() {
            None => {
                if left == 0 {
                    out.push(Monomial::from_pairs(cur.iter().copied()));
                }
            }
            Some((&v, rest)) => {
                let lo = if rest.is_empty() { left } else { 0 };
                for e in lo..=left {
                    cur.push((v, e));
                    rec(rest, left - e, cur, out);
                    cur.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    rec(alphabet.vars(), n as u32, &mut Vec::new(), &mut out);
    Polynomial::from_terms(out.into_iter().map(|m| (m, BigRational::from_integer(1.into()))))
}

fn is_symmetric(p: &Polynomial, alphabet: &Alphabet) -> bool {
    let u = alphabet.vars();
    let m = u.len();
    if m < 2 {
        return true;
    }
    let mut swap = HashMap::new();
    swap.insert(u[0], Polynomial::var(u[1]));
    swap.insert(u[1], Polynomial::var(u[0]));
    if p.substitute(&swap) != *p {
        return false;
    }
    let cycle: HashMap<VarId, Polynomial> =
        (0..m).map(|k| (u[k], Polynomial::var(u[(k + 1) % m]))).collect();
    p.substitute(&cycle) == *p
}

/// Number of weakly decreasing length-`m` sequences bounded by `max_part`
/// with sum at most `max_deg`: an upper bound on the leading monomials the
/// elimination can visit.
fn elimination_bound(m: usize, max_part: u32, max_deg: u64) -> u64 {
    // table[k][s]: sequences of the remaining k parts, each <= bound, sum s
    let max_deg = max_deg as usize;
    let mut count = 0u64;
    // dp over parts from smallest to largest: ways[last][sum]
    let cap = max_part as usize;
    let mut ways = vec![vec![0u64; max_deg + 1]; cap + 1];
    for first in 0..=cap.min(max_deg) {
        ways[first][first] = 1;
    }
    for _ in 1..m {
        let mut next = vec![vec![0u64; max_deg + 1]; cap + 1];
        for last in 0..=cap {
            for s in 0..=max_deg {
                let w = ways[last][s];
                if w == 0 {
                    continue;
                }
                for nxt in last..=cap {
                    if s + nxt > max_deg {
                        break;
                    }
                    next[nxt][s + nxt] = next[nxt][s + nxt].saturating_add(w);
                }
            }
        }
        ways = next;
    }
    for row in &ways {
        for &w in row {
            count = count.saturating_add(w);
        }
    }
    count
}

/// Rewrites a symmetric polynomial in `alphabet` as a polynomial in
/// `targets`, where `targets[k-1]` stands for `e_k(alphabet)`. Variables
/// outside the alphabet are carried along as coefficients.
pub fn sym_to_elementary(p: &Polynomial, alphabet: &Alphabet, targets: &[VarId]) -> Result<Polynomial> {
    let u = alphabet.vars();
    let m = u.len();
    if targets.len() != m {
        return Err(Error::InvalidArgument(format!(
            "{} targets for an alphabet of size {m}",
            targets.len()
        )));
    }
    if !is_symmetric(p, alphabet) {
        let names: Vec<&str> = u.iter().map(|v| v.name()).collect();
        return Err(Error::NotSymmetric(names.join(",")));
    }
    let max_part = u.iter().map(|&v| p.degree_in(v)).max().unwrap_or(0);
    let bound = elimination_bound(m, max_part, p.total_degree()).max((p.len() * m) as u64);

    let elem = elem_sym_all(m, alphabet);
    let mut elem_pows: FxHashMap<(usize, u32), Polynomial> = FxHashMap::default();
    let mut rest = p.clone();
    let mut out = Polynomial::zero();
    let mut steps = 0u64;
    while !rest.is_zero() {
        steps += 1;
        if steps > bound {
            return Err(Error::NonTerminating(bound));
        }
        let key = |mono: &Monomial| -> Vec<u32> { u.iter().map(|&v| mono.exponent(v)).collect() };
        let lead = rest.numer_iter().map(|(mono, _)| key(mono)).max().unwrap();
        if lead.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotSymmetric(format!("leading exponents {lead:?}")));
        }
        let mut coeff_terms: FxHashMap<Monomial, Int> = FxHashMap::default();
        for (mono, c) in rest.numer_iter() {
            if key(mono) == lead {
                let other = Monomial::from_pairs(mono.iter().filter(|(v, _)| !u.contains(v)));
                coeff_terms.insert(other, c.clone());
            }
        }
        let coeff = Polynomial::from_parts(coeff_terms, rest.den_int().clone());
        let mut target_mono = Vec::with_capacity(m);
        let mut product = coeff.clone();
        for k in 0..m {
            let e = lead[k] - lead.get(k + 1).copied().unwrap_or(0);
            if e == 0 {
                continue;
            }
            target_mono.push((targets[k], e));
            let pw = elem_pows
                .entry((k + 1, e))
                .or_insert_with(|| elem[k + 1].pow(e));
            product = &product * &*pw;
        }
        out += &coeff.mul_monomial(&Monomial::from_pairs(target_mono));
        rest -= &product;
    }
    Ok(out)
}

/// Evaluates `expr` under the splitting principle: generator `i` becomes
/// the sum of `sizes[i-1]` line elements `u<i>_<k>`, on which `σ` is
/// elementary and `ψ_k` raises every line variable to the `k`-th power.
///
/// σ_t(f) = exp(Σ_{m≥1} (-1)^{m-1} ψ_m(f) t^m / m) and
/// λ_t(f) = 1 / σ_{-t}(f), truncated at `t^order`. None of the universal
/// polynomial recursions are used.
pub fn splitting_oracle(expr: &Expr, sizes: &[usize], order: usize) -> Result<Polynomial> {
    let depth = crate::expr::depth(expr, sizes.len());
    for (i, (&d, &m)) in depth.0.iter().zip(sizes).enumerate() {
        if m < d || m == 0 {
            return Err(Error::InsufficientAlphabet {
                generator: i + 1,
                size: m,
                needed: d.max(1),
            });
        }
    }
    if let Some(k) = max_index(expr) {
        if k > order {
            return Err(Error::InvalidArgument(format!(
                "series order {order} below operator index {k}"
            )));
        }
    }
    let alphabets = sizes
        .iter()
        .enumerate()
        .map(|(i, &m)| Alphabet::new(&format!("u{}_", i + 1), m))
        .collect::<Result<Vec<_>>>()?;
    let line_vars: Vec<VarId> = alphabets.iter().flat_map(|a| a.vars().to_vec()).collect();
    let ctx = Oracle {
        alphabets: &alphabets,
        line_vars: &line_vars,
        order,
    };
    ctx.eval(expr)
}

fn max_index(e: &Expr) -> Option<usize> {
    match e {
        Expr::Zero | Expr::One | Expr::Int(_) | Expr::Gen(_) => None,
        Expr::Neg(a) => max_index(a),
        Expr::Add(a, b) | Expr::Mul(a, b) => max_index(a).max(max_index(b)),
        Expr::Lambda(k, a) | Expr::Sigma(k, a) | Expr::Psi(k, a) => {
            Some((*k as usize).max(max_index(a).unwrap_or(0)))
        }
    }
}

struct Oracle<'a> {
    alphabets: &'a [Alphabet],
    line_vars: &'a [VarId],
    order: usize,
}

impl Oracle<'_> {
    fn eval(&self, e: &Expr) -> Result<Polynomial> {
        Ok(match e {
            Expr::Zero => Polynomial::zero(),
            Expr::One => Polynomial::one(),
            Expr::Int(n) => Polynomial::from_int(Int::from_big(n.clone())),
            Expr::Gen(i) => self
                .alphabets
                .get(i - 1)
                .ok_or_else(|| Error::UnknownGenerator(format!("#{i}")))?
                .sum(),
            Expr::Neg(a) => -self.eval(a)?,
            Expr::Add(a, b) => self.eval(a)? + self.eval(b)?,
            Expr::Mul(a, b) => self.eval(a)? * self.eval(b)?,
            Expr::Psi(k, a) => self.adams(&self.eval(a)?, *k),
            Expr::Sigma(k, a) => {
                let f = self.eval(a)?;
                self.sigma_series(&f).swap_remove(*k as usize)
            }
            Expr::Lambda(k, a) => {
                let f = self.eval(a)?;
                let mut s = self.sigma_series(&f);
                // σ_{-t}
                for (j, c) in s.iter_mut().enumerate() {
                    if j % 2 == 1 {
                        *c = -&*c;
                    }
                }
                invert_series(&s).swap_remove(*k as usize)
            }
        })
    }

    fn adams(&self, f: &Polynomial, k: u32) -> Polynomial {
        f.substitute_with(|v| {
            self.line_vars
                .contains(&v)
                .then(|| Polynomial::var_pow(v, k))
        })
    }

    /// Coefficients of σ_t(f) up to `t^order`.
    fn sigma_series(&self, f: &Polynomial) -> Vec<Polynomial> {
        let n = self.order;
        // log σ_t(f) = Σ a_m t^m with a_m = (-1)^{m-1} ψ_m(f) / m
        let mut a = vec![Polynomial::zero(); n + 1];
        for m in 1..=n {
            let pm = self.adams(f, m as u32);
            a[m] = if m % 2 == 1 { pm } else { -pm }.div_int(m as i64);
        }
        exp_series(&a)
    }
}

/// exp of a series with zero constant term: n E_n = Σ_{k=1}^n k A_k E_{n-k}.
fn exp_series(a: &[Polynomial]) -> Vec<Polynomial> {
    let n = a.len() - 1;
    let mut e = vec![Polynomial::zero(); n + 1];
    e[0] = Polynomial::one();
    for m in 1..=n {
        let mut acc = Polynomial::zero();
        for k in 1..=m {
            if a[k].is_zero() || e[m - k].is_zero() {
                continue;
            }
            acc += &(&a[k] * &e[m - k]).scale_int(&Int::from(k as i64));
        }
        e[m] = acc.div_int(m as i64);
    }
    e
}

/// Inverse of a series with constant term 1.
fn invert_series(s: &[Polynomial]) -> Vec<Polynomial> {
    let n = s.len() - 1;
    let mut b = vec![Polynomial::zero(); n + 1];
    b[0] = Polynomial::one();
    for m in 1..=n {
        let mut acc = Polynomial::zero();
        for k in 1..=m {
            if !s[k].is_zero() && !b[m - k].is_zero() {
                acc += &(&s[k] * &b[m - k]);
            }
        }
        b[m] = -acc;
    }
    b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::Expr;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    fn ab(m: usize) -> Alphabet {
        Alphabet::new("u", m).unwrap()
    }

    fn targets(m: usize) -> Vec<VarId> {
        (1..=m).map(|k| VarId::named(&format!("t{k}"))).collect()
    }

    fn back_substitute(q: &Polynomial, a: &Alphabet) -> Polynomial {
        let map: HashMap<VarId, Polynomial> = targets(a.size())
            .into_iter()
            .enumerate()
            .map(|(k, t)| (t, elem_sym(k + 1, a)))
            .collect();
        q.substitute(&map)
    }

    #[test]
    fn elem_sym_examples() {
        assert_eq!(elem_sym(1, &ab(2)), p("u1 + u2"));
        assert_eq!(elem_sym(2, &ab(2)), p("u1*u2"));
        assert!(elem_sym(3, &ab(2)).is_zero());
        assert!(elem_sym(0, &ab(3)).is_one());
    }

    #[test]
    fn reduction_examples() {
        let a = ab(2);
        let t = targets(2);
        let q = sym_to_elementary(&p("u1^2 + u2^2"), &a, &t).unwrap();
        assert_eq!(q, p("t1^2 - 2*t2"));
        assert_eq!(back_substitute(&q, &a), p("u1^2 + u2^2"));
        assert_eq!(sym_to_elementary(&p("u1*u2"), &a, &t).unwrap(), p("t2"));
        let q = sym_to_elementary(&p("u1^2*u2 + u1*u2^2"), &a, &t).unwrap();
        assert_eq!(q, p("t1*t2"));
        assert_eq!(back_substitute(&q, &a), p("u1^2*u2 + u1*u2^2"));
    }

    #[test]
    fn reduction_carries_foreign_variables() {
        let a = ab(2);
        let q = sym_to_elementary(&p("w*u1 + w*u2 + 3"), &a, &targets(2)).unwrap();
        assert_eq!(q, p("w*t1 + 3"));
    }

    #[test]
    fn reduction_rejects_asymmetric_input() {
        let err = sym_to_elementary(&p("u1^2 + u2"), &ab(2), &targets(2)).unwrap_err();
        assert!(matches!(err, Error::NotSymmetric(_)));
        // invariant under (u1 u2) but not under the 3-cycle
        let err = sym_to_elementary(&p("u1 + u2"), &ab(3), &targets(3)).unwrap_err();
        assert!(matches!(err, Error::NotSymmetric(_)));
    }

    #[test]
    fn high_power_sums_need_more_steps_than_terms() {
        // p_12 in two variables has 7 elementary terms but only 2 monomials
        let a = ab(2);
        let q = sym_to_elementary(&p("u1^12 + u2^12"), &a, &targets(2)).unwrap();
        assert_eq!(back_substitute(&q, &a), p("u1^12 + u2^12"));
    }

    #[test]
    fn complete_homogeneous_small() {
        assert_eq!(complete_homogeneous(2, &ab(2)), p("u1^2 + u1*u2 + u2^2"));
        assert_eq!(complete_homogeneous(0, &ab(3)), p("1"));
        assert_eq!(complete_homogeneous(3, &ab(1)), p("u1^3"));
    }

    fn gen1() -> Box<Expr> {
        Box::new(Expr::Gen(1))
    }

    #[test]
    fn oracle_examples() {
        let s = splitting_oracle(&Expr::Sigma(2, gen1()), &[2], 4).unwrap();
        assert_eq!(s, p("u1_1*u1_2"));
        let s = splitting_oracle(&Expr::Psi(2, gen1()), &[2], 4).unwrap();
        assert_eq!(s, p("u1_1^2 + u1_2^2"));
        // t^2 coefficient of 1/((1 - u1 t)(1 - u2 t))
        let s = splitting_oracle(&Expr::Lambda(2, gen1()), &[2], 4).unwrap();
        assert_eq!(s, p("u1_1^2 + u1_1*u1_2 + u1_2^2"));
    }

    #[test]
    fn oracle_rejects_small_alphabet() {
        let err = splitting_oracle(&Expr::Lambda(3, gen1()), &[2], 4).unwrap_err();
        assert!(matches!(err, Error::InsufficientAlphabet { needed: 3, .. }));
    }

    #[test]
    fn oracle_sigma_and_lambda_match_direct_expansions() {
        for m in 1..=4 {
            let a = Alphabet::new("u1_", m).unwrap();
            for k in 1..=m {
                let s = splitting_oracle(&Expr::Sigma(k as u32, gen1()), &[m], m).unwrap();
                assert_eq!(s, elem_sym(k, &a));
                let l = splitting_oracle(&Expr::Lambda(k as u32, gen1()), &[m], m).unwrap();
                assert_eq!(l, complete_homogeneous(k, &a));
            }
        }
    }

    #[test]
    fn bound_counts_partitions() {
        // partitions into <= 2 parts, parts <= 2, size <= 2: (0,0) (0,1) (1,1) (0,2)
        assert_eq!(elimination_bound(2, 2, 2), 4);
    }
}
