use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rustc_hash::FxHashMap;

use super::int::Int;
use super::monomial::Monomial;
use super::var::VarId;
use crate::error::{Error, Result};

/// Sparse multivariate polynomial with rational coefficients.
///
/// Stored as integer numerators over one positive common denominator
/// `den`, with `gcd(den, content) = 1` and no zero terms. This form is
/// canonical, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    terms: FxHashMap<Monomial, Int>,
    den: Int,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial {
            terms: FxHashMap::default(),
            den: Int::ONE,
        }
    }

    pub fn one() -> Polynomial {
        Polynomial::constant(1)
    }

    pub fn constant(c: i64) -> Polynomial {
        Polynomial::from_int(Int::from(c))
    }

    pub fn from_int(c: Int) -> Polynomial {
        Polynomial::term(Monomial::one(), c)
    }

    pub fn from_rational(c: &BigRational) -> Polynomial {
        let mut p = Polynomial::term(Monomial::one(), Int::from_big(c.numer().clone()));
        p.den = Int::from_big(c.denom().clone());
        p.normalize();
        p
    }

    pub fn var(v: VarId) -> Polynomial {
        Polynomial::term(Monomial::var(v), Int::ONE)
    }

    pub fn var_pow(v: VarId, e: u32) -> Polynomial {
        Polynomial::term(Monomial::var_pow(v, e), Int::ONE)
    }

    pub fn term(m: Monomial, c: Int) -> Polynomial {
        let mut terms = FxHashMap::default();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial {
            terms,
            den: Int::ONE,
        }
    }

    /// Builds from rational-coefficient terms; duplicates are summed.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigRational)>>(it: I) -> Polynomial {
        let mut acc = Polynomial::zero();
        for (m, c) in it {
            let mut t = Polynomial::term(m, Int::from_big(c.numer().clone()));
            t.den = Int::from_big(c.denom().clone());
            t.normalize();
            acc += &t;
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one()
            && self.terms.len() == 1
            && self.terms.get(&Monomial::one()).is_some_and(Int::is_one)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    pub fn denominator(&self) -> BigInt {
        self.den.to_big()
    }

    /// Constant value, if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self
                .terms
                .get(&Monomial::one())
                .map(|c| BigRational::new(c.to_big(), self.den.to_big())),
            _ => None,
        }
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        match self.terms.get(m) {
            Some(c) => BigRational::new(c.to_big(), self.den.to_big()),
            None => BigRational::zero(),
        }
    }

    /// Integer numerator of `m` over the shared denominator.
    pub(crate) fn numer_iter(&self) -> impl Iterator<Item = (&Monomial, &Int)> {
        self.terms.iter()
    }

    pub(crate) fn den_int(&self) -> &Int {
        &self.den
    }

    pub(crate) fn from_parts(terms: FxHashMap<Monomial, Int>, den: Int) -> Polynomial {
        let mut p = Polynomial { terms, den };
        p.normalize();
        p
    }

    /// Terms in graded-lex descending order with rational coefficients.
    pub fn sorted_terms(&self) -> Vec<(Monomial, BigRational)> {
        let mut v: Vec<(Monomial, BigRational)> = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), BigRational::new(c.to_big(), self.den.to_big())))
            .collect();
        v.sort_by(|a, b| b.0.cmp_grlex(&a.0));
        v
    }

    /// Variables that occur, ordered by name.
    pub fn variables(&self) -> Vec<VarId> {
        let mut seen: Vec<VarId> = Vec::new();
        for m in self.terms.keys() {
            for (v, _) in m.iter() {
                if !seen.contains(&v) {
                    seen.push(v);
                }
            }
        }
        seen.sort_by(|a, b| a.cmp_by_name(*b));
        seen
    }

    pub fn degree_in(&self, v: VarId) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    fn normalize(&mut self) {
        self.terms.retain(|_, c| !c.is_zero());
        if self.terms.is_empty() {
            self.den = Int::ONE;
            return;
        }
        if self.den.is_negative() {
            self.den = self.den.neg();
            for c in self.terms.values_mut() {
                *c = c.neg();
            }
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                return;
            }
        }
        self.den = self.den.div_exact(&g);
        for c in self.terms.values_mut() {
            *c = c.div_exact(&g);
        }
    }

    pub fn scale_int(&self, k: &Int) -> Polynomial {
        if k.is_zero() {
            return Polynomial::zero();
        }
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), c.mul(k))).collect();
        Polynomial::from_parts(terms, self.den.clone())
    }

    pub fn scale(&self, k: &BigRational) -> Polynomial {
        if k.is_zero() {
            return Polynomial::zero();
        }
        let num = Int::from_big(k.numer().clone());
        let den = self.den.mul(&Int::from_big(k.denom().clone()));
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), c.mul(&num))).collect();
        Polynomial::from_parts(terms, den)
    }

    /// Divides every coefficient by the integer `k` (rational result).
    pub fn div_int(&self, k: i64) -> Polynomial {
        assert!(k != 0, "division by zero");
        Polynomial::from_parts(self.terms.clone(), self.den.mul(&Int::from(k)))
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `Err(NonIntegralResult)` unless every coefficient is an integer.
    pub fn assert_integral(self) -> Result<Polynomial> {
        if self.is_integral() {
            Ok(self)
        } else {
            Err(Error::NonIntegralResult(format!(
                "denominator {} in {}",
                self.den,
                truncate(&self.to_string())
            )))
        }
    }

    /// Simultaneous substitution; unmapped variables stay fixed.
    pub fn substitute(&self, map: &HashMap<VarId, Polynomial>) -> Polynomial {
        self.substitute_with(|v| map.get(&v).cloned())
    }

    /// Substitution driven by a lookup closure, called at most once per
    /// variable.
    pub fn substitute_with<F>(&self, mut image: F) -> Polynomial
    where
        F: FnMut(VarId) -> Option<Polynomial>,
    {
        let mut images: FxHashMap<VarId, Option<Polynomial>> = FxHashMap::default();
        let mut powers: FxHashMap<(VarId, u32), Polynomial> = FxHashMap::default();
        let mut acc: FxHashMap<Monomial, Int> = FxHashMap::default();
        // images with denominators are summed separately
        let mut parts: Vec<Polynomial> = Vec::new();
        for (m, c) in &self.terms {
            let mut fixed: Vec<(VarId, u32)> = Vec::new();
            let mut prod: Option<Polynomial> = None;
            for (v, e) in m.iter() {
                let img = images.entry(v).or_insert_with(|| image(v));
                match img {
                    None => fixed.push((v, e)),
                    Some(p) => {
                        let pw = powers
                            .entry((v, e))
                            .or_insert_with(|| p.pow(e))
                            .clone();
                        prod = Some(match prod {
                            None => pw,
                            Some(q) => &q * &pw,
                        });
                    }
                }
            }
            let mono = Monomial::from_pairs(fixed);
            match prod {
                None => {
                    acc.entry(mono).or_default().add_assign(c);
                }
                Some(q) => {
                    let q = q.mul_monomial(&mono).scale_int(c);
                    if q.den.is_one() {
                        for (k, v) in q.terms {
                            acc.entry(k).or_default().add_assign(&v);
                        }
                    } else {
                        parts.push(q);
                    }
                }
            }
        }
        let mut out = Polynomial::from_parts(acc, Int::ONE);
        for p in parts {
            out += &p;
        }
        if !self.den.is_one() {
            out = Polynomial::from_parts(out.terms, out.den.mul(&self.den));
        }
        out
    }

    /// Coefficients of the powers of `v`.
    pub fn by_degree_in(&self, v: VarId) -> BTreeMap<u32, Polynomial> {
        let mut out: BTreeMap<u32, FxHashMap<Monomial, Int>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (e, rest) = m.split(v);
            out.entry(e).or_default().insert(rest, c.clone());
        }
        out.into_iter()
            .map(|(e, t)| (e, Polynomial::from_parts(t, self.den.clone())))
            .collect()
    }

    /// Exact quotient `p / d`, dividing as polynomials in `v`. The leading
    /// coefficient of `d` in `v` must be a nonzero constant.
    pub fn div_exact_in(&self, d: &Polynomial, v: VarId) -> Result<Polynomial> {
        if d.is_zero() {
            return Err(Error::InvalidArgument("division by zero polynomial".into()));
        }
        let dd = d.by_degree_in(v);
        let (&n, lead) = dd.iter().next_back().unwrap();
        let lead = lead.as_constant().ok_or_else(|| {
            Error::InvalidArgument(format!("leading coefficient of divisor in {v} is not constant"))
        })?;
        let inv = BigRational::one() / lead;
        let mut rem = self.by_degree_in(v);
        let mut quot = Polynomial::zero();
        while let Some((&top, _)) = rem.iter().next_back() {
            if top < n {
                break;
            }
            let c = rem.remove(&top).unwrap().scale(&inv);
            let shift = top - n;
            for (&k, dk) in dd.iter() {
                if k == n {
                    continue;
                }
                let t = &c * dk;
                let slot = rem.entry(k + shift).or_default();
                *slot -= &t;
                if slot.is_zero() {
                    rem.remove(&(k + shift));
                }
            }
            quot += &c.mul_monomial(&Monomial::var_pow(v, shift));
        }
        if rem.values().any(|p| !p.is_zero()) {
            let r: Polynomial = rem
                .into_iter()
                .fold(Polynomial::zero(), |acc, (e, p)| acc + p.mul_monomial(&Monomial::var_pow(v, e)));
            return Err(Error::NonExactDivision(format!(
                "remainder {} modulo {}",
                truncate(&r.to_string()),
                d
            )));
        }
        Ok(quot)
    }

    /// Exact division by a divisor univariate in `v`.
    pub fn exact_div_univar(&self, d: &Polynomial, v: VarId) -> Result<Polynomial> {
        if d.variables().iter().any(|&x| x != v) {
            return Err(Error::InvalidArgument(format!("divisor {d} is not univariate in {v}")));
        }
        self.div_exact_in(d, v)
    }

    /// Canonical text form, graded-lex descending.
    pub fn render_canonical(&self) -> String {
        self.to_string()
    }
}

pub(crate) fn truncate(s: &str) -> String {
    if s.len() > 200 {
        format!("{}...", &s[..s.char_indices().nth(200).map(|(i, _)| i).unwrap_or(s.len())])
    } else {
        s.to_string()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let a = c.abs();
            if m.is_one() {
                write_rational(f, &a)?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write_rational(f, &a)?;
                write!(f, "*{m}")?;
            }
        }
        Ok(())
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, a: &BigRational) -> fmt::Result {
    if a.is_integer() {
        write!(f, "{}", a.numer())
    } else {
        write!(f, "{}/{}", a.numer(), a.denom())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, o: &Polynomial) {
        if o.is_zero() {
            return;
        }
        if self.den == o.den {
            for (m, c) in &o.terms {
                self.terms.entry(m.clone()).or_default().add_assign(c);
            }
            if self.den.is_one() {
                self.terms.retain(|_, c| !c.is_zero());
            } else {
                self.normalize();
            }
            return;
        }
        let l = self.den.lcm(&o.den);
        let fs = l.div_exact(&self.den);
        let fo = l.div_exact(&o.den);
        if !fs.is_one() {
            for c in self.terms.values_mut() {
                *c = c.mul(&fs);
            }
        }
        for (m, c) in &o.terms {
            self.terms.entry(m.clone()).or_default().add_mul(c, &fo);
        }
        self.den = l;
        self.normalize();
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, o: &Polynomial) {
        *self += &(-o);
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, o: &Polynomial) -> Polynomial {
        if self.len() >= o.len() {
            let mut r = self.clone();
            r += o;
            r
        } else {
            let mut r = o.clone();
            r += self;
            r
        }
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, o: Polynomial) -> Polynomial {
        if self.len() < o.len() {
            return o + self;
        }
        self += &o;
        self
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, o: &Polynomial) -> Polynomial {
        let mut r = self.clone();
        r -= o;
        r
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(mut self, o: Polynomial) -> Polynomial {
        self -= &o;
        self
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(mut self) -> Polynomial {
        for c in self.terms.values_mut() {
            *c = c.neg();
        }
        self
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, o: &Polynomial) -> Polynomial {
        if self.is_zero() || o.is_zero() {
            return Polynomial::zero();
        }
        let (a, b) = if self.len() >= o.len() { (self, o) } else { (o, self) };
        let mut terms: FxHashMap<Monomial, Int> =
            FxHashMap::with_capacity_and_hasher(a.len() * b.len().min(8), Default::default());
        for (mb, cb) in &b.terms {
            for (ma, ca) in &a.terms {
                terms.entry(ma.mul(mb)).or_default().add_mul(ca, cb);
            }
        }
        Polynomial::from_parts(terms, a.den.mul(&b.den))
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, o: Polynomial) -> Polynomial {
        &self * &o
    }
}

impl Default for Polynomial {
    fn default() -> Polynomial {
        Polynomial::zero()
    }
}

impl From<i64> for Polynomial {
    fn from(c: i64) -> Polynomial {
        Polynomial::constant(c)
    }
}

impl From<VarId> for Polynomial {
    fn from(v: VarId) -> Polynomial {
        Polynomial::var(v)
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(it: I) -> Polynomial {
        it.fold(Polynomial::zero(), |a, b| a + b)
    }
}

impl<'a> std::iter::Sum<&'a Polynomial> for Polynomial {
    fn sum<I: Iterator<Item = &'a Polynomial>>(it: I) -> Polynomial {
        it.fold(Polynomial::zero(), |mut a, b| {
            a += b;
            a
        })
    }
}

impl Add<&Polynomial> for Polynomial {
    type Output = Polynomial;
    fn add(mut self, o: &Polynomial) -> Polynomial {
        self += o;
        self
    }
}

impl Add<Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, o: Polynomial) -> Polynomial {
        o + self
    }
}

impl Sub<&Polynomial> for Polynomial {
    type Output = Polynomial;
    fn sub(mut self, o: &Polynomial) -> Polynomial {
        self -= o;
        self
    }
}

impl Sub<Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, o: Polynomial) -> Polynomial {
        -o + self
    }
}

impl Mul<&Polynomial> for Polynomial {
    type Output = Polynomial;
    fn mul(self, o: &Polynomial) -> Polynomial {
        &self * o
    }
}

impl Mul<Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, o: Polynomial) -> Polynomial {
        self * &o
    }
}
