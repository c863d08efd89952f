//! Universal polynomials: opposite polynomials, Hirzebruch-Newton
//! polynomials, their inverses, and the Grothendieck polynomials for
//! products and compositions.
//!
//! Each linear family is generated by its recursion. The `*_seq` functions
//! run the same recursions with arbitrary polynomial arguments, which is
//! much cheaper than substituting into the expanded universal polynomial.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::poly::{indexed_var, Polynomial, VarId};
use crate::expr::Expr;
use crate::symfunc::{elem_sym_all, splitting_oracle, sym_to_elementary, Alphabet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    POp,
    Newton,
    L,
    LOp,
    NOp,
    GrothMul,
    GrothComp,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::POp,
        Family::Newton,
        Family::L,
        Family::LOp,
        Family::NOp,
        Family::GrothMul,
        Family::GrothComp,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::POp => "pop",
            Family::Newton => "newton",
            Family::L => "l",
            Family::LOp => "lop",
            Family::NOp => "nop",
            Family::GrothMul => "grothmul",
            Family::GrothComp => "grothcomp",
        }
    }

    fn is_linear(self) -> bool {
        !matches!(self, Family::GrothMul | Family::GrothComp)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown family `{s}`")))
    }
}

/// `x1, ..., xn`.
pub fn x_vars(n: usize) -> Vec<VarId> {
    (1..=n).map(|k| indexed_var("x", k)).collect()
}

/// `y1, ..., yn`.
pub fn y_vars(n: usize) -> Vec<VarId> {
    (1..=n).map(|k| indexed_var("y", k)).collect()
}

fn vars_poly(vs: &[VarId]) -> Vec<Polynomial> {
    vs.iter().map(|&v| Polynomial::var(v)).collect()
}

fn sign(e: usize) -> bool {
    e.is_multiple_of(2)
}

/// Adds `c` or `-c` to `acc` depending on the parity `e` of the exponent of `-1`.
fn add_signed(acc: &mut Polynomial, c: &Polynomial, e: usize) {
    if sign(e) {
        *acc += c;
    } else {
        *acc -= c;
    }
}

/// `[P^op_0, ..., P^op_n]` at `args = (x_1, ..., x_n)`.
pub fn p_op_seq(args: &[Polynomial]) -> Vec<Polynomial> {
    let n = args.len();
    let mut out = Vec::with_capacity(n + 1);
    out.push(Polynomial::one());
    for k in 1..=n {
        let mut acc = Polynomial::zero();
        for i in 0..k {
            add_signed(&mut acc, &(&out[i] * &args[k - i - 1]), k - i + 1);
        }
        out.push(acc);
    }
    out
}

/// `[0, N_1, ..., N_n]` at `args`.
pub fn newton_seq(args: &[Polynomial]) -> Vec<Polynomial> {
    let n = args.len();
    let mut out = Vec::with_capacity(n + 1);
    out.push(Polynomial::zero());
    for k in 1..=n {
        let mut acc = args[k - 1].scale_int(&(k as i64).into());
        if !sign(k - 1) {
            acc = -acc;
        }
        for i in 1..k {
            add_signed(&mut acc, &(&args[k - i - 1] * &out[i]), k - i + 1);
        }
        out.push(acc);
    }
    out
}

/// `[0, L_1, ..., L_n]` at `args`.
pub fn l_seq(args: &[Polynomial]) -> Vec<Polynomial> {
    let n = args.len();
    let mut out = Vec::with_capacity(n + 1);
    out.push(Polynomial::zero());
    for k in 1..=n {
        let mut acc = args[k - 1].clone();
        if !sign(k - 1) {
            acc = -acc;
        }
        for i in 1..k {
            add_signed(&mut acc, &(&out[k - i] * &args[i - 1]), i - 1);
        }
        out.push(acc.div_int(k as i64));
    }
    out
}

/// `[L^op_0, ..., L^op_n]` at `args`.
pub fn l_op_seq(args: &[Polynomial]) -> Vec<Polynomial> {
    l_op_from_l(&l_seq(args))
}

/// The `L^op` recursion applied to precomputed `[_, L_1, ..., L_n]`.
pub fn l_op_from_l(l: &[Polynomial]) -> Vec<Polynomial> {
    let n = l.len() - 1;
    let mut out = Vec::with_capacity(n + 1);
    out.push(Polynomial::one());
    for k in 1..=n {
        let mut acc = Polynomial::zero();
        for i in 0..k {
            add_signed(&mut acc, &(&out[i] * &l[k - i]), k - i + 1);
        }
        out.push(acc);
    }
    out
}

/// `[0, N^op_1, ..., N^op_n]` at `args`.
pub fn n_op_seq(args: &[Polynomial]) -> Vec<Polynomial> {
    newton_seq(&p_op_seq(args)[1..])
}

/// Elementary symmetric functions `[e_0, ..., e_n]` of a list of polynomials.
pub fn elem_sym_of(items: &[Polynomial], n: usize) -> Vec<Polynomial> {
    let mut e = vec![Polynomial::zero(); n + 1];
    e[0] = Polynomial::one();
    for (count, y) in items.iter().enumerate() {
        for k in (1..=n.min(count + 1)).rev() {
            let add = &e[k - 1] * y;
            e[k] += &add;
        }
    }
    e
}

/// Grothendieck polynomial `P_n(x_1..x_n, y_1..y_n)` for `σ^n(xy)`.
pub fn groth_mul_direct(n: usize) -> Result<Polynomial> {
    if n == 0 {
        return Ok(Polynomial::one());
    }
    let u = Alphabet::new("gu", n)?;
    let v = Alphabet::new("gv", n)?;
    let mut items = Vec::with_capacity(n * n);
    for &a in u.vars() {
        for &b in v.vars() {
            items.push(Polynomial::var(a) * Polynomial::var(b));
        }
    }
    let target = elem_sym_of(&items, n).pop().unwrap();
    let in_x = sym_to_elementary(&target, &u, &x_vars(n))?;
    let q = sym_to_elementary(&in_x, &v, &y_vars(n))?;
    q.assert_integral()
}

/// Grothendieck polynomial `P_{n,m}(x_1..x_{nm})` for `σ^n(σ^m(x))`.
pub fn groth_comp_direct(n: usize, m: usize) -> Result<Polynomial> {
    if n == 0 {
        return Ok(Polynomial::one());
    }
    if m == 0 {
        return Err(Error::InvalidArgument("m must be positive".into()));
    }
    let size = n * m;
    let u = Alphabet::new("gu", size)?;
    let mut items = Vec::new();
    let mut subset: Vec<usize> = (0..m).collect();
    loop {
        let mut mono = Polynomial::one();
        for &j in &subset {
            mono = mono * Polynomial::var(u.vars()[j]);
        }
        items.push(mono);
        // next m-subset in lex order
        let mut k = m;
        while k > 0 && subset[k - 1] == size - m + k - 1 {
            k -= 1;
        }
        if k == 0 {
            break;
        }
        subset[k - 1] += 1;
        for j in k..m {
            subset[j] = subset[j - 1] + 1;
        }
    }
    let target = elem_sym_of(&items, n).pop().unwrap();
    sym_to_elementary(&target, &u, &x_vars(size))?.assert_integral()
}

/// Generation bounds; exceeding one needs `allow_large`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_linear: usize,
    pub max_mul: usize,
    pub max_comp_nm: usize,
    pub allow_large: bool,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_linear: 30,
            max_mul: 6,
            max_comp_nm: 12,
            allow_large: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct Key {
    family: Family,
    n: usize,
    m: usize,
}

impl Key {
    fn file_name(&self) -> String {
        match self.family {
            Family::GrothComp => format!("{}_{}_{}.json", self.family, self.n, self.m),
            _ => format!("{}_{}.json", self.family, self.n),
        }
    }
}

/// Memo table for the universal polynomials, optionally backed by a
/// directory of JSON files for the Grothendieck families.
#[derive(Debug, Default)]
pub struct UniversalCache {
    memo: RwLock<FxHashMap<Key, Arc<Polynomial>>>,
    dir: Option<PathBuf>,
    limits: Limits,
}

impl UniversalCache {
    pub fn new() -> UniversalCache {
        UniversalCache::default()
    }

    /// Shared in-memory cache.
    pub fn global() -> &'static UniversalCache {
        static CACHE: OnceLock<UniversalCache> = OnceLock::new();
        CACHE.get_or_init(UniversalCache::new)
    }

    pub fn with_dir(dir: impl AsRef<Path>) -> Result<UniversalCache> {
        let dir = dir.as_ref().to_path_buf();
        fs::create_dir_all(&dir).map_err(|e| Error::Cache(format!("{}: {e}", dir.display())))?;
        Ok(UniversalCache {
            dir: Some(dir),
            ..UniversalCache::default()
        })
    }

    pub fn with_limits(mut self, limits: Limits) -> UniversalCache {
        self.limits = limits;
        self
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    /// The polynomial of `family` with index `n` (and `m` for `grothcomp`).
    pub fn get(&self, family: Family, n: usize, m: Option<usize>) -> Result<Arc<Polynomial>> {
        let m = match (family, m) {
            (Family::GrothComp, Some(m)) if m >= 1 => m,
            (Family::GrothComp, _) => {
                return Err(Error::InvalidArgument("grothcomp needs m >= 1".into()))
            }
            (_, _) => 0,
        };
        if n == 0 && matches!(family, Family::Newton | Family::L | Family::NOp) {
            return Err(Error::InvalidArgument(format!("{family} needs n >= 1")));
        }
        self.check_bounds(family, n, m)?;
        let key = Key { family, n, m };
        if let Some(p) = self.memo.read().unwrap().get(&key) {
            return Ok(p.clone());
        }
        if let Some(p) = self.load(&key)? {
            let p = Arc::new(p);
            self.memo.write().unwrap().insert(key, p.clone());
            return Ok(p);
        }
        if family.is_linear() {
            self.generate_linear(family, n);
            return Ok(self.memo.read().unwrap()[&key].clone());
        }
        let p = match family {
            Family::GrothMul => groth_mul_direct(n)?,
            _ => groth_comp_direct(n, m)?,
        };
        self.store(&key, &p)?;
        let p = Arc::new(p);
        self.memo.write().unwrap().insert(key, p.clone());
        Ok(p)
    }

    fn check_bounds(&self, family: Family, n: usize, m: usize) -> Result<()> {
        if self.limits.allow_large {
            return Ok(());
        }
        let (what, value, bound) = match family {
            Family::GrothMul => ("n", n, self.limits.max_mul),
            Family::GrothComp => ("n*m", n * m, self.limits.max_comp_nm),
            _ => ("n", n, self.limits.max_linear),
        };
        if value > bound {
            return Err(Error::BoundExceeded { what, value, bound });
        }
        Ok(())
    }

    fn generate_linear(&self, family: Family, n: usize) {
        let args = vars_poly(&x_vars(n));
        let seq = match family {
            Family::POp => p_op_seq(&args),
            Family::Newton => newton_seq(&args),
            Family::L => l_seq(&args),
            Family::LOp => l_op_seq(&args),
            _ => n_op_seq(&args),
        };
        let mut memo = self.memo.write().unwrap();
        for (k, p) in seq.into_iter().enumerate() {
            if k == 0 && matches!(family, Family::Newton | Family::L | Family::NOp) {
                continue;
            }
            memo.insert(Key { family, n: k, m: 0 }, Arc::new(p));
        }
    }

    fn path(&self, key: &Key) -> Option<PathBuf> {
        if key.family.is_linear() {
            return None;
        }
        self.dir.as_ref().map(|d| d.join(key.file_name()))
    }

    fn load(&self, key: &Key) -> Result<Option<Polynomial>> {
        let Some(path) = self.path(key) else {
            return Ok(None);
        };
        match fs::read_to_string(&path) {
            Ok(text) => Polynomial::from_json_str(&text)
                .map(Some)
                .map_err(|e| Error::Cache(format!("{}: {e}", path.display()))),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
            Err(e) => Err(Error::Cache(format!("{}: {e}", path.display()))),
        }
    }

    fn store(&self, key: &Key, p: &Polynomial) -> Result<()> {
        let Some(path) = self.path(key) else {
            return Ok(());
        };
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        fs::write(&tmp, p.to_json_string())
            .and_then(|_| fs::rename(&tmp, &path))
            .map_err(|e| Error::Cache(format!("{}: {e}", path.display())))
    }

    pub fn p_op(&self, n: usize) -> Result<Arc<Polynomial>> {
        self.get(Family::POp, n, None)
    }

    pub fn newton(&self, n: usize) -> Result<Arc<Polynomial>> {
        self.get(Family::Newton, n, None)
    }

    pub fn l(&self, n: usize) -> Result<Arc<Polynomial>> {
        self.get(Family::L, n, None)
    }

    pub fn l_op(&self, n: usize) -> Result<Arc<Polynomial>> {
        self.get(Family::LOp, n, None)
    }

    pub fn n_op(&self, n: usize) -> Result<Arc<Polynomial>> {
        self.get(Family::NOp, n, None)
    }

    pub fn groth_mul(&self, n: usize) -> Result<Arc<Polynomial>> {
        self.get(Family::GrothMul, n, None)
    }

    pub fn groth_comp(&self, n: usize, m: usize) -> Result<Arc<Polynomial>> {
        self.get(Family::GrothComp, n, Some(m))
    }
}

/// Substitutes `x_k -> args[k-1]` into a polynomial in `x1..xn`.
pub fn compose(p: &Polynomial, args: &[Polynomial]) -> Polynomial {
    let map = x_vars(args.len()).into_iter().zip(args.iter().cloned()).collect();
    p.substitute(&map)
}

/// Checks a universal polynomial against the splitting-principle oracle on
/// an alphabet of size `n` (size `n*m` for `grothcomp`).
pub fn splitting_check(cache: &UniversalCache, family: Family, n: usize, m: Option<usize>) -> Result<bool> {
    let poly = cache.get(family, n, m)?;
    if n == 0 {
        return Ok(poly.is_one());
    }
    let x = Expr::gen(1);
    let size = match family {
        Family::GrothComp => n * m.unwrap_or(1),
        _ => n,
    };
    let u = Alphabet::new("u1_", size)?;
    let basis = |op: fn(u32, Expr) -> Expr| -> Result<Vec<Polynomial>> {
        (1..=size)
            .map(|k| splitting_oracle(&op(k as u32, x.clone()), &[size], size))
            .collect()
    };
    let (args, target) = match family {
        Family::POp => (basis(Expr::lambda)?, Expr::sigma(n as u32, x.clone())),
        Family::Newton => (basis(Expr::sigma)?, Expr::psi(n as u32, x.clone())),
        Family::L => (basis(Expr::psi)?, Expr::sigma(n as u32, x.clone())),
        Family::LOp => (basis(Expr::psi)?, Expr::lambda(n as u32, x.clone())),
        Family::NOp => (basis(Expr::lambda)?, Expr::psi(n as u32, x.clone())),
        Family::GrothComp => {
            let m = m.unwrap_or(1) as u32;
            (basis(Expr::sigma)?, Expr::sigma(n as u32, Expr::sigma(m, x.clone())))
        }
        Family::GrothMul => {
            let v = Alphabet::new("u2_", n)?;
            let mut map: std::collections::HashMap<VarId, Polynomial> = x_vars(n)
                .into_iter()
                .zip(elem_sym_all(n, &u).into_iter().skip(1))
                .collect();
            map.extend(y_vars(n).into_iter().zip(elem_sym_all(n, &v).into_iter().skip(1)));
            let want = splitting_oracle(&Expr::sigma(n as u32, x.mul(Expr::gen(2))), &[n, n], n)?;
            return Ok(poly.substitute(&map) == want);
        }
    };
    let want = splitting_oracle(&target, &[size], size)?;
    Ok(compose(&poly, &args) == want)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn splitting_checks_pass() {
        let cache = UniversalCache::new();
        for f in [Family::POp, Family::Newton, Family::L, Family::LOp, Family::NOp] {
            for n in 1..=5 {
                assert!(splitting_check(&cache, f, n, None).unwrap(), "{f} {n}");
            }
        }
        for n in 1..=3 {
            assert!(splitting_check(&cache, Family::GrothMul, n, None).unwrap());
        }
        for (n, m) in [(1, 3), (2, 2), (3, 1), (2, 3)] {
            assert!(splitting_check(&cache, Family::GrothComp, n, Some(m)).unwrap());
        }
    }

    #[test]
    fn examples() {
        let c = UniversalCache::new();
        assert_eq!(*c.p_op(0).unwrap(), p("1"));
        assert_eq!(*c.p_op(1).unwrap(), p("x1"));
        assert_eq!(*c.p_op(2).unwrap(), p("x1^2 - x2"));
        assert_eq!(*c.p_op(3).unwrap(), p("x1^3 - 2*x1*x2 + x3"));
        assert_eq!(*c.newton(1).unwrap(), p("x1"));
        assert_eq!(*c.newton(2).unwrap(), p("x1^2 - 2*x2"));
        assert_eq!(*c.newton(3).unwrap(), p("x1^3 - 3*x1*x2 + 3*x3"));
        assert_eq!(*c.l(2).unwrap(), p("(x1^2 - x2)/2"));
        assert_eq!(*c.l(3).unwrap(), p("x1^3/6 - x1*x2/2 + x3/3"));
        assert_eq!(*c.l_op(2).unwrap(), p("(x1^2 + x2)/2"));
        assert_eq!(*c.l_op(3).unwrap(), p("x1^3/6 + x1*x2/2 + x3/3"));
        assert_eq!(*c.n_op(2).unwrap(), p("2*x2 - x1^2"));
        assert_eq!(*c.n_op(3).unwrap(), p("3*x3 - 3*x1*x2 + x1^3"));
    }

    #[test]
    fn grothendieck_examples() {
        let c = UniversalCache::new();
        assert_eq!(*c.groth_mul(1).unwrap(), p("x1*y1"));
        assert_eq!(*c.groth_mul(2).unwrap(), p("x1^2*y2 + x2*y1^2 - 2*x2*y2"));
        assert_eq!(*c.groth_comp(2, 2).unwrap(), p("x1*x3 - x4"));
        for m in 1..=4 {
            assert_eq!(*c.groth_comp(1, m).unwrap(), Polynomial::var(indexed_var("x", m)));
        }
        for n in 1..=4 {
            assert_eq!(*c.groth_comp(n, 1).unwrap(), Polynomial::var(indexed_var("x", n)));
        }
    }

    #[test]
    fn bounds_and_arguments() {
        let c = UniversalCache::new();
        assert!(matches!(c.p_op(31), Err(Error::BoundExceeded { .. })));
        assert!(matches!(c.groth_comp(4, 4), Err(Error::BoundExceeded { .. })));
        assert!(matches!(c.newton(0), Err(Error::InvalidArgument(_))));
        assert!(matches!(c.get(Family::GrothComp, 2, None), Err(Error::InvalidArgument(_))));
        let big = UniversalCache::new().with_limits(Limits {
            allow_large: true,
            ..Limits::default()
        });
        assert_eq!(big.p_op(31).unwrap().total_degree(), 31);
        assert_eq!("lop".parse::<Family>().unwrap(), Family::LOp);
        assert!("foo".parse::<Family>().is_err());
    }

    #[test]
    fn disk_cache_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let a = UniversalCache::with_dir(dir.path()).unwrap();
        let v = a.groth_comp(2, 3).unwrap();
        assert!(dir.path().join("grothcomp_2_3.json").exists());
        let b = UniversalCache::with_dir(dir.path()).unwrap();
        assert_eq!(b.groth_comp(2, 3).unwrap(), v);
    }

    #[test]
    fn sequences_at_polynomial_arguments_match_substitution() {
        let c = UniversalCache::new();
        let args: Vec<Polynomial> = ["a + 1", "a*b - 2", "b^2", "3*a", "a - b"]
            .iter()
            .map(|s| p(s))
            .collect();
        let pop = p_op_seq(&args);
        let newt = newton_seq(&args);
        let l = l_seq(&args);
        let lop = l_op_seq(&args);
        let nop = n_op_seq(&args);
        for k in 1..=5 {
            assert_eq!(pop[k], compose(&c.p_op(k).unwrap(), &args[..k]));
            assert_eq!(newt[k], compose(&c.newton(k).unwrap(), &args[..k]));
            assert_eq!(l[k], compose(&c.l(k).unwrap(), &args[..k]));
            assert_eq!(lop[k], compose(&c.l_op(k).unwrap(), &args[..k]));
            assert_eq!(nop[k], compose(&c.n_op(k).unwrap(), &args[..k]));
        }
    }

    #[test]
    fn concurrent_reads_agree() {
        let c = UniversalCache::new();
        let vals: Vec<_> = std::thread::scope(|s| {
            let hs: Vec<_> = (0..4).map(|_| s.spawn(|| c.l_op(9).unwrap())).collect();
            hs.into_iter().map(|h| h.join().unwrap()).collect()
        });
        assert!(vals.windows(2).all(|w| w[0] == w[1]));
    }
}
