use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use super::var::VarId;

/// Power product of variables. Stored sorted by interned id with no zero
/// exponents, so derived equality and hashing are canonical.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(SmallVec<[(VarId, u32); 6]>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(SmallVec::new())
    }

    pub fn var(v: VarId) -> Monomial {
        Monomial::var_pow(v, 1)
    }

    pub fn var_pow(v: VarId, e: u32) -> Monomial {
        let mut m = Monomial::one();
        if e > 0 {
            m.0.push((v, e));
        }
        m
    }

    pub fn from_pairs<I: IntoIterator<Item = (VarId, u32)>>(pairs: I) -> Monomial {
        let mut v: SmallVec<[(VarId, u32); 6]> = pairs.into_iter().filter(|p| p.1 > 0).collect();
        v.sort_unstable_by_key(|p| p.0);
        let mut out: SmallVec<[(VarId, u32); 6]> = SmallVec::with_capacity(v.len());
        for (x, e) in v {
            match out.last_mut() {
                Some(last) if last.0 == x => last.1 = checked(last.1, e),
                _ => out.push((x, e)),
            }
        }
        Monomial(out)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (VarId, u32)> + '_ {
        self.0.iter().copied()
    }

    pub fn exponent(&self, v: VarId) -> u32 {
        self.0
            .binary_search_by_key(&v, |p| p.0)
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|p| p.1 as u64).sum()
    }

    /// Splits off the power of `v`.
    pub fn split(&self, v: VarId) -> (u32, Monomial) {
        match self.0.binary_search_by_key(&v, |p| p.0) {
            Ok(i) => {
                let mut rest = self.clone();
                let (_, e) = rest.0.remove(i);
                (e, rest)
            }
            Err(_) => (0, self.clone()),
        }
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        if o.0.is_empty() {
            return self.clone();
        }
        if self.0.is_empty() {
            return o.clone();
        }
        let mut out = SmallVec::with_capacity(self.0.len() + o.0.len());
        let (a, b) = (&self.0, &o.0);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, checked(a[i].1, b[j].1)));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    pub fn pow(&self, e: u32) -> Monomial {
        if e == 0 {
            return Monomial::one();
        }
        Monomial(
            self.0
                .iter()
                .map(|&(v, x)| (v, x.checked_mul(e).expect("exponent overflow")))
                .collect(),
        )
    }

    /// Variables with exponents, ordered by variable name.
    pub fn by_name(&self) -> SmallVec<[(VarId, u32); 6]> {
        let mut v = self.0.clone();
        v.sort_by(|a, b| a.0.cmp_by_name(b.0));
        v
    }

    /// Graded lexicographic comparison with variables ordered by name.
    pub fn cmp_grlex(&self, o: &Monomial) -> Ordering {
        let d = self.degree().cmp(&o.degree());
        if d != Ordering::Equal {
            return d;
        }
        let (a, b) = (self.by_name(), o.by_name());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            if a[i].0 == b[j].0 {
                match a[i].1.cmp(&b[j].1) {
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                    }
                    ord => return ord,
                }
            } else {
                // the earlier-named variable is present on one side only
                return if a[i].0.cmp_by_name(b[j].0) == Ordering::Less {
                    Ordering::Greater
                } else {
                    Ordering::Less
                };
            }
        }
        (a.len() - i).cmp(&(b.len() - j))
    }
}

fn checked(a: u32, b: u32) -> u32 {
    a.checked_add(b).expect("exponent overflow")
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (k, (v, e)) in self.by_name().into_iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
