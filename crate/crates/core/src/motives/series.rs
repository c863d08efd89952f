use std::fmt;

use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// Truncated Laurent series in `t` with polynomial coefficients.
///
/// Coefficients of `t^e` are known exactly for `lo <= e <= hi`; every
/// coefficient below `lo` is zero and nothing is known above `hi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentSeries {
    lo: i64,
    coeffs: Vec<Polynomial>,
}

impl LaurentSeries {
    /// Series with `coeffs[k]` at `t^{lo+k}`, known through `lo + coeffs.len() - 1`.
    pub fn new(lo: i64, coeffs: Vec<Polynomial>) -> LaurentSeries {
        LaurentSeries { lo, coeffs }
    }

    /// The zero series known on `[lo, hi]`.
    pub fn zero(lo: i64, hi: i64) -> LaurentSeries {
        let len = (hi - lo + 1).max(0) as usize;
        LaurentSeries::new(lo, vec![Polynomial::zero(); len])
    }

    /// `c * t^e`, known through `hi`.
    pub fn monomial(c: Polynomial, e: i64, hi: i64) -> LaurentSeries {
        let mut s = LaurentSeries::zero(e, hi);
        if let Some(slot) = s.coeffs.first_mut() {
            *slot = c;
        }
        s
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.coeffs.len() as i64 - 1
    }

    /// `(lo, hi)`.
    pub fn window(&self) -> (i64, i64) {
        (self.lo, self.hi())
    }

    /// Coefficient of `t^e`; `None` past the known range.
    pub fn coeff(&self, e: i64) -> Option<Polynomial> {
        if e > self.hi() {
            None
        } else if e < self.lo {
            Some(Polynomial::zero())
        } else {
            Some(self.coeffs[(e - self.lo) as usize].clone())
        }
    }

    pub fn coeff_ref(&self, e: i64) -> Option<&Polynomial> {
        (e >= self.lo && e <= self.hi()).then(|| &self.coeffs[(e - self.lo) as usize])
    }

    /// `(exponent, coefficient)` pairs with nonzero coefficient.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Polynomial)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.lo + k as i64, c))
    }

    /// Smallest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<i64> {
        self.terms().next().map(|(e, _)| e)
    }

    /// Largest exponent with a nonzero coefficient.
    pub fn degree(&self) -> Option<i64> {
        self.coeffs
            .iter()
            .rposition(|c| !c.is_zero())
            .map(|k| self.lo + k as i64)
    }

    /// Forgets coefficients above `hi`.
    pub fn truncate(mut self, hi: i64) -> LaurentSeries {
        if hi < self.hi() {
            self.coeffs.truncate((hi - self.lo + 1).max(0) as usize);
        }
        self
    }

    /// Re-expresses the series on a smaller `lo`, padding with zeros.
    pub fn extend_down(mut self, lo: i64) -> LaurentSeries {
        if lo < self.lo {
            let pad = (self.lo - lo) as usize;
            let mut c = vec![Polynomial::zero(); pad];
            c.append(&mut self.coeffs);
            self.coeffs = c;
            self.lo = lo;
        }
        self
    }

    /// Multiplies by `t^s`.
    pub fn shift(mut self, s: i64) -> LaurentSeries {
        self.lo += s;
        self
    }

    pub fn scale(&self, c: &Polynomial) -> LaurentSeries {
        LaurentSeries::new(self.lo, self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn neg(&self) -> LaurentSeries {
        LaurentSeries::new(self.lo, self.coeffs.iter().map(|x| -x).collect())
    }

    /// Sum, known through the smaller of the two `hi`.
    pub fn add(&self, o: &LaurentSeries) -> LaurentSeries {
        let lo = self.lo.min(o.lo);
        let hi = self.hi().min(o.hi());
        let mut out = LaurentSeries::zero(lo, hi);
        for s in [self, o] {
            for (k, c) in s.coeffs.iter().enumerate() {
                let e = s.lo + k as i64;
                if e > hi {
                    break;
                }
                if !c.is_zero() {
                    out.coeffs[(e - lo) as usize] += c;
                }
            }
        }
        out
    }

    pub fn add_assign(&mut self, o: &LaurentSeries) {
        *self = self.add(o);
    }

    /// Product, known through `min(hi_a + lo_b, hi_b + lo_a)`.
    pub fn mul(&self, o: &LaurentSeries) -> LaurentSeries {
        let lo = self.lo + o.lo;
        let hi = (self.hi() + o.lo).min(o.hi() + self.lo);
        let mut out = LaurentSeries::zero(lo, hi);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                let e = lo + (i + j) as i64;
                if e > hi {
                    break;
                }
                if !b.is_zero() {
                    out.coeffs[i + j] += &(a * b);
                }
            }
        }
        out
    }

    /// Multiplies by the polynomial `Σ f[d] t^d`, keeping the known range.
    pub fn mul_tpoly(&self, f: &[Polynomial]) -> LaurentSeries {
        let mut out = LaurentSeries::zero(self.lo, self.hi());
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (d, fd) in f.iter().enumerate() {
                if let Some(slot) = out.coeffs.get_mut(k + d) {
                    *slot += &(c * fd);
                }
            }
        }
        out
    }

    /// Divides by `1 - m t^h` (`h >= 1`), keeping the known range.
    pub fn div_one_minus(&self, m: &Polynomial, h: usize) -> LaurentSeries {
        let mut out = self.coeffs.clone();
        for k in h..out.len() {
            if !out[k - h].is_zero() {
                let add = &out[k - h] * m;
                out[k] += &add;
            }
        }
        LaurentSeries::new(self.lo, out)
    }

    /// Applies `f` to every coefficient and substitutes `t -> t^j`.
    pub fn map_psi<F>(&self, j: u32, mut f: F) -> Result<LaurentSeries>
    where
        F: FnMut(&Polynomial) -> Result<Polynomial>,
    {
        if j == 0 {
            return Err(Error::InvalidArgument("ψ index must be at least 1".into()));
        }
        let j = j as i64;
        let lo = self.lo * j;
        // the next possibly nonzero term sits at j * (hi + 1)
        let hi = self.hi() * j + j - 1;
        let mut out = LaurentSeries::zero(lo, hi);
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out.coeffs[k * j as usize] = f(c)?;
            }
        }
        Ok(out)
    }

    /// Sum of all known coefficients, i.e. the value at `t = 1` when the
    /// series is a Laurent polynomial captured by the window.
    pub fn sum_coeffs(&self) -> Polynomial {
        self.coeffs.iter().sum()
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})*t^{e}")?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.hi() + 1)
    }
}
