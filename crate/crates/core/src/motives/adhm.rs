use num_bigint::BigInt;
use num_rational::BigRational;

use super::partition::{partitions_of, DEFAULT_PARTITION_BOUND};
use super::{curve_context, l_poly, l_pow, Curve, LaurentSeries, MotiveContext};
use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// Möbius function by trial division.
pub fn mobius(n: u64) -> i64 {
    assert!(n >= 1);
    let mut n = n;
    let mut sign = 1;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            n /= d;
            if n.is_multiple_of(d) {
                return 0;
            }
            sign = -sign;
        }
        d += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// `Z_X(t^h L^a)` on `[lo, hi]`, `lo <= 0`.
pub fn zeta_series(curve: &Curve, h: usize, a: u32, window: (i64, i64)) -> Result<LaurentSeries> {
    let (lo, hi) = window;
    if lo > 0 || hi < lo {
        return Err(Error::WindowTooSmall(format!(
            "zeta series needs a window containing t^0, got [{lo}, {hi}]"
        )));
    }
    if h == 0 {
        return Err(Error::InvalidArgument("hook length must be positive".into()));
    }
    let cs: Vec<Polynomial> = (0..=2 * curve.genus).map(|k| curve.lambda_h1(k)).collect();
    Ok(twisted_zeta(&cs, 1, h, a, hi).extend_down(lo))
}

/// `ψ_j[Z_X(t^h L^a)]` from `cs[k] = ψ_j(λ^k(h¹))`, known on `[0, hi]`:
/// `Σ cs[k] y^k / ((1 - y)(1 - L^j y))` with `y = t^{jh} L^{ja}`.
fn twisted_zeta(cs: &[Polynomial], j: u32, h: usize, a: u32, hi: i64) -> LaurentSeries {
    let step = j as usize * h;
    let mut s = LaurentSeries::zero(0, hi);
    if hi < 0 {
        return s;
    }
    let ya = l_pow(j * a);
    let mut ypow = Polynomial::one();
    for (k, c) in cs.iter().enumerate() {
        let e = (k * step) as i64;
        if e > hi {
            break;
        }
        s = s.add(&LaurentSeries::monomial(c * &ypow, e, hi));
        ypow = &ypow * &ya;
    }
    s.div_one_minus(&ya, step).div_one_minus(&l_pow(j * (a + 1)), step)
}

/// Shift `Σ_s p(a-l) + (1-g)(2l+1)` and `L`-exponent `p Σ_s a` of a partition.
fn cell_data(parts: &super::Partition, g: usize, p: usize) -> (i64, u32) {
    let (g, p) = (g as i64, p as i64);
    let mut shift = 0;
    let mut lexp = 0;
    for c in parts.cells() {
        let (a, l) = (c.arm as i64, c.leg as i64);
        shift += p * (a - l) + (1 - g) * (2 * l + 1);
        lexp += p * a;
    }
    (shift, lexp as u32)
}

/// Lowest `t`-exponent any partition of `n` contributes to `𝓗_n`.
fn hn_lower_bound(n: usize, g: usize, p: usize) -> Result<i64> {
    Ok(partitions_of(n, DEFAULT_PARTITION_BOUND)?
        .iter()
        .map(|lam| cell_data(lam, g, p).0)
        .min()
        .unwrap_or(0))
}

/// `ψ_j[𝓗_n(t)]` known through `hi`, computed cell by cell from the
/// Adams-twisted zeta coefficients `cs`.
fn hn_twisted(n: usize, g: usize, p: usize, j: u32, cs: &[Polynomial], hi: i64) -> Result<LaurentSeries> {
    let parts = partitions_of(n, DEFAULT_PARTITION_BOUND)?;
    let lo = j as i64 * hn_lower_bound(n, g, p)?;
    let mut total = LaurentSeries::zero(lo.min(hi + 1), hi);
    let sign = if (p * n).is_multiple_of(2) { 1 } else { -1 };
    for lam in &parts {
        let (shift, lexp) = cell_data(lam, g, p);
        let shift = shift * j as i64;
        let room = hi - shift;
        if room < 0 {
            continue;
        }
        let mut prod = LaurentSeries::monomial(Polynomial::constant(sign) * l_pow(lexp * j), 0, room);
        for c in lam.cells() {
            let z = twisted_zeta(cs, j, c.hook, c.arm as u32, room);
            prod = prod.mul(&z);
        }
        total.add_assign(&prod.shift(shift).extend_down(total.lo()));
    }
    Ok(total.truncate(hi))
}

#[cfg(test)]
pub(crate) fn hn_twisted_for_tests(
    n: usize,
    g: usize,
    p: usize,
    j: u32,
    cs: &[Polynomial],
    hi: i64,
) -> Result<LaurentSeries> {
    hn_twisted(n, g, p, j, cs, hi)
}

fn twisted_coefficients(ctx: &mut MotiveContext, curve: &Curve, j: u32) -> Result<Vec<Polynomial>> {
    (0..=2 * curve.genus)
        .map(|k| ctx.apply_psi(&curve.lambda_h1(k), j))
        .collect()
}

fn check_lower(s: &LaurentSeries, lo: i64, what: &str) -> Result<()> {
    if let Some(v) = s.valuation() {
        if v < lo {
            return Err(Error::WindowTooSmall(format!(
                "{what} has a nonzero coefficient at t^{v}, below the window start {lo}"
            )));
        }
    }
    Ok(())
}

/// `𝓗_n(t)` on `window`.
pub fn adhm_hn(n: usize, curve: &Curve, p: usize, window: (i64, i64)) -> Result<LaurentSeries> {
    let (lo, hi) = window;
    if n == 0 {
        return Ok(LaurentSeries::monomial(Polynomial::one(), 0, hi).extend_down(lo));
    }
    let cs: Vec<Polynomial> = (0..=2 * curve.genus).map(|k| curve.lambda_h1(k)).collect();
    let s = hn_twisted(n, curve.genus, p, 1, &cs, hi)?;
    check_lower(&s, lo, "𝓗_n")?;
    Ok(clip(s, lo))
}

/// Restricts to exponents `>= lo` (after checking nothing nonzero is lost).
fn clip(s: LaurentSeries, lo: i64) -> LaurentSeries {
    if lo <= s.lo() {
        return s.extend_down(lo);
    }
    let hi = s.hi();
    let coeffs = (lo..=hi).map(|e| s.coeff(e).unwrap()).collect();
    LaurentSeries::new(lo, coeffs)
}

/// ψ_j applied coefficient-wise together with `t -> t^j`.
pub fn psi_series(s: &LaurentSeries, j: u32, ctx: &mut MotiveContext) -> Result<LaurentSeries> {
    s.map_psi(j, |c| ctx.apply_psi(c, j))
}

/// `H_r(t)` known through `hi`, starting at its combinatorial lower bound.
fn hr_series(ctx: &mut MotiveContext, curve: &Curve, r: usize, p: usize, hi: i64) -> Result<LaurentSeries> {
    let g = curve.genus;
    let lows: Vec<i64> = (1..=r).map(|n| hn_lower_bound(n, g, p)).collect::<Result<_>>()?;
    // worst[q]: smallest total lower bound of a composition of q
    let mut worst = vec![0i64; r + 1];
    for q in 1..=r {
        worst[q] = (1..=q).map(|n| lows[n - 1] + worst[q - n]).min().unwrap();
    }
    let mut acc: Option<LaurentSeries> = None;
    for j in (1..=r).filter(|j| r.is_multiple_of(*j)) {
        let mu = mobius(j as u64);
        if mu == 0 {
            continue;
        }
        let m = r / j;
        let cs = twisted_coefficients(ctx, curve, j as u32)?;
        let hs: Vec<LaurentSeries> = (1..=m)
            .map(|n| {
                let need = hi - j as i64 * worst[m - n].min(0);
                hn_twisted(n, g, p, j as u32, &cs, need)
            })
            .collect::<Result<_>>()?;
        // power[k][q]: coefficient of T^q in (Σ_n ψ_j[𝓗_n] T^n)^k
        let mut power: Vec<Option<LaurentSeries>> = vec![None; m + 1];
        for q in 1..=m {
            power[q] = Some(hs[q - 1].clone());
        }
        for k in 1..=m {
            if k > 1 {
                let mut next: Vec<Option<LaurentSeries>> = vec![None; m + 1];
                for q in k..=m {
                    let mut sum: Option<LaurentSeries> = None;
                    for n in 1..=q - (k - 1) {
                        if let Some(prev) = &power[q - n] {
                            let t = prev.mul(&hs[n - 1]);
                            sum = Some(match sum {
                                None => t,
                                Some(s) => s.add(&t),
                            });
                        }
                    }
                    next[q] = sum;
                }
                power = next;
            }
            if let Some(term) = &power[m] {
                let sgn = if k % 2 == 1 { 1 } else { -1 };
                let w = BigRational::new(BigInt::from(sgn * mu), BigInt::from((j * k) as i64));
                let t = term.scale(&Polynomial::from_rational(&w));
                acc = Some(match acc {
                    None => t,
                    Some(a) => a.add(&t),
                });
            }
        }
    }
    let plog = acc.expect("j = 1 always contributes").truncate(hi);
    if plog.hi() < hi {
        return Err(Error::WindowTooSmall(format!(
            "plethystic logarithm only known through t^{}, needed t^{hi}",
            plog.hi()
        )));
    }
    // (1 - t)(1 - L t) = 1 - (1 + L) t + L t^2
    let out = plog.mul_tpoly(&[Polynomial::one(), -(Polynomial::one() + l_poly()), l_poly()]);
    Ok(out)
}

/// `H_r(t)` on `window`.
pub fn plog_hr(r: usize, curve: &Curve, p: usize, window: (i64, i64)) -> Result<LaurentSeries> {
    let mut ctx = MotiveContext::new(&[*curve])?;
    let s = hr_series(&mut ctx, curve, r, p, window.1)?;
    check_lower(&s, window.0, "H_r")?;
    Ok(clip(s, window.0))
}

/// Window handling for [`adhm_motive_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AdhmConfig {
    /// Fixed `t`-window; `None` picks one from the parameters.
    pub window: Option<(i64, i64)>,
    /// Width of the top band that must vanish.
    pub guard: i64,
    /// How often the default window may be doubled.
    pub max_doublings: u32,
}

impl Default for AdhmConfig {
    fn default() -> Self {
        AdhmConfig {
            window: None,
            guard: 8,
            max_doublings: 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdhmResult {
    pub motive: Polynomial,
    pub h_r: LaurentSeries,
    pub window: (i64, i64),
}

/// Expected `t`-degree of `H_r`; the guard band and retries cover misses.
fn degree_estimate(g: usize, r: usize, p: usize) -> i64 {
    let (g, r, p) = (g as i64, r as i64, p as i64);
    r * r * (g - 1) + p * r * (r - 1) / 2 + 2
}

/// Lower end of the default window: the combinatorial lower bound of `H_r`
/// minus the guard band.
fn default_lo(g: usize, r: usize, p: usize, guard: i64) -> Result<i64> {
    let lows: Vec<i64> = (1..=r).map(|n| hn_lower_bound(n, g, p)).collect::<Result<_>>()?;
    let mut worst = vec![0i64; r + 1];
    for q in 1..=r {
        worst[q] = (1..=q).map(|n| lows[n - 1] + worst[q - n]).min().unwrap();
    }
    Ok(worst[r].min(0) - guard)
}

pub fn adhm_motive(g: usize, r: usize, p: usize) -> Result<Polynomial> {
    adhm_motive_with(g, r, p, &AdhmConfig::default()).map(|a| a.motive)
}

/// The motive predicted by the ADHM formula:
/// `(-1)^{pr} L^{r²(g-1) + p r(r+1)/2} H_r(1)`.
pub fn adhm_motive_with(g: usize, r: usize, p: usize, cfg: &AdhmConfig) -> Result<AdhmResult> {
    check_params(g, r, p)?;
    let (curve, mut ctx) = curve_context(g)?;
    let (lo, mut hi, retries) = match cfg.window {
        Some((lo, hi)) => {
            if hi < lo || hi - lo < cfg.guard {
                return Err(Error::WindowTooSmall(format!("[{lo}, {hi}] is narrower than the guard band")));
            }
            (lo, hi, 0)
        }
        None => (
            default_lo(g, r, p, cfg.guard)?,
            degree_estimate(g, r, p) + cfg.guard,
            cfg.max_doublings,
        ),
    };
    let mut attempt = 0;
    let h = loop {
        let h = hr_series(&mut ctx, &curve, r, p, hi)?;
        if let Some(v) = h.valuation() {
            if v < lo {
                return Err(Error::NonPolynomialH(format!(
                    "nonzero coefficient at t^{v} below the window [{lo}, {hi}]"
                )));
            }
        }
        let top_clear = (hi - cfg.guard + 1..=hi).all(|e| h.coeff_ref(e).is_none_or(Polynomial::is_zero));
        if top_clear {
            break h;
        }
        if attempt == retries {
            return Err(Error::NonPolynomialH(format!(
                "coefficients do not vanish on the top band of [{lo}, {hi}]"
            )));
        }
        attempt += 1;
        hi = if hi > 0 { 2 * hi } else { cfg.guard * 2 };
    };
    let h = clip(h, lo);
    let value = h.sum_coeffs();
    let rr = r as u32;
    let lexp = rr * rr * (g as u32 - 1) + p as u32 * rr * (rr + 1) / 2;
    let mut motive = value * l_pow(lexp);
    if (p * r) % 2 == 1 {
        motive = -motive;
    }
    Ok(AdhmResult {
        motive: motive.assert_integral()?,
        h_r: h,
        window: (lo, hi),
    })
}

pub(crate) fn check_params(g: usize, r: usize, p: usize) -> Result<()> {
    if g < 2 {
        return Err(Error::InvalidArgument(format!("genus must be at least 2, got {g}")));
    }
    if !(1..=3).contains(&r) {
        return Err(Error::InvalidArgument(format!("rank must be 1, 2 or 3, got {r}")));
    }
    if p == 0 {
        return Err(Error::InvalidArgument("p must be positive".into()));
    }
    Ok(())
}
