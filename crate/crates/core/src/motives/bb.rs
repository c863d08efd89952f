use super::adhm::check_params;
use super::{curve_context, l_pow, l_var, px_at, Curve, MotiveContext};
use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// `λ^k` from a precomputed list, with `λ^k = 0` for negative `k`.
fn lam(list: &[Polynomial], k: i64) -> Result<Polynomial> {
    if k < 0 {
        return Ok(Polynomial::zero());
    }
    list.get(k as usize)
        .cloned()
        .ok_or_else(|| Error::InvalidArgument(format!("λ^{k} outside the precomputed range")))
}

fn lp(e: i64) -> Result<Polynomial> {
    u32::try_from(e)
        .map(l_pow)
        .map_err(|_| Error::InvalidArgument(format!("negative power L^{e} would need L to be inverted")))
}

/// `(L^k - 1)`.
fn lm1(k: u32) -> Polynomial {
    l_pow(k) - Polynomial::one()
}

/// The motive of the moduli space of rank `r` twisted Higgs bundles from the
/// Bialynicki-Birula decomposition, for `deg L = 2g - 2 + p`.
pub fn bb_motive(g: usize, r: usize, p: usize) -> Result<Polynomial> {
    check_params(g, r, p)?;
    let (curve, mut ctx) = curve_context(g)?;
    let gi = g as i64;
    let dl = 2 * gi - 2 + p as i64;
    let p1 = px_at(&curve, &Polynomial::one());
    let out = match r {
        1 => lp(dl + 1 - gi)? * p1,
        2 => rank2(&curve, &mut ctx, dl, &p1)?,
        _ => rank3(&curve, &mut ctx, dl, &p1)?,
    };
    out.assert_integral()
}

fn rank2(curve: &Curve, ctx: &mut MotiveContext, dl: i64, p1: &Polynomial) -> Result<Polynomial> {
    let g = curve.genus as i64;
    let pl = px_at(curve, &l_pow(1));
    let num = lp(4 * dl + 4 - 4 * g)? * (p1 * &pl - lp(g)? * p1 * p1);
    let den = lm1(1) * lm1(2);
    let first = num.exact_div_univar(&den, l_var())?;
    let lx = ctx.lambda_all(&curve.motive(), dl.max(0) as usize)?;
    let mut sum = Polynomial::zero();
    for d1 in 1..=(1 + dl).div_euclid(2) {
        let k = 1 - 2 * d1 + dl;
        debug_assert!(k >= 0);
        sum += &lam(&lx, k)?;
    }
    Ok(first + lp(3 * dl + 2 - 2 * g)? * p1 * sum)
}

fn rank3(curve: &Curve, ctx: &mut MotiveContext, dl: i64, p1: &Polynomial) -> Result<Polynomial> {
    let g = curve.genus as i64;
    let l = l_pow(1);
    let one = Polynomial::one();
    let pl = px_at(curve, &l);
    let pl2 = px_at(curve, &l_pow(2));
    let n = dl.max(0) as usize + 1;
    let x = curve.motive();
    let lx = ctx.lambda_all(&x, 2 * n)?;
    let lxl2 = ctx.lambda_all(&(&x + &l_pow(2)), n)?;
    let lxl1 = ctx.lambda_all(&(&x * &l + &one), n)?;

    // first term over (L-1)(L^2-1)^2(L^3-1)
    let inner = lp(3 * g - 1)? * (&one + &l + l_pow(2)) * p1 * p1
        - lp(2 * g - 1)? * (&one + &l).pow(2) * p1 * &pl
        + &pl * &pl2;
    let a_num = lp(9 * dl + 9 - 9 * g)? * p1 * inner;

    // second and third terms over (L-1)
    let mut s = Polynomial::zero();
    for d1 in 1..=(2 + 3 * dl).div_euclid(6) {
        let k = dl - 2 * d1;
        s += &(lp(d1 + g)? * lam(&lxl2, k)? - lam(&lxl1, k)?);
    }
    for d1 in 1..=(4 + 3 * dl).div_euclid(6) {
        let k = dl - 2 * d1 + 1;
        s += &(lp(d1 + g - 1)? * lam(&lxl2, k)? - lam(&lxl1, k)?);
    }
    let b_num = lp(7 * dl + 5 - 5 * g)? * p1 * p1 * s;

    let den = lm1(1) * lm1(2).pow(2) * lm1(3);
    let rest = lm1(2).pow(2) * lm1(3);
    let fraction = (a_num + b_num * rest).exact_div_univar(&den, l_var())?;

    let mut c = Polynomial::zero();
    for d1 in 1..=dl {
        let lo = (d1 - dl).max(1 - d1);
        let hi = (1 + dl - d1).div_euclid(2);
        for d2 in lo..=hi {
            let i = d2 + dl - d1;
            let j = 1 + dl - d1 - 2 * d2;
            if i < 0 || j < 0 {
                return Err(Error::InvalidArgument(format!("negative λ index ({i}, {j}) in the rank 3 sum")));
            }
            c += &(lam(&lx, i)? * lam(&lx, j)?);
        }
    }
    Ok(fraction + lp(6 * dl + 3 - 3 * g)? * p1 * c)
}
