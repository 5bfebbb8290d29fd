use num_bigint::BigInt;
use num_traits::Zero;

use super::{check_cusp_params, check_profile, check_uniform, cusp_shape, CuspShape};
use crate::error::Result;
use crate::exactalg::{binom, rat, rat_int, BiPoly, Rat, UniPoly};
use crate::stressed::StressedProfile;

fn bipow(p: &BiPoly, e: usize) -> BiPoly {
    let mut acc = BiPoly::one();
    for _ in 0..e {
        acc = &acc * p;
    }
    acc
}

fn cnt(c: u64) -> Rat {
    Rat::from_integer(c.into())
}

pub fn tutte_uniform(k: usize, n: usize) -> Result<BiPoly> {
    check_uniform(k, n)?;
    if k == 0 {
        return Ok(BiPoly::term(0, n as u32, rat(1)));
    }
    if k == n {
        return Ok(BiPoly::term(n as u32, 0, rat(1)));
    }
    let (k, n) = (k as i64, n as i64);
    let mut out = BiPoly::zero();
    for i in 1..=k {
        out.add_term(i as u32, 0, rat_int(binom(n - i - 1, n - k - 1)));
    }
    for i in 1..=n - k {
        out.add_term(0, i as u32, rat_int(binom(n - i - 1, k - 1)));
    }
    Ok(out)
}

/// `T(Λ_{r,k,h,n}) - T(U_{k-r,n-h} ⊕ U_{r,h})`, a multiple of `x + y - xy`.
pub fn tutte_relax_delta(r: usize, k: usize, h: usize, n: usize) -> Result<BiPoly> {
    check_cusp_params(r, k, h, n)?;
    let xm = &BiPoly::x() - &BiPoly::one();
    let ym = &BiPoly::y() - &BiPoly::one();
    let xy = &xm * &ym;
    let mut out = BiPoly::zero();
    for i in r + 1..=h {
        for j in 0..k - r {
            let c = rat_int(binom(h as i64, i as i64) * binom((n - h) as i64, j as i64));
            if c.is_zero() {
                continue;
            }
            let alpha = if i + j <= k {
                &bipow(&xm, k - i - j) * &(&BiPoly::one() - &bipow(&xy, i - r))
            } else {
                &bipow(&ym, i + j - k) * &(&BiPoly::one() - &bipow(&xy, k - r - j))
            };
            out += &alpha.scale(&c);
        }
    }
    Ok(out)
}

pub fn tutte_cuspidal(r: usize, k: usize, h: usize, n: usize) -> Result<BiPoly> {
    check_cusp_params(r, k, h, n)?;
    let sum = &tutte_uniform(k - r, n - h)? * &tutte_uniform(r, h)?;
    Ok(&sum + &tutte_relax_delta(r, k, h, n)?)
}

/// `T(U_{k,n}) - Σ λ_{r,h} Δ_{r,h}` with `Δ` the relaxation delta.
pub fn tutte_split(p: &StressedProfile, k: usize, n: usize) -> Result<BiPoly> {
    check_profile(p, k, n)?;
    let mut out = tutte_uniform(k, n)?;
    for (r, h, c) in p.iter() {
        out -= &tutte_relax_delta(r, k, h, n)?.scale(&cnt(c));
    }
    Ok(out)
}

pub fn char_uniform(k: usize, n: usize) -> Result<UniPoly> {
    check_uniform(k, n)?;
    if k == 0 {
        return Ok(if n == 0 { UniPoly::one() } else { UniPoly::zero() });
    }
    let mut out = UniPoly::zero();
    for j in 0..k {
        let c = rat_int(binom(n as i64, j as i64) * if j % 2 == 0 { 1 } else { -1 });
        let w = &UniPoly::monomial(k - j, rat(1)) - &UniPoly::one();
        out += &w.scale(&c);
    }
    Ok(out)
}

fn char_delta(r: usize, k: usize, h: usize, n: usize) -> UniPoly {
    let mut out = UniPoly::zero();
    for i in r + 1..=h {
        for j in 0..k - r {
            let c = binom(h as i64, i as i64) * binom((n - h) as i64, j as i64);
            if c.is_zero() {
                continue;
            }
            let c = rat_int(if (i + j) % 2 == 0 { c } else { -c });
            let hi = if i + j <= k { UniPoly::monomial(k - i - j, rat(1)) } else { UniPoly::one() };
            let omega = &hi - &UniPoly::monomial(k - r - j, rat(1));
            out += &omega.scale(&c);
        }
    }
    out
}

pub fn char_cuspidal(r: usize, k: usize, h: usize, n: usize) -> Result<UniPoly> {
    check_cusp_params(r, k, h, n)?;
    let sum = &char_uniform(k - r, n - h)? * &char_uniform(r, h)?;
    Ok(&sum + &char_delta(r, k, h, n))
}

pub fn char_split(p: &StressedProfile, k: usize, n: usize) -> Result<UniPoly> {
    check_profile(p, k, n)?;
    let mut out = char_uniform(k, n)?;
    for (r, h, c) in p.iter() {
        out -= &char_delta(r, k, h, n).scale(&cnt(c));
    }
    Ok(out)
}

pub fn beta_uniform(k: usize, n: usize) -> Result<BigInt> {
    check_uniform(k, n)?;
    Ok(match n {
        0 => BigInt::zero(),
        1 => BigInt::from(k),
        _ if k == 0 || k == n => BigInt::zero(),
        _ => binom(n as i64 - 2, k as i64 - 1),
    })
}

fn beta_sum(k1: usize, n1: usize, k2: usize, n2: usize) -> Result<BigInt> {
    if n1 == 0 {
        return beta_uniform(k2, n2);
    }
    if n2 == 0 {
        return beta_uniform(k1, n1);
    }
    Ok(BigInt::zero())
}

/// `Σ_{i=r}^{k-1} C(h-1,i) C(n-h-1,k-1-i)` on proper parameters.
pub fn beta_cuspidal(r: usize, k: usize, h: usize, n: usize) -> Result<BigInt> {
    match cusp_shape(r, k, h, n)? {
        CuspShape::Uniform => beta_uniform(k, n),
        CuspShape::Sum => beta_sum(k - r, n - h, r, h),
        CuspShape::Proper => {
            let (k, h, n) = (k as i64, h as i64, n as i64);
            Ok((r as i64..k).map(|i| binom(h - 1, i) * binom(n - h - 1, k - 1 - i)).sum())
        }
    }
}

pub fn beta_split(p: &StressedProfile, k: usize, n: usize) -> Result<BigInt> {
    check_profile(p, k, n)?;
    let mut out = beta_uniform(k, n)?;
    for (r, h, c) in p.iter() {
        out -= (beta_cuspidal(r, k, h, n)? - beta_sum(k - r, n - h, r, h)?) * c;
    }
    Ok(out)
}
