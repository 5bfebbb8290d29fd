use num_bigint::BigInt;

use super::{check_profile, check_uniform, cusp_shape, CuspShape};
use crate::error::Result;
use crate::exactalg::{binom, UniPoly};
use crate::stressed::StressedProfile;

/// `Σ_{i<k} C(n,i) t^i + t^k`.
pub fn whitney_uniform(k: usize, n: usize) -> Result<UniPoly> {
    check_uniform(k, n)?;
    let mut c: Vec<BigInt> = (0..k).map(|i| binom(n as i64, i as i64)).collect();
    c.push(BigInt::from(1));
    Ok(UniPoly::from_bigints(c))
}

pub fn whitney_cuspidal(r: usize, k: usize, h: usize, n: usize) -> Result<UniPoly> {
    match cusp_shape(r, k, h, n)? {
        CuspShape::Uniform => whitney_uniform(k, n),
        CuspShape::Sum => Ok(&whitney_uniform(k - r, n - h)? * &whitney_uniform(r, h)?),
        CuspShape::Proper => {
            let (r, k, h, n) = (r as i64, k as i64, h as i64, n as i64);
            let mut c: Vec<BigInt> = (0..k)
                .map(|i| {
                    let lo = (r + i - k + 1).max(0);
                    let tail: BigInt = (lo..=h).map(|j| binom(h, j) * binom(n - h, i - j)).sum();
                    binom(h, r + i - k) + tail
                })
                .collect();
            c.push(BigInt::from(1));
            Ok(UniPoly::from_bigints(c))
        }
    }
}

/// `W_i = C(n,i) - Σ λ_{r,h} (Σ_{j=r}^{h} C(h,j) C(n-h,i-j) - C(n-h,i-r))` for
/// `i < k`, and `W_k = 1`.
pub fn whitney_split(p: &StressedProfile, k: usize, n: usize) -> Result<UniPoly> {
    check_profile(p, k, n)?;
    let n = n as i64;
    let mut c: Vec<BigInt> = (0..k as i64)
        .map(|i| {
            let mut w = binom(n, i);
            for (r, h, cnt) in p.iter() {
                let (r, h) = (r as i64, h as i64);
                let s: BigInt = (r..=h).map(|j| binom(h, j) * binom(n - h, i - j)).sum();
                w -= (s - binom(n - h, i - r)) * cnt;
            }
            w
        })
        .collect();
    c.push(BigInt::from(1));
    Ok(UniPoly::from_bigints(c))
}
