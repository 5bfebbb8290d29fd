use num_bigint::BigInt;
use num_traits::Zero;

use super::{check_cusp_params, check_profile, check_uniform, cusp_shape, CuspShape};
use crate::error::{MvError, Result};
use crate::exactalg::{binom, interpolate_from_zero, poly_binom, poly_binom_truncated, rat_int, Rat, UniPoly};
use crate::par;
use crate::stressed::StressedProfile;

fn sign(e: usize) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

fn katzman(k: usize, n: usize, binom_poly: impl Fn(i64, i64, usize) -> UniPoly) -> UniPoly {
    let mut out = UniPoly::zero();
    for j in 0..k {
        let c = rat_int(binom(n as i64, j as i64) * sign(j));
        out += &binom_poly((k - j) as i64, (n - 1 - j) as i64, n - 1).scale(&c);
    }
    out
}

/// Katzman's formula `Σ_{j<k} (-1)^j C(n,j) C((k-j)t + n-1-j, n-1)`.
pub fn ehr_uniform(k: usize, n: usize) -> Result<UniPoly> {
    check_uniform(k, n)?;
    if k == 0 || k == n {
        return Ok(UniPoly::one());
    }
    Ok(katzman(k, n, poly_binom))
}

/// Coefficients of degree at most `max_deg` of `ehr_uniform`, without ever
/// forming the full degree `n-1` polynomial.
pub fn ehr_uniform_low_coeffs(k: usize, n: usize, max_deg: usize) -> Result<UniPoly> {
    check_uniform(k, n)?;
    if k == 0 || k == n {
        return Ok(UniPoly::one());
    }
    Ok(katzman(k, n, |a, b, m| poly_binom_truncated(a, b, m, max_deg)))
}

fn check_minimal(k: usize, n: usize) -> Result<()> {
    if k == 0 || k >= n {
        return Err(MvError::InvalidParameters(format!("minimal matroid needs 1 <= k < n, got {k},{n}")));
    }
    Ok(())
}

fn minimal_with(k: usize, n: usize, shift: i64, binom_poly: impl Fn(i64, i64, usize) -> UniPoly) -> UniPoly {
    let mut sum = UniPoly::zero();
    for j in 0..k {
        let c = rat_int(binom((n - k - 1 + j) as i64, j as i64));
        sum += &binom_poly(1, j as i64 + shift, j).scale(&c);
    }
    let lead = binom_poly(1, (n - k) as i64 + shift, n - k);
    (&lead * &sum).scale(&Rat::new(BigInt::from(1), binom(n as i64 - 1, k as i64 - 1)))
}

/// `C(n-1,k-1)^{-1} C(t+n-k, n-k) Σ_{j<k} C(n-k-1+j, j) C(t+j, j)`.
pub fn ehr_minimal(k: usize, n: usize) -> Result<UniPoly> {
    check_minimal(k, n)?;
    Ok(minimal_with(k, n, 0, poly_binom))
}

/// Low coefficients of `ehr(T_{k,n}, t + shift)`, truncated at `max_deg`.
pub fn ehr_minimal_low_coeffs(k: usize, n: usize, shift: i64, max_deg: usize) -> Result<UniPoly> {
    check_minimal(k, n)?;
    Ok(minimal_with(k, n, shift, |a, b, m| poly_binom_truncated(a, b, m, max_deg)).truncate(max_deg))
}

fn check_sparse_lambda(k: usize, n: usize, lambda: u64) -> Result<()> {
    check_minimal(k, n)?;
    let cap = (k + 1).max(n - k + 1);
    if binom(n as i64, k as i64) < BigInt::from(lambda) * cap {
        return Err(MvError::InvalidParameters(format!(
            "{lambda} circuit-hyperplanes exceed the sparse paving bound for k={k}, n={n}"
        )));
    }
    Ok(())
}

/// `ehr(U_{k,n}, t) - λ ehr(T_{k,n}, t-1)`.
pub fn ehr_sparse_paving(k: usize, n: usize, lambda: u64) -> Result<UniPoly> {
    check_sparse_lambda(k, n, lambda)?;
    let shifted = ehr_minimal(k, n)?.shift(-1);
    Ok(&ehr_uniform(k, n)? - &shifted.scale(&Rat::from_integer(lambda.into())))
}

pub fn ehr_sparse_paving_low_coeffs(k: usize, n: usize, lambda: u64, max_deg: usize) -> Result<UniPoly> {
    check_sparse_lambda(k, n, lambda)?;
    let u = ehr_uniform_low_coeffs(k, n, max_deg)?;
    let t = ehr_minimal_low_coeffs(k, n, -1, max_deg)?;
    Ok(&u - &t.scale(&Rat::from_integer(lambda.into())))
}

/// Fan-Li lattice-point count of `t Δ(Λ_{r,k,h,n})`. Only meaningful for
/// proper cuspidal parameters, where both blocks are non-empty.
pub fn ehr_cuspidal_at(r: usize, k: usize, h: usize, n: usize, t: u64) -> Result<BigInt> {
    if cusp_shape(r, k, h, n)? != CuspShape::Proper {
        return Err(MvError::InvalidParameters(format!("Fan-Li count needs proper cuspidal parameters, got {r},{k},{h},{n}")));
    }
    let t = t as i64;
    let (r, k, h, n) = (r as i64, k as i64, h as i64, n as i64);
    let a = n - h - k + r;
    let b = h - r;
    let m = h.min(k) - r;
    let left: Vec<BigInt> = (0..=n - h).map(|j| binom(n - h, j) * sign(j as usize)).collect();
    let right: Vec<BigInt> = (0..=h).map(|l| binom(h, l) * sign(l as usize)).collect();
    let mut total = BigInt::zero();
    for i in 0..=m * t {
        let mut x = BigInt::zero();
        for (j, cj) in left.iter().enumerate() {
            let j = j as i64;
            x += cj * binom((a - j) * t + n - h - j + i - 1, n - h - 1);
        }
        if x.is_zero() {
            continue;
        }
        let mut y = BigInt::zero();
        for (l, cl) in right.iter().enumerate() {
            let l = l as i64;
            y += cl * binom((b - l) * t + h - l - i - 1, h - 1);
        }
        total += x * y;
    }
    Ok(total)
}

pub fn ehr_cuspidal(r: usize, k: usize, h: usize, n: usize) -> Result<UniPoly> {
    match cusp_shape(r, k, h, n)? {
        CuspShape::Uniform => ehr_uniform(k, n),
        CuspShape::Sum => Ok(&ehr_uniform(k - r, n - h)? * &ehr_uniform(r, h)?),
        CuspShape::Proper => {
            let values = par::map_range(n, |t| ehr_cuspidal_at(r, k, h, n, t as u64).map(rat_int));
            let values = values.into_iter().collect::<Result<Vec<Rat>>>()?;
            Ok(interpolate_from_zero(&values))
        }
    }
}

/// `ehr(U_{k,n}) - Σ λ_{r,h} (ehr(Λ_{r,k,h,n}) - ehr(U_{k-r,n-h}) ehr(U_{r,h}))`.
pub fn ehr_split(p: &StressedProfile, k: usize, n: usize) -> Result<UniPoly> {
    check_profile(p, k, n)?;
    let entries: Vec<_> = p.iter().collect();
    let terms = par::map(&entries, |&(r, h, c)| -> Result<UniPoly> {
        check_cusp_params(r, k, h, n)?;
        let sum = &ehr_uniform(k - r, n - h)? * &ehr_uniform(r, h)?;
        Ok((&ehr_cuspidal(r, k, h, n)? - &sum).scale(&Rat::from_integer(c.into())))
    });
    let mut out = ehr_uniform(k, n)?;
    for t in terms {
        out -= &t?;
    }
    Ok(out)
}
