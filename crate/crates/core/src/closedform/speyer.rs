use num_traits::Zero;

use super::{check_cusp_params, check_profile, check_uniform, cusp_shape, profile_is_disconnected, CuspShape};
use crate::error::{MvError, Result};
use crate::exactalg::{binom, rat, rat_int, Rat, UniPoly};
use crate::stressed::StressedProfile;

/// `Σ_{i=1}^{k} C(n-i-1,k-i) C(n-k-1,i-1) t^i` for `0 < k < n`.
pub fn g_uniform(k: usize, n: usize) -> Result<UniPoly> {
    check_uniform(k, n)?;
    if k == 0 {
        return Ok(if n == 0 { UniPoly::one() } else { UniPoly::zero() });
    }
    if k == n {
        return Ok(UniPoly::monomial(n, rat(1)));
    }
    let (k, n) = (k as i64, n as i64);
    let mut c = vec![Rat::from_integer(0.into())];
    c.extend((1..=k).map(|i| rat_int(binom(n - i - 1, k - i) * binom(n - k - 1, i - 1))));
    Ok(UniPoly::new(c))
}

/// g of a connected cuspidal matroid, from its subdivision into
/// series-parallel pieces. Direct sums are handled by multiplicativity.
pub fn g_cuspidal(r: usize, k: usize, h: usize, n: usize) -> Result<UniPoly> {
    match cusp_shape(r, k, h, n)? {
        CuspShape::Uniform => g_uniform(k, n),
        CuspShape::Sum => Ok(&g_uniform(k - r, n - h)? * &g_uniform(r, h)?),
        CuspShape::Proper => {
            let t = UniPoly::t();
            let mut acc = &t * &g_uniform(k, h - r + k)?;
            for j in r + 1..k {
                let a = g_uniform(k - j, n - h + r - j)?;
                let b = g_uniform(k - j + 1, n - h + r - j + 1)?;
                acc += &(&g_uniform(j, h - r + j)? * &(&(&t * &a) + &b));
            }
            if !acc.coeff(0).is_zero() {
                return Err(MvError::InvalidInput(format!(
                    "g of Λ_{{{r},{k},{h},{n}}}: the 1/t term did not cancel"
                )));
            }
            Ok(UniPoly::new(acc.coeffs().iter().skip(1).cloned().collect()))
        }
    }
}

/// `g_{U_{k,n}} - Σ_h λ_h (g_{U_{k,h+1}} + t g_{U_{k-1,h}})` for a connected
/// paving profile.
pub fn g_paving(p: &StressedProfile, k: usize, n: usize) -> Result<UniPoly> {
    check_profile(p, k, n)?;
    if !p.is_paving(k) {
        return Err(MvError::InvalidParameters("g_paving needs a paving profile (all entries of rank k-1)".into()));
    }
    if profile_is_disconnected(p, k, n) {
        return Err(MvError::InvalidParameters("g_paving needs a connected matroid".into()));
    }
    let t = UniPoly::t();
    let mut out = g_uniform(k, n)?;
    for (r, h, c) in p.iter() {
        check_cusp_params(r, k, h, n)?;
        let term = &g_uniform(k, h + 1)? + &(&t * &g_uniform(k - 1, h)?);
        out -= &term.scale(&Rat::from_integer(c.into()));
    }
    Ok(out)
}
