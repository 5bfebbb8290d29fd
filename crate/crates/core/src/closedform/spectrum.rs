use super::{check_profile, check_uniform, cusp_shape, CuspShape};
use super::tutte::{tutte_cuspidal, tutte_uniform};
use crate::error::{MvError, Result};
use crate::exactalg::{binom, rat, rat_int, BiPoly, Rat, UniPoly};
use crate::stressed::StressedProfile;

// Spectrum polynomials live in (t, q), stored as the (x, y) slots of a BiPoly.

fn t_pow(e: usize) -> BiPoly {
    BiPoly::term(e as u32, 0, rat(1))
}

fn tq(a: usize, b: usize, c: Rat) -> BiPoly {
    BiPoly::term(a as u32, b as u32, c)
}

/// `C(n-1,k) t^k (q^n - 1) + Σ_{i<=k} C(n,i) t^i`.
pub fn spec_uniform(k: usize, n: usize) -> Result<BiPoly> {
    check_uniform(k, n)?;
    let c = rat_int(binom(n as i64 - 1, k as i64));
    let mut out = &tq(k, n, c.clone()) - &tq(k, 0, c);
    for i in 0..=k {
        out.add_term(i as u32, 0, rat_int(binom(n as i64, i as i64)));
    }
    Ok(out)
}

/// `t^k T(1 + 1/t, 0) = Σ_a [x^a y^0]T · t^{k-a} (t+1)^a`.
fn tutte_at_shift(tp: &BiPoly, k: usize) -> Result<BiPoly> {
    let mut out = UniPoly::zero();
    for (a, b, c) in tp.terms() {
        if b != 0 {
            continue;
        }
        let a = a as usize;
        if a > k {
            return Err(MvError::InvalidInput(format!("Tutte term x^{a} exceeds rank {k}")));
        }
        let term = &UniPoly::monomial(k - a, c.clone()) * &UniPoly::from_ints([1, 1]).pow(a);
        out += &term;
    }
    Ok(BiPoly::from_x(&out))
}

/// Three-term Tutte evaluation on proper parameters; the degenerate shapes
/// reduce to uniform matroids and products.
pub fn spec_cuspidal(r: usize, k: usize, h: usize, n: usize) -> Result<BiPoly> {
    match cusp_shape(r, k, h, n)? {
        CuspShape::Uniform => spec_uniform(k, n),
        CuspShape::Sum => Ok(&spec_uniform(k - r, n - h)? * &spec_uniform(r, h)?),
        CuspShape::Proper => {
            let tl = tutte_cuspidal(r, k, h, n)?;
            let first = tutte_at_shift(&tl, k)?;
            let c = rat_int(binom((n - h) as i64 - 1, (k - r) as i64));
            let second = &tutte_at_shift(&tutte_uniform(r, h)?, k)? * &tq(0, n - h, c);
            let third = tq(k, n, tl.eval(&rat(0), &rat(1)));
            Ok(&(&first + &second) + &third)
        }
    }
}

/// `((t+1)^k - t^k - t^{k-1})(t + 1 + (n-k-1) t q^{n-k}) + t^k + t^{k-1} + (n-k) t^k q^n`.
pub fn spec_minimal(k: usize, n: usize) -> Result<BiPoly> {
    if k == 0 || k >= n {
        return Err(MvError::InvalidParameters(format!("minimal matroid needs 1 <= k < n, got {k},{n}")));
    }
    let tops = &t_pow(k) + &t_pow(k - 1);
    let a = &BiPoly::from_x(&UniPoly::from_ints([1, 1]).pow(k)) - &tops;
    let b = &BiPoly::from_x(&UniPoly::from_ints([1, 1])) + &tq(1, n - k, rat((n - k - 1) as i64));
    Ok(&(&(&a * &b) + &tops) + &tq(k, n, rat((n - k) as i64)))
}

/// `Spec_{U_{k,n}} - Σ λ_{r,h} (Spec_Λ - Spec_{U_{r,h}} Spec_{U_{k-r,n-h}})`.
pub fn spec_split(p: &StressedProfile, k: usize, n: usize) -> Result<BiPoly> {
    check_profile(p, k, n)?;
    let mut out = spec_uniform(k, n)?;
    for (r, h, c) in p.iter() {
        let sum = &spec_uniform(r, h)? * &spec_uniform(k - r, n - h)?;
        out -= &(&spec_cuspidal(r, k, h, n)? - &sum).scale(&Rat::from_integer(c.into()));
    }
    Ok(out)
}
