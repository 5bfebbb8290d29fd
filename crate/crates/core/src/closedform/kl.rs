use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

use super::{check_profile, check_uniform, cusp_shape, CuspShape};
use crate::error::{MvError, Result};
use crate::exactalg::{binom, binom_conv, rat, rat_int, BinomConvention, Rat, UniPoly};
use crate::oracle::{gamma_extract, kl_oracle, klq_oracle, klz_oracle};
use crate::stressed::{cuspidal, StressedProfile};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KlKind {
    P,
    Q,
    Z,
    Gamma,
}

/// Which argument produced the value of a cuspidal term.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KlRoute {
    Uniform,
    DirectSum,
    /// `r = k-1`: the simplification of `Λ_{k-1,k,h,n}` is `U_{k,h+1}`.
    PavingSimplification,
    /// `k = n-2`, `h = r+1`: subdivision into the matroids `C_{a,n+1-a}`.
    Corank2Subdivision,
    Oracle,
}

impl fmt::Display for KlRoute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            KlRoute::Uniform => "uniform",
            KlRoute::DirectSum => "direct-sum",
            KlRoute::PavingSimplification => "paving-simplification",
            KlRoute::Corank2Subdivision => "corank2-subdivision",
            KlRoute::Oracle => "oracle",
        })
    }
}

fn memo() -> &'static RwLock<HashMap<(usize, usize), UniPoly>> {
    static MEMO: OnceLock<RwLock<HashMap<(usize, usize), UniPoly>>> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

fn indicator_empty(n: usize) -> UniPoly {
    if n == 0 {
        UniPoly::one()
    } else {
        UniPoly::zero()
    }
}

pub fn kl_uniform(k: usize, n: usize) -> Result<UniPoly> {
    check_uniform(k, n)?;
    if let Some(p) = memo().read().expect("kl memo poisoned").get(&(k, n)) {
        return Ok(p.clone());
    }
    let p = kl_uniform_raw(k, n);
    memo().write().expect("kl memo poisoned").insert((k, n), p.clone());
    Ok(p)
}

fn kl_uniform_raw(k: usize, n: usize) -> UniPoly {
    if k == 0 {
        return indicator_empty(n);
    }
    if k == n {
        return UniPoly::one();
    }
    let (k, n) = (k as i64, n as i64);
    let c = (0..=(k - 1) / 2)
        .map(|j| {
            let mut acc = Rat::from_integer(0.into());
            for i in 0..n - k {
                let num = binom(n, j)
                    * binom(k + i - j, i + j + 1)
                    * binom_conv(i + j - 1, i, BinomConvention::NegUpperExtended);
                acc += Rat::new(num, (k - j).into());
            }
            acc
        })
        .collect();
    UniPoly::new(c)
}

pub fn klq_uniform(k: usize, n: usize) -> Result<UniPoly> {
    check_uniform(k, n)?;
    if k == 0 {
        return Ok(indicator_empty(n));
    }
    if k == n {
        return Ok(UniPoly::one());
    }
    let (k, n) = (k as i64, n as i64);
    let lead = binom(n, k);
    let c = (0..)
        .take_while(|j| 2 * j < k)
        .map(|j| {
            let num = &lead * binom(k, j) * ((n - k) * (k - 2 * j));
            Rat::new(num, ((n - k + j) * (n - j)).into())
        })
        .collect();
    Ok(UniPoly::new(c))
}

/// `t^k + Σ_{j<k} C(n,j) t^j P_{U_{k-j,n-j}}`.
pub fn klz_uniform(k: usize, n: usize) -> Result<UniPoly> {
    check_uniform(k, n)?;
    let mut z = UniPoly::monomial(k, rat(1));
    for j in 0..k {
        let p = kl_uniform(k - j, n - j)?;
        z += &(&UniPoly::monomial(j, rat_int(binom(n as i64, j as i64))) * &p);
    }
    Ok(z)
}

pub fn gamma_uniform(k: usize, n: usize) -> Result<UniPoly> {
    check_uniform(k, n)?;
    if k == 0 {
        return Ok(UniPoly::one());
    }
    let (k, n) = (k as i64, n as i64);
    let c = (0..=k / 2)
        .map(|j| {
            let mut acc = Rat::from_integer(0.into());
            for i in j..k {
                let num = binom(k - j, j)
                    * binom_conv(i - 1, i - j, BinomConvention::NegUpperExtended)
                    * binom_conv(n - k + i - 1, i, BinomConvention::NegUpperExtended)
                    * (k - i);
                acc += Rat::new(num, (k - j).into());
            }
            acc
        })
        .collect();
    Ok(UniPoly::new(c))
}

pub fn uniform_of(kind: KlKind, k: usize, n: usize) -> Result<UniPoly> {
    match kind {
        KlKind::P => kl_uniform(k, n),
        KlKind::Q => klq_uniform(k, n),
        KlKind::Z => klz_uniform(k, n),
        KlKind::Gamma => gamma_uniform(k, n),
    }
}

fn check_cab(a: usize, b: usize) -> Result<usize> {
    if a < 2 || b < 2 {
        return Err(MvError::InvalidParameters(format!("C_{{a,b}} needs a, b >= 2, got {a},{b}")));
    }
    Ok(a + b - 1)
}

/// `P_{U_{n-2,n-1}} - t P_{U_{a-2,a-1}} P_{U_{b-2,b-1}}` with `n = a+b-1`.
pub fn kl_cab(a: usize, b: usize) -> Result<UniPoly> {
    let n = check_cab(a, b)?;
    let prod = &kl_uniform(a - 2, a - 1)? * &kl_uniform(b - 2, b - 1)?;
    Ok(&kl_uniform(n - 2, n - 1)? - &(&UniPoly::t() * &prod))
}

pub fn klz_cab(a: usize, b: usize) -> Result<UniPoly> {
    let n = check_cab(a, b)?;
    klz_uniform(n - 2, n - 1)
}

/// `f(Λ_{r,n-2,r+1,n})` from the subdivision into `C_{a,n+1-a}`, `2 <= a <= n-r-1`.
fn corank2_cuspidal(kind: KlKind, r: usize, n: usize) -> Result<UniPoly> {
    let mut out = UniPoly::zero();
    for a in 2..n - r {
        let cab = match kind {
            KlKind::P => kl_cab(a, n + 1 - a)?,
            _ => klz_cab(a, n + 1 - a)?,
        };
        out += &cab;
    }
    let inner = match kind {
        KlKind::P => kl_uniform,
        _ => klz_uniform,
    };
    for a in 2..n - r - 1 {
        out -= &(&inner(a - 1, a)? * &inner(n - a - 1, n - a)?);
    }
    if kind == KlKind::Gamma {
        return gamma_extract(&out, n - 2);
    }
    Ok(out)
}

fn oracle_of(kind: KlKind, r: usize, k: usize, h: usize, n: usize) -> Result<UniPoly> {
    let m = cuspidal(r, k, h, n)?;
    let res = match kind {
        KlKind::P => kl_oracle(&m),
        KlKind::Q => klq_oracle(&m),
        KlKind::Z => klz_oracle(&m),
        KlKind::Gamma => klz_oracle(&m).and_then(|z| gamma_extract(&z, k)),
    };
    res.map_err(|e| match e {
        MvError::TooLarge(msg) => MvError::Unresolvable(format!(
            "no closed form for KL term of Λ_{{{r},{k},{h},{n}}} and the oracle refused it: {msg}"
        )),
        other => other,
    })
}

/// P, Q, Z or γ of `Λ_{r,k,h,n}` together with the route that produced it.
pub fn kl_cuspidal(kind: KlKind, r: usize, k: usize, h: usize, n: usize) -> Result<(UniPoly, KlRoute)> {
    match cusp_shape(r, k, h, n)? {
        CuspShape::Uniform => Ok((uniform_of(kind, k, n)?, KlRoute::Uniform)),
        CuspShape::Sum => Ok((&uniform_of(kind, k - r, n - h)? * &uniform_of(kind, r, h)?, KlRoute::DirectSum)),
        CuspShape::Proper if r + 1 == k => Ok((uniform_of(kind, k, h + 1)?, KlRoute::PavingSimplification)),
        CuspShape::Proper if k + 2 == n && h == r + 1 && kind != KlKind::Q => {
            Ok((corank2_cuspidal(kind, r, n)?, KlRoute::Corank2Subdivision))
        }
        CuspShape::Proper => Ok((oracle_of(kind, r, k, h, n)?, KlRoute::Oracle)),
    }
}

fn split_of(kind: KlKind, p: &StressedProfile, k: usize, n: usize) -> Result<(UniPoly, Vec<KlRoute>)> {
    check_profile(p, k, n)?;
    let mut out = uniform_of(kind, k, n)?;
    let mut routes = Vec::new();
    for (r, h, c) in p.iter() {
        let (cusp, route) = kl_cuspidal(kind, r, k, h, n)?;
        let sum = &uniform_of(kind, k - r, n - h)? * &uniform_of(kind, r, h)?;
        out -= &(&cusp - &sum).scale(&Rat::from_integer(c.into()));
        routes.push(route);
    }
    Ok((out, routes))
}

/// `P_{U_{k,n}} - Σ λ_{r,h} (P_Λ - P_{U_{k-r,n-h}} P_{U_{r,h}})`, with the route
/// used for each profile entry in profile order.
pub fn kl_split(p: &StressedProfile, k: usize, n: usize) -> Result<(UniPoly, Vec<KlRoute>)> {
    split_of(KlKind::P, p, k, n)
}

pub fn klq_split(p: &StressedProfile, k: usize, n: usize) -> Result<(UniPoly, Vec<KlRoute>)> {
    split_of(KlKind::Q, p, k, n)
}

pub fn klz_split(p: &StressedProfile, k: usize, n: usize) -> Result<(UniPoly, Vec<KlRoute>)> {
    split_of(KlKind::Z, p, k, n)
}

pub fn gamma_split(p: &StressedProfile, k: usize, n: usize) -> Result<(UniPoly, Vec<KlRoute>)> {
    split_of(KlKind::Gamma, p, k, n)
}

fn check_corank2(p: &StressedProfile, n: usize) -> Result<()> {
    if n < 2 {
        return Err(MvError::InvalidParameters(format!("corank 2 needs n >= 2, got {n}")));
    }
    check_profile(p, n - 2, n)?;
    if let Some((r, h, _)) = p.iter().find(|&(r, h, _)| h != r + 1) {
        return Err(MvError::InvalidParameters(format!(
            "coloopless corank-2 profiles only have entries of size r+1, got r={r}, h={h}"
        )));
    }
    Ok(())
}

/// The corank-2 formula for P, profile entries being `(r, r+1, λ_r)`.
pub fn kl_corank2(p: &StressedProfile, n: usize) -> Result<UniPoly> {
    check_corank2(p, n)?;
    let top = kl_uniform(n - 2, n - 1)?;
    let mut out = kl_uniform(n - 2, n)?;
    for (r, _, c) in p.iter() {
        let mut term = top.scale(&rat((n - r - 2) as i64));
        for a in 2..n - r {
            let side = &kl_uniform(a - 1, a)? + &(&UniPoly::t() * &kl_uniform(a - 2, a - 1)?);
            term -= &(&kl_uniform(n - a - 1, n - a)? * &side);
        }
        out -= &term.scale(&Rat::from_integer(c.into()));
    }
    Ok(out)
}

pub fn klz_corank2(p: &StressedProfile, n: usize) -> Result<UniPoly> {
    check_corank2(p, n)?;
    let top = klz_uniform(n - 2, n - 1)?;
    let mut out = klz_uniform(n - 2, n)?;
    for (r, _, c) in p.iter() {
        let mut term = top.scale(&rat((n - r - 2) as i64));
        for a in 2..n - r {
            term -= &(&klz_uniform(a - 1, a)? * &klz_uniform(n - a - 1, n - a)?);
        }
        out -= &term.scale(&Rat::from_integer(c.into()));
    }
    Ok(out)
}
