use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use super::value::Value;
use crate::closedform::*;
use crate::error::{MvError, Result};
use crate::matroid::{LatticePath, Matroid};
use crate::oracle::{
    beta_oracle, chain_oracle, chain_to_h, char_oracle, denham_oracle, g_invariant_oracle, g_poly_oracle_lpm,
    gamma_extract, hilb_chow_oracle, kl_oracle, klq_oracle, klz_oracle, spectrum_oracle, tutte_oracle,
    whitney_oracle, GInvariantVector,
};
use crate::polytope::{ehrhart_oracle, volume_oracle};
use crate::stressed::{classify_split, cuspidal, graham_sloane, lambda_bound_check, minimal, SplitClass, StressedProfile};

/// How a value was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    ClosedForm,
    Profile,
    Oracle,
    Components,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::ClosedForm => "closed-form",
            Route::Profile => "profile",
            Route::Oracle => "oracle",
            Route::Components => "components",
        })
    }
}

/// The route a caller asks for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RouteChoice {
    Auto,
    Profile,
    Oracle,
}

impl FromStr for RouteChoice {
    type Err = MvError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "auto" => Ok(RouteChoice::Auto),
            "profile" => Ok(RouteChoice::Profile),
            "oracle" => Ok(RouteChoice::Oracle),
            _ => Err(MvError::Parse(format!("unknown route '{s}' (expected auto, profile or oracle)"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evaluation {
    pub id: InvariantId,
    pub route: Route,
    pub value: Value,
    /// One line per profile term saying how it was resolved.
    pub notes: Vec<String>,
}

/// Named families with their own closed forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Uniform { k: usize, n: usize },
    Cuspidal { r: usize, k: usize, h: usize, n: usize },
    Minimal { k: usize, n: usize },
    Cab { a: usize, b: usize },
    Lpm { l: LatticePath, u: LatticePath },
    GrahamSloane { k: usize, n: usize, residue: Option<usize> },
}

impl Family {
    pub fn build(&self) -> Result<Matroid> {
        match self {
            Family::Uniform { k, n } => Matroid::uniform(*k, *n),
            Family::Cuspidal { r, k, h, n } => cuspidal(*r, *k, *h, *n),
            Family::Minimal { k, n } => minimal(*k, *n),
            Family::Cab { a, b } => Matroid::cab(*a, *b),
            Family::Lpm { l, u } => Matroid::lpm(l, u),
            Family::GrahamSloane { k, n, residue } => graham_sloane(*k, *n, *residue),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Explicit(Matroid),
    Profile { k: usize, n: usize, profile: StressedProfile },
    Family(Family),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalRequest {
    pub id: InvariantId,
    pub source: Source,
}

fn uni(r: Result<UniPoly>) -> Result<Value> {
    r.map(Value::Uni)
}

fn uniform_ginv(k: usize, n: usize) -> Result<GInvariantVector> {
    check_cusp_params(0, k, 0, n)?;
    let mut g = GInvariantVector::new(n);
    g.add((1u64 << k) - 1, crate::exactalg::factorial(n as u64));
    Ok(g)
}

/// Each ordering of `U_{k1,n1} ⊕ U_{k2,n2}` is an interleaving of orderings of
/// the parts; the rank jumps only depend on which positions hold part one.
fn sum_ginv(k1: usize, n1: usize, k2: usize, n2: usize) -> GInvariantVector {
    let n = n1 + n2;
    let mult = crate::exactalg::factorial(n1 as u64) * crate::exactalg::factorial(n2 as u64);
    let mut g = GInvariantVector::new(n);
    for s in crate::matroid::k_subsets(n, n1) {
        let (mut a, mut b, mut seq) = (0, 0, 0u64);
        for i in 0..n {
            let jump = if s >> i & 1 == 1 {
                a += 1;
                a <= k1
            } else {
                b += 1;
                b <= k2
            };
            if jump {
                seq |= 1 << i;
            }
        }
        g.add(seq, mult.clone());
    }
    g
}

/// `f(U_{k,n})` from closed forms.
pub fn uniform_value(id: InvariantId, k: usize, n: usize) -> Result<Value> {
    match id {
        InvariantId::Volume => vol_uniform(k, n).map(Value::Rat),
        InvariantId::Ehrhart => uni(ehr_uniform(k, n)),
        InvariantId::Tutte => tutte_uniform(k, n).map(Value::Bi),
        InvariantId::CharPoly => uni(char_uniform(k, n)),
        InvariantId::Beta => beta_uniform(k, n).map(Value::Int),
        InvariantId::WhitneyW => uni(whitney_uniform(k, n)),
        InvariantId::ChainF => uni(chain_uniform(k, n)),
        InvariantId::ChainH => uni(chain_uniform(k, n).map(|f| chain_to_h(&f))),
        InvariantId::HilbChow => uni(hilb_uniform(k, n)),
        InvariantId::KlP => uni(kl_uniform(k, n)),
        InvariantId::KlQ => uni(klq_uniform(k, n)),
        InvariantId::KlZ => uni(klz_uniform(k, n)),
        InvariantId::KlGamma => uni(gamma_uniform(k, n)),
        InvariantId::Spectrum => spec_uniform(k, n).map(Value::Bi),
        InvariantId::SpeyerG => uni(g_uniform(k, n)),
        InvariantId::GInvariant => uniform_ginv(k, n).map(Value::GInv),
        InvariantId::Denham => Err(MvError::Unresolvable("the Denham polynomial depends on labels and has no closed form here".into())),
    }
}

/// Definition-level value on an explicit matroid.
pub fn oracle_value(id: InvariantId, m: &Matroid) -> Result<Value> {
    match id {
        InvariantId::Volume => volume_oracle(m).map(Value::Rat),
        InvariantId::Ehrhart => uni(ehrhart_oracle(m)),
        InvariantId::Tutte => tutte_oracle(m).map(Value::Bi),
        InvariantId::CharPoly => uni(char_oracle(m)),
        InvariantId::Beta => beta_oracle(m).map(Value::Int),
        InvariantId::WhitneyW => uni(whitney_oracle(m)),
        InvariantId::ChainF => uni(chain_oracle(m)),
        InvariantId::ChainH => uni(chain_oracle(m).map(|f| chain_to_h(&f))),
        InvariantId::HilbChow => uni(hilb_chow_oracle(m)),
        InvariantId::KlP => uni(kl_oracle(m)),
        InvariantId::KlQ => uni(klq_oracle(m)),
        InvariantId::KlZ => uni(klz_oracle(m)),
        InvariantId::KlGamma => uni(klz_oracle(m).and_then(|z| gamma_extract(&z, m.rank()))),
        InvariantId::Spectrum => spectrum_oracle(m).map(Value::Bi),
        InvariantId::Denham => denham_oracle(m).map(Value::Denham),
        InvariantId::GInvariant => g_invariant_oracle(m).map(Value::GInv),
        InvariantId::SpeyerG => Err(MvError::Unresolvable(
            "the g-polynomial oracle only handles lattice path matroids".into(),
        )),
    }
}

fn is_lattice_only(id: InvariantId) -> bool {
    matches!(id, InvariantId::ChainF | InvariantId::ChainH | InvariantId::HilbChow)
}

fn term_oracle(id: InvariantId, m: &Matroid, what: &str) -> Result<Value> {
    oracle_value(id, m).map_err(|e| match e {
        MvError::TooLarge(msg) => MvError::Unresolvable(format!("{id} of {what}: no closed form and {msg}")),
        other => other,
    })
}

/// `f(U_{k1,n1} ⊕ U_{k2,n2})` and how it was obtained.
pub fn sum_value(id: InvariantId, k1: usize, n1: usize, k2: usize, n2: usize) -> Result<(Value, String)> {
    if n1 == 0 {
        return Ok((uniform_value(id, k2, n2)?, "uniform".into()));
    }
    if n2 == 0 {
        return Ok((uniform_value(id, k1, n1)?, "uniform".into()));
    }
    if id.is_multiplicative() {
        return Ok((uniform_value(id, k1, n1)?.mul(&uniform_value(id, k2, n2)?)?, "product".into()));
    }
    match id {
        InvariantId::Volume => Ok((Value::Rat(Rat::from_integer(0.into())), "lower-dimensional".into())),
        InvariantId::Beta => Ok((Value::Int(BigInt::from(0)), "disconnected".into())),
        _ if is_lattice_only(id) => {
            if (k1 == 0) || (k2 == 0) {
                return Ok((uniform_value(id, 0, 1)?, "loops".into()));
            }
            // lattice-only invariants of loopless matroids survive simplification
            let si = |k: usize, n: usize| Matroid::uniform(k, if k == 1 { 1 } else { n });
            let m = Matroid::direct_sum(&[si(k1, n1)?, si(k2, n2)?])?;
            Ok((term_oracle(id, &m, "a direct sum")?, "oracle-on-simplification".into()))
        }
        InvariantId::GInvariant => Ok((Value::GInv(sum_ginv(k1, n1, k2, n2)), "interleaving".into())),
        _ => Err(MvError::Unresolvable(format!("{id} of a direct sum"))),
    }
}

use crate::exactalg::{Rat, UniPoly};

/// `f(Λ_{r,k,h,n})` and how it was obtained.
pub fn cuspidal_value(id: InvariantId, r: usize, k: usize, h: usize, n: usize) -> Result<(Value, String)> {
    let shape = cusp_shape(r, k, h, n)?;
    match shape {
        CuspShape::Uniform => return Ok((uniform_value(id, k, n)?, "uniform".into())),
        CuspShape::Sum if !matches!(id, InvariantId::Volume | InvariantId::Beta) => {
            return sum_value(id, k - r, n - h, r, h);
        }
        _ => {}
    }
    let closed = |v: Result<Value>| v.map(|v| (v, "closed-form".to_string()));
    match id {
        InvariantId::Volume => closed(vol_cuspidal(r, k, h, n).map(Value::Rat)),
        InvariantId::Ehrhart => closed(uni(ehr_cuspidal(r, k, h, n))),
        InvariantId::Tutte => closed(tutte_cuspidal(r, k, h, n).map(Value::Bi)),
        InvariantId::CharPoly => closed(uni(char_cuspidal(r, k, h, n))),
        InvariantId::Beta => closed(beta_cuspidal(r, k, h, n).map(Value::Int)),
        InvariantId::WhitneyW => closed(uni(whitney_cuspidal(r, k, h, n))),
        InvariantId::Spectrum => closed(spec_cuspidal(r, k, h, n).map(Value::Bi)),
        InvariantId::SpeyerG => closed(uni(g_cuspidal(r, k, h, n))),
        InvariantId::KlP | InvariantId::KlQ | InvariantId::KlZ | InvariantId::KlGamma => {
            let kind = match id {
                InvariantId::KlP => KlKind::P,
                InvariantId::KlQ => KlKind::Q,
                InvariantId::KlZ => KlKind::Z,
                _ => KlKind::Gamma,
            };
            let (v, route) = kl_cuspidal(kind, r, k, h, n)?;
            Ok((Value::Uni(v), route.to_string()))
        }
        _ if is_lattice_only(id) && r + 1 == k => {
            Ok((uniform_value(id, k, h + 1)?, "paving-simplification".into()))
        }
        _ if is_lattice_only(id) => {
            let m = cuspidal(r, k, h, n)?.simplify();
            Ok((term_oracle(id, &m, "a cuspidal matroid")?, "oracle".into()))
        }
        InvariantId::GInvariant => {
            let m = cuspidal(r, k, h, n)?;
            Ok((term_oracle(id, &m, "a cuspidal matroid")?, "oracle".into()))
        }
        _ => Err(MvError::Unresolvable(format!("{id} has no profile route"))),
    }
}

fn check_request(id: InvariantId, k: usize, n: usize, p: &StressedProfile) -> Result<()> {
    if id == InvariantId::Denham {
        return Err(MvError::Unresolvable("the Denham polynomial has no profile route".into()));
    }
    if !lambda_bound_check(p, k, n) {
        return Err(MvError::InvalidParameters("profile removes more bases than U_{k,n} has".into()));
    }
    for (r, h, _) in p.iter() {
        check_cusp_params(r, k, h, n)?;
    }
    Ok(())
}

/// `f(M) = f(U_{k,n}) - Σ λ_{r,h} (f(Λ_{r,k,h,n}) - f(U_{k-r,n-h} ⊕ U_{r,h}))`.
pub fn eval_valuative(id: InvariantId, k: usize, n: usize, p: &StressedProfile) -> Result<Evaluation> {
    if !id.is_valuative() {
        return Err(MvError::InvalidParameters(format!("{id} is not valuative")));
    }
    check_request(id, k, n, p)?;
    let entries: Vec<_> = p.iter().collect();
    let terms = crate::par::map(&entries, |&(r, h, c)| -> Result<(Value, String)> {
        let (cusp, how) = cuspidal_value(id, r, k, h, n)?;
        let (sum, how_sum) = sum_value(id, k - r, n - h, r, h)?;
        let v = cusp.sub(&sum)?.scale(&BigInt::from(c))?;
        Ok((v, format!("λ[{r},{h}]={c}: cuspidal via {how}, sum via {how_sum}")))
    });
    let mut value = uniform_value(id, k, n)?;
    let mut notes = Vec::new();
    for t in terms {
        let (v, note) = t?;
        value = value.sub(&v)?;
        notes.push(note);
    }
    Ok(Evaluation { id, route: Route::Profile, value, notes })
}

/// `f(M) = f(U_{k,n}) - Σ λ_{r,h} (f(Λ_{r,k,h,n}) + f(U_{r,h} ⊕ U_{k-r,n-h}))`,
/// only for connected matroids.
pub fn eval_covaluative(id: InvariantId, k: usize, n: usize, p: &StressedProfile) -> Result<Evaluation> {
    if !id.is_covaluative() {
        return Err(MvError::InvalidParameters(format!("{id} is not covaluative")));
    }
    check_request(id, k, n, p)?;
    if profile_is_disconnected(p, k, n) {
        return Err(MvError::InvalidParameters(
            "the covaluative formula needs a connected matroid; this profile describes a disconnected one".into(),
        ));
    }
    let mut value = uniform_value(id, k, n)?;
    let mut notes = Vec::new();
    for (r, h, c) in p.iter() {
        let (cusp, how) = cuspidal_value(id, r, k, h, n)?;
        let (sum, how_sum) = sum_value(id, r, h, k - r, n - h)?;
        value = value.sub(&cusp.add(&sum)?.scale(&BigInt::from(c))?)?;
        notes.push(format!("λ[{r},{h}]={c}: cuspidal via {how}, sum via {how_sum}"));
    }
    Ok(Evaluation { id, route: Route::Profile, value, notes })
}

/// Dispatches to the valuative or covaluative formula.
pub fn eval_profile(id: InvariantId, k: usize, n: usize, p: &StressedProfile) -> Result<Evaluation> {
    if id == InvariantId::Denham {
        return Err(MvError::Unresolvable("the Denham polynomial has no profile route".into()));
    }
    if p.is_empty() {
        return Ok(Evaluation { id, route: Route::ClosedForm, value: uniform_value(id, k, n)?, notes: Vec::new() });
    }
    if id.is_covaluative() {
        eval_covaluative(id, k, n, p)
    } else {
        eval_valuative(id, k, n, p)
    }
}

fn oracle_eval(id: InvariantId, m: &Matroid) -> Result<Evaluation> {
    Ok(Evaluation { id, route: Route::Oracle, value: oracle_value(id, m)?, notes: Vec::new() })
}

fn profile_of(m: &Matroid) -> Result<Option<StressedProfile>> {
    Ok(match classify_split(m)? {
        SplitClass::Uniform => Some(StressedProfile::new()),
        SplitClass::ElementarySplit(p) => Some(p),
        SplitClass::NotElementarySplit(_) => None,
    })
}

/// Product over connected components, for multiplicative invariants.
fn components_eval(id: InvariantId, m: &Matroid) -> Result<Evaluation> {
    let mut value: Option<Value> = None;
    let mut notes = Vec::new();
    for c in m.components() {
        let part = m.restrict(c);
        let e = eval_explicit(id, &part, RouteChoice::Auto)?;
        notes.push(format!("component of size {} via {}", part.n(), e.route));
        value = Some(match value {
            None => e.value,
            Some(v) => v.mul(&e.value)?,
        });
    }
    let value = value.ok_or_else(|| MvError::InvalidInput("empty matroid has no components".into()))?;
    Ok(Evaluation { id, route: Route::Components, value, notes })
}

/// Evaluates on an explicit matroid through the requested route.
pub fn eval_explicit(id: InvariantId, m: &Matroid, choice: RouteChoice) -> Result<Evaluation> {
    let (k, n) = (m.rank(), m.n());
    if choice == RouteChoice::Oracle {
        return oracle_eval(id, m);
    }
    let profile = profile_of(m)?;
    if choice == RouteChoice::Profile {
        let p = profile.ok_or_else(|| MvError::InvalidInput("not an elementary split matroid; no profile route".into()))?;
        return eval_profile(id, k, n, &p);
    }
    let splittable = id.is_multiplicative() && m.n() > 1 && !m.is_connected();
    match profile {
        Some(p) if p.is_empty() && id != InvariantId::Denham => eval_profile(id, k, n, &p),
        Some(p) if id == InvariantId::SpeyerG => {
            if splittable {
                components_eval(id, m)
            } else {
                eval_profile(id, k, n, &p)
            }
        }
        Some(p) if id != InvariantId::Denham => match eval_profile(id, k, n, &p) {
            Err(MvError::Unresolvable(msg)) => oracle_eval(id, m).map_err(|_| MvError::Unresolvable(msg)),
            other => other,
        },
        _ if splittable => components_eval(id, m),
        _ => oracle_eval(id, m),
    }
}

fn family_eval(id: InvariantId, fam: &Family, choice: RouteChoice) -> Result<Evaluation> {
    let closed = |v: Value| Evaluation { id, route: Route::ClosedForm, value: v, notes: Vec::new() };
    if choice == RouteChoice::Auto {
        match *fam {
            Family::Uniform { k, n } if id != InvariantId::Denham => return Ok(closed(uniform_value(id, k, n)?)),
            Family::Cuspidal { r, k, h, n } if id != InvariantId::Denham => {
                let (v, how) = cuspidal_value(id, r, k, h, n)?;
                let mut e = closed(v);
                e.notes.push(format!("cuspidal via {how}"));
                return Ok(e);
            }
            Family::Minimal { k, n } if id != InvariantId::Denham => {
                if k == 0 || k >= n {
                    return Err(MvError::InvalidParameters(format!("minimal matroid needs 1 <= k < n, got {k},{n}")));
                }
                return Ok(closed(cuspidal_value(id, k - 1, k, k, n)?.0));
            }
            Family::Cab { a, b } if id == InvariantId::KlP => return Ok(closed(Value::Uni(kl_cab(a, b)?))),
            Family::Cab { a, b } if id == InvariantId::KlZ => return Ok(closed(Value::Uni(klz_cab(a, b)?))),
            _ => {}
        }
    }
    if let Family::Lpm { l, u } = fam {
        if id == InvariantId::SpeyerG && choice != RouteChoice::Profile {
            let m = fam.build()?;
            let profile = profile_of(&m)?;
            let connected = m.is_connected();
            if choice == RouteChoice::Auto && connected {
                if let Some(p) = profile {
                    return eval_profile(id, m.rank(), m.n(), &p);
                }
            }
            return Ok(Evaluation {
                id,
                route: Route::Oracle,
                value: Value::Uni(g_poly_oracle_lpm(l, u)?),
                notes: Vec::new(),
            });
        }
    }
    eval_explicit(id, &fam.build()?, choice)
}

/// Evaluates a request through the requested route.
pub fn eval(req: &EvalRequest, choice: RouteChoice) -> Result<Evaluation> {
    match &req.source {
        Source::Explicit(m) => eval_explicit(req.id, m, choice),
        Source::Family(f) => family_eval(req.id, f, choice),
        Source::Profile { k, n, profile } => {
            if choice == RouteChoice::Oracle {
                return Err(MvError::InvalidInput("a bare profile has no explicit matroid for the oracle".into()));
            }
            eval_profile(req.id, *k, *n, profile)
        }
    }
}

/// Closed form or profile route where possible, oracle otherwise.
pub fn eval_auto(req: &EvalRequest) -> Result<Evaluation> {
    eval(req, RouteChoice::Auto)
}
