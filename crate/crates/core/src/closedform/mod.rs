//! Closed forms on uniform matroids, cuspidal matroids, direct sums of two
//! uniform matroids and a few special families (minimal, `C_{a,b}`, corank 2).

mod chain;
mod ehrhart;
mod kl;
mod speyer;
mod spectrum;
mod tutte;
mod volume;
mod whitney;

use std::fmt;
use std::str::FromStr;

pub use chain::{chain_uniform, hilb_uniform, hilb_uniform_conjectural};
pub use ehrhart::{
    ehr_cuspidal, ehr_cuspidal_at, ehr_minimal, ehr_minimal_low_coeffs, ehr_sparse_paving, ehr_sparse_paving_low_coeffs,
    ehr_split, ehr_uniform, ehr_uniform_low_coeffs,
};
pub use kl::{
    gamma_split, gamma_uniform, kl_cab, kl_corank2, kl_cuspidal, kl_split, kl_uniform, klq_split, klq_uniform,
    klz_cab, klz_corank2, klz_split, klz_uniform, KlKind, KlRoute,
};
pub use speyer::{g_cuspidal, g_paving, g_uniform};
pub use spectrum::{spec_cuspidal, spec_minimal, spec_split, spec_uniform};
pub use tutte::{
    beta_cuspidal, beta_split, beta_uniform, char_cuspidal, char_split, char_uniform, tutte_cuspidal, tutte_relax_delta,
    tutte_split, tutte_uniform,
};
pub use volume::{
    cuspidal_descent_count, cuspidal_descent_count_brute, vol_cuspidal, vol_minimal, vol_rank2, vol_sparse_paving,
    vol_split, vol_uniform,
};
pub use whitney::{whitney_cuspidal, whitney_split, whitney_uniform};

use crate::error::{MvError, Result};
use crate::stressed::StressedProfile;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InvariantId {
    Volume,
    Ehrhart,
    Tutte,
    CharPoly,
    Beta,
    WhitneyW,
    ChainF,
    ChainH,
    HilbChow,
    KlP,
    KlQ,
    KlZ,
    KlGamma,
    Spectrum,
    Denham,
    SpeyerG,
    GInvariant,
}

impl InvariantId {
    pub const ALL: [InvariantId; 17] = [
        InvariantId::Volume,
        InvariantId::Ehrhart,
        InvariantId::Tutte,
        InvariantId::CharPoly,
        InvariantId::Beta,
        InvariantId::WhitneyW,
        InvariantId::ChainF,
        InvariantId::ChainH,
        InvariantId::HilbChow,
        InvariantId::KlP,
        InvariantId::KlQ,
        InvariantId::KlZ,
        InvariantId::KlGamma,
        InvariantId::Spectrum,
        InvariantId::Denham,
        InvariantId::SpeyerG,
        InvariantId::GInvariant,
    ];

    pub fn name(self) -> &'static str {
        match self {
            InvariantId::Volume => "volume",
            InvariantId::Ehrhart => "ehrhart",
            InvariantId::Tutte => "tutte",
            InvariantId::CharPoly => "char",
            InvariantId::Beta => "beta",
            InvariantId::WhitneyW => "whitney",
            InvariantId::ChainF => "chain_f",
            InvariantId::ChainH => "chain_h",
            InvariantId::HilbChow => "hilb_chow",
            InvariantId::KlP => "kl_p",
            InvariantId::KlQ => "kl_q",
            InvariantId::KlZ => "kl_z",
            InvariantId::KlGamma => "kl_gamma",
            InvariantId::Spectrum => "spectrum",
            InvariantId::Denham => "denham",
            InvariantId::SpeyerG => "speyer_g",
            InvariantId::GInvariant => "g_invariant",
        }
    }

    /// Invariants that satisfy the signed inclusion-exclusion over
    /// subdivisions and are isomorphism invariants.
    pub fn is_valuative(self) -> bool {
        !matches!(self, InvariantId::SpeyerG | InvariantId::Denham)
    }

    pub fn is_covaluative(self) -> bool {
        self == InvariantId::SpeyerG
    }

    /// Multiplicative over direct sums. Only invariants for which this is an
    /// established fact are flagged; chain and Chow-Hilbert polynomials are not.
    pub fn is_multiplicative(self) -> bool {
        matches!(
            self,
            InvariantId::Ehrhart
                | InvariantId::Tutte
                | InvariantId::CharPoly
                | InvariantId::WhitneyW
                | InvariantId::KlP
                | InvariantId::KlQ
                | InvariantId::KlZ
                | InvariantId::KlGamma
                | InvariantId::Spectrum
                | InvariantId::SpeyerG
        )
    }
}

impl fmt::Display for InvariantId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for InvariantId {
    type Err = MvError;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        let id = match key.as_str() {
            "volume" | "vol" => InvariantId::Volume,
            "ehrhart" | "ehr" => InvariantId::Ehrhart,
            "tutte" => InvariantId::Tutte,
            "char" | "charpoly" | "characteristic" => InvariantId::CharPoly,
            "beta" => InvariantId::Beta,
            "whitney" | "whitney_w" | "w" => InvariantId::WhitneyW,
            "chain" | "chain_f" => InvariantId::ChainF,
            "chain_h" => InvariantId::ChainH,
            "hilb" | "hilb_chow" | "chow" => InvariantId::HilbChow,
            "kl" | "kl_p" | "p" => InvariantId::KlP,
            "kl_q" | "q" => InvariantId::KlQ,
            "kl_z" | "z" => InvariantId::KlZ,
            "kl_gamma" | "gamma" => InvariantId::KlGamma,
            "spectrum" | "spec" => InvariantId::Spectrum,
            "denham" => InvariantId::Denham,
            "speyer_g" | "g" | "speyer" => InvariantId::SpeyerG,
            "g_invariant" | "ginv" | "ginvariant" => InvariantId::GInvariant,
            _ => return Err(MvError::Parse(format!("unknown invariant '{s}'"))),
        };
        Ok(id)
    }
}

/// How `Λ_{r,k,h,n}` degenerates for the given parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CuspShape {
    /// `r = 0` or `k - r = n - h`: the uniform matroid `U_{k,n}`.
    Uniform,
    /// `r = h` or `r = k`: the direct sum `U_{k-r,n-h} ⊕ U_{r,h}`.
    Sum,
    Proper,
}

pub fn check_cusp_params(r: usize, k: usize, h: usize, n: usize) -> Result<()> {
    if r > h || r > k || h > n || k > n || k - r > n - h {
        return Err(MvError::InvalidParameters(format!("cuspidal parameters r={r}, k={k}, h={h}, n={n}")));
    }
    Ok(())
}

pub fn cusp_shape(r: usize, k: usize, h: usize, n: usize) -> Result<CuspShape> {
    check_cusp_params(r, k, h, n)?;
    Ok(if r == 0 || k - r == n - h {
        CuspShape::Uniform
    } else if r == h || r == k {
        CuspShape::Sum
    } else {
        CuspShape::Proper
    })
}

pub(crate) fn check_uniform(k: usize, n: usize) -> Result<()> {
    if k > n {
        return Err(MvError::InvalidParameters(format!("uniform matroid needs k <= n, got {k},{n}")));
    }
    Ok(())
}

pub(crate) fn check_profile(p: &StressedProfile, k: usize, n: usize) -> Result<()> {
    check_uniform(k, n)?;
    for (r, h, _) in p.iter() {
        check_cusp_params(r, k, h, n)?;
    }
    Ok(())
}

/// Whether a profile certainly describes a disconnected matroid: a stressed
/// set of loops, a complement of coloops, or two complementary entries that
/// together describe a direct sum of two uniform matroids.
pub fn profile_is_disconnected(p: &StressedProfile, k: usize, n: usize) -> bool {
    if p.is_empty() {
        return !(0 < k && k < n) && n != 1;
    }
    if p.iter().any(|(r, h, _)| r == 0 || k - r == n - h) {
        return true;
    }
    let entries: Vec<_> = p.iter().collect();
    match entries[..] {
        [(r1, h1, 1), (r2, h2, 1)] => r1 + r2 == k && h1 + h2 == n,
        [(r, h, 2)] => 2 * r == k && 2 * h == n,
        _ => false,
    }
}
