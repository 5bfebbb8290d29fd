//! Definition-level evaluators for small matroids. These are the ground truth
//! for every closed form and for the profile route.

mod convolve;
mod flats;
mod ginv;
mod kl;
mod speyer;
mod spectrum;
mod tutte;

pub use convolve::convolve;
pub use flats::{chain_oracle, chain_to_h, flag_indicator, hilb_chow_oracle, whitney_oracle, FlagIndicator};
pub use ginv::{g_invariant_brute, g_invariant_oracle, GInvariantVector};
pub use kl::{gamma_extract, kl_oracle, klq_oracle, klz_oracle, KlData};
pub use speyer::{g_poly_oracle_lpm, lpm_components};
pub use spectrum::{denham_oracle, spectrum_definition, spectrum_oracle, DenhamPoly};
pub use tutte::{beta_oracle, char_oracle, tutte_oracle};

use crate::error::{MvError, Result};
use crate::matroid::Matroid;

/// Oracle size cap, from `MV_MAX_ORACLE_N` (default 12).
pub fn max_oracle_n() -> usize {
    std::env::var("MV_MAX_ORACLE_N").ok().and_then(|v| v.trim().parse().ok()).unwrap_or(12)
}

/// G-invariant cap: at most 10 regardless of the general cap.
pub fn max_ginv_n() -> usize {
    max_oracle_n().min(10)
}

pub(crate) fn guard(m: &Matroid, what: &str) -> Result<()> {
    let cap = max_oracle_n();
    if m.n() > cap {
        return Err(MvError::TooLarge(format!("{what} oracle capped at n = {cap}, got {}", m.n())));
    }
    Ok(())
}
