//! Exact arithmetic: rationals, dense univariate and sparse bivariate
//! polynomials, binomial conventions, Eulerian numbers, interpolation.

mod binom;
mod bipoly;
mod eulerian;
mod interp;
mod poly;
mod rat;

pub use binom::{binom, binom_conv, binom_i, factorial, poly_binom, poly_binom_truncated, BinomConvention};
pub use bipoly::BiPoly;
pub use eulerian::{eulerian, eulerian_poly};
pub use interp::{interpolate, interpolate_from_zero};
pub use poly::UniPoly;
pub use rat::{format_rat, parse_rat, rat, rat_frac, rat_int, Rat};
