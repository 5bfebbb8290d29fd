use std::collections::BTreeMap;

use num_traits::Signed;

use super::{char_oracle, guard, tutte_oracle};
use crate::error::Result;
use crate::exactalg::{rat, BiPoly, Rat, UniPoly};
use crate::matroid::{popcount, Matroid};

/// Coefficient of `b_F` for each cyclic flat `F`, as a polynomial in `(x, y)`.
pub type DenhamPoly = BTreeMap<u64, BiPoly>;

fn neg_arg(p: &UniPoly) -> UniPoly {
    p.compose(&UniPoly::from_ints([0, -1]))
}

/// `sum_F (-1)^{k-|F|} χ_{M/F}(-x) χ_{(M|F)*}(-y) b_F` over cyclic flats.
pub fn denham_oracle(m: &Matroid) -> Result<DenhamPoly> {
    guard(m, "Denham")?;
    let k = m.rank() as i64;
    let mut out = BTreeMap::new();
    for f in m.cyclic_flats()? {
        let cx = neg_arg(&char_oracle(&m.contract(f))?);
        let cy = neg_arg(&char_oracle(&m.restrict(f).dual())?);
        let sign = if (k - popcount(f) as i64).rem_euclid(2) == 0 { 1 } else { -1 };
        let term = (&BiPoly::from_x(&cx) * &BiPoly::from_y(&cy)).scale(&rat(sign));
        if !term.is_zero() {
            out.insert(f, term);
        }
    }
    Ok(out)
}

/// `t^k Φ(1/t, 0, q, ..., q)`, as a polynomial in `(t, q)`.
pub fn spectrum_oracle(m: &Matroid) -> Result<BiPoly> {
    let k = m.rank() as u32;
    let mut out = BiPoly::zero();
    for (f, coeff) in denham_oracle(m)? {
        let q = popcount(f) as u32;
        for (a, b, c) in coeff.terms() {
            if b == 0 {
                assert!(a <= k, "spectrum substitution left a negative power");
                out.add_term(k - a, q, c.clone());
            }
        }
    }
    Ok(out)
}

/// `sum_{F1 <= F2} T_{M|F1}(0,1) |μ(F1,F2)| t^{rk F2} q^{|F1|}` over pairs of
/// flats, an independent route to the spectrum.
pub fn spectrum_definition(m: &Matroid) -> Result<BiPoly> {
    guard(m, "spectrum")?;
    let lat = m.lattice()?;
    let mut out = BiPoly::zero();
    for f1 in 0..lat.len() {
        let t01: Rat = tutte_oracle(&m.restrict(lat.flats[f1]))?.eval(&rat(0), &rat(1));
        if t01 == rat(0) {
            continue;
        }
        let mu = lat.mobius_row(f1);
        for (f2, &v) in mu.iter().enumerate() {
            if v != 0 {
                out.add_term(lat.rank[f2] as u32, lat.size(f1) as u32, &t01 * rat(v).abs());
            }
        }
    }
    Ok(out)
}
