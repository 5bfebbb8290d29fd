use super::check_uniform;
use crate::error::Result;
use crate::exactalg::{binom, eulerian_poly, rat, rat_int, UniPoly};
use crate::oracle::chain_to_h;

/// `Σ_{j<k} C(n,j) A_j(x+1) x^{k-1-j}`, the f-polynomial of the order complex
/// of the proper part of the lattice of flats.
pub fn chain_uniform(k: usize, n: usize) -> Result<UniPoly> {
    check_uniform(k, n)?;
    let x1 = UniPoly::from_ints([1, 1]);
    let mut out = UniPoly::zero();
    for j in 0..k {
        let a = eulerian_poly(j).compose(&x1);
        let term = &a * &UniPoly::monomial(k - 1 - j, rat(1));
        out += &term.scale(&rat_int(binom(n as i64, j as i64)));
    }
    Ok(out)
}

/// `x + x^2 + ... + x^{g-1}`.
fn gap(g: usize) -> UniPoly {
    UniPoly::from_ints((0..g).map(|i| i64::from(i > 0)))
}

/// Hilbert-Poincaré series of the Chow ring of `U_{k,n}`, from the
/// Feichtner-Yuzvinsky basis: a sum over chains of flats starting at the empty
/// set, each step of rank gap `g` contributing `x + ... + x^{g-1}`. Flats of
/// the same size are interchangeable, so the chain sum collapses to sizes.
pub fn hilb_uniform(k: usize, n: usize) -> Result<UniPoly> {
    check_uniform(k, n)?;
    if k == 0 {
        return Ok(if n == 0 { UniPoly::one() } else { UniPoly::zero() });
    }
    // ending[s]: chains ending at a fixed flat of size s < k
    let mut ending: Vec<UniPoly> = Vec::with_capacity(k);
    ending.push(UniPoly::one());
    for s in 1..k {
        let mut acc = UniPoly::zero();
        for (j, e) in ending.iter().enumerate().take(s.saturating_sub(1)) {
            acc += &(e * &gap(s - j)).scale(&rat_int(binom(s as i64, j as i64)));
        }
        ending.push(acc);
    }
    let mut top = UniPoly::zero();
    let mut total = UniPoly::zero();
    for (j, e) in ending.iter().enumerate() {
        let c = rat_int(binom(n as i64, j as i64));
        total += &e.scale(&c);
        top += &(e * &gap(k - j)).scale(&c);
    }
    Ok(&total + &top)
}

/// The conjectured identity `Σ_{i=1}^{k} (-1)^{k-i} C(n-i-1,k-i) h_{U_{i,n}}(x)`.
/// Exposed only for comparison against `hilb_uniform`; never used as a source
/// of values.
pub fn hilb_uniform_conjectural(k: usize, n: usize) -> Result<UniPoly> {
    check_uniform(k, n)?;
    let mut out = UniPoly::zero();
    for i in 1..=k {
        let c = binom(n as i64 - i as i64 - 1, (k - i) as i64) * if (k - i) % 2 == 0 { 1 } else { -1 };
        out += &chain_to_h(&chain_uniform(i, n)?).scale(&rat_int(c));
    }
    Ok(out)
}
