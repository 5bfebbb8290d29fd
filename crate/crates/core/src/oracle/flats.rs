use num_bigint::BigInt;
use num_traits::Zero;

use super::guard;
use crate::error::Result;
use crate::exactalg::{rat, UniPoly};
use crate::matroid::{FlatLattice, Matroid};

/// `sum_F t^{rk F}` over all flats.
pub fn whitney_oracle(m: &Matroid) -> Result<UniPoly> {
    guard(m, "Whitney")?;
    let mut c = vec![0i64; m.rank() + 1];
    for f in m.flats()? {
        c[m.rank_of(f)] += 1;
    }
    Ok(UniPoly::from_ints(c))
}

/// For each flat, the number of chains of proper flats of each length that
/// end just below it, starting from the bottom.
fn chain_counts(lat: &FlatLattice) -> Vec<Vec<BigInt>> {
    let len = lat.len();
    let mut cnt: Vec<Vec<BigInt>> = vec![Vec::new(); len];
    cnt[0] = vec![BigInt::from(1)];
    for g in 1..len {
        let mut acc: Vec<BigInt> = Vec::new();
        for f in 0..g {
            if lat.rank[f] < lat.rank[g] && lat.leq(f, g) {
                let shift = usize::from(f != 0);
                for (i, v) in cnt[f].iter().enumerate() {
                    if acc.len() <= i + shift {
                        acc.resize(i + shift + 1, BigInt::zero());
                    }
                    acc[i + shift] += v;
                }
            }
        }
        cnt[g] = acc;
    }
    cnt
}

/// `sum_i f_i x^{k-1-i}` with `f_i` the number of chains of `i` proper flats.
/// Zero for matroids with loops and for the empty matroid.
pub fn chain_oracle(m: &Matroid) -> Result<UniPoly> {
    guard(m, "chain polynomial")?;
    if m.n() == 0 || m.loops() != 0 {
        return Ok(UniPoly::zero());
    }
    let lat = m.lattice()?;
    let k = m.rank();
    let top = &chain_counts(&lat)[lat.top()];
    let mut c = vec![BigInt::zero(); k];
    for (i, v) in top.iter().enumerate() {
        c[k - 1 - i] += v;
    }
    Ok(UniPoly::from_bigints(c))
}

/// `h(x) = f(x - 1)`.
pub fn chain_to_h(f: &UniPoly) -> UniPoly {
    f.shift(-1)
}

/// Hilbert series of the Chow ring from chains of flats
/// `∅ = F_0 < F_1 < ... < F_m`, each step weighted `x + ... + x^{gap-1}`.
/// Zero for matroids with loops.
pub fn hilb_chow_oracle(m: &Matroid) -> Result<UniPoly> {
    guard(m, "Chow Hilbert series")?;
    if m.loops() != 0 {
        return Ok(UniPoly::zero());
    }
    let lat = m.lattice()?;
    let w = |d: usize| UniPoly::new((0..d).map(|i| rat(i64::from(i > 0))).collect());
    let mut h: Vec<UniPoly> = vec![UniPoly::zero(); lat.len()];
    h[0] = UniPoly::one();
    for g in 1..lat.len() {
        let mut acc = UniPoly::zero();
        for f in 0..g {
            if lat.rank[f] + 2 <= lat.rank[g] && lat.leq(f, g) {
                acc += &(&h[f] * &w(lat.rank[g] - lat.rank[f]));
            }
        }
        h[g] = acc;
    }
    Ok(h.iter().fold(UniPoly::zero(), |a, b| &a + b))
}

/// A strict chain of subsets, optionally with prescribed ranks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagIndicator {
    pub chain: Vec<u64>,
    pub ranks: Option<Vec<usize>>,
}

/// 1 when `M` is loopless and every member of the chain is a flat (of the
/// prescribed rank, if any), else 0.
pub fn flag_indicator(m: &Matroid, flag: &FlagIndicator) -> i64 {
    if m.loops() != 0 {
        return 0;
    }
    let ok = flag.chain.iter().enumerate().all(|(i, &f)| {
        m.is_flat(f) && flag.ranks.as_ref().is_none_or(|r| r.get(i) == Some(&m.rank_of(f)))
    });
    i64::from(ok)
}
