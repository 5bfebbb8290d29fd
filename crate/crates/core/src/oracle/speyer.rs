use std::collections::HashMap;

use crate::error::Result;
use crate::exactalg::UniPoly;
use crate::matroid::{lpm_split, LatticePath};

/// Splits a lattice path pair at the interior points where the two paths
/// touch. Each piece is a connected lattice path matroid, a loop (`E`) or a
/// coloop (`N`).
pub fn lpm_components(l: &LatticePath, u: &LatticePath) -> Vec<(LatticePath, LatticePath)> {
    let (hl, hu) = (l.heights(), u.heights());
    let n = l.len();
    let mut out = Vec::new();
    let mut start = 0;
    for m in 1..=n {
        if m == n || hl[m] == hu[m] {
            out.push((LatticePath(l.0[start..m].to_vec()), LatticePath(u.0[start..m].to_vec())));
            start = m;
        }
    }
    out
}

fn interior_point(l: &LatticePath, u: &LatticePath) -> Option<(usize, usize)> {
    let (hl, hu) = (l.heights(), u.heights());
    (1..l.len()).find_map(|m| (hl[m] + 1 < hu[m]).then(|| (m - hl[m] - 1, hl[m] + 1)))
}

/// Speyer's g-polynomial of a lattice path matroid through repeated
/// lattice-path splits: `g(M) = g(M1) + g(M2) + g(M1 ∩ M2)`. Snakes give `t`,
/// coloops give `t`, loops give zero, and `g` is multiplicative.
pub fn g_poly_oracle_lpm(l: &LatticePath, u: &LatticePath) -> Result<UniPoly> {
    crate::matroid::Matroid::lpm(l, u)?;
    let mut memo = HashMap::new();
    Ok(g_rec(l, u, &mut memo))
}


fn g_rec(l: &LatticePath, u: &LatticePath, memo: &mut HashMap<(LatticePath, LatticePath), UniPoly>) -> UniPoly {
    if let Some(v) = memo.get(&(l.clone(), u.clone())) {
        return v.clone();
    }
    let mut acc = UniPoly::one();
    for (cl, cu) in lpm_components(l, u) {
        let g = if cl.len() == 1 {
            if cl.0[0] {
                UniPoly::t()
            } else {
                UniPoly::zero()
            }
        } else {
            match interior_point(&cl, &cu) {
                None => UniPoly::t(),
                Some((x, y)) => {
                    let parts = lpm_split(&cl, &cu, x, y).expect("interior point splits");
                    parts.iter().fold(UniPoly::zero(), |a, (pl, pu)| &a + &g_rec(pl, pu, memo))
                }
            }
        };
        acc = &acc * &g;
    }
    memo.insert((l.clone(), u.clone()), acc.clone());
    acc
}
