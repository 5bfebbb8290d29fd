//! Base polytopes by their cyclic-flat H-description, exact lattice-point
//! counting, the Ehrhart and volume oracles, and pointwise checks of the
//! relaxation and lattice-path subdivisions.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{MvError, Result};
use crate::exactalg::{interpolate_from_zero, rat, rat_int, Rat, UniPoly};
use crate::matroid::{full_mask, lpm_split, popcount, LatticePath, Matroid};
use crate::stressed::{cusp_size, is_stressed, relax};

/// `{x in [0,1]^n : sum x = k, sum_{i in mask} x_i <= bound}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HPolytope {
    pub n: usize,
    pub k: usize,
    pub ineqs: Vec<(u64, usize)>,
}

impl HPolytope {
    /// One inequality per cyclic flat, dropping the trivial ones.
    pub fn of_matroid(m: &Matroid) -> Result<Self> {
        let g = m.ground();
        let ineqs = m
            .cyclic_flats()?
            .into_iter()
            .map(|f| (f, m.rank_of(f)))
            .filter(|&(f, r)| f != 0 && !(f == g && r == m.rank()) && r < popcount(f))
            .collect();
        Ok(Self { n: m.n(), k: m.rank(), ineqs })
    }

    /// `sum_{i < n-h} x_i <= k - r`.
    pub fn cuspidal(r: usize, k: usize, h: usize, n: usize) -> Self {
        Self { n, k, ineqs: vec![(full_mask(n - h), k - r)] }
    }

    pub fn contains(&self, x: &[u32], t: u32) -> bool {
        let t64 = t as u64;
        x.len() == self.n
            && x.iter().all(|&v| v <= t)
            && x.iter().map(|&v| v as u64).sum::<u64>() == self.k as u64 * t64
            && self.ineqs.iter().all(|&(mask, b)| {
                crate::matroid::elements(mask).map(|i| x[i] as u64).sum::<u64>() <= b as u64 * t64
            })
    }

    /// Lattice points of `t P`, enumerated with pruning on partial sums.
    pub fn lattice_points(&self, t: u32) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut x = vec![0u32; self.n];
        self.enumerate(0, 0, t, &mut x, &mut out);
        out
    }

    fn enumerate(&self, i: usize, sum: u64, t: u32, x: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let target = self.k as u64 * t as u64;
        if i == self.n {
            if sum == target && self.contains(x, t) {
                out.push(x.clone());
            }
            return;
        }
        let rem = (self.n - i - 1) as u64 * t as u64;
        for v in 0..=t {
            let s = sum + v as u64;
            if s > target {
                break;
            }
            if s + rem < target {
                continue;
            }
            x[i] = v;
            if self.prefix_ok(x, i, t) {
                self.enumerate(i + 1, s, t, x, out);
            }
        }
        x[i] = 0;
    }

    fn prefix_ok(&self, x: &[u32], i: usize, t: u32) -> bool {
        let below = if i + 1 >= 64 { u64::MAX } else { (1u64 << (i + 1)) - 1 };
        self.ineqs.iter().all(|&(mask, b)| {
            crate::matroid::elements(mask & below).map(|j| x[j] as u64).sum::<u64>() <= b as u64 * t as u64
        })
    }

    /// Number of lattice points of `t P` by a dynamic programme over the
    /// coordinates. The state is the running total together with the partial
    /// sums of the inequalities that can still be violated; an inequality
    /// whose remaining coordinates cannot push it over its bound is dropped.
    pub fn count_lattice_points(&self, t: u32) -> BigInt {
        const DONE: u64 = u64::MAX;
        let n = self.n;
        let t64 = t as u64;
        let target = self.k as u64 * t64;
        let bounds: Vec<u64> = self.ineqs.iter().map(|&(_, b)| b as u64 * t64).collect();
        // counts never exceed (t + 1)^n, far below u128::MAX at oracle sizes
        let mut layer: HashMap<Vec<u64>, u128> = HashMap::new();
        layer.insert(vec![0; self.ineqs.len() + 1], 1);
        for i in 0..n {
            let rem = (n - i - 1) as u64 * t64;
            let ahead: Vec<u64> = self.ineqs.iter().map(|&(m, _)| popcount(m >> (i + 1)) as u64 * t64).collect();
            let mut next: HashMap<Vec<u64>, u128> = HashMap::new();
            for (state, &cnt) in &layer {
                for v in 0..=t64 {
                    let s = state[0] + v;
                    if s > target {
                        break;
                    }
                    if s + rem < target {
                        continue;
                    }
                    let mut ns = state.clone();
                    ns[0] = s;
                    let mut ok = true;
                    for (j, &(mask, _)) in self.ineqs.iter().enumerate() {
                        let cur = &mut ns[j + 1];
                        if *cur == DONE {
                            continue;
                        }
                        if mask >> i & 1 == 1 {
                            *cur += v;
                            if *cur > bounds[j] {
                                ok = false;
                                break;
                            }
                        }
                        if *cur + ahead[j].min(target - s) <= bounds[j] {
                            *cur = DONE;
                        }
                    }
                    if ok {
                        *next.entry(ns).or_insert(0) += cnt;
                    }
                }
            }
            layer = next;
        }
        BigInt::from(layer.into_values().sum::<u128>())
    }
}

/// Affine dimension of the base polytope: `n` minus the number of components.
pub fn dimension(m: &Matroid) -> usize {
    if m.n() == 0 {
        return 0;
    }
    m.n() - m.components().len()
}

/// Ehrhart polynomial by counting lattice points at `t = 0..=dim` and
/// interpolating.
pub fn ehrhart_oracle(m: &Matroid) -> Result<UniPoly> {
    if m.n() > crate::oracle::max_oracle_n() {
        return Err(MvError::TooLarge(format!("Ehrhart oracle on {} elements", m.n())));
    }
    let p = HPolytope::of_matroid(m)?;
    let d = dimension(m);
    let vals: Vec<Rat> = crate::par::map_range(d + 1, |t| rat_int(p.count_lattice_points(t as u32)));
    Ok(interpolate_from_zero(&vals))
}

/// Normalised volume: the coefficient of `t^(n-1)` of the Ehrhart polynomial,
/// zero for disconnected matroids.
pub fn volume_oracle(m: &Matroid) -> Result<Rat> {
    if m.n() == 0 {
        return Ok(rat(1));
    }
    if dimension(m) + 1 < m.n() {
        return Ok(rat(0));
    }
    Ok(ehrhart_oracle(m)?.coeff(m.n() - 1))
}

/// Pointwise check of `1_{Rel(M,F)} = 1_M + 1_{N1} - 1_{N2}` on the lattice
/// points of `t P(Rel(M,F))` for `t <= t_max`, where `N1` has bases
/// `|B ∩ F| >= rk F` and `N2` has bases `|B ∩ F| = rk F`. Returns the first
/// failing point.
pub fn relaxation_subdivision_check(m: &Matroid, f: u64, t_max: u32) -> Result<std::result::Result<(), (u32, Vec<u32>)>> {
    if !is_stressed(m, f) || cusp_size(m.rank_of(f), m.rank(), popcount(f), m.n()).is_zero() {
        return Err(MvError::NotStressed(f));
    }
    let r = m.rank_of(f);
    let relaxed = relax(m, f)?;
    let pick = |pred: &dyn Fn(u64) -> bool| -> Result<Matroid> {
        Matroid::from_bases_unchecked(m.n(), crate::matroid::k_subsets(m.n(), m.rank()).into_iter().filter(|&b| pred(b)).collect())
    };
    let n1 = pick(&|b| popcount(b & f) >= r)?;
    let n2 = pick(&|b| popcount(b & f) == r)?;
    let polys = [
        HPolytope::of_matroid(&relaxed)?,
        HPolytope::of_matroid(m)?,
        HPolytope::of_matroid(&n1)?,
        HPolytope::of_matroid(&n2)?,
    ];
    for t in 0..=t_max {
        for x in polys[0].lattice_points(t) {
            let ind: Vec<i32> = polys.iter().map(|p| p.contains(&x, t) as i32).collect();
            if ind[0] != ind[1] + ind[2] - ind[3] {
                return Ok(Err((t, x)));
            }
        }
    }
    Ok(Ok(()))
}

/// Checks a lattice-path split at an interior point: the bases of the two
/// pieces cover `M`, they meet in the common facet, and the indicator
/// identity holds on lattice points of `t P(M)` for `t <= t_max`.
pub fn lpm_split_check(l: &LatticePath, u: &LatticePath, x: usize, y: usize, t_max: u32) -> Result<bool> {
    let [(l1, u1), (l2, u2), (l3, u3)] = lpm_split(l, u, x, y)?;
    let m = Matroid::lpm(l, u)?;
    let parts = [Matroid::lpm(&l1, &u1)?, Matroid::lpm(&l2, &u2)?, Matroid::lpm(&l3, &u3)?];
    let mut union: Vec<u64> = parts[0].bases().iter().chain(parts[1].bases()).copied().collect();
    union.sort_unstable();
    union.dedup();
    let inter: Vec<u64> = parts[0].bases().iter().filter(|b| parts[1].is_basis(**b)).copied().collect();
    if union != m.bases() || inter != parts[2].bases() {
        return Ok(false);
    }
    let pm = HPolytope::of_matroid(&m)?;
    let hp: Vec<HPolytope> = parts.iter().map(HPolytope::of_matroid).collect::<Result<_>>()?;
    for t in 0..=t_max {
        for p in pm.lattice_points(t) {
            let ind: Vec<i32> = hp.iter().map(|h| h.contains(&p, t) as i32).collect();
            if ind[0] + ind[1] - ind[2] != 1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
