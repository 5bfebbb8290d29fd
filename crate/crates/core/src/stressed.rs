//! Cusps, stressed subsets, relaxation, cuspidal matroids and the
//! classification of elementary split matroids by their stressed profile.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{MvError, Result};
use crate::exactalg::binom;
use crate::matroid::{elements, expand, full_mask, k_subsets, popcount, Matroid};

/// All `k`-subsets `S` with `|S ∩ A| >= rk(A) + 1`.
pub fn cusp(m: &Matroid, a: u64) -> Vec<u64> {
    let a = a & m.ground();
    let r = m.rank_of(a);
    let (h, k) = (popcount(a), m.rank());
    let rest = m.ground() & !a;
    let mut out = Vec::new();
    for i in r + 1..=k.min(h) {
        let outside = k_subsets(m.n() - h, k - i);
        for s in k_subsets(h, i) {
            let inner = expand(s, a);
            out.extend(outside.iter().map(|&o| inner | expand(o, rest)));
        }
    }
    out.sort_unstable();
    out
}

/// `sum_{i=r+1}^{k} C(h,i) C(n-h,k-i)`.
pub fn cusp_size(r: usize, k: usize, h: usize, n: usize) -> BigInt {
    (r + 1..=k).map(|i| binom(h as i64, i as i64) * binom((n - h) as i64, (k - i) as i64)).sum()
}

/// Both `M|A` and `M/A` are uniform.
pub fn is_stressed(m: &Matroid, a: u64) -> bool {
    let a = a & m.ground();
    m.restrict(a).is_uniform() && m.contract(a).is_uniform()
}

/// Adds the cusp of a stressed subset to the bases.
pub fn relax(m: &Matroid, a: u64) -> Result<Matroid> {
    if !is_stressed(m, a) {
        return Err(MvError::NotStressed(a));
    }
    let mut bases = m.bases().to_vec();
    bases.extend(cusp(m, a));
    Matroid::from_bases_unchecked(m.n(), bases)
}

fn check_cuspidal(r: usize, k: usize, h: usize, n: usize) -> Result<()> {
    if r > h || r > k || h > n || k - r > n - h || n > 64 {
        return Err(MvError::InvalidParameters(format!("cuspidal {r},{k},{h},{n}")));
    }
    Ok(())
}

/// Λ_{r,k,h,n}: bases are the `k`-sets meeting the last `h` elements in at
/// least `r` elements.
pub fn cuspidal(r: usize, k: usize, h: usize, n: usize) -> Result<Matroid> {
    check_cuspidal(r, k, h, n)?;
    let f = full_mask(n) & !full_mask(n - h);
    Matroid::from_bases_unchecked(n, k_subsets(n, k).into_iter().filter(|&b| popcount(b & f) >= r).collect())
}

/// The stressed subset of `cuspidal(r, k, h, n)` with non-empty cusp: the
/// first `n - h` labels, of rank `k - r`. Relaxing it gives `U_{k,n}`.
pub fn cuspidal_flat(h: usize, n: usize) -> u64 {
    full_mask(n - h)
}

/// Minimal matroid T_{k,n} = Λ_{k-1,k,k,n}.
pub fn minimal(k: usize, n: usize) -> Result<Matroid> {
    if k == 0 || k >= n {
        return Err(MvError::InvalidParameters(format!("minimal matroid needs 1 <= k < n, got {k},{n}")));
    }
    cuspidal(k - 1, k, k, n)
}

/// The residue class of `k`-subsets (by label sum mod `n`) with the most
/// members, smallest residue on ties.
pub fn best_residue(k: usize, n: usize) -> usize {
    let mut count = vec![0usize; n];
    for s in k_subsets(n, k) {
        count[elements(s).sum::<usize>() % n] += 1;
    }
    (0..n).max_by_key(|&r| (count[r], std::cmp::Reverse(r))).unwrap_or(0)
}

/// Sparse paving matroid whose circuit-hyperplanes are the `k`-sets with
/// label sum congruent to `residue` mod `n`.
pub fn graham_sloane(k: usize, n: usize, residue: Option<usize>) -> Result<Matroid> {
    if k == 0 || k >= n || n > 64 {
        return Err(MvError::InvalidParameters(format!("graham-sloane needs 1 <= k < n, got {k},{n}")));
    }
    let res = residue.unwrap_or_else(|| best_residue(k, n));
    if res >= n {
        return Err(MvError::InvalidParameters(format!("residue {res} not below {n}")));
    }
    let bases = k_subsets(n, k).into_iter().filter(|&s| elements(s).sum::<usize>() % n != res).collect();
    Matroid::from_bases_unchecked(n, bases)
}

/// λ_{r,h}: number of stressed subsets with non-empty cusp of rank `r` and
/// size `h`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct StressedProfile {
    pub lambda: BTreeMap<(usize, usize), u64>,
}

#[derive(Serialize, Deserialize)]
struct ProfileEntry {
    r: usize,
    h: usize,
    count: u64,
}

#[derive(Serialize, Deserialize)]
struct ProfileJson {
    lambda: Vec<ProfileEntry>,
}

impl StressedProfile {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(r: usize, h: usize, count: u64) -> Self {
        let mut p = Self::new();
        p.add(r, h, count);
        p
    }

    pub fn add(&mut self, r: usize, h: usize, count: u64) {
        if count > 0 {
            *self.lambda.entry((r, h)).or_insert(0) += count;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.lambda.iter().map(|(&(r, h), &c)| (r, h, c))
    }

    pub fn is_empty(&self) -> bool {
        self.lambda.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.lambda.values().sum()
    }

    /// Only hyperplanes: every entry has `r = k - 1`.
    pub fn is_paving(&self, k: usize) -> bool {
        self.lambda.keys().all(|&(r, _)| r + 1 == k)
    }

    pub fn is_sparse_paving(&self, k: usize) -> bool {
        self.lambda.keys().all(|&(r, h)| r + 1 == k && h == k)
    }

    /// Only stressed subsets of size `r + 1` in a corank-2 setting.
    pub fn is_corank2(&self, k: usize, n: usize) -> bool {
        k + 2 == n && self.lambda.keys().all(|&(r, h)| h == r + 1)
    }

    pub fn to_json(&self) -> String {
        let j = ProfileJson { lambda: self.iter().map(|(r, h, count)| ProfileEntry { r, h, count }).collect() };
        serde_json::to_string(&j).expect("serialisable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let j: ProfileJson = serde_json::from_str(s).map_err(|e| MvError::Parse(e.to_string()))?;
        let mut p = Self::new();
        for e in j.lambda {
            p.add(e.r, e.h, e.count);
        }
        Ok(p)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitWitness {
    /// Two comparable proper cyclic flats.
    ComparableCyclicFlats(u64, u64),
    /// Deleting the loops leaves a non-uniform matroid.
    LoopsWithNonUniformRest(u64),
    /// Deleting the coloops leaves a non-uniform matroid.
    ColoopsWithNonUniformRest(u64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitClass {
    Uniform,
    ElementarySplit(StressedProfile),
    NotElementarySplit(SplitWitness),
}

/// The stressed subsets with non-empty cusp, when `M` is elementary split.
pub fn stressed_flats(m: &Matroid) -> Result<std::result::Result<Vec<u64>, SplitWitness>> {
    let (k, g) = (m.rank(), m.ground());
    if m.is_uniform() {
        return Ok(Ok(Vec::new()));
    }
    let loops = m.loops();
    if loops != 0 {
        if !m.delete(loops).is_uniform() {
            return Ok(Err(SplitWitness::LoopsWithNonUniformRest(loops)));
        }
        return Ok(Ok(if k >= 1 { vec![loops] } else { Vec::new() }));
    }
    let coloops = m.coloops();
    if coloops != 0 {
        let rest = g & !coloops;
        if !m.restrict(rest).is_uniform() {
            return Ok(Err(SplitWitness::ColoopsWithNonUniformRest(coloops)));
        }
        let (a, b) = (m.rank_of(rest), popcount(rest));
        return Ok(Ok(if a < b { vec![rest] } else { Vec::new() }));
    }
    let proper: Vec<u64> = m.cyclic_flats()?.into_iter().filter(|&f| f != 0 && f != g).collect();
    for (i, &f1) in proper.iter().enumerate() {
        for &f2 in &proper[i + 1..] {
            if f1 & !f2 == 0 || f2 & !f1 == 0 {
                let (a, b) = if f1 & !f2 == 0 { (f1, f2) } else { (f2, f1) };
                return Ok(Err(SplitWitness::ComparableCyclicFlats(a, b)));
            }
        }
    }
    Ok(Ok(proper))
}

/// Relaxes every stressed subset with non-empty cusp of `M` in turn, checking
/// that each one is still stressed and that the end result is uniform.
pub fn classify_split(m: &Matroid) -> Result<SplitClass> {
    if m.is_uniform() {
        return Ok(SplitClass::Uniform);
    }
    let flats = match stressed_flats(m)? {
        Ok(f) => f,
        Err(w) => return Ok(SplitClass::NotElementarySplit(w)),
    };
    let mut profile = StressedProfile::new();
    let mut cur = m.clone();
    for &f in &flats {
        let r = m.rank_of(f);
        if cusp_size(r, m.rank(), popcount(f), m.n()) == BigInt::from(0) {
            continue;
        }
        cur = relax(&cur, f).map_err(|_| MvError::Unresolvable(format!("flat {f:#b} stopped being stressed during relaxation")))?;
        profile.add(r, popcount(f), 1);
    }
    if !cur.is_uniform() {
        return Err(MvError::Unresolvable("relaxing all stressed flats did not reach a uniform matroid".into()));
    }
    Ok(SplitClass::ElementarySplit(profile))
}

/// Matroid on the same labels whose independent sets are the sets `I` with
/// `|I ∩ F| <= rk(F)` for every listed `(F, rk F)`.
pub fn from_cyclic_flat_bounds(n: usize, k: usize, bounds: &[(u64, usize)]) -> Result<Matroid> {
    let bases = k_subsets(n, k).into_iter().filter(|&s| bounds.iter().all(|&(f, r)| popcount(s & f) <= r)).collect();
    Matroid::from_bases(n, bases)
}

/// Paving means every circuit has at least `k` elements.
pub fn is_paving(m: &Matroid) -> Result<bool> {
    Ok(m.circuits()?.iter().all(|&c| popcount(c) >= m.rank()))
}

pub fn is_sparse_paving(m: &Matroid) -> Result<bool> {
    Ok(is_paving(m)? && is_paving(&m.dual())?)
}

/// Hyperplanes (flats of rank `k - 1`) of size `h >= k`, counted by size.
pub fn hyperplane_sizes(m: &Matroid) -> Result<BTreeMap<usize, u64>> {
    let k = m.rank();
    let mut out = BTreeMap::new();
    if k == 0 {
        return Ok(out);
    }
    for f in m.flats()? {
        if m.rank_of(f) + 1 == k && popcount(f) >= k {
            *out.entry(popcount(f)).or_insert(0) += 1;
        }
    }
    Ok(out)
}

/// `sum_h λ_h C(h,k) <= (h_max - k + 1)/(n - k + 1) C(n,k)` for paving `M`.
pub fn paving_bound_check(m: &Matroid) -> Result<bool> {
    let (k, n) = (m.rank() as i64, m.n() as i64);
    let sizes = hyperplane_sizes(m)?;
    let hmax = sizes.keys().max().copied().unwrap_or(k as usize) as i64;
    let lhs: BigInt = sizes.iter().map(|(&h, &c)| binom(h as i64, k) * c).sum();
    Ok(lhs * (n - k + 1) <= BigInt::from(hmax - k + 1) * binom(n, k))
}

/// `λ <= min(1/(k+1), 1/(n-k+1)) C(n,k)` for sparse paving `M`.
pub fn sparse_bound_check(m: &Matroid) -> Result<bool> {
    let (k, n) = (m.rank() as i64, m.n() as i64);
    let lambda: u64 = hyperplane_sizes(m)?.get(&m.rank()).copied().unwrap_or(0);
    let c = binom(n, k);
    let lam = BigInt::from(lambda);
    Ok(&lam * (k + 1) <= c && lam * (n - k + 1) <= c)
}

/// `sum λ_{r,h} |cusp| <= C(n,k)`.
pub fn lambda_bound_check(p: &StressedProfile, k: usize, n: usize) -> bool {
    let total: BigInt = p
        .iter()
        .map(|(r, h, c)| if h <= n && r <= k { cusp_size(r, k, h, n) * c } else { BigInt::from(u64::MAX) })
        .sum();
    total <= binom(n as i64, k as i64)
}

/// Number of bases predicted by a profile: `C(n,k) - sum λ |cusp|`.
pub fn predicted_basis_count(p: &StressedProfile, k: usize, n: usize) -> Option<u64> {
    let total: BigInt = p.iter().map(|(r, h, c)| cusp_size(r, k, h, n) * c).sum();
    (binom(n as i64, k as i64) - total).to_u64()
}

/// Distinct stressed subsets with non-empty cusp, by brute force over all
/// subsets. Intended for small test inputs.
pub fn stressed_subsets_brute(m: &Matroid) -> Vec<u64> {
    let mut out = HashSet::new();
    for a in 0..=m.ground() {
        if cusp_size(m.rank_of(a), m.rank(), popcount(a), m.n()) > BigInt::from(0) && is_stressed(m, a) {
            out.insert(a);
        }
    }
    let mut v: Vec<u64> = out.into_iter().collect();
    v.sort_unstable();
    v
}
