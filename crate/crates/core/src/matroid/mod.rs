//! Matroids on at most 64 elements stored as sorted basis bitmasks.

mod construct;
mod json;
mod lattice;
mod lpm;

use std::collections::HashSet;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use crate::error::{ExchangeViolation, MvError, Result};

pub use json::MatroidJson;
pub use lattice::FlatLattice;
pub use lpm::{lpm_split, LatticePath};

/// Largest ground set for which a full rank table is materialised.
pub const TABLE_MAX_N: usize = 22;

pub fn popcount(m: u64) -> usize {
    m.count_ones() as usize
}

pub fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub fn elements(m: u64) -> impl Iterator<Item = usize> {
    let mut m = m;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

pub fn mask_of(elems: &[usize]) -> u64 {
    elems.iter().fold(0, |m, &e| m | 1u64 << e)
}

/// All `k`-subsets of `n` as masks, in increasing numeric order.
pub fn k_subsets(n: usize, k: usize) -> Vec<u64> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    if k == 0 {
        out.push(0);
        return out;
    }
    let mut s: u64 = (1u64 << k) - 1;
    let lim = full_mask(n);
    while s <= lim {
        out.push(s);
        let c = s & s.wrapping_neg();
        let r = s.wrapping_add(c);
        if r == 0 || r > lim {
            break;
        }
        s = (((r ^ s) >> 2) / c) | r;
    }
    out
}

/// Squeezes the bits of `m` selected by `sel` into the low bits, in order.
pub fn compress(m: u64, sel: u64) -> u64 {
    let mut out = 0;
    for (j, e) in elements(sel).enumerate() {
        if m >> e & 1 == 1 {
            out |= 1 << j;
        }
    }
    out
}

/// Inverse of `compress`.
pub fn expand(m: u64, sel: u64) -> u64 {
    let mut out = 0;
    for (j, e) in elements(sel).enumerate() {
        if m >> j & 1 == 1 {
            out |= 1 << e;
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct Matroid {
    n: usize,
    rank: usize,
    bases: Vec<u64>,
    table: OnceLock<Vec<u8>>,
}

impl PartialEq for Matroid {
    fn eq(&self, o: &Self) -> bool {
        self.n == o.n && self.bases == o.bases
    }
}

impl Eq for Matroid {}

impl Hash for Matroid {
    fn hash<H: Hasher>(&self, h: &mut H) {
        self.n.hash(h);
        self.bases.hash(h);
    }
}

impl Matroid {
    /// Validates the basis family, including the exchange axiom.
    pub fn from_bases(n: usize, bases: Vec<u64>) -> Result<Self> {
        let m = Self::from_bases_unchecked(n, bases)?;
        m.check_exchange().map_err(MvError::NotAMatroid)?;
        Ok(m)
    }

    /// Checks sizes and ranges but trusts the exchange axiom. Used by
    /// constructions that are matroids by design.
    pub fn from_bases_unchecked(n: usize, mut bases: Vec<u64>) -> Result<Self> {
        if n > 64 {
            return Err(MvError::TooLarge(format!("ground set of size {n} exceeds 64")));
        }
        bases.sort_unstable();
        bases.dedup();
        let Some(&b0) = bases.first() else {
            return Err(MvError::InvalidInput("empty basis family".into()));
        };
        let rank = popcount(b0);
        let lim = full_mask(n);
        for &b in &bases {
            if b & !lim != 0 {
                return Err(MvError::InvalidInput(format!("basis {b:#b} uses labels outside 0..{n}")));
            }
            if popcount(b) != rank {
                return Err(MvError::InvalidInput("bases of different sizes".into()));
            }
        }
        Ok(Self { n, rank, bases, table: OnceLock::new() })
    }

    pub fn check_exchange(&self) -> std::result::Result<(), ExchangeViolation> {
        let set: HashSet<u64> = self.bases.iter().copied().collect();
        let bad = crate::par::map(&self.bases, |&b1| {
            for &b2 in &self.bases {
                for e in elements(b1 & !b2) {
                    let base = b1 & !(1u64 << e);
                    if !elements(b2 & !b1).any(|f| set.contains(&(base | 1u64 << f))) {
                        return Some(ExchangeViolation { b1, b2, e });
                    }
                }
            }
            None
        });
        match bad.into_iter().flatten().next() {
            Some(v) => Err(v),
            None => Ok(()),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn bases(&self) -> &[u64] {
        &self.bases
    }

    pub fn ground(&self) -> u64 {
        full_mask(self.n)
    }

    pub fn is_basis(&self, s: u64) -> bool {
        self.bases.binary_search(&s).is_ok()
    }

    fn table(&self) -> Option<&[u8]> {
        if self.n > TABLE_MAX_N {
            return None;
        }
        Some(self.table.get_or_init(|| {
            let size = 1usize << self.n;
            let mut indep = vec![false; size];
            for &b in &self.bases {
                indep[b as usize] = true;
            }
            for s in (0..size).rev() {
                if indep[s] {
                    let mut m = s;
                    while m != 0 {
                        let low = m & m.wrapping_neg();
                        indep[s & !low] = true;
                        m &= m - 1;
                    }
                }
            }
            let mut rk = vec![0u8; size];
            for s in 1..size {
                rk[s] = if indep[s] {
                    s.count_ones() as u8
                } else {
                    let mut best = 0;
                    let mut m = s;
                    while m != 0 {
                        let low = m & m.wrapping_neg();
                        best = best.max(rk[s & !low]);
                        m &= m - 1;
                    }
                    best
                };
            }
            rk
        }))
    }

    /// rk(A) = max |B ∩ A|.
    pub fn rank_of(&self, a: u64) -> usize {
        match self.table() {
            Some(t) => t[(a & self.ground()) as usize] as usize,
            None => self.bases.iter().map(|&b| popcount(b & a)).max().unwrap_or(0),
        }
    }

    pub fn is_independent(&self, a: u64) -> bool {
        self.rank_of(a) == popcount(a)
    }

    /// rk*(A) = rk(E \ A) + |A| - k.
    pub fn dual_rank_of(&self, a: u64) -> usize {
        self.rank_of(self.ground() & !a) + popcount(a) - self.rank
    }

    pub fn dual(&self) -> Matroid {
        let g = self.ground();
        Self::from_bases_unchecked(self.n, self.bases.iter().map(|&b| g & !b).collect()).unwrap()
    }

    /// M|A relabelled onto `0..|A|` preserving order.
    pub fn restrict(&self, a: u64) -> Matroid {
        let a = a & self.ground();
        let r = self.rank_of(a);
        let bases = self.bases.iter().filter(|&&b| popcount(b & a) == r).map(|&b| compress(b & a, a)).collect();
        Self::from_bases_unchecked(popcount(a), bases).unwrap()
    }

    pub fn delete(&self, a: u64) -> Matroid {
        self.restrict(self.ground() & !a)
    }

    /// M/A = (M* | (E \ A))*, on `E \ A` relabelled.
    pub fn contract(&self, a: u64) -> Matroid {
        self.dual().restrict(self.ground() & !a).dual()
    }

    /// Rank `k - j` truncation: bases are the independent sets of that size.
    pub fn truncate(&self, j: usize) -> Result<Matroid> {
        if j > self.rank {
            return Err(MvError::InvalidParameters(format!("cannot truncate rank {} by {j}", self.rank)));
        }
        let target = self.rank - j;
        let mut out = HashSet::new();
        for &b in &self.bases {
            let elems: Vec<usize> = elements(b).collect();
            for sub in k_subsets(elems.len(), target) {
                out.insert(expand(sub, b));
            }
        }
        Self::from_bases_unchecked(self.n, out.into_iter().collect())
    }

    /// Relabels element `i` to `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Matroid> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n || perm.iter().any(|&p| p >= self.n || std::mem::replace(&mut seen[p], true)) {
            return Err(MvError::InvalidInput("not a permutation of the ground set".into()));
        }
        let map = |b: u64| elements(b).fold(0u64, |m, e| m | 1u64 << perm[e]);
        Self::from_bases_unchecked(self.n, self.bases.iter().map(|&b| map(b)).collect())
    }

    pub fn loops(&self) -> u64 {
        let union = self.bases.iter().fold(0, |m, &b| m | b);
        self.ground() & !union
    }

    pub fn coloops(&self) -> u64 {
        self.bases.iter().fold(self.ground(), |m, &b| m & b)
    }

    pub fn is_uniform(&self) -> bool {
        let total = crate::exactalg::binom(self.n as i64, self.rank as i64);
        num_bigint::BigInt::from(self.bases.len()) == total
    }

    /// Connected components via basis exchanges: `e` and `f` share a circuit
    /// exactly when some basis `B` has `B - e + f` a basis too.
    pub fn components(&self) -> Vec<u64> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut x = x;
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let g = self.ground();
        for &b in &self.bases {
            for e in elements(b) {
                for f in elements(g & !b) {
                    if find(&mut parent, e) != find(&mut parent, f) && self.is_basis(b & !(1u64 << e) | 1u64 << f) {
                        let (x, y) = (find(&mut parent, e), find(&mut parent, f));
                        parent[x] = y;
                    }
                }
            }
        }
        let mut comps: Vec<u64> = Vec::new();
        let mut root_of = vec![usize::MAX; self.n];
        for e in 0..self.n {
            let r = find(&mut parent, e);
            if root_of[r] == usize::MAX {
                root_of[r] = comps.len();
                comps.push(0);
            }
            comps[root_of[r]] |= 1u64 << e;
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().len() == 1
    }

    /// Removes loops and keeps the smallest label of each parallel class.
    pub fn simplify(&self) -> Matroid {
        let loops = self.loops();
        let mut keep = 0u64;
        for e in elements(self.ground() & !loops) {
            let parallel_to_kept = elements(keep).any(|f| self.rank_of(1u64 << e | 1u64 << f) == 1);
            if !parallel_to_kept {
                keep |= 1u64 << e;
            }
        }
        self.restrict(keep)
    }

    /// Circuits as masks: minimal dependent sets.
    pub fn circuits(&self) -> Result<Vec<u64>> {
        self.require_table("circuits")?;
        let mut out = Vec::new();
        for s in 1..=self.ground() {
            let c = popcount(s);
            if self.rank_of(s) + 1 == c && elements(s).all(|e| self.rank_of(s & !(1u64 << e)) == c - 1) {
                out.push(s);
            }
        }
        Ok(out)
    }

    pub(crate) fn require_table(&self, what: &str) -> Result<()> {
        if self.n > TABLE_MAX_N {
            return Err(MvError::TooLarge(format!("{what} needs n <= {TABLE_MAX_N}, got {}", self.n)));
        }
        Ok(())
    }

    /// Isomorphism test by backtracking over label maps that respect the
    /// number of bases through each element.
    pub fn is_isomorphic(&self, other: &Matroid) -> bool {
        if self.n != other.n || self.rank != other.rank || self.bases.len() != other.bases.len() {
            return false;
        }
        let deg = |m: &Matroid| -> Vec<usize> {
            (0..m.n).map(|e| m.bases.iter().filter(|&&b| b >> e & 1 == 1).count()).collect()
        };
        let (d1, d2) = (deg(self), deg(other));
        let mut s1 = d1.clone();
        let mut s2 = d2.clone();
        s1.sort_unstable();
        s2.sort_unstable();
        if s1 != s2 {
            return false;
        }
        let target: HashSet<u64> = other.bases.iter().copied().collect();
        let mut perm = vec![usize::MAX; self.n];
        let mut used = vec![false; self.n];
        fn go(e: usize, m: &Matroid, d1: &[usize], d2: &[usize], perm: &mut [usize], used: &mut [bool], target: &HashSet<u64>) -> bool {
            if e == m.n {
                return m.bases.iter().all(|&b| target.contains(&elements(b).fold(0u64, |acc, x| acc | 1u64 << perm[x])));
            }
            for f in 0..m.n {
                if !used[f] && d1[e] == d2[f] {
                    used[f] = true;
                    perm[e] = f;
                    if go(e + 1, m, d1, d2, perm, used, target) {
                        return true;
                    }
                    used[f] = false;
                }
            }
            false
        }
        go(0, self, &d1, &d2, &mut perm, &mut used, &target)
    }
}
