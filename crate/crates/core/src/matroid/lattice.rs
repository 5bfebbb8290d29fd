use std::collections::HashMap;

use super::{elements, popcount, Matroid};
use crate::error::Result;

impl Matroid {
    pub fn closure(&self, a: u64) -> u64 {
        let r = self.rank_of(a);
        let mut out = a;
        for e in elements(self.ground() & !a) {
            if self.rank_of(a | 1u64 << e) == r {
                out |= 1u64 << e;
            }
        }
        out
    }

    pub fn is_flat(&self, a: u64) -> bool {
        self.closure(a) == a
    }

    /// A flat whose restriction has no coloops.
    pub fn is_cyclic_flat(&self, a: u64) -> bool {
        let r = self.rank_of(a);
        self.is_flat(a) && elements(a).all(|e| self.rank_of(a & !(1u64 << e)) == r)
    }

    /// All flats, sorted by rank then mask.
    pub fn flats(&self) -> Result<Vec<u64>> {
        self.require_table("flats")?;
        let mut out: Vec<u64> = crate::par::fold_range(
            (self.ground() as usize) + 1,
            1 << 12,
            Vec::new,
            |acc, s| {
                if self.is_flat(s as u64) {
                    acc.push(s as u64);
                }
            },
            |mut a, b| {
                a.extend(b);
                a
            },
        );
        out.sort_by_key(|&f| (self.rank_of(f), f));
        Ok(out)
    }

    pub fn cyclic_flats(&self) -> Result<Vec<u64>> {
        Ok(self.flats()?.into_iter().filter(|&f| self.is_cyclic_flat(f)).collect())
    }

    pub fn lattice(&self) -> Result<FlatLattice> {
        let flats = self.flats()?;
        let rank = flats.iter().map(|&f| self.rank_of(f)).collect();
        Ok(FlatLattice::new(flats, rank))
    }
}

/// Lattice of flats with ranks and Möbius values, flats indexed in rank order.
#[derive(Clone, Debug)]
pub struct FlatLattice {
    pub flats: Vec<u64>,
    pub rank: Vec<usize>,
    index: HashMap<u64, usize>,
}

impl FlatLattice {
    pub fn new(flats: Vec<u64>, rank: Vec<usize>) -> Self {
        let index = flats.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        Self { flats, rank, index }
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn index_of(&self, f: u64) -> Option<usize> {
        self.index.get(&f).copied()
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.flats.len() - 1
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.flats[i] & !self.flats[j] == 0
    }

    /// Indices of flats above `i` (inclusive), in rank order.
    pub fn above(&self, i: usize) -> Vec<usize> {
        (i..self.len()).filter(|&j| self.leq(i, j)).collect()
    }

    /// μ(F_i, F_j) for every j, zero when incomparable.
    pub fn mobius_row(&self, i: usize) -> Vec<i64> {
        let mut mu = vec![0i64; self.len()];
        let up = self.above(i);
        mu[i] = 1;
        for (pos, &j) in up.iter().enumerate().skip(1) {
            let mut s = 0i64;
            for &z in &up[..pos] {
                if self.leq(z, j) {
                    s += mu[z];
                }
            }
            mu[j] = -s;
        }
        mu
    }

    /// Full Möbius matrix, rows computed in parallel.
    pub fn mobius(&self) -> Vec<Vec<i64>> {
        crate::par::map_range(self.len(), |i| self.mobius_row(i))
    }

    pub fn size(&self, i: usize) -> usize {
        popcount(self.flats[i])
    }
}
