use super::{full_mask, k_subsets, popcount, Matroid};
use crate::error::{MvError, Result};

impl Matroid {
    pub fn uniform(k: usize, n: usize) -> Result<Matroid> {
        if k > n || n > 64 {
            return Err(MvError::InvalidParameters(format!("uniform {k},{n}")));
        }
        Self::from_bases_unchecked(n, k_subsets(n, k))
    }

    /// Direct sum; the labels of later summands are shifted past earlier ones.
    pub fn direct_sum(parts: &[Matroid]) -> Result<Matroid> {
        let n: usize = parts.iter().map(|m| m.n()).sum();
        if n > 64 {
            return Err(MvError::TooLarge(format!("direct sum on {n} elements")));
        }
        let mut bases = vec![0u64];
        let mut off = 0;
        for m in parts {
            let mut next = Vec::with_capacity(bases.len() * m.bases().len());
            for &b in &bases {
                for &c in m.bases() {
                    next.push(b | c << off);
                }
            }
            bases = next;
            off += m.n();
        }
        Self::from_bases_unchecked(n, bases)
    }

    /// Rank-`k` matroid whose bases are the `k`-sets containing none of the
    /// given circuits. The family is validated as a matroid.
    pub fn from_circuits(n: usize, k: usize, circuits: &[u64]) -> Result<Matroid> {
        let bases: Vec<u64> = k_subsets(n, k).into_iter().filter(|&s| circuits.iter().all(|&c| s & c != c)).collect();
        Self::from_bases(n, bases)
    }

    /// The rank `n - 2` matroid on `n = a + b - 1` elements with circuits
    /// `{0..a-1}`, `{a-1..n-1}` and `E - {a-1}`.
    pub fn cab(a: usize, b: usize) -> Result<Matroid> {
        if a < 2 || b < 2 {
            return Err(MvError::InvalidParameters(format!("C_{{a,b}} needs a,b >= 2, got {a},{b}")));
        }
        let n = a + b - 1;
        let g = full_mask(n);
        let left = full_mask(a);
        let right = g & !full_mask(a - 1);
        let rest = g & !(1u64 << (a - 1));
        let m = Self::from_circuits(n, n - 2, &[left, right, rest])?;
        debug_assert!(m.bases().iter().all(|&b| popcount(b) == n - 2));
        Ok(m)
    }
}
