use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;

use crate::error::{MvError, Result};
use crate::matroid::Matroid;

/// Weights on rank-jump sequences; bit `i` of a key is the jump at step `i+1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GInvariantVector {
    pub n: usize,
    pub weights: BTreeMap<u64, BigInt>,
}

impl GInvariantVector {
    pub fn new(n: usize) -> Self {
        Self { n, weights: BTreeMap::new() }
    }

    pub fn add(&mut self, seq: u64, w: BigInt) {
        let e = self.weights.entry(seq).or_default();
        *e += w;
        if *e == BigInt::from(0) {
            self.weights.remove(&seq);
        }
    }

    pub fn combine(&self, other: &Self, sign: i64) -> Self {
        let mut out = self.clone();
        for (&s, w) in &other.weights {
            out.add(s, w * sign);
        }
        out
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        let mut out = Self::new(self.n);
        for (&k, w) in &self.weights {
            out.add(k, w * s);
        }
        out
    }

    pub fn seq_str(&self, seq: u64) -> String {
        (0..self.n).map(|i| if seq >> i & 1 == 1 { '1' } else { '0' }).collect()
    }

    pub fn parse_seq(s: &str) -> Result<u64> {
        s.chars().enumerate().try_fold(0u64, |m, (i, c)| match c {
            '1' => Ok(m | 1 << i),
            '0' => Ok(m),
            _ => Err(MvError::Parse(format!("bad rank-jump sequence {s:?}"))),
        })
    }
}

impl fmt::Display for GInvariantVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.weights.is_empty() {
            return f.write_str("0");
        }
        let mut keys: Vec<&u64> = self.weights.keys().collect();
        keys.sort_by_key(|&&s| std::cmp::Reverse(self.seq_str(s)));
        let parts: Vec<String> = keys.iter().map(|&&s| format!("{}*U({})", self.weights[&s], self.seq_str(s))).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Sum over all maximal chains of subsets, grouped by rank-jump sequence.
/// A dynamic programme layered by subset size.
pub fn g_invariant_oracle(m: &Matroid) -> Result<GInvariantVector> {
    let cap = super::max_ginv_n();
    if m.n() > cap {
        return Err(MvError::TooLarge(format!("G-invariant oracle capped at n = {cap}, got {}", m.n())));
    }
    let n = m.n();
    let mut layer: HashMap<u64, HashMap<u64, u64>> = HashMap::new();
    layer.insert(0, HashMap::from([(0u64, 1u64)]));
    for size in 0..n {
        let mut next: HashMap<u64, HashMap<u64, u64>> = HashMap::new();
        for (s, seqs) in &layer {
            let rs = m.rank_of(*s);
            for e in 0..n {
                if s >> e & 1 == 1 {
                    continue;
                }
                let t = s | 1u64 << e;
                let jump = (m.rank_of(t) - rs) as u64;
                let slot = next.entry(t).or_default();
                for (&seq, &c) in seqs {
                    *slot.entry(seq | jump << size).or_insert(0) += c;
                }
            }
        }
        layer = next;
    }
    let mut out = GInvariantVector::new(n);
    for seqs in layer.into_values() {
        for (seq, c) in seqs {
            out.add(seq, BigInt::from(c));
        }
    }
    Ok(out)
}

/// Raw enumeration over permutations, for cross-checking small cases.
pub fn g_invariant_brute(m: &Matroid) -> GInvariantVector {
    let n = m.n();
    let mut out = GInvariantVector::new(n);
    let mut perm: Vec<usize> = (0..n).collect();
    fn rec(i: usize, perm: &mut Vec<usize>, m: &Matroid, out: &mut GInvariantVector) {
        if i == perm.len() {
            let (mut s, mut seq, mut r) = (0u64, 0u64, 0usize);
            for (j, &e) in perm.iter().enumerate() {
                s |= 1u64 << e;
                let r2 = m.rank_of(s);
                seq |= ((r2 - r) as u64) << j;
                r = r2;
            }
            out.add(seq, BigInt::from(1));
            return;
        }
        for j in i..perm.len() {
            perm.swap(i, j);
            rec(i + 1, perm, m, out);
            perm.swap(i, j);
        }
    }
    rec(0, &mut perm, m, &mut out);
    out
}
