use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::UniPoly;

fn table() -> &'static Mutex<Vec<Vec<BigInt>>> {
    static T: OnceLock<Mutex<Vec<Vec<BigInt>>>> = OnceLock::new();
    T.get_or_init(|| Mutex::new(vec![vec![BigInt::one()]]))
}

fn row(n: usize) -> Vec<BigInt> {
    let mut t = table().lock().unwrap_or_else(|e| e.into_inner());
    while t.len() <= n {
        let m = t.len();
        let prev = &t[m - 1];
        let mut r = vec![BigInt::zero(); m.max(1)];
        for (k, slot) in r.iter_mut().enumerate() {
            let a = prev.get(k).cloned().unwrap_or_default();
            let b = if k > 0 { prev.get(k - 1).cloned().unwrap_or_default() } else { BigInt::zero() };
            *slot = a * (k as u64 + 1) + b * (m - k) as u64;
        }
        t.push(r);
    }
    t[n].clone()
}

/// Number of permutations of `n` elements with exactly `k` descents.
/// `A(0, 0) = 1`.
pub fn eulerian(n: usize, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    row(n).get(k as usize).cloned().unwrap_or_default()
}

/// `sum_k A(n, k) x^k`.
pub fn eulerian_poly(n: usize) -> UniPoly {
    UniPoly::from_bigints(row(n))
}
