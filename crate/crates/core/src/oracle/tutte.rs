use num_bigint::BigInt;

use super::guard;
use crate::error::Result;
use crate::exactalg::{binom, rat_int, BiPoly, UniPoly};
use crate::matroid::Matroid;

/// `counts[r][s]`: subsets of size `s` and rank `r`.
fn rank_size_counts(m: &Matroid) -> Vec<Vec<u64>> {
    let (n, k) = (m.n(), m.rank());
    let total = 1usize << n;
    crate::par::fold_range(
        total,
        1 << 12,
        || vec![vec![0u64; n + 1]; k + 1],
        |acc, a| {
            let r = m.rank_of(a as u64);
            acc[r][(a as u64).count_ones() as usize] += 1;
        },
        |mut a, b| {
            for (ra, rb) in a.iter_mut().zip(b) {
                for (x, y) in ra.iter_mut().zip(rb) {
                    *x += y;
                }
            }
            a
        },
    )
}

/// `sum_A (x-1)^{k - rk A} (y-1)^{|A| - rk A}`.
pub fn tutte_oracle(m: &Matroid) -> Result<BiPoly> {
    guard(m, "Tutte")?;
    let k = m.rank();
    let counts = rank_size_counts(m);
    let mut out = BiPoly::zero();
    for (r, row) in counts.iter().enumerate() {
        for (s, &c) in row.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let (a, b) = (k - r, s - r);
            for i in 0..=a {
                for j in 0..=b {
                    let sign = if (a - i + b - j) % 2 == 0 { 1 } else { -1 };
                    let coef = binom(a as i64, i as i64) * binom(b as i64, j as i64) * BigInt::from(c) * sign;
                    out.add_term(i as u32, j as u32, rat_int(coef));
                }
            }
        }
    }
    Ok(out)
}

/// `sum_A (-1)^{|A|} t^{k - rk A}`.
pub fn char_oracle(m: &Matroid) -> Result<UniPoly> {
    guard(m, "characteristic polynomial")?;
    let k = m.rank();
    let mut c = vec![BigInt::from(0); k + 1];
    for (r, row) in rank_size_counts(m).iter().enumerate() {
        for (s, &v) in row.iter().enumerate() {
            let v = BigInt::from(v);
            if s % 2 == 0 {
                c[k - r] += v;
            } else {
                c[k - r] -= v;
            }
        }
    }
    Ok(UniPoly::from_bigints(c))
}

/// `(-1)^k sum_A (-1)^{|A|} rk A`.
pub fn beta_oracle(m: &Matroid) -> Result<BigInt> {
    guard(m, "beta")?;
    let mut acc = BigInt::from(0);
    for (r, row) in rank_size_counts(m).iter().enumerate() {
        for (s, &v) in row.iter().enumerate() {
            let term = BigInt::from(v) * r;
            if s % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
    }
    Ok(if m.rank() % 2 == 0 { acc } else { -acc })
}
