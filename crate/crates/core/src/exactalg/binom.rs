use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::UniPoly;
use super::rat::Rat;

/// How binomial coefficients behave outside `0 <= b <= a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinomConvention {
    /// Zero whenever `a < b` or `a < 0` (or `b < 0`).
    ZeroOutside,
    /// `a(a-1)...(a-b+1)/b!` for every integer `a` and `b >= 0`; zero for `b < 0`.
    NegUpperExtended,
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Binomial under the given convention.
pub fn binom_conv(a: i64, b: i64, conv: BinomConvention) -> BigInt {
    if b < 0 {
        return BigInt::zero();
    }
    if conv == BinomConvention::ZeroOutside && (a < 0 || a < b) {
        return BigInt::zero();
    }
    if a >= 0 && b > a {
        return BigInt::zero();
    }
    let b = if a >= 0 { b.min(a - b) } else { b };
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..b {
        num *= a - i;
        den *= i + 1;
    }
    num / den
}

/// Binomial with the zero-outside convention.
pub fn binom(a: i64, b: i64) -> BigInt {
    binom_conv(a, b, BinomConvention::ZeroOutside)
}

pub fn binom_i(a: i64, b: i64) -> i64 {
    i64::try_from(binom(a, b)).expect("binomial fits in i64")
}

/// The polynomial `C(a t + b, m) = (a t + b)(a t + b - 1)...(a t + b - m + 1) / m!`.
pub fn poly_binom(a: i64, b: i64, m: usize) -> UniPoly {
    poly_binom_truncated(a, b, m, m)
}

/// `poly_binom` keeping only degrees at most `d`. Runs in `O(m d)` big-integer
/// operations, which keeps `m` in the thousands cheap when `d` is small.
pub fn poly_binom_truncated(a: i64, b: i64, m: usize, d: usize) -> UniPoly {
    let mut c: Vec<BigInt> = vec![BigInt::one()];
    for i in 0..m as i64 {
        let k = c.len();
        let grow = k <= d && a != 0;
        let mut next = vec![BigInt::zero(); if grow { k + 1 } else { k }];
        for (j, v) in c.iter().enumerate() {
            if !v.is_zero() {
                next[j] += v * (b - i);
                if a != 0 && j < d {
                    next[j + 1] += v * a;
                }
            }
        }
        c = next;
    }
    let f = factorial(m as u64);
    UniPoly::new(c.into_iter().map(|v| Rat::new(v, f.clone())).collect())
}
