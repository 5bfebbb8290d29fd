use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{check_cusp_params, check_profile, check_uniform, cusp_shape, CuspShape};
use crate::error::{MvError, Result};
use crate::exactalg::{binom, eulerian, factorial, Rat};
use crate::stressed::StressedProfile;

fn over_factorial(count: BigInt, n: usize) -> Rat {
    Rat::new(count, factorial(n.saturating_sub(1) as u64))
}

/// `A_{n-1,k-1} / (n-1)!`, with the one-element and empty cases set to 1.
pub fn vol_uniform(k: usize, n: usize) -> Result<Rat> {
    check_uniform(k, n)?;
    if n <= 1 {
        return Ok(Rat::one());
    }
    Ok(over_factorial(eulerian(n - 1, k as i64 - 1), n))
}

/// Permutations of `n-1` letters with `k-1` descents whose first `n-h`
/// letters carry fewer than `k-r` descents.
///
/// DP over prefixes: state is the relative rank of the last letter among the
/// letters placed so far, together with the descent count.
pub fn cuspidal_descent_count(r: usize, k: usize, h: usize, n: usize) -> Result<BigInt> {
    check_cusp_params(r, k, h, n)?;
    if k == 0 {
        return Ok(BigInt::zero());
    }
    let m = n - 1;
    let p = n - h;
    let maxd = k - 1;
    let cut = |dp: &mut Vec<Vec<BigInt>>| {
        for row in dp.iter_mut() {
            for v in row.iter_mut().skip(k - r) {
                *v = BigInt::zero();
            }
        }
    };
    if m == 0 {
        return Ok(BigInt::from(u8::from(k == 1 && r == 0)));
    }
    if p == 0 && r == k {
        return Ok(BigInt::zero());
    }
    // dp[j][d]: j is the 0-based relative rank of the last letter
    let mut dp = vec![vec![BigInt::zero(); maxd + 1]];
    dp[0][0] = BigInt::one();
    if p == 1 {
        cut(&mut dp);
    }
    for i in 1..m {
        let mut next = vec![vec![BigInt::zero(); maxd + 1]; i + 1];
        for d in 0..=maxd {
            let total: BigInt = dp.iter().map(|row| &row[d]).sum();
            let mut below = BigInt::zero();
            for jn in 0..=i {
                // the previous letter is below the new one iff its rank is < jn
                if !below.is_zero() {
                    next[jn][d] += &below;
                }
                if d < maxd {
                    next[jn][d + 1] += &total - &below;
                }
                if jn < i {
                    below += &dp[jn][d];
                }
            }
        }
        dp = next;
        if i + 1 == p {
            cut(&mut dp);
        }
    }
    Ok(dp.iter().map(|row| row[maxd].clone()).sum())
}

/// Same count by enumerating permutations; only for small `n`.
pub fn cuspidal_descent_count_brute(r: usize, k: usize, h: usize, n: usize) -> Result<BigInt> {
    check_cusp_params(r, k, h, n)?;
    if n > 11 {
        return Err(MvError::TooLarge(format!("permutation enumeration capped at n = 11, got {n}")));
    }
    if k == 0 {
        return Ok(BigInt::zero());
    }
    let m = n - 1;
    let p = n - h;
    let mut perm: Vec<usize> = (0..m).collect();
    let mut count = 0u64;
    let descents = |s: &[usize]| s.windows(2).filter(|w| w[0] > w[1]).count();
    loop {
        if descents(&perm) == k - 1 && descents(&perm[..p.min(m)]) < k - r {
            count += 1;
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(BigInt::from(count))
}

fn next_permutation(a: &mut [usize]) -> bool {
    let n = a.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

pub fn vol_cuspidal(r: usize, k: usize, h: usize, n: usize) -> Result<Rat> {
    match cusp_shape(r, k, h, n)? {
        CuspShape::Uniform => vol_uniform(k, n),
        // a direct sum with both summands non-empty is not full-dimensional
        CuspShape::Sum if h == 0 => vol_uniform(k - r, n),
        CuspShape::Sum if h == n => vol_uniform(r, h),
        CuspShape::Sum => Ok(Rat::zero()),
        CuspShape::Proper => Ok(over_factorial(cuspidal_descent_count(r, k, h, n)?, n)),
    }
}

/// `C(n-2, k-1) / (n-1)!`.
pub fn vol_minimal(k: usize, n: usize) -> Result<Rat> {
    if k == 0 || k >= n {
        return Err(MvError::InvalidParameters(format!("minimal matroid needs 1 <= k < n, got {k},{n}")));
    }
    Ok(over_factorial(binom(n as i64 - 2, k as i64 - 1), n))
}

/// Loopless rank-2 matroids. Parallel classes of size one are not part of a
/// stressed profile, so they are recovered from `n - Σ h λ_h`.
pub fn vol_rank2(p: &StressedProfile, n: usize) -> Result<Rat> {
    check_profile(p, 2, n)?;
    if p.iter().any(|(r, _, _)| r != 1) {
        return Err(MvError::InvalidParameters("rank-2 volume formula needs a loopless profile".into()));
    }
    let covered: usize = p.iter().map(|(_, h, c)| h * c as usize).sum();
    if covered > n {
        return Err(MvError::InvalidParameters(format!("parallel classes cover {covered} > {n} elements")));
    }
    if n < 2 {
        return Err(MvError::InvalidParameters("rank 2 needs n >= 2".into()));
    }
    let singles = (n - covered) as u64;
    let tail = |h: usize| -> BigInt { (n - h..n).map(|i| binom(n as i64 - 1, i as i64)).sum() };
    let mut total = BigInt::one() << (n - 1);
    for (_, h, c) in p.iter() {
        total -= tail(h) * c;
    }
    total -= tail(1) * singles;
    Ok(over_factorial(total, n))
}

/// `(A_{n-1,k-1} - Σ λ_{r,h} · count(Λ_{r,k,h,n})) / (n-1)!`.
pub fn vol_split(p: &StressedProfile, k: usize, n: usize) -> Result<Rat> {
    check_profile(p, k, n)?;
    if n <= 1 {
        return vol_uniform(k, n);
    }
    let mut total = eulerian(n - 1, k as i64 - 1);
    for (r, h, c) in p.iter() {
        total -= cuspidal_descent_count(r, k, h, n)? * c;
    }
    Ok(over_factorial(total, n))
}

pub fn vol_sparse_paving(k: usize, n: usize, lambda: u64) -> Result<Rat> {
    if k == 0 || k >= n {
        return Err(MvError::InvalidParameters(format!("sparse paving formula needs 1 <= k < n, got {k},{n}")));
    }
    let total = eulerian(n - 1, k as i64 - 1) - binom(n as i64 - 2, k as i64 - 1) * lambda;
    Ok(over_factorial(total, n))
}
