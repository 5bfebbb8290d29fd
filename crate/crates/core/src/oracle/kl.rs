use super::guard;
use crate::error::{MvError, Result};
use crate::exactalg::{rat, UniPoly};
use crate::matroid::{FlatLattice, Matroid};

type IPoly = Vec<i128>;

fn mul_add(acc: &mut IPoly, a: &[i128], b: &[i128]) -> Result<()> {
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if acc.len() <= i + j {
                acc.resize(i + j + 1, 0);
            }
            let p = x.checked_mul(*y).ok_or(MvError::Overflow("Kazhdan-Lusztig oracle"))?;
            acc[i + j] = acc[i + j].checked_add(p).ok_or(MvError::Overflow("Kazhdan-Lusztig oracle"))?;
        }
    }
    Ok(())
}

fn to_poly(p: &[i128]) -> UniPoly {
    UniPoly::new(p.iter().map(|&v| rat(i64::try_from(v).expect("coefficient fits i64"))).collect())
}

/// Kazhdan-Lusztig data of every interval of the lattice of flats:
/// `p[F]` is `P` of `[F, E]` and `q[G]` is `Q` of `[bottom, G]`.
pub struct KlData {
    pub lattice: FlatLattice,
    pub p: Vec<UniPoly>,
    pub q: Vec<UniPoly>,
}

/// `chi[F][G]` for `F <= G`: `sum_{F <= H <= G} μ(F,H) t^{rk G - rk H}`.
fn interval_chars(lat: &FlatLattice) -> Vec<Vec<IPoly>> {
    let len = lat.len();
    crate::par::map_range(len, |f| {
        let mu = lat.mobius_row(f);
        let mut row: Vec<IPoly> = vec![Vec::new(); len];
        for g in f..len {
            if !lat.leq(f, g) {
                continue;
            }
            let d = lat.rank[g] - lat.rank[f];
            let mut c = vec![0i128; d + 1];
            for h in f..=g {
                if mu[h] != 0 && lat.leq(h, g) {
                    c[lat.rank[g] - lat.rank[h]] += mu[h] as i128;
                }
            }
            row[g] = c;
        }
        row
    })
}

fn solve_half(d: usize, rhs: &[i128], sign: i128) -> Result<IPoly> {
    // t^d X(1/t) - X(t) = sign * rhs with deg X < d/2.
    let r = |i: usize| sign * rhs.get(i).copied().unwrap_or(0);
    let mut x = Vec::new();
    for i in 0..d.div_ceil(2) {
        x.push(-r(i));
    }
    let at = |j: usize| x.get(j).copied().unwrap_or(0);
    if (0..=d).any(|i| at(d - i) - at(i) != r(i)) {
        return Err(MvError::Unresolvable("Kazhdan-Lusztig recursion inconsistent".into()));
    }
    if rhs.len() > d + 1 && rhs[d + 1..].iter().any(|&v| v != 0) {
        return Err(MvError::Unresolvable("Kazhdan-Lusztig recursion inconsistent".into()));
    }
    while x.last() == Some(&0) {
        x.pop();
    }
    Ok(x)
}

fn kl_data(m: &Matroid) -> Result<KlData> {
    guard(m, "Kazhdan-Lusztig")?;
    let lat = m.lattice()?;
    let len = lat.len();
    let chi = interval_chars(&lat);
    let mut p: Vec<IPoly> = vec![Vec::new(); len];
    for f in (0..len).rev() {
        let d = lat.rank[lat.top()] - lat.rank[f];
        if d == 0 {
            p[f] = vec![1];
            continue;
        }
        let mut rhs = Vec::new();
        for g in f + 1..len {
            if lat.leq(f, g) {
                mul_add(&mut rhs, &chi[f][g], &p[g])?;
            }
        }
        p[f] = solve_half(d, &rhs, 1)?;
        if p[f].is_empty() {
            p[f] = vec![0];
        }
    }
    let mut q: Vec<IPoly> = vec![Vec::new(); len];
    for g in 0..len {
        let d = lat.rank[g] - lat.rank[0];
        if d == 0 {
            q[g] = vec![1];
            continue;
        }
        let mut rhs = Vec::new();
        for f in 0..g {
            if !lat.leq(f, g) {
                continue;
            }
            let e = lat.rank[g] - lat.rank[f];
            let mut rev = vec![0i128; e + 1];
            for (i, &c) in chi[f][g].iter().enumerate() {
                rev[e - i] = c;
            }
            let sign = if (lat.rank[f] - lat.rank[0]) % 2 == 0 { 1 } else { -1 };
            let signed: IPoly = q[f].iter().map(|&v| v * sign).collect();
            mul_add(&mut rhs, &signed, &rev)?;
        }
        q[g] = solve_half(d, &rhs, if d % 2 == 0 { 1 } else { -1 })?;
    }
    Ok(KlData { p: p.iter().map(|v| to_poly(v)).collect(), q: q.iter().map(|v| to_poly(v)).collect(), lattice: lat })
}

/// Kazhdan-Lusztig polynomial; zero for matroids with loops.
pub fn kl_oracle(m: &Matroid) -> Result<UniPoly> {
    if m.loops() != 0 {
        return Ok(UniPoly::zero());
    }
    Ok(kl_data(m)?.p[0].clone())
}

/// Inverse Kazhdan-Lusztig polynomial; zero for matroids with loops.
pub fn klq_oracle(m: &Matroid) -> Result<UniPoly> {
    if m.loops() != 0 {
        return Ok(UniPoly::zero());
    }
    let d = kl_data(m)?;
    Ok(d.q[d.lattice.top()].clone())
}

/// `Z = sum_F t^{rk F} P_{M/F}` over all flats.
pub fn klz_oracle(m: &Matroid) -> Result<UniPoly> {
    let d = kl_data(m)?;
    let mut z = UniPoly::zero();
    for (f, pf) in d.p.iter().enumerate() {
        z += &(&UniPoly::monomial(d.lattice.rank[f], rat(1)) * pf);
    }
    Ok(z)
}

/// γ with `Z(t) = γ(t/(1+t)^2) (1+t)^k`. Errors when `Z` is not palindromic of
/// degree `k`.
pub fn gamma_extract(z: &UniPoly, k: usize) -> Result<UniPoly> {
    let mut rest = z.clone();
    let mut g = Vec::new();
    let one_t = UniPoly::from_ints([1, 1]);
    for j in 0..=k / 2 {
        let c = rest.coeff(j);
        rest -= &(&UniPoly::monomial(j, c.clone()) * &one_t.pow(k - 2 * j));
        g.push(c);
    }
    if !rest.is_zero() {
        return Err(MvError::InvalidInput("polynomial is not palindromic of the given degree".into()));
    }
    Ok(UniPoly::new(g))
}
