//! One PASS/FAIL line per acceptance criterion. Exits non-zero if any fails.

use std::collections::HashMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use matval::closedform::*;
use matval::exactalg::{binom, eulerian, eulerian_poly, factorial, rat, rat_int, BiPoly, UniPoly};
use matval::master::*;
use matval::matroid::{full_mask, k_subsets, popcount, LatticePath, Matroid};
use matval::oracle::*;
use matval::polytope::{ehrhart_oracle, relaxation_subdivision_check, volume_oracle, HPolytope};
use matval::stressed::*;
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const G_INVARIANT_BUDGET: Duration = Duration::from_secs(1);
const NEGATIVE_EHRHART_BUDGET: Duration = Duration::from_secs(10);
const KL_BUDGET: Duration = Duration::from_secs(300);

type Check = fn() -> Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn cusp_params(n: usize) -> Vec<(usize, usize, usize, usize)> {
    let mut v = Vec::new();
    for k in 0..=n {
        for h in 0..=n {
            for r in 0..=h.min(k) {
                if k - r <= n - h {
                    v.push((r, k, h, n));
                }
            }
        }
    }
    v
}

/// Elementary split matroid built by relaxation-style bounds on random
/// pairwise incomparable subsets.
fn random_split(rng: &mut ChaCha8Rng, n: usize) -> Option<Matroid> {
    let k = rng.gen_range(2..n - 1);
    let mut bounds: Vec<(u64, usize)> = Vec::new();
    for _ in 0..rng.gen_range(1..4) {
        let mask = rng.gen::<u64>() & full_mask(n);
        let h = popcount(mask);
        if h < 2 || h >= n {
            continue;
        }
        let r = rng.gen_range(1..h.min(k + 1));
        if bounds.iter().any(|&(f, _)| f & !mask == 0 || mask & !f == 0) {
            continue;
        }
        bounds.push((mask, r));
    }
    let m = from_cyclic_flat_bounds(n, k, &bounds).ok()?;
    matches!(classify_split(&m).ok()?, SplitClass::ElementarySplit(_)).then_some(m)
}

fn random_splits(seed: u64, count: usize, max_n: usize) -> Vec<Matroid> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let n = rng.gen_range(5..=max_n);
        if let Some(m) = random_split(&mut rng, n) {
            out.push(m);
        }
    }
    out
}

fn profile_of(m: &Matroid) -> Result<StressedProfile, String> {
    match ok(classify_split(m))? {
        SplitClass::Uniform => Ok(StressedProfile::new()),
        SplitClass::ElementarySplit(p) => Ok(p),
        SplitClass::NotElementarySplit(w) => Err(format!("not elementary split: {w:?}")),
    }
}

/// Rank-3 simple-point configuration: `point[e]` is the point of element `e`
/// and a 3-set is a basis iff its points are distinct and not on a line.
fn rank3_from_lines(point: &[usize], lines: &[&[usize]]) -> Matroid {
    let n = point.len();
    let bases = k_subsets(n, 3)
        .into_iter()
        .filter(|&b| {
            let mut pts: Vec<usize> = (0..n).filter(|&e| b >> e & 1 == 1).map(|e| point[e]).collect();
            pts.dedup();
            pts.sort_unstable();
            pts.dedup();
            pts.len() == 3 && !lines.iter().any(|l| pts.iter().all(|p| l.contains(p)))
        })
        .collect();
    Matroid::from_bases(n, bases).unwrap()
}

/// Triangle with vertices 2, 4, 3, edge midpoints 6, 5 and a triple point
/// {1, 8, 9}, and centroid 7 (1-based labels).
fn twin_nonsplit() -> Matroid {
    // points: A=2 B=4 C=3 D=6 E=5 P={1,8,9} G=7
    let (a, b, c, d, e, p, g) = (0, 1, 2, 3, 4, 5, 6);
    let point = [p, a, c, b, e, d, g, p, p];
    rank3_from_lines(&point, &[&[a, d, b], &[b, e, c], &[a, p, c], &[a, g, e], &[d, g, c], &[b, g, p]])
}

/// Five points on a line, a free point, and a triple point.
fn twin_split() -> Matroid {
    let point = [0, 1, 2, 3, 4, 5, 6, 6, 6];
    rank3_from_lines(&point, &[&[0, 1, 2, 3, 4]])
}

fn c1_g_invariant() -> Result<String, String> {
    let start = Instant::now();
    let u = Matroid::uniform(2, 4).unwrap();
    // 0-based: M1 drops {2,3}, M2 drops {0,1}, M3 drops both
    let drop = |m: &[u64]| Matroid::from_bases(4, u.bases().iter().copied().filter(|b| !m.contains(b)).collect()).unwrap();
    let (m1, m2, m3) = (drop(&[0b1100]), drop(&[0b0011]), drop(&[0b1100, 0b0011]));
    let g = |m: &Matroid| ok(g_invariant_oracle(m));
    let (gu, g1, g2, g3) = (g(&u)?, g(&m1)?, g(&m2)?, g(&m3)?);
    let w = |v: &GInvariantVector, s: &str| v.weights.get(&GInvariantVector::parse_seq(s).unwrap()).cloned().unwrap_or_default();
    let shape = |v: &GInvariantVector| (w(v, "1100"), w(v, "1010"), v.weights.values().filter(|c| !c.is_zero()).count());
    let big = |a: i64, b: i64, c: usize| (BigInt::from(a), BigInt::from(b), c);
    ensure!(shape(&gu) == big(24, 0, 1), "G(U_2,4) = {gu}");
    ensure!(shape(&g1) == big(20, 4, 2), "G(M1) = {g1}");
    ensure!(shape(&g2) == big(20, 4, 2), "G(M2) = {g2}");
    ensure!(shape(&g3) == big(16, 8, 2), "G(M3) = {g3}");
    ensure!(g1.combine(&g2, 1).combine(&g3, -1) == gu, "G(M1) + G(M2) - G(M3) != G(U_2,4)");
    let auto = ok(eval_auto(&EvalRequest { id: InvariantId::GInvariant, source: Source::Explicit(m1.clone()) }))?;
    ensure!(auto.value == Value::GInv(g1.clone()), "profile route G(M1) = {:?}", auto.value);
    let el = start.elapsed();
    ensure!(el < G_INVARIANT_BUDGET, "took {el:?}");
    Ok(format!("G(U_2,4) = {gu}; G(M1) = {g1}; G(M3) = {g3}; {el:.2?}"))
}

fn c2_volume() -> Result<String, String> {
    let mut checked = 0;
    for n in 1..=9usize {
        let f = rat_int(factorial(n as u64 - 1));
        for k in 1..=n {
            let v = ok(vol_uniform(k, n))?;
            ensure!(&v * &f == rat_int(eulerian(n - 1, k as i64 - 1)), "vol(U_{k},{n}) = {v}");
            let e = ok(ehr_uniform(k, n))?;
            ensure!(e.coeff(n - 1) == v, "Ehrhart leading coefficient of U_{k},{n} is {}", e.coeff(n - 1));
            checked += 1;
        }
        for k in 1..n {
            let v = ok(vol_minimal(k, n))?;
            ensure!(&v * &f == rat_int(binom(n as i64 - 2, k as i64 - 1)), "vol(T_{k},{n}) = {v}");
            ensure!(ok(ehr_minimal(k, n))?.coeff(n - 1) == v, "Ehrhart leading coefficient of T_{k},{n}");
            if n <= 7 {
                ensure!(ok(volume_oracle(&minimal(k, n).unwrap()))? == v, "polytope volume of T_{k},{n}");
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} uniform and minimal volumes, n <= 9"))
}

fn c3_ehrhart() -> Result<String, String> {
    let mut cusp = 0;
    for n in 1..=8 {
        for (r, k, h, n) in cusp_params(n) {
            let m = cuspidal(r, k, h, n).unwrap();
            let p = ok(HPolytope::of_matroid(&m))?;
            let closed = ok(ehr_cuspidal(r, k, h, n))?;
            let proper = ok(cusp_shape(r, k, h, n))? == CuspShape::Proper;
            for t in 0..=n as u32 {
                let count = p.count_lattice_points(t);
                if proper {
                    ensure!(ok(ehr_cuspidal_at(r, k, h, n, t as u64))? == count, "Λ_{r},{k},{h},{n} at t={t}");
                }
                ensure!(closed.eval_i(t as i64) == rat_int(count), "interpolated Λ_{r},{k},{h},{n} at t={t}");
            }
            cusp += 1;
        }
    }
    let mut gs = 0;
    for n in 4..=9 {
        for k in 2..n - 1 {
            let m = graham_sloane(k, n, None).unwrap();
            let lambda = profile_of(&m)?.total();
            let formula = ok(ehr_sparse_paving(k, n, lambda))?;
            let shifted = ok(ehr_minimal(k, n))?.compose(&UniPoly::from_ints([-1, 1]));
            ensure!(formula == &ok(ehr_uniform(k, n))? - &shifted.scale(&rat(lambda as i64)), "symbolic identity at {k},{n}");
            ensure!(formula == ok(ehrhart_oracle(&m))?, "Graham-Sloane {k},{n} with λ={lambda}");
            gs += 1;
        }
    }
    Ok(format!("{cusp} cuspidal matroids at t = 0..n, {gs} Graham-Sloane instances"))
}

fn c4_negative_coefficient() -> Result<String, String> {
    let start = Instant::now();
    let (k, n) = (3usize, 3589usize);
    let lambda = (binom(n as i64, k as i64) / BigInt::from(n)).to_u64().unwrap();
    let low = ok(ehr_sparse_paving_low_coeffs(k, n, lambda, 2))?;
    let c2 = low.coeff(2);
    let el = start.elapsed();
    ensure!(c2.is_negative(), "[t^2] = {c2}");
    ensure!(el < NEGATIVE_EHRHART_BUDGET, "took {el:?}");
    // the truncated expansion agrees with the full one at small sizes
    for (k, n, l) in [(3, 9, 4), (3, 11, 7), (4, 10, 6)] {
        ensure!(ok(ehr_sparse_paving_low_coeffs(k, n, l, 2))? == ok(ehr_sparse_paving(k, n, l))?.truncate(2), "truncation at {k},{n}");
    }
    let approx = c2.to_f64().unwrap_or(f64::NAN);
    Ok(format!("λ = {lambda}, [t^2] ≈ {approx:.4e} < 0; {el:.2?}"))
}

fn c5_tutte() -> Result<String, String> {
    let mut count = 0;
    for n in 1..=8 {
        for (r, k, h, n) in cusp_params(n) {
            let m = cuspidal(r, k, h, n).unwrap();
            let t = ok(tutte_oracle(&m))?;
            ensure!(ok(tutte_cuspidal(r, k, h, n))? == t, "Λ_{r},{k},{h},{n}");
            ensure!(ok(char_cuspidal(r, k, h, n))? == ok(char_oracle(&m))?, "χ of Λ_{r},{k},{h},{n}");
            ensure!(ok(beta_cuspidal(r, k, h, n))? == ok(beta_oracle(&m))?, "β of Λ_{r},{k},{h},{n}");
            count += 1;
        }
        for k in 0..=n {
            ensure!(ok(tutte_uniform(k, n))? == ok(tutte_oracle(&Matroid::uniform(k, n).unwrap()))?, "U_{k},{n}");
            count += 1;
        }
    }
    for m in random_splits(5, 100, 8) {
        let (k, n) = (m.rank(), m.n());
        let p = profile_of(&m)?;
        ensure!(ok(tutte_split(&p, k, n))? == ok(tutte_oracle(&m))?, "random split {:?}", m.to_json());
        ensure!(ok(char_split(&p, k, n))? == ok(char_oracle(&m))?, "χ of {:?}", m.to_json());
        ensure!(ok(beta_split(&p, k, n))? == ok(beta_oracle(&m))?, "β of {:?}", m.to_json());
        count += 1;
    }
    let (m1, m2) = (twin_nonsplit(), twin_split());
    let t1 = BiPoly::from_terms([(0, 6, 1), (0, 5, 3), (2, 2, 1), (1, 3, 2), (0, 4, 6), (3, 0, 1), (2, 1, 1), (1, 2, 4), (0, 3, 8), (2, 0, 4), (1, 1, 8), (0, 2, 8), (1, 0, 4), (0, 1, 4)]);
    let t2 = BiPoly::from_terms([(0, 6, 1), (0, 5, 3), (2, 2, 1), (1, 3, 1), (0, 4, 6), (3, 0, 1), (2, 1, 1), (1, 2, 6), (0, 3, 9), (2, 0, 4), (1, 1, 7), (0, 2, 7), (1, 0, 4), (0, 1, 4)]);
    // (t-exponent, q-exponent, coefficient)
    let spec = BiPoly::from_terms([(3, 9, 30), (3, 5, 6), (2, 5, 6), (3, 3, 10), (2, 3, 12), (1, 3, 2), (3, 0, 9), (2, 0, 15), (1, 0, 7), (0, 0, 1)]);
    ensure!(ok(tutte_oracle(&m1))? == t1, "T(M1) = {}", ok(tutte_oracle(&m1))?);
    ensure!(ok(tutte_oracle(&m2))? == t2, "T(M2) = {}", ok(tutte_oracle(&m2))?);
    ensure!(ok(spectrum_oracle(&m1))? == spec, "Spec(M1)");
    ensure!(ok(spectrum_oracle(&m2))? == spec, "Spec(M2)");
    ensure!(profile_of(&m1).is_err(), "M1 classified as elementary split");
    let p2 = profile_of(&m2)?;
    ensure!(ok(spec_split(&p2, 3, 9))? == spec, "Spec(M2) via its profile");
    ensure!(ok(tutte_split(&p2, 3, 9))? == t2, "T(M2) via its profile");
    Ok(format!("{count} closed-form checks, spectral twins reproduced"))
}

fn c6_lattice() -> Result<String, String> {
    let chain = ok(chain_uniform(3, 5))?;
    ensure!(chain == UniPoly::from_ints([20, 15, 1]), "chain(U_3,5) = {chain}");
    ensure!(chain_to_h(&chain) == UniPoly::from_ints([6, 13, 1]), "h = {}", chain_to_h(&chain));
    ensure!(ok(chain_oracle(&Matroid::uniform(3, 5).unwrap()))? == chain, "chain oracle on U_3,5");
    for n in 1..=6 {
        ensure!(ok(hilb_chow_oracle(&Matroid::uniform(n, n).unwrap()))? == eulerian_poly(n), "Chow Hilbert series of U_{n},{n}");
    }
    let entries = ok(corpus(&CorpusOptions::new(8)))?;
    let (mut split, mut heavy) = (0, 0);
    for e in &entries {
        let m = &e.matroid;
        let w = ok(whitney_oracle(m))?;
        let k = m.rank();
        for i in 0..=k / 2 {
            ensure!(w.coeff(i) <= w.coeff(k - i), "top-heavy fails on {} at {i}", e.name);
        }
        heavy += 1;
        if let Ok(p) = profile_of(m) {
            ensure!(ok(whitney_split(&p, k, m.n()))? == w, "Whitney numbers of {}", e.name);
            split += 1;
        }
    }
    Ok(format!("{split} split formulas, {heavy} top-heavy checks"))
}

fn c7_kl() -> Result<String, String> {
    let start = Instant::now();
    let mut count = 0;
    let mut nonneg = |p: &UniPoly, what: &str| -> Result<(), String> {
        ensure!(p.is_nonnegative(), "negative coefficient in {what}: {p}");
        count += 1;
        Ok(())
    };
    for n in 1..=9 {
        for k in 1..=n {
            let m = Matroid::uniform(k, n).unwrap();
            let (p, q, z) = (ok(kl_oracle(&m))?, ok(klq_oracle(&m))?, ok(klz_oracle(&m))?);
            ensure!(ok(kl_uniform(k, n))? == p, "P of U_{k},{n}");
            ensure!(ok(klq_uniform(k, n))? == q, "Q of U_{k},{n}");
            ensure!(ok(klz_uniform(k, n))? == z, "Z of U_{k},{n}");
            ensure!(ok(gamma_uniform(k, n))? == ok(gamma_extract(&z, k))?, "γ of U_{k},{n}");
            nonneg(&p, "P")?;
            nonneg(&q, "Q")?;
            nonneg(&z, "Z")?;
        }
    }
    for a in 2..=6 {
        for b in 2..=6 {
            let target = ok(klz_uniform(a + b - 3, a + b - 2))?;
            ensure!(ok(klz_cab(a, b))? == target, "closed Z of C_{a},{b}");
            let z = ok(klz_oracle(&Matroid::cab(a, b).unwrap()))?;
            ensure!(z == target, "Z oracle of C_{a},{b}");
            nonneg(&z, "Z of C_a,b")?;
        }
    }
    // corank-2 elementary split matroids are duals of rank-2 matroids whose
    // parallel classes are the non-trivial blocks of a partition of E
    let mut corank2 = 0;
    for n in 3..=9 {
        for parts in partitions(n) {
            if parts.len() < 2 {
                continue;
            }
            let mut bounds = Vec::new();
            let mut start = 0;
            for &s in &parts {
                if s >= 2 {
                    bounds.push((full_mask(s) << start, 1));
                }
                start += s;
            }
            let m = ok(from_cyclic_flat_bounds(n, 2, &bounds))?.dual();
            ensure!(m.coloops() == 0 && m.rank() == n - 2, "bad corank-2 instance {parts:?}");
            let p = profile_of(&m)?;
            let (po, zo) = (ok(kl_oracle(&m))?, ok(klz_oracle(&m))?);
            ensure!(ok(kl_corank2(&p, n))? == po, "corank-2 P for blocks {parts:?}");
            ensure!(ok(klz_corank2(&p, n))? == zo, "corank-2 Z for blocks {parts:?}");
            ensure!(ok(kl_split(&p, n - 2, n))?.0 == po, "split P for blocks {parts:?}");
            ensure!(zo.le_coeffwise(&ok(klz_uniform(n - 2, n))?), "Z exceeds the uniform Z for blocks {parts:?}");
            nonneg(&po, "corank-2 P")?;
            nonneg(&ok(klq_oracle(&m))?, "corank-2 Q")?;
            nonneg(&zo, "corank-2 Z")?;
            corank2 += 1;
        }
    }
    let el = start.elapsed();
    ensure!(el < KL_BUDGET, "took {el:?}");
    Ok(format!("{corank2} corank-2 instances, {count} non-negativity checks; {el:.1?}"))
}

fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for s in (1..=n.min(max)).rev() {
            cur.push(s);
            go(n - s, s, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn paths(n: usize, k: usize) -> Vec<LatticePath> {
    k_subsets(n, k)
        .into_iter()
        .map(|s| LatticePath::parse(&(0..n).map(|i| if s >> i & 1 == 1 { 'N' } else { 'E' }).collect::<String>()).unwrap())
        .collect()
}

fn c8_speyer() -> Result<String, String> {
    let mut count = 0;
    for n in 2..=9 {
        for k in 1..n {
            let l = LatticePath::parse(&format!("{}{}", "E".repeat(n - k), "N".repeat(k))).unwrap();
            let u = LatticePath::parse(&format!("{}{}", "N".repeat(k), "E".repeat(n - k))).unwrap();
            ensure!(ok(g_uniform(k, n))? == ok(g_poly_oracle_lpm(&l, &u))?, "g of U_{k},{n}");
            count += 1;
        }
    }
    let k4 = Matroid::from_circuits(6, 3, &[0b001011, 0b010101, 0b100110, 0b111000, 0b011110, 0b101101, 0b110011]).unwrap();
    let gk4 = ok(g_paving(&profile_of(&k4)?, 3, 6))?;
    ensure!(gk4 == UniPoly::from_ints([0, 2, 2, 1]), "g(K4) = {gk4}");
    for n in 4..=10 {
        for k in 2..n - 1 {
            let m = graham_sloane(k, n, None).unwrap();
            let g = if m.is_connected() {
                ok(g_paving(&profile_of(&m)?, k, n))?
            } else {
                match ok(eval_auto(&EvalRequest { id: InvariantId::SpeyerG, source: Source::Explicit(m) }))?.value {
                    Value::Uni(g) => g,
                    other => return Err(format!("unexpected value {other:?}")),
                }
            };
            ensure!(g.is_nonnegative(), "g of Graham-Sloane {k},{n} = {g}");
            count += 1;
        }
    }
    // every LPM on at most 7 elements, indexed by its labelled bases
    let mut lpms: HashMap<Vec<u64>, (LatticePath, LatticePath)> = HashMap::new();
    for n in 1..=7 {
        for k in 0..=n {
            let ps = paths(n, k);
            for l in &ps {
                for u in &ps {
                    if let Ok(m) = Matroid::lpm(l, u) {
                        lpms.entry(m.bases().to_vec()).or_insert((l.clone(), u.clone()));
                    }
                }
            }
        }
    }
    let g_of = |m: &Matroid| -> Result<UniPoly, String> {
        let (l, u) = lpms.get(m.bases()).ok_or_else(|| format!("{:?} is not a lattice path matroid", m.to_json()))?;
        ok(g_poly_oracle_lpm(l, u))
    };
    let mut cov = 0;
    let mut keys: Vec<&Vec<u64>> = lpms.keys().collect();
    keys.sort_unstable_by_key(|b| (b.len(), (*b).clone()));
    for bases in keys {
        let (l, u) = &lpms[bases];
        let m = Matroid::lpm(l, u).unwrap();
        if !m.is_connected() || m.is_uniform() {
            continue;
        }
        let (k, n) = (m.rank(), m.n());
        for f in stressed_subsets_brute(&m) {
            let (r, h) = (m.rank_of(f), popcount(f));
            let relaxed = ok(relax(&m, f))?;
            if !lpms.contains_key(relaxed.bases()) {
                continue;
            }
            let n1 = cuspidal(r, k, h, n).unwrap();
            let n2 = Matroid::direct_sum(&[Matroid::uniform(k - r, n - h).unwrap(), Matroid::uniform(r, h).unwrap()]).unwrap();
            let lhs = g_of(&relaxed)?;
            let rhs = &(&g_of(&m)? + &g_of(&n1)?) + &g_of(&n2)?;
            ensure!(lhs == rhs, "covaluative identity fails for {:?} at {f:#b}", m.to_json());
            cov += 1;
        }
    }
    ensure!(cov > 0, "no LPM relaxation instances found");
    Ok(format!("{count} g checks, K4 = {gk4}, {cov} LPM relaxations"))
}

fn c9_master() -> Result<String, String> {
    let s = ok(consistency_sweep(&SweepOptions::new(8)))?;
    if let Some(bad) = s.first_failure() {
        return Err(format!("sweep failure: {}", bad.to_json()));
    }
    let ids: Vec<InvariantId> = InvariantId::ALL.into_iter().filter(|&i| i != InvariantId::Denham).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut perms = 0;
    for e in ok(corpus(&CorpusOptions::new(8)))? {
        let mut perm: Vec<usize> = (0..e.matroid.n()).collect();
        perm.shuffle(&mut rng);
        let p = ok(e.matroid.relabel(&perm))?;
        for &id in &ids {
            let a = eval_auto(&EvalRequest { id, source: Source::Explicit(e.matroid.clone()) });
            let b = eval_auto(&EvalRequest { id, source: Source::Explicit(p.clone()) });
            match (a, b) {
                (Ok(a), Ok(b)) => ensure!(a.value == b.value, "{id} changes under relabelling of {}", e.name),
                (Err(_), Err(_)) => {}
                _ => return Err(format!("{id} on {}: only one labelling evaluates", e.name)),
            }
            perms += 1;
        }
    }
    Ok(format!("{} pass, {} skipped; {perms} relabelled evaluations", s.count(SweepStatus::Pass), s.count(SweepStatus::Skipped)))
}

fn c10_polytope() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut done = 0;
    while done < 50 {
        let n = rng.gen_range(5..=8);
        let Some(m) = random_split(&mut rng, n) else { continue };
        let flats = stressed_flats(&m).unwrap().unwrap();
        let Some(&f) = flats.choose(&mut rng) else { continue };
        if ok(relaxation_subdivision_check(&m, f, 3))?.is_err() {
            return Err(format!("indicator identity fails for {:?} at {f:#b}", m.to_json()));
        }
        done += 1;
    }
    let u = Matroid::uniform(2, 4).unwrap();
    let m1 = Matroid::from_bases(4, u.bases().iter().copied().filter(|&b| b != 0b1100).collect()).unwrap();
    ensure!(ok(relaxation_subdivision_check(&m1, 0b1100, 2))?.is_ok(), "octahedron split");
    let pts = ok(HPolytope::of_matroid(&u))?.lattice_points(2).len();
    ensure!(pts == 19, "2Δ_2,4 has {pts} lattice points");
    Ok(format!("{done} random relaxations at t <= 3, octahedron at {pts} points"))
}

fn main() {
    let checks: [(usize, &str, Check); 10] = [
        (1, "G-invariant of the octahedron split", c1_g_invariant),
        (2, "volumes of uniform and minimal matroids", c2_volume),
        (3, "Ehrhart polynomials", c3_ehrhart),
        (4, "negative Ehrhart coefficient", c4_negative_coefficient),
        (5, "Tutte, characteristic, beta, spectrum", c5_tutte),
        (6, "Whitney, chain and Chow-Hilbert polynomials", c6_lattice),
        (7, "Kazhdan-Lusztig polynomials", c7_kl),
        (8, "Speyer g-polynomial", c8_speyer),
        (9, "master formula equivalence", c9_master),
        (10, "polytope valuation certificate", c10_polytope),
    ];
    let only: Option<usize> = std::env::args().skip(1).find_map(|a| a.parse().ok());
    let mut failed = 0;
    for (i, name, f) in checks {
        if only.is_some_and(|o| o != i) {
            continue;
        }
        let start = Instant::now();
        let res = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            Err(e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let el = start.elapsed();
        match res {
            Ok(detail) => println!("criterion {i:>2} PASS  {name}: {detail} [{el:.1?}]"),
            Err(why) => {
                failed += 1;
                println!("criterion {i:>2} FAIL  {name}: {why} [{el:.1?}]");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
