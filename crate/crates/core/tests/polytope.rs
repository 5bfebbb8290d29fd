use std::collections::BTreeSet;

use matval::exactalg::rat;
use matval::matroid::*;
use matval::polytope::*;
use matval::stressed::{cuspidal, cuspidal_flat, is_stressed};
use matval::MvError;
use num_bigint::BigInt;
use proptest::prelude::*;

fn indicator(b: u64, n: usize) -> Vec<u32> {
    (0..n).map(|i| (b >> i & 1) as u32).collect()
}

fn any_cuspidal() -> impl Strategy<Value = Matroid> {
    (1usize..8)
        .prop_flat_map(|n| (Just(n), 0..=n, 0..=n))
        .prop_flat_map(|(n, k, h)| (0..=k.min(h), Just(k), Just(h), Just(n), Just((0..n).collect::<Vec<_>>()).prop_shuffle()))
        .prop_filter_map("cuspidal", |(r, k, h, n, perm)| cuspidal(r, k, h, n).ok()?.relabel(&perm).ok())
}

#[test]
fn hypersimplex_counts() {
    let p = HPolytope::of_matroid(&Matroid::uniform(2, 4).unwrap()).unwrap();
    assert!(p.ineqs.is_empty());
    // C(t+3,3) points with coordinates <= t and sum 2t: 1, 6, 19, 44
    let counts: Vec<BigInt> = (0..4).map(|t| p.count_lattice_points(t)).collect();
    assert_eq!(counts, [1, 6, 19, 44].map(BigInt::from));
    assert_eq!(HPolytope::cuspidal(1, 2, 2, 4), HPolytope::of_matroid(&cuspidal(1, 2, 2, 4).unwrap()).unwrap());
    assert_eq!(volume_oracle(&Matroid::uniform(2, 4).unwrap()).unwrap(), rat(4) / rat(6));
    assert_eq!(volume_oracle(&Matroid::uniform(1, 1).unwrap()).unwrap(), rat(1));
}

#[test]
fn octahedron_split() {
    // U_{2,4} split along x_2 + x_3 <= 1 and its complement
    let u = Matroid::uniform(2, 4).unwrap();
    let m = Matroid::from_bases(4, u.bases().iter().copied().filter(|&b| b != 0b1100).collect()).unwrap();
    assert!(relaxation_subdivision_check(&m, 0b1100, 2).unwrap().is_ok());
    assert_eq!(relaxation_subdivision_check(&u, 0b1100, 1), Err(MvError::NotStressed(0b1100)));
}

#[test]
fn lattice_path_split() {
    let l = LatticePath::parse("EEENNN").unwrap();
    let u = LatticePath::parse("NNNEEE").unwrap();
    assert!(lpm_split_check(&l, &u, 1, 1, 2).unwrap());
    assert!(lpm_split_check(&l, &u, 2, 1, 2).unwrap());
}

proptest! {
    #[test]
    fn vertices_are_bases(m in any_cuspidal()) {
        let p = HPolytope::of_matroid(&m).unwrap();
        let pts: BTreeSet<Vec<u32>> = p.lattice_points(1).into_iter().collect();
        let bases: BTreeSet<Vec<u32>> = m.bases().iter().map(|&b| indicator(b, m.n())).collect();
        prop_assert_eq!(pts, bases);
    }

    #[test]
    fn second_dilate_is_sums_of_bases(m in any_cuspidal()) {
        let p = HPolytope::of_matroid(&m).unwrap();
        let pts: BTreeSet<Vec<u32>> = p.lattice_points(2).into_iter().collect();
        let mut sums = BTreeSet::new();
        for &a in m.bases() {
            for &b in m.bases() {
                sums.insert(indicator(a, m.n()).iter().zip(indicator(b, m.n())).map(|(x, y)| x + y).collect::<Vec<_>>());
            }
        }
        prop_assert_eq!(pts, sums);
    }

    #[test]
    fn counting_agrees_with_enumeration(m in any_cuspidal(), t in 0u32..4) {
        let p = HPolytope::of_matroid(&m).unwrap();
        prop_assert_eq!(p.count_lattice_points(t), BigInt::from(p.lattice_points(t).len()));
    }

    #[test]
    fn ehrhart_endpoints(m in any_cuspidal()) {
        let e = ehrhart_oracle(&m).unwrap();
        prop_assert_eq!(e.eval_i(0), rat(1));
        prop_assert_eq!(e.eval_i(1), rat(m.bases().len() as i64));
        prop_assert_eq!(e.degree().unwrap_or(0), dimension(&m));
        prop_assert_eq!(dimension(&m), m.n() - m.components().len());
    }

    #[test]
    fn relaxation_indicator_identity(m in any_cuspidal()) {
        // relabelling loses track of the stressed subset, so search for it
        let found = (1..full_mask(m.n())).find(|&f| is_stressed(&m, f) && !matval::stressed::cusp(&m, f).is_empty());
        if let Some(f) = found {
            prop_assert!(relaxation_subdivision_check(&m, f, 2).unwrap().is_ok());
        }
    }
}

#[test]
fn cuspidal_relaxation_identity() {
    for n in 3..=6 {
        for k in 1..n {
            for h in 1..n {
                for r in 1..k.min(h) {
                    if k - r < n - h {
                        let m = cuspidal(r, k, h, n).unwrap();
                        assert!(relaxation_subdivision_check(&m, cuspidal_flat(h, n), 2).unwrap().is_ok(), "{r},{k},{h},{n}");
                    }
                }
            }
        }
    }
}
