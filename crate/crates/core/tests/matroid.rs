use matval::matroid::*;
use matval::stressed::cuspidal;
use matval::MvError;
use proptest::prelude::*;

fn rank_brute(m: &Matroid, a: u64) -> usize {
    m.bases().iter().map(|&b| popcount(b & a)).max().unwrap_or(0)
}

/// Cuspidal matroids with relabelled ground sets, plus their duals.
fn any_matroid() -> impl Strategy<Value = Matroid> {
    (1usize..8)
        .prop_flat_map(|n| (Just(n), 0..=n, 0..=n))
        .prop_flat_map(|(n, k, h)| (Just(n), Just(k), Just(h), 0..=k.min(h), any::<bool>(), Just((0..n).collect::<Vec<_>>()).prop_shuffle()))
        .prop_filter_map("valid cuspidal", |(n, k, h, r, dual, perm)| {
            let m = cuspidal(r, k, h, n).ok()?.relabel(&perm).ok()?;
            Some(if dual { m.dual() } else { m })
        })
}

fn k4() -> Matroid {
    // edges 0..6 of K4: 01 02 03 12 13 23
    let tri = [0b001011, 0b010101, 0b100110, 0b111000];
    let quads = [0b011110, 0b101101, 0b110011];
    let circuits: Vec<u64> = tri.iter().chain(quads.iter()).copied().collect();
    Matroid::from_circuits(6, 3, &circuits).unwrap()
}

#[test]
fn uniform_basics() {
    let u = Matroid::uniform(2, 4).unwrap();
    assert_eq!(u.bases().len(), 6);
    assert!(u.is_uniform() && u.is_connected());
    assert_eq!(u.flats().unwrap().len(), 1 + 4 + 1);
    assert_eq!(u.cyclic_flats().unwrap(), vec![0, 0b1111]);
    assert_eq!(Matroid::uniform(0, 3).unwrap().loops(), 0b111);
    assert_eq!(Matroid::uniform(3, 3).unwrap().coloops(), 0b111);
    assert!(matches!(Matroid::uniform(5, 3), Err(MvError::InvalidParameters(_))));
}

#[test]
fn rejects_non_matroids() {
    // {0,1} and {2,3} alone violate exchange
    assert!(matches!(Matroid::from_bases(4, vec![0b0011, 0b1100]), Err(MvError::NotAMatroid(_))));
    assert!(Matroid::from_bases(4, vec![]).is_err());
    assert!(Matroid::from_bases(3, vec![0b1, 0b11]).is_err());
}

#[test]
fn graphic_k4() {
    let m = k4();
    assert_eq!(m.bases().len(), 16);
    assert_eq!(m.flats().unwrap().len(), 15);
    assert_eq!(m.circuits().unwrap().len(), 7);
    assert!(m.is_connected());
    // the four triangles are the proper non-empty cyclic flats
    assert_eq!(m.cyclic_flats().unwrap().len(), 6);
}

#[test]
fn cab_and_lattice_paths() {
    let c = Matroid::cab(2, 3).unwrap();
    assert_eq!((c.rank(), c.n()), (2, 4));
    assert!(c.is_connected());
    let l = LatticePath::parse("EENN").unwrap();
    let u = LatticePath::parse("NNEE").unwrap();
    assert!(Matroid::lpm(&l, &u).unwrap().is_isomorphic(&Matroid::uniform(2, 4).unwrap()));
    assert!(Matroid::lpm(&u, &l).is_err());
    assert!(LatticePath::parse("NXE").is_err());
    let s = Matroid::schubert(&LatticePath::parse("NENE").unwrap()).unwrap();
    assert_eq!(s.rank(), 2);
    assert_eq!(LatticePath::from_heights(&l.heights()), l);
}

#[test]
fn lpm_split_covers_the_matroid() {
    let l = LatticePath::parse("EEENNN").unwrap();
    let u = LatticePath::parse("NNNEEE").unwrap();
    let m = Matroid::lpm(&l, &u).unwrap();
    let [(l1, u1), (l2, u2), (l3, u3)] = lpm_split(&l, &u, 1, 1).unwrap();
    let (a, b, c) = (Matroid::lpm(&l1, &u1).unwrap(), Matroid::lpm(&l2, &u2).unwrap(), Matroid::lpm(&l3, &u3).unwrap());
    assert_eq!(a.bases().len() + b.bases().len() - c.bases().len(), m.bases().len());
}

#[test]
fn json_labels_are_zero_based() {
    let err = Matroid::from_json(r#"{"n":2,"rank":1,"bases":[[1],[2]]}"#).unwrap_err();
    assert!(err.to_string().contains("0-based"));
    let m = Matroid::from_json(r#"{"n":2,"rank":1,"bases":[[0],[1]]}"#).unwrap();
    assert_eq!(m, Matroid::uniform(1, 2).unwrap());
}

#[test]
fn subset_helpers() {
    assert_eq!(k_subsets(5, 2).len(), 10);
    assert_eq!(mask_of(&[0, 3]), 0b1001);
    assert_eq!(elements(0b1010).collect::<Vec<_>>(), vec![1, 3]);
    assert_eq!(compress(0b1010, 0b1110), 0b101);
    assert_eq!(expand(0b101, 0b1110), 0b1010);
    assert_eq!(full_mask(64), u64::MAX);
}

proptest! {
    #[test]
    fn rank_function_matches_bases(m in any_matroid(), a in any::<u64>()) {
        let a = a & m.ground();
        prop_assert_eq!(m.rank_of(a), rank_brute(&m, a));
        prop_assert!(m.rank_of(m.closure(a)) == m.rank_of(a));
        prop_assert_eq!(m.closure(m.closure(a)), m.closure(a));
    }

    #[test]
    fn duality(m in any_matroid(), a in any::<u64>()) {
        let a = a & m.ground();
        let d = m.dual();
        prop_assert_eq!(d.dual(), m.clone());
        prop_assert_eq!(d.rank(), m.n() - m.rank());
        // r*(A) = |A| - r(M) + r(E \ A)
        prop_assert_eq!(d.rank_of(a) + m.rank(), popcount(a) + m.rank_of(m.ground() & !a));
        prop_assert_eq!(d.loops(), m.coloops());
    }

    #[test]
    fn minors(m in any_matroid(), a in any::<u64>()) {
        let a = a & m.ground();
        let rest = m.ground() & !a;
        let del = m.delete(a);
        prop_assert_eq!(del.rank(), m.rank_of(rest));
        let con = m.contract(a);
        prop_assert_eq!(con.rank(), m.rank() - m.rank_of(a));
        // contraction is dual to deletion
        prop_assert_eq!(m.dual().delete(a).dual(), con);
    }

    #[test]
    fn direct_sums(a in any_matroid(), b in any_matroid()) {
        prop_assume!(a.n() + b.n() <= 12);
        let s = Matroid::direct_sum(&[a.clone(), b.clone()]).unwrap();
        prop_assert_eq!(s.rank(), a.rank() + b.rank());
        prop_assert_eq!(s.bases().len(), a.bases().len() * b.bases().len());
        prop_assert!(s.components().len() >= 2);
        prop_assert_eq!(s.restrict(full_mask(a.n())), a);
    }

    #[test]
    fn components_partition_the_ground_set(m in any_matroid()) {
        let comps = m.components();
        prop_assert_eq!(comps.iter().fold(0, |x, c| x | c), m.ground());
        let ranks: usize = comps.iter().map(|&c| m.rank_of(c)).sum();
        prop_assert_eq!(ranks, m.rank());
        prop_assert_eq!(m.is_connected(), comps.len() <= 1);
    }

    #[test]
    fn relabelling_preserves_isomorphism_type(m in any_matroid(), perm in Just((0..8).collect::<Vec<usize>>()).prop_shuffle()) {
        let p: Vec<usize> = perm.into_iter().filter(|&i| i < m.n()).collect();
        let r = m.relabel(&p).unwrap();
        prop_assert!(r.is_isomorphic(&m));
        prop_assert_eq!(r.flats().unwrap().len(), m.flats().unwrap().len());
    }

    #[test]
    fn json_round_trip(m in any_matroid()) {
        prop_assert_eq!(Matroid::from_json(&m.to_json()).unwrap(), m);
    }

    #[test]
    fn flats_are_closed_and_cyclic_flats_are_unions_of_circuits(m in any_matroid()) {
        for f in m.flats().unwrap() {
            prop_assert_eq!(m.closure(f), f);
        }
        let circuits = m.circuits().unwrap();
        for f in m.cyclic_flats().unwrap() {
            let union = circuits.iter().filter(|&&c| c & !f == 0).fold(0, |x, c| x | c);
            prop_assert_eq!(union, f);
        }
    }

    #[test]
    fn simplification_has_no_loops_or_parallels(m in any_matroid()) {
        let s = m.simplify();
        prop_assert_eq!(s.loops(), 0);
        prop_assert_eq!(s.rank(), m.rank());
        prop_assert!(s.circuits().unwrap().iter().all(|&c| popcount(c) >= 3));
    }
}
