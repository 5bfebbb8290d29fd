use crate::exactalg::UniPoly;
use crate::matroid::Matroid;

/// `(f ⋆ g)(M) = sum_S f(M|S) g(M/S)` over all subsets.
pub fn convolve<F, G>(f: F, g: G, m: &Matroid) -> UniPoly
where
    F: Fn(&Matroid) -> UniPoly + Sync + Send,
    G: Fn(&Matroid) -> UniPoly + Sync + Send,
{
    let parts = crate::par::map_range(1usize << m.n(), |s| {
        let s = s as u64;
        &f(&m.restrict(s)) * &g(&m.contract(s))
    });
    parts.iter().fold(UniPoly::zero(), |a, b| &a + b)
}
