use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::eval::Family;
use crate::error::Result;
use crate::matroid::{LatticePath, Matroid};
use crate::stressed::{classify_split, from_cyclic_flat_bounds, SplitClass};

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    /// Shorthand that rebuilds the matroid (CLI spec string when one exists).
    pub name: String,
    pub matroid: Matroid,
    pub family: Option<Family>,
}

#[derive(Clone, Debug)]
pub struct CorpusOptions {
    pub max_n: usize,
    pub seed: u64,
    /// Random relaxation-built splits per (k, n).
    pub random_per_size: usize,
    pub include_uniform: bool,
    pub include_cuspidal: bool,
    pub include_graham_sloane: bool,
    pub include_random: bool,
    pub include_cab: bool,
    pub include_lpm: bool,
}

impl CorpusOptions {
    pub fn new(max_n: usize) -> Self {
        CorpusOptions {
            max_n,
            seed: 0x5eed,
            random_per_size: 3,
            include_uniform: true,
            include_cuspidal: true,
            include_graham_sloane: true,
            include_random: true,
            include_cab: true,
            include_lpm: true,
        }
    }
}

fn family_entry(name: String, fam: Family) -> Option<CorpusEntry> {
    fam.build().ok().map(|m| CorpusEntry { name, matroid: m, family: Some(fam) })
}

/// Random matroid built from pairwise incomparable cyclic-flat bounds, kept
/// only when it is elementary split and not uniform.
fn random_split(rng: &mut ChaCha8Rng, k: usize, n: usize) -> Option<Matroid> {
    let flats = rng.gen_range(1..=3);
    let mut bounds: Vec<(u64, usize)> = Vec::new();
    let labels: Vec<usize> = (0..n).collect();
    for _ in 0..flats {
        let h = rng.gen_range(2..n);
        let r = rng.gen_range(1..=k.min(h - 1));
        let mut pick = labels.clone();
        pick.shuffle(rng);
        let mask = pick[..h].iter().fold(0u64, |m, &e| m | 1 << e);
        if bounds.iter().any(|&(f, _)| f & !mask == 0 || mask & !f == 0) {
            continue;
        }
        bounds.push((mask, r));
    }
    let m = from_cyclic_flat_bounds(n, k, &bounds).ok()?;
    if m.rank() != k {
        return None;
    }
    match classify_split(&m) {
        Ok(SplitClass::ElementarySplit(_)) => Some(m),
        _ => None,
    }
}

fn lpm_paths(n: usize, k: usize, rng: &mut ChaCha8Rng) -> Option<(LatticePath, LatticePath)> {
    // random pair of paths with l weakly below u, both with k north steps
    let mut steps = vec![false; n];
    for s in steps.iter_mut().take(k) {
        *s = true;
    }
    let mut a = steps.clone();
    let mut b = steps;
    a.shuffle(rng);
    b.shuffle(rng);
    let (pa, pb) = (LatticePath(a), LatticePath(b));
    let (ha, hb) = (pa.heights(), pb.heights());
    if ha.iter().zip(&hb).all(|(x, y)| x <= y) {
        Some((pa, pb))
    } else if ha.iter().zip(&hb).all(|(x, y)| x >= y) {
        Some((pb, pa))
    } else {
        None
    }
}

/// Deterministic test corpus for a given seed.
pub fn corpus(opts: &CorpusOptions) -> Result<Vec<CorpusEntry>> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut out = Vec::new();
    let mut seen: HashSet<(usize, Vec<u64>)> = HashSet::new();
    let mut push = |out: &mut Vec<CorpusEntry>, e: Option<CorpusEntry>| {
        if let Some(e) = e {
            if seen.insert((e.matroid.n(), e.matroid.bases().to_vec())) {
                out.push(e);
            }
        }
    };
    for n in 1..=opts.max_n {
        if opts.include_uniform {
            for k in 0..=n {
                push(&mut out, family_entry(format!("uniform:{k},{n}"), Family::Uniform { k, n }));
            }
        }
        if opts.include_cuspidal {
            for k in 1..n {
                for h in 1..n {
                    for r in 0..k.min(h) {
                        push(&mut out, family_entry(format!("cuspidal:{r},{k},{h},{n}"), Family::Cuspidal { r, k, h, n }));
                    }
                }
            }
        }
        if opts.include_graham_sloane && n >= 4 {
            for k in 2..n - 1 {
                let fam = Family::GrahamSloane { k, n, residue: None };
                push(&mut out, family_entry(format!("gs:{k},{n}"), fam));
            }
        }
        if opts.include_cab {
            for a in 2..n {
                let b = n + 1 - a;
                if b >= 2 && a <= b {
                    push(&mut out, family_entry(format!("cab:{a},{b}"), Family::Cab { a, b }));
                }
            }
        }
        if opts.include_random && n >= 4 {
            for k in 2..n - 1 {
                let mut found = 0;
                for _ in 0..40 * opts.random_per_size {
                    if found == opts.random_per_size {
                        break;
                    }
                    if let Some(m) = random_split(&mut rng, k, n) {
                        let before = out.len();
                        let name = format!("random:{k},{n}#{}", out.len());
                        push(&mut out, Some(CorpusEntry { name, matroid: m, family: None }));
                        found += usize::from(out.len() > before);
                    }
                }
            }
        }
        if opts.include_lpm && n >= 3 {
            for k in 1..n {
                for _ in 0..4 {
                    if let Some((l, u)) = lpm_paths(n, k, &mut rng) {
                        let name = format!("lpm:{l},{u}");
                        push(&mut out, family_entry(name, Family::Lpm { l, u }));
                    }
                }
            }
        }
    }
    Ok(out)
}
