use std::fmt;

use super::Matroid;
use crate::error::{MvError, Result};

/// A monotone lattice path; `true` is a north step. The north steps of a path
/// are the elements of the corresponding basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LatticePath(pub Vec<bool>);

impl LatticePath {
    pub fn parse(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                'N' | 'n' => Ok(true),
                'E' | 'e' => Ok(false),
                _ => Err(MvError::Parse(format!("bad lattice path step {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(LatticePath)
    }

    pub fn from_heights(h: &[usize]) -> Self {
        LatticePath(h.windows(2).map(|w| w[1] > w[0]).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn norths(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }

    /// Number of north steps among the first `m` steps, for `m = 0..=len`.
    pub fn heights(&self) -> Vec<usize> {
        let mut h = vec![0];
        for &b in &self.0 {
            h.push(h.last().unwrap() + b as usize);
        }
        h
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "N" } else { "E" })?;
        }
        Ok(())
    }
}

fn check_pair(l: &LatticePath, u: &LatticePath) -> Result<(Vec<usize>, Vec<usize>)> {
    if l.len() != u.len() || l.norths() != u.norths() {
        return Err(MvError::InvalidInput(format!("paths {l} and {u} do not share endpoints")));
    }
    if l.len() > 64 {
        return Err(MvError::TooLarge("lattice path longer than 64".into()));
    }
    let (hl, hu) = (l.heights(), u.heights());
    if hl.iter().zip(&hu).any(|(a, b)| a > b) {
        return Err(MvError::InvalidInput(format!("path {l} is not below {u}")));
    }
    Ok((hl, hu))
}

impl Matroid {
    /// Lattice path matroid: bases are the north-step sets of paths between
    /// the lower path `l` and the upper path `u`.
    pub fn lpm(l: &LatticePath, u: &LatticePath) -> Result<Matroid> {
        let (hl, hu) = check_pair(l, u)?;
        let n = l.len();
        let mut bases = Vec::new();
        fn go(m: usize, h: usize, cur: u64, n: usize, hl: &[usize], hu: &[usize], out: &mut Vec<u64>) {
            if m == n {
                out.push(cur);
                return;
            }
            if h >= hl[m + 1] && h <= hu[m + 1] {
                go(m + 1, h, cur, n, hl, hu, out);
            }
            if h + 1 >= hl[m + 1] && h < hu[m + 1] {
                go(m + 1, h + 1, cur | 1u64 << m, n, hl, hu, out);
            }
        }
        go(0, 0, 0, n, &hl, &hu, &mut bases);
        Matroid::from_bases_unchecked(n, bases)
    }

    /// Schubert matroid: the lattice path matroid over the lowest path.
    pub fn schubert(u: &LatticePath) -> Result<Matroid> {
        let k = u.norths();
        let mut l = vec![false; u.len() - k];
        l.extend(std::iter::repeat(true).take(k));
        Matroid::lpm(&LatticePath(l), u)
    }
}

/// Splits the region between `l` and `u` at the interior lattice point with
/// `x` east and `y` north steps, returning the upper piece, the lower piece
/// and their common facet. Errors if the point is not interior.
pub fn lpm_split(l: &LatticePath, u: &LatticePath, x: usize, y: usize) -> Result<[(LatticePath, LatticePath); 3]> {
    let (hl, hu) = check_pair(l, u)?;
    let n = l.len();
    let m0 = x + y;
    if m0 == 0 || m0 >= n || !(hl[m0] < y && y < hu[m0]) {
        return Err(MvError::InvalidParameters(format!("({x},{y}) is not an interior point")));
    }
    let lp: Vec<usize> = (0..=n).map(|m| hl[m].max(if m <= m0 { m.saturating_sub(x) } else { y })).collect();
    let up: Vec<usize> = (0..=n).map(|m| hu[m].min(if m <= m0 { y.min(m) } else { y + (m - m0) })).collect();
    let (lp, up) = (LatticePath::from_heights(&lp), LatticePath::from_heights(&up));
    Ok([(lp.clone(), u.clone()), (l.clone(), up.clone()), (lp, up)])
}
