use super::poly::UniPoly;
use super::rat::{rat, Rat};
use crate::error::{MvError, Result};

/// Newton interpolation through `(x, y)` pairs.
pub fn interpolate(points: &[(Rat, Rat)]) -> Result<UniPoly> {
    let n = points.len();
    for i in 0..n {
        for j in 0..i {
            if points[i].0 == points[j].0 {
                return Err(MvError::DuplicateNodes);
            }
        }
    }
    let mut dd: Vec<Rat> = points.iter().map(|p| p.1.clone()).collect();
    for lvl in 1..n {
        for i in (lvl..n).rev() {
            let den = &points[i].0 - &points[i - lvl].0;
            dd[i] = (&dd[i] - &dd[i - 1]) / den;
        }
    }
    let mut acc = UniPoly::zero();
    for i in (0..n).rev() {
        acc = &(&acc * &UniPoly::new(vec![-points[i].0.clone(), rat(1)])) + &UniPoly::constant(dd[i].clone());
    }
    Ok(acc)
}

/// Interpolates from values at `t = 0, 1, ..., len - 1`.
pub fn interpolate_from_zero(values: &[Rat]) -> UniPoly {
    let pts: Vec<(Rat, Rat)> = values.iter().enumerate().map(|(i, v)| (rat(i as i64), v.clone())).collect();
    if pts.is_empty() {
        return UniPoly::zero();
    }
    interpolate(&pts).expect("distinct integer nodes")
}
