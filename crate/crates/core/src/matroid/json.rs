use serde::{Deserialize, Serialize};

use super::{elements, mask_of, Matroid};
use crate::error::{MvError, Result};

/// On-disk form: 0-based labels, bases as label lists.
#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct MatroidJson {
    pub n: usize,
    pub rank: usize,
    pub bases: Vec<Vec<usize>>,
}

impl Matroid {
    pub fn to_json(&self) -> String {
        let j = MatroidJson { n: self.n(), rank: self.rank(), bases: self.bases().iter().map(|&b| elements(b).collect()).collect() };
        serde_json::to_string(&j).expect("serialisable")
    }

    pub fn from_json(s: &str) -> Result<Matroid> {
        let j: MatroidJson = serde_json::from_str(s).map_err(|e| MvError::Parse(e.to_string()))?;
        for b in &j.bases {
            if let Some(&bad) = b.iter().find(|&&e| e >= j.n) {
                let hint = if bad == j.n { " (labels must be 0-based)" } else { "" };
                return Err(MvError::Parse(format!("label {bad} out of range for n = {}{hint}", j.n)));
            }
            if b.len() != j.rank {
                return Err(MvError::Parse(format!("basis {b:?} does not have size {}", j.rank)));
            }
        }
        Matroid::from_bases(j.n, j.bases.iter().map(|b| mask_of(b)).collect())
    }
}
