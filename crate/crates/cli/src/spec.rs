//! Matroid shorthand: `uniform:k,n`, `cuspidal:r,k,h,n`, `minimal:k,n`,
//! `cab:a,b`, `lpm:<lower>,<upper>`, `gs:k,n[,residue]`, `sum:(a)+(b)+...`
//! and `file:<path>` (JSON with 0-based labels).

use matval::master::{Family, Source};
use matval::matroid::LatticePath;
use matval::{Matroid, MvError, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatroidSpec {
    Family(Family),
    Sum(Vec<MatroidSpec>),
    File(String),
}

fn nums(args: &str, lo: usize, hi: usize, what: &str) -> Result<Vec<usize>> {
    let v = args
        .split(',')
        .map(|s| s.trim().parse::<usize>().map_err(|_| MvError::Parse(format!("{what}: '{s}' is not a non-negative integer"))))
        .collect::<Result<Vec<_>>>()?;
    if v.len() < lo || v.len() > hi {
        let want = if lo == hi { lo.to_string() } else { format!("{lo} or {hi}") };
        return Err(MvError::Parse(format!("{what} takes {want} parameters, got {}", v.len())));
    }
    Ok(v)
}

/// Splits `(a)+(b)+(c)` at top-level `+` signs.
fn split_sum(s: &str) -> Result<Vec<&str>> {
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0i32, 0usize);
    let mut plus = false;
    for (i, c) in s.char_indices() {
        match c {
            '(' => {
                if depth == 0 {
                    if !parts.is_empty() && !plus {
                        return Err(MvError::Parse("missing '+' between sum terms".into()));
                    }
                    plus = false;
                    start = i + 1;
                }
                depth += 1;
            }
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(MvError::Parse("unbalanced ')' in sum".into()));
                }
                if depth == 0 {
                    parts.push(&s[start..i]);
                }
            }
            '+' if depth == 0 => {
                if parts.is_empty() || plus {
                    return Err(MvError::Parse("'+' without a term before it".into()));
                }
                plus = true;
            }
            c if depth == 0 && !c.is_whitespace() => {
                return Err(MvError::Parse(format!("sum terms must be parenthesised, found '{c}'")));
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(MvError::Parse("unbalanced '(' in sum".into()));
    }
    if plus {
        return Err(MvError::Parse("trailing '+' in sum".into()));
    }
    if parts.is_empty() {
        return Err(MvError::Parse("empty sum".into()));
    }
    Ok(parts)
}

impl MatroidSpec {
    pub fn parse(s: &str) -> Result<MatroidSpec> {
        let s = s.trim();
        let (kind, args) = s.split_once(':').ok_or_else(|| MvError::Parse(format!("'{s}' has no 'kind:' prefix")))?;
        let fam = match kind.trim().to_ascii_lowercase().as_str() {
            "uniform" => {
                let v = nums(args, 2, 2, "uniform")?;
                Family::Uniform { k: v[0], n: v[1] }
            }
            "cuspidal" => {
                let v = nums(args, 4, 4, "cuspidal")?;
                Family::Cuspidal { r: v[0], k: v[1], h: v[2], n: v[3] }
            }
            "minimal" => {
                let v = nums(args, 2, 2, "minimal")?;
                Family::Minimal { k: v[0], n: v[1] }
            }
            "cab" => {
                let v = nums(args, 2, 2, "cab")?;
                Family::Cab { a: v[0], b: v[1] }
            }
            "gs" => {
                let v = nums(args, 2, 3, "gs")?;
                Family::GrahamSloane { k: v[0], n: v[1], residue: v.get(2).copied() }
            }
            "lpm" => {
                let (l, u) = args.split_once(',').ok_or_else(|| MvError::Parse("lpm takes two N/E paths".into()))?;
                Family::Lpm { l: LatticePath::parse(l.trim())?, u: LatticePath::parse(u.trim())? }
            }
            "sum" => return split_sum(args)?.into_iter().map(MatroidSpec::parse).collect::<Result<_>>().map(MatroidSpec::Sum),
            "file" => return Ok(MatroidSpec::File(args.to_string())),
            other => return Err(MvError::Parse(format!("unknown matroid kind '{other}'"))),
        };
        Ok(MatroidSpec::Family(fam))
    }

    pub fn build(&self) -> Result<Matroid> {
        match self {
            MatroidSpec::Family(f) => f.build(),
            MatroidSpec::Sum(parts) => Matroid::direct_sum(&parts.iter().map(MatroidSpec::build).collect::<Result<Vec<_>>>()?),
            MatroidSpec::File(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| MvError::Parse(format!("cannot read {path}: {e}")))?;
                Matroid::from_json(&text)
            }
        }
    }

    /// Families keep their closed forms; everything else is evaluated
    /// from the explicit matroid.
    pub fn source(&self) -> Result<Source> {
        Ok(match self {
            MatroidSpec::Family(f) => Source::Family(f.clone()),
            _ => Source::Explicit(self.build()?),
        })
    }
}
