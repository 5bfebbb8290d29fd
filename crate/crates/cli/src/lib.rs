pub mod spec;

use std::fmt::Write as _;

use matval::closedform::InvariantId;
use matval::master::{consistency_sweep, eval, EvalRequest, RouteChoice, SweepOptions, SweepStatus};
use matval::matroid::{elements, k_subsets, mask_of, popcount};
use matval::polytope::relaxation_subdivision_check;
use matval::stressed::{classify_split, cusp_size, is_stressed, SplitClass, SplitWitness};
use matval::{Matroid, MvError, Result};
use serde_json::json;

pub use spec::MatroidSpec;

/// Exit code for an error: 2 for bad input, 3 when the value is out of reach.
pub fn exit_code(e: &MvError) -> i32 {
    match e {
        MvError::Unresolvable(_) | MvError::TooLarge(_) | MvError::Overflow(_) => 3,
        _ => 2,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl std::str::FromStr for Format {
    type Err = MvError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            _ => Err(MvError::Parse(format!("unknown format '{s}'"))),
        }
    }
}

pub fn cmd_invariant(spec: &str, name: &str, route: &str, format: Format) -> Result<String> {
    let id: InvariantId = name.parse()?;
    let route: RouteChoice = route.parse()?;
    let source = MatroidSpec::parse(spec)?.source()?;
    let e = eval(&EvalRequest { id, source }, route)?;
    Ok(match format {
        Format::Text => e.value.to_text(id),
        Format::Json => json!({ "invariant": id.name(), "route": e.route.to_string(), "value": e.value.to_json() }).to_string(),
    })
}

fn set_str(m: u64) -> String {
    let v: Vec<String> = elements(m).map(|e| e.to_string()).collect();
    format!("{{{}}}", v.join(","))
}

pub fn cmd_classify(spec: &str) -> Result<String> {
    let m = MatroidSpec::parse(spec)?.build()?;
    let mut out = String::new();
    match classify_split(&m)? {
        SplitClass::Uniform => writeln!(out, "Uniform U_{{{},{}}}", m.rank(), m.n()).unwrap(),
        SplitClass::ElementarySplit(p) => {
            writeln!(out, "ElementarySplit (rank {}, {} elements, {} stressed subsets with non-empty cusp)", m.rank(), m.n(), p.total())
                .unwrap();
            writeln!(out, "r\th\tcount").unwrap();
            for (r, h, c) in p.iter() {
                writeln!(out, "{r}\t{h}\t{c}").unwrap();
            }
        }
        SplitClass::NotElementarySplit(w) => {
            writeln!(out, "NotElementarySplit").unwrap();
            let line = match w {
                SplitWitness::ComparableCyclicFlats(a, b) => {
                    format!("comparable proper cyclic flats {} < {}", set_str(a), set_str(b))
                }
                SplitWitness::LoopsWithNonUniformRest(l) => format!("loops {} with a non-uniform remainder", set_str(l)),
                SplitWitness::ColoopsWithNonUniformRest(c) => format!("coloops {} with a non-uniform remainder", set_str(c)),
            };
            writeln!(out, "witness: {line}").unwrap();
        }
    }
    Ok(out.trim_end().to_string())
}

pub fn parse_flat(s: &str, n: usize) -> Result<u64> {
    let elems = s
        .split(',')
        .map(|e| e.trim().parse::<usize>().map_err(|_| MvError::Parse(format!("flat: '{e}' is not an element label"))))
        .collect::<Result<Vec<_>>>()?;
    if let Some(&bad) = elems.iter().find(|&&e| e >= n) {
        return Err(MvError::Parse(format!("flat: label {bad} out of range for n = {n} (labels are 0-based)")));
    }
    Ok(mask_of(&elems))
}

/// When `F` is not stressed with a non-empty cusp in `M` but `M` is uniform,
/// the check runs on the matroid obtained by putting the cusp back, so that
/// relaxing `F` returns `M`.
fn base_for(m: &Matroid, f: u64) -> Result<(Matroid, Option<String>)> {
    let (k, n, h) = (m.rank(), m.n(), popcount(f));
    let stressed = |m: &Matroid| is_stressed(m, f) && cusp_size(m.rank_of(f), k, h, n) > 0.into();
    if stressed(m) {
        return Ok((m.clone(), None));
    }
    if m.is_uniform() && k.min(h) >= 1 {
        let r = k.min(h) - 1;
        let bases: Vec<u64> = k_subsets(n, k).into_iter().filter(|&b| popcount(b & f) <= r).collect();
        if let Ok(base) = Matroid::from_bases(n, bases) {
            if base.rank() == k && stressed(&base) {
                let note = format!("{} is not stressed in the input; using the matroid with bases |B ∩ F| <= {r}, whose relaxation at F is the input", set_str(f));
                return Ok((base, Some(note)));
            }
        }
    }
    Err(MvError::NotStressed(f))
}

/// Returns the report and whether the check passed.
pub fn cmd_check_subdivision(spec: &str, flat: &str, t_max: u32) -> Result<(String, bool)> {
    let m = MatroidSpec::parse(spec)?.build()?;
    let f = parse_flat(flat, m.n())?;
    let (base, note) = base_for(&m, f)?;
    let (k, n, h) = (base.rank(), base.n(), popcount(f));
    let r = base.rank_of(f);
    let count = |pred: &dyn Fn(u64) -> bool| k_subsets(n, k).into_iter().filter(|&b| pred(b)).count();
    let mut out = String::new();
    if let Some(note) = note {
        writeln!(out, "{note}").unwrap();
    }
    writeln!(out, "F = {} (rank {r}, size {h}), cusp size {}", set_str(f), cusp_size(r, k, h, n)).unwrap();
    writeln!(out, "faces:").unwrap();
    writeln!(out, "  P(Rel(M,F)): {} vertices", base.bases().len() + count(&|b| popcount(b & f) > r)).unwrap();
    writeln!(out, "  P(M):        {} vertices", base.bases().len()).unwrap();
    writeln!(out, "  P(N1):       {} vertices (|B ∩ F| >= {r})", count(&|b| popcount(b & f) >= r)).unwrap();
    writeln!(out, "  P(N2):       {} vertices (|B ∩ F| = {r}, common facet)", count(&|b| popcount(b & f) == r)).unwrap();
    let pass = match relaxation_subdivision_check(&base, f, t_max)? {
        Ok(()) => {
            writeln!(out, "indicator identity holds at every lattice point of t·P(Rel(M,F)), t <= {t_max}").unwrap();
            true
        }
        Err((t, x)) => {
            writeln!(out, "indicator identity fails at t = {t}, x = {x:?}").unwrap();
            false
        }
    };
    writeln!(out, "{}", if pass { "PASS" } else { "FAIL" }).unwrap();
    Ok((out.trim_end().to_string(), pass))
}

/// Returns the JSON-lines report, a summary line and whether the sweep passed.
pub fn cmd_check_sweep(max_n: usize) -> Result<(String, String, bool)> {
    let s = consistency_sweep(&SweepOptions::new(max_n))?;
    let summary = format!(
        "{} records: {} pass, {} fail, {} skipped -> {}",
        s.records.len(),
        s.count(SweepStatus::Pass),
        s.count(SweepStatus::Fail),
        s.count(SweepStatus::Skipped),
        if s.passed() { "PASS" } else { "FAIL" }
    );
    Ok((s.to_jsonl(), summary, s.passed()))
}
