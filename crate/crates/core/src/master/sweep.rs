use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value as Json};

use super::corpus::{corpus, CorpusEntry, CorpusOptions};
use super::eval::{eval_covaluative, eval_explicit, oracle_value, Family, RouteChoice};
use super::value::Value;
use crate::closedform::{g_paving, InvariantId};
use crate::error::{MvError, Result};
use crate::oracle::{g_poly_oracle_lpm, max_ginv_n};
use crate::stressed::{classify_split, SplitClass};

/// Hook applied to every profile-route value before comparison. Used to check
/// that the sweep catches corrupted values.
pub type FaultHook = Arc<dyn Fn(InvariantId, &CorpusEntry, Value) -> Value + Send + Sync>;

#[derive(Clone)]
pub struct SweepOptions {
    pub max_n: usize,
    pub corpus: CorpusOptions,
    /// Invariants compared between the profile route and the oracle.
    pub ids: Vec<InvariantId>,
    /// Whether to also run the property checks (positivity, symmetry, ...).
    pub properties: bool,
    pub fault: Option<FaultHook>,
}

impl SweepOptions {
    pub fn new(max_n: usize) -> Self {
        let ids = InvariantId::ALL.iter().copied().filter(|id| id.is_valuative() && *id != InvariantId::Denham).collect();
        SweepOptions { max_n, corpus: CorpusOptions::new(max_n), ids, properties: true, fault: None }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepStatus {
    Pass,
    Fail,
    /// One side was out of reach (oracle cap, no route).
    Skipped,
}

impl fmt::Display for SweepStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SweepStatus::Pass => "pass",
            SweepStatus::Fail => "fail",
            SweepStatus::Skipped => "skipped",
        })
    }
}

#[derive(Clone, Debug)]
pub struct SweepRecord {
    pub matroid: String,
    pub invariant: String,
    pub route: String,
    pub value_hash: String,
    pub status: SweepStatus,
    /// Reproduction data for failures: the matroid and both values.
    pub witness: Option<Json>,
}

impl SweepRecord {
    pub fn to_json(&self) -> Json {
        let mut j = json!({
            "matroid": self.matroid,
            "invariant": self.invariant,
            "route": self.route,
            "value-hash": self.value_hash,
            "status": self.status.to_string(),
        });
        if let Some(w) = &self.witness {
            j["witness"] = w.clone();
        }
        j
    }
}

#[derive(Clone, Debug)]
pub struct SweepSummary {
    pub records: Vec<SweepRecord>,
}

impl SweepSummary {
    pub fn failures(&self) -> impl Iterator<Item = &SweepRecord> {
        self.records.iter().filter(|r| r.status == SweepStatus::Fail)
    }

    pub fn first_failure(&self) -> Option<&SweepRecord> {
        self.failures().next()
    }

    pub fn count(&self, s: SweepStatus) -> usize {
        self.records.iter().filter(|r| r.status == s).count()
    }

    pub fn passed(&self) -> bool {
        self.first_failure().is_none()
    }

    /// One JSON object per line.
    pub fn to_jsonl(&self) -> String {
        let mut s = String::new();
        for r in &self.records {
            s.push_str(&r.to_json().to_string());
            s.push('\n');
        }
        s
    }
}

fn record(e: &CorpusEntry, inv: &str, route: &str, v: Option<&Value>, status: SweepStatus) -> SweepRecord {
    SweepRecord {
        matroid: e.name.clone(),
        invariant: inv.to_string(),
        route: route.to_string(),
        value_hash: v.map(Value::digest).unwrap_or_default(),
        status,
        witness: None,
    }
}

fn witness(e: &CorpusEntry, id: InvariantId, got: &Value, want: &Value) -> Json {
    json!({
        "name": e.name,
        "matroid": serde_json::from_str::<Json>(&e.matroid.to_json()).unwrap_or(Json::Null),
        "profile-route": got.to_text(id),
        "oracle": want.to_text(id),
    })
}

fn out_of_reach(e: &MvError) -> bool {
    matches!(e, MvError::TooLarge(_) | MvError::Unresolvable(_))
}

fn compare(e: &CorpusEntry, id: InvariantId, opts: &SweepOptions) -> SweepRecord {
    let name = id.name();
    if id == InvariantId::GInvariant && e.matroid.n() > max_ginv_n() {
        return record(e, name, "profile", None, SweepStatus::Skipped);
    }
    let got = eval_explicit(id, &e.matroid, RouteChoice::Profile).map(|ev| match &opts.fault {
        Some(f) => f(id, e, ev.value),
        None => ev.value,
    });
    let want = oracle_value(id, &e.matroid);
    match (got, want) {
        (Ok(g), Ok(w)) if g == w => record(e, name, "profile", Some(&g), SweepStatus::Pass),
        (Ok(g), Ok(w)) => {
            let mut r = record(e, name, "profile", Some(&g), SweepStatus::Fail);
            r.witness = Some(witness(e, id, &g, &w));
            r
        }
        (Err(err), _) | (_, Err(err)) if out_of_reach(&err) => record(e, name, "profile", None, SweepStatus::Skipped),
        (Err(err), _) | (_, Err(err)) => {
            let mut r = record(e, name, "profile", None, SweepStatus::Fail);
            r.witness = Some(json!({ "name": e.name, "error": err.to_string() }));
            r
        }
    }
}

fn check(e: &CorpusEntry, what: &str, v: Option<&Value>, ok: bool, detail: impl FnOnce() -> String) -> SweepRecord {
    let mut r = record(e, what, "property", v, if ok { SweepStatus::Pass } else { SweepStatus::Fail });
    if !ok {
        r.witness = Some(json!({ "name": e.name, "detail": detail() }));
    }
    r
}

fn properties(e: &CorpusEntry, out: &mut Vec<SweepRecord>) {
    let m = &e.matroid;
    let k = m.rank();
    let uni = |id| match eval_explicit(id, m, RouteChoice::Auto) {
        Ok(ev) => match ev.value {
            Value::Uni(p) => Some(p),
            _ => None,
        },
        Err(_) => None,
    };
    if m.loops() == 0 {
        for id in [InvariantId::KlP, InvariantId::KlQ, InvariantId::KlZ] {
            if let Some(p) = uni(id) {
                let v = Value::Uni(p.clone());
                out.push(check(e, &format!("{}-nonnegative", id.name()), Some(&v), p.is_nonnegative(), || p.fmt_var("t")));
            }
        }
        if let Some(z) = uni(InvariantId::KlZ) {
            let ok = z.is_palindromic(k) && z.degree() == Some(k);
            let v = Value::Uni(z.clone());
            out.push(check(e, "kl-z-palindromic", Some(&v), ok, || z.fmt_var("t")));
        }
    }
    if let Some(w) = uni(InvariantId::WhitneyW) {
        let ok = (0..=k / 2).all(|i| w.coeff(i) <= w.coeff(k - i));
        let v = Value::Uni(w.clone());
        out.push(check(e, "whitney-top-heavy", Some(&v), ok, || w.fmt_var("t")));
    }
    if let Some(Family::Lpm { l, u }) = &e.family {
        if m.is_connected() && m.n() > 1 {
            let got = eval_explicit(InvariantId::SpeyerG, m, RouteChoice::Auto);
            if let (Ok(g), Ok(o)) = (got, g_poly_oracle_lpm(l, u)) {
                let ok = g.value == Value::Uni(o.clone());
                out.push(check(e, "speyer-g-lpm", Some(&g.value), ok, || format!("{} vs {}", g.value.to_text(InvariantId::SpeyerG), o.fmt_var("t"))));
            }
        }
    }
    if let Ok(SplitClass::ElementarySplit(p)) = classify_split(m) {
        if p.is_paving(k) && m.is_connected() {
            if let (Ok(a), Ok(b)) = (eval_covaluative(InvariantId::SpeyerG, k, m.n(), &p), g_paving(&p, k, m.n())) {
                let ok = a.value == Value::Uni(b.clone());
                out.push(check(e, "speyer-g-paving", Some(&a.value), ok, || b.fmt_var("t")));
                if p.is_sparse_paving(k) {
                    out.push(check(e, "speyer-g-nonnegative", Some(&a.value), b.is_nonnegative(), || b.fmt_var("t")));
                }
            }
        }
    }
}

fn sweep_entry(e: &CorpusEntry, opts: &SweepOptions) -> Vec<SweepRecord> {
    let split = !matches!(classify_split(&e.matroid), Ok(SplitClass::NotElementarySplit(_)) | Err(_));
    let mut out = Vec::new();
    if split {
        for &id in &opts.ids {
            out.push(compare(e, id, opts));
        }
    } else {
        out.push(record(e, "classify", "oracle", None, SweepStatus::Skipped));
    }
    if opts.properties {
        properties(e, &mut out);
    }
    out
}

/// Compares the profile route with the oracle on every elementary split
/// matroid of the corpus, and runs the property checks. Output order is
/// deterministic.
pub fn consistency_sweep(opts: &SweepOptions) -> Result<SweepSummary> {
    if opts.max_n > 10 {
        return Err(MvError::TooLarge(format!("sweep needs max_n <= 10, got {}", opts.max_n)));
    }
    let mut copts = opts.corpus.clone();
    copts.max_n = opts.max_n;
    let entries = corpus(&copts)?;
    let per = crate::par::map(&entries, |e| sweep_entry(e, opts));
    Ok(SweepSummary { records: per.into_iter().flatten().collect() })
}
