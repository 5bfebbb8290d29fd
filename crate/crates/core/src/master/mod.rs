//! Evaluation of invariants through closed forms, stressed profiles or
//! definition-level oracles, and a consistency sweep comparing the routes.

mod corpus;
mod eval;
mod sweep;
mod value;

pub use corpus::{corpus, CorpusEntry, CorpusOptions};
pub use eval::{
    cuspidal_value, eval, eval_auto, eval_covaluative, eval_explicit, eval_profile, eval_valuative, oracle_value,
    sum_value, uniform_value, EvalRequest, Evaluation, Family, Route, RouteChoice, Source,
};
pub use sweep::{consistency_sweep, SweepOptions, SweepRecord, SweepStatus, SweepSummary};
pub use value::{vars_of, Value, ValueKind};
