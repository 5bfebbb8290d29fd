//! Exact matroid invariants computed from the stressed-subset profile of
//! elementary split matroids, cross-checked against brute-force oracles.

pub mod closedform;
pub mod error;
pub mod exactalg;
pub mod master;
pub mod matroid;
pub mod oracle;
pub mod par;
pub mod polytope;
pub mod stressed;

pub use error::{ExchangeViolation, MvError, Result};
pub use exactalg::{BiPoly, Rat, UniPoly};
pub use matroid::Matroid;
