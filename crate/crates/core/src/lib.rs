//! Computational companion to the nonexistence theorem for
//! `N X^2 + 2^L 3^M = Y^N` with `gcd(NX, Y) = 1`.
//!
//! The crate is organised bottom-up:
//!
//! - [`exactmath`]: exact arithmetic in `Q(√d1, √d2)` and its quadratic subfields.
//! - [`lehmer`]: Lehmer pairs in `(R, Q)` form, Lehmer and companion numbers,
//!   defectiveness and the registry of exceptional defective pairs for `7 ≤ s ≤ 30`.
//! - [`classforms`]: class numbers of imaginary quadratic discriminants by
//!   counting reduced forms, and the analytic class number bounds.
//! - [`descent`]: constructive witnesses for representations `X^2 + dY^2 = k^Z`.
//! - [`identities`]: binomial sum identities, power expansions and the
//!   residue arguments used by the nonexistence proof.
//! - [`search`]: bounded exhaustive searches for the main and variant equations.

pub mod arith;
pub mod classforms;
pub mod descent;
pub mod error;
pub mod exactmath;
pub mod identities;
pub mod lehmer;
pub mod search;
pub mod serde_util;

pub use classforms::{ClassNumberResult, QuadForm};
pub use descent::{DescentInstance, DescentWitness};
pub use error::{Error, Result};
pub use exactmath::{Field, QuadSurd, Radical, RingElement};
pub use identities::{CandidateTuple, ExpansionKind, OddCaseParams};
pub use lehmer::{DefectReport, LehmerPair, TableEntry};
pub use search::{SearchConfig, SearchReport};
