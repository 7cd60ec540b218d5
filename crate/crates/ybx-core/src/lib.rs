//! Structure monoids and Coxeter-like quotients of finite involutive
//! nondegenerate set-theoretic solutions of the Yang-Baxter equation.
//!
//! Starting from a solution table (or, equivalently, a bijective
//! RC-quasigroup), this crate
//!
//! - validates the defining laws by exhaustion and converts between the
//!   two presentations ([`solution`]),
//! - computes the class, the nested-product recursion, and the frozen
//!   words ([`rcq`]),
//! - realizes the structure monoid on `ℕⁿ` coordinates, with the Garside
//!   element `Δ` and its divisor lattice ([`monoid`]),
//! - builds the structure group on `ℤⁿ`, the finite quotient `W` of order
//!   `pⁿ`, its germ, presentations, and the exact sequence
//!   `1 → ℤⁿ → G → W → 1` ([`quotient`]),
//! - decides word equality straight from the presentation as independent
//!   ground truth ([`oracle`]),
//! - and bundles all per-instance consistency suites for the CLI
//!   ([`verify`]).

pub mod error;
pub mod graph;
pub mod io;
pub mod monoid;
pub mod oracle;
pub mod perm;
pub mod quotient;
pub mod rcq;
pub mod solution;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use graph::LabeledDigraph;
pub use io::Instance;
pub use monoid::MonCoord;
pub use perm::Perm;
pub use quotient::{GrpCoord, Presentation, WElem};
pub use rcq::{Check, RcReport, RcTable};
pub use solution::{Builtin, SolutionReport, SolutionTable};
pub use word::GenWord;
