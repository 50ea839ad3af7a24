//! Exact computations on finite-dimensional multiplicative hom-Lie
//! superalgebras given by structure constants over the rationals.
//!
//! The crate is organized bottom-up:
//!
//! * [`linalg`]: exact rational matrices, canonical subspaces, kernels,
//!   polynomial splitting, supertrace.
//! * [`algebra`]: the [`HomSuperalgebra`] data model, axiom validation,
//!   powers of the twisting map and constructors (direct sum, quotient,
//!   restriction, endomorphism twist, catalog).
//! * [`invariants`]: center, centralizers, derived subalgebra, ideal
//!   predicates and the Killing form.
//! * [`derivations`]: spaces of α^s-derivations, inner derivations and
//!   supercommutators.
//! * [`completeness`]: completeness verdicts, the holomorph, centroid-based
//!   decomposition and the structural theorem checks.
//! * [`io`]: the algebra file format and analysis reports.

pub mod algebra;
pub mod completeness;
pub mod derivations;
pub mod error;
pub mod exec;
pub mod invariants;
pub mod io;
pub mod linalg;

pub use algebra::{catalog, HomSuperalgebra, Parity, ValidationReport};
pub use error::{Error, Result};
pub use exec::Exec;
pub use linalg::{Mat, Scalar, Subspace};
