//! Exact analysis of symmetry breaking under anyon condensation in pointed
//! modular tensor categories.
//!
//! A pointed modular category is a metric group (finite abelian group with a
//! nondegenerate `Q/Z`-valued quadratic form). Condensable algebras are
//! isotropic subgroups. A symmetry acts by isometries together with a
//! fractionalization 2-cocycle; whether it survives condensation is decided by
//! building the obstruction extension
//! `1 → Aut_C(A) → Aut_{C^G}(I(A)) → G → 1` as an explicit group and
//! enumerating its splittings.

pub mod error;
pub mod groups;
pub mod action;
pub mod cli;
pub mod cohomology;
pub mod condense;
pub mod metric;
pub mod qz;
pub mod universal;

pub use error::{Error, Limits, Result};
pub use qz::QZ;
