//! Exact-arithmetic engine for finite-dimensional Jordan algebras.
//!
//! The crate represents a Jordan algebra by rational structure constants,
//! validates the axioms by full linearization, and builds the annihilator
//! calculus on top: quadratic representations, Peirce decompositions, range
//! idempotents, the idempotent lattice, Rickart/Baer condition checkers,
//! decomposition into simple summands with classification by frame size and
//! Peirce coordinate dimension, and a bridge to associative *-algebras whose
//! self-adjoint parts realize the same structure.
//!
//! Every verdict the engine emits is either decided exactly over ℚ or
//! accompanied by a certificate/witness; a small float lane exists solely
//! for spectral splits with irrational roots.
//!
//! Start with the `examples/` directory: each file is a runnable tour of one
//! capability (`cargo run --example identity_fuzzing`, …). The `jalg` binary
//! wraps the same library behind file-based subcommands.

pub mod algebra;
pub mod annihilator;
pub mod catalog;
pub mod error;
pub mod floatmode;
pub mod identities;
pub mod idempotent;
pub mod io;
pub mod linalg;
pub mod output;
pub mod poly;
pub mod rng;
pub mod scalar;
pub mod star;
pub mod structure;
pub mod subspace;

pub use algebra::{Algebra, AlgebraTable, Element, LinearOperator};
pub use error::{Error, Result};
pub use scalar::{rat, ratio, Rat};
