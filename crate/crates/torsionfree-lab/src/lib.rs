//! Exact computational homological algebra for finite-dimensional algebras.
//!
//! The crate computes, over GF(p) or the rationals:
//!
//! * bound quiver algebras, structure-constant algebras, Jacobson radicals;
//! * the module category at desk scale: hom spaces, kernels/cokernels,
//!   pushouts, duals, extensions, seeded random modules;
//! * homological invariants: projective resolutions and syzygies, transposes,
//!   Ext groups, self-injective / projective / Gorenstein / torsionfree /
//!   left-orthogonal dimensions, torsionfreeness certificates;
//! * constructive embeddings (cosyzygy embeddings, torsionfree compression,
//!   finite-projective-dimension embeddings);
//! * a seeded falsification harness that stress-tests the classical
//!   equivalences between these invariants and reports counterexample
//!   witnesses as reproducible JSON.

pub mod algebra;
pub mod error;
pub mod field;
pub mod harness;
pub mod homology;
pub mod io;
pub mod linalg;
pub mod module;
pub mod rng;

pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use linalg::{kernel_basis, rank, rref, solve_all, Mat, Subspace};
