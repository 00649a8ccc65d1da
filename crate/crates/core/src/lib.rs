//! Numerical exterior calculus over left-invariant hermitian frames on Lie
//! algebras.
//!
//! The crate computes the standard invariants of a hermitian metric given by
//! constant data on a Lie algebra frame — Kähler form, Lee form,
//! characteristic (Bismut) connection and its torsion — and classifies the
//! structure (Kähler, l.c.K., Lee-potential, Vaisman, generalized
//! Calabi-Eckmann), including the eigenspace decomposition of a parallel
//! torsion and the parallel-modification construction. A model catalog of
//! homogeneous Sasakian products and Hopf frames ships with the crate, and
//! the `homogenize` module solves the flat/hyperbolic homogenization ODEs
//! and the Heisenberg holonomy-area law.
//!
//! Conventions used throughout (all forms have constant frame coefficients):
//! * `omega(X, Y) = g(JX, Y)` is the Kähler form,
//! * `d` is the Chevalley-Eilenberg differential, so `da(X,Y) = -a([X,Y])`
//!   for a 1-form,
//! * the codifferential on even-dimensional frames is `delta = -*d*`,
//! * the volume form is `omega^m / m!`, i.e. orientation is fixed by `J`.

pub mod characteristic;
pub mod error;
pub mod homogenize;
pub mod io;
pub mod lie_frame;
pub mod models;
pub mod multilinear;
pub mod report;
pub mod sampling;
pub mod torsion_structure;

pub use error::{Error, Result};

/// Default tolerance for invariant checks; every catalog model has structure
/// constants of magnitude at most 2, so double precision leaves ample room.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Jacobi residual accepted at frame ingestion. Anything looser silently
/// breaks `d*d = 0` downstream.
pub const JACOBI_TOLERANCE: f64 = 1e-10;

/// Threshold on the Lee-form norm separating exact-zero Kähler cases from
/// genuinely non-Kähler models.
pub const LEE_NORM_THRESHOLD: f64 = 1e-6;

/// Eigenvalue pairs closer than this merge into one common eigenspace when
/// splitting the torsion endomorphisms.
pub const EIGENVALUE_CLUSTER_TOLERANCE: f64 = 1e-7;
