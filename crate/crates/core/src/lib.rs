//! Separators, separator-degree sets and bigraded Hilbert functions for
//! finite sets of points in P¹×P¹, computed with exact linear algebra.
//!
//! The crate is organised bottom-up:
//!
//! * [`linalg`]: exact fields (ℚ and 𝔽ₚ) with rank, nullspace and
//!   row-dependency computations on dense matrices.
//! * [`geometry`]: projective points, point sets, bihomogeneous forms and
//!   evaluation matrices.
//! * [`combinatorics`]: the incidence grid of a point set and the two
//!   combinatorial ACM detectors.
//! * [`separators`]: Hilbert functions, separator existence, minimal
//!   separator degrees and explicit separators.
//! * [`harness`]: fixtures, random generators, censuses and the invariant
//!   battery used to machine-check the ACM classification.

pub mod combinatorics;
pub mod error;
pub mod geometry;
pub mod harness;
pub mod linalg;
pub mod separators;

pub use error::{Error, Result};
