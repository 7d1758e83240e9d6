//! Exact scalar arithmetic and dense matrix elimination.
//!
//! Two fields are provided: [`Rationals`] (exact, the default) and
//! [`PrimeField`] (residues modulo a prime above 10⁶). Generic code is
//! written against the [`Field`] trait; the elimination kernels live in
//! [`gauss`] (Gauss-Jordan over any field) and [`bareiss`] (fraction-free
//! integer elimination used for ℚ).

pub mod bareiss;
mod field;
pub mod gauss;
mod matrix;

pub use field::{is_prime_u64, Field, PrimeField, Rationals, DEFAULT_PRIME, MIN_PRIME};
pub use matrix::{dot, Matrix};
