//! Numerical-radius toolkit for dense complex matrices.
//!
//! The crate computes the numerical radius w(T) and its relatives (Crawford
//! number, rotated Hermitian family, numerical-range boundary), a family of
//! upper and lower bounds on w(T) that are sharper than the classical
//! `‖T‖/2 ≤ w(T) ≤ ‖T‖` sandwich, and applies the bounds to the Frobenius
//! companion matrix to localize zeros of monic complex polynomials.

pub mod bounds;
pub mod cli;
pub mod error;
pub mod linalg;
pub mod numrange;
pub mod polyzero;

pub use error::{Error, Result};
pub use linalg::{ComplexMatrix, EngineConfig};
