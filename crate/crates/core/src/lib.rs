//! Projectors onto closed convex cones intersected with balls and spheres,
//! and first-order methods that use them to test copositivity.
//!
//! The crate is `no_std` and only needs `alloc`. Everything is a pure
//! function of its inputs, so values can be shared across threads freely.
//!
//! Modules:
//!
//! - [`linalg`]: dense vectors, symmetric matrices and a Jacobi eigensolver.
//! - [`nnls`]: nonnegative least squares, used to project onto cones spanned
//!   by arbitrary finite generator sets.
//! - [`projections`]: every projector and distance formula, with set-valued
//!   outcomes reported explicitly.
//! - [`solvers`]: PGM, FISTA, a proximal distance MM scheme and two
//!   Douglas–Rachford variants for `min ½⟨x, Mx⟩` over `ℝ₊ᴺ ∩ S(0,1)`.
//! - [`copositivity`]: an exact face-enumeration oracle for `μ(M)`, random
//!   labelled matrices and the benchmark protocol.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod copositivity;
mod error;
pub mod linalg;
pub(crate) mod math;
pub mod nnls;
pub mod projections;
pub mod solvers;

pub use error::{Error, Result};
pub use linalg::{EigenDecomposition, SymMatrix, Vector};
