//! Exact representation theory of finite-dimensional bound quiver algebras
//! over prime fields.
//!
//! The crate builds algebras `kQ/(I + J^m)` from a quiver presentation,
//! represents finitely generated right modules as quiver representations,
//! computes minimal projective covers and syzygies, decomposes modules into
//! indecomposables, and evaluates the Igusa-Todorov functions phi and psi
//! together with projective dimensions and a right-self-injectivity test.
//!
//! Everything is exact: matrices over `F_p` for module arithmetic, integer
//! matrices with fraction-free elimination for subgroup ranks. The crate is
//! `no_std` (it allocates but performs no IO); the companion `sylab` crate
//! carries the CLI and file formats.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod decomp;
pub mod field;
pub mod igusa_todorov;
pub mod matrix;
pub mod poly;
pub mod quiver;
pub mod rep;
pub mod sample;
pub mod zmatrix;

pub use algebra::FDAlgebra;
pub use field::PrimeField;
pub use matrix::FMatrix;
pub use quiver::{AlgebraSpec, Quiver, Relation};
pub use rep::{Morphism, Representation};
pub use zmatrix::ZMatrix;
