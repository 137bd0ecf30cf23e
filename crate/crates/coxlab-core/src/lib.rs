//! Exact computation with Coxeter polynomials of finite dimensional algebras.
//!
//! The crate computes Cartan and Coxeter matrices of bound quiver algebras,
//! their characteristic (Coxeter) polynomials, cyclotomic factorizations and
//! spectral classifications, closed-formula Coxeter polynomials for star,
//! canonical, extended canonical and supercanonical algebras, graph spectra
//! and the representability transform, and the combinatorial censuses behind
//! the spectral-radius-one and zero-relation tables.
//!
//! All classification decisions are made in exact integer (or rational)
//! arithmetic; floating point appears only in the two numeric reporting
//! routines [`coxeter::spectral_radius_numeric`] and [`coxeter::perron_vector`].
//!
//! The crate is `no_std` (with `alloc`); file formats, a CLI and parallel
//! drivers live in the companion `coxlab` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebras;
pub mod catalog;
pub mod coxeter;
mod error;
pub mod exactmath;
pub mod experiments;
pub mod spectra;

pub use error::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;
