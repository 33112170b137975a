//! Exact and numeric reconstruction of the degree-ten hypersurface
//! `X ⊂ P⁵` cut out by the W(E6)-invariant `F`, together with the
//! group-theoretic, lattice and theta-function machinery needed to check its
//! properties.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the group
//! cache and the command line front end live in `picard-verify`.
//!
//! Module map:
//! - [`exact`]: rationals, `Q(ω)`, dense exact matrices.
//! - [`poly`]: sparse multivariate polynomials over `Q` or `Q(ω)`.
//! - [`symplectic`]: the named matrices in `Sp(8, Z)`, the Hermitian form
//!   `H_M`, fixed lattices, reduction to `U(4, F₄)`.
//! - [`weyl`]: the E6 root system, W(E6) generation, orbits, class C,
//!   invariants.
//! - [`variety`]: `F`, the 136 quadrics, factorizations, singular locus and
//!   boundary.
//! - [`theta`]: floating-point theta constants and the map Θ.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod error;
pub mod exact;
pub mod poly;
pub mod symplectic;
pub mod theta;
pub mod variety;
pub mod weyl;

pub use error::{ExactError, PolyError, SymplecticError, ThetaError, VarietyError, WeylError};
