//! Finite-dimensional operator-algebra numerics.
//!
//! Everything here works on dense complex matrices and is `no_std` (with
//! `alloc`). The crate covers:
//!
//! * [`matrix`] and [`spectral`]: complex matrix arithmetic, the normalized
//!   trace, the GNS inner product `τ(AB^⋇)`, Hermitian eigendecomposition and
//!   the exponential of normal matrices.
//! * [`clifford`]: complexified Clifford algebras as matrix towers
//!   `𝔪₁ ⊂ 𝔪₂ ⊂ 𝔪₄ ⊂ …` with trace-preserving embeddings.
//! * [`curvature`]: the Hodge star on `Λ²ℝ⁴`, curvature operators in
//!   (anti)self-dual block form and closed-form homogeneous 4-manifolds.
//! * [`einstein`]: refinements `(𝔯, *)` and the linear quantum vacuum
//!   Einstein equation with its averaging solver.
//! * [`dynamics`]: the periodic Hodge flow `A ↦ *ᵗA*⁻ᵗ`, its Hamiltonian,
//!   perturbed flows and the formal temperature.
//! * [`torus`]: surface states on the flat 4-torus and their stationarity.
//! * [`gns`]: the GNS construction for multi-matrix algebras and the
//!   coupling-constant analog `γ = τ(P)`.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod clifford;
pub mod curvature;
pub mod dynamics;
pub mod einstein;
mod error;
pub mod gns;
pub mod matrix;
pub mod spectral;
pub mod tol;
pub mod torus;

pub use error::{Error, Result};
pub use matrix::{C64, ComplexMatrix};
