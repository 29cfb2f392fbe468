//! Refinements and the quantum vacuum Einstein equation.
//!
//! A refinement is a self-adjoint involution `* ≠ 1` with `τ(*) = 0`. An
//! operator `Q` solves the quantum vacuum Einstein equation for `*` when
//!
//! ```text
//! Q^⋇ = Q,    τ(Q*) = 0,    *Q*⁻¹ = Q
//! ```
//!
//! and `Λ = 3τ(Q)` is its quantum cosmological constant. The equation is
//! linear, and [`solve_qvee`] produces a solution from any operator by
//! averaging.

use crate::matrix::{C64, ComplexMatrix};
use crate::{tol, Error, Result};

/// A validated involution `*` with balanced `±1` eigenspaces.
#[derive(Debug, Clone, PartialEq)]
pub struct Refinement {
    star: ComplexMatrix,
    plus_dim: usize,
    minus_dim: usize,
}

impl Refinement {
    pub fn star(&self) -> &ComplexMatrix {
        &self.star
    }

    pub fn dim(&self) -> usize {
        self.star.dim()
    }

    /// Dimensions of the `+1` and `−1` eigenspaces.
    pub fn eigenspace_dims(&self) -> (usize, usize) {
        (self.plus_dim, self.minus_dim)
    }

    /// `(1 + *)/2`.
    pub fn plus_projection(&self) -> ComplexMatrix {
        (&ComplexMatrix::identity(self.dim()) + &self.star).scale_real(0.5)
    }

    /// `(1 − *)/2`.
    pub fn minus_projection(&self) -> ComplexMatrix {
        (&ComplexMatrix::identity(self.dim()) - &self.star).scale_real(0.5)
    }
}

/// `sqrt(τ(AA^⋇))`, the norm induced by the normalized trace.
fn tau_norm(a: &ComplexMatrix) -> f64 {
    a.frobenius_norm() / libm::sqrt(a.rows() as f64)
}

/// Validates `*` (residuals measured in the `τ`-norm against `1e-12`).
pub fn make_refinement(star: ComplexMatrix) -> Result<Refinement> {
    let n = star.ensure_square()?;
    if !star.is_finite() {
        return Err(Error::NonFinite);
    }
    let id = ComplexMatrix::identity(n);
    if tau_norm(&(&star - &id)) <= tol::TIGHT {
        return Err(Error::RefinementIsIdentity);
    }
    let involution = tau_norm(&(&(&star * &star) - &id));
    if involution > tol::TIGHT {
        return Err(Error::NotInvolution { residual: involution });
    }
    let adjoint = tau_norm(&(&star - &star.conj_transpose()));
    if adjoint > tol::TIGHT {
        return Err(Error::NotSelfAdjoint { residual: adjoint });
    }
    let trace = star.normalized_trace();
    if trace.norm() > tol::TIGHT {
        return Err(Error::NonzeroTrace { trace: trace.re });
    }
    // eigenvalues are ±1, so Trace(*) = plus − minus = 0
    Ok(Refinement { star, plus_dim: n / 2, minus_dim: n / 2 })
}

/// Residuals of the three conditions and the cosmological constant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QveeReport {
    /// `‖Q − Q^⋇‖_F`.
    pub self_adjoint_residual: f64,
    /// `|τ(Q*)|`.
    pub bianchi_residual: f64,
    /// `‖*Q*⁻¹ − Q‖_F`.
    pub einstein_residual: f64,
    /// `3·Re τ(Q)`.
    pub lambda: f64,
    /// Tolerance the verdict was taken against.
    pub tol: f64,
    /// All three residuals are `≤ tol`.
    pub solves: bool,
}

fn ensure_dim(q: &ComplexMatrix, refinement: &Refinement) -> Result<()> {
    q.ensure_square()?;
    refinement.star.ensure_same_shape(q)
}

pub fn check_qvee(q: &ComplexMatrix, refinement: &Refinement, tol: f64) -> Result<QveeReport> {
    ensure_dim(q, refinement)?;
    let star = &refinement.star;
    let self_adjoint_residual = q.hermitian_residual();
    let bianchi_residual = (q * star).normalized_trace().norm();
    // *⁻¹ = * for an involution
    let conjugated = &(star * q) * star;
    let einstein_residual = (&conjugated - q).frobenius_norm();
    let lambda = 3.0 * q.normalized_trace().re;
    let solves =
        self_adjoint_residual <= tol && bianchi_residual <= tol && einstein_residual <= tol;
    Ok(QveeReport {
        self_adjoint_residual,
        bianchi_residual,
        einstein_residual,
        lambda,
        tol,
        solves,
    })
}

/// `Q = ½(S + *S*) − τ(S*)·*` with `S = ½(B + B^⋇)`.
///
/// `Re τ(Q) = Re τ(B)` for every `B`; for non-real `τ(B)` the imaginary part
/// is dropped by the symmetrization.
pub fn solve_qvee(b: &ComplexMatrix, refinement: &Refinement) -> Result<ComplexMatrix> {
    ensure_dim(b, refinement)?;
    let star = &refinement.star;
    let s = (b + &b.conj_transpose()).scale_real(0.5);
    let averaged = (&s + &(&(star * &s) * star)).scale_real(0.5);
    let bianchi: C64 = (&s * star).normalized_trace();
    Ok(&averaged - &star.scale(bianchi))
}
