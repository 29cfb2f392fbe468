//! Hodge dynamics `A ↦ *ᵗA*⁻ᵗ` with `*ᵗ = e^{t·log*}`.
//!
//! In the eigenbasis of `*`, `log* = diag(0, iπ)`, so `*ᵗ` is unitary and
//! periodic with period 2. The Hamiltonian is `H = (1/i)·log*` with
//! spectrum `{0, π}`.

use core::f64::consts::PI;

use crate::einstein::Refinement;
use crate::matrix::{C64, ComplexMatrix, I, ONE};
use crate::spectral::{diagonalize_normal, NormalEigen};
use crate::{tol, Error, Result};

/// Sample times used by [`HodgeGenerator::is_fixed_point`].
pub const FIXED_POINT_TIMES: [f64; 5] = [0.1, 0.25, 0.5, 1.0, 1.7];

/// `log* = iπ·(1 − *)/2` for a refinement `*`.
#[derive(Debug, Clone)]
pub struct HodgeGenerator {
    log_star: ComplexMatrix,
    refinement: Refinement,
    spectral: NormalEigen,
}

impl HodgeGenerator {
    /// Builds `log*` and checks `e^{log*} = *` to `1e-10`.
    pub fn new(refinement: Refinement) -> Result<Self> {
        let log_star = refinement.minus_projection().scale(C64::new(0.0, PI));
        let spectral = diagonalize_normal(&log_star)?;
        let generator = Self { log_star, refinement, spectral };
        let residual = (&generator.star_power(1.0) - generator.refinement.star()).frobenius_norm();
        if residual > tol::DEFAULT {
            return Err(Error::NotInvolution { residual });
        }
        Ok(generator)
    }

    pub fn log_star(&self) -> &ComplexMatrix {
        &self.log_star
    }

    pub fn refinement(&self) -> &Refinement {
        &self.refinement
    }

    pub fn star(&self) -> &ComplexMatrix {
        self.refinement.star()
    }

    pub fn dim(&self) -> usize {
        self.log_star.dim()
    }

    /// `*ᵗ = expm(t·log*)`, evaluated on the stored spectral decomposition
    /// of `log*`.
    pub fn star_power(&self, t: f64) -> ComplexMatrix {
        self.spectral.apply_fn(|z| (z * t).exp())
    }

    /// `*ᵗ A *⁻ᵗ`.
    pub fn evolve(&self, a: &ComplexMatrix, t: f64) -> Result<ComplexMatrix> {
        self.star().ensure_same_shape(a)?;
        let u = self.star_power(t);
        Ok(&(&u * a) * &u.conj_transpose())
    }

    /// Whether `A` is invariant under the flow.
    ///
    /// The commutator `‖[*, A]‖` decides; the sampled flow residual is
    /// reported alongside as a cross-check.
    pub fn is_fixed_point(&self, a: &ComplexMatrix, tol: f64) -> Result<FixedPointReport> {
        self.star().ensure_same_shape(a)?;
        let mut flow_residual: f64 = 0.0;
        for t in FIXED_POINT_TIMES {
            flow_residual = flow_residual.max((&self.evolve(a, t)? - a).frobenius_norm());
        }
        let commutator_norm = self.star().commutator(a).frobenius_norm();
        let fixed = commutator_norm < tol;
        Ok(FixedPointReport {
            commutator_norm,
            flow_residual,
            fixed,
            flow_agrees: (flow_residual < tol) == fixed,
        })
    }

    /// `H = (1/i)·log*`.
    pub fn hamiltonian(&self) -> ComplexMatrix {
        self.log_star.scale(-I)
    }

    /// `E = τ(H R)`; for a 6-dimensional curvature operator this is
    /// `(1/6)·trace(H R)`.
    pub fn energy(&self, r: &ComplexMatrix) -> Result<f64> {
        self.star().ensure_same_shape(r)?;
        Ok((&self.hamiltonian() * r).normalized_trace().re)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FixedPointReport {
    /// `‖*A − A*‖_F`.
    pub commutator_norm: f64,
    /// `max_t ‖*ᵗA*⁻ᵗ − A‖_F` over [`FIXED_POINT_TIMES`].
    pub flow_residual: f64,
    pub fixed: bool,
    pub flow_agrees: bool,
}

/// Perturbed involution `*' = *U` with `U = z·((1+*)/2 ± (1−*)/2)` and
/// `z = e^{iπε}`.
#[derive(Debug, Clone)]
pub struct PerturbedGenerator {
    base: HodgeGenerator,
    epsilon: f64,
    sign: i8,
    u: ComplexMatrix,
    log_u: NormalEigen,
}

impl PerturbedGenerator {
    pub fn base(&self) -> &HodgeGenerator {
        &self.base
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    /// `z(ε) = e^{iπε}`.
    pub fn phase(&self) -> C64 {
        C64::new(0.0, PI * self.epsilon).exp()
    }

    pub fn u(&self) -> &ComplexMatrix {
        &self.u
    }

    /// `*' = *U`.
    pub fn star_prime(&self) -> ComplexMatrix {
        self.base.star() * &self.u
    }

    /// `Uᵗ = e^{t·log U}` with `log U = iπε + (sign < 0 ? log* : 0)`.
    pub fn u_power(&self, t: f64) -> ComplexMatrix {
        self.log_u.apply_fn(|z| (z * t).exp())
    }

    /// `(*')ᵗ = *ᵗ Uᵗ`.
    pub fn power(&self, t: f64) -> ComplexMatrix {
        &self.base.star_power(t) * &self.u_power(t)
    }

    /// `(*')ᵗ A (*')⁻ᵗ`.
    pub fn evolve(&self, a: &ComplexMatrix, t: f64) -> Result<ComplexMatrix> {
        self.base.star().ensure_same_shape(a)?;
        let w = self.power(t);
        Ok(&(&w * a) * &w.conj_transpose())
    }
}

/// Builds `*' = *U` for `|ε| < 1/2` and `sign = ±1`.
pub fn perturbed_star(base: &HodgeGenerator, epsilon: f64, sign: i8) -> Result<PerturbedGenerator> {
    if !(epsilon.abs() < 0.5) {
        return Err(Error::BadParameters { reason: "perturbation needs |epsilon| < 1/2" });
    }
    if sign != 1 && sign != -1 {
        return Err(Error::BadParameters { reason: "perturbation sign must be +1 or -1" });
    }
    let r = base.refinement();
    let z = C64::new(0.0, PI * epsilon).exp();
    let u = (&r.plus_projection() + &r.minus_projection().scale_real(f64::from(sign))).scale(z);
    let mut log_u = ComplexMatrix::identity(base.dim()).scale(C64::new(0.0, PI * epsilon));
    if sign < 0 {
        log_u = &log_u + base.log_star();
    }
    let log_u = diagonalize_normal(&log_u)?;
    Ok(PerturbedGenerator { base: base.clone(), epsilon, sign, u, log_u })
}

// CODATA 2018.
pub const HBAR: f64 = 1.054_571_817e-34;
pub const BOLTZMANN: f64 = 1.380_649e-23;
pub const PLANCK_TIME: f64 = 5.391_247e-44;

/// Period and temperature of the Hodge flow in physical units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FormalTemperature {
    /// `ħβ = 2·t_Planck`, seconds.
    pub period_seconds: f64,
    /// `ħ / (2 k_B t_Planck)`, kelvin.
    pub temperature_kelvin: f64,
    /// `ħ / (k_B t_Planck)`, kelvin.
    pub planck_temperature: f64,
}

/// The flow has period 2 in units of `t_Planck`, i.e. `ħβ = 2 t_Planck`.
pub fn formal_temperature() -> FormalTemperature {
    let planck_temperature = HBAR / (BOLTZMANN * PLANCK_TIME);
    FormalTemperature {
        period_seconds: 2.0 * PLANCK_TIME,
        temperature_kelvin: HBAR / (2.0 * BOLTZMANN * PLANCK_TIME),
        planck_temperature,
    }
}

/// Unit-modulus check used by tests and reports.
pub fn unit_phase(z: C64) -> bool {
    (z.norm() - ONE.re).abs() < tol::TIGHT
}
