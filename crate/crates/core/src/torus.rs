//! Surface states on the unit-volume flat 4-torus.
//!
//! Closed 2-forms with constant coefficients are vectors in `Λ²ℂ⁴` (standard
//! basis `e₁₂, …, e₃₄`), integrals over the coordinate 2-tori `Σᵢⱼ` pick out
//! coefficients, and the L² product is the Hermitian product of coefficient
//! vectors. A surface class `Σ` and a form `ω` give the functional
//!
//! ```text
//! F_{Σ,ω}(A) = (Aω, η_Σ) = η_Σ^⋇ A ω
//! ```
//!
//! on `𝔪₆(ℂ)`, with `η_Σ` the Poincaré dual of `Σ`.

use core::f64::consts::PI;
use core::fmt;

use crate::clifford::LAMBDA2_COMPLEMENT;
use crate::curvature::standard_star;
use crate::dynamics::{HodgeGenerator, PerturbedGenerator};
use crate::einstein::make_refinement;
use crate::matrix::{C64, ComplexMatrix, ZERO};
use crate::{tol, Error, Result};

/// Times at which the stationarity derivative is sampled.
pub const STATIONARITY_TIMES: [f64; 4] = [0.0, 0.3, 0.7, 1.5];

/// Central-difference step.
pub const STATIONARITY_STEP: f64 = 1e-5;

/// Integer combination of the coordinate 2-tori
/// `(Σ₁₂, Σ₁₃, Σ₁₄, Σ₂₃, Σ₂₄, Σ₃₄)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct TorusSurfaceClass {
    pub coefficients: [i64; 6],
}

impl TorusSurfaceClass {
    pub fn new(coefficients: [i64; 6]) -> Self {
        Self { coefficients }
    }

    /// The coordinate torus `Σᵢⱼ` at basis position `i`.
    pub fn basis(i: usize) -> Self {
        let mut coefficients = [0; 6];
        coefficients[i] = 1;
        Self { coefficients }
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for TorusSurfaceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.coefficients;
        write!(f, "{},{},{},{},{},{}", c[0], c[1], c[2], c[3], c[4], c[5])
    }
}

/// Constant-coefficient complex 2-form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TorusForm {
    pub coefficients: [C64; 6],
}

impl TorusForm {
    pub fn new(coefficients: [C64; 6]) -> Self {
        Self { coefficients }
    }

    pub fn from_real(coefficients: [f64; 6]) -> Self {
        Self { coefficients: coefficients.map(|x| C64::new(x, 0.0)) }
    }

    pub fn zero() -> Self {
        Self { coefficients: [ZERO; 6] }
    }

    pub fn basis(i: usize) -> Self {
        let mut form = Self::zero();
        form.coefficients[i] = C64::new(1.0, 0.0);
        form
    }

    pub fn scale(&self, s: C64) -> Self {
        Self { coefficients: self.coefficients.map(|c| c * s) }
    }

    /// `‖*ω − ω‖` for the standard star.
    pub fn self_dual_residual(&self) -> f64 {
        let star = standard_star().star_standard;
        let moved = star.apply(&self.coefficients);
        libm::sqrt(
            moved.iter().zip(&self.coefficients).map(|(a, b)| (a - b).norm_sqr()).sum::<f64>(),
        )
    }

    pub fn is_self_dual(&self) -> bool {
        self.self_dual_residual() <= tol::TIGHT
    }

    /// The form as a `6×1` column.
    pub fn column(&self) -> ComplexMatrix {
        ComplexMatrix::column(&self.coefficients)
    }
}

/// `η_Σ` with `∫ ω ∧ η_Σ = ∫_Σ ω` for every `ω`.
pub fn poincare_dual(sigma: &TorusSurfaceClass) -> TorusForm {
    let mut eta = TorusForm::zero();
    for (i, &(j, sign)) in LAMBDA2_COMPLEMENT.iter().enumerate() {
        eta.coefficients[j] = C64::new(sign * sigma.coefficients[i] as f64, 0.0);
    }
    eta
}

/// `∫_Σ ω = Σ cᵢⱼ ωᵢⱼ`.
pub fn integrate(sigma: &TorusSurfaceClass, omega: &TorusForm) -> C64 {
    sigma
        .coefficients
        .iter()
        .zip(&omega.coefficients)
        .map(|(&c, &w)| w * c as f64)
        .sum()
}

fn ensure_form_operator(a: &ComplexMatrix) -> Result<()> {
    if a.shape() != (6, 6) {
        return Err(Error::ShapeMismatch { expected: (6, 6), found: a.shape() });
    }
    Ok(())
}

/// `F_{Σ,ω}(A) = η_Σ^⋇ A ω`.
pub fn state_functional(sigma: &TorusSurfaceClass, omega: &TorusForm, a: &ComplexMatrix) -> Result<C64> {
    ensure_form_operator(a)?;
    let eta = poincare_dual(sigma);
    let a_omega = a.apply(&omega.coefficients);
    Ok(eta.coefficients.iter().zip(&a_omega).map(|(e, v)| e.conj() * v).sum())
}

/// Density `D = ω η_Σ^⋇` with `F_{Σ,ω}(A) = Trace(DA)`.
pub fn surface_density(sigma: &TorusSurfaceClass, omega: &TorusForm) -> ComplexMatrix {
    let eta = poincare_dual(sigma);
    &omega.column() * &eta.column().conj_transpose()
}

/// The Hodge generator of the standard star on `Λ²`.
pub fn torus_generator() -> HodgeGenerator {
    let refinement = make_refinement(standard_star().star_standard)
        .expect("the standard star is a refinement");
    HodgeGenerator::new(refinement).expect("log of the standard star")
}

fn max_derivative(
    sigma: &TorusSurfaceClass,
    omega: &TorusForm,
    a: &ComplexMatrix,
    flow: impl Fn(f64) -> Result<ComplexMatrix>,
) -> Result<f64> {
    ensure_form_operator(a)?;
    let h = STATIONARITY_STEP;
    let mut worst: f64 = 0.0;
    for t in STATIONARITY_TIMES {
        let ahead = state_functional(sigma, omega, &flow(t + h)?)?;
        let behind = state_functional(sigma, omega, &flow(t - h)?)?;
        worst = worst.max(((ahead - behind) / (2.0 * h)).norm());
    }
    Ok(worst)
}

/// `max_t |d/dt F_{Σ,ω}(*ᵗA*⁻ᵗ)|` by central differences.
///
/// `gen` must act on forms in the standard basis (see [`torus_generator`]).
pub fn stationarity_derivative(
    sigma: &TorusSurfaceClass,
    omega: &TorusForm,
    gen: &HodgeGenerator,
    a: &ComplexMatrix,
) -> Result<f64> {
    max_derivative(sigma, omega, a, |t| gen.evolve(a, t))
}

/// Same as [`stationarity_derivative`] under the perturbed flow `(*')ᵗ`.
pub fn perturbed_stationarity(
    sigma: &TorusSurfaceClass,
    omega: &TorusForm,
    pert: &PerturbedGenerator,
    a: &ComplexMatrix,
) -> Result<f64> {
    max_derivative(sigma, omega, a, |t| pert.evolve(a, t))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HomologyPairing {
    /// `(1/2πi)·∫_Σ ω`.
    pub value: C64,
    /// `∫_Σ ω = 0`, i.e. `F_{Σ,ω}(1) = 0`.
    pub degenerate: bool,
}

impl HomologyPairing {
    /// Distance of `value` to the nearest Gaussian integer.
    pub fn integrality_residual(&self) -> f64 {
        let v = self.value;
        (v - C64::new(libm::round(v.re), libm::round(v.im))).norm()
    }
}

pub fn homology_pairing(sigma: &TorusSurfaceClass, omega: &TorusForm) -> HomologyPairing {
    let integral = integrate(sigma, omega);
    HomologyPairing {
        value: integral / C64::new(0.0, 2.0 * PI),
        degenerate: integral.norm() < tol::TIGHT,
    }
}

/// `2πi·ω` for an integer-coefficient form `ω`.
pub fn integral_form(coefficients: [i64; 6]) -> TorusForm {
    TorusForm::from_real(coefficients.map(|c| c as f64)).scale(C64::new(0.0, 2.0 * PI))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::{indefinite_pairing_form, wedge_pairing};
    use crate::dynamics::perturbed_star;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn self_dual_pair() -> (TorusSurfaceClass, TorusForm) {
        (TorusSurfaceClass::new([1, 0, 0, 0, 0, 1]), TorusForm::from_real([1.0, 0.0, 0.0, 0.0, 0.0, 1.0]))
    }

    fn random_matrix(rng: &mut ChaCha8Rng) -> ComplexMatrix {
        ComplexMatrix::from_fn(6, 6, |_, _| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
    }

    /// `A = η ω^⋇ / 2` mixes the anti-self-dual `ω` into the self-dual `η`.
    fn witness(sigma: &TorusSurfaceClass, omega: &TorusForm) -> ComplexMatrix {
        let eta = poincare_dual(sigma);
        (&eta.column() * &omega.column().conj_transpose()).scale_real(0.5)
    }

    #[test]
    fn poincare_dual_examples() {
        let eta = poincare_dual(&TorusSurfaceClass::basis(0));
        assert_eq!(eta, TorusForm::basis(5));
        assert_eq!(poincare_dual(&TorusSurfaceClass::default()), TorusForm::zero());
        let eta = poincare_dual(&TorusSurfaceClass::new([1, 0, 0, 0, 0, 1]));
        assert_eq!(eta, TorusForm::from_real([1.0, 0.0, 0.0, 0.0, 0.0, 1.0]));
        assert!(eta.is_self_dual());
    }

    #[test]
    fn duality_on_all_basis_pairs() {
        for i in 0..6 {
            let sigma = TorusSurfaceClass::basis(i);
            let eta = poincare_dual(&sigma);
            let eta_re = eta.coefficients.map(|c| c.re);
            for j in 0..6 {
                let mut omega = [0.0; 6];
                omega[j] = 1.0;
                let paired = indefinite_pairing_form(&omega, &eta_re);
                let expected = if i == j { 1.0 } else { 0.0 };
                assert_eq!(paired, expected, "Σ{i} ω{j}");
                assert_eq!(integrate(&sigma, &TorusForm::from_real(omega)).re, expected);
            }
        }
    }

    #[test]
    fn state_functional_examples() {
        let (sigma, omega) = self_dual_pair();
        let id = ComplexMatrix::identity(6);
        assert_eq!(state_functional(&sigma, &omega, &id).unwrap(), C64::new(2.0, 0.0));
        assert_eq!(state_functional(&sigma, &omega, &ComplexMatrix::zeros(6, 6)).unwrap(), ZERO);
        let star = standard_star().star_standard;
        assert_eq!(
            state_functional(&sigma, &omega, &star).unwrap(),
            state_functional(&sigma, &omega, &id).unwrap()
        );
        assert!(state_functional(&sigma, &omega, &ComplexMatrix::identity(4)).is_err());
    }

    #[test]
    fn density_reproduces_functional() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let sigma = TorusSurfaceClass::new([2, -1, 0, 3, 1, 0]);
        let omega = TorusForm::new([
            C64::new(0.5, 1.0),
            C64::new(-1.0, 0.0),
            C64::new(0.0, 2.0),
            C64::new(1.0, 1.0),
            C64::new(0.0, 0.0),
            C64::new(3.0, -1.0),
        ]);
        let d = surface_density(&sigma, &omega);
        for _ in 0..10 {
            let a = random_matrix(&mut rng);
            let f = state_functional(&sigma, &omega, &a).unwrap();
            assert!((f - (&d * &a).trace()).norm() < 1e-12);
        }
    }

    #[test]
    fn self_dual_states_are_stationary() {
        let gen = torus_generator();
        let (sigma, omega) = self_dual_pair();
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..20 {
            let a = random_matrix(&mut rng);
            assert!(stationarity_derivative(&sigma, &omega, &gen, &a).unwrap() < 1e-8);
        }
        let id = ComplexMatrix::identity(6);
        let asd = TorusForm::from_real([1.0, 0.0, 0.0, 0.0, 0.0, -1.0]);
        assert_eq!(stationarity_derivative(&sigma, &asd, &gen, &id).unwrap(), 0.0);
    }

    #[test]
    fn anti_self_dual_witness_moves() {
        let gen = torus_generator();
        let sigma = TorusSurfaceClass::new([1, 0, 0, 0, 0, 1]);
        let omega = TorusForm::from_real([1.0, 0.0, 0.0, 0.0, 0.0, -1.0]);
        assert!(omega.self_dual_residual() > 1.0);
        let a = witness(&sigma, &omega);
        let d = stationarity_derivative(&sigma, &omega, &gen, &a).unwrap();
        // F(t) = e^{−iπt}·2, so |F'| = 2π
        assert!((d - 2.0 * PI).abs() < 1e-6, "{d}");
    }

    #[test]
    fn perturbed_flows() {
        let gen = torus_generator();
        let (sigma, omega) = self_dual_pair();
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let a = random_matrix(&mut rng);
        let p0 = perturbed_star(&gen, 0.0, 1).unwrap();
        let d0 = perturbed_stationarity(&sigma, &omega, &p0, &a).unwrap();
        let d = stationarity_derivative(&sigma, &omega, &gen, &a).unwrap();
        assert!((d0 - d).abs() < 1e-8);
        for eps in [-0.1, 0.1] {
            for sign in [1, -1] {
                let p = perturbed_star(&gen, eps, sign).unwrap();
                for _ in 0..5 {
                    let a = random_matrix(&mut rng);
                    assert!(perturbed_stationarity(&sigma, &omega, &p, &a).unwrap() < 1e-8);
                }
            }
        }
        let asd = TorusForm::from_real([1.0, 0.0, 0.0, 0.0, 0.0, -1.0]);
        let p = perturbed_star(&gen, 0.1, -1).unwrap();
        let w = witness(&sigma, &asd);
        assert!(perturbed_stationarity(&sigma, &asd, &p, &w).unwrap() > 1e-3);
    }

    #[test]
    fn homology_examples() {
        let s12 = TorusSurfaceClass::basis(0);
        let p = homology_pairing(&s12, &integral_form([1, 0, 0, 0, 0, 0]));
        assert!((p.value - C64::new(1.0, 0.0)).norm() < 1e-15 && !p.degenerate);
        let p = homology_pairing(&s12, &integral_form([0, 1, 0, 0, 0, 0]));
        assert!(p.degenerate && p.value == ZERO);
        let sigma = TorusSurfaceClass::new([2, 0, 0, 0, 0, 1]);
        let p = homology_pairing(&sigma, &integral_form([1, 0, 0, 0, 0, 3]));
        assert!((p.value - C64::new(5.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn homology_basis_pairs_are_integers() {
        for i in 0..6 {
            for j in 0..6 {
                let mut w = [0; 6];
                w[j] = 1;
                let p = homology_pairing(&TorusSurfaceClass::basis(i), &integral_form(w));
                assert!(p.integrality_residual() < 1e-15);
                assert_eq!(p.degenerate, i != j);
            }
        }
    }

    proptest! {
        #[test]
        fn integral_is_wedge_pairing(
            c in prop::array::uniform6(-5i64..5),
            w in prop::array::uniform6((-3.0f64..3.0, -3.0f64..3.0)),
        ) {
            let sigma = TorusSurfaceClass::new(c);
            let omega = TorusForm::new(w.map(|(re, im)| C64::new(re, im)));
            let eta = poincare_dual(&sigma);
            let lhs = wedge_pairing(&omega.coefficients, &eta.coefficients);
            prop_assert!((lhs - integrate(&sigma, &omega)).norm() < 1e-12);
        }

        #[test]
        fn homology_pairing_is_integral(
            c in prop::array::uniform6(-5i64..5),
            w in prop::array::uniform6(-5i64..5),
        ) {
            let p = homology_pairing(&TorusSurfaceClass::new(c), &integral_form(w));
            prop_assert!(p.integrality_residual() < 1e-12);
            let exact: i64 = c.iter().zip(&w).map(|(a, b)| a * b).sum();
            prop_assert!((p.value.re - exact as f64).abs() < 1e-12);
            prop_assert_eq!(p.degenerate, exact == 0);
        }
    }
}
