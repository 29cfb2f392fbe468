//! Pointwise 4-dimensional geometry on `Λ²ℝ⁴`.
//!
//! The standard basis is `(e₁₂, e₁₃, e₁₄, e₂₃, e₂₄, e₃₄)` with orientation
//! `e₁∧e₂∧e₃∧e₄`. Curvature operators are stored in the (anti)self-dual
//! basis, where the Hodge star is `diag(1,1,1,−1,−1,−1)` and
//!
//! ```text
//! R = [ Scal/12 + W⁺   Ric₀          ]
//!     [ Ric₀ᵀ          Scal/12 + W⁻  ]
//! ```
//!
//! Exemplar manifolds are homogeneous with unit volume, so their operators
//! are constant in an orthonormal frame and integrals reduce to pointwise
//! traces.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::matrix::ComplexMatrix;
use crate::{tol, Error, Result};

pub type Mat3 = [[f64; 3]; 3];

const ZERO3: Mat3 = [[0.0; 3]; 3];

fn trace3(m: &Mat3) -> f64 {
    m[0][0] + m[1][1] + m[2][2]
}

fn asymmetry3(m: &Mat3) -> f64 {
    let mut s: f64 = 0.0;
    for i in 0..3 {
        for j in 0..3 {
            s = s.max((m[i][j] - m[j][i]).abs());
        }
    }
    s
}

fn norm3(m: &Mat3) -> f64 {
    libm::sqrt(m.iter().flatten().map(|x| x * x).sum::<f64>())
}

/// Hodge star on `Λ²ℝ⁴` and the orthogonal change to the (anti)self-dual
/// basis.
#[derive(Debug, Clone, PartialEq)]
pub struct HodgeFrame {
    /// `*` in the standard basis.
    pub star_standard: ComplexMatrix,
    /// Orthogonal `B` whose rows are `(e₁₂+e₃₄)/√2, (e₁₃−e₂₄)/√2,
    /// (e₁₄+e₂₃)/√2, (e₁₂−e₃₄)/√2, (e₁₃+e₂₄)/√2, (e₁₄−e₂₃)/√2`, so that
    /// `B * Bᵀ = diag(1,1,1,−1,−1,−1)`.
    pub basis_change: ComplexMatrix,
}

impl HodgeFrame {
    /// `*` in the (anti)self-dual basis.
    pub fn star_pm(&self) -> ComplexMatrix {
        self.to_pm(&self.star_standard)
    }

    /// `B R Bᵀ`: standard basis to (anti)self-dual basis.
    pub fn to_pm(&self, r_standard: &ComplexMatrix) -> ComplexMatrix {
        &(&self.basis_change * r_standard) * &self.basis_change.transpose()
    }

    /// `Bᵀ R B`: (anti)self-dual basis to standard basis.
    pub fn to_standard(&self, r_pm: &ComplexMatrix) -> ComplexMatrix {
        &(&self.basis_change.transpose() * r_pm) * &self.basis_change
    }
}

/// `*e₁₂ = e₃₄`, `*e₁₃ = −e₂₄`, `*e₁₄ = e₂₃` and their symmetric partners.
pub fn standard_star() -> HodgeFrame {
    #[rustfmt::skip]
    let star = [
        0.0, 0.0, 0.0, 0.0, 0.0, 1.0,
        0.0, 0.0, 0.0, 0.0, -1.0, 0.0,
        0.0, 0.0, 0.0, 1.0, 0.0, 0.0,
        0.0, 0.0, 1.0, 0.0, 0.0, 0.0,
        0.0, -1.0, 0.0, 0.0, 0.0, 0.0,
        1.0, 0.0, 0.0, 0.0, 0.0, 0.0,
    ];
    let h = core::f64::consts::FRAC_1_SQRT_2;
    #[rustfmt::skip]
    let basis = [
        h, 0.0, 0.0, 0.0, 0.0, h,
        0.0, h, 0.0, 0.0, -h, 0.0,
        0.0, 0.0, h, h, 0.0, 0.0,
        h, 0.0, 0.0, 0.0, 0.0, -h,
        0.0, h, 0.0, 0.0, h, 0.0,
        0.0, 0.0, h, -h, 0.0, 0.0,
    ];
    HodgeFrame {
        star_standard: ComplexMatrix::from_real(6, 6, &star),
        basis_change: ComplexMatrix::from_real(6, 6, &basis),
    }
}

/// `diag(1,1,1,−1,−1,−1)`.
pub fn star_in_pm_basis() -> ComplexMatrix {
    ComplexMatrix::from_real_diag(&[1.0, 1.0, 1.0, -1.0, -1.0, -1.0])
}

/// Block data of a 4-dimensional curvature operator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvatureOperator {
    pub scal: f64,
    pub weyl_plus: Mat3,
    pub weyl_minus: Mat3,
    pub ric0: Mat3,
}

impl CurvatureOperator {
    /// Validates that both Weyl blocks are symmetric and traceless.
    pub fn new(scal: f64, weyl_plus: Mat3, weyl_minus: Mat3, ric0: Mat3) -> Result<Self> {
        let c = Self { scal, weyl_plus, weyl_minus, ric0 };
        c.validate()?;
        Ok(c)
    }

    pub fn zero() -> Self {
        Self { scal: 0.0, weyl_plus: ZERO3, weyl_minus: ZERO3, ric0: ZERO3 }
    }

    fn validate(&self) -> Result<()> {
        if !self.scal.is_finite()
            || [self.weyl_plus, self.weyl_minus, self.ric0].iter().flatten().flatten().any(|x| !x.is_finite())
        {
            return Err(Error::NonFinite);
        }
        for w in [&self.weyl_plus, &self.weyl_minus] {
            let scale = norm3(w).max(1.0);
            let asym = asymmetry3(w);
            if asym > tol::TIGHT * scale {
                return Err(Error::NotSymmetric { residual: asym });
            }
            let t = trace3(w);
            if t.abs() > tol::TIGHT * scale {
                return Err(Error::NotTraceless { trace: t });
            }
        }
        Ok(())
    }

    /// The assembled `6×6` operator in the (anti)self-dual basis.
    pub fn matrix(&self) -> ComplexMatrix {
        let s = self.scal / 12.0;
        ComplexMatrix::from_fn(6, 6, |r, c| {
            let x = match (r < 3, c < 3) {
                (true, true) => self.weyl_plus[r][c] + if r == c { s } else { 0.0 },
                (false, false) => self.weyl_minus[r - 3][c - 3] + if r == c { s } else { 0.0 },
                (true, false) => self.ric0[r][c - 3],
                (false, true) => self.ric0[c][r - 3],
            };
            crate::C64::new(x, 0.0)
        })
    }

    /// Frobenius norm of the traceless Ricci block.
    pub fn ric0_norm(&self) -> f64 {
        norm3(&self.ric0)
    }

    /// `‖*R − R*‖_F` with `*` in the (anti)self-dual basis.
    pub fn einstein_commutator_norm(&self) -> f64 {
        star_in_pm_basis().commutator(&self.matrix()).frobenius_norm()
    }

    /// Largest entrywise difference of the block data.
    pub fn max_difference(&self, other: &Self) -> f64 {
        let mut d = (self.scal - other.scal).abs();
        for (a, b) in [
            (&self.weyl_plus, &other.weyl_plus),
            (&self.weyl_minus, &other.weyl_minus),
            (&self.ric0, &other.ric0),
        ] {
            for (x, y) in a.iter().flatten().zip(b.iter().flatten()) {
                d = d.max((x - y).abs());
            }
        }
        d
    }
}

/// `[[Scal/12 + W⁺, Ric₀], [Ric₀ᵀ, Scal/12 + W⁻]]`.
pub fn assemble_curvature(c: &CurvatureOperator) -> Result<ComplexMatrix> {
    c.validate()?;
    Ok(c.matrix())
}

/// Left inverse of [`assemble_curvature`]: `Scal = 2·trace(R)`, Weyl blocks
/// are the traceless parts of the diagonal blocks and `Ric₀` is the upper
/// right block.
pub fn decompose_curvature(r: &ComplexMatrix) -> Result<CurvatureOperator> {
    if r.shape() != (6, 6) {
        return Err(Error::ShapeMismatch { expected: (6, 6), found: r.shape() });
    }
    let scale = r.frobenius_norm().max(1.0);
    let asym = (r - &r.transpose()).frobenius_norm().max(r.max_imag());
    if asym > tol::DEFAULT * scale {
        return Err(Error::NotSymmetric { residual: asym });
    }
    let sym = (r + &r.transpose()).scale_real(0.5);
    let at = |i: usize, j: usize| sym[(i, j)].re;
    let mut upper = ZERO3;
    let mut lower = ZERO3;
    let mut ric0 = ZERO3;
    for i in 0..3 {
        for j in 0..3 {
            upper[i][j] = at(i, j);
            lower[i][j] = at(i + 3, j + 3);
            ric0[i][j] = at(i, j + 3);
        }
    }
    let traceless = |m: &mut Mat3| {
        let t = trace3(m) / 3.0;
        for (i, row) in m.iter_mut().enumerate() {
            row[i] -= t;
        }
    };
    let scal = 2.0 * (trace3(&upper) + trace3(&lower));
    traceless(&mut upper);
    traceless(&mut lower);
    Ok(CurvatureOperator { scal, weyl_plus: upper, weyl_minus: lower, ric0 })
}

/// The closed-form exemplar families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Exemplar {
    /// Round 4-sphere of radius `r`.
    S4,
    /// Flat 4-torus.
    T4Flat,
    /// Product of round 2-spheres of radii `r₁`, `r₂`.
    S2xS2,
    /// Fubini–Study `CP²` with scale `λ` (holomorphic sectional curvature `4/λ`).
    Cp2,
}

impl Exemplar {
    pub const ALL: [Exemplar; 4] = [Exemplar::S4, Exemplar::T4Flat, Exemplar::S2xS2, Exemplar::Cp2];

    pub fn name(self) -> &'static str {
        match self {
            Exemplar::S4 => "s4",
            Exemplar::T4Flat => "t4_flat",
            Exemplar::S2xS2 => "s2xs2",
            Exemplar::Cp2 => "cp2",
        }
    }

    pub fn param_count(self) -> usize {
        match self {
            Exemplar::S4 | Exemplar::Cp2 => 1,
            Exemplar::T4Flat => 0,
            Exemplar::S2xS2 => 2,
        }
    }
}

impl fmt::Display for Exemplar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Exemplar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Exemplar::ALL.into_iter().find(|e| e.name() == s).ok_or(Error::UnknownExemplar)
    }
}

/// A homogeneous unit-volume model `(M, g)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ManifoldModel {
    pub name: Exemplar,
    pub params: Vec<f64>,
    pub curvature: CurvatureOperator,
    pub expected_einstein: bool,
    pub expected_lambda: Option<f64>,
}

impl ManifoldModel {
    /// Curvature operator in the (anti)self-dual basis.
    pub fn operator(&self) -> ComplexMatrix {
        self.curvature.matrix()
    }

    /// `Scal / 4`, the cosmological constant when the model is Einstein.
    pub fn lambda_from_scal(&self) -> f64 {
        self.curvature.scal / 4.0
    }

    pub fn label(&self) -> String {
        use core::fmt::Write;
        let mut s = String::from(self.name.name());
        let _ = write!(s, "{:?}", self.params);
        s
    }
}

/// Builds the exemplar `name` with the given radii or scale.
pub fn exemplar(name: Exemplar, params: &[f64]) -> Result<ManifoldModel> {
    if params.len() != name.param_count() {
        return Err(Error::BadParameters { reason: "wrong number of parameters for exemplar" });
    }
    if params.iter().any(|&p| !(p.is_finite() && p > 0.0)) {
        return Err(Error::BadParameters { reason: "exemplar parameters must be positive" });
    }
    let (curvature, einstein, lambda) = match name {
        Exemplar::S4 => {
            let k = 1.0 / (params[0] * params[0]);
            (CurvatureOperator { scal: 12.0 * k, ..CurvatureOperator::zero() }, true, Some(3.0 * k))
        }
        Exemplar::T4Flat => (CurvatureOperator::zero(), true, Some(0.0)),
        Exemplar::S2xS2 => {
            let (k1, k2) = (1.0 / (params[0] * params[0]), 1.0 / (params[1] * params[1]));
            let mut standard = ComplexMatrix::zeros(6, 6);
            standard[(0, 0)] = crate::C64::new(k1, 0.0);
            standard[(5, 5)] = crate::C64::new(k2, 0.0);
            let c = decompose_curvature(&standard_star().to_pm(&standard))?;
            let einstein = params[0] == params[1];
            (c, einstein, einstein.then_some(k1))
        }
        Exemplar::Cp2 => {
            let inv = 1.0 / params[0];
            let c = CurvatureOperator {
                scal: 24.0 * inv,
                weyl_plus: [[4.0 * inv, 0.0, 0.0], [0.0, -2.0 * inv, 0.0], [0.0, 0.0, -2.0 * inv]],
                ..CurvatureOperator::zero()
            };
            (c, true, Some(6.0 * inv))
        }
    };
    Ok(ManifoldModel {
        name,
        params: params.to_vec(),
        curvature,
        expected_einstein: einstein,
        expected_lambda: lambda,
    })
}

/// `τ(R) = (1/6) Σᵢ wᵢ·trace(Rᵢ)` for a normalized-volume quadrature of
/// pointwise `6×6` operators.
pub fn tau_operator(quadrature: &[(f64, ComplexMatrix)]) -> Result<f64> {
    let mut total = 0.0;
    let mut acc = 0.0;
    for (w, r) in quadrature {
        if r.shape() != (6, 6) {
            return Err(Error::ShapeMismatch { expected: (6, 6), found: r.shape() });
        }
        if !(*w >= 0.0) {
            return Err(Error::BadParameters { reason: "quadrature weights must be non-negative" });
        }
        total += w;
        acc += w * r.trace().re;
    }
    if (total - 1.0).abs() > tol::DEFAULT {
        return Err(Error::WeightsNotNormalized { sum: total });
    }
    Ok(acc / 6.0)
}

/// Single-sample quadrature, exact for the homogeneous exemplars.
pub fn tau_constant(r: &ComplexMatrix) -> Result<f64> {
    tau_operator(&[(1.0, r.clone())])
}

/// `|τ(R*)| = |(1/6)·trace(R·*)|`, both operators in the (anti)self-dual
/// basis of `frame`.
pub fn bianchi_residual(r_pm: &ComplexMatrix, frame: &HodgeFrame) -> Result<f64> {
    if r_pm.shape() != (6, 6) {
        return Err(Error::ShapeMismatch { expected: (6, 6), found: r_pm.shape() });
    }
    Ok(((r_pm * &frame.star_pm()).trace() / 6.0).norm())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::C64;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_block(rng: &mut impl Rng) -> CurvatureOperator {
        let mut sym_traceless = || {
            let mut m = ZERO3;
            for i in 0..3 {
                for j in i..3 {
                    let x = rng.gen_range(-2.0..2.0);
                    m[i][j] = x;
                    m[j][i] = x;
                }
            }
            let t = trace3(&m) / 3.0;
            for (i, row) in m.iter_mut().enumerate() {
                row[i] -= t;
            }
            m
        };
        let (wp, wm) = (sym_traceless(), sym_traceless());
        let mut ric0 = ZERO3;
        for x in ric0.iter_mut().flatten() {
            *x = rng.gen_range(-1.0..1.0);
        }
        CurvatureOperator::new(rng.gen_range(-10.0..10.0), wp, wm, ric0).unwrap()
    }

    #[test]
    fn standard_star_is_a_balanced_involution() {
        let f = standard_star();
        let s = &f.star_standard;
        assert_eq!(s * s, ComplexMatrix::identity(6));
        assert_eq!(s.transpose(), *s);
        assert_eq!(s.trace(), C64::new(0.0, 0.0));
        let btb = &f.basis_change.transpose() * &f.basis_change;
        assert!((&btb - &ComplexMatrix::identity(6)).frobenius_norm() < 1e-15);
        assert!((&f.star_pm() - &star_in_pm_basis()).frobenius_norm() < 1e-15);
    }

    #[test]
    fn assemble_examples() {
        let sphere = CurvatureOperator { scal: 12.0, ..CurvatureOperator::zero() };
        assert_eq!(assemble_curvature(&sphere).unwrap(), ComplexMatrix::identity(6));
        assert_eq!(assemble_curvature(&CurvatureOperator::zero()).unwrap(), ComplexMatrix::zeros(6, 6));
    }

    #[test]
    fn assemble_rejects_bad_weyl() {
        let mut bad = CurvatureOperator::zero();
        bad.weyl_plus[0][0] = 1.0;
        assert!(matches!(assemble_curvature(&bad), Err(Error::NotTraceless { .. })));
        let mut asym = CurvatureOperator::zero();
        asym.weyl_minus[0][1] = 1.0;
        assert!(matches!(assemble_curvature(&asym), Err(Error::NotSymmetric { .. })));
    }

    #[test]
    fn random_blocks_trace_and_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..100 {
            let c = random_block(&mut rng);
            let r = assemble_curvature(&c).unwrap();
            assert_eq!(r.transpose(), r);
            assert!((r.trace().re - c.scal / 2.0).abs() < 1e-12);
            let back = decompose_curvature(&r).unwrap();
            assert!(back.max_difference(&c) < 1e-12);
            // any assembled operator satisfies the trace Bianchi identity
            assert!(bianchi_residual(&r, &standard_star()).unwrap() < 1e-12);
        }
    }

    #[test]
    fn decompose_examples() {
        let c = decompose_curvature(&ComplexMatrix::identity(6)).unwrap();
        assert_eq!(c, CurvatureOperator { scal: 12.0, ..CurvatureOperator::zero() });
        assert_eq!(decompose_curvature(&ComplexMatrix::zeros(6, 6)).unwrap(), CurvatureOperator::zero());
        let mut asym = ComplexMatrix::zeros(6, 6);
        asym[(0, 4)] = C64::new(1.0, 0.0);
        assert!(matches!(decompose_curvature(&asym), Err(Error::NotSymmetric { .. })));
    }

    #[test]
    fn exemplar_validation() {
        assert_eq!("klein".parse::<Exemplar>(), Err(Error::UnknownExemplar));
        assert!(exemplar(Exemplar::S4, &[0.0]).is_err());
        assert!(exemplar(Exemplar::S4, &[-1.0]).is_err());
        assert!(exemplar(Exemplar::S2xS2, &[1.0]).is_err());
        assert!(exemplar(Exemplar::T4Flat, &[]).is_ok());
    }

    #[test]
    fn s4_unit_sphere() {
        let m = exemplar(Exemplar::S4, &[1.0]).unwrap();
        assert_eq!(m.operator(), ComplexMatrix::identity(6));
        let tau = tau_constant(&m.operator()).unwrap();
        assert!((tau - 1.0).abs() < 1e-15);
        assert_eq!(m.expected_lambda, Some(3.0));
        assert!((tau - m.expected_lambda.unwrap() / 3.0).abs() < 1e-12);
        assert!(bianchi_residual(&m.operator(), &standard_star()).unwrap() < 1e-12);
    }

    #[test]
    fn flat_torus_vanishes() {
        let m = exemplar(Exemplar::T4Flat, &[]).unwrap();
        assert_eq!(tau_constant(&m.operator()).unwrap(), 0.0);
        assert_eq!(m.expected_lambda, Some(0.0));
    }

    #[test]
    fn s2xs2_blocks() {
        let eq = exemplar(Exemplar::S2xS2, &[1.0, 1.0]).unwrap();
        assert!(eq.curvature.ric0_norm() < 1e-12);
        assert!(eq.curvature.einstein_commutator_norm() < 1e-12);
        assert_eq!(eq.expected_lambda, Some(1.0));

        let neq = exemplar(Exemplar::S2xS2, &[1.0, 2.0]).unwrap();
        // (e₁₂, e₃₄) plane: off-diagonal ½(k₁ − k₂) = ½(1 − 1/4)
        assert!((neq.curvature.ric0[0][0] - 0.375).abs() < 1e-15);
        assert!(neq.curvature.ric0_norm() > 0.0);
        assert!(neq.curvature.einstein_commutator_norm() > 0.1);
        assert!(bianchi_residual(&neq.operator(), &standard_star()).unwrap() < 1e-12);
        assert!(!neq.expected_einstein);
    }

    #[test]
    fn cp2_tau() {
        let m = exemplar(Exemplar::Cp2, &[1.0]).unwrap();
        let tau = tau_constant(&m.operator()).unwrap();
        assert!((tau - 2.0).abs() < 1e-12);
        assert!((tau - m.expected_lambda.unwrap() / 3.0).abs() < 1e-12);
    }

    /// Fubini–Study Riemann tensor with holomorphic sectional curvature
    /// `c`, with `K(X, Y) = Rm(X, Y, Y, X)` and complex structure
    /// `Je₁ = e₂`, `Je₃ = e₄`.
    fn fubini_study_rm(c: f64) -> impl Fn(usize, usize, usize, usize) -> f64 {
        let j = |v: usize| -> (usize, f64) {
            match v {
                0 => (1, 1.0),
                1 => (0, -1.0),
                2 => (3, 1.0),
                _ => (2, -1.0),
            }
        };
        let g = |a: usize, b: usize| if a == b { 1.0 } else { 0.0 };
        let gj = move |a: usize, b: usize| {
            let (ja, s) = j(a);
            s * g(ja, b)
        };
        move |x, y, z, w| {
            c / 4.0
                * (g(x, w) * g(y, z) - g(x, z) * g(y, w) + gj(x, w) * gj(y, z)
                    - gj(x, z) * gj(y, w)
                    - 2.0 * gj(x, y) * gj(z, w))
        }
    }

    #[test]
    fn cp2_matches_brute_force_fubini_study() {
        const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        for lambda in [1.0, 0.5, 3.0] {
            let rm = fubini_study_rm(4.0 / lambda);
            // holomorphic and totally real sectional curvatures
            assert!((rm(0, 1, 1, 0) - 4.0 / lambda).abs() < 1e-14);
            assert!((rm(0, 2, 2, 0) - 1.0 / lambda).abs() < 1e-14);
            let standard = ComplexMatrix::from_fn(6, 6, |a, b| {
                let (i, jj) = PAIRS[a];
                let (k, l) = PAIRS[b];
                C64::new(rm(i, jj, l, k), 0.0)
            });
            assert_eq!(standard.transpose(), standard);
            let frame = standard_star();
            let pm = frame.to_pm(&standard);
            assert!(bianchi_residual(&pm, &frame).unwrap() < 1e-14);
            let brute = decompose_curvature(&pm).unwrap();
            let closed = exemplar(Exemplar::Cp2, &[lambda]).unwrap();
            assert!(brute.max_difference(&closed.curvature) < 1e-12, "{brute:?}");
            assert!((&pm - &closed.operator()).frobenius_norm() < 1e-12);
        }
    }

    #[test]
    fn quadrature_weights() {
        let r = ComplexMatrix::identity(6);
        let two = ComplexMatrix::identity(6).scale_real(2.0);
        let tau = tau_operator(&[(0.25, r.clone()), (0.75, two)]).unwrap();
        assert!((tau - 1.75).abs() < 1e-15);
        assert!(matches!(tau_operator(&[(0.5, r.clone())]), Err(Error::WeightsNotNormalized { .. })));
        assert!(tau_operator(&[(-0.5, r.clone()), (1.5, r)]).is_err());
    }

    #[test]
    fn star_violates_bianchi() {
        let f = standard_star();
        assert!((bianchi_residual(&f.star_pm(), &f).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn singer_thorpe_equivalence_over_random_params() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            for name in Exemplar::ALL {
                let params: Vec<f64> = (0..name.param_count()).map(|_| rng.gen_range(0.3..3.0)).collect();
                let m = exemplar(name, &params).unwrap();
                let comm = m.curvature.einstein_commutator_norm() < 1e-12;
                let ric = m.curvature.ric0_norm() < 1e-12;
                assert_eq!(comm, ric);
                assert_eq!(comm, m.expected_einstein, "{}", m.label());
                assert!(bianchi_residual(&m.operator(), &standard_star()).unwrap() < 1e-12);
                if let Some(l) = m.expected_lambda {
                    assert!((tau_constant(&m.operator()).unwrap() - l / 3.0).abs() < 1e-12);
                    assert!((m.lambda_from_scal() - l).abs() < 1e-12);
                }
            }
        }
    }
}
