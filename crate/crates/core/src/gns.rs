//! GNS construction for multi-matrix algebras `⊕ 𝔪_{kᵢ}(ℂ)`.
//!
//! The algebra carries the weighted trace `τ(⊕xᵢ) = Σ λᵢ·Trace(xᵢ)/kᵢ` and
//! the GNS space of `τ` is the algebra itself with `(x, y) = τ(xy^⋇)`. The
//! vectors `f = sqrt(kᵢ/λᵢ)·E_ab` form an orthonormal basis, and everything
//! below works in coordinates with respect to it.
//!
//! For a positive functional `φ` the null ideal `I_φ = {A : φ(A^⋇A) = 0}`
//! is a left ideal, `J = span I_φ I_φ^⋇` is a two-sided ideal and the left
//! regular representation restricted to `J^⊥` is the quotient
//! representation. Its coupling analog is `γ = τ(P_{J^⊥})`.

use alloc::vec;
use alloc::vec::Vec;
use core::str::FromStr;

use crate::matrix::{C64, ComplexMatrix, ONE, ZERO};
use crate::spectral::{eigh, psd_range_kernel, psd_rank};
use crate::torus::{homology_pairing, surface_density, state_functional, TorusForm, TorusSurfaceClass};
use crate::{tol, Error, Result};

/// Summands `(kᵢ, λᵢ)` with `Σ λᵢ = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteAlgebra {
    summands: Vec<(usize, f64)>,
}

impl FiniteAlgebra {
    pub fn new(summands: Vec<(usize, f64)>) -> Result<Self> {
        if summands.is_empty() {
            return Err(Error::BadAlgebra { reason: "no summands" });
        }
        for &(k, w) in &summands {
            if k == 0 {
                return Err(Error::BadAlgebra { reason: "summand dimension must be positive" });
            }
            if !(w.is_finite() && w > 0.0) {
                return Err(Error::BadAlgebra { reason: "weights must be positive" });
            }
        }
        let sum: f64 = summands.iter().map(|s| s.1).sum();
        if (sum - 1.0).abs() > tol::TIGHT {
            return Err(Error::WeightsNotNormalized { sum });
        }
        Ok(Self { summands })
    }

    /// `𝔪_k(ℂ)` with its normalized trace.
    pub fn matrix(k: usize) -> Result<Self> {
        Self::new(vec![(k, 1.0)])
    }

    pub fn summands(&self) -> &[(usize, f64)] {
        &self.summands
    }

    /// `Σ kᵢ²`.
    pub fn dim(&self) -> usize {
        self.summands.iter().map(|s| s.0 * s.0).sum()
    }

    /// Coordinate offset of each summand.
    fn offsets(&self) -> Vec<usize> {
        let mut off = Vec::with_capacity(self.summands.len());
        let mut acc = 0;
        for &(k, _) in &self.summands {
            off.push(acc);
            acc += k * k;
        }
        off
    }

    /// `(summand, a, b)` of basis vector `j`.
    fn locate(&self, mut j: usize) -> (usize, usize, usize) {
        for (i, &(k, _)) in self.summands.iter().enumerate() {
            if j < k * k {
                return (i, j / k, j % k);
            }
            j -= k * k;
        }
        panic!("basis index out of range")
    }

    fn scale(&self, i: usize) -> f64 {
        let (k, w) = self.summands[i];
        libm::sqrt(w / k as f64)
    }

    pub fn identity(&self) -> AlgebraElement {
        AlgebraElement { blocks: self.summands.iter().map(|s| ComplexMatrix::identity(s.0)).collect() }
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement { blocks: self.summands.iter().map(|s| ComplexMatrix::zeros(s.0, s.0)).collect() }
    }

    /// Orthonormal basis vector `f_j = sqrt(k/λ)·E_ab`.
    pub fn basis(&self, j: usize) -> AlgebraElement {
        let (i, a, b) = self.locate(j);
        let mut x = self.zero();
        x.blocks[i][(a, b)] = C64::new(1.0 / self.scale(i), 0.0);
        x
    }

    pub fn element(&self, blocks: Vec<ComplexMatrix>) -> Result<AlgebraElement> {
        if blocks.len() != self.summands.len() {
            return Err(Error::BadAlgebra { reason: "wrong number of blocks" });
        }
        for (b, &(k, _)) in blocks.iter().zip(&self.summands) {
            if b.shape() != (k, k) {
                return Err(Error::ShapeMismatch { expected: (k, k), found: b.shape() });
            }
        }
        Ok(AlgebraElement { blocks })
    }

    /// Coordinates of `x` in the orthonormal basis.
    pub fn coordinates(&self, x: &AlgebraElement) -> Vec<C64> {
        let mut c = Vec::with_capacity(self.dim());
        for (i, b) in x.blocks.iter().enumerate() {
            let s = self.scale(i);
            c.extend(b.as_slice().iter().map(|z| z * s));
        }
        c
    }

    pub fn from_coordinates(&self, c: &[C64]) -> AlgebraElement {
        let mut x = self.zero();
        for (i, off) in self.offsets().into_iter().enumerate() {
            let k = self.summands[i].0;
            let s = self.scale(i);
            for j in 0..k * k {
                x.blocks[i][(j / k, j % k)] = c[off + j] / s;
            }
        }
        x
    }

    /// `τ(x)`.
    pub fn trace(&self, x: &AlgebraElement) -> C64 {
        x.blocks.iter().zip(&self.summands).map(|(b, &(_, w))| b.normalized_trace() * w).sum()
    }

    /// `(x, y) = τ(xy^⋇)`.
    pub fn inner(&self, x: &AlgebraElement, y: &AlgebraElement) -> C64 {
        self.trace(&x.mul(&y.adjoint()))
    }

    /// Matrix of `v ↦ Xv` in coordinates: `⊕ Xᵢ ⊗ 1_{kᵢ}`.
    pub fn left_multiplication(&self, x: &AlgebraElement) -> ComplexMatrix {
        let n = self.dim();
        let mut l = ComplexMatrix::zeros(n, n);
        for (i, off) in self.offsets().into_iter().enumerate() {
            let k = self.summands[i].0;
            let xi = &x.blocks[i];
            for a in 0..k {
                for c in 0..k {
                    let v = xi[(a, c)];
                    if v == ZERO {
                        continue;
                    }
                    for b in 0..k {
                        l[(off + a * k + b, off + c * k + b)] = v;
                    }
                }
            }
        }
        l
    }
}

/// `"2:0.5,2:0.5"`.
impl FromStr for FiniteAlgebra {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut summands = Vec::new();
        for part in s.split(',') {
            let (k, w) = part
                .trim()
                .split_once(':')
                .ok_or(Error::BadAlgebra { reason: "expected k:weight" })?;
            let k = k.trim().parse().map_err(|_| Error::BadAlgebra { reason: "bad summand dimension" })?;
            let w = w.trim().parse().map_err(|_| Error::BadAlgebra { reason: "bad summand weight" })?;
            summands.push((k, w));
        }
        Self::new(summands)
    }
}

/// Block-diagonal element `⊕ xᵢ`.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraElement {
    pub blocks: Vec<ComplexMatrix>,
}

impl AlgebraElement {
    pub fn mul(&self, other: &Self) -> Self {
        Self { blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a * b).collect() }
    }

    pub fn adjoint(&self) -> Self {
        Self { blocks: self.blocks.iter().map(ComplexMatrix::conj_transpose).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self { blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a + b).collect() }
    }

    pub fn scale(&self, s: C64) -> Self {
        Self { blocks: self.blocks.iter().map(|b| b.scale(s)).collect() }
    }
}

/// `φ(⊕xᵢ) = Σ Trace(Dᵢxᵢ)` with `Dᵢ ⪰ 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraState {
    densities: Vec<ComplexMatrix>,
}

impl AlgebraState {
    /// Validates positivity (eigenvalues `≥ −1e−12`) and rescales to
    /// `φ(1) = 1` unless `φ = 0`.
    pub fn new(alg: &FiniteAlgebra, densities: Vec<ComplexMatrix>) -> Result<Self> {
        let densities = alg.element(densities)?.blocks;
        let mut mass = 0.0;
        for d in &densities {
            if !d.is_finite() {
                return Err(Error::NonFinite);
            }
            let residual = d.hermitian_residual();
            if residual > tol::DEFAULT * d.max_abs().max(1.0) {
                return Err(Error::NotSelfAdjoint { residual });
            }
            let lo = eigh(d)?.values[0];
            if lo < -tol::TIGHT {
                return Err(Error::NotPositive { min_eigenvalue: lo });
            }
            mass += d.trace().re;
        }
        if mass.abs() <= tol::TIGHT {
            return Ok(Self { densities });
        }
        Ok(Self { densities: densities.iter().map(|d| d.scale_real(1.0 / mass)).collect() })
    }

    /// The trace `τ` as a state.
    pub fn trace(alg: &FiniteAlgebra) -> Self {
        let densities = alg
            .summands()
            .iter()
            .map(|&(k, w)| ComplexMatrix::identity(k).scale_real(w / k as f64))
            .collect();
        Self { densities }
    }

    pub fn densities(&self) -> &[ComplexMatrix] {
        &self.densities
    }

    pub fn eval(&self, x: &AlgebraElement) -> C64 {
        self.densities.iter().zip(&x.blocks).map(|(d, b)| (d * b).trace()).sum()
    }
}

/// Orthonormal basis of `I_φ` with the left-ideal check.
#[derive(Debug, Clone)]
pub struct NullIdeal {
    /// Coordinate vectors, orthonormal in `C^N`.
    pub coordinates: Vec<Vec<C64>>,
    pub basis: Vec<AlgebraElement>,
    /// `max φ((XA)^⋇(XA))` over basis `X` and ideal basis `A`.
    pub left_ideal_residual: f64,
}

impl NullIdeal {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Orthogonal projection onto the ideal, in coordinates.
    pub fn projection(&self, n: usize) -> ComplexMatrix {
        projection(&self.coordinates, n)
    }
}

fn projection(vectors: &[Vec<C64>], n: usize) -> ComplexMatrix {
    let mut p = ComplexMatrix::zeros(n, n);
    for v in vectors {
        for r in 0..n {
            if v[r] == ZERO {
                continue;
            }
            for c in 0..n {
                p[(r, c)] += v[r] * v[c].conj();
            }
        }
    }
    p
}

/// Kernel of the Gram matrix `G_jk = φ(f_j^⋇ f_k)`.
pub fn gns_null_ideal(alg: &FiniteAlgebra, phi: &AlgebraState) -> Result<NullIdeal> {
    let n = alg.dim();
    let basis: Vec<AlgebraElement> = (0..n).map(|j| alg.basis(j)).collect();
    let adjoints: Vec<AlgebraElement> = basis.iter().map(AlgebraElement::adjoint).collect();
    let gram = ComplexMatrix::from_fn(n, n, |j, k| phi.eval(&adjoints[j].mul(&basis[k])));
    let (_, kernel) = psd_range_kernel(&gram, tol::RANK)?;
    // φ(A^⋇A) = c^⋇ G c for coordinates c of A
    let elements: Vec<AlgebraElement> = kernel.iter().map(|v| alg.from_coordinates(v)).collect();
    let mut left_ideal_residual: f64 = 0.0;
    for a in &elements {
        for x in &basis {
            let xa = x.mul(a);
            left_ideal_residual = left_ideal_residual.max(phi.eval(&xa.adjoint().mul(&xa)).norm());
        }
    }
    Ok(NullIdeal { coordinates: kernel, basis: elements, left_ideal_residual })
}

/// Quotient representation on `J^⊥` and the coupling analog.
#[derive(Debug, Clone)]
pub struct GnsRepresentation {
    algebra: FiniteAlgebra,
    /// Orthonormal basis of `J^⊥` as columns (`N × d`).
    complement: ComplexMatrix,
    pub ideal_dim: usize,
    pub j_dim: usize,
    /// `Σ λᵢ·rankᵢ(J^⊥)/kᵢ²`.
    pub gamma: f64,
    /// `‖P_{J^⊥} 1̂‖² = τ(P_{J^⊥})`.
    pub gamma_trace: f64,
    pub gamma_per_summand: Vec<f64>,
    pub left_ideal_residual: f64,
    /// `max ‖ρ(XY) − ρ(X)ρ(Y)‖_F` over basis pairs.
    pub multiplicativity_residual: f64,
    /// `max ‖ρ(X^⋇) − ρ(X)^⋇‖_F` over basis elements.
    pub star_residual: f64,
    /// `‖(1 − P_J)L_X P_J‖` summed over basis `X`; zero when `J` is a left
    /// submodule.
    pub submodule_residual: f64,
    /// Dimension of `ker ρ` as a subspace of the algebra.
    pub kernel_dim: usize,
}

impl GnsRepresentation {
    /// `ρ = 0` on the zero space, `γ = 0`.
    pub fn trivial(alg: &FiniteAlgebra) -> Self {
        let n = alg.dim();
        Self {
            algebra: alg.clone(),
            complement: ComplexMatrix::zeros(n, 0),
            ideal_dim: n,
            j_dim: n,
            gamma: 0.0,
            gamma_trace: 0.0,
            gamma_per_summand: vec![0.0; alg.summands().len()],
            left_ideal_residual: 0.0,
            multiplicativity_residual: 0.0,
            star_residual: 0.0,
            submodule_residual: 0.0,
            kernel_dim: n,
        }
    }

    pub fn algebra(&self) -> &FiniteAlgebra {
        &self.algebra
    }

    /// Dimension of `J^⊥`.
    pub fn dim(&self) -> usize {
        self.complement.cols()
    }

    pub fn is_trivial(&self) -> bool {
        self.dim() == 0
    }

    /// The state had no null vectors.
    pub fn faithful_state(&self) -> bool {
        self.ideal_dim == 0
    }

    pub fn is_faithful(&self) -> bool {
        self.kernel_dim == 0
    }

    /// `ρ(X) = W^⋇ L_X W`.
    pub fn rho(&self, x: &AlgebraElement) -> ComplexMatrix {
        let w = &self.complement;
        &(&w.conj_transpose() * &self.algebra.left_multiplication(x)) * w
    }

    pub fn gamma_agreement(&self) -> f64 {
        (self.gamma - self.gamma_trace).abs()
    }

    /// Largest residual among the representation checks.
    pub fn check_residual(&self) -> f64 {
        self.multiplicativity_residual
            .max(self.star_residual)
            .max(self.submodule_residual)
            .max(self.left_ideal_residual)
    }
}

fn columns(vectors: &[Vec<C64>], n: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(n, vectors.len(), |r, c| vectors[c][r])
}

pub fn gns_representation(alg: &FiniteAlgebra, phi: &AlgebraState) -> Result<GnsRepresentation> {
    let n = alg.dim();
    let ideal = gns_null_ideal(alg, phi)?;

    // J = span{A B^⋇}, as the range of Σ c c^⋇ over the products
    let mut spread = ComplexMatrix::zeros(n, n);
    for a in &ideal.basis {
        for b in &ideal.basis {
            let c = alg.coordinates(&a.mul(&b.adjoint()));
            spread = &spread + &projection(&[c], n);
        }
    }
    let (j_basis, complement) = psd_range_kernel(&spread, tol::RANK)?;
    if complement.is_empty() {
        let mut rep = GnsRepresentation::trivial(alg);
        rep.ideal_dim = ideal.dim();
        rep.left_ideal_residual = ideal.left_ideal_residual;
        return Ok(rep);
    }
    let p_perp = projection(&complement, n);
    let p_j = projection(&j_basis, n);

    let one = alg.coordinates(&alg.identity());
    let projected = p_perp.apply(&one);
    let gamma_trace = projected.iter().map(C64::norm_sqr).sum();

    let mut gamma_per_summand = Vec::with_capacity(alg.summands().len());
    for (i, off) in alg.offsets().into_iter().enumerate() {
        let (k, w) = alg.summands()[i];
        let rank = psd_rank(&p_perp.block(off, off, k * k, k * k))?;
        gamma_per_summand.push(w * rank as f64 / (k * k) as f64);
    }
    let gamma = gamma_per_summand.iter().sum();

    let mut rep = GnsRepresentation {
        algebra: alg.clone(),
        complement: columns(&complement, n),
        ideal_dim: ideal.dim(),
        j_dim: j_basis.len(),
        gamma,
        gamma_trace,
        gamma_per_summand,
        left_ideal_residual: ideal.left_ideal_residual,
        multiplicativity_residual: 0.0,
        star_residual: 0.0,
        submodule_residual: 0.0,
        kernel_dim: 0,
    };

    let basis: Vec<AlgebraElement> = (0..n).map(|j| alg.basis(j)).collect();
    let images: Vec<ComplexMatrix> = basis.iter().map(|x| rep.rho(x)).collect();
    let mut mult: f64 = 0.0;
    let mut star: f64 = 0.0;
    let mut submodule: f64 = 0.0;
    let id = ComplexMatrix::identity(n);
    for (j, x) in basis.iter().enumerate() {
        star = star.max((&rep.rho(&x.adjoint()) - &images[j].conj_transpose()).frobenius_norm());
        let leak = &(&(&id - &p_j) * &alg.left_multiplication(x)) * &p_j;
        submodule += leak.frobenius_norm();
        for (k, y) in basis.iter().enumerate() {
            let lhs = rep.rho(&x.mul(y));
            mult = mult.max((&lhs - &(&images[j] * &images[k])).frobenius_norm());
        }
    }
    rep.multiplicativity_residual = mult;
    rep.star_residual = star;
    rep.submodule_residual = submodule;

    // ker ρ: rank of the Gram matrix of the vectorized images
    let gram = ComplexMatrix::from_fn(n, n, |j, k| images[k].frobenius_inner(&images[j]));
    rep.kernel_dim = n - psd_rank(&gram)?;
    Ok(rep)
}

/// Representation attached to the surface state `F_{Σ,ω}` on `𝔪₆(ℂ)`.
///
/// A zero homology pairing means `F(1) = 0`; the ideal is then the whole
/// algebra and the representation is trivial. Otherwise the density
/// `ωη_Σ^⋇/F(1)` must be a positive functional.
pub fn surface_state_representation(
    sigma: &TorusSurfaceClass,
    omega: &TorusForm,
) -> Result<GnsRepresentation> {
    let alg = FiniteAlgebra::matrix(6)?;
    if homology_pairing(sigma, omega).degenerate {
        return Ok(GnsRepresentation::trivial(&alg));
    }
    let f1 = state_functional(sigma, omega, &ComplexMatrix::identity(6))?;
    if f1.norm() <= tol::TIGHT {
        return Ok(GnsRepresentation::trivial(&alg));
    }
    let density = surface_density(sigma, omega).scale(ONE / f1);
    let phi = AlgebraState::new(&alg, vec![density])?;
    gns_representation(&alg, &phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::operator_norm;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn m2() -> FiniteAlgebra {
        FiniteAlgebra::matrix(2).unwrap()
    }

    fn m2m2() -> FiniteAlgebra {
        "2:0.5,2:0.5".parse().unwrap()
    }

    fn corner() -> ComplexMatrix {
        ComplexMatrix::from_real_diag(&[1.0, 0.0])
    }

    fn random_psd(rng: &mut ChaCha8Rng, k: usize, rank: usize) -> ComplexMatrix {
        let v = ComplexMatrix::from_fn(k, rank, |_, _| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
        &v * &v.conj_transpose()
    }

    /// Independent γ: products of ideal pairs, modified Gram–Schmidt, then
    /// per-summand ranks of `J`.
    fn oracle_gamma(alg: &FiniteAlgebra, phi: &AlgebraState) -> f64 {
        let ideal = gns_null_ideal(alg, phi).unwrap();
        let mut spanning = Vec::new();
        for a in &ideal.basis {
            for b in &ideal.basis {
                spanning.push(a.mul(&b.adjoint()));
            }
        }
        let mut gamma = 0.0;
        for (i, &(k, w)) in alg.summands().iter().enumerate() {
            let mut ortho: Vec<Vec<C64>> = Vec::new();
            for x in &spanning {
                let mut v: Vec<C64> = x.blocks[i].as_slice().to_vec();
                for q in &ortho {
                    let dot: C64 = q.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
                    for (vi, qi) in v.iter_mut().zip(q) {
                        *vi -= dot * qi;
                    }
                }
                let norm = libm::sqrt(v.iter().map(C64::norm_sqr).sum::<f64>());
                if norm > 1e-9 {
                    ortho.push(v.iter().map(|z| z / norm).collect());
                }
            }
            gamma += w * (k * k - ortho.len()) as f64 / (k * k) as f64;
        }
        gamma
    }

    #[test]
    fn algebra_parsing_and_trace() {
        let alg = m2m2();
        assert_eq!(alg.dim(), 8);
        assert_eq!(alg.trace(&alg.identity()), ONE);
        assert!("2:0.5,2:0.4".parse::<FiniteAlgebra>().is_err());
        assert!("2-0.5".parse::<FiniteAlgebra>().is_err());
        assert!("0:1".parse::<FiniteAlgebra>().is_err());
        assert!(FiniteAlgebra::new(vec![(2, 1.5), (1, -0.5)]).is_err());
    }

    #[test]
    fn basis_is_orthonormal_and_coordinates_roundtrip() {
        let alg: FiniteAlgebra = "1:0.2,2:0.3,3:0.5".parse().unwrap();
        let n = alg.dim();
        for j in 0..n {
            for k in 0..n {
                let expected = if j == k { ONE } else { ZERO };
                assert!((alg.inner(&alg.basis(j), &alg.basis(k)) - expected).norm() < 1e-14);
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let x = alg.from_coordinates(&(0..n).map(|_| C64::new(rng.gen(), rng.gen())).collect::<Vec<_>>());
        let y = alg.from_coordinates(&alg.coordinates(&x));
        for (a, b) in x.blocks.iter().zip(&y.blocks) {
            assert!((a - b).frobenius_norm() < 1e-14);
        }
        // left multiplication matches the algebra product in coordinates
        let z = alg.from_coordinates(&(0..n).map(|_| C64::new(rng.gen(), rng.gen())).collect::<Vec<_>>());
        let lhs = alg.left_multiplication(&x).apply(&alg.coordinates(&z));
        let rhs = alg.coordinates(&x.mul(&z));
        assert!(lhs.iter().zip(&rhs).all(|(a, b)| (a - b).norm() < 1e-13));
    }

    #[test]
    fn state_validation() {
        let alg = m2();
        let neg = ComplexMatrix::from_real_diag(&[1.0, -0.5]);
        assert!(matches!(AlgebraState::new(&alg, vec![neg]), Err(Error::NotPositive { .. })));
        let phi = AlgebraState::new(&alg, vec![ComplexMatrix::from_real_diag(&[2.0, 2.0])]).unwrap();
        assert_eq!(phi, AlgebraState::trace(&alg));
        assert!(AlgebraState::new(&alg, vec![ComplexMatrix::identity(3)]).is_err());
    }

    #[test]
    fn null_ideal_examples() {
        let alg = m2();
        assert_eq!(gns_null_ideal(&alg, &AlgebraState::trace(&alg)).unwrap().dim(), 0);

        let phi = AlgebraState::new(&alg, vec![corner()]).unwrap();
        let ideal = gns_null_ideal(&alg, &phi).unwrap();
        assert_eq!(ideal.dim(), 2);
        assert!(ideal.left_ideal_residual < 1e-12);
        for a in &ideal.basis {
            // vanishing first column
            assert!(a.blocks[0][(0, 0)].norm() < 1e-12 && a.blocks[0][(1, 0)].norm() < 1e-12);
        }

        let alg = m2m2();
        let phi = AlgebraState::new(&alg, vec![ComplexMatrix::zeros(2, 2), ComplexMatrix::identity(2)]).unwrap();
        let ideal = gns_null_ideal(&alg, &phi).unwrap();
        assert_eq!(ideal.dim(), 4);
        for a in &ideal.basis {
            assert!(a.blocks[1].frobenius_norm() < 1e-12);
        }
    }

    #[test]
    fn representation_examples() {
        let alg = m2();
        let rep = gns_representation(&alg, &AlgebraState::trace(&alg)).unwrap();
        assert_eq!(rep.j_dim, 0);
        assert_eq!(rep.dim(), 4);
        assert!((rep.gamma - 1.0).abs() < 1e-12 && rep.faithful_state() && rep.is_faithful());
        // the left regular representation
        let x = alg.basis(1);
        assert!((&rep.rho(&x) - &alg.left_multiplication(&x)).frobenius_norm() < 1e-12);

        let phi = AlgebraState::new(&alg, vec![corner()]).unwrap();
        let rep = gns_representation(&alg, &phi).unwrap();
        assert!(rep.is_trivial());
        assert_eq!(rep.gamma, 0.0);
        assert_eq!(rep.ideal_dim, 2);
        assert_eq!(rep.j_dim, 4);

        let alg = m2m2();
        let phi = AlgebraState::new(&alg, vec![ComplexMatrix::zeros(2, 2), ComplexMatrix::identity(2)]).unwrap();
        let rep = gns_representation(&alg, &phi).unwrap();
        assert!((rep.gamma - 0.5).abs() < 1e-12);
        assert!(rep.gamma_agreement() < 1e-10);
        assert_eq!(rep.gamma_per_summand, vec![0.0, 0.5]);
        assert_eq!(rep.kernel_dim, 4);
        assert!(rep.check_residual() < 1e-10);
        // ρ vanishes on the killed summand
        let x = alg.element(vec![ComplexMatrix::identity(2), ComplexMatrix::zeros(2, 2)]).unwrap();
        assert!(rep.rho(&x).frobenius_norm() < 1e-12);
    }

    #[test]
    fn gamma_matches_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(40);
        let algebras = ["2:0.5,2:0.5", "1:0.25,2:0.25,3:0.5", "3:0.7,1:0.3", "2:1"];
        for spec in algebras {
            let alg: FiniteAlgebra = spec.parse().unwrap();
            for trial in 0..6 {
                let densities = alg
                    .summands()
                    .iter()
                    .enumerate()
                    .map(|(i, &(k, _))| {
                        // kill some summands, make others rank deficient
                        let rank = (trial + i) % (k + 1);
                        random_psd(&mut rng, k, rank)
                    })
                    .collect();
                let phi = AlgebraState::new(&alg, densities).unwrap();
                let rep = gns_representation(&alg, &phi).unwrap();
                let oracle = oracle_gamma(&alg, &phi);
                assert!((rep.gamma - oracle).abs() < 1e-10, "{spec} {trial}: {} vs {oracle}", rep.gamma);
                assert!(rep.gamma_agreement() < 1e-10);
                assert!((0.0..=1.0).contains(&rep.gamma));
                assert_eq!(rep.gamma == 1.0, rep.faithful_state());
                assert!(rep.check_residual() < 1e-10);
            }
        }
    }

    #[test]
    fn ideal_independent_of_invertible_twist() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let alg: FiniteAlgebra = "3:0.6,2:0.4".parse().unwrap();
        for _ in 0..5 {
            let d: Vec<ComplexMatrix> = vec![random_psd(&mut rng, 3, 1), random_psd(&mut rng, 2, 1)];
            // φ'(A) = φ(AT) with T = 2 + D invertible and commuting with D
            let twisted: Vec<ComplexMatrix> = d
                .iter()
                .map(|di| {
                    let t = &ComplexMatrix::identity(di.dim()).scale_real(2.0) + di;
                    &t * di
                })
                .collect();
            let phi = AlgebraState::new(&alg, d).unwrap();
            let phi2 = AlgebraState::new(&alg, twisted).unwrap();
            let i1 = gns_null_ideal(&alg, &phi).unwrap();
            let i2 = gns_null_ideal(&alg, &phi2).unwrap();
            assert_eq!(i1.dim(), i2.dim());
            let n = alg.dim();
            assert!(operator_norm(&(&i1.projection(n) - &i2.projection(n))) < 1e-10);
        }
    }

    #[test]
    fn surface_states_route_through_homology() {
        let sigma = TorusSurfaceClass::basis(0);
        let omega = TorusForm::basis(1);
        let rep = surface_state_representation(&sigma, &omega).unwrap();
        assert!(rep.is_trivial() && rep.gamma == 0.0);

        // the wedge integral is 1 but the L² value F(1) = (e₁₂, e₃₄) vanishes
        let rep = surface_state_representation(&TorusSurfaceClass::basis(0), &TorusForm::basis(0)).unwrap();
        assert!(rep.is_trivial());

        // ωη^⋇ is not Hermitian
        let sigma = TorusSurfaceClass::new([1, 0, 0, 0, 0, 1]);
        let omega = TorusForm::from_real([1.0, 1.0, 0.0, 0.0, 0.0, 0.0]);
        assert!(matches!(surface_state_representation(&sigma, &omega), Err(Error::NotSelfAdjoint { .. })));

        let sigma = TorusSurfaceClass::new([1, 0, 0, 0, 0, 1]);
        let omega = TorusForm::from_real([1.0, 0.0, 0.0, 0.0, 0.0, 1.0]);
        let rep = surface_state_representation(&sigma, &omega).unwrap();
        // a vector state on the simple algebra 𝔪₆
        assert_eq!(rep.ideal_dim, 30);
        assert!(rep.is_trivial());
    }
}
