//! Complexified Clifford algebras as matrix towers.
//!
//! A signature `(r, s)` with `m = r + s` gives `m` anticommuting generators
//! in `𝔪_{2^⌈m/2⌉}(ℂ)` built from the alternating chain
//!
//! ```text
//! γ_{2k-1} = Z ⊗ … ⊗ Z ⊗ X ⊗ I ⊗ … ⊗ I
//! γ_{2k}   = Z ⊗ … ⊗ Z ⊗ Y ⊗ I ⊗ … ⊗ I
//! ```
//!
//! with `k − 1` leading `Z` factors. Generators with index `> r` are
//! multiplied by `i`, which keeps anticommutation and flips `γ² = +1` to
//! `γ² = −1`. The tower `𝔪₁ ⊂ 𝔪₂ ⊂ 𝔪₄ ⊂ …` uses the block-diagonal
//! embedding `A ↦ diag(A, A) = I₂ ⊗ A`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::matrix::{kron_unchecked, C64, ComplexMatrix, I, ONE, ZERO};
use crate::spectral::psd_rank;
use crate::{Error, Result};

/// Largest `r + s` accepted by [`verify_periodicity`].
pub const MAX_PERIODICITY_M: usize = 10;

/// Quadratic form `Q_{r,s} = diag(+1 ×r, −1 ×s)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadraticSignature {
    pub r: usize,
    pub s: usize,
}

impl QuadraticSignature {
    pub fn new(r: usize, s: usize) -> Self {
        Self { r, s }
    }

    pub fn m(&self) -> usize {
        self.r + self.s
    }

    /// `Q_ii`, for a zero-based generator index.
    pub fn square_sign(&self, i: usize) -> f64 {
        if i < self.r {
            1.0
        } else {
            -1.0
        }
    }
}

impl fmt::Display for QuadraticSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.r, self.s)
    }
}

impl FromStr for QuadraticSignature {
    type Err = Error;

    /// Parses `"r,s"`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = Error::BadParameters { reason: "signature must look like \"r,s\"" };
        let (r, t) = s.split_once(',').ok_or(bad.clone())?;
        let r = r.trim().parse().map_err(|_| bad.clone())?;
        let t = t.trim().parse().map_err(|_| bad)?;
        Ok(Self { r, s: t })
    }
}

/// Generators of `C_{r,s} ⊗ ℂ` in `𝔪_{2^level}(ℂ)`.
#[derive(Debug, Clone)]
pub struct CliffordTower {
    pub signature: QuadraticSignature,
    pub generators: Vec<ComplexMatrix>,
    /// The representation lives in `𝔪_{2^level}(ℂ)`.
    pub level: usize,
}

impl CliffordTower {
    /// The scalar algebra `C₀ ≅ 𝔪₁(ℂ)`: no generators, dimension one.
    pub fn scalar() -> Self {
        Self { signature: QuadraticSignature::new(0, 0), generators: Vec::new(), level: 0 }
    }

    pub fn dim(&self) -> usize {
        1 << self.level
    }

    /// Largest `‖γᵢγⱼ + γⱼγᵢ − 2Qᵢⱼ·1‖_F` over all pairs `i ≤ j`.
    pub fn relations_residual(&self) -> f64 {
        let id = ComplexMatrix::identity(self.dim());
        let mut worst: f64 = 0.0;
        for (i, gi) in self.generators.iter().enumerate() {
            for (j, gj) in self.generators.iter().enumerate().skip(i) {
                let mut ac = gi.anticommutator(gj);
                if i == j {
                    ac = &ac - &id.scale_real(2.0 * self.signature.square_sign(i));
                }
                worst = worst.max(ac.frobenius_norm());
            }
        }
        worst
    }

    /// All `2^m` ordered products `γ_{i₁}γ_{i₂}⋯` with `i₁ < i₂ < ⋯`,
    /// indexed by the bitmask of the factors; mask 0 is the identity.
    pub fn monomials(&self) -> Vec<ComplexMatrix> {
        let m = self.generators.len();
        let mut out = Vec::with_capacity(1 << m);
        out.push(ComplexMatrix::identity(self.dim()));
        for mask in 1usize..(1 << m) {
            let top = usize::BITS as usize - 1 - mask.leading_zeros() as usize;
            let rest = mask & !(1 << top);
            let next = &out[rest] * &self.generators[top];
            out.push(next);
        }
        out
    }

    /// Dimension of the linear span of [`Self::monomials`].
    pub fn span_dimension(&self) -> Result<usize> {
        span_dimension(&self.monomials())
    }
}

fn pauli_x() -> ComplexMatrix {
    ComplexMatrix::from_real(2, 2, &[0.0, 1.0, 1.0, 0.0])
}

fn pauli_y() -> ComplexMatrix {
    ComplexMatrix::square(2, vec![ZERO, -I, I, ZERO]).expect("2x2")
}

fn pauli_z() -> ComplexMatrix {
    ComplexMatrix::from_real_diag(&[1.0, -1.0])
}

fn tensor_chain(factors: &[ComplexMatrix]) -> ComplexMatrix {
    factors
        .iter()
        .fold(ComplexMatrix::identity(1), |acc, f| kron_unchecked(&acc, f))
}

/// Anticommuting generators for `Q_{r,s}`.
///
/// `(0, 0)` is rejected; use [`CliffordTower::scalar`] for `C₀`.
pub fn build_generators(sig: QuadraticSignature) -> Result<CliffordTower> {
    let m = sig.m();
    if m == 0 {
        return Err(Error::EmptySignature);
    }
    let level = m.div_ceil(2);
    let mut generators = Vec::with_capacity(m);
    for idx in 0..m {
        let k = idx / 2;
        let mut factors = Vec::with_capacity(level);
        factors.extend((0..k).map(|_| pauli_z()));
        factors.push(if idx % 2 == 0 { pauli_x() } else { pauli_y() });
        factors.extend((k + 1..level).map(|_| ComplexMatrix::identity(2)));
        let mut g = tensor_chain(&factors);
        if idx >= sig.r {
            g = g.scale(I);
        }
        generators.push(g);
    }
    Ok(CliffordTower { signature: sig, generators, level })
}

/// Applies `A ↦ I₂ ⊗ A = diag(A, A)` `levels` times.
pub fn embed_up(a: &ComplexMatrix, levels: usize) -> Result<ComplexMatrix> {
    let n = a.ensure_square()?;
    if !n.is_power_of_two() {
        return Err(Error::BadParameters { reason: "tower elements have dimension 2^n" });
    }
    let id2 = ComplexMatrix::identity(2);
    let mut out = a.clone();
    for _ in 0..levels {
        out = kron_unchecked(&id2, &out);
    }
    Ok(out)
}

/// `τ(embed_up(a, k))` for `k = 0..=levels`.
pub fn tower_traces(a: &ComplexMatrix, levels: usize) -> Result<Vec<C64>> {
    let mut out = Vec::with_capacity(levels + 1);
    for k in 0..=levels {
        out.push(embed_up(a, k)?.normalized_trace());
    }
    Ok(out)
}

/// Outcome of [`verify_periodicity`].
#[derive(Debug, Clone, PartialEq)]
pub struct PeriodicityReport {
    pub m: usize,
    /// Matrix size at `m` and at `m + 2`.
    pub matrix_dim: usize,
    pub matrix_dim_next: usize,
    /// Span dimension of the monomials at `m` and at `m + 2`.
    pub span_dim: usize,
    pub span_dim_next: usize,
    /// Worst Clifford relation residual over both levels.
    pub relations_residual: f64,
}

impl PeriodicityReport {
    /// `dim C_m = 2^m`, `dim C_{m+2} = 4 dim C_m`, and both fill their full
    /// matrix algebras.
    pub fn holds(&self) -> bool {
        self.span_dim == 1 << self.m
            && self.span_dim_next == 4 * self.span_dim
            && self.span_dim == self.matrix_dim * self.matrix_dim
            && self.span_dim_next == self.matrix_dim_next * self.matrix_dim_next
    }
}

/// Checks `C_{m+2} ≅ C_m ⊗ 𝔪₂(ℂ)` at the level of vector-space dimensions.
/// The `m + 2` algebra is built from the signature `(r + 2, s)`.
pub fn verify_periodicity(sig: QuadraticSignature) -> Result<PeriodicityReport> {
    let m = sig.m();
    if m % 2 == 1 {
        return Err(Error::OddSignature { m });
    }
    if m > MAX_PERIODICITY_M {
        return Err(Error::SignatureTooLarge { m, max: MAX_PERIODICITY_M });
    }
    let here = if m == 0 { CliffordTower::scalar() } else { build_generators(sig)? };
    let next = build_generators(QuadraticSignature::new(sig.r + 2, sig.s))?;
    Ok(PeriodicityReport {
        m,
        matrix_dim: here.dim(),
        matrix_dim_next: next.dim(),
        span_dim: here.span_dimension()?,
        span_dim_next: next.span_dimension()?,
        relations_residual: here.relations_residual().max(next.relations_residual()),
    })
}

/// Rank of the Gram matrix `(τ(AᵢAⱼ^⋇))` of a family of equal-size square
/// matrices.
///
/// Matrices whose supports never overlap are orthogonal, so the family is
/// split into connected components of the support-overlap graph and the
/// Gram rank is summed over components.
pub fn span_dimension(family: &[ComplexMatrix]) -> Result<usize> {
    let Some(first) = family.first() else { return Ok(0) };
    let n = first.ensure_square()?;
    for a in family {
        first.ensure_same_shape(a)?;
    }
    let sparse: Vec<Vec<(usize, C64)>> = family
        .iter()
        .map(|a| {
            a.as_slice()
                .iter()
                .enumerate()
                .filter(|(_, z)| **z != ZERO)
                .map(|(k, z)| (k, *z))
                .collect()
        })
        .collect();

    let mut parent: Vec<usize> = (0..family.len()).collect();
    let mut owner: Vec<Option<usize>> = vec![None; n * n];
    for (idx, entries) in sparse.iter().enumerate() {
        for &(cell, _) in entries {
            match owner[cell] {
                None => owner[cell] = Some(idx),
                Some(other) => union(&mut parent, idx, other),
            }
        }
    }

    let mut components: Vec<Vec<usize>> = Vec::new();
    let mut slot: Vec<Option<usize>> = vec![None; family.len()];
    for idx in 0..family.len() {
        if sparse[idx].is_empty() {
            continue;
        }
        let root = find(&mut parent, idx);
        let c = *slot[root].get_or_insert_with(|| {
            components.push(Vec::new());
            components.len() - 1
        });
        components[c].push(idx);
    }

    let mut rank = 0;
    for members in &components {
        let k = members.len();
        let gram = ComplexMatrix::from_fn(k, k, |i, j| {
            sparse_inner(&sparse[members[i]], &sparse[members[j]]) / n as f64
        });
        rank += psd_rank(&gram)?;
    }
    Ok(rank)
}

fn sparse_inner(a: &[(usize, C64)], b: &[(usize, C64)]) -> C64 {
    let (mut i, mut j) = (0, 0);
    let mut acc = ZERO;
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => {
                acc += a[i].1 * b[j].1.conj();
                i += 1;
                j += 1;
            }
        }
    }
    acc
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra.max(rb)] = ra.min(rb);
    }
}

/// Complementary basis index and orientation sign on `Λ²ℝ⁴` with basis
/// `(e₁₂, e₁₃, e₁₄, e₂₃, e₂₄, e₃₄)`: `eᵢ ∧ e_{ī} = sign · e₁∧e₂∧e₃∧e₄`.
pub const LAMBDA2_COMPLEMENT: [(usize, f64); 6] =
    [(5, 1.0), (4, -1.0), (3, 1.0), (2, 1.0), (1, -1.0), (0, 1.0)];

/// The symmetric `6×6` matrix of the wedge pairing `α ∧ β`.
pub fn pairing_matrix() -> [[f64; 6]; 6] {
    let mut p = [[0.0; 6]; 6];
    for (i, &(j, sign)) in LAMBDA2_COMPLEMENT.iter().enumerate() {
        p[i][j] = sign;
    }
    p
}

/// Wedge pairing `⟨α, β⟩ = ∫ α ∧ β` of constant 2-forms on a unit-volume
/// 4-torus.
pub fn indefinite_pairing_form(a: &[f64; 6], b: &[f64; 6]) -> f64 {
    LAMBDA2_COMPLEMENT
        .iter()
        .enumerate()
        .map(|(i, &(j, sign))| sign * a[i] * b[j])
        .sum()
}

/// Complex-bilinear version of [`indefinite_pairing_form`].
pub fn wedge_pairing(a: &[C64; 6], b: &[C64; 6]) -> C64 {
    LAMBDA2_COMPLEMENT
        .iter()
        .enumerate()
        .map(|(i, &(j, sign))| a[i] * b[j] * sign)
        .sum()
}

#[allow(dead_code)]
pub(crate) fn unit(i: usize) -> [C64; 6] {
    let mut v = [ZERO; 6];
    v[i] = ONE;
    v
}
