//! Spectral utilities: cyclic Jacobi for Hermitian matrices, unitary
//! diagonalization of normal matrices, `expm_normal`, operator norm and
//! numerical rank.

use alloc::vec::Vec;



use crate::matrix::{C64, ComplexMatrix, ZERO};
use crate::{tol, Error, Result};

const MAX_SWEEPS: usize = 100;

/// Eigendecomposition `A = V diag(values) V^⋇` of a Hermitian matrix.
/// Eigenvalues are ascending; eigenvectors are the columns of `vectors`.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
}

/// Unitary diagonalization `A = V diag(values) V^⋇` of a normal matrix.
#[derive(Debug, Clone)]
pub struct NormalEigen {
    pub values: Vec<C64>,
    pub vectors: ComplexMatrix,
}

impl NormalEigen {
    /// `V diag(f(λ)) V^⋇`.
    pub fn apply_fn(&self, f: impl Fn(C64) -> C64) -> ComplexMatrix {
        let n = self.values.len();
        let fv: Vec<C64> = self.values.iter().map(|&z| f(z)).collect();
        let v = &self.vectors;
        ComplexMatrix::from_fn(n, n, |r, c| {
            (0..n).map(|k| v[(r, k)] * fv[k] * v[(c, k)].conj()).sum()
        })
    }
}

/// Hermitian eigendecomposition.
///
/// Input must be Hermitian to `1e-8` relative to its norm; it is symmetrized
/// before the sweeps.
pub fn eigh(a: &ComplexMatrix) -> Result<HermitianEigen> {
    a.ensure_square()?;
    let residual = a.hermitian_residual();
    if residual > 1e-8 * a.frobenius_norm().max(1.0) {
        return Err(Error::NotSelfAdjoint { residual });
    }
    Ok(jacobi(hermitian_part(a)))
}

fn hermitian_part(a: &ComplexMatrix) -> ComplexMatrix {
    (a + &a.conj_transpose()).scale_real(0.5)
}

/// Cyclic complex Jacobi. Each rotation first removes the phase of the
/// pivot `a_pq`, then applies a real Givens rotation.
fn jacobi(mut a: ComplexMatrix) -> HermitianEigen {
    let n = a.dim();
    let mut v = ComplexMatrix::identity(n);
    let total = a.frobenius_norm();
    if total > 0.0 {
        for _ in 0..MAX_SWEEPS {
            let off = off_diagonal_norm(&a);
            if off <= tol::JACOBI_CONVERGENCE * total {
                break;
            }
            let mut rotated = false;
            for p in 0..n {
                for q in p + 1..n {
                    rotated |= rotate(&mut a, &mut v, p, q);
                }
            }
            if !rotated {
                break;
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<f64> = (0..n).map(|i| a[(i, i)].re).collect();
    order.sort_by(|&i, &j| diag[i].total_cmp(&diag[j]));
    let values = order.iter().map(|&i| diag[i]).collect();
    let vectors = ComplexMatrix::from_fn(n, n, |r, c| v[(r, order[c])]);
    HermitianEigen { values, vectors }
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.dim();
    let mut s = 0.0;
    for r in 0..n {
        for c in 0..n {
            if r != c {
                s += a[(r, c)].norm_sqr();
            }
        }
    }
    libm::sqrt(s)
}

fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) -> bool {
    let apq = a[(p, q)];
    let mag = apq.norm();
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    if mag == 0.0 || mag < 1e-18 * (app.abs() + aqq.abs()) {
        return false;
    }
    let phase = apq / mag;
    let tau = (aqq - app) / (2.0 * mag);
    let t = if tau >= 0.0 {
        1.0 / (tau + libm::sqrt(1.0 + tau * tau))
    } else {
        -1.0 / (-tau + libm::sqrt(1.0 + tau * tau))
    };
    let c = 1.0 / libm::sqrt(1.0 + t * t);
    let s = t * c;
    // U = diag(1, conj(phase)) · [[c, s], [-s, c]]
    let u00 = C64::new(c, 0.0);
    let u01 = C64::new(s, 0.0);
    let u10 = phase.conj() * -s;
    let u11 = phase.conj() * c;
    let n = a.dim();
    for k in 0..n {
        let (akp, akq) = (a[(k, p)], a[(k, q)]);
        a[(k, p)] = akp * u00 + akq * u10;
        a[(k, q)] = akp * u01 + akq * u11;
    }
    for k in 0..n {
        let (apk, aqk) = (a[(p, k)], a[(q, k)]);
        a[(p, k)] = u00.conj() * apk + u10.conj() * aqk;
        a[(q, k)] = u01.conj() * apk + u11.conj() * aqk;
    }
    for k in 0..n {
        let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
        v[(k, p)] = vkp * u00 + vkq * u10;
        v[(k, q)] = vkp * u01 + vkq * u11;
    }
    a[(p, q)] = ZERO;
    a[(q, p)] = ZERO;
    a[(p, p)] = C64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = C64::new(a[(q, q)].re, 0.0);
    true
}

/// `‖AA^⋇ − A^⋇A‖` in operator norm.
pub fn normality_residual(a: &ComplexMatrix) -> f64 {
    let ah = a.conj_transpose();
    let c = &(a * &ah) - &(&ah * a);
    let fro = c.frobenius_norm();
    if fro <= tol::NORMALITY {
        // Operator norm is bounded by Frobenius; avoid the eigensolve.
        return fro;
    }
    hermitian_operator_norm(&c)
}

fn hermitian_operator_norm(h: &ComplexMatrix) -> f64 {
    let e = jacobi(hermitian_part(h));
    e.values.iter().map(|x| x.abs()).fold(0.0, f64::max)
}

/// Largest singular value, from the spectrum of `A^⋇A`.
pub fn operator_norm(a: &ComplexMatrix) -> f64 {
    let gram = &a.conj_transpose() * a;
    let e = jacobi(hermitian_part(&gram));
    libm::sqrt(e.values.last().copied().unwrap_or(0.0).max(0.0))
}

/// Unitary diagonalization of a normal matrix.
///
/// Diagonalizes the Hermitian part first; inside every cluster of (nearly)
/// equal eigenvalues it then diagonalizes the compressed skew-Hermitian part.
/// The two parts commute, so the combined basis diagonalizes `A`.
pub fn diagonalize_normal(a: &ComplexMatrix) -> Result<NormalEigen> {
    let n = a.ensure_square()?;
    let residual = normality_residual(a);
    let norm = operator_norm(a);
    let scale = (norm * norm).max(1.0);
    if residual > tol::NORMALITY * scale {
        return Err(Error::NotNormal { residual });
    }
    let ah = a.conj_transpose();
    let re_part = (a + &ah).scale_real(0.5);
    let im_part = (a - &ah).scale(C64::new(0.0, -0.5));
    let HermitianEigen { values, vectors: mut v } = jacobi(re_part);

    let spread = values.iter().map(|x| x.abs()).fold(1.0, f64::max);
    let gap = 1e-8 * spread;
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && values[end] - values[end - 1] <= gap {
            end += 1;
        }
        if end - start > 1 {
            let k = end - start;
            let vg = v.block(0, start, n, k);
            let compressed = &(&vg.conj_transpose() * &im_part) * &vg;
            let inner = jacobi(hermitian_part(&compressed));
            let rotated = &vg * &inner.vectors;
            for j in 0..k {
                v.set_col(start + j, &rotated.col(j));
            }
        }
        start = end;
    }

    let eigenvalues = (0..n)
        .map(|k| {
            let col = v.col(k);
            let av = a.apply(&col);
            col.iter().zip(&av).map(|(x, y)| x.conj() * y).sum()
        })
        .collect();
    Ok(NormalEigen { values: eigenvalues, vectors: v })
}

/// `e^A` for normal `A`, via `A = U diag(λ) U^⋇`.
pub fn expm_normal(a: &ComplexMatrix) -> Result<ComplexMatrix> {
    if a.ensure_square()? == 0 {
        return Ok(a.clone());
    }
    if a.max_abs() == 0.0 {
        return Ok(ComplexMatrix::identity(a.dim()));
    }
    let eig = diagonalize_normal(a)?;
    Ok(eig.apply_fn(|z| z.exp()))
}

/// Splits a Hermitian positive semidefinite matrix into an orthonormal basis
/// of its range and of its kernel. Eigenvalues at or below
/// `rel_tol * max(1, λ_max)` count as zero; negative eigenvalues below
/// `-rel_tol * max(1, λ_max)` are reported as an error.
pub fn psd_range_kernel(g: &ComplexMatrix, rel_tol: f64) -> Result<(Vec<Vec<C64>>, Vec<Vec<C64>>)> {
    let e = eigh(g)?;
    let top = e.values.last().copied().unwrap_or(0.0).max(1.0);
    let cut = rel_tol * top;
    if let Some(&lo) = e.values.first() {
        if lo < -cut {
            return Err(Error::NotPositive { min_eigenvalue: lo });
        }
    }
    let mut range = Vec::new();
    let mut kernel = Vec::new();
    for (k, &lambda) in e.values.iter().enumerate() {
        let col = e.vectors.col(k);
        if lambda > cut {
            range.push(col);
        } else {
            kernel.push(col);
        }
    }
    Ok((range, kernel))
}

/// Numerical rank of a Hermitian positive semidefinite matrix.
pub fn psd_rank(g: &ComplexMatrix) -> Result<usize> {
    Ok(psd_range_kernel(g, tol::RANK)?.0.len())
}
