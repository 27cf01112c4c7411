use alloc::vec;
use alloc::vec::Vec;

use super::{SymMatrix, Vector};
use crate::error::{Error, Result};
use crate::math;

const MAX_SWEEPS: usize = 50;
const OFF_DIAGONAL_TOL: f64 = 1e-14;
const SIGN_TOL: f64 = 1e-12;

/// `A = U·diag(λ)·Uᵀ` with `λ` sorted in descending order.
///
/// Columns of `U` follow a fixed sign convention: the first component with
/// magnitude above `1e-12` is nonnegative.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenDecomposition {
    eigenvalues: Vector,
    // row-major, column k is the k-th eigenvector
    basis: Vec<f64>,
}

impl EigenDecomposition {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    /// Eigenvalues `λ₁ ≥ λ₂ ≥ … ≥ λ_N`.
    pub fn eigenvalues(&self) -> &Vector {
        &self.eigenvalues
    }

    /// The orthogonal factor in row-major layout; columns are eigenvectors.
    pub fn basis(&self) -> &[f64] {
        &self.basis
    }

    pub fn eigenvector(&self, k: usize) -> Vector {
        let n = self.dim();
        Vector::from_vec_unchecked((0..n).map(|i| self.basis[i * n + k]).collect())
    }

    pub fn largest(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn smallest(&self) -> f64 {
        self.eigenvalues[self.dim() - 1]
    }

    /// `U·diag(values)·Uᵀ`.
    pub fn reconstruct(&self, values: &[f64]) -> SymMatrix {
        let n = self.dim();
        debug_assert_eq!(values.len(), n);
        let u = &self.basis;
        SymMatrix::from_upper_fn(n, |i, j| {
            (0..n)
                .filter(|&k| values[k] != 0.0)
                .map(|k| u[i * n + k] * values[k] * u[j * n + k])
                .sum()
        })
        .expect("finite eigen factors")
    }

    /// Number of eigenvalues within `tol` of `λ₁`.
    pub fn leading_multiplicity(&self, tol: f64) -> usize {
        let top = self.largest();
        self.eigenvalues.iter().take_while(|&&v| top - v <= tol).count()
    }

    /// Solves `(A + shift·I)x = rhs` through the spectral factors.
    ///
    /// Fails with [`Error::Singular`] when some `|λ_i + shift|` is below
    /// `1e-12·max(1, |λ|_max + |shift|)`.
    pub fn solve_shifted(&self, shift: f64, rhs: &Vector) -> Result<Vector> {
        let n = self.dim();
        if rhs.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: rhs.len(),
            });
        }
        let spread = math::abs(self.largest()).max(math::abs(self.smallest())) + math::abs(shift);
        let tol = 1e-12 * spread.max(1.0);
        let u = &self.basis;
        let mut out = vec![0.0; n];
        for k in 0..n {
            let denom = self.eigenvalues[k] + shift;
            if math::abs(denom) <= tol {
                return Err(Error::Singular);
            }
            let coeff: f64 = (0..n).map(|i| u[i * n + k] * rhs[i]).sum::<f64>() / denom;
            for (i, o) in out.iter_mut().enumerate() {
                *o += coeff * u[i * n + k];
            }
        }
        Ok(Vector::from_vec_unchecked(out))
    }
}

/// Symmetric eigendecomposition by cyclic Jacobi rotations.
///
/// Sweeps stop once the off-diagonal Frobenius norm drops below
/// `1e-14·‖A‖_F`, or after 50 sweeps. Equal eigenvalues keep their diagonal
/// order, so the output is deterministic.
pub fn eig_sym(matrix: &SymMatrix) -> Result<EigenDecomposition> {
    let n = matrix.dim();
    if matrix.as_row_major().iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite);
    }
    let mut a = matrix.as_row_major().to_vec();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }

    let threshold = OFF_DIAGONAL_TOL * matrix.frobenius_norm();
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a, n) <= threshold {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, n, p, q);
            }
        }
    }

    let diag: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    let mut order: Vec<usize> = (0..n).collect();
    // stable, so ties keep their original index order
    order.sort_by(|&i, &j| diag[j].partial_cmp(&diag[i]).unwrap_or(core::cmp::Ordering::Equal));

    let eigenvalues: Vec<f64> = order.iter().map(|&k| diag[k]).collect();
    let mut basis = vec![0.0; n * n];
    for (col, &k) in order.iter().enumerate() {
        let sign = (0..n)
            .map(|i| v[i * n + k])
            .find(|c| math::abs(*c) > SIGN_TOL)
            .map_or(1.0, |c| if c < 0.0 { -1.0 } else { 1.0 });
        for i in 0..n {
            basis[i * n + col] = sign * v[i * n + k];
        }
    }

    Ok(EigenDecomposition {
        eigenvalues: Vector::from_vec_unchecked(eigenvalues),
        basis,
    })
}

/// Largest absolute eigenvalue, i.e. the spectral norm of a symmetric matrix.
pub fn operator_norm(matrix: &SymMatrix) -> Result<f64> {
    let eig = eig_sym(matrix)?;
    Ok(math::abs(eig.largest()).max(math::abs(eig.smallest())))
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += a[i * n + j] * a[i * n + j];
            }
        }
    }
    math::sqrt(sum)
}

// One Jacobi rotation annihilating a[p][q]; accumulates the rotation into v.
fn rotate(a: &mut [f64], v: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let app = a[p * n + p];
    let aqq = a[q * n + q];
    let theta = (aqq - app) / (2.0 * apq);
    let t = {
        let mag = 1.0 / (math::abs(theta) + math::hypot(theta, 1.0));
        if theta < 0.0 {
            -mag
        } else {
            mag
        }
    };
    let c = 1.0 / math::hypot(t, 1.0);
    let s = t * c;

    for k in 0..n {
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        a[k * n + p] = c * akp - s * akq;
        a[k * n + q] = s * akp + c * akq;
    }
    for k in 0..n {
        let apk = a[p * n + k];
        let aqk = a[q * n + k];
        a[p * n + k] = c * apk - s * aqk;
        a[q * n + k] = s * apk + c * aqk;
    }
    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;

    for k in 0..n {
        let vkp = v[k * n + p];
        let vkq = v[k * n + q];
        v[k * n + p] = c * vkp - s * vkq;
        v[k * n + q] = s * vkp + c * vkq;
    }
}
