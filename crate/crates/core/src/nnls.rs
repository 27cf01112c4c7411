//! Nonnegative least squares `min ‖Σ αᵢ gᵢ − x‖` over `α ≥ 0`.
//!
//! Lawson–Hanson active-set iteration on the Gram system. The fitted point
//! `Σ αᵢ gᵢ` is the projection of `x` onto the cone spanned by the `gᵢ`,
//! which is what the finitely generated cone projector needs; the
//! coefficients themselves need not be unique when generators are dependent.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::{eig_sym, SymMatrix, Vector};
use crate::math;

/// Relative tolerance for dual feasibility and positivity tests.
pub const NNLS_TOL: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq)]
pub struct NnlsSolution {
    pub coefficients: Vec<f64>,
    /// `Σ αᵢ gᵢ`
    pub fitted: Vector,
    /// `‖x − Σ αᵢ gᵢ‖`
    pub residual_norm: f64,
}

/// Solves the NNLS problem for the given generator columns.
pub fn nnls(generators: &[Vector], x: &Vector) -> Result<NnlsSolution> {
    let m = generators.len();
    if m == 0 {
        return Err(Error::Empty);
    }
    for g in generators {
        x.check_same_dim(g)?;
    }

    let gram = SymMatrix::from_upper_fn(m, |i, j| generators[i].dot(&generators[j]))?;
    let rhs: Vec<f64> = generators.iter().map(|g| g.dot(x)).collect();
    let scale = x.norm() * generators.iter().map(Vector::norm).fold(0.0, f64::max);
    let tol = NNLS_TOL * scale.max(1.0);

    let mut alpha = vec![0.0; m];
    let mut passive = vec![false; m];
    let max_outer = 3 * m + 10;

    for _ in 0..max_outer {
        let w = dual(&gram, &rhs, &alpha);
        let candidate = (0..m)
            .filter(|&j| !passive[j] && w[j] > tol)
            .fold(None, |best: Option<usize>, j| match best {
                Some(b) if w[b] >= w[j] => Some(b),
                _ => Some(j),
            });
        let Some(j) = candidate else { break };
        passive[j] = true;

        // inner loop: restore strict positivity on the passive set
        for _ in 0..=m {
            let idx: Vec<usize> = (0..m).filter(|&i| passive[i]).collect();
            let s = solve_passive(&gram, &rhs, &idx)?;
            if s.iter().all(|&v| v > 0.0) {
                alpha.iter_mut().for_each(|a| *a = 0.0);
                for (&i, &v) in idx.iter().zip(&s) {
                    alpha[i] = v;
                }
                break;
            }
            let mut step = 1.0_f64;
            for (&i, &v) in idx.iter().zip(&s) {
                if v <= 0.0 {
                    let denom = alpha[i] - v;
                    if denom > 0.0 {
                        step = step.min(alpha[i] / denom);
                    } else {
                        step = 0.0;
                    }
                }
            }
            for (&i, &v) in idx.iter().zip(&s) {
                alpha[i] += step * (v - alpha[i]);
            }
            for &i in &idx {
                if alpha[i] <= tol * 1e-3 {
                    alpha[i] = 0.0;
                    passive[i] = false;
                }
            }
            if !passive.iter().any(|&p| p) {
                break;
            }
        }
    }

    let mut fitted = vec![0.0; x.len()];
    for (g, &a) in generators.iter().zip(&alpha) {
        if a != 0.0 {
            for (f, gi) in fitted.iter_mut().zip(g) {
                *f += a * gi;
            }
        }
    }
    let fitted = Vector::from_vec_unchecked(fitted);
    let residual_norm = x.distance(&fitted);
    Ok(NnlsSolution {
        coefficients: alpha,
        fitted,
        residual_norm,
    })
}

// w = c − Gα, the negative gradient of ½‖Aα − x‖².
fn dual(gram: &SymMatrix, rhs: &[f64], alpha: &[f64]) -> Vec<f64> {
    (0..rhs.len())
        .map(|i| rhs[i] - gram.row(i).iter().zip(alpha).map(|(g, a)| g * a).sum::<f64>())
        .collect()
}

// Least-squares solve of G_PP s = c_P via the spectral pseudo-inverse, which
// tolerates (numerically) dependent generators.
fn solve_passive(gram: &SymMatrix, rhs: &[f64], idx: &[usize]) -> Result<Vec<f64>> {
    let sub = gram.principal(idx);
    let eig = eig_sym(&sub)?;
    let k = idx.len();
    let cutoff = 1e-12 * math::abs(eig.largest()).max(f64::MIN_POSITIVE);
    let basis = eig.basis();
    let mut out = vec![0.0; k];
    for col in 0..k {
        let lambda = eig.eigenvalues()[col];
        if lambda <= cutoff {
            continue;
        }
        let coeff: f64 = (0..k).map(|r| basis[r * k + col] * rhs[idx[r]]).sum::<f64>() / lambda;
        for (r, o) in out.iter_mut().enumerate() {
            *o += coeff * basis[r * k + col];
        }
    }
    Ok(out)
}
