use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{classify_kappa, kappa_tolerance, require_positive, KappaSign, ProjectionOutcome};
use crate::error::Result;
use crate::linalg::{eig_sym, EigenDecomposition, SymMatrix};
use crate::math;

const MULTIPLICITY_TOL: f64 = 1e-9;

fn multiplicity_tol(a: &SymMatrix) -> f64 {
    MULTIPLICITY_TOL * a.frobenius_norm().max(1.0)
}

// U·diag(ρ, 0, …, 0)·Uᵀ = ρ·u₁u₁ᵀ
fn leading_rank1(eig: &EigenDecomposition, rho: f64) -> SymMatrix {
    let mut values = vec![0.0; eig.dim()];
    values[0] = rho;
    eig.reconstruct(&values)
}

/// Projection onto the PSD cone: `U·diag(λ(A)₊)·Uᵀ`.
pub fn proj_psd(a: &SymMatrix) -> Result<SymMatrix> {
    let eig = eig_sym(a)?;
    let clipped: Vec<f64> = eig.eigenvalues().iter().map(|&l| l.max(0.0)).collect();
    Ok(eig.reconstruct(&clipped))
}

/// Result of [`proj_rank1_sphere`].
#[derive(Clone, Debug, PartialEq)]
pub struct Rank1SphereProjection {
    pub outcome: ProjectionOutcome<SymMatrix>,
    /// `max ⟨A, B⟩` over the set, equal to `ρ·λ₁(A)`.
    pub max_inner: f64,
}

/// Projection onto `{ρ·uuᵀ : ‖u‖ = 1}`.
///
/// Unique when `λ₁(A)` is simple, otherwise a continuum over the leading
/// eigenspace. The canonical point is `ρ·u₁u₁ᵀ` with `u₁` the leading column
/// of [`eig_sym`].
pub fn proj_rank1_sphere(a: &SymMatrix, rho: f64) -> Result<Rank1SphereProjection> {
    require_positive("rho", rho)?;
    let eig = eig_sym(a)?;
    let canonical = leading_rank1(&eig, rho);
    let distance = a.distance(&canonical);
    let max_inner = rho * eig.largest();
    let outcome = if eig.leading_multiplicity(multiplicity_tol(a)) == 1 {
        ProjectionOutcome::unique(canonical, distance)
    } else {
        ProjectionOutcome::continuum(
            canonical,
            String::from("rho·uuᵀ for every unit u in the leading eigenspace"),
            distance,
        )
    };
    Ok(Rank1SphereProjection { outcome, max_inner })
}

/// Projection onto `𝕊₊ᴺ ∩ S(0, ρ)` in the Frobenius norm.
///
/// - `λ₁ > 0`: unique point `ρ/‖λ₊‖·U·diag(λ₊)·Uᵀ`;
/// - `λ₁ = 0`: a continuum, canonical point `ρ·u₁u₁ᵀ`;
/// - `λ₁ < 0`: the matrices `ρ·uuᵀ` with `u` a unit leading eigenvector.
///   This is a finite set (one point) when `λ₁` is simple, else a continuum.
pub fn proj_psd_cap_sphere(a: &SymMatrix, rho: f64) -> Result<ProjectionOutcome<SymMatrix>> {
    require_positive("rho", rho)?;
    let eig = eig_sym(a)?;
    let lambda1 = eig.largest();
    let tol = kappa_tolerance(a.frobenius_norm(), rho);

    match classify_kappa(rho * lambda1, tol) {
        KappaSign::Positive => {
            let (mut pos_sq, mut neg_sq) = (0.0, 0.0);
            let clipped: Vec<f64> = eig
                .eigenvalues()
                .iter()
                .map(|&l| {
                    if l > 0.0 {
                        pos_sq += l * l;
                        l
                    } else {
                        neg_sq += l * l;
                        0.0
                    }
                })
                .collect();
            let pos_norm = math::sqrt(pos_sq);
            let scaled: Vec<f64> = clipped.iter().map(|l| l * rho / pos_norm).collect();
            let gap = pos_norm - rho;
            Ok(ProjectionOutcome::unique(
                eig.reconstruct(&scaled),
                math::sqrt(neg_sq + gap * gap),
            ))
        }
        KappaSign::Zero => {
            let canonical = leading_rank1(&eig, rho);
            let distance = a.distance(&canonical);
            Ok(ProjectionOutcome::continuum(
                canonical,
                String::from(
                    "unit-norm (times rho) PSD matrices with range in the leading eigenspace",
                ),
                distance,
            ))
        }
        KappaSign::Negative => {
            let canonical = leading_rank1(&eig, rho);
            let distance = a.distance(&canonical);
            if eig.leading_multiplicity(multiplicity_tol(a)) == 1 {
                Ok(ProjectionOutcome::finite(vec![canonical], distance))
            } else {
                Ok(ProjectionOutcome::continuum(
                    canonical,
                    String::from("rho·uuᵀ for every unit u in the leading eigenspace"),
                    distance,
                ))
            }
        }
    }
}
