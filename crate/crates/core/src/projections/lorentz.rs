use alloc::string::String;
use alloc::vec::Vec;

use super::{require_positive, Lifted, ProjectionOutcome};
use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::math;

/// Parameters of `K_α ∩ S(0, ρ)` with `K_α = {(x, ξ) : ‖x‖ ≤ αξ}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LorentzSpec {
    alpha: f64,
    rho: f64,
}

impl LorentzSpec {
    pub fn new(alpha: f64, rho: f64) -> Result<Self> {
        require_positive("alpha", alpha)?;
        require_positive("rho", rho)?;
        Ok(LorentzSpec { alpha, rho })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    /// `β = ρα/√(1 + α²)`: the radius of the generating slice
    /// `S(0, β) × {β/α}`, whose points all have norm `ρ`.
    pub fn beta(&self) -> f64 {
        self.rho * self.alpha / math::sqrt(1.0 + self.alpha * self.alpha)
    }
}

pub(crate) fn lorentz_project_parts(base: &[f64], xi: f64, alpha: f64) -> (Vec<f64>, f64) {
    let norm = math::sqrt(base.iter().map(|v| v * v).sum());
    if norm <= alpha * xi {
        return (base.to_vec(), xi);
    }
    if norm <= -xi / alpha {
        return (alloc::vec![0.0; base.len()], 0.0);
    }
    let c = (alpha * norm + xi) / (1.0 + alpha * alpha);
    let factor = c * alpha / norm;
    (base.iter().map(|v| v * factor).collect(), c)
}

/// Projection of `(x, ξ)` onto the Lorentz cone `K_α`.
pub fn proj_lorentz(x: &Vector, xi: f64, alpha: f64) -> Result<Lifted> {
    require_positive("alpha", alpha)?;
    if !xi.is_finite() {
        return Err(Error::NonFinite);
    }
    let (base, height) = lorentz_project_parts(x.as_slice(), xi, alpha);
    Ok(Lifted {
        base: Vector::from_vec_unchecked(base),
        height,
    })
}

/// Projection of `(x, ξ)` onto `K_α ∩ S(0, ρ)`.
///
/// Four cases:
/// - `‖x‖ ≤ αξ`, `ξ > 0`: the rescaled input `ρ(x, ξ)/‖(x, ξ)‖`;
/// - `x ≠ 0` otherwise: `ρ/√(1+α²)·(αx/‖x‖, 1)`;
/// - `x = 0`, `ξ < 0`: the whole slice `S(0, β) × {β/α}`;
/// - `(x, ξ) = 0`: the whole set.
pub fn proj_lorentz_cap_sphere(
    x: &Vector,
    xi: f64,
    spec: &LorentzSpec,
) -> Result<ProjectionOutcome<Lifted>> {
    if !xi.is_finite() {
        return Err(Error::NonFinite);
    }
    let (alpha, rho) = (spec.alpha, spec.rho);
    let input = Lifted {
        base: x.clone(),
        height: xi,
    };
    let x_norm = x.norm();

    if x_norm <= alpha * xi && xi > 0.0 {
        let canonical = input.scale(rho / input.norm());
        let distance = input.distance(&canonical);
        return Ok(ProjectionOutcome::unique(canonical, distance));
    }
    if !x.is_zero() {
        let scale = rho / math::sqrt(1.0 + alpha * alpha);
        let canonical = Lifted {
            base: x.scale(scale * alpha / x_norm),
            height: scale,
        };
        let distance = input.distance(&canonical);
        return Ok(ProjectionOutcome::unique(canonical, distance));
    }

    let beta = spec.beta();
    let canonical = Lifted {
        base: Vector::unit(x.len(), 0).scale(beta),
        height: beta / alpha,
    };
    let distance = input.distance(&canonical);
    let description = if xi < 0.0 {
        String::from("the slice S(0, beta) x {beta/alpha} of the cone")
    } else {
        String::from("the whole set K_alpha ∩ S(0, rho)")
    };
    Ok(ProjectionOutcome::continuum(canonical, description, distance))
}
