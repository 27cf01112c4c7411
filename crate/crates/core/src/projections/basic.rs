use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{require_positive, Lifted, ProjectionOutcome};
use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::math;

const ORTHONORMAL_TOL: f64 = 1e-10;

/// A nonempty finite orthonormal family `{eᵢ}` generating the cone
/// `K = Σ ℝ₊eᵢ`.
#[derive(Clone, Debug, PartialEq)]
pub struct OrthonormalConeSpec {
    generators: Vec<Vector>,
}

impl OrthonormalConeSpec {
    pub fn new(generators: Vec<Vector>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::Empty);
        }
        for g in &generators[1..] {
            generators[0].check_same_dim(g)?;
        }
        for (i, a) in generators.iter().enumerate() {
            for (j, b) in generators.iter().enumerate().skip(i) {
                let target = if i == j { 1.0 } else { 0.0 };
                if math::abs(a.dot(b) - target) > ORTHONORMAL_TOL {
                    return Err(Error::InvalidParameter {
                        name: "generators",
                        reason: "not an orthonormal family",
                    });
                }
            }
        }
        Ok(OrthonormalConeSpec { generators })
    }

    /// The first `k` standard basis vectors of `ℝⁿ`.
    pub fn standard(n: usize, k: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::InvalidParameter {
                name: "k",
                reason: "must satisfy 1 <= k <= n",
            });
        }
        Ok(OrthonormalConeSpec {
            generators: (0..k).map(|i| Vector::unit(n, i)).collect(),
        })
    }

    pub fn generators(&self) -> &[Vector] {
        &self.generators
    }

    pub fn dim(&self) -> usize {
        self.generators[0].len()
    }

    /// `Σᵢ max{⟨x, eᵢ⟩, 0}·eᵢ`
    pub(crate) fn project(&self, x: &Vector) -> Vector {
        self.generators
            .iter()
            .fold(Vector::zeros(x.len()), |acc, e| {
                let c = x.dot(e);
                if c > 0.0 {
                    acc.add_scaled(c, e)
                } else {
                    acc
                }
            })
    }
}

/// Projection onto the closed ball `B(0, ρ)`.
pub fn proj_ball(x: &Vector, rho: f64) -> Result<ProjectionOutcome<Vector>> {
    require_positive("rho", rho)?;
    let norm = x.norm();
    let canonical = x.scale(rho / norm.max(rho));
    Ok(ProjectionOutcome::unique(canonical, (norm - rho).max(0.0)))
}

/// Projection onto the sphere `S(0, ρ)`; every sphere point is nearest to 0.
pub fn proj_sphere(x: &Vector, rho: f64) -> Result<ProjectionOutcome<Vector>> {
    require_positive("rho", rho)?;
    if x.is_zero() {
        return Ok(ProjectionOutcome::continuum(
            Vector::unit(x.len(), 0).scale(rho),
            String::from("the whole sphere S(0, rho)"),
            rho,
        ));
    }
    let norm = x.norm();
    Ok(ProjectionOutcome::unique(
        x.scale(rho / norm),
        math::abs(norm - rho),
    ))
}

/// Projection onto the ray `ℝ₊e` for a unit vector `e`.
pub fn proj_ray(x: &Vector, direction: &Vector) -> Result<ProjectionOutcome<Vector>> {
    x.check_same_dim(direction)?;
    if math::abs(direction.norm() - 1.0) > ORTHONORMAL_TOL {
        return Err(Error::InvalidParameter {
            name: "direction",
            reason: "must be a unit vector",
        });
    }
    let t = x.dot(direction).max(0.0);
    let canonical = direction.scale(t);
    let distance = x.distance(&canonical);
    Ok(ProjectionOutcome::unique(canonical, distance))
}

/// Projection onto `K = Σ ℝ₊eᵢ` for an orthonormal family.
///
/// The distance equals `√(‖x‖² − Σ max{⟨x,eᵢ⟩,0}²)`; it is evaluated as
/// `‖x − P_K x‖` to avoid cancellation.
pub fn proj_orthonormal_cone(
    x: &Vector,
    cone: &OrthonormalConeSpec,
) -> Result<ProjectionOutcome<Vector>> {
    x.check_same_dim(&cone.generators[0])?;
    let p = cone.project(x);
    let distance = x.distance(&p);
    Ok(ProjectionOutcome::unique(p, distance))
}

/// Projection onto the polar cone `{y : ⟨y, eᵢ⟩ ≤ 0 ∀i}`.
pub fn proj_polar_orthonormal_cone(
    x: &Vector,
    cone: &OrthonormalConeSpec,
) -> Result<ProjectionOutcome<Vector>> {
    x.check_same_dim(&cone.generators[0])?;
    let removed = cone.project(x);
    let canonical = x.sub(&removed);
    Ok(ProjectionOutcome::unique(canonical, removed.norm()))
}

/// Projection onto the circle `V ∩ S(0, ρ)` for a nonzero subspace `V`
/// given by its projector.
///
/// When `x ⊥ V` every point of the circle is nearest. The canonical point is
/// then `ρ·w/‖w‖`, with `w` the caller's `witness` (projected onto `V`) or the
/// first nonzero `P_V eᵢ`.
pub fn proj_circle<F>(
    x: &Vector,
    rho: f64,
    subspace_projector: F,
    witness: Option<&Vector>,
) -> Result<ProjectionOutcome<Vector>>
where
    F: Fn(&Vector) -> Vector,
{
    require_positive("rho", rho)?;
    let pv = subspace_projector(x);
    x.check_same_dim(&pv)?;
    let tol = 1e-12 * x.norm().max(1.0);
    let pv_norm = pv.norm();
    if pv_norm > tol {
        let canonical = pv.scale(rho / pv_norm);
        let distance = x.distance(&canonical);
        return Ok(ProjectionOutcome::unique(canonical, distance));
    }

    let probe = |w: &Vector| {
        let pw = subspace_projector(w);
        let n = pw.norm();
        (n > 1e-12).then(|| pw.scale(1.0 / n))
    };
    let unit = match witness {
        Some(w) => {
            x.check_same_dim(w)?;
            probe(w).ok_or(Error::NoSubspaceWitness)?
        }
        None => (0..x.len())
            .find_map(|i| probe(&Vector::unit(x.len(), i)))
            .ok_or(Error::NoSubspaceWitness)?,
    };
    let canonical = unit.scale(rho);
    let distance = math::sqrt(x.norm_squared() + rho * rho);
    Ok(ProjectionOutcome::continuum(
        canonical,
        String::from("the whole circle V ∩ S(0, rho)"),
        distance,
    ))
}

/// Projection of `(x, ξ)` onto `S(0, β) × {α}`.
pub fn proj_sphere_slice(
    x: &Vector,
    xi: f64,
    alpha: f64,
    beta: f64,
) -> Result<ProjectionOutcome<Lifted>> {
    require_positive("beta", beta)?;
    if !alpha.is_finite() || !xi.is_finite() {
        return Err(Error::NonFinite);
    }
    let input = Lifted {
        base: x.clone(),
        height: xi,
    };
    if x.is_zero() {
        let canonical = Lifted {
            base: Vector::unit(x.len(), 0).scale(beta),
            height: alpha,
        };
        let distance = input.distance(&canonical);
        return Ok(ProjectionOutcome::continuum(
            canonical,
            format!("the whole slice S(0, {beta}) x {{{alpha}}}"),
            distance,
        ));
    }
    let canonical = Lifted {
        base: x.scale(beta / x.norm()),
        height: alpha,
    };
    let distance = input.distance(&canonical);
    Ok(ProjectionOutcome::unique(canonical, distance))
}

/// `max ⟨(x, ξ), S(0, β) × {α}⟩ = β‖x‖ + ξα`.
pub fn max_inner_sphere_slice(x: &Vector, xi: f64, alpha: f64, beta: f64) -> Result<f64> {
    require_positive("beta", beta)?;
    Ok(beta * x.norm() + xi * alpha)
}
