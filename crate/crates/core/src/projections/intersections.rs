use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::basic::proj_ball;
use super::cones::{ConvexCone, FiniteGeneratorSpec};
use super::{
    argmax_set, classify_kappa, describe_indices, kappa_tolerance, require_positive, KappaSign,
    ProjectionOutcome,
};
use crate::error::{Error, Result};
use crate::linalg::{positive_part, Vector};
use crate::math;

const DEDUP_TOL: f64 = 1e-12;

fn checked_projection<F>(x: &Vector, cone_projector: F) -> Result<Vector>
where
    F: Fn(&Vector) -> Vector,
{
    let p = cone_projector(x);
    x.check_same_dim(&p)?;
    Ok(p)
}

/// Projection onto `K ∩ B(0, ρ)` for a closed convex cone `K`, computed as
/// `P_{B(0,ρ)} ∘ P_K`.
///
/// The distance is `√(d_K(x)² + max{‖P_K x‖ − ρ, 0}²)`.
pub fn proj_cone_cap_ball<F>(x: &Vector, rho: f64, cone_projector: F) -> Result<ProjectionOutcome<Vector>>
where
    F: Fn(&Vector) -> Vector,
{
    require_positive("rho", rho)?;
    let pk = checked_projection(x, cone_projector)?;
    let ball = proj_ball(&pk, rho)?;
    let dk = x.distance(&pk);
    let excess = ball.distance;
    let distance = math::sqrt(dk * dk + excess * excess);
    Ok(ProjectionOutcome::unique(ball.canonical, distance))
}

/// `(P_K ∘ P_{B(0,ρ)})x = ρ/max{‖x‖, ρ}·P_K x`.
///
/// This generally differs from [`proj_cone_cap_ball`]: the two
/// projectors do not commute.
pub fn composed_ball_then_cone<F>(x: &Vector, rho: f64, cone_projector: F) -> Result<Vector>
where
    F: Fn(&Vector) -> Vector,
{
    require_positive("rho", rho)?;
    let pk = checked_projection(x, cone_projector)?;
    Ok(pk.scale(rho / x.norm().max(rho)))
}

/// Projection onto `K ∩ S(0, ρ)` using only a projector for `K ≠ {0}`.
///
/// - `x ∉ K^⊖`: unique point `ρ·P_K x/‖P_K x‖`;
/// - `x ∈ K^⊥`: every point of the set is nearest, at distance `√(‖x‖² + ρ²)`;
/// - `x ∈ K^⊖ ∖ K^⊥`: [`Error::PolarCaseNeedsGenerators`]. Use
///   [`proj_fg_cone_cap_sphere`] or another generator-aware projector.
pub fn proj_cone_cap_sphere_generic<C>(
    x: &Vector,
    rho: f64,
    cone: &C,
) -> Result<ProjectionOutcome<Vector>>
where
    C: ConvexCone + ?Sized,
{
    require_positive("rho", rho)?;
    if x.len() != cone.dim() {
        return Err(Error::DimensionMismatch {
            expected: cone.dim(),
            found: x.len(),
        });
    }
    let tol = 1e-12 * x.norm().max(1.0);
    if cone.polar_contains(x, tol) {
        if !cone.orthogonal_contains(x, tol) {
            return Err(Error::PolarCaseNeedsGenerators);
        }
        let witness = cone.unit_witness().ok_or(Error::InvalidParameter {
            name: "cone",
            reason: "cone must not be {0}",
        })?;
        return Ok(ProjectionOutcome::continuum(
            witness.scale(rho),
            String::from("the whole set K ∩ S(0, rho)"),
            math::sqrt(x.norm_squared() + rho * rho),
        ));
    }
    let pk = cone.project(x);
    let pk_norm = pk.norm();
    if pk_norm == 0.0 {
        // polar test passed at tolerance but the projector disagrees
        return Err(Error::PolarCaseNeedsGenerators);
    }
    Ok(sphere_rescale(x, &pk, rho))
}

// Unique branch: ρ·P_K x/‖P_K x‖ at distance √(d_K² + (‖P_K x‖ − ρ)²).
fn sphere_rescale(x: &Vector, pk: &Vector, rho: f64) -> ProjectionOutcome<Vector> {
    let pk_norm = pk.norm();
    let dk = x.distance(pk);
    let gap = pk_norm - rho;
    ProjectionOutcome::unique(pk.scale(rho / pk_norm), math::sqrt(dk * dk + gap * gap))
}

fn dedup(points: Vec<Vector>) -> Vec<Vector> {
    let mut out: Vec<Vector> = Vec::with_capacity(points.len());
    for p in points {
        if out.iter().all(|q| q.distance(&p) > DEDUP_TOL) {
            out.push(p);
        }
    }
    out
}

/// Projection onto `K ∩ S(0, ρ)` for `K = Σ ℝ₊xᵢ` with `‖xᵢ‖ = ρ`.
///
/// With `κ = maxᵢ⟨x, xᵢ⟩` and `I(x)` its argmax set:
/// - `κ > 0`: unique point `ρ·P_K x/‖P_K x‖` (`P_K` by nonnegative least squares);
/// - `κ = 0`: the continuum `S(0, ρ) ∩ cone(conv{xᵢ : i ∈ I(x)})`;
/// - `κ < 0`: the finite set `{xᵢ : i ∈ I(x)}`.
///
/// The canonical point in the last two cases is `x_{min I(x)}`.
pub fn proj_fg_cone_cap_sphere(
    x: &Vector,
    spec: &FiniteGeneratorSpec,
) -> Result<ProjectionOutcome<Vector>> {
    let gens = spec.generators();
    x.check_same_dim(&gens[0])?;
    let rho = spec.rho();
    let scores: Vec<f64> = gens.iter().map(|g| x.dot(g)).collect();
    let tol = kappa_tolerance(x.norm(), rho);
    let (kappa, idx) = argmax_set(&scores, tol);

    match classify_kappa(kappa, tol) {
        KappaSign::Positive => {
            let pk = spec.project(x);
            if pk.norm() == 0.0 {
                return Err(Error::Singular);
            }
            Ok(sphere_rescale(x, &pk, rho))
        }
        KappaSign::Zero => {
            let canonical = gens[idx[0]].clone();
            let distance = x.distance(&canonical);
            Ok(ProjectionOutcome::continuum(
                canonical,
                format!(
                    "S(0, rho) ∩ cone(conv of generators {})",
                    describe_indices(&idx)
                ),
                distance,
            ))
        }
        KappaSign::Negative => {
            let points = dedup(idx.iter().map(|&i| gens[i].clone()).collect());
            let distance = x.distance(&points[0]);
            Ok(ProjectionOutcome::finite(points, distance))
        }
    }
}

/// Projection onto `ℝ₊ᴺ ∩ S(0, 1)`.
///
/// With `κ = maxᵢ xᵢ`:
/// - `κ > 0`: unique point `x₊/‖x₊‖`;
/// - `κ = 0`: unit vectors supported on `I(x)` with nonnegative entries;
/// - `κ < 0`: the basis vectors `{eᵢ : i ∈ I(x)}`.
///
/// The canonical point in the last two cases is `e_{min I(x)}`.
pub fn proj_orthant_cap_sphere(x: &Vector) -> Result<ProjectionOutcome<Vector>> {
    let n = x.len();
    if n == 0 {
        return Err(Error::Empty);
    }
    if !x.is_finite() {
        return Err(Error::NonFinite);
    }
    let tol = kappa_tolerance(x.norm(), 1.0);
    let (kappa, idx) = argmax_set(x.as_slice(), tol);
    match classify_kappa(kappa, tol) {
        KappaSign::Positive => {
            let xp = positive_part(x);
            Ok(sphere_rescale(x, &xp, 1.0))
        }
        KappaSign::Zero => {
            let canonical = Vector::unit(n, idx[0]);
            let distance = x.distance(&canonical);
            Ok(ProjectionOutcome::continuum(
                canonical,
                format!(
                    "unit vectors with nonnegative entries supported on coordinates {}",
                    describe_indices(&idx)
                ),
                distance,
            ))
        }
        KappaSign::Negative => {
            let points: Vec<Vector> = idx.iter().map(|&i| Vector::unit(n, i)).collect();
            let distance = x.distance(&points[0]);
            Ok(ProjectionOutcome::finite(points, distance))
        }
    }
}
