//! Projectors onto cones, balls, spheres and their intersections.
//!
//! Projections onto nonconvex sets can be set-valued. Every projector here
//! returns a [`ProjectionOutcome`]: one canonical nearest point, a tag saying
//! whether that point is the only one, one of finitely many, or part of a
//! continuum, and the distance from the input to the set.
//!
//! Canonical selections are deterministic: the lowest-index generator, the
//! first basis vector, or the leading eigenvector column produced by
//! [`eig_sym`](crate::linalg::eig_sym).

mod basic;
mod checks;
mod cones;
mod intersections;
mod lorentz;
mod psd;

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::math;

pub use basic::{
    max_inner_sphere_slice, proj_ball, proj_circle, proj_orthonormal_cone,
    proj_polar_orthonormal_cone, proj_ray, proj_sphere, proj_sphere_slice, OrthonormalConeSpec,
};
pub use checks::{kkt_cone_check, moreau_check, MoreauResiduals};
pub use cones::{
    ConvexCone, FiniteGeneratorSpec, LorentzCone, NonpositiveOrthant, Orthant, Subspace,
};
pub use intersections::{
    composed_ball_then_cone, proj_cone_cap_ball, proj_cone_cap_sphere_generic,
    proj_fg_cone_cap_sphere, proj_orthant_cap_sphere,
};
pub use lorentz::{proj_lorentz, proj_lorentz_cap_sphere, LorentzSpec};
pub use psd::{proj_psd, proj_psd_cap_sphere, proj_rank1_sphere, Rank1SphereProjection};

/// Tolerance for membership tests on projector outputs.
pub const MEMBERSHIP_TOL: f64 = 1e-10;

/// How many nearest points the projection has.
#[derive(Clone, Debug, PartialEq)]
pub enum Cardinality<P> {
    Unique,
    /// Finitely many nearest points; the first is the canonical one.
    FiniteSet(Vec<P>),
    /// Infinitely many nearest points, described in words.
    Continuum(String),
}

impl<P> Cardinality<P> {
    pub fn tag(&self) -> &'static str {
        match self {
            Cardinality::Unique => "Unique",
            Cardinality::FiniteSet(_) => "FiniteSet",
            Cardinality::Continuum(_) => "Continuum",
        }
    }
}

/// A canonical nearest point, the shape of the full nearest-point set, and
/// the distance to the target set.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjectionOutcome<P> {
    pub canonical: P,
    pub cardinality: Cardinality<P>,
    pub distance: f64,
}

impl<P: Clone> ProjectionOutcome<P> {
    pub(crate) fn unique(canonical: P, distance: f64) -> Self {
        ProjectionOutcome {
            canonical,
            cardinality: Cardinality::Unique,
            distance,
        }
    }

    pub(crate) fn finite(points: Vec<P>, distance: f64) -> Self {
        ProjectionOutcome {
            canonical: points[0].clone(),
            cardinality: Cardinality::FiniteSet(points),
            distance,
        }
    }

    pub(crate) fn continuum(canonical: P, description: String, distance: f64) -> Self {
        ProjectionOutcome {
            canonical,
            cardinality: Cardinality::Continuum(description),
            distance,
        }
    }

    pub fn is_unique(&self) -> bool {
        matches!(self.cardinality, Cardinality::Unique)
    }

    /// All explicitly known nearest points: the listed set for `FiniteSet`,
    /// otherwise just the canonical point.
    pub fn known_points(&self) -> Vec<P> {
        match &self.cardinality {
            Cardinality::FiniteSet(points) => points.clone(),
            _ => alloc::vec![self.canonical.clone()],
        }
    }
}

/// A point `(x, ξ)` of the product space `ℋ ⊕ ℝ`.
#[derive(Clone, Debug, PartialEq)]
pub struct Lifted {
    pub base: Vector,
    pub height: f64,
}

impl Lifted {
    pub fn new(base: Vector, height: f64) -> Result<Self> {
        if !height.is_finite() {
            return Err(Error::NonFinite);
        }
        Ok(Lifted { base, height })
    }

    /// Splits a vector of length `n + 1` into `(first n entries, last entry)`.
    pub fn from_vector(v: &Vector) -> Result<Self> {
        let s = v.as_slice();
        if s.len() < 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: s.len(),
            });
        }
        let base = Vector::from_slice(&s[..s.len() - 1])?;
        Ok(Lifted {
            base,
            height: s[s.len() - 1],
        })
    }

    pub fn to_vector(&self) -> Vector {
        let mut v = self.base.as_slice().to_vec();
        v.push(self.height);
        Vector::from_vec_unchecked(v)
    }

    pub fn norm(&self) -> f64 {
        math::sqrt(self.base.norm_squared() + self.height * self.height)
    }

    pub fn dot(&self, other: &Lifted) -> f64 {
        self.base.dot(&other.base) + self.height * other.height
    }

    pub fn scale(&self, factor: f64) -> Lifted {
        Lifted {
            base: self.base.scale(factor),
            height: self.height * factor,
        }
    }

    pub fn distance(&self, other: &Lifted) -> f64 {
        let d = self.height - other.height;
        math::sqrt(self.base.sub(&other.base).norm_squared() + d * d)
    }
}

/// Sign classification of `κ = max⟨x, generators⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum KappaSign {
    Positive,
    Zero,
    Negative,
}

/// Absolute tolerance `1e-12·max(1, ‖x‖·ρ)` used to route `κ` to its branch.
pub(crate) fn kappa_tolerance(x_norm: f64, rho: f64) -> f64 {
    1e-12 * (x_norm * rho).max(1.0)
}

pub(crate) fn classify_kappa(kappa: f64, tol: f64) -> KappaSign {
    if kappa > tol {
        KappaSign::Positive
    } else if kappa < -tol {
        KappaSign::Negative
    } else {
        KappaSign::Zero
    }
}

pub(crate) fn require_positive(name: &'static str, value: f64) -> Result<()> {
    if !value.is_finite() {
        return Err(Error::NonFinite);
    }
    if value <= 0.0 {
        return Err(Error::InvalidParameter {
            name,
            reason: "must be strictly positive",
        });
    }
    Ok(())
}

/// Indices `i` with `scores[i] ≥ max − tol`, in increasing order.
pub(crate) fn argmax_set(scores: &[f64], tol: f64) -> (f64, Vec<usize>) {
    let kappa = scores.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let idx = scores
        .iter()
        .enumerate()
        .filter(|(_, &s)| s >= kappa - tol)
        .map(|(i, _)| i)
        .collect();
    (kappa, idx)
}

// 1-based index list for human-readable descriptions.
pub(crate) fn describe_indices(idx: &[usize]) -> String {
    use core::fmt::Write;
    let mut s = String::from("{");
    for (k, i) in idx.iter().enumerate() {
        if k > 0 {
            s.push(',');
        }
        let _ = write!(s, "{}", i + 1);
    }
    s.push('}');
    s
}
