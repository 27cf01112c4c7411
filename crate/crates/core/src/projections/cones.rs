use alloc::vec::Vec;

use super::basic::OrthonormalConeSpec;
use super::lorentz::lorentz_project_parts;
use super::require_positive;
use crate::error::{Error, Result};
use crate::linalg::{positive_part, Vector};
use crate::math;
use crate::nnls::nnls;

const GENERATOR_NORM_TOL: f64 = 1e-10;

/// A nonempty closed convex cone in `ℝⁿ` with an exact projector and
/// membership tests for the cone and its polar.
///
/// Inputs must have dimension [`dim`](ConvexCone::dim); implementations may
/// panic otherwise.
pub trait ConvexCone {
    fn dim(&self) -> usize;

    fn project(&self, x: &Vector) -> Vector;

    fn contains(&self, y: &Vector, tol: f64) -> bool;

    /// Membership in `K^⊖ = {y : ⟨y, k⟩ ≤ 0 ∀k ∈ K}`.
    fn polar_contains(&self, y: &Vector, tol: f64) -> bool;

    /// Membership in `K^⊥ = K^⊖ ∩ (−K^⊖)`.
    fn orthogonal_contains(&self, y: &Vector, tol: f64) -> bool {
        self.polar_contains(y, tol) && self.polar_contains(&y.neg(), tol)
    }

    /// A unit vector of `K`, found by projecting `±eᵢ`; `None` iff `K = {0}`.
    fn unit_witness(&self) -> Option<Vector> {
        let n = self.dim();
        (0..n)
            .flat_map(|i| [Vector::unit(n, i), Vector::unit(n, i).neg()])
            .find_map(|probe| {
                let p = self.project(&probe);
                let norm = p.norm();
                (norm > 1e-12).then(|| p.scale(1.0 / norm))
            })
    }
}

/// The nonnegative orthant `ℝ₊ⁿ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Orthant {
    pub dim: usize,
}

impl ConvexCone for Orthant {
    fn dim(&self) -> usize {
        self.dim
    }

    fn project(&self, x: &Vector) -> Vector {
        positive_part(x)
    }

    fn contains(&self, y: &Vector, tol: f64) -> bool {
        y.min() >= -tol
    }

    fn polar_contains(&self, y: &Vector, tol: f64) -> bool {
        y.max() <= tol
    }
}

/// The nonpositive orthant `−ℝ₊ⁿ`, polar to [`Orthant`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NonpositiveOrthant {
    pub dim: usize,
}

impl ConvexCone for NonpositiveOrthant {
    fn dim(&self) -> usize {
        self.dim
    }

    fn project(&self, x: &Vector) -> Vector {
        Vector::from_vec_unchecked(x.iter().map(|&v| if v < 0.0 { v } else { 0.0 }).collect())
    }

    fn contains(&self, y: &Vector, tol: f64) -> bool {
        y.max() <= tol
    }

    fn polar_contains(&self, y: &Vector, tol: f64) -> bool {
        y.min() >= -tol
    }
}

impl ConvexCone for OrthonormalConeSpec {
    fn dim(&self) -> usize {
        OrthonormalConeSpec::dim(self)
    }

    fn project(&self, x: &Vector) -> Vector {
        OrthonormalConeSpec::project(self, x)
    }

    fn contains(&self, y: &Vector, tol: f64) -> bool {
        let coeffs: Vec<f64> = self.generators().iter().map(|e| y.dot(e)).collect();
        if coeffs.iter().any(|&c| c < -tol) {
            return false;
        }
        let span = self
            .generators()
            .iter()
            .zip(&coeffs)
            .fold(Vector::zeros(y.len()), |acc, (e, &c)| acc.add_scaled(c, e));
        y.distance(&span) <= tol
    }

    fn polar_contains(&self, y: &Vector, tol: f64) -> bool {
        self.generators().iter().all(|e| y.dot(e) <= tol)
    }
}

/// Generators `{xᵢ}` of common norm `ρ` spanning `K = Σ ℝ₊xᵢ`.
#[derive(Clone, Debug, PartialEq)]
pub struct FiniteGeneratorSpec {
    generators: Vec<Vector>,
    rho: f64,
}

impl FiniteGeneratorSpec {
    pub fn new(generators: Vec<Vector>, rho: f64) -> Result<Self> {
        require_positive("rho", rho)?;
        if generators.is_empty() {
            return Err(Error::Empty);
        }
        for g in &generators[1..] {
            generators[0].check_same_dim(g)?;
        }
        if generators
            .iter()
            .any(|g| math::abs(g.norm() - rho) > GENERATOR_NORM_TOL)
        {
            return Err(Error::InvalidParameter {
                name: "generators",
                reason: "every generator must have norm rho",
            });
        }
        Ok(FiniteGeneratorSpec { generators, rho })
    }

    /// Rescales arbitrary nonzero directions to norm `ρ`.
    pub fn from_directions(directions: Vec<Vector>, rho: f64) -> Result<Self> {
        require_positive("rho", rho)?;
        let mut scaled = Vec::with_capacity(directions.len());
        for d in directions {
            let n = d.norm();
            if n == 0.0 {
                return Err(Error::InvalidParameter {
                    name: "generators",
                    reason: "generators must be nonzero",
                });
            }
            scaled.push(d.scale(rho / n));
        }
        Self::new(scaled, rho)
    }

    pub fn generators(&self) -> &[Vector] {
        &self.generators
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }
}

impl ConvexCone for FiniteGeneratorSpec {
    fn dim(&self) -> usize {
        self.generators[0].len()
    }

    fn project(&self, x: &Vector) -> Vector {
        nnls(&self.generators, x)
            .expect("generator dimensions validated at construction")
            .fitted
    }

    fn contains(&self, y: &Vector, tol: f64) -> bool {
        nnls(&self.generators, y).is_ok_and(|s| s.residual_norm <= tol)
    }

    fn polar_contains(&self, y: &Vector, tol: f64) -> bool {
        self.generators.iter().all(|g| y.dot(g) <= tol)
    }
}

/// The Lorentz cone `K_α = {(x, ξ) : ‖x‖ ≤ αξ}` acting on vectors of length
/// `n + 1` whose last entry is `ξ`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LorentzCone {
    alpha: f64,
    dim: usize,
}

impl LorentzCone {
    /// `dim` is the full length `n + 1`, at least 2.
    pub fn new(alpha: f64, dim: usize) -> Result<Self> {
        require_positive("alpha", alpha)?;
        if dim < 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: dim,
            });
        }
        Ok(LorentzCone { alpha, dim })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }
}

fn split_last(y: &Vector) -> (&[f64], f64) {
    let s = y.as_slice();
    (&s[..s.len() - 1], s[s.len() - 1])
}

fn slice_norm(s: &[f64]) -> f64 {
    math::sqrt(s.iter().map(|v| v * v).sum())
}

impl ConvexCone for LorentzCone {
    fn dim(&self) -> usize {
        self.dim
    }

    fn project(&self, x: &Vector) -> Vector {
        let (base, xi) = split_last(x);
        let (mut p, t) = lorentz_project_parts(base, xi, self.alpha);
        p.push(t);
        Vector::from_vec_unchecked(p)
    }

    fn contains(&self, y: &Vector, tol: f64) -> bool {
        let (base, xi) = split_last(y);
        slice_norm(base) <= self.alpha * xi + tol
    }

    fn polar_contains(&self, y: &Vector, tol: f64) -> bool {
        let (base, xi) = split_last(y);
        slice_norm(base) <= -xi / self.alpha + tol
    }
}

/// A linear subspace given by an orthonormal basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace {
    basis: OrthonormalConeSpec,
}

impl Subspace {
    pub fn new(basis: Vec<Vector>) -> Result<Self> {
        Ok(Subspace {
            basis: OrthonormalConeSpec::new(basis)?,
        })
    }

    pub fn basis(&self) -> &[Vector] {
        self.basis.generators()
    }
}

impl ConvexCone for Subspace {
    fn dim(&self) -> usize {
        self.basis.dim()
    }

    fn project(&self, x: &Vector) -> Vector {
        self.basis
            .generators()
            .iter()
            .fold(Vector::zeros(x.len()), |acc, e| acc.add_scaled(x.dot(e), e))
    }

    fn contains(&self, y: &Vector, tol: f64) -> bool {
        y.distance(&self.project(y)) <= tol
    }

    fn polar_contains(&self, y: &Vector, tol: f64) -> bool {
        self.project(y).norm() <= tol
    }
}
