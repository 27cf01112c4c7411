//! First-order methods for `min ½⟨x, Mx⟩` over `C = ℝ₊ᴺ ∩ S(0, 1)`.
//!
//! All methods share [`stop_rule`], start by projecting `x0` onto `C`, and
//! report their final point after a last projection onto `C`. Set-valued
//! projections always resolve to the canonical selection of
//! [`proj_orthant_cap_sphere`].

mod douglas_rachford;
mod fista;
mod lange;
mod pgm;

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg::{operator_norm, SymMatrix, Vector};
use crate::math;
use crate::projections::proj_orthant_cap_sphere;

pub use douglas_rachford::{dr, li_pong_dr};
pub use fista::fista;
pub use lange::{lange_merit, lange_proximal_distance, lange_step};
pub use pgm::pgm;

/// `f(x) = ½⟨x, Mx⟩` with its gradient Lipschitz constant `L = ‖M‖`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadraticObjective {
    m: SymMatrix,
    lipschitz: f64,
}

impl QuadraticObjective {
    pub fn new(m: SymMatrix) -> Result<Self> {
        let lipschitz = operator_norm(&m)?;
        Ok(QuadraticObjective { m, lipschitz })
    }

    pub fn matrix(&self) -> &SymMatrix {
        &self.m
    }

    pub fn dim(&self) -> usize {
        self.m.dim()
    }

    pub fn lipschitz(&self) -> f64 {
        self.lipschitz
    }

    pub fn value(&self, x: &Vector) -> f64 {
        0.5 * self.m.quadratic_form(x)
    }

    pub fn gradient(&self, x: &Vector) -> Vector {
        self.m.mul_vec(x)
    }

    // step_scale/L, or 1.0 when M = 0
    fn gradient_step(&self, step_scale: f64) -> f64 {
        if self.lipschitz > 0.0 {
            step_scale / self.lipschitz
        } else {
            1.0
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SolverConfig {
    pub max_iter: usize,
    pub rel_tol: f64,
    /// Defaults to 1.0 for PGM and FISTA, 0.5 for the splitting methods.
    pub step_scale: Option<f64>,
    /// Defaults to 1.0 for DR and `0.5/max(L, 1)` for Li–Pong.
    pub dr_gamma: Option<f64>,
    pub lange_rho_init: f64,
    pub lange_rho_growth: f64,
    pub seed: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            max_iter: 1000,
            rel_tol: 1e-8,
            step_scale: None,
            dr_gamma: None,
            lange_rho_init: 1.0,
            lange_rho_growth: 1.2,
            seed: 0,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_iter == 0 {
            return Err(Error::InvalidConfig("max_iter must be at least 1"));
        }
        if !(self.rel_tol > 0.0 && self.rel_tol.is_finite()) {
            return Err(Error::InvalidConfig("rel_tol must be positive"));
        }
        if let Some(s) = self.step_scale {
            if !(s > 0.0 && s <= 1.0) {
                return Err(Error::InvalidConfig("step_scale must lie in (0, 1]"));
            }
        }
        if let Some(g) = self.dr_gamma {
            if !(g > 0.0 && g.is_finite()) {
                return Err(Error::InvalidConfig("dr_gamma must be positive"));
            }
        }
        if !(self.lange_rho_init > 0.0 && self.lange_rho_init.is_finite()) {
            return Err(Error::InvalidConfig("lange_rho_init must be positive"));
        }
        if !(self.lange_rho_growth > 1.0 && self.lange_rho_growth.is_finite()) {
            return Err(Error::InvalidConfig("lange_rho_growth must exceed 1"));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SolverTrace {
    pub final_x: Vector,
    pub final_fval: f64,
    pub iterations: usize,
    pub converged: bool,
    /// Relative change of the monitored sequence at each iteration.
    pub residual_history: Vec<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    Fista,
    Pgm,
    Lange,
    LiPong,
    Dr,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [
        Algorithm::Fista,
        Algorithm::Pgm,
        Algorithm::Lange,
        Algorithm::LiPong,
        Algorithm::Dr,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Algorithm::Fista => "fista",
            Algorithm::Pgm => "pgm",
            Algorithm::Lange => "lange",
            Algorithm::LiPong => "li_pong",
            Algorithm::Dr => "dr",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.id() == s)
            .ok_or_else(|| Error::UnknownAlgorithm(String::from(s)))
    }
}

/// `‖x_n − x_prev‖ / max{‖x_prev‖, 1} < rel_tol`.
pub fn stop_rule(x_n: &Vector, x_prev: &Vector, rel_tol: f64) -> Result<bool> {
    x_n.check_same_dim(x_prev)?;
    Ok(relative_change(x_n, x_prev) < rel_tol)
}

pub(crate) fn relative_change(x_n: &Vector, x_prev: &Vector) -> f64 {
    x_n.distance(x_prev) / x_prev.norm().max(1.0)
}

/// Canonical nearest point of `ℝ₊ᴺ ∩ S(0, 1)`.
pub fn select_feasible(x: &Vector) -> Vector {
    proj_orthant_cap_sphere(x)
        .expect("nonempty finite vector")
        .canonical
}

/// `(1, …, 1)/√N`.
pub fn default_start(n: usize) -> Vector {
    Vector::filled(n, 1.0 / math::sqrt(n as f64))
}

pub(crate) fn check_inputs(obj: &QuadraticObjective, x0: &Vector, cfg: &SolverConfig) -> Result<()> {
    cfg.validate()?;
    if x0.len() != obj.dim() {
        return Err(Error::DimensionMismatch {
            expected: obj.dim(),
            found: x0.len(),
        });
    }
    Ok(())
}

pub(crate) fn finish(
    obj: &QuadraticObjective,
    last: &Vector,
    iterations: usize,
    converged: bool,
    residual_history: Vec<f64>,
) -> SolverTrace {
    let final_x = select_feasible(last);
    SolverTrace {
        final_fval: obj.value(&final_x),
        final_x,
        iterations,
        converged,
        residual_history,
    }
}

/// Runs `algorithm` from `x0`.
pub fn solve(
    algorithm: Algorithm,
    obj: &QuadraticObjective,
    x0: &Vector,
    cfg: &SolverConfig,
) -> Result<SolverTrace> {
    match algorithm {
        Algorithm::Fista => fista(obj, x0, cfg),
        Algorithm::Pgm => pgm(obj, x0, cfg),
        Algorithm::Lange => lange_proximal_distance(obj, x0, cfg),
        Algorithm::LiPong => li_pong_dr(obj, x0, cfg),
        Algorithm::Dr => dr(obj, x0, cfg),
    }
}

/// Parses a comma-separated list of algorithm ids.
pub fn parse_algorithms(list: &str) -> Result<Vec<Algorithm>> {
    list.split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse())
        .collect()
}
