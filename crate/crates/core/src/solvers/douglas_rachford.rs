use alloc::vec::Vec;

use super::{check_inputs, finish, relative_change, select_feasible, QuadraticObjective, SolverConfig, SolverTrace};
use crate::error::{Error, Result};
use crate::linalg::{eig_sym, EigenDecomposition, Vector};

const MAX_HALVINGS: usize = 60;
// smallest accepted eigenvalue of I + γM
const DEFINITENESS_MARGIN: f64 = 1e-8;

// prox_{γf}(v) = (I + γM)⁻¹v = γ⁻¹(M + γ⁻¹I)⁻¹v
struct SmoothProx {
    eig: EigenDecomposition,
    gamma: f64,
}

impl SmoothProx {
    fn new(obj: &QuadraticObjective, gamma: f64) -> Result<Self> {
        let eig = eig_sym(obj.matrix())?;
        let mut gamma = gamma;
        let mut halvings = 0;
        while 1.0 + gamma * eig.smallest() <= DEFINITENESS_MARGIN {
            if halvings == MAX_HALVINGS {
                return Err(Error::InvalidConfig("no stepsize keeps I + gamma*M positive definite"));
            }
            gamma *= 0.5;
            halvings += 1;
        }
        Ok(SmoothProx { eig, gamma })
    }

    fn apply(&self, v: &Vector) -> Result<Vector> {
        Ok(self
            .eig
            .solve_shifted(1.0 / self.gamma, v)?
            .scale(1.0 / self.gamma))
    }
}


// Runs z⁺ = z + B(2A(z) − z) − A(z) and monitors the shadow sequence A(z).
// The first shadow point has no predecessor, so stopping starts at k = 2.
// A run whose iterates overflow ends unconverged.
fn splitting<A, B>(
    obj: &QuadraticObjective,
    x0: &Vector,
    cfg: &SolverConfig,
    first: A,
    second: B,
) -> Result<SolverTrace>
where
    A: Fn(&Vector) -> Result<Vector>,
    B: Fn(&Vector) -> Result<Vector>,
{
    let mut z = select_feasible(x0);
    let mut shadow: Option<Vector> = None;
    let mut history = Vec::new();
    for k in 1..=cfg.max_iter {
        let p = first(&z)?;
        let reflected = p.scale(2.0).sub(&z);
        let z_next = if p.is_finite() && reflected.is_finite() {
            z.add(&second(&reflected)?).sub(&p)
        } else {
            reflected
        };
        if !z_next.is_finite() {
            // diverged: report the last finite shadow point
            let last = match shadow {
                Some(prev) => prev,
                None => z,
            };
            return Ok(finish(obj, &last, k, false, history));
        }
        z = z_next;
        let done = match &shadow {
            Some(prev) => {
                let change = relative_change(&p, prev);
                history.push(change);
                change < cfg.rel_tol
            }
            None => false,
        };
        shadow = Some(p);
        if done {
            return Ok(finish(obj, shadow.as_ref().unwrap(), k, true, history));
        }
    }
    let last = shadow.unwrap_or(z);
    Ok(finish(obj, &last, cfg.max_iter, false, history))
}

/// Regular Douglas–Rachford with the projection in the first position:
/// `p = P_C(z)`, `z⁺ = z + prox_{γf}(2p − z) − p`.
///
/// `γ` defaults to 1 and is halved until `I + γM` is positive definite.
pub fn dr(obj: &QuadraticObjective, x0: &Vector, cfg: &SolverConfig) -> Result<SolverTrace> {
    check_inputs(obj, x0, cfg)?;
    let prox = SmoothProx::new(obj, cfg.dr_gamma.unwrap_or(1.0))?;
    splitting(obj, x0, cfg, |z| Ok(select_feasible(z)), |v| prox.apply(v))
}

/// Li–Pong Douglas–Rachford with the smooth term first:
/// `p = prox_{γf}(z)`, `z⁺ = z + P_C(2p − z) − p`.
///
/// `γ` defaults to `0.5/max(L, 1)` and is capped at `s/L` with
/// `s = step_scale` (default 0.5).
pub fn li_pong_dr(obj: &QuadraticObjective, x0: &Vector, cfg: &SolverConfig) -> Result<SolverTrace> {
    check_inputs(obj, x0, cfg)?;
    let mut gamma = cfg
        .dr_gamma
        .unwrap_or_else(|| 0.5 / obj.lipschitz().max(1.0));
    if obj.lipschitz() > 0.0 {
        gamma = gamma.min(cfg.step_scale.unwrap_or(0.5) / obj.lipschitz());
    }
    let prox = SmoothProx::new(obj, gamma)?;
    splitting(obj, x0, cfg, |z| prox.apply(z), |v| Ok(select_feasible(v)))
}
