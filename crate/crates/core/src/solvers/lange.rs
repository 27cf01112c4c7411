use alloc::vec::Vec;

use super::{check_inputs, finish, relative_change, select_feasible, QuadraticObjective, SolverConfig, SolverTrace};
use crate::error::{Error, Result};
use crate::linalg::{eig_sym, EigenDecomposition, Vector};
use crate::projections::proj_orthant_cap_sphere;

const RHO_CAP: f64 = 1e8;

/// One majorize-minimize step at penalty `ρ`: solves
/// `(M + ρI)x⁺ = ρ·P_C(x)` given the eigendecomposition of `M`.
pub fn lange_step(eig: &EigenDecomposition, x: &Vector, rho: f64) -> Result<Vector> {
    eig.solve_shifted(rho, &select_feasible(x).scale(rho))
}

/// `f(x) + (ρ/2)·d_C(x)²`.
pub fn lange_merit(obj: &QuadraticObjective, x: &Vector, rho: f64) -> f64 {
    let d = proj_orthant_cap_sphere(x)
        .expect("nonempty finite vector")
        .distance;
    obj.value(x) + 0.5 * rho * d * d
}

/// Proximal distance method: MM steps on `f + (ρ_k/2)·d_C²` with `ρ_k`
/// growing geometrically up to `1e8`.
///
/// A singular shifted system triggers one retry at the next penalty value;
/// a second failure ends the run unconverged.
pub fn lange_proximal_distance(
    obj: &QuadraticObjective,
    x0: &Vector,
    cfg: &SolverConfig,
) -> Result<SolverTrace> {
    check_inputs(obj, x0, cfg)?;
    let eig = eig_sym(obj.matrix())?;
    let grow = |rho: f64| (rho * cfg.lange_rho_growth).min(RHO_CAP);
    let mut rho = cfg.lange_rho_init;
    let mut x = select_feasible(x0);
    let mut history = Vec::new();
    for k in 1..=cfg.max_iter {
        let next = match lange_step(&eig, &x, rho) {
            Ok(next) => next,
            Err(Error::Singular) => {
                rho = grow(rho);
                match lange_step(&eig, &x, rho) {
                    Ok(next) => next,
                    Err(Error::Singular) => return Ok(finish(obj, &x, k - 1, false, history)),
                    Err(e) => return Err(e),
                }
            }
            Err(e) => return Err(e),
        };
        if !next.is_finite() {
            return Ok(finish(obj, &x, k - 1, false, history));
        }
        let change = relative_change(&next, &x);
        history.push(change);
        x = next;
        rho = grow(rho);
        if change < cfg.rel_tol {
            return Ok(finish(obj, &x, k, true, history));
        }
    }
    Ok(finish(obj, &x, cfg.max_iter, false, history))
}
