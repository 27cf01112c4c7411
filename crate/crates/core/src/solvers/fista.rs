use alloc::vec::Vec;

use super::{check_inputs, finish, relative_change, select_feasible, QuadraticObjective, SolverConfig, SolverTrace};
use crate::error::Result;
use crate::linalg::Vector;
use crate::math;

/// FISTA with plain momentum, no restart and no monotone safeguard.
pub fn fista(obj: &QuadraticObjective, x0: &Vector, cfg: &SolverConfig) -> Result<SolverTrace> {
    check_inputs(obj, x0, cfg)?;
    let step = obj.gradient_step(cfg.step_scale.unwrap_or(1.0));
    let mut x = select_feasible(x0);
    let mut y = x.clone();
    let mut t = 1.0;
    let mut history = Vec::new();
    for k in 1..=cfg.max_iter {
        let next = select_feasible(&y.add_scaled(-step, &obj.gradient(&y)));
        let t_next = 0.5 * (1.0 + math::sqrt(1.0 + 4.0 * t * t));
        y = next.add_scaled((t - 1.0) / t_next, &next.sub(&x));
        t = t_next;
        let change = relative_change(&next, &x);
        history.push(change);
        x = next;
        if change < cfg.rel_tol {
            return Ok(finish(obj, &x, k, true, history));
        }
    }
    Ok(finish(obj, &x, cfg.max_iter, false, history))
}
