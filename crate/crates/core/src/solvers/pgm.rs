use alloc::vec::Vec;

use super::{check_inputs, finish, relative_change, select_feasible, QuadraticObjective, SolverConfig, SolverTrace};
use crate::error::Result;
use crate::linalg::Vector;

/// Projected gradient: `x⁺ = P_C(x − (s/L)·Mx)`.
pub fn pgm(obj: &QuadraticObjective, x0: &Vector, cfg: &SolverConfig) -> Result<SolverTrace> {
    check_inputs(obj, x0, cfg)?;
    let step = obj.gradient_step(cfg.step_scale.unwrap_or(1.0));
    let mut x = select_feasible(x0);
    let mut history = Vec::new();
    for k in 1..=cfg.max_iter {
        let next = select_feasible(&x.add_scaled(-step, &obj.gradient(&x)));
        let change = relative_change(&next, &x);
        history.push(change);
        x = next;
        if change < cfg.rel_tol {
            return Ok(finish(obj, &x, k, true, history));
        }
    }
    Ok(finish(obj, &x, cfg.max_iter, false, history))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::SymMatrix;

    #[test]
    fn descent_on_psd_instance() {
        let m = SymMatrix::from_rows(&[
            alloc::vec![2.0, 0.5, 0.0],
            alloc::vec![0.5, 1.0, 0.3],
            alloc::vec![0.0, 0.3, 3.0],
        ])
        .unwrap();
        let obj = QuadraticObjective::new(m).unwrap();
        let cfg = SolverConfig {
            max_iter: 1,
            ..Default::default()
        };
        let mut x = select_feasible(&Vector::from_slice(&[0.2, 0.9, 0.4]).unwrap());
        for _ in 0..50 {
            let t = pgm(&obj, &x, &cfg).unwrap();
            assert!(t.final_fval <= obj.value(&x) + 1e-12);
            x = t.final_x;
        }
    }
}
