use super::cones::ConvexCone;
use crate::linalg::Vector;
use crate::math;

/// Residuals of the Moreau decomposition `x = P_K x + P_{K^⊖} x`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MoreauResiduals {
    /// `‖x − P_K x − P_{K^⊖} x‖`.
    pub decomposition: f64,
    /// `|‖x‖² − d_K(x)² − d_{K^⊖}(x)²|`.
    pub pythagoras: f64,
}

impl MoreauResiduals {
    /// Both residuals are at most `1e-10·max(1, ‖x‖²)`.
    pub fn holds(&self, x: &Vector) -> bool {
        let tol = 1e-10 * x.norm_squared().max(1.0);
        self.decomposition <= tol && self.pythagoras <= tol
    }
}

pub fn moreau_check<F, G>(x: &Vector, cone_projector: F, polar_projector: G) -> MoreauResiduals
where
    F: Fn(&Vector) -> Vector,
    G: Fn(&Vector) -> Vector,
{
    let pk = cone_projector(x);
    let pp = polar_projector(x);
    let decomposition = x.sub(&pk).sub(&pp).norm();
    let dk = x.distance(&pk);
    let dp = x.distance(&pp);
    let pythagoras = math::abs(x.norm_squared() - dk * dk - dp * dp);
    MoreauResiduals {
        decomposition,
        pythagoras,
    }
}

/// Tests whether `p` satisfies the optimality conditions for `P_K x`:
/// `p ∈ K`, `|⟨x − p, p⟩| ≤ tol` and `x − p ∈ K^⊖`.
pub fn kkt_cone_check<C>(x: &Vector, p: &Vector, cone: &C, tol: f64) -> bool
where
    C: ConvexCone + ?Sized,
{
    if x.len() != p.len() || p.len() != cone.dim() {
        return false;
    }
    let r = x.sub(p);
    cone.contains(p, tol) && math::abs(r.dot(p)) <= tol && cone.polar_contains(&r, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::positive_part;
    use crate::projections::cones::{NonpositiveOrthant, Orthant};

    fn v(e: &[f64]) -> Vector {
        Vector::from_slice(e).unwrap()
    }

    #[test]
    fn orthant_pair() {
        let neg = NonpositiveOrthant { dim: 2 };
        for x in [v(&[1.0, -1.0]), v(&[0.0, 0.0])] {
            let r = moreau_check(&x, positive_part, |y| neg.project(y));
            assert_eq!(r.decomposition, 0.0);
            assert_eq!(r.pythagoras, 0.0);
            assert!(r.holds(&x));
        }
    }

    #[test]
    fn kkt_examples() {
        let k = Orthant { dim: 2 };
        let x = v(&[1.0, -1.0]);
        assert!(kkt_cone_check(&x, &v(&[1.0, 0.0]), &k, 1e-9));
        assert!(!kkt_cone_check(&x, &v(&[1.0, -0.5]), &k, 1e-9));
        assert!(!kkt_cone_check(&x, &v(&[1.001, 0.0]), &k, 1e-9));
    }
}
