//! Exact `μ(M) = min ½⟨x, Mx⟩` over `ℝ₊ᴺ ∩ S(0, 1)` for small `N`, labeled
//! random matrices, and the copositivity benchmark protocol.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::linalg::{eig_sym, SymMatrix, Vector};
use crate::math;
use crate::solvers::{default_start, solve, Algorithm, QuadraticObjective, SolverConfig, SolverTrace};

/// Largest dimension accepted by [`exact_mu_oracle`].
pub const MAX_ORACLE_DIM: usize = 12;
/// Cap on rejection-sampling draws in [`generate_labeled`].
pub const MAX_DRAWS: usize = 1_000_000;
const SUPPORT_TOL: f64 = 1e-12;

/// Exact `μ(M)` by enumerating supports.
///
/// Every local minimizer with support `J` is a one-signed eigenvector of
/// `M_JJ` with value `½λ`. Eigenvectors with a component below `1e-12` in
/// magnitude are skipped: they belong to a smaller support.
pub fn exact_mu_oracle(m: &SymMatrix) -> Result<f64> {
    let n = m.dim();
    if n > MAX_ORACLE_DIM {
        return Err(Error::TooLarge {
            size: n,
            max: MAX_ORACLE_DIM,
        });
    }
    let mut best = f64::INFINITY;
    let mut support = Vec::with_capacity(n);
    for mask in 1u32..(1u32 << n) {
        support.clear();
        support.extend((0..n).filter(|&i| mask & (1 << i) != 0));
        let eig = eig_sym(&m.principal(&support))?;
        let k = support.len();
        for j in 0..k {
            let lambda = eig.eigenvalues()[j];
            if 0.5 * lambda >= best {
                continue;
            }
            let u = eig.eigenvector(j);
            let positive = u.iter().all(|&c| c > SUPPORT_TOL);
            let negative = u.iter().all(|&c| c < -SUPPORT_TOL);
            if positive || negative {
                best = 0.5 * lambda;
            }
        }
    }
    Ok(best)
}

/// The 5×5 Horn matrix, copositive with `μ(H) = 0`.
pub fn horn_matrix() -> SymMatrix {
    #[rustfmt::skip]
    let data = [
         1.0, -1.0,  1.0,  1.0, -1.0,
        -1.0,  1.0, -1.0,  1.0,  1.0,
         1.0, -1.0,  1.0, -1.0,  1.0,
         1.0,  1.0, -1.0,  1.0, -1.0,
        -1.0,  1.0,  1.0, -1.0,  1.0,
    ];
    SymMatrix::from_row_major(5, &data).expect("Horn matrix is symmetric")
}

/// Group A holds copositive matrices, group B the others.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Group {
    Copositive,
    NonCopositive,
}

impl Group {
    pub const ALL: [Group; 2] = [Group::Copositive, Group::NonCopositive];

    pub fn label(self) -> &'static str {
        match self {
            Group::Copositive => "A",
            Group::NonCopositive => "B",
        }
    }

    pub fn from_label(s: &str) -> Option<Group> {
        Group::ALL.into_iter().find(|g| g.label() == s)
    }

    pub fn is_copositive(self) -> bool {
        self == Group::Copositive
    }

    fn index(self) -> u64 {
        match self {
            Group::Copositive => 0,
            Group::NonCopositive => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LabeledMatrix {
    pub matrix: SymMatrix,
    pub mu_exact: f64,
    /// `mu_exact ≥ 0`.
    pub copositive: bool,
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Independent stream for trial `index` of `(size, group)`.
pub fn trial_rng(seed: u64, size: usize, group: Group, index: usize) -> ChaCha8Rng {
    let mut h = splitmix(seed);
    for part in [size as u64, group.index(), index as u64] {
        h = splitmix(h ^ part);
    }
    ChaCha8Rng::seed_from_u64(h)
}

/// Symmetric matrix with upper-triangle entries i.i.d. uniform on `[−1, 1]`.
pub fn random_symmetric<R: Rng + ?Sized>(n: usize, rng: &mut R) -> SymMatrix {
    SymMatrix::from_upper_fn(n, |_, _| rng.random_range(-1.0..=1.0)).expect("finite entries")
}

/// Uniform-direction start in `C`: `|g|/‖g‖` for a standard normal `g`.
pub fn random_start<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vector {
    let g: Vec<f64> = (0..n)
        .map(|_| math::abs(rng.sample::<f64, _>(StandardNormal)))
        .collect();
    let norm = math::sqrt(g.iter().map(|v| v * v).sum());
    if norm == 0.0 {
        return default_start(n);
    }
    Vector::new(g.into_iter().map(|v| v / norm).collect()).expect("finite start")
}

/// `count` random matrices with the requested label, by rejection sampling.
///
/// Matrix `i` comes from its own stream, so output prefixes agree across
/// different `count` values.
pub fn generate_labeled(
    n: usize,
    count: usize,
    want_copositive: bool,
    seed: u64,
) -> Result<Vec<LabeledMatrix>> {
    if !(2..=4).contains(&n) {
        return Err(Error::InvalidParameter {
            name: "size",
            reason: "labeled generation supports sizes 2 to 4",
        });
    }
    let group = if want_copositive {
        Group::Copositive
    } else {
        Group::NonCopositive
    };
    let mut draws = 0;
    let mut out = Vec::with_capacity(count);
    for index in 0..count {
        let mut rng = trial_rng(seed, n, group, index);
        loop {
            if draws == MAX_DRAWS {
                return Err(Error::SamplingCapExceeded);
            }
            draws += 1;
            let matrix = random_symmetric(n, &mut rng);
            let mu_exact = exact_mu_oracle(&matrix)?;
            let copositive = mu_exact >= 0.0;
            if copositive == want_copositive {
                out.push(LabeledMatrix {
                    matrix,
                    mu_exact,
                    copositive,
                });
                break;
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
pub struct SolverEstimate {
    /// Smallest final objective value over all runs.
    pub mu_hat: f64,
    pub avg_iterations: f64,
    /// The run attaining `mu_hat`; the earliest one on ties.
    pub best: SolverTrace,
}

/// Runs `algorithm` from the default start and `restarts − 1` random starts
/// drawn from a stream seeded by `cfg.seed`.
pub fn mu_via_solver(
    m: &SymMatrix,
    algorithm: Algorithm,
    cfg: &SolverConfig,
    restarts: usize,
) -> Result<SolverEstimate> {
    if restarts == 0 {
        return Err(Error::InvalidParameter {
            name: "restarts",
            reason: "at least one run is required",
        });
    }
    let obj = QuadraticObjective::new(m.clone())?;
    let n = m.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(splitmix(cfg.seed));
    let mut best: Option<SolverTrace> = None;
    let mut total_iter = 0usize;
    for r in 0..restarts {
        let x0 = if r == 0 {
            default_start(n)
        } else {
            random_start(n, &mut rng)
        };
        let trace = solve(algorithm, &obj, &x0, cfg)?;
        total_iter += trace.iterations;
        if best.as_ref().is_none_or(|b| trace.final_fval < b.final_fval) {
            best = Some(trace);
        }
    }
    let best = best.expect("at least one run");
    Ok(SolverEstimate {
        mu_hat: best.final_fval,
        avg_iterations: total_iter as f64 / restarts as f64,
        best,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchmarkConfig {
    pub sizes: Vec<usize>,
    pub trials: usize,
    pub algorithms: Vec<Algorithm>,
    pub solver: SolverConfig,
    pub seed: u64,
    /// A matrix is declared copositive when `mu_hat ≥ −guard_band`.
    pub guard_band: f64,
}

impl Default for BenchmarkConfig {
    fn default() -> Self {
        BenchmarkConfig {
            sizes: alloc::vec![2, 3, 4],
            trials: 100,
            algorithms: Algorithm::ALL.to_vec(),
            solver: SolverConfig::default(),
            seed: 0,
            guard_band: 0.0,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchmarkRow {
    pub size: usize,
    pub group: Group,
    pub algorithm: Algorithm,
    pub success: usize,
    /// Mean iteration count over successful runs; `None` without successes.
    pub avg_iter: Option<f64>,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct BenchmarkReport {
    pub rows: Vec<BenchmarkRow>,
}

/// Success counts per size, group and algorithm, from a single default
/// start per matrix. Rows are ordered by size, then group, then algorithm
/// as listed in the config. `trials = 0` yields no rows.
pub fn run_benchmark(cfg: &BenchmarkConfig) -> Result<BenchmarkReport> {
    cfg.solver.validate()?;
    if !(cfg.guard_band >= 0.0 && cfg.guard_band.is_finite()) {
        return Err(Error::InvalidConfig("guard_band must be nonnegative"));
    }
    let mut rows = Vec::new();
    if cfg.trials == 0 {
        return Ok(BenchmarkReport { rows });
    }
    for &size in &cfg.sizes {
        for group in Group::ALL {
            let matrices = generate_labeled(size, cfg.trials, group.is_copositive(), cfg.seed)?;
            let objectives = matrices
                .iter()
                .map(|lm| QuadraticObjective::new(lm.matrix.clone()))
                .collect::<Result<Vec<_>>>()?;
            let x0 = default_start(size);
            for &algorithm in &cfg.algorithms {
                let mut success = 0;
                let mut iter_sum = 0usize;
                for obj in &objectives {
                    let trace = solve(algorithm, obj, &x0, &cfg.solver)?;
                    let predicted = trace.final_fval >= -cfg.guard_band;
                    if predicted == group.is_copositive() {
                        success += 1;
                        iter_sum += trace.iterations;
                    }
                }
                rows.push(BenchmarkRow {
                    size,
                    group,
                    algorithm,
                    success,
                    avg_iter: (success > 0).then(|| iter_sum as f64 / success as f64),
                });
            }
        }
    }
    Ok(BenchmarkReport { rows })
}
