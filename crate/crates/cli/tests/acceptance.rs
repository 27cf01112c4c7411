//! Acceptance suite: one PASS/FAIL line per criterion.

use std::panic::{self, AssertUnwindSafe};
use std::process::Command;
use std::time::Instant;

use coneproj::copositivity::{
    exact_mu_oracle, horn_matrix, mu_via_solver, random_symmetric, run_benchmark,
    BenchmarkConfig, Group,
};
use coneproj::linalg::{eig_sym, positive_part, trace_inner};
use coneproj::projections::{
    composed_ball_then_cone, kkt_cone_check, moreau_check, proj_circle, proj_cone_cap_ball,
    proj_fg_cone_cap_sphere, proj_lorentz_cap_sphere, proj_orthant_cap_sphere,
    proj_orthonormal_cone, proj_polar_orthonormal_cone, proj_psd, proj_psd_cap_sphere,
    ConvexCone, FiniteGeneratorSpec, LorentzCone, LorentzSpec, NonpositiveOrthant, Orthant,
    OrthonormalConeSpec, Subspace,
};
use coneproj::solvers::{Algorithm, SolverConfig};
use coneproj::{SymMatrix, Vector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn gaussian(rng: &mut ChaCha8Rng, n: usize, scale: f64) -> Vector {
    Vector::new((0..n).map(|_| scale * rng.sample::<f64, _>(StandardNormal)).collect()).unwrap()
}

fn gaussian_matrix(rng: &mut ChaCha8Rng, n: usize) -> SymMatrix {
    SymMatrix::from_upper_fn(n, |_, _| rng.sample::<f64, _>(StandardNormal)).unwrap()
}

// Gram–Schmidt on Gaussian draws.
fn orthonormal_set(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Vec<Vector> {
    let mut basis: Vec<Vector> = Vec::new();
    while basis.len() < k {
        let mut v = gaussian(rng, n, 1.0);
        for e in &basis {
            v = v.add_scaled(-v.dot(e), e);
        }
        let norm = v.norm();
        if norm > 1e-3 {
            basis.push(v.scale(1.0 / norm));
        }
    }
    basis
}

fn non_commutation() -> Outcome {
    let x = Vector::from_slice(&[1.0, -1.0]).unwrap();
    let composed = composed_ball_then_cone(&x, 1.0, positive_part).unwrap();
    let direct = proj_cone_cap_ball(&x, 1.0, positive_part).unwrap().canonical;
    let h = std::f64::consts::FRAC_1_SQRT_2;
    ensure(
        (composed[0] - h).abs() <= 1e-12 && composed[1].abs() <= 1e-12,
        || format!("ball-then-cone gave {composed:?}"),
    )?;
    ensure(
        (direct[0] - 1.0).abs() <= 1e-12 && direct[1].abs() <= 1e-12,
        || format!("cone-cap-ball gave {direct:?}"),
    )?;
    Ok(format!("gap {:.4}", composed.distance(&direct)))
}

fn moreau_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let neg = NonpositiveOrthant { dim: 8 };
    let cones: Vec<OrthonormalConeSpec> = (1..=5)
        .map(|k| OrthonormalConeSpec::new(orthonormal_set(&mut rng, 8, k)).unwrap())
        .collect();
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let x = gaussian(&mut rng, 8, 3.0);
        let scale = x.norm_squared().max(1.0);
        let mut residuals = vec![moreau_check(&x, positive_part, |y| neg.project(y))];
        for cone in &cones {
            residuals.push(moreau_check(
                &x,
                |y| proj_orthonormal_cone(y, cone).unwrap().canonical,
                |y| proj_polar_orthonormal_cone(y, cone).unwrap().canonical,
            ));
        }
        for r in residuals {
            worst = worst.max(r.decomposition / scale).max(r.pythagoras / scale);
            ensure(r.holds(&x), || format!("residuals {r:?} at {x:?}"))?;
        }
    }
    Ok(format!("worst scaled residual {worst:.2e}"))
}

const SAMPLES: usize = 10_000;
const INPUTS: usize = 200;

// Checks ‖x − canonical‖ ≤ min over samples of ‖x − y‖ + 1e-6, with inputs
// and samples flattened to plain coordinates.
fn check_sampled(
    name: &str,
    inputs: &[Vec<f64>],
    samples: &[Vec<f64>],
    canonical: impl Fn(&[f64]) -> Vec<f64>,
) -> Result<(), String> {
    let dist = |a: &[f64], b: &[f64]| -> f64 {
        a.iter().zip(b).map(|(u, v)| (u - v) * (u - v)).sum::<f64>().sqrt()
    };
    for x in inputs {
        let c = canonical(x);
        let d = dist(x, &c);
        let best = samples.iter().map(|y| dist(x, y)).fold(f64::INFINITY, f64::min);
        ensure(d <= best + 1e-6, || {
            format!("{name}: canonical at {d} but a sample at {best} for x = {x:?}")
        })?;
    }
    Ok(())
}

fn sampling_optimality() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);

    // nonnegative orthant of R^4 on the unit sphere
    let n = 4;
    let samples: Vec<Vec<f64>> = (0..SAMPLES)
        .map(|k| {
            let mut g: Vec<f64> = (0..n)
                .map(|i| {
                    let keep = k % 3 != 0 || (k / 3 + i) % 2 == 0;
                    if keep { rng.sample::<f64, _>(StandardNormal).abs() } else { 0.0 }
                })
                .collect();
            if g.iter().all(|&v| v == 0.0) {
                g[k % n] = 1.0;
            }
            let norm = g.iter().map(|v| v * v).sum::<f64>().sqrt();
            g.iter().map(|v| v / norm).collect()
        })
        .collect();
    let inputs: Vec<Vec<f64>> = (0..INPUTS)
        .map(|k| {
            let x = gaussian(&mut rng, n, 2.0);
            if k % 4 == 0 { x.iter().map(|v| -v.abs()).collect() } else { x.into_vec() }
        })
        .collect();
    check_sampled("orthant", &inputs, &samples, |x| {
        proj_orthant_cap_sphere(&Vector::from_slice(x).unwrap())
            .unwrap()
            .canonical
            .into_vec()
    })?;

    // cone generated by 5 random directions of norm 1.5 in R^3
    let rho = 1.5;
    let spec = FiniteGeneratorSpec::from_directions(
        (0..5).map(|_| gaussian(&mut rng, 3, 1.0)).collect(),
        rho,
    )
    .unwrap();
    let gens = spec.generators();
    let mut samples: Vec<Vec<f64>> = gens.iter().map(|g| g.as_slice().to_vec()).collect();
    while samples.len() < SAMPLES {
        let mut y = Vector::zeros(3);
        for g in gens {
            let c: f64 = rng.random();
            if rng.random_bool(0.6) {
                y = y.add_scaled(c, g);
            }
        }
        let norm = y.norm();
        if norm > 1e-9 {
            samples.push(y.scale(rho / norm).into_vec());
        }
    }
    let inputs: Vec<Vec<f64>> = (0..INPUTS).map(|_| gaussian(&mut rng, 3, 2.0).into_vec()).collect();
    check_sampled("finitely generated", &inputs, &samples, |x| {
        proj_fg_cone_cap_sphere(&Vector::from_slice(x).unwrap(), &spec)
            .unwrap()
            .canonical
            .into_vec()
    })?;

    // Lorentz cone with aperture 0.8 in R^2 x R, sphere of radius 2
    let lspec = LorentzSpec::new(0.8, 2.0).unwrap();
    let samples: Vec<Vec<f64>> = (0..SAMPLES)
        .map(|k| {
            let u = gaussian(&mut rng, 2, 1.0);
            let u = u.scale(1.0 / u.norm());
            let t: f64 = if k % 2 == 0 { 1.0 } else { rng.random() };
            let mut v = u.scale(t * 0.8).into_vec();
            v.push(1.0);
            let norm = v.iter().map(|a| a * a).sum::<f64>().sqrt();
            v.iter().map(|a| 2.0 * a / norm).collect()
        })
        .collect();
    let inputs: Vec<Vec<f64>> = (0..INPUTS)
        .map(|k| {
            let mut v = gaussian(&mut rng, 3, 2.0).into_vec();
            if k % 10 == 0 {
                v[0] = 0.0;
                v[1] = 0.0;
                v[2] = -v[2].abs();
            }
            v
        })
        .collect();
    check_sampled("Lorentz", &inputs, &samples, |x| {
        let base = Vector::from_slice(&x[..2]).unwrap();
        proj_lorentz_cap_sphere(&base, x[2], &lspec)
            .unwrap()
            .canonical
            .to_vector()
            .into_vec()
    })?;

    // PSD 3x3 matrices of Frobenius norm 1, in row-major coordinates
    let samples: Vec<Vec<f64>> = (0..SAMPLES)
        .map(|k| {
            let cols = 1 + k % 3;
            let b: Vec<Vector> = (0..cols).map(|_| gaussian(&mut rng, 3, 1.0)).collect();
            let mut m = SymMatrix::zeros(3);
            for v in &b {
                m = m.add(&SymMatrix::outer(v, 1.0));
            }
            m.scale(1.0 / m.frobenius_norm()).as_row_major().to_vec()
        })
        .collect();
    let inputs: Vec<Vec<f64>> = (0..INPUTS)
        .map(|k| {
            let a = gaussian_matrix(&mut rng, 3);
            let a = if k % 3 == 0 {
                // negative definite inputs exercise the rank-one branch
                let p = proj_psd(&a).unwrap();
                p.scale(-1.0).sub(&SymMatrix::identity(3).scale(0.1))
            } else {
                a
            };
            a.as_row_major().to_vec()
        })
        .collect();
    check_sampled("PSD", &inputs, &samples, |x| {
        let a = SymMatrix::from_row_major(3, x).unwrap();
        proj_psd_cap_sphere(&a, 1.0)
            .unwrap()
            .canonical
            .as_row_major()
            .to_vec()
    })?;

    // circle in a random plane of R^4
    let plane = Subspace::new(orthonormal_set(&mut rng, 4, 2)).unwrap();
    let samples: Vec<Vec<f64>> = (0..SAMPLES)
        .map(|_| {
            let p = plane.project(&gaussian(&mut rng, 4, 1.0));
            p.scale(1.3 / p.norm()).into_vec()
        })
        .collect();
    let inputs: Vec<Vec<f64>> = (0..INPUTS).map(|_| gaussian(&mut rng, 4, 2.0).into_vec()).collect();
    check_sampled("circle", &inputs, &samples, |x| {
        proj_circle(&Vector::from_slice(x).unwrap(), 1.3, |y| plane.project(y), None)
            .unwrap()
            .canonical
            .into_vec()
    })?;

    Ok(format!("5 sets x {INPUTS} inputs x {SAMPLES} samples"))
}

// Moves p off the projection: radially when p ≠ 0, along a cone direction
// otherwise.
fn perturb<C: ConvexCone>(cone: &C, p: &Vector) -> Vector {
    let norm = p.norm();
    if norm > 0.0 {
        p.add_scaled(1e-3 / norm, p)
    } else {
        cone.unit_witness().unwrap().scale(1e-3)
    }
}

fn kkt_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let orthant = Orthant { dim: 6 };
    let generated = FiniteGeneratorSpec::from_directions(
        (0..8).map(|_| gaussian(&mut rng, 6, 1.0)).collect(),
        1.0,
    )
    .unwrap();
    let lorentz = LorentzCone::new(1.3, 6).unwrap();
    for _ in 0..500 {
        let x = gaussian(&mut rng, 6, 1.0);
        for (name, ok, bad) in [
            check_kkt(&orthant, &x, "orthant"),
            check_kkt(&generated, &x, "generated cone"),
            check_kkt(&lorentz, &x, "Lorentz cone"),
        ] {
            ensure(ok, || format!("{name}: conditions fail at the projection of {x:?}"))?;
            ensure(!bad, || format!("{name}: conditions hold after perturbation at {x:?}"))?;
        }
    }
    Ok("3 cones x 500 inputs".into())
}

fn check_kkt<C: ConvexCone>(cone: &C, x: &Vector, name: &'static str) -> (&'static str, bool, bool) {
    let p = cone.project(x);
    let ok = kkt_cone_check(x, &p, cone, 1e-9);
    let bad = kkt_cone_check(x, &perturb(cone, &p), cone, 1e-9);
    (name, ok, bad)
}

fn psd_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let a = gaussian_matrix(&mut rng, 4);
        let p = proj_psd(&a).unwrap();
        let eig = eig_sym(&p).unwrap();
        ensure(eig.smallest() >= -1e-8, || format!("λ_min(P A) = {}", eig.smallest()))?;
        let ortho = trace_inner(&p, &a.sub(&p)).unwrap();
        ensure(ortho.abs() <= 1e-8, || format!("⟨P A, A − P A⟩ = {ortho}"))?;
        let lam_plus: f64 = eig_sym(&a)
            .unwrap()
            .eigenvalues()
            .iter()
            .map(|l| l.max(0.0).powi(2))
            .sum::<f64>()
            .sqrt();
        ensure((p.frobenius_norm() - lam_plus).abs() <= 1e-9, || {
            format!("‖P A‖ = {} vs ‖λ₊‖ = {lam_plus}", p.frobenius_norm())
        })?;
    }
    let mut min_slack = f64::INFINITY;
    for _ in 0..1000 {
        let a = gaussian_matrix(&mut rng, 4);
        let b = gaussian_matrix(&mut rng, 4);
        let la = eig_sym(&a).unwrap();
        let lb = eig_sym(&b).unwrap();
        let slack = la.eigenvalues().dot(lb.eigenvalues()) - trace_inner(&a, &b).unwrap();
        min_slack = min_slack.min(slack);
    }
    ensure(min_slack >= -1e-10, || format!("eigenvalue inner-product bound violated by {min_slack}"))?;
    for k in 0..200 {
        let rho = 0.5 + (k % 4) as f64;
        let mut a = gaussian_matrix(&mut rng, 4);
        if k % 2 == 0 {
            a = proj_psd(&a).unwrap().scale(-1.0).sub(&SymMatrix::identity(4).scale(0.05));
        }
        let lambda1 = eig_sym(&a).unwrap().largest();
        let c = proj_psd_cap_sphere(&a, rho).unwrap().canonical;
        ensure((c.frobenius_norm() - rho).abs() <= 1e-10, || {
            format!("‖canonical‖ = {} vs ρ = {rho}", c.frobenius_norm())
        })?;
        if lambda1 < 0.0 {
            let ev = eig_sym(&c).unwrap();
            let mut mags: Vec<f64> = ev.eigenvalues().iter().map(|v| v.abs()).collect();
            mags.sort_by(|x, y| y.total_cmp(x));
            ensure(mags[1] <= 1e-8, || format!("second singular value {}", mags[1]))?;
        }
    }
    Ok(format!("min eigenvalue-bound slack {min_slack:.3e}"))
}

fn oracle_values() -> Outcome {
    let h = exact_mu_oracle(&horn_matrix()).unwrap();
    ensure(h.abs() <= 1e-10, || format!("Horn: {h}"))?;
    for n in 1..=6 {
        let v = exact_mu_oracle(&SymMatrix::identity(n)).unwrap();
        ensure(v == 0.5, || format!("identity {n}: {v}"))?;
    }
    let m = SymMatrix::from_row_major(2, &[1.0, -2.0, -2.0, 1.0]).unwrap();
    let v = exact_mu_oracle(&m).unwrap();
    ensure((v + 0.5).abs() <= 1e-12, || format!("[[1,-2],[-2,1]]: {v}"))?;
    Ok(format!("Horn {h:.1e}"))
}

fn solver_oracle_agreement() -> Outcome {
    let cfg = SolverConfig::default();
    let mut summary = Vec::new();
    for n in [2, 3, 4] {
        let mut rng = ChaCha8Rng::seed_from_u64(70 + n as u64);
        let mats: Vec<SymMatrix> = (0..50).map(|_| random_symmetric(n, &mut rng)).collect();
        for alg in [Algorithm::Fista, Algorithm::Pgm] {
            let (mut close, mut sign) = (0, 0);
            for m in &mats {
                let mu = exact_mu_oracle(m).unwrap();
                let est = mu_via_solver(m, alg, &cfg, 10).unwrap();
                close += usize::from((est.mu_hat - mu).abs() <= 1e-6);
                sign += usize::from((est.mu_hat >= 0.0) == (mu >= 0.0));
            }
            ensure(close >= 45 && sign >= 48, || {
                format!("{alg} N={n}: {close}/50 within 1e-6, {sign}/50 sign matches")
            })?;
            summary.push(format!("{alg}{n} {close}/{sign}"));
        }
    }
    Ok(summary.join(" "))
}

fn success_trends() -> Outcome {
    let cfg = BenchmarkConfig {
        sizes: vec![2, 3, 4],
        trials: 100,
        algorithms: vec![Algorithm::Fista, Algorithm::Pgm, Algorithm::Dr],
        seed: 2024,
        ..Default::default()
    };
    let report = run_benchmark(&cfg).unwrap();
    let count = |size: usize, group: Group, alg: Algorithm| {
        report
            .rows
            .iter()
            .find(|r| r.size == size && r.group == group && r.algorithm == alg)
            .map(|r| r.success)
            .unwrap()
    };
    let mut summary = Vec::new();
    for size in [2, 3, 4] {
        for alg in [Algorithm::Fista, Algorithm::Pgm] {
            let a = count(size, Group::Copositive, alg);
            let b = count(size, Group::NonCopositive, alg);
            ensure(a >= 95 && b >= 90, || format!("{alg} size {size}: A {a}, B {b}"))?;
        }
        let pgm_b = count(size, Group::NonCopositive, Algorithm::Pgm);
        let dr_b = count(size, Group::NonCopositive, Algorithm::Dr);
        ensure(dr_b < pgm_b, || format!("size {size}: DR {dr_b} vs PGM {pgm_b}"))?;
        summary.push(format!("N={size} B: pgm {pgm_b} dr {dr_b}"));
    }
    Ok(summary.join(", "))
}

fn horn_table() -> Outcome {
    let cfg = SolverConfig::default();
    let h = horn_matrix();
    let mut summary = Vec::new();
    for alg in Algorithm::ALL {
        let est = mu_via_solver(&h, alg, &cfg, 10).unwrap();
        let bound = match alg {
            Algorithm::Fista | Algorithm::Pgm | Algorithm::LiPong => Some(1e-6),
            Algorithm::Lange => Some(1e-4),
            Algorithm::Dr => None,
        };
        if let Some(b) = bound {
            ensure(est.mu_hat.abs() <= b, || format!("{alg}: fval {}", est.mu_hat))?;
        }
        ensure(est.best.iterations <= cfg.max_iter && est.avg_iterations <= cfg.max_iter as f64, || {
            format!("{alg}: iteration cap exceeded")
        })?;
        summary.push(format!("{alg} {:.1e}/{}", est.mu_hat, est.best.iterations));
    }
    Ok(summary.join(" "))
}

fn cli_determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let horn = dir.path().join("horn.txt");
    std::fs::write(&horn, coneproj_cli::matrix_file::write_matrix(&horn_matrix()))
        .map_err(|e| e.to_string())?;
    let horn = horn.to_str().unwrap().to_string();
    let invocations: Vec<Vec<&str>> = vec![
        vec!["project", "ball", "--rho", "1", "--point", "1,-1"],
        vec!["project", "orthant-cap-sphere", "--point", "-3,-3,1e-14"],
        vec!["project", "lorentz-cap-sphere", "--alpha", "1", "--rho", "2", "--xi", "-1", "--point", "0,0"],
        vec!["project", "psd-cap-sphere", "--rho", "1", "--matrix-file", &horn],
        vec!["copositive", "--matrix-file", &horn, "--seed", "3"],
        vec!["benchmark", "--sizes", "2,3", "--trials", "10", "--seed", "9", "--format", "csv"],
        vec!["benchmark", "--sizes", "2", "--trials", "10", "--seed", "9", "--format", "md"],
        vec!["benchmark", "--sizes", "4", "--trials", "5", "--seed", "9", "--format", "json"],
        vec!["horn", "--seed", "5"],
    ];
    let bin = env!("CARGO_BIN_EXE_coneproj");
    for args in &invocations {
        let run = || Command::new(bin).args(args).output().map_err(|e| e.to_string());
        let (first, second) = (run()?, run()?);
        ensure(first.status.success(), || {
            format!("{args:?} failed: {}", String::from_utf8_lossy(&first.stderr))
        })?;
        ensure(first.stdout == second.stdout && !first.stdout.is_empty(), || {
            format!("{args:?} output differs between runs")
        })?;
    }
    Ok(format!("{} commands", invocations.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("ball and cone projections do not commute", non_commutation),
        ("Moreau decomposition on orthant and orthonormal cone pairs", moreau_suite),
        ("sampling optimality of sphere-intersection projectors", sampling_optimality),
        ("optimality conditions of cone projections", kkt_suite),
        ("PSD projection properties", psd_suite),
        ("exact oracle reference values", oracle_values),
        ("FISTA and PGM agree with the exact oracle", solver_oracle_agreement),
        ("benchmark success trends", success_trends),
        ("Horn matrix runs", horn_table),
        ("CLI output is deterministic", cli_determinism),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|e| {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_else(|| "panic".into());
                Err(format!("panicked: {msg}"))
            });
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({detail}; {secs:.2}s)", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} ({secs:.2}s)", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
