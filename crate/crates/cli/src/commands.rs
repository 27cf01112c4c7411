use std::fmt;
use std::fmt::Write as _;

use clap::ValueEnum;
use coneproj::copositivity::{
    exact_mu_oracle, horn_matrix, mu_via_solver, run_benchmark, BenchmarkConfig, MAX_ORACLE_DIM,
};
use coneproj::linalg::positive_part;
use coneproj::projections::{
    proj_ball, proj_circle, proj_cone_cap_ball, proj_fg_cone_cap_sphere, proj_lorentz,
    proj_lorentz_cap_sphere, proj_orthant_cap_sphere, proj_psd, proj_psd_cap_sphere, proj_ray,
    proj_sphere, Cardinality, ConvexCone, FiniteGeneratorSpec, Lifted, LorentzSpec,
    ProjectionOutcome, Subspace,
};
use coneproj::solvers::{parse_algorithms, Algorithm, SolverConfig};
use coneproj::{Error, SymMatrix, Vector};

use crate::args::{
    BenchmarkArgs, Cli, Command, CopositiveArgs, HornArgs, OutputFormat, ProjectArgs, SetId,
    SolverArgs,
};
use crate::matrix_file::read_matrix_file;
use crate::numfmt::{fmt_f64, fmt_slice, parse_list};
use crate::report;

#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    /// Bad flags or parameter values; exit code 2.
    Usage(String),
    /// Failures while running a valid command; exit code 1.
    Runtime(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Runtime(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Runtime(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Empty
            | Error::NonFinite
            | Error::DimensionMismatch { .. }
            | Error::InvalidParameter { .. }
            | Error::InvalidConfig(_)
            | Error::UnknownAlgorithm(_) => CliError::Usage(e.to_string()),
            _ => CliError::Runtime(e.to_string()),
        }
    }
}

/// Runs a parsed command and returns what should go to stdout.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Project(a) => cmd_project(a),
        Command::Copositive(a) => cmd_copositive(a),
        Command::Benchmark(a) => cmd_benchmark(a),
        Command::Horn(a) => cmd_horn(a),
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn required<T: Copy>(value: Option<T>, flag: &str, set: SetId) -> Result<T, CliError> {
    value.ok_or_else(|| usage(format!("{} requires {flag}", set_name(set))))
}

fn set_name(set: SetId) -> String {
    set.to_possible_value()
        .map(|v| v.get_name().to_string())
        .unwrap_or_default()
}

fn parse_vector(s: &str) -> Result<Vector, CliError> {
    Ok(Vector::new(parse_list(s).map_err(usage)?)?)
}

fn parse_vectors(s: &str) -> Result<Vec<Vector>, CliError> {
    s.split(';').map(parse_vector).collect()
}

fn point(a: &ProjectArgs) -> Result<Vector, CliError> {
    let s = a
        .point
        .as_deref()
        .ok_or_else(|| usage(format!("{} requires --point", set_name(a.set))))?;
    parse_vector(s)
}

fn matrix(a: &ProjectArgs) -> Result<SymMatrix, CliError> {
    let path = a
        .matrix_file
        .as_deref()
        .ok_or_else(|| usage(format!("{} requires --matrix-file", set_name(a.set))))?;
    read_matrix_file(path).map_err(CliError::Runtime)
}

trait Render {
    fn render(&self) -> String;
}

impl Render for Vector {
    fn render(&self) -> String {
        fmt_slice(self.as_slice())
    }
}

impl Render for Lifted {
    fn render(&self) -> String {
        format!("{} | {}", fmt_slice(self.base.as_slice()), fmt_f64(self.height))
    }
}

impl Render for SymMatrix {
    fn render(&self) -> String {
        (0..self.dim())
            .map(|i| fmt_slice(self.row(i)))
            .collect::<Vec<_>>()
            .join(";")
    }
}

fn render_outcome<P: Render>(set: SetId, out: &ProjectionOutcome<P>) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "set: {}", set_name(set));
    let _ = writeln!(s, "canonical: {}", out.canonical.render());
    let _ = writeln!(s, "cardinality: {}", out.cardinality.tag());
    match &out.cardinality {
        Cardinality::Unique => {}
        Cardinality::FiniteSet(points) => {
            for p in points {
                let _ = writeln!(s, "point: {}", p.render());
            }
        }
        Cardinality::Continuum(description) => {
            let _ = writeln!(s, "description: {description}");
        }
    }
    let _ = writeln!(s, "distance: {}", fmt_f64(out.distance));
    s
}

fn unique<P>(canonical: P, distance: f64) -> ProjectionOutcome<P> {
    ProjectionOutcome {
        canonical,
        cardinality: Cardinality::Unique,
        distance,
    }
}

fn cmd_project(a: &ProjectArgs) -> Result<String, CliError> {
    let set = a.set;
    let text = match set {
        SetId::Ball => render_outcome(set, &proj_ball(&point(a)?, required(a.rho, "--rho", set)?)?),
        SetId::Sphere => {
            render_outcome(set, &proj_sphere(&point(a)?, required(a.rho, "--rho", set)?)?)
        }
        SetId::Ray => {
            let dir = a
                .direction
                .as_deref()
                .ok_or_else(|| usage("ray requires --direction"))?;
            render_outcome(set, &proj_ray(&point(a)?, &parse_vector(dir)?)?)
        }
        SetId::Orthant => {
            let x = point(a)?;
            let p = positive_part(&x);
            let d = x.distance(&p);
            render_outcome(set, &unique(p, d))
        }
        SetId::OrthantCapSphere => render_outcome(set, &proj_orthant_cap_sphere(&point(a)?)?),
        SetId::FgConeCapSphere => {
            let gens = a
                .generators
                .as_deref()
                .ok_or_else(|| usage("fg-cone-cap-sphere requires --generators"))?;
            let gens = parse_vectors(gens)?;
            let rho = a.rho.unwrap_or_else(|| gens[0].norm());
            let spec = FiniteGeneratorSpec::new(gens, rho)?;
            render_outcome(set, &proj_fg_cone_cap_sphere(&point(a)?, &spec)?)
        }
        SetId::ConeCapBall => {
            let x = point(a)?;
            let rho = required(a.rho, "--rho", set)?;
            let out = match a.generators.as_deref() {
                Some(g) => {
                    let spec = FiniteGeneratorSpec::from_directions(parse_vectors(g)?, 1.0)?;
                    if spec.dim() != x.len() {
                        return Err(usage("generators and point differ in dimension"));
                    }
                    proj_cone_cap_ball(&x, rho, |y| spec.project(y))?
                }
                None => proj_cone_cap_ball(&x, rho, positive_part)?,
            };
            render_outcome(set, &out)
        }
        SetId::Lorentz => {
            let x = point(a)?;
            let xi = required(a.xi, "--xi", set)?;
            let p = proj_lorentz(&x, xi, required(a.alpha, "--alpha", set)?)?;
            let d = Lifted::new(x, xi)?.distance(&p);
            render_outcome(set, &unique(p, d))
        }
        SetId::LorentzCapSphere => {
            let spec = LorentzSpec::new(
                required(a.alpha, "--alpha", set)?,
                required(a.rho, "--rho", set)?,
            )?;
            let xi = required(a.xi, "--xi", set)?;
            render_outcome(set, &proj_lorentz_cap_sphere(&point(a)?, xi, &spec)?)
        }
        SetId::Psd => {
            let m = matrix(a)?;
            let p = proj_psd(&m)?;
            let d = m.distance(&p);
            render_outcome(set, &unique(p, d))
        }
        SetId::PsdCapSphere => {
            let m = matrix(a)?;
            render_outcome(set, &proj_psd_cap_sphere(&m, required(a.rho, "--rho", set)?)?)
        }
        SetId::Circle => {
            let basis = a
                .basis
                .as_deref()
                .ok_or_else(|| usage("circle requires --basis"))?;
            let sub = Subspace::new(parse_vectors(basis)?)?;
            let x = point(a)?;
            if sub.dim() != x.len() {
                return Err(usage("basis and point differ in dimension"));
            }
            let rho = required(a.rho, "--rho", set)?;
            render_outcome(set, &proj_circle(&x, rho, |y| sub.project(y), None)?)
        }
    };
    Ok(text)
}

fn solver_config(s: &SolverArgs) -> Result<SolverConfig, CliError> {
    let cfg = SolverConfig {
        max_iter: s.max_iter,
        seed: s.seed,
        ..Default::default()
    };
    cfg.validate()?;
    Ok(cfg)
}

fn algorithms(list: &str) -> Result<Vec<Algorithm>, CliError> {
    let algs = parse_algorithms(list)?;
    if algs.is_empty() {
        return Err(usage("--algorithms must name at least one solver"));
    }
    Ok(algs)
}

fn verdict(copositive: bool) -> &'static str {
    if copositive {
        "COPOSITIVE"
    } else {
        "NOT COPOSITIVE"
    }
}

fn cmd_copositive(a: &CopositiveArgs) -> Result<String, CliError> {
    let cfg = solver_config(&a.solver)?;
    let algs = algorithms(&a.algorithms)?;
    if a.restarts == 0 {
        return Err(usage("--restarts must be at least 1"));
    }
    let m = read_matrix_file(&a.matrix_file).map_err(CliError::Runtime)?;
    let mut s = String::new();
    let _ = writeln!(s, "size: {}", m.dim());
    if m.dim() <= MAX_ORACLE_DIM {
        let mu = exact_mu_oracle(&m)?;
        let _ = writeln!(s, "oracle_mu: {}", fmt_f64(mu));
        let _ = writeln!(s, "oracle_verdict: {}", verdict(mu >= 0.0));
    } else {
        let _ = writeln!(
            s,
            "oracle_mu: unavailable (exact oracle limited to N <= {MAX_ORACLE_DIM})"
        );
    }
    let _ = writeln!(s, "algorithm,mu_hat,avg_iter,verdict");
    for alg in algs {
        let est = mu_via_solver(&m, alg, &cfg, a.restarts)?;
        let _ = writeln!(
            s,
            "{alg},{},{},{}",
            fmt_f64(est.mu_hat),
            fmt_f64(est.avg_iterations),
            verdict(est.mu_hat >= 0.0)
        );
    }
    Ok(s)
}

fn cmd_benchmark(a: &BenchmarkArgs) -> Result<String, CliError> {
    let sizes = a
        .sizes
        .split(',')
        .map(|t| match t.trim().parse::<usize>() {
            Ok(n @ 2..=4) => Ok(n),
            _ => Err(usage(format!("invalid size `{t}`: sizes must be 2, 3 or 4"))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    if !(a.guard_band >= 0.0 && a.guard_band.is_finite()) {
        return Err(usage("--guard-band must be a nonnegative number"));
    }
    let cfg = BenchmarkConfig {
        sizes,
        trials: a.trials,
        algorithms: algorithms(&a.algorithms)?,
        solver: solver_config(&a.solver)?,
        seed: a.solver.seed,
        guard_band: a.guard_band,
    };
    let rep = run_benchmark(&cfg)?;
    let text = match a.format {
        OutputFormat::Csv => report::to_csv(&rep),
        OutputFormat::Json => report::to_json(&rep),
        OutputFormat::Markdown => {
            let note = format!(
                "Labels from the exact face-enumeration oracle; {} matrices per group, seed {}, single default start, success when sign(mu_hat) matches the label.",
                cfg.trials, cfg.seed
            );
            report::to_markdown(&rep, &cfg.algorithms, &note)
        }
    };
    match &a.output {
        Some(path) => {
            std::fs::write(path, text)
                .map_err(|e| CliError::Runtime(format!("cannot write {}: {e}", path.display())))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn cmd_horn(a: &HornArgs) -> Result<String, CliError> {
    let cfg = solver_config(&a.solver)?;
    if a.restarts == 0 {
        return Err(usage("--restarts must be at least 1"));
    }
    let h = horn_matrix();
    let mut s = String::from("algorithm,fval,iter\n");
    for alg in Algorithm::ALL {
        let est = mu_via_solver(&h, alg, &cfg, a.restarts)?;
        let _ = writeln!(s, "{alg},{},{}", fmt_f64(est.mu_hat), est.best.iterations);
    }
    Ok(s)
}
