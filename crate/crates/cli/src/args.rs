use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "coneproj",
    version,
    about = "Projections onto cones, balls and spheres, and numerical copositivity tests"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Project a point (or matrix) onto a set
    Project(ProjectArgs),
    /// Estimate min ½xᵀMx over the unit nonnegative sphere and classify M
    Copositive(CopositiveArgs),
    /// Success counts of every solver on random labeled matrices
    Benchmark(BenchmarkArgs),
    /// Run every solver on the Horn matrix
    Horn(HornArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SetId {
    Ball,
    Sphere,
    Ray,
    Orthant,
    OrthantCapSphere,
    FgConeCapSphere,
    ConeCapBall,
    Lorentz,
    LorentzCapSphere,
    Psd,
    PsdCapSphere,
    Circle,
}

#[derive(Debug, Args)]
pub struct ProjectArgs {
    /// Target set
    #[arg(value_enum)]
    pub set: SetId,
    /// Comma-separated coordinates, e.g. 1,-1
    #[arg(long, allow_hyphen_values = true)]
    pub point: Option<String>,
    /// Radius of the ball or sphere
    #[arg(long, allow_hyphen_values = true)]
    pub rho: Option<f64>,
    /// Lorentz cone aperture
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<f64>,
    /// Last coordinate of a point in the Lorentz setting
    #[arg(long, allow_hyphen_values = true)]
    pub xi: Option<f64>,
    /// Unit direction of a ray
    #[arg(long, allow_hyphen_values = true)]
    pub direction: Option<String>,
    /// Cone generators separated by `;`, e.g. "1,0;0,1"
    #[arg(long, allow_hyphen_values = true)]
    pub generators: Option<String>,
    /// Orthonormal basis of a subspace separated by `;`
    #[arg(long, allow_hyphen_values = true)]
    pub basis: Option<String>,
    /// Matrix file for psd and psd-cap-sphere
    #[arg(long)]
    pub matrix_file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SolverArgs {
    /// Iteration cap per run
    #[arg(long, default_value_t = 1000)]
    pub max_iter: usize,
    /// Seed for random starts and matrices
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct CopositiveArgs {
    #[arg(long)]
    pub matrix_file: PathBuf,
    /// Comma-separated solver ids: fista, pgm, lange, li_pong, dr
    #[arg(long, default_value = "fista,pgm,lange,li_pong,dr")]
    pub algorithms: String,
    /// Runs per solver: the default start plus seeded random starts
    #[arg(long, default_value_t = 10)]
    pub restarts: usize,
    #[command(flatten)]
    pub solver: SolverArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    #[value(alias = "md")]
    Markdown,
    Json,
}

#[derive(Debug, Args)]
pub struct BenchmarkArgs {
    /// Comma-separated matrix sizes, each 2, 3 or 4
    #[arg(long, default_value = "2,3,4")]
    pub sizes: String,
    /// Matrices per group and size
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    #[arg(long, default_value = "fista,pgm,lange,li_pong,dr")]
    pub algorithms: String,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,
    /// Write to this file instead of stdout
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Declare copositive when the estimate is at least -guard_band
    #[arg(long, default_value_t = 0.0)]
    pub guard_band: f64,
    #[command(flatten)]
    pub solver: SolverArgs,
}

#[derive(Debug, Args)]
pub struct HornArgs {
    #[arg(long, default_value_t = 10)]
    pub restarts: usize,
    #[command(flatten)]
    pub solver: SolverArgs,
}
