//! Command-line surface.

use clap::{Parser, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Eigenvalue coefficients E^{(l)}.
    Eigen,
    /// Polynomial blocks P^{(l)}(z) and the normalization.
    Poly,
    /// Run a verification suite.
    Verify,
    /// Evaluate psi and E at a point.
    Eval,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "heun-forge", version, about = "Series solutions of the non-stationary Heun equation")]
pub struct Args {
    pub command: Command,
    /// Degree index n.
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    pub n: i64,
    /// Couplings g0,g1,g2,g3 (p/q, decimals, or a+bi).
    #[arg(long, allow_hyphen_values = true)]
    pub g: Option<String>,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub kappa: String,
    /// Truncation order N.
    #[arg(long)]
    pub order: Option<usize>,
    /// Engine: alg1, alg2, thm1, thm2, bridge.
    #[arg(long, default_value = "alg1")]
    pub mode: String,
    /// rational or complex; rational is the default outside `verify`.
    #[arg(long)]
    pub scalar: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Nome (real, or a+bi).
    #[arg(long, conflicts_with = "tau", allow_hyphen_values = true)]
    pub q: Option<String>,
    /// Modular parameter as RE,IM.
    #[arg(long, allow_hyphen_values = true)]
    pub tau: Option<String>,
    /// Evaluation point as RE,IM.
    #[arg(long, allow_hyphen_values = true)]
    pub x: Option<String>,
    /// Real half-period replacing pi (or a+bi).
    #[arg(long, allow_hyphen_values = true)]
    pub omega1: Option<String>,
    #[arg(long)]
    pub suite: Option<String>,
    /// Write the result here instead of stdout.
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
    /// Relative equality tolerance for the complex scalar mode.
    #[arg(long)]
    pub eps_eq: Option<f64>,
    /// Smallest modulus accepted as a divisor in complex mode.
    #[arg(long)]
    pub eps_div: Option<f64>,
    /// Modulus below which a recursion denominator counts as resonant.
    #[arg(long)]
    pub eps_res: Option<f64>,
    /// Finite-difference step for residual checks.
    #[arg(long, default_value_t = 1e-3)]
    pub fd_step: f64,
    /// Include the residual of the differential equation in `eval`.
    #[arg(long)]
    pub residual: bool,
    /// Report wall-clock time (otherwise `timing` is null, keeping output reproducible).
    #[arg(long)]
    pub timing: bool,
    /// Run sweeps on one thread.
    #[arg(long)]
    pub sequential: bool,
}
