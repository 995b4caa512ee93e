//! Command-line front end: `angles`, `verify`, `sweep` and `contract`.
//!
//! Exit codes: 0 success, 1 numeric or verification failure, 2 usage error.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};

use crate::covering::covering_map;
use crate::decomp::{d_matrix_product, d_matrix_vector, solve_kinematics, verify_addition, wigner_rotation_matrix};
use crate::error::Error;
use crate::limits::{contraction_profile, gauge_parameter};
use crate::params::BoostParams;
use crate::scenarios::{linear_grid, sweep, SweepCase};
use crate::sweep_csv::rows_to_string;
use crate::verify::{run_suite, DEFAULT_SEED};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// η values tabulated by `contract`.
pub const CONTRACT_GRID: [f64; 6] = [0.0, 5.0, 10.0, 15.0, 20.0, 25.0];

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Decompose one boost pair.
    Angles,
    /// Run the randomized invariant suite.
    Verify,
    /// Tabulate a family over tanh η and emit CSV.
    Sweep,
    /// Distance of the D matrix from its contracted form as η grows.
    Contract,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CaseKind {
    Thomas,
    Perp,
    LambdaEqEta,
    General,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Representation {
    Spinor,
    Vector,
    Both,
}

#[derive(Debug, Clone, PartialEq, Parser)]
#[command(name = "lorentz-wigner", about = "Wigner and little-group rotations of composed Lorentz boosts")]
pub struct CliConfig {
    #[arg(value_enum)]
    pub command: Command,
    /// First boost rapidity (along z).
    #[arg(long, allow_negative_numbers = true)]
    pub eta: Option<f64>,
    /// Second boost rapidity.
    #[arg(long, allow_negative_numbers = true)]
    pub lambda: Option<f64>,
    /// Direction of the second boost from the z axis, radians.
    #[arg(long, allow_negative_numbers = true)]
    pub phi: Option<f64>,
    /// Turning angle for `--case thomas`, radians.
    #[arg(long, allow_negative_numbers = true)]
    pub theta: Option<f64>,
    #[arg(long = "case", value_enum, default_value = "lambda-eq-eta")]
    pub case: CaseKind,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub grid_min: f64,
    #[arg(long, default_value_t = 0.999, allow_negative_numbers = true)]
    pub grid_max: f64,
    #[arg(long = "points", default_value_t = 101)]
    pub grid_points: usize,
    /// Overrides every tolerance of `verify`.
    #[arg(long = "tol")]
    pub tolerance: Option<f64>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    #[arg(long = "out")]
    pub output_path: Option<PathBuf>,
    #[arg(long = "rep", value_enum, default_value = "both")]
    pub representation: Representation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CliOutput {
    fn ok(stdout: String) -> Self {
        CliOutput { status: EXIT_OK, stdout, stderr: String::new() }
    }

    fn usage(msg: impl Into<String>) -> Self {
        let mut stderr = msg.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        stderr.push_str("usage: lorentz-wigner <angles|verify|sweep|contract> [--eta E] [--lambda L] [--phi P] ...\n");
        CliOutput { status: EXIT_USAGE, stdout: String::new(), stderr }
    }

    fn failure(stdout: String, msg: impl Into<String>) -> Self {
        CliOutput { status: EXIT_FAILURE, stdout, stderr: msg.into() }
    }
}

impl CliConfig {
    /// Checks cross-flag requirements that clap cannot express.
    pub fn validate(&self) -> Result<(), String> {
        if let Some(t) = self.tolerance {
            if !(t > 0.0) {
                return Err(format!("--tol must be positive, got {t}"));
            }
        }
        match self.command {
            Command::Angles => {
                self.require(&[("--eta", self.eta), ("--lambda", self.lambda), ("--phi", self.phi)])?;
            }
            Command::Contract => {
                self.require(&[("--lambda", self.lambda), ("--phi", self.phi)])?;
            }
            Command::Sweep => {
                if !(0.0..1.0).contains(&self.grid_min) || !(0.0..1.0).contains(&self.grid_max) {
                    return Err("grid bounds must lie in [0, 1)".into());
                }
                if !(self.grid_min < self.grid_max) {
                    return Err("--grid-min must be below --grid-max".into());
                }
                if self.grid_points < 2 {
                    return Err("--points must be at least 2".into());
                }
                match self.case {
                    CaseKind::Thomas => self.require(&[("--theta", self.theta)])?,
                    CaseKind::Perp => self.require(&[("--lambda", self.lambda)])?,
                    CaseKind::General => self.require(&[("--lambda", self.lambda), ("--phi", self.phi)])?,
                    CaseKind::LambdaEqEta => {}
                }
            }
            Command::Verify => {
                if self.samples == 0 {
                    return Err("--samples must be positive".into());
                }
            }
        }
        Ok(())
    }

    fn require(&self, flags: &[(&str, Option<f64>)]) -> Result<(), String> {
        let missing: Vec<&str> = flags.iter().filter(|(_, v)| v.is_none()).map(|(n, _)| *n).collect();
        if missing.is_empty() {
            Ok(())
        } else {
            Err(format!("{:?} requires {}", self.command, missing.join(", ")).to_lowercase())
        }
    }
}

/// Parses argv (including the program name) and runs it.
pub fn main_with_args<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match CliConfig::try_parse_from(args) {
        Ok(cfg) => run(&cfg),
        Err(e) => match e.kind() {
            clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => CliOutput::ok(e.to_string()),
            _ => CliOutput { status: EXIT_USAGE, stdout: String::new(), stderr: e.to_string() },
        },
    }
}

pub fn run(config: &CliConfig) -> CliOutput {
    if let Err(msg) = config.validate() {
        return CliOutput::usage(msg);
    }
    let result = match config.command {
        Command::Angles => angles(config),
        Command::Verify => return verify(config),
        Command::Sweep => run_sweep(config),
        Command::Contract => contract(config),
    };
    match result {
        Ok(out) => CliOutput::ok(out),
        Err(Error::InvalidArgument(msg)) => CliOutput::usage(msg),
        Err(e) => CliOutput::failure(String::new(), format!("error: {e}\n")),
    }
}

fn angle_line(out: &mut String, name: &str, rad: f64) {
    let _ = writeln!(out, "{name:<7}= {rad} rad ({} deg)", rad.to_degrees());
}

fn angles(cfg: &CliConfig) -> Result<String, Error> {
    let p = BoostParams::new(cfg.eta.unwrap_or_default(), cfg.lambda.unwrap_or_default(), cfg.phi.unwrap_or_default())?;
    let k = solve_kinematics(&p)?;
    let residual = verify_addition(&p)?;
    let mut out = String::new();
    let _ = writeln!(out, "eta    = {}", p.eta);
    let _ = writeln!(out, "lambda = {}", p.lambda);
    let _ = writeln!(out, "phi    = {}", p.phi);
    let _ = writeln!(out, "xi     = {}", k.xi);
    angle_line(&mut out, "theta", k.theta);
    angle_line(&mut out, "omega", k.omega);
    angle_line(&mut out, "alpha", k.alpha);
    let _ = writeln!(out, "beta   = {}", k.beta);
    let _ = writeln!(out, "addition_residual = {residual:e}");
    let w = wigner_rotation_matrix(&p)?;
    let d = d_matrix_product(&p)?;
    if matches!(cfg.representation, Representation::Spinor | Representation::Both) {
        let _ = writeln!(out, "wigner_rotation (spinor):\n{w}");
        let _ = writeln!(out, "d_matrix (spinor):\n{d}");
    }
    if matches!(cfg.representation, Representation::Vector | Representation::Both) {
        let _ = writeln!(out, "wigner_rotation (vector):\n{}", covering_map(&w, Some(1e-9))?);
        let _ = writeln!(out, "d_matrix (vector):\n{}", d_matrix_vector(&p)?);
    }
    Ok(out)
}

fn verify(cfg: &CliConfig) -> CliOutput {
    let report = match run_suite(cfg.seed, cfg.samples, cfg.tolerance) {
        Ok(r) => r,
        Err(e) => return CliOutput::failure(String::new(), format!("error: {e}\n")),
    };
    let mut out = String::new();
    let _ = writeln!(out, "seed = {}, samples = {}", report.seed, report.samples);
    for p in &report.properties {
        let _ = writeln!(
            out,
            "{:<30} max_residual = {:e} tol = {:e} {}",
            p.name,
            p.max_residual,
            p.tolerance,
            if p.passed() { "PASS" } else { "FAIL" }
        );
    }
    if report.all_passed() {
        CliOutput::ok(out)
    } else {
        let names: Vec<&str> = report.failures().map(|p| p.name).collect();
        CliOutput::failure(out, format!("verification failed: {}\n", names.join(", ")))
    }
}

fn run_sweep(cfg: &CliConfig) -> Result<String, Error> {
    let case = match cfg.case {
        CaseKind::Thomas => SweepCase::Thomas { theta: cfg.theta.unwrap_or_default() },
        CaseKind::Perp => SweepCase::Perp { lambda: cfg.lambda.unwrap_or_default() },
        CaseKind::LambdaEqEta => SweepCase::LambdaEqEta,
        CaseKind::General => {
            SweepCase::General { lambda: cfg.lambda.unwrap_or_default(), phi: cfg.phi.unwrap_or_default() }
        }
    };
    let grid = linear_grid(cfg.grid_min, cfg.grid_max, cfg.grid_points)?;
    let rows = sweep(case, &grid)?;
    let csv = rows_to_string(&rows)?;
    match &cfg.output_path {
        Some(path) => {
            std::fs::write(path, &csv)?;
            Ok(format!("wrote {} rows to {}\n", rows.len(), path.display()))
        }
        None => Ok(csv),
    }
}

fn contract(cfg: &CliConfig) -> Result<String, Error> {
    let (lambda, phi) = (cfg.lambda.unwrap_or_default(), cfg.phi.unwrap_or_default());
    let rows = contraction_profile(lambda, phi, &CONTRACT_GRID)?;
    let mut out = String::new();
    let _ = writeln!(out, "lambda = {lambda}, phi = {phi}, u = {}", gauge_parameter(lambda, phi)?);
    let _ = writeln!(out, "eta,deviation,lower_left");
    for r in rows {
        let _ = writeln!(out, "{},{:e},{:e}", r.eta, r.deviation, r.lower_left);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> CliOutput {
        main_with_args(std::iter::once("lorentz-wigner").chain(args.iter().copied()))
    }

    #[test]
    fn angles_single_boost() {
        let out = run_args(&["angles", "--eta", "1", "--lambda", "0", "--phi", "0.5"]);
        assert_eq!(out.status, EXIT_OK, "{}", out.stderr);
        assert!(out.stdout.contains("xi     = 1\n"));
        assert!(out.stdout.contains("theta  = 0 rad"));
        assert!(out.stdout.contains("omega  = 0 rad"));
        assert!(out.stdout.contains("alpha  = 0 rad"));
    }

    #[test]
    fn missing_flags_are_usage_errors() {
        let out = run_args(&["angles", "--eta", "1"]);
        assert_eq!(out.status, EXIT_USAGE);
        assert!(out.stderr.contains("--lambda"));
        assert_eq!(run_args(&["bogus"]).status, EXIT_USAGE);
        assert_eq!(run_args(&["angles", "--eta", "x", "--lambda", "1", "--phi", "1"]).status, EXIT_USAGE);
        assert_eq!(run_args(&["sweep", "--grid-min", "0.5", "--grid-max", "0.2"]).status, EXIT_USAGE);
        assert_eq!(run_args(&["sweep", "--points", "1"]).status, EXIT_USAGE);
        assert_eq!(run_args(&["sweep", "--case", "perp"]).status, EXIT_USAGE);
        assert_eq!(run_args(&["angles", "--eta", "1", "--lambda", "1", "--phi", "4"]).status, EXIT_USAGE);
    }

    #[test]
    fn degenerate_angles_is_numeric_failure() {
        let out = run_args(&["angles", "--eta", "0", "--lambda", "0", "--phi", "1"]);
        assert_eq!(out.status, EXIT_FAILURE);
        assert!(out.stderr.contains("degenerate"));
    }

    #[test]
    fn representation_selection() {
        let s = run_args(&["angles", "--eta", "1", "--lambda", "1", "--phi", "1", "--rep", "spinor"]);
        assert!(s.stdout.contains("(spinor)") && !s.stdout.contains("(vector)"));
        let v = run_args(&["angles", "--eta", "1", "--lambda", "1", "--phi", "1", "--rep", "vector"]);
        assert!(v.stdout.contains("(vector)") && !v.stdout.contains("(spinor)"));
    }

    #[test]
    fn verify_fails_with_impossible_tolerance() {
        let out = run_args(&["verify", "--samples", "20", "--tol", "1e-30"]);
        assert_eq!(out.status, EXIT_FAILURE);
        assert!(out.stderr.contains("addition_law") || out.stderr.contains("verification failed"));
    }

    #[test]
    fn contract_table() {
        let out = run_args(&["contract", "--lambda", "1", "--phi", "1.5707963267948966"]);
        assert_eq!(out.status, EXIT_OK);
        assert_eq!(out.stdout.lines().count(), 2 + CONTRACT_GRID.len());
    }
}
