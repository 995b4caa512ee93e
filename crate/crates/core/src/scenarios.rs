//! Special families of boost pairs and tanh-η sweeps over them.

use std::f64::consts::FRAC_PI_2;

use rayon::prelude::*;

use crate::decomp::{cosh_m1, solve_kinematics, xi_from_cosh_m1, Decomposition};
use crate::error::{finite, Error, Result};
use crate::params::BoostParams;

/// Composed rapidity and the three angles, without the D-matrix scalars.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Angles {
    pub xi: f64,
    pub theta: f64,
    pub alpha: f64,
    pub omega: f64,
}

impl From<&Decomposition> for Angles {
    fn from(d: &Decomposition) -> Self {
        Angles { xi: d.xi, theta: d.theta, alpha: d.alpha, omega: d.omega }
    }
}

/// A second boost that keeps `|P_c| = |P_b|` while turning the momentum by `θ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThomasCase {
    pub lambda: f64,
    pub phi: f64,
    pub angles: Angles,
}

/// Solves the constraint `ξ = η` for the boost `(φ, λ)` that turns `P_b` by
/// `theta`, then reads `α` and `ω` off the general solution.
///
/// Two momenta of equal energy are joined by the pure boost along their
/// spatial difference, which gives `φ = π/2 + θ/2` and
/// `tanh(λ/2) = tanh η sin(θ/2)`. At `η = 0` the limit `α = θ, ω = 0` is
/// returned.
pub fn thomas_case(eta: f64, theta: f64) -> Result<ThomasCase> {
    finite("eta", eta)?;
    finite("theta", theta)?;
    if eta < 0.0 {
        return Err(Error::InvalidArgument(format!("eta must be non-negative, got {eta}")));
    }
    if !(theta > 0.0 && theta < std::f64::consts::PI) {
        return Err(Error::NoSolution(format!("no boost turns P_b by θ = {theta} at fixed energy")));
    }
    let phi = FRAC_PI_2 + 0.5 * theta;
    if eta == 0.0 {
        return Ok(ThomasCase { lambda: 0.0, phi, angles: Angles { xi: 0.0, theta, alpha: theta, omega: 0.0 } });
    }
    let lambda = 2.0 * (eta.tanh() * (0.5 * theta).sin()).atanh();
    let k = solve_kinematics(&BoostParams::new(eta, lambda, phi)?)?;
    if (k.theta - theta).abs() > 1e-9 || !(k.xi - eta).abs().le(&(1e-9 * eta.max(1.0))) {
        return Err(Error::NoSolution(format!(
            "constraint solve drifted: θ = {} (wanted {theta}), ξ − η = {}",
            k.theta,
            k.xi - eta
        )));
    }
    Ok(ThomasCase { lambda, phi, angles: Angles::from(&k) })
}

/// `tan α = 2 sin θ cosh η / (sinh²η + (1 + cosh²η) cos θ)` on the `ξ = η`
/// family, as a cross-check of [`thomas_case`].
pub fn thomas_alpha_closed(eta: f64, theta: f64) -> f64 {
    let (se, ce) = (eta.sinh(), eta.cosh());
    (2.0 * theta.sin() * ce).atan2(se * se + (1.0 + ce * ce) * theta.cos())
}

/// Companion `ω` expression on the `ξ = η` family:
/// `tan ω = sin θ [cos θ (cosh η − 1)² + sinh²η] / (cos θ [cos θ (cosh η − 1)² + sinh²η] + 2 cosh η)`.
pub fn thomas_omega_closed(eta: f64, theta: f64) -> f64 {
    let (se, ce) = (eta.sinh(), eta.cosh());
    let (st, ct) = theta.sin_cos();
    let bracket = ct * cosh_m1(eta).powi(2) + se * se;
    (st * bracket).atan2(ct * bracket + 2.0 * ce)
}

/// Second boost perpendicular to the first (`φ = π/2`).
pub fn perp_case(eta: f64, lambda: f64) -> Result<Angles> {
    BoostParams::new(eta, lambda, FRAC_PI_2)?;
    if eta == 0.0 && lambda == 0.0 {
        return Err(Error::Degenerate("η = λ = 0".into()));
    }
    let (se, ce, te) = (eta.sinh(), eta.cosh(), eta.tanh());
    let (sl, cl, tl) = (lambda.sinh(), lambda.cosh(), lambda.tanh());
    Ok(Angles {
        xi: xi_from_cosh_m1(cosh_m1(eta) * cl + cosh_m1(lambda)),
        theta: sl.atan2(te),
        alpha: tl.atan2(se),
        omega: (sl * se).atan2(ce + cl),
    })
}

/// `λ = η`, `φ = π/2`, evaluated from the rapidity and from the velocity
/// `tanh η`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LambdaEqEta {
    pub from_rapidity: Angles,
    pub from_velocity: Angles,
}

fn lambda_eq_eta_from_rapidity(eta: f64) -> Angles {
    let (se, ce, te) = (eta.sinh(), eta.cosh(), eta.tanh());
    Angles {
        // cosh ξ = cosh²η, so cosh ξ − 1 = sinh²η
        xi: xi_from_cosh_m1(se * se),
        theta: ce.atan2(1.0),
        alpha: 1.0f64.atan2(ce),
        omega: (se * te).atan2(2.0),
    }
}

fn lambda_eq_eta_from_velocity(t: f64) -> Angles {
    let one_m_t2 = (1.0 - t) * (1.0 + t);
    let root = one_m_t2.sqrt();
    Angles {
        xi: xi_from_cosh_m1(t * t / one_m_t2),
        theta: 1.0f64.atan2(root),
        alpha: root.atan2(1.0),
        omega: (t * t).atan2(2.0 * root),
    }
}

/// The `λ = η`, `φ = π/2` family; `eta = 0` gives the continuous extension
/// (θ = α = π/4, ω = 0).
pub fn lambda_eq_eta_case(eta: f64) -> Result<LambdaEqEta> {
    BoostParams::new(eta, eta, FRAC_PI_2)?;
    Ok(LambdaEqEta {
        from_rapidity: lambda_eq_eta_from_rapidity(eta),
        from_velocity: lambda_eq_eta_from_velocity(eta.tanh()),
    })
}

/// `atanh t` in the form `½ ln(1 + 2t/(1 − t))`.
pub fn rapidity_from_velocity(t: f64) -> f64 {
    0.5 * (2.0 * t / (1.0 - t)).ln_1p()
}

/// Largest admissible grid value; `tanh η = 1` is an infinite rapidity.
pub const GRID_MAX: f64 = 1.0 - 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SweepCase {
    /// Fixed turning angle `theta` with `ξ = η`.
    Thomas { theta: f64 },
    /// `φ = π/2` with fixed `lambda`.
    Perp { lambda: f64 },
    /// `λ = η`, `φ = π/2`.
    LambdaEqEta,
    /// Fixed `(lambda, phi)`.
    General { lambda: f64, phi: f64 },
}

/// One grid point of a sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub tanh_eta: f64,
    pub xi: f64,
    pub theta: f64,
    pub alpha: f64,
    pub omega: f64,
    /// `ω/θ`, or 0 where `θ = 0`.
    pub omega_over_theta: f64,
}

impl SweepRow {
    fn new(tanh_eta: f64, a: Angles) -> Self {
        let ratio = if a.theta == 0.0 { 0.0 } else { a.omega / a.theta };
        SweepRow { tanh_eta, xi: a.xi, theta: a.theta, alpha: a.alpha, omega: a.omega, omega_over_theta: ratio }
    }
}

fn validate_grid(grid: &[f64]) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::InvalidArgument("empty grid".into()));
    }
    for &t in grid {
        if !(0.0..GRID_MAX).contains(&t) {
            return Err(Error::InvalidArgument(format!("grid value {t} outside [0, 1 − 1e−12)")));
        }
    }
    if grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidArgument("grid must be strictly increasing".into()));
    }
    Ok(())
}

/// `points` evenly spaced values from `min` to `max` inclusive.
pub fn linear_grid(min: f64, max: f64, points: usize) -> Result<Vec<f64>> {
    if points < 2 {
        return Err(Error::InvalidArgument(format!("need at least 2 grid points, got {points}")));
    }
    if !(min < max) {
        return Err(Error::InvalidArgument(format!("grid bounds must satisfy min < max, got {min}, {max}")));
    }
    let step = (max - min) / (points - 1) as f64;
    let mut grid: Vec<f64> = (0..points).map(|i| min + step * i as f64).collect();
    grid[points - 1] = max;
    validate_grid(&grid)?;
    Ok(grid)
}

fn sweep_row(case: SweepCase, t: f64) -> Result<SweepRow> {
    let eta = rapidity_from_velocity(t);
    let angles = match case {
        SweepCase::LambdaEqEta => lambda_eq_eta_from_velocity(t),
        SweepCase::Perp { lambda } => perp_case(eta, lambda)?,
        SweepCase::Thomas { theta } => thomas_case(eta, theta)?.angles,
        SweepCase::General { lambda, phi } => Angles::from(&solve_kinematics(&BoostParams::new(eta, lambda, phi)?)?),
    };
    Ok(SweepRow::new(t, angles))
}

/// Evaluates `case` at each `tanh η` in `grid`. Rows come back in grid order.
pub fn sweep(case: SweepCase, grid: &[f64]) -> Result<Vec<SweepRow>> {
    validate_grid(grid)?;
    grid.par_iter().map(|&t| sweep_row(case, t)).collect()
}
