//! Slow and light-like limits of the decomposition, and the contraction of
//! the massive little group onto the massless one.

use crate::decomp::{d_matrix_product, solve_kinematics, Decomposition};
use crate::error::{finite, Error, Result};
use crate::params::BoostParams;
use crate::spinor::SpinorMatrix;
use crate::vector::{Rows4, VectorMatrix};

/// Small-rapidity limit, alongside the exact decomposition at the same input.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NonRelativisticLimit {
    /// `√(η² + λ² + 2ηλ cos φ)`.
    pub xi: f64,
    pub theta: f64,
    pub alpha: f64,
    pub omega: f64,
    pub exact: Decomposition,
}

/// Large-`η` limit at fixed `(λ, φ)`, alongside the exact decomposition at
/// `eta_ref`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LightlikeLimit {
    /// `ξ − η → ln(cosh λ + sinh λ cos φ)`.
    pub xi_minus_eta: f64,
    pub theta: f64,
    pub alpha: f64,
    pub omega: f64,
    pub eta_ref: f64,
    pub exact: Decomposition,
}

impl LightlikeLimit {
    pub fn exact_xi_minus_eta(&self) -> f64 {
        self.exact.xi - self.eta_ref
    }
}

/// Galilean composition: `tan θ = λ sin φ/(η + λ cos φ)`, `α = θ`, `ω = 0`.
///
/// No cutoff is applied; the limit is only meaningful for small rapidities.
pub fn nr_limit_angles(p: &BoostParams) -> Result<NonRelativisticLimit> {
    let BoostParams { eta, lambda, phi } = *p;
    if eta == 0.0 && lambda == 0.0 {
        return Err(Error::Degenerate("η = λ = 0".into()));
    }
    let (sp, cp) = phi.sin_cos();
    let theta = (lambda * sp).atan2(eta + lambda * cp);
    let xi = (eta * eta + lambda * lambda + 2.0 * eta * lambda * cp).max(0.0).sqrt();
    Ok(NonRelativisticLimit { xi, theta, alpha: theta, omega: 0.0, exact: solve_kinematics(p)? })
}

/// Light-like limit: `α = 0`, `ω = θ` with
/// `tan θ = sin φ [sinh λ + (cosh λ − 1) cos φ] / (sinh λ cos φ + 1 + (cosh λ − 1) cos²φ)`.
pub fn lightlike_limit_angles(lambda: f64, phi: f64, eta_ref: f64) -> Result<LightlikeLimit> {
    let exact = solve_kinematics(&BoostParams::mirrored(eta_ref, lambda, phi)?)?;
    let (sl, cl) = (lambda.sinh(), lambda.cosh());
    let (sp, cp) = phi.sin_cos();
    let log_arg = cl + sl * cp;
    if !(log_arg > 0.0) {
        return Err(Error::Numeric(format!("cosh λ + sinh λ cos φ = {log_arg} is not positive")));
    }
    let clm1 = 2.0 * (0.5 * lambda).sinh().powi(2);
    let theta = (sp * (sl + clm1 * cp)).atan2(sl * cp + 1.0 + clm1 * cp * cp);
    Ok(LightlikeLimit { xi_minus_eta: log_arg.ln(), theta, alpha: 0.0, omega: theta, eta_ref, exact })
}

fn check_lambda_phi(lambda: f64, phi: f64) -> Result<()> {
    BoostParams::mirrored(0.0, lambda, phi).map(|_| ())
}

/// `tanh λ sin φ / (1 + tanh λ cos φ)`: the translation parameter that the
/// exact D matrix approaches as `η → ∞`.
pub fn gauge_parameter(lambda: f64, phi: f64) -> Result<f64> {
    check_lambda_phi(lambda, phi)?;
    let tl = lambda.tanh();
    let (sp, cp) = phi.sin_cos();
    let denom = 1.0 + tl * cp;
    if !(denom > 0.0) {
        return Err(Error::Numeric(format!("1 + tanh λ cos φ = {denom} is not positive")));
    }
    Ok(tl * sp / denom)
}

/// The commonly printed translation parameter `2 tanh λ sin φ/(1 + tanh λ cos φ)`,
/// twice [`gauge_parameter`]. Not used by the contraction itself.
pub fn printed_gauge_parameter(lambda: f64, phi: f64) -> Result<f64> {
    Ok(2.0 * gauge_parameter(lambda, phi)?)
}

/// Contracted little-group element `[[1, −u], [0, 1]]` with
/// `u = gauge_parameter(λ, φ)`.
pub fn contracted_d(lambda: f64, phi: f64) -> Result<SpinorMatrix> {
    let u = gauge_parameter(lambda, phi)?;
    Ok(SpinorMatrix::from_rows_unchecked([[1.0, -u], [0.0, 1.0]]))
}

/// Massless little-group (gauge) matrix in (t, z, x, y) order. Satisfies the
/// Lorentz condition and fixes the light-like vector `(1, 1, 0, 0)`.
pub fn gauge_vector_matrix(u: f64) -> Result<VectorMatrix> {
    finite("u", u)?;
    let h = 0.5 * u * u;
    Ok(VectorMatrix::from_rows_unchecked([
        [1.0 + h, -h, -u, 0.0],
        [h, 1.0 - h, -u, 0.0],
        [-u, u, 1.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
    ]))
}

/// The gauge matrix with the frequently printed `(0,0)` entry `1 + u²/4`.
/// Violates the Lorentz condition for `u ≠ 0`.
pub fn printed_gauge_rows(u: f64) -> Result<Rows4> {
    let mut m = *gauge_vector_matrix(u)?.rows();
    m[0][0] = 1.0 + 0.25 * u * u;
    Ok(m)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContractionRow {
    pub eta: f64,
    /// Max-entry distance between the exact D matrix and [`contracted_d`].
    pub deviation: f64,
    /// Lower-left entry of the exact D matrix (zero in the contracted form).
    pub lower_left: f64,
}

/// Distance of the exact D matrix from its contracted form along `eta_grid`.
pub fn contraction_profile(lambda: f64, phi: f64, eta_grid: &[f64]) -> Result<Vec<ContractionRow>> {
    let target = contracted_d(lambda, phi)?;
    eta_grid
        .iter()
        .map(|&eta| {
            let d = d_matrix_product(&BoostParams::mirrored(eta, lambda, phi)?)?;
            Ok(ContractionRow { eta, deviation: d.max_abs_diff(&target), lower_left: d.c() })
        })
        .collect()
}
