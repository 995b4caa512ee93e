//! Wigner rotation, little-group (WLG) rotation and the D matrix for two
//! successive non-collinear boosts.
//!
//! Conventions: `B(φ, λ)·B(0, η) = B(θ, ξ)·R(ω)`, so the Wigner rotation acts
//! first and the composed boost second. The WLG angle `α` is defined by
//! `B(0, η)·R(α)·B(0, −η) = D = B(φ, −λ)·R(θ)·B(0, ξ − η)`, the little-group
//! element fixing `P_b = (cosh η, sinh η, 0, 0)`. The two angles satisfy
//! `α + ω = θ`.
//!
//! Every closed form is evaluated as a (numerator, denominator) pair through
//! `atan2`, and the differences `g − f`, `cosh ξ − 1` are written without
//! subtractive cancellation so that large and small rapidities stay accurate.

use crate::covering::covering_map;
use crate::error::{Error, Result};
use crate::params::BoostParams;
use crate::spinor::{boost_dir_spinor, boost_z_spinor, rotation_spinor, SpinorMatrix};
use crate::tolerance::Tolerances;
use crate::vector::VectorMatrix;

/// Scalars appearing in the closed forms of the D matrix and the angles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DIntermediates {
    /// `sinh ξ / (cosh η cosh λ)`.
    pub f: f64,
    /// `tanh η + tanh λ cos φ`.
    pub g: f64,
    /// `g − f`, evaluated without cancellation.
    pub g_minus_f: f64,
    /// `(1 + tanh η)/(1 − tanh η) = e^{2η}`.
    pub h_plus: f64,
    /// `(1 − tanh η)/(1 + tanh η) = e^{−2η}`.
    pub h_minus: f64,
    /// `tanh η tanh λ sin φ`.
    pub kappa: f64,
    /// `sinh η cosh η`.
    pub n: f64,
    /// `tanh λ sin φ`.
    pub s: f64,
    /// `(cosh λ + 1)(cosh η + 1)`.
    pub c_plus: f64,
    /// `(cosh λ − 1)(cosh η − 1)`.
    pub c_minus: f64,
    /// Translation parameter of the contracted little group,
    /// `tanh λ sin φ / (1 + tanh λ cos φ)`. The exact D matrix tends to
    /// `[[1, −u], [0, 1]]` as `η → ∞`.
    pub u: f64,
}

/// Angles and rapidities extracted from two successive boosts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Decomposition {
    pub params: BoostParams,
    /// Rapidity of the composed boost.
    pub xi: f64,
    /// Direction of the composed boost, measured from z.
    pub theta: f64,
    /// Wigner rotation angle.
    pub omega: f64,
    /// Little-group (WLG) rotation angle.
    pub alpha: f64,
    /// Rapidity of the closing boost.
    pub beta: f64,
    pub tanh_beta: f64,
    pub intermediates: DIntermediates,
    pub(crate) ratios: AngleRatios,
}

/// (numerator, denominator) pairs whose quotients are `tan θ`, `tan ω`,
/// `tan α`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct AngleRatios {
    pub theta: (f64, f64),
    pub omega: (f64, f64),
    pub alpha: (f64, f64),
}

/// `cosh x − 1` without cancellation.
pub(crate) fn cosh_m1(x: f64) -> f64 {
    2.0 * (0.5 * x).sinh().powi(2)
}

/// Inverse of `cosh ξ − 1`, accurate for small `ξ`.
pub(crate) fn xi_from_cosh_m1(cm1: f64) -> f64 {
    2.0 * (0.5 * cm1.max(0.0)).sqrt().asinh()
}

/// `cosh ξ − 1 = cosh η cosh λ + sinh η sinh λ cos φ − 1`.
pub(crate) fn composed_cosh_m1(eta: f64, lambda: f64, phi: f64) -> f64 {
    cosh_m1(eta) * lambda.cosh() + cosh_m1(lambda) + eta.sinh() * lambda.sinh() * phi.cos()
}

fn wrap_pi(a: f64) -> f64 {
    let two_pi = 2.0 * std::f64::consts::PI;
    let r = a.rem_euclid(two_pi);
    if r > std::f64::consts::PI {
        r - two_pi
    } else {
        r
    }
}

/// Closed-form ξ, θ, ω, α, β for the given boosts.
pub fn solve_kinematics(p: &BoostParams) -> Result<Decomposition> {
    let BoostParams { eta, lambda, phi } = *p;
    if eta == 0.0 && lambda == 0.0 {
        return Err(Error::Degenerate("η = λ = 0: the composed direction θ is undefined".into()));
    }
    let (se, ce, te) = (eta.sinh(), eta.cosh(), eta.tanh());
    let (sl, cl, tl) = (lambda.sinh(), lambda.cosh(), lambda.tanh());
    let (sp, cp) = phi.sin_cos();

    let cosh_xi_m1 = composed_cosh_m1(eta, lambda, phi);
    let xi = xi_from_cosh_m1(cosh_xi_m1);
    let sinh_xi = xi.sinh();
    // Below this cosh ξ − 1 is rounding noise of the cosh η cosh λ terms.
    if cosh_xi_m1 <= 64.0 * f64::EPSILON * ce * cl {
        return Err(Error::Degenerate("the two boosts cancel (ξ = 0); θ is undefined".into()));
    }

    let clm1 = cosh_m1(lambda);
    let c_plus = (cl + 1.0) * (ce + 1.0);
    let c_minus = clm1 * cosh_m1(eta);

    let theta_r = (sp * (sl + te * clm1 * cp), sl * cp + te * (1.0 + clm1 * cp * cp));
    let omega_r = (
        2.0 * sp * (sl * se + c_minus * cp),
        c_plus + c_minus * (2.0 * phi).cos() + 2.0 * sl * se * cp,
    );
    let alpha_r = (tl * sp, se + ce * tl * cp);

    let theta = theta_r.0.atan2(theta_r.1);
    let omega = omega_r.0.atan2(omega_r.1);
    let alpha = alpha_r.0.atan2(alpha_r.1);

    let f = sinh_xi / (ce * cl);
    let g = te + tl * cp;
    // A² − sinh²ξ = −sinh²λ sin²φ with A = sinh η cosh λ + cosh η sinh λ cos φ.
    let a = se * cl + ce * sl * cp;
    let g_minus_f = if a >= 0.0 {
        -(sl * sp).powi(2) / ((a + sinh_xi) * ce * cl)
    } else {
        (a - sinh_xi) / (ce * cl)
    };
    let q = tl * cp;
    let u = tl * sp / (1.0 + q);

    // tanh β = (f − tanh η·k)/(k − f tanh η), k = 1 + tanh η tanh λ cos φ,
    // rewritten with f = g − (g − f).
    let tanh_beta = (q - ce * ce * g_minus_f) / (1.0 + se * ce * g_minus_f);
    if !tanh_beta.is_finite() || tanh_beta.abs() >= 1.0 {
        return Err(Error::Numeric(format!("closing boost has |tanh β| = {} ≥ 1", tanh_beta.abs())));
    }

    let out = Decomposition {
        params: *p,
        xi,
        theta,
        omega,
        alpha,
        beta: tanh_beta.atanh(),
        tanh_beta,
        intermediates: DIntermediates {
            f,
            g,
            g_minus_f,
            h_plus: (2.0 * eta).exp(),
            h_minus: (-2.0 * eta).exp(),
            kappa: te * tl * sp,
            n: se * ce,
            s: tl * sp,
            c_plus,
            c_minus,
            u,
        },
        ratios: AngleRatios { theta: theta_r, omega: omega_r, alpha: alpha_r },
    };
    if [out.xi, out.theta, out.omega, out.alpha, f, g].iter().any(|v| !v.is_finite()) {
        return Err(Error::Numeric(format!("non-finite intermediate for {p:?}")));
    }
    Ok(out)
}

/// `B(θ, −ξ)·B(φ, λ)·B(0, η)`, which equals `R(ω)`.
pub fn wigner_rotation_matrix(p: &BoostParams) -> Result<SpinorMatrix> {
    let k = solve_kinematics(p)?;
    Ok(boost_dir_spinor(k.theta, -k.xi)? * boost_dir_spinor(p.phi, p.lambda)? * boost_z_spinor(p.eta)?)
}

/// Angle of a spinor rotation matrix, `2·atan2(c, a) ∈ (−2π, 2π]`.
///
/// Fails if `r` deviates from the rotation template by more than `tol`
/// (default 1e−8).
pub fn extract_wigner_angle(r: &SpinorMatrix, tol: Option<f64>) -> Result<f64> {
    let tol = tol.unwrap_or(Tolerances::DEFAULT.rotation_shape);
    let deviation = r.rotation_deviation();
    if !(deviation <= tol) {
        return Err(Error::NotARotation { deviation });
    }
    Ok(2.0 * r.c().atan2(r.a()))
}

/// `B(0, −η)·B(φ, −λ)·R(θ)·B(0, ξ)`, which equals `R(α)`.
pub fn wlg_rotation_matrix(p: &BoostParams) -> Result<SpinorMatrix> {
    let k = solve_kinematics(p)?;
    Ok(boost_z_spinor(-p.eta)?
        * boost_dir_spinor(p.phi, -p.lambda)?
        * rotation_spinor(k.theta)?
        * boost_z_spinor(k.xi)?)
}

/// The little-group element `B(φ, −λ)·R(θ)·B(0, ξ − η)` as an explicit product.
pub fn d_matrix_product(p: &BoostParams) -> Result<SpinorMatrix> {
    let k = solve_kinematics(p)?;
    Ok(boost_dir_spinor(p.phi, -p.lambda)? * rotation_spinor(k.theta)? * boost_z_spinor(k.xi - p.eta)?)
}

fn require_f(k: &Decomposition) -> Result<()> {
    if k.intermediates.f > 0.0 {
        Ok(())
    } else {
        Err(Error::Degenerate("f = 0".into()))
    }
}

/// Closed form of the D matrix with determinant-one signs:
/// `[[√((f+g)/2f), −σ√(h₊(f−g)/2f)], [σ√(h₋(f−g)/2f), √((f+g)/2f)]]`,
/// `σ = sgn(sin φ)`.
pub fn d_matrix_closed(p: &BoostParams) -> Result<SpinorMatrix> {
    let k = solve_kinematics(p)?;
    require_f(&k)?;
    let i = k.intermediates;
    let half_ratio = -0.5 * i.g_minus_f / i.f; // (f − g)/2f ≥ 0
    let diag = (1.0 - half_ratio).sqrt();
    let sigma = if p.phi.sin() < 0.0 { -1.0 } else { 1.0 };
    let upper = -sigma * (i.h_plus * half_ratio).sqrt();
    let lower = sigma * (i.h_minus * half_ratio).sqrt();
    Ok(SpinorMatrix::from_rows_unchecked([[diag, upper], [lower, diag]]))
}

/// The closed form exactly as it is usually printed, with both off-diagonal
/// roots positive. Its determinant is `g/f`, not one; kept only to document
/// the sign correction.
pub fn d_matrix_printed(p: &BoostParams) -> Result<[[f64; 2]; 2]> {
    let k = solve_kinematics(p)?;
    require_f(&k)?;
    let i = k.intermediates;
    let half_ratio = -0.5 * i.g_minus_f / i.f;
    let diag = (1.0 - half_ratio).sqrt();
    Ok([[diag, (i.h_plus * half_ratio).sqrt()], [(i.h_minus * half_ratio).sqrt(), diag]])
}

/// Four-by-four closed form of the D matrix.
pub fn d_matrix_vector(p: &BoostParams) -> Result<VectorMatrix> {
    let k = solve_kinematics(p)?;
    require_f(&k)?;
    let i = k.intermediates;
    let (se, ce) = (p.eta.sinh(), p.eta.cosh());
    let delta = i.g_minus_f / i.f; // g/f − 1
    let m = [
        [1.0 - se * se * delta, i.n * delta, -i.kappa / i.f, 0.0],
        [-i.n * delta, 1.0 + ce * ce * delta, -i.s / i.f, 0.0],
        [-i.kappa / i.f, i.s / i.f, 1.0 + delta, 0.0],
        [0.0, 0.0, 0.0, 1.0],
    ];
    Ok(VectorMatrix::from_rows_unchecked(m))
}

/// `B(0, η)·R(α)·B(0, −η)` as an explicit product. Its off-diagonal entries
/// are `∓e^{±η} sin(α/2)`.
pub fn conjugated_rotation(eta: f64, alpha: f64) -> Result<SpinorMatrix> {
    Ok(boost_z_spinor(eta)? * rotation_spinor(alpha)? * boost_z_spinor(-eta)?)
}

/// Residual of the addition law: the larger of `|α + ω − θ|` (wrapped into
/// `(−π, π]`) and the tangent-addition mismatch, measured as
/// `|sin((α + ω) − θ)|` from the raw tangent ratios.
pub fn verify_addition(p: &BoostParams) -> Result<f64> {
    let k = solve_kinematics(p)?;
    Ok(addition_residual(&k))
}

pub(crate) fn addition_residual(k: &Decomposition) -> f64 {
    let direct = wrap_pi(k.alpha + k.omega - k.theta).abs();
    let (na, da) = k.ratios.alpha;
    let (nw, dw) = k.ratios.omega;
    let (nt, dt) = k.ratios.theta;
    // tan(α + ω) = (tan α + tan ω)/(1 − tan α tan ω), kept as a pair.
    let (ns, ds) = (na * dw + nw * da, da * dw - na * nw);
    let norm = ns.hypot(ds) * nt.hypot(dt);
    let tangent = if norm > 0.0 { (ns * dt - ds * nt).abs() / norm } else { 0.0 };
    direct.max(tangent)
}

/// `covering_map` of the D product, for cross-representation checks.
pub fn d_matrix_product_vector(p: &BoostParams) -> Result<VectorMatrix> {
    covering_map(&d_matrix_product(p)?, Some(1e-9))
}
