use std::f64::consts::PI;

use crate::error::{finite, Error, Result};
use crate::tolerance::RAPIDITY_CAP;

/// Two successive boosts: first `eta` along z, then `lambda` along the
/// direction at angle `phi` from z in the zx plane.
///
/// Rapidity relates to speed through `tanh η = v/c`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoostParams {
    pub eta: f64,
    pub lambda: f64,
    pub phi: f64,
}

impl BoostParams {
    /// Requires `eta, lambda ∈ [0, cap]` and `phi ∈ [0, π]`.
    pub fn new(eta: f64, lambda: f64, phi: f64) -> Result<Self> {
        let p = Self::mirrored(eta, lambda, phi)?;
        if !(0.0..=PI).contains(&phi) {
            return Err(Error::InvalidArgument(format!("phi must lie in [0, π], got {phi}")));
        }
        Ok(p)
    }

    /// Like [`BoostParams::new`] but also accepts `phi ∈ [−π, 0)`, the mirror
    /// image of the standard domain under `x ↦ −x`.
    pub fn mirrored(eta: f64, lambda: f64, phi: f64) -> Result<Self> {
        for (name, v) in [("eta", eta), ("lambda", lambda)] {
            finite(name, v)?;
            if v < 0.0 {
                return Err(Error::InvalidArgument(format!("{name} must be non-negative, got {v}")));
            }
            if v > RAPIDITY_CAP {
                return Err(Error::RapidityOverflow { eta: v, cap: RAPIDITY_CAP });
            }
        }
        finite("phi", phi)?;
        if !(-PI..=PI).contains(&phi) {
            return Err(Error::InvalidArgument(format!("phi must lie in [−π, π], got {phi}")));
        }
        Ok(BoostParams { eta, lambda, phi })
    }
}
