//! Default numeric tolerances.
//!
//! Every invariant check in the crate accepts an `Option<f64>` override; `None`
//! falls back to the matching field of [`Tolerances::DEFAULT`].

/// Largest admissible |rapidity|. `e^{η/2}` and `cosh η` stay far from
/// overflow below this.
pub const RAPIDITY_CAP: f64 = 350.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// |det − 1| for spinor matrices.
    pub unimodular: f64,
    /// Normalized max-entry deviation of `Mᵀ g M` from `g`.
    pub lorentz: f64,
    /// Normalized homomorphism residual of the covering map.
    pub homomorphism: f64,
    /// Entrywise agreement between `R·B·R⁻¹` and the direct boost.
    pub conjugation: f64,
    /// Relative invariant-mass drift, scaled by `max(1, t²)`.
    pub mass: f64,
    /// Deviation from the rotation template accepted by angle extraction.
    pub rotation_shape: f64,
    /// Angle residuals (addition law, closed form vs product).
    pub angle: f64,
    /// Entrywise agreement between the two D-matrix routes.
    pub d_matrix: f64,
}

impl Tolerances {
    pub const DEFAULT: Tolerances = Tolerances {
        unimodular: 1e-12,
        lorentz: 1e-11,
        homomorphism: 1e-10,
        conjugation: 1e-13,
        mass: 1e-10,
        rotation_shape: 1e-8,
        angle: 1e-10,
        d_matrix: 1e-9,
    };
}

impl Default for Tolerances {
    fn default() -> Self {
        Self::DEFAULT
    }
}
