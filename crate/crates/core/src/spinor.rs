//! Two-by-two real unimodular matrices: the spinor (covering-group)
//! representation of the boosts and rotations confined to the zx plane.

use std::fmt;
use std::ops::Mul;

use crate::error::{finite, Error, Result};
use crate::tolerance::{Tolerances, RAPIDITY_CAP};

/// A real 2×2 matrix with unit determinant, stored row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinorMatrix {
    a: f64,
    b: f64,
    c: f64,
    d: f64,
}

impl SpinorMatrix {
    pub const IDENTITY: SpinorMatrix = SpinorMatrix { a: 1.0, b: 0.0, c: 0.0, d: 1.0 };

    /// Builds a matrix from `[[a, b], [c, d]]`, rejecting non-finite entries
    /// and determinants further than `tol` from one.
    pub fn new(rows: [[f64; 2]; 2], tol: Option<f64>) -> Result<Self> {
        let m = Self::from_rows_unchecked(rows);
        if !m.is_finite() {
            return Err(Error::InvalidMatrix(format!("non-finite entries {rows:?}")));
        }
        m.check_unimodular(tol)?;
        Ok(m)
    }

    pub(crate) const fn from_rows_unchecked(rows: [[f64; 2]; 2]) -> Self {
        SpinorMatrix { a: rows[0][0], b: rows[0][1], c: rows[1][0], d: rows[1][1] }
    }

    pub fn rows(&self) -> [[f64; 2]; 2] {
        [[self.a, self.b], [self.c, self.d]]
    }

    pub fn a(&self) -> f64 {
        self.a
    }
    pub fn b(&self) -> f64 {
        self.b
    }
    pub fn c(&self) -> f64 {
        self.c
    }
    pub fn d(&self) -> f64 {
        self.d
    }

    pub fn determinant(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    pub fn is_finite(&self) -> bool {
        [self.a, self.b, self.c, self.d].iter().all(|x| x.is_finite())
    }

    pub fn check_unimodular(&self, tol: Option<f64>) -> Result<()> {
        let tol = tol.unwrap_or(Tolerances::DEFAULT.unimodular);
        let dev = (self.determinant() - 1.0).abs();
        if dev <= tol {
            Ok(())
        } else {
            Err(Error::InvalidMatrix(format!("determinant deviates from 1 by {dev:e}")))
        }
    }

    pub fn compose(&self, rhs: &SpinorMatrix) -> SpinorMatrix {
        *self * *rhs
    }

    /// Exact inverse of a unimodular matrix, `[[d, −b], [−c, a]]`.
    pub fn inverse(&self, tol: Option<f64>) -> Result<SpinorMatrix> {
        self.check_unimodular(tol)?;
        Ok(SpinorMatrix { a: self.d, b: -self.b, c: -self.c, d: self.a })
    }

    pub fn neg(&self) -> SpinorMatrix {
        SpinorMatrix { a: -self.a, b: -self.b, c: -self.c, d: -self.d }
    }

    /// Largest absolute entrywise difference.
    pub fn max_abs_diff(&self, other: &SpinorMatrix) -> f64 {
        max_abs_diff2(&self.rows(), &other.rows())
    }

    /// Deviation from the rotation template `[[cos, −sin], [sin, cos]]`:
    /// the larger of `|a − d|`, `|b + c|` and `|det − 1|`.
    pub fn rotation_deviation(&self) -> f64 {
        (self.a - self.d)
            .abs()
            .max((self.b + self.c).abs())
            .max((self.determinant() - 1.0).abs())
    }
}

pub(crate) fn max_abs_diff2(x: &[[f64; 2]; 2], y: &[[f64; 2]; 2]) -> f64 {
    let mut m = 0.0f64;
    for i in 0..2 {
        for j in 0..2 {
            m = m.max((x[i][j] - y[i][j]).abs());
        }
    }
    m
}

impl Mul for SpinorMatrix {
    type Output = SpinorMatrix;

    fn mul(self, r: SpinorMatrix) -> SpinorMatrix {
        SpinorMatrix {
            a: self.a * r.a + self.b * r.c,
            b: self.a * r.b + self.b * r.d,
            c: self.c * r.a + self.d * r.c,
            d: self.c * r.b + self.d * r.d,
        }
    }
}

impl fmt::Display for SpinorMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{:>22.15e} {:>22.15e}]", self.a, self.b)?;
        write!(f, "[{:>22.15e} {:>22.15e}]", self.c, self.d)
    }
}

pub(crate) fn check_rapidity(eta: f64) -> Result<f64> {
    finite("rapidity", eta)?;
    if eta.abs() > RAPIDITY_CAP {
        return Err(Error::RapidityOverflow { eta, cap: RAPIDITY_CAP });
    }
    Ok(eta)
}

/// Rotation about the y axis by `phi`, acting through half angles.
pub fn rotation_spinor(phi: f64) -> Result<SpinorMatrix> {
    finite("angle", phi)?;
    let (s, c) = (0.5 * phi).sin_cos();
    Ok(SpinorMatrix { a: c, b: -s, c: s, d: c })
}

/// Boost along z: `diag(e^{η/2}, e^{−η/2})`.
pub fn boost_z_spinor(eta: f64) -> Result<SpinorMatrix> {
    check_rapidity(eta)?;
    let half = 0.5 * eta;
    Ok(SpinorMatrix { a: half.exp(), b: 0.0, c: 0.0, d: (-half).exp() })
}

/// Boost with rapidity `eta` along the direction at angle `phi` from the z
/// axis in the zx plane. Symmetric; equal to `R(φ)·B(0, η)·R(−φ)`.
pub fn boost_dir_spinor(phi: f64, eta: f64) -> Result<SpinorMatrix> {
    finite("angle", phi)?;
    check_rapidity(eta)?;
    let (sh, ch) = ((0.5 * eta).sinh(), (0.5 * eta).cosh());
    let (sp, cp) = phi.sin_cos();
    Ok(SpinorMatrix { a: ch + cp * sh, b: sp * sh, c: sp * sh, d: ch - cp * sh })
}
