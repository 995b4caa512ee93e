//! Four-by-four real Lorentz matrices and four-vectors.
//!
//! Coordinates are ordered **(t, z, x, y)**, not the more common (t, x, y, z).
//! All boosts lie in the zx plane and all rotations are about the y axis, so
//! the y row and column of every matrix built here is trivial.

use std::fmt;
use std::ops::Mul;

use crate::error::{finite, Error, Result};
use crate::spinor::check_rapidity;
use crate::tolerance::Tolerances;

pub const T: usize = 0;
pub const Z: usize = 1;
pub const X: usize = 2;
pub const Y: usize = 3;

/// Minkowski metric `diag(+1, −1, −1, −1)` in (t, z, x, y) order.
pub const METRIC: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

pub type Rows4 = [[f64; 4]; 4];

/// A four-momentum in natural units, ordered (t, z, x, y).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourVector {
    pub t: f64,
    pub z: f64,
    pub x: f64,
    pub y: f64,
}

impl FourVector {
    pub const fn new(t: f64, z: f64, x: f64, y: f64) -> Self {
        FourVector { t, z, x, y }
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.t, self.z, self.x, self.y]
    }

    pub fn from_array(v: [f64; 4]) -> Self {
        FourVector { t: v[0], z: v[1], x: v[2], y: v[3] }
    }

    /// `t² − z² − x² − y²`.
    pub fn mass_squared(&self) -> f64 {
        self.t * self.t - self.z * self.z - self.x * self.x - self.y * self.y
    }

    pub fn max_abs_diff(&self, other: &FourVector) -> f64 {
        self.to_array()
            .iter()
            .zip(other.to_array())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.to_array().iter().map(|v| v.abs()).fold(0.0, f64::max)
    }
}

/// Four-momentum of a particle of mass `m` at rest.
pub fn rest_momentum(m: f64) -> Result<FourVector> {
    finite("mass", m)?;
    Ok(FourVector::new(m, 0.0, 0.0, 0.0))
}

/// A proper orthochronous Lorentz matrix in (t, z, x, y) order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VectorMatrix {
    m: Rows4,
}

impl VectorMatrix {
    pub const IDENTITY: VectorMatrix = VectorMatrix {
        m: [[1.0, 0.0, 0.0, 0.0], [0.0, 1.0, 0.0, 0.0], [0.0, 0.0, 1.0, 0.0], [0.0, 0.0, 0.0, 1.0]],
    };

    /// Validates the Lorentz condition, unit determinant and `m[0][0] ≥ 1`.
    pub fn new(m: Rows4, tol: Option<f64>) -> Result<Self> {
        let v = VectorMatrix { m };
        if !m.iter().flatten().all(|x| x.is_finite()) {
            return Err(Error::InvalidMatrix("non-finite entries".into()));
        }
        v.check_proper_lorentz(tol)?;
        Ok(v)
    }

    pub(crate) const fn from_rows_unchecked(m: Rows4) -> Self {
        VectorMatrix { m }
    }

    pub fn rows(&self) -> &Rows4 {
        &self.m
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.m[i][j]
    }

    pub fn max_abs(&self) -> f64 {
        max_abs4(&self.m)
    }

    /// Normalized deviation of `Mᵀ g M` from `g`; see [`lorentz_deviation`].
    pub fn lorentz_deviation(&self) -> f64 {
        lorentz_deviation(&self.m)
    }

    pub fn determinant(&self) -> f64 {
        det4(&self.m)
    }

    pub fn check_proper_lorentz(&self, tol: Option<f64>) -> Result<()> {
        let tol = tol.unwrap_or(Tolerances::DEFAULT.lorentz);
        let dev = self.lorentz_deviation();
        if dev > tol {
            return Err(Error::InvalidMatrix(format!("Lorentz condition violated by {dev:e}")));
        }
        let scale = self.max_abs().max(1.0).powi(4);
        let det_dev = (self.determinant() - 1.0).abs() / scale;
        if det_dev > tol {
            return Err(Error::InvalidMatrix(format!("determinant deviates from 1 by {det_dev:e}")));
        }
        if self.m[T][T] < 1.0 - tol {
            return Err(Error::InvalidMatrix(format!("not orthochronous: m[0][0] = {}", self.m[T][T])));
        }
        Ok(())
    }

    pub fn compose(&self, rhs: &VectorMatrix) -> VectorMatrix {
        *self * *rhs
    }

    /// `g Mᵀ g`, the inverse of any Lorentz matrix.
    pub fn inverse(&self, tol: Option<f64>) -> Result<VectorMatrix> {
        self.check_proper_lorentz(tol)?;
        let mut out = [[0.0; 4]; 4];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = METRIC[i] * self.m[j][i] * METRIC[j];
            }
        }
        Ok(VectorMatrix { m: out })
    }

    pub fn apply(&self, p: &FourVector) -> FourVector {
        let v = p.to_array();
        let mut out = [0.0; 4];
        for (i, o) in out.iter_mut().enumerate() {
            *o = (0..4).map(|j| self.m[i][j] * v[j]).sum();
        }
        FourVector::from_array(out)
    }

    pub fn max_abs_diff(&self, other: &VectorMatrix) -> f64 {
        max_abs_diff4(&self.m, &other.m)
    }
}

impl Mul for VectorMatrix {
    type Output = VectorMatrix;

    fn mul(self, rhs: VectorMatrix) -> VectorMatrix {
        VectorMatrix { m: matmul4(&self.m, &rhs.m) }
    }
}

impl fmt::Display for VectorMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.m.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[")?;
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v:>22.15e}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

pub(crate) fn matmul4(a: &Rows4, b: &Rows4) -> Rows4 {
    let mut out = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = (0..4).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

pub(crate) fn max_abs4(m: &Rows4) -> f64 {
    m.iter().flatten().map(|v| v.abs()).fold(0.0, f64::max)
}

pub(crate) fn max_abs_diff4(a: &Rows4, b: &Rows4) -> f64 {
    a.iter()
        .flatten()
        .zip(b.iter().flatten())
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

/// Max-entry deviation of `Mᵀ g M` from `g`, divided by `max(1, max|m_ij|²)`.
///
/// Works on raw rows so that matrices which are *not* Lorentz (a misprinted
/// closed form, say) can still be measured.
pub fn lorentz_deviation(m: &Rows4) -> f64 {
    let mut dev = 0.0f64;
    for i in 0..4 {
        for j in 0..4 {
            let s: f64 = (0..4).map(|k| m[k][i] * METRIC[k] * m[k][j]).sum();
            let target = if i == j { METRIC[i] } else { 0.0 };
            dev = dev.max((s - target).abs());
        }
    }
    dev / max_abs4(m).max(1.0).powi(2)
}

fn det3(m: [[f64; 3]; 3]) -> f64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

pub(crate) fn det4(m: &Rows4) -> f64 {
    (0..4)
        .map(|col| {
            let mut minor = [[0.0; 3]; 3];
            for (r, minor_row) in minor.iter_mut().enumerate() {
                for (dst, j) in minor_row.iter_mut().zip((0..4).filter(|&j| j != col)) {
                    *dst = m[r + 1][j];
                }
            }
            let sign = if col % 2 == 0 { 1.0 } else { -1.0 };
            sign * m[0][col] * det3(minor)
        })
        .sum()
}

/// Rotation about the y axis by `phi`; quarter turn takes z to x.
pub fn rotation_vector(phi: f64) -> Result<VectorMatrix> {
    finite("angle", phi)?;
    let (s, c) = phi.sin_cos();
    Ok(VectorMatrix {
        m: [[1.0, 0.0, 0.0, 0.0], [0.0, c, -s, 0.0], [0.0, s, c, 0.0], [0.0, 0.0, 0.0, 1.0]],
    })
}

/// Boost along z with rapidity `eta`.
pub fn boost_z_vector(eta: f64) -> Result<VectorMatrix> {
    check_rapidity(eta)?;
    let (s, c) = (eta.sinh(), eta.cosh());
    Ok(VectorMatrix {
        m: [[c, s, 0.0, 0.0], [s, c, 0.0, 0.0], [0.0, 0.0, 1.0, 0.0], [0.0, 0.0, 0.0, 1.0]],
    })
}

/// Boost with rapidity `eta` along `(cos φ, sin φ)` in the zx plane, i.e.
/// `R(φ)·B(0, η)·R(−φ)` written out entrywise.
pub fn boost_dir_vector(phi: f64, eta: f64) -> Result<VectorMatrix> {
    finite("angle", phi)?;
    check_rapidity(eta)?;
    let (nx, nz) = phi.sin_cos();
    let (s, c) = (eta.sinh(), eta.cosh());
    let cm1 = 2.0 * (0.5 * eta).sinh().powi(2);
    Ok(VectorMatrix {
        m: [
            [c, s * nz, s * nx, 0.0],
            [s * nz, 1.0 + cm1 * nz * nz, cm1 * nz * nx, 0.0],
            [s * nx, cm1 * nz * nx, 1.0 + cm1 * nx * nx, 0.0],
            [0.0, 0.0, 0.0, 1.0],
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn rotation_quarter_turn_maps_z_to_x() {
        assert_eq!(rotation_vector(0.0).unwrap(), VectorMatrix::IDENTITY);
        let p = rotation_vector(PI / 2.0).unwrap().apply(&FourVector::new(0.0, 1.0, 0.0, 0.0));
        assert!(p.max_abs_diff(&FourVector::new(0.0, 0.0, 1.0, 0.0)) < 1e-16);
    }

    #[test]
    fn boost_z_acts_on_rest_momentum() {
        assert_eq!(boost_z_vector(0.0).unwrap(), VectorMatrix::IDENTITY);
        let eta: f64 = 1.3;
        let p = boost_z_vector(eta).unwrap().apply(&rest_momentum(1.0).unwrap());
        assert_eq!(p, FourVector::new(eta.cosh(), eta.sinh(), 0.0, 0.0));
        let id = boost_z_vector(eta).unwrap() * boost_z_vector(-eta).unwrap();
        assert!(id.max_abs_diff(&VectorMatrix::IDENTITY) < 1e-14);
    }

    #[test]
    fn boost_dir_matches_conjugation_product() {
        for &(phi, eta) in &[(0.0, 1.0), (0.7, 2.1), (2.9, 0.3), (PI / 2.0, 4.0)] {
            let direct = boost_dir_vector(phi, eta).unwrap();
            let prod = rotation_vector(phi).unwrap() * boost_z_vector(eta).unwrap() * rotation_vector(-phi).unwrap();
            assert!(direct.max_abs_diff(&prod) <= 1e-13 * direct.max_abs().max(1.0), "{phi} {eta}");
            let back = direct * boost_dir_vector(phi, -eta).unwrap();
            assert!(back.max_abs_diff(&VectorMatrix::IDENTITY) < 1e-12);
        }
        assert_eq!(boost_dir_vector(0.4, 0.0).unwrap(), VectorMatrix::IDENTITY);
        assert!(boost_dir_vector(0.0, 0.9).unwrap().max_abs_diff(&boost_z_vector(0.9).unwrap()) < 1e-15);
    }

    #[test]
    fn successive_boosts_energy() {
        let (eta, lam, phi): (f64, f64, f64) = (0.8, 1.4, 2.0);
        let m = boost_dir_vector(phi, lam).unwrap() * boost_z_vector(eta).unwrap();
        let p = m.apply(&rest_momentum(1.0).unwrap());
        let expected = eta.cosh() * lam.cosh() + eta.sinh() * lam.sinh() * phi.cos();
        assert!((p.t - expected).abs() < 1e-14);
        assert!((p.mass_squared() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn inverse_and_identity() {
        let m = boost_dir_vector(1.2, 0.9).unwrap() * rotation_vector(0.4).unwrap();
        let inv = m.inverse(None).unwrap();
        assert!((m * inv).max_abs_diff(&VectorMatrix::IDENTITY) < 1e-14);
        let p = FourVector::new(3.0, 1.0, -2.0, 0.5);
        assert_eq!(VectorMatrix::IDENTITY.apply(&p), p);
    }

    #[test]
    fn invalid_matrices_rejected() {
        let mut m = *VectorMatrix::IDENTITY.rows();
        m[0][0] = 1.5;
        assert!(matches!(VectorMatrix::new(m, None), Err(Error::InvalidMatrix(_))));
        // time reversal: Lorentz but not orthochronous
        let mut m = *VectorMatrix::IDENTITY.rows();
        m[0][0] = -1.0;
        m[3][3] = -1.0;
        assert!(VectorMatrix::new(m, None).is_err());
        // parity on x: improper
        let mut m = *VectorMatrix::IDENTITY.rows();
        m[2][2] = -1.0;
        assert!(VectorMatrix::new(m, None).is_err());
        assert!(VectorMatrix::new(*boost_dir_vector(0.3, 2.0).unwrap().rows(), None).is_ok());
    }

    #[test]
    fn determinant_of_generators() {
        assert!((boost_dir_vector(0.5, 3.0).unwrap().determinant() - 1.0).abs() < 1e-10);
        assert!((rotation_vector(0.5).unwrap().determinant() - 1.0).abs() < 1e-15);
    }
}
