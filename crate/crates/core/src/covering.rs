//! The two-to-one map from real unimodular 2×2 matrices onto the Lorentz
//! transformations of the (t, z, x) subspace.
//!
//! A four-vector with `y = 0` is encoded as the real symmetric matrix
//! `X = [[t + z, x], [x, t − z]]`, whose determinant is the invariant mass.
//! A spinor matrix `S` acts by `X ↦ S X Sᵀ`. The `y` component rides along
//! the antisymmetric part of the Hermitian encoding, which picks up a factor
//! `det S = 1`, so it is left untouched.

use crate::error::Result;
use crate::spinor::SpinorMatrix;
use crate::vector::{FourVector, Rows4, VectorMatrix, T, X, Y, Z};

fn encode(p: &FourVector) -> [[f64; 2]; 2] {
    [[p.t + p.z, p.x], [p.x, p.t - p.z]]
}

fn decode(m: &[[f64; 2]; 2]) -> FourVector {
    FourVector::new(0.5 * (m[0][0] + m[1][1]), 0.5 * (m[0][0] - m[1][1]), 0.5 * (m[0][1] + m[1][0]), 0.0)
}

fn act(s: &SpinorMatrix, p: &FourVector) -> FourVector {
    let x = encode(p);
    let r = s.rows();
    let mut sx = [[0.0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            sx[i][j] = r[i][0] * x[0][j] + r[i][1] * x[1][j];
        }
    }
    let mut out = [[0.0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = sx[i][0] * r[j][0] + sx[i][1] * r[j][1];
        }
    }
    decode(&out)
}

/// Vector-representation image of a spinor matrix. `s` and `−s` map to the
/// same matrix.
pub fn covering_map(s: &SpinorMatrix, tol: Option<f64>) -> Result<VectorMatrix> {
    s.check_unimodular(tol)?;
    let basis = [
        FourVector::new(1.0, 0.0, 0.0, 0.0),
        FourVector::new(0.0, 1.0, 0.0, 0.0),
        FourVector::new(0.0, 0.0, 1.0, 0.0),
    ];
    let mut m: Rows4 = [[0.0; 4]; 4];
    for (col, e) in basis.iter().enumerate() {
        let img = act(s, e);
        m[T][col] = img.t;
        m[Z][col] = img.z;
        m[X][col] = img.x;
    }
    m[Y][Y] = 1.0;
    Ok(VectorMatrix::from_rows_unchecked(m))
}
