//! Wigner rotations and little-group matrices for two successive Lorentz boosts.
//!
//! Every four-vector and 4×4 matrix uses the coordinate order `(t, z, x, y)`
//! with metric `diag(+1, −1, −1, −1)`. Boosts live in the z–x plane, so the
//! y component is carried along untouched. The 2×2 real spinor matrices act
//! on the symmetric form `[[t + z, x], [x, t − z]]`.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod covering;
pub mod decomp;
pub mod error;
pub mod limits;
pub mod params;
pub mod scenarios;
pub mod spinor;
pub mod sweep_csv;
pub mod tolerance;
pub mod vector;
pub mod verify;
