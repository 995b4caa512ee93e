//! Compose two boosts in both representations and check the covering map.
use std::f64::consts::FRAC_PI_2;

use lorentz_wigner::covering::covering_map;
use lorentz_wigner::spinor::{boost_dir_spinor, boost_z_spinor};
use lorentz_wigner::vector::{boost_dir_vector, boost_z_vector, rest_momentum};

fn main() -> lorentz_wigner::error::Result<()> {
    let (eta, lambda, phi) = (1.0, 1.0, FRAC_PI_2);

    let s = boost_dir_spinor(phi, lambda)? * boost_z_spinor(eta)?;
    let v = boost_dir_vector(phi, lambda)? * boost_z_vector(eta)?;
    println!("spinor product:\n{s}");
    println!("vector product:\n{v}");

    let cover = covering_map(&s, None)?;
    println!("covering map residual: {:.3e}", cover.max_abs_diff(&v));

    let p = v.apply(&rest_momentum(1.0)?);
    println!("boosted rest momentum: {p:?}");
    println!("mass^2 after boost: {}", p.mass_squared());
    Ok(())
}
