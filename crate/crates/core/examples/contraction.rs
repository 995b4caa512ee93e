//! Watch D approach a null-vector translation as the rapidity grows.
use std::f64::consts::FRAC_PI_2;

use lorentz_wigner::limits::{contraction_profile, gauge_parameter, gauge_vector_matrix, lightlike_limit_angles};

fn main() -> lorentz_wigner::error::Result<()> {
    let (lambda, phi) = (1.0, FRAC_PI_2);
    let u = gauge_parameter(lambda, phi)?;
    println!("limit: [[1, -u], [0, 1]] with u = {u}");
    println!("{:>4} {:>12} {:>12}", "eta", "deviation", "lower_left");
    let grid: Vec<f64> = (0..=25).step_by(5).map(f64::from).collect();
    for row in contraction_profile(lambda, phi, &grid)? {
        println!("{:4} {:12.3e} {:12.3e}", row.eta, row.deviation, row.lower_left);
    }

    println!("gauge transformation on four-vectors:\n{}", gauge_vector_matrix(u)?);

    let l = lightlike_limit_angles(lambda, phi, 20.0)?;
    println!("theta = {}, alpha = {}, omega = {}", l.theta, l.alpha, l.omega);
    println!("xi - eta = {} (exact at eta = 20: {})", l.xi_minus_eta, l.exact_xi_minus_eta());
    Ok(())
}
