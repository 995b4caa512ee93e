//! Thomas precession, perpendicular boosts and the lambda = eta family.
use lorentz_wigner::limits::nr_limit_angles;
use lorentz_wigner::params::BoostParams;
use lorentz_wigner::scenarios::{lambda_eq_eta_case, perp_case, thomas_case, thomas_omega_closed};

fn main() -> lorentz_wigner::error::Result<()> {
    let c = thomas_case(1.0, 0.8)?;
    println!("thomas: lambda = {}, phi = {}", c.lambda, c.phi);
    println!("  omega = {} (closed form {})", c.angles.omega, thomas_omega_closed(1.0, 0.8));

    let a = perp_case(1.0, 1.0)?;
    println!("perpendicular: tan theta = {}, cosh 1 = {}", a.theta.tan(), 1f64.cosh());

    for eta in [0.1, 1.0, 5.0] {
        let l = lambda_eq_eta_case(eta)?;
        println!("lambda = eta = {eta}: omega/theta = {}", l.from_rapidity.omega / l.from_rapidity.theta);
    }

    let nr = nr_limit_angles(&BoostParams::new(1e-3, 2e-3, 1.0)?)?;
    println!("slow boosts: theta = {:.6e} (exact {:.6e}), omega = {:.1e} (exact {:.3e})", nr.theta, nr.exact.theta, nr.omega, nr.exact.omega);
    Ok(())
}
