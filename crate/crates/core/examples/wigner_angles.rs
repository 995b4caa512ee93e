//! Solve the kinematics for a few boost pairs and print the angles.
use lorentz_wigner::decomp::{extract_wigner_angle, solve_kinematics, verify_addition, wigner_rotation_matrix};
use lorentz_wigner::params::BoostParams;

fn main() -> lorentz_wigner::error::Result<()> {
    let cases = [(1.0, 1.0, std::f64::consts::FRAC_PI_2), (0.5, 2.0, 0.3), (3.0, 3.0, 2.5)];
    println!("{:>6} {:>6} {:>6} {:>10} {:>10} {:>10} {:>10} {:>10}", "eta", "lambda", "phi", "xi", "theta", "omega", "alpha", "resid");
    for (eta, lambda, phi) in cases {
        let p = BoostParams::new(eta, lambda, phi)?;
        let k = solve_kinematics(&p)?;
        println!(
            "{eta:6.2} {lambda:6.2} {phi:6.2} {:10.6} {:10.6} {:10.6} {:10.6} {:10.2e}",
            k.xi,
            k.theta,
            k.omega,
            k.alpha,
            verify_addition(&p)?
        );
        // the rotation left over after undoing the composite boost
        let w = extract_wigner_angle(&wigner_rotation_matrix(&p)?, None)?;
        assert!((w - k.omega).abs() < 1e-10);
    }
    Ok(())
}
