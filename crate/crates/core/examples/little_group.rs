//! Build the little-group element D and check that it fixes the boosted momentum.
use lorentz_wigner::decomp::{conjugated_rotation, d_matrix_closed, d_matrix_product, d_matrix_vector, solve_kinematics};
use lorentz_wigner::params::BoostParams;
use lorentz_wigner::vector::{boost_z_vector, rest_momentum};

fn main() -> lorentz_wigner::error::Result<()> {
    let p = BoostParams::new(2.0, 1.5, 1.1)?;
    let k = solve_kinematics(&p)?;

    let closed = d_matrix_closed(&p)?;
    println!("D (closed form):\n{closed}");
    println!("D vs product:           {:.3e}", closed.max_abs_diff(&d_matrix_product(&p)?));
    println!("D vs B R(alpha) B^-1:   {:.3e}", closed.max_abs_diff(&conjugated_rotation(p.eta, k.alpha)?));

    let moving = boost_z_vector(p.eta)?.apply(&rest_momentum(1.0)?);
    let fixed = d_matrix_vector(&p)?.apply(&moving);
    println!("p_B = {moving:?}");
    println!("D p_B - p_B: {:.3e}", fixed.max_abs_diff(&moving));
    println!("intermediates: {:?}", k.intermediates);
    Ok(())
}
