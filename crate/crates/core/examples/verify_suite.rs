//! Runs the randomized invariant suite and prints the worst residual seen for
//! each property.

use lorentz_wigner::verify::{run_suite, DEFAULT_SEED};

fn main() -> Result<(), lorentz_wigner::error::Error> {
    let report = run_suite(DEFAULT_SEED, 1000, None)?;
    for p in &report.properties {
        println!(
            "{:<32} max {:>10.3e}  tol {:>8.1e}  {}",
            p.name,
            p.max_residual,
            p.tolerance,
            if p.passed() { "ok" } else { "FAIL" }
        );
    }
    Ok(())
}
