//! Write omega/theta against tanh(eta) for the lambda = eta family as CSV.
//!
//! Pass an output path to write a file, otherwise the table goes to stdout.
use lorentz_wigner::scenarios::{linear_grid, sweep, SweepCase};
use lorentz_wigner::sweep_csv::write_rows;

fn main() -> lorentz_wigner::error::Result<()> {
    let rows = sweep(SweepCase::LambdaEqEta, &linear_grid(0.0, 0.9999, 201)?)?;
    match std::env::args().nth(1) {
        Some(path) => {
            write_rows(&rows, std::fs::File::create(&path)?)?;
            eprintln!("wrote {} rows to {path}", rows.len());
        }
        None => write_rows(&rows, std::io::stdout().lock())?,
    }
    Ok(())
}
