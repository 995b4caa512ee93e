//! CSV encoding of sweep rows.
//!
//! Header `tanh_eta,xi,theta,alpha,omega,omega_over_theta`, `\n` line ends,
//! numbers in shortest round-trip form so a parsed file reproduces the rows
//! bit for bit.

use std::io::{Read, Write};

use crate::error::{Error, Result};
use crate::scenarios::SweepRow;

pub const HEADER: [&str; 6] = ["tanh_eta", "xi", "theta", "alpha", "omega", "omega_over_theta"];

pub fn write_rows<W: Write>(rows: &[SweepRow], out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    w.write_record(HEADER)?;
    for r in rows {
        w.write_record(
            [r.tanh_eta, r.xi, r.theta, r.alpha, r.omega, r.omega_over_theta].map(|v| v.to_string()),
        )?;
    }
    w.flush()?;
    Ok(())
}

pub fn rows_to_string(rows: &[SweepRow]) -> Result<String> {
    let mut buf = Vec::new();
    write_rows(rows, &mut buf)?;
    String::from_utf8(buf).map_err(|e| Error::Io(e.to_string()))
}

pub fn read_rows<R: Read>(input: R) -> Result<Vec<SweepRow>> {
    let mut r = csv::ReaderBuilder::new().has_headers(true).from_reader(input);
    let header = r.headers()?.clone();
    if header.iter().ne(HEADER) {
        return Err(Error::Io(format!("unexpected header {header:?}")));
    }
    r.records()
        .map(|rec| {
            let rec = rec?;
            if rec.len() != 6 {
                return Err(Error::Io(format!("expected 6 fields, got {}", rec.len())));
            }
            let mut v = [0.0; 6];
            for (slot, field) in v.iter_mut().zip(rec.iter()) {
                *slot = field.parse().map_err(|e| Error::Io(format!("bad number {field:?}: {e}")))?;
            }
            Ok(SweepRow { tanh_eta: v[0], xi: v[1], theta: v[2], alpha: v[3], omega: v[4], omega_over_theta: v[5] })
        })
        .collect()
}
