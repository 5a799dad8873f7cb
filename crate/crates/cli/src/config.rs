//! Validation of raw arguments into typed values, done before any computation.

use pardeg_core::cartan::CartanType;
use pardeg_core::weyl::Convention;

use crate::error::CliError;

pub fn cartan_type(s: &str) -> Result<CartanType, CliError> {
    s.parse::<CartanType>().map_err(CliError::from)
}

pub fn convention(s: &str) -> Result<Convention, CliError> {
    s.parse::<Convention>().map_err(CliError::Usage)
}

/// Odd and at least 3; primality is checked where it matters.
pub fn modulus(l: u64) -> Result<u64, CliError> {
    if l < 3 || l.is_multiple_of(2) {
        return Err(CliError::Usage(format!(
            "--l must be odd and at least 3, got {l}"
        )));
    }
    Ok(l)
}

/// `all`, `none`, or a comma list of 1-based indices; returns sorted 0-based indices.
pub fn levi(s: &str, rank: usize) -> Result<Vec<usize>, CliError> {
    let s = s.trim();
    match s {
        "all" => return Ok((0..rank).collect()),
        "none" | "" => return Ok(Vec::new()),
        _ => {}
    }
    let mut out = Vec::new();
    for part in s.split(',') {
        let part = part.trim();
        let i: usize = part
            .parse()
            .map_err(|_| CliError::Usage(format!("bad levi index {part:?}")))?;
        if i == 0 || i > rank {
            return Err(CliError::Usage(format!(
                "levi index {i} out of range 1..={rank}"
            )));
        }
        out.push(i - 1);
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}
