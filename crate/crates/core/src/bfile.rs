//! OEIS b-file format: one `n value` pair per line, `n` increasing.

use std::fmt::Write as _;

use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BFileError {
    #[error("line {line}: expected \"<n> <value>\", got {text:?}")]
    Malformed { line: usize, text: String },
    #[error("line {line}: index {index} does not increase")]
    NotIncreasing { line: usize, index: BigUint },
}

pub fn write_bfile<'a, I>(pairs: I) -> String
where
    I: IntoIterator<Item = (&'a BigUint, &'a BigUint)>,
{
    let mut out = String::new();
    for (n, v) in pairs {
        writeln!(out, "{n} {v}").expect("writing to a String");
    }
    out
}

/// Parses a b-file. Blank lines and `#` comments are skipped.
pub fn parse_bfile(text: &str) -> Result<Vec<(BigUint, BigUint)>, BFileError> {
    let mut out: Vec<(BigUint, BigUint)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let malformed = || BFileError::Malformed {
            line: i + 1,
            text: raw.to_string(),
        };
        let mut parts = line.split_whitespace();
        let (Some(n), Some(v), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(malformed());
        };
        let n: BigUint = n.parse().map_err(|_| malformed())?;
        let v: BigUint = v.parse().map_err(|_| malformed())?;
        if out.last().is_some_and(|(prev, _)| *prev >= n) {
            return Err(BFileError::NotIncreasing {
                line: i + 1,
                index: n,
            });
        }
        out.push((n, v));
    }
    Ok(out)
}
