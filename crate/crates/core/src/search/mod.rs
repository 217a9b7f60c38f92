//! Brute-force record-setter scans and structural audits.

mod audit;
mod extremal;

pub use audit::{
    audit_substring_properties, audit_substring_properties_with, AuditReport, Property, Violation,
};
pub use extremal::{block_strings, verify_extremal_lemmas};

use std::fmt;
use std::str::FromStr;

use crate::budget::Budget;
use crate::calculus::GenString;
use crate::error::{Error, Result};
use crate::sequence::{SternRows, SternValue};

/// Which sequence records are taken against: `a` or `s(n) = a(n + 1)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Convention {
    #[default]
    A,
    S,
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::A => "A",
            Convention::S => "S",
        })
    }
}

impl FromStr for Convention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "a" | "A" => Ok(Convention::A),
            "s" | "S" => Ok(Convention::S),
            _ => Err(Error::Parse(s.to_string())),
        }
    }
}

/// A position where the sequence strictly exceeds every earlier value.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RecordSetter {
    pub index: u64,
    pub value: SternValue,
    /// Number of bits of `index`; 0 for index 0.
    pub bit_length: u32,
    pub convention: Convention,
}

impl RecordSetter {
    fn new(index: u64, value: u64, convention: Convention) -> Self {
        RecordSetter {
            index,
            value: SternValue::from(value),
            bit_length: 64 - index.leading_zeros(),
            convention,
        }
    }

    pub fn bits(&self) -> GenString {
        GenString::binary_of(self.index)
    }
}

/// All record-setters with index below `2^k_max`, in increasing order.
pub fn records_scan(k_max: u32, convention: Convention) -> Result<Vec<RecordSetter>> {
    records_scan_with(k_max, convention, &Budget::default())
}

pub fn records_scan_with(
    k_max: u32,
    convention: Convention,
    budget: &Budget,
) -> Result<Vec<RecordSetter>> {
    budget.check(k_max)?;
    let mut records = vec![RecordSetter::new(0, 0, Convention::A)];
    let mut best = 0u64;
    let mut rows = SternRows::new();
    for _ in 0..k_max {
        for (index, value) in rows.advance().iter() {
            if value > best {
                best = value;
                records.push(RecordSetter::new(index, value, Convention::A));
            }
        }
    }
    Ok(match convention {
        Convention::A => records,
        // R = { v_i - 1 : i >= 1 }. a(2^k_max) = 1 is never a record, so
        // the a-scan below 2^k_max covers every s-index below 2^k_max.
        Convention::S => records
            .into_iter()
            .skip(1)
            .map(|r| {
                let value = r.value.to_u64().expect("scan values fit u64");
                RecordSetter::new(r.index - 1, value, Convention::S)
            })
            .collect(),
    })
}

/// Record-setters whose index has exactly `k` bits.
pub fn records_in_bitlength(k: u32, convention: Convention) -> Result<Vec<RecordSetter>> {
    records_in_bitlength_with(k, convention, &Budget::default())
}

pub fn records_in_bitlength_with(
    k: u32,
    convention: Convention,
    budget: &Budget,
) -> Result<Vec<RecordSetter>> {
    Ok(records_scan_with(k, convention, budget)?
        .into_iter()
        .filter(|r| r.bit_length == k)
        .collect())
}
