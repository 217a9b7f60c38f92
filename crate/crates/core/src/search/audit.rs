use std::fmt;
use std::ops::RangeInclusive;

use super::{records_scan_with, Convention};
use crate::budget::Budget;
use crate::calculus::GenString;
use crate::error::Result;

/// Bit length from which the substring properties are asserted; shorter
/// record-setters are only reported.
pub const HARD_AUDIT_MIN_BITS: u32 = 12;

/// The lone record-setter allowed to carry an inner `1000`.
pub const THOUSAND_EXCEPTION: &str = "1001000";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Property {
    NoEleven,
    NoTenThousand,
    ThousandPrefixOnly,
    BlockDecomposition,
    AllowedException,
    TwoHundredMaximum,
    SingleHundredMinimum,
    OddDeltaSeparation,
    OddFibProductsDecreasing,
    EvenFibProductsIncreasing,
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Property::NoEleven => "no-11",
            Property::NoTenThousand => "no-10000",
            Property::ThousandPrefixOnly => "1000-prefix-only",
            Property::BlockDecomposition => "10/100/1000-blocks",
            Property::AllowedException => "allowed-exception-1001000",
            Property::TwoHundredMaximum => "two-100s-maximum",
            Property::SingleHundredMinimum => "single-100-minimum",
            Property::OddDeltaSeparation => "delta3-below-delta1",
            Property::OddFibProductsDecreasing => "odd-fib-products-decreasing",
            Property::EvenFibProductsIncreasing => "even-fib-products-increasing",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// The offending string, or a description of the checked instance.
    pub subject: String,
    pub index: Option<u64>,
    pub property: Property,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.index {
            Some(i) => write!(f, "{} ({}): {}", self.subject, i, self.property)?,
            None => write!(f, "{}: {}", self.subject, self.property)?,
        }
        if !self.detail.is_empty() {
            write!(f, " [{}]", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditReport {
    /// Range over which violations are asserted (empty when nothing was).
    pub k_range: RangeInclusive<u32>,
    pub violations: Vec<Violation>,
    /// Findings outside the asserted range, kept for the record.
    pub informational: Vec<Violation>,
    pub checked_count: u64,
}

impl AuditReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the structure of every s-convention record-setter below
/// `2^k_max`: no `11`, no `10000`, `1000` only as a prefix (or the whole
/// string `1001000`), and a decomposition into `10`/`100`/`1000` blocks.
///
/// Only bit lengths from 12 up count as violations; shorter ones land in
/// [`AuditReport::informational`].
pub fn audit_substring_properties(k_max: u32) -> Result<AuditReport> {
    audit_substring_properties_with(k_max, &Budget::default())
}

pub fn audit_substring_properties_with(k_max: u32, budget: &Budget) -> Result<AuditReport> {
    let records = records_scan_with(k_max, Convention::S, budget)?;
    let mut report = AuditReport {
        k_range: HARD_AUDIT_MIN_BITS..=k_max,
        violations: Vec::new(),
        informational: Vec::new(),
        checked_count: 0,
    };
    for record in records.iter().filter(|r| r.index > 0) {
        let bits = record.bits();
        let findings = structural_findings(&bits);
        if record.bit_length >= HARD_AUDIT_MIN_BITS {
            report.checked_count += 1;
            report
                .violations
                .extend(findings.into_iter().map(|property| Violation {
                    subject: bits.to_string(),
                    index: Some(record.index),
                    property,
                    detail: String::new(),
                }));
        } else {
            let exception = bits.to_string() == THOUSAND_EXCEPTION;
            let findings = findings
                .into_iter()
                .chain(exception.then_some(Property::AllowedException));
            report
                .informational
                .extend(findings.map(|property| Violation {
                    subject: bits.to_string(),
                    index: Some(record.index),
                    property,
                    detail: String::new(),
                }));
        }
    }
    Ok(report)
}

/// Structural properties `bits` fails.
pub fn structural_findings(bits: &GenString) -> Vec<Property> {
    let mut out = Vec::new();
    if bits.contains("11") {
        out.push(Property::NoEleven);
    }
    if bits.contains("10000") {
        out.push(Property::NoTenThousand);
    }
    let inner_thousand = bits.find_all("1000").any(|p| p > 0);
    if inner_thousand && bits.to_string() != THOUSAND_EXCEPTION {
        out.push(Property::ThousandPrefixOnly);
    }
    if !is_block_concatenation(bits) {
        out.push(Property::BlockDecomposition);
    }
    out
}

/// Whether `bits` splits into blocks `10`, `100`, `1000`.
pub fn is_block_concatenation(bits: &GenString) -> bool {
    let d = bits.digits();
    if d.first() != Some(&1) {
        return false;
    }
    d.split(|&x| x == 1)
        .skip(1)
        .all(|zeros| (1..=3).contains(&zeros.len()))
}
