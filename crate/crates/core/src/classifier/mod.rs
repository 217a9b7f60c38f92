//! Closed-form description of the k-bit record-setters.
//!
//! For `k >= 12` the record-setters with exactly `k` bits fall into three
//! families when `k = 2n` is even and five when `k = 2n + 1` is odd; each
//! family has a closed-form index and a Stern value that is a short sum of
//! Fibonacci/Lucas products. Shorter bit lengths come from a fixed table.

mod table3;

pub use table3::{table_row, TABLE_3, TABLE_3_VALUES};

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::budget::Budget;
use crate::calculus::{stern_a_matrix, GenString};
use crate::error::{Error, Result};
use crate::fibonacci::{fib, lucas};
use crate::search::{records_in_bitlength_with, Convention};
use crate::sequence::stern_a_big;

/// First bit length covered by the families.
pub const FAMILY_MIN_BITS: u32 = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

/// The k-bit record-setter families, written MSB-first with `k = 2n` or
/// `k = 2n + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `100 (10)^a 0 (10)^(n-3-a) 11`, `0 <= a <= n-3`
    E1,
    /// `(10)^b 0 (10)^(n-b-1) 1`, `1 <= b <= floor(n/2)`
    E2,
    /// `(10)^(n-1) 11`
    E3,
    /// `1000 (10)^(n-2) 1`
    O1,
    /// `100100 (10)^(n-4) 011`
    O2,
    /// `100 (10)^b 0 (10)^(n-2-b) 1`, `1 <= b <= ceil(n/2) - 1`
    O3,
    /// `(10)^(a+1) 0 (10)^(n-2-a) 11`, `0 <= a <= n-2`
    O4,
    /// `(10)^n 1`
    O5,
}

impl Family {
    pub const EVEN: [Family; 3] = [Family::E1, Family::E2, Family::E3];
    pub const ODD: [Family; 5] = [Family::O1, Family::O2, Family::O3, Family::O4, Family::O5];

    pub fn parity(self) -> Parity {
        match self {
            Family::E1 | Family::E2 | Family::E3 => Parity::Even,
            _ => Parity::Odd,
        }
    }

    /// Parameter name and range at half-length `n`; `None` for singletons.
    pub fn param_range(self, n: u32) -> Option<(char, std::ops::RangeInclusive<u32>)> {
        match self {
            Family::E1 => Some(('a', 0..=n - 3)),
            Family::E2 => Some(('b', 1..=n / 2)),
            Family::O3 => Some(('b', 1..=n.div_ceil(2) - 1)),
            Family::O4 => Some(('a', 0..=n - 2)),
            _ => None,
        }
    }

    /// Bit length of members at half-length `n`.
    pub fn bit_length(self, n: u32) -> u32 {
        match self.parity() {
            Parity::Even => 2 * n,
            Parity::Odd => 2 * n + 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// One member pattern: a family plus its parameter, if it has one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilyDescriptor {
    pub family: Family,
    pub param: Option<u32>,
}

impl FamilyDescriptor {
    pub fn new(family: Family, param: Option<u32>) -> Self {
        FamilyDescriptor { family, param }
    }

    pub fn parity(&self) -> Parity {
        self.family.parity()
    }

    fn out_of_range(&self, n: u32) -> Error {
        Error::ParameterOutOfRange {
            family: self.family,
            param: self.param,
            n,
        }
    }

    /// Checks `n` (at least 6, i.e. `k >= 12`) and the parameter.
    pub fn validate(&self, n: u32) -> Result<()> {
        if self.family.bit_length(n) < FAMILY_MIN_BITS {
            return Err(self.out_of_range(n));
        }
        match (self.family.param_range(n), self.param) {
            (Some((_, range)), Some(p)) if range.contains(&p) => Ok(()),
            (None, None) => Ok(()),
            _ => Err(self.out_of_range(n)),
        }
    }

    /// The member's binary string at half-length `n`.
    pub fn render(&self, n: u32) -> Result<GenString> {
        self.validate(n)?;
        let n = n as usize;
        let p = self.param.unwrap_or(0) as usize;
        let t = |i: usize| "10".repeat(i);
        let s = match self.family {
            Family::E1 => format!("100{}0{}11", t(p), t(n - 3 - p)),
            Family::E2 => format!("{}0{}1", t(p), t(n - p - 1)),
            Family::E3 => format!("{}11", t(n - 1)),
            Family::O1 => format!("1000{}1", t(n - 2)),
            Family::O2 => format!("100100{}011", t(n - 4)),
            Family::O3 => format!("100{}0{}1", t(p), t(n - 2 - p)),
            Family::O4 => format!("{}0{}11", t(p + 1), t(n - 2 - p)),
            Family::O5 => format!("{}1", t(n)),
        };
        Ok(s.parse().expect("rendered patterns are binary"))
    }
}

impl fmt::Display for FamilyDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.param, self.family.param_range(6)) {
            (Some(p), Some((name, _))) => write!(f, "{}({name}={p})", self.family),
            _ => write!(f, "{}", self.family),
        }
    }
}

/// Half-length `n` and parity for bit length `k`.
fn half_length(k: u32) -> (u32, Parity) {
    if k.is_multiple_of(2) {
        (k / 2, Parity::Even)
    } else {
        ((k - 1) / 2, Parity::Odd)
    }
}

/// All descriptors for bit length `k >= 12`, in the order the families are
/// listed (which is claimed to be increasing).
pub fn descriptors(k: u32) -> Vec<FamilyDescriptor> {
    if k < FAMILY_MIN_BITS {
        return Vec::new();
    }
    let (n, parity) = half_length(k);
    let families: &[Family] = match parity {
        Parity::Even => &Family::EVEN,
        Parity::Odd => &Family::ODD,
    };
    families
        .iter()
        .flat_map(|&family| match family.param_range(n) {
            Some((_, range)) => range
                .map(|p| FamilyDescriptor::new(family, Some(p)))
                .collect::<Vec<_>>(),
            None => vec![FamilyDescriptor::new(family, None)],
        })
        .collect()
}

fn pow2(e: u32) -> BigUint {
    BigUint::one() << e
}

fn third(x: BigUint) -> BigUint {
    debug_assert_eq!(&x % 3u32, BigUint::from(0u32));
    x / 3u32
}

/// Closed-form integer value of the member at half-length `n`.
pub fn closed_form_index(descriptor: &FamilyDescriptor, n: u32) -> Result<BigUint> {
    descriptor.validate(n)?;
    let p = descriptor.param.unwrap_or(0);
    Ok(match descriptor.family {
        Family::E1 => pow2(2 * n - 1) + third(pow2(2 * n - 2) + 1u32 - pow2(2 * n - 2 * p - 3)),
        Family::E2 => third(pow2(2 * n + 1) - pow2(2 * n - 2 * p) - 1u32),
        Family::E3 => third(pow2(2 * n + 1) + 1u32),
        Family::O1 => pow2(2 * n) + third(pow2(2 * n - 2) - 1u32),
        Family::O2 => pow2(2 * n) + pow2(2 * n - 3) + third(pow2(2 * n - 4) - 7u32),
        Family::O3 => pow2(2 * n) + third(pow2(2 * n - 1) - pow2(2 * n - 2 * p - 2) - 1u32),
        Family::O4 => third(pow2(2 * n + 2) + 1u32 - pow2(2 * n - 2 * p - 1)),
        Family::O5 => third(pow2(2 * n + 2) - 1u32),
    })
}

/// Closed-form Stern value `a(index)` of the member at half-length `n`.
pub fn closed_form_stern_value(descriptor: &FamilyDescriptor, n: u32) -> Result<BigUint> {
    descriptor.validate(n)?;
    let n = u64::from(n);
    let p = u64::from(descriptor.param.unwrap_or(0));
    let f = fib;
    let l = lucas;
    Ok(match descriptor.family {
        Family::E1 => l(2 * p + 3) * f(2 * n - 2 * p - 3) + l(2 * p + 1) * f(2 * n - 2 * p - 4),
        Family::E2 => f(2 * p + 2) * f(2 * n - 2 * p) + f(2 * p) * f(2 * n - 2 * p - 1),
        Family::E3 => f(2 * n + 1),
        Family::O1 => f(2 * n + 1) + f(2 * n - 4),
        Family::O2 => f(2 * n + 1) + 8u32 * f(2 * n - 8),
        Family::O3 => l(2 * p + 3) * f(2 * n - 2 * p - 2) + l(2 * p + 1) * f(2 * n - 2 * p - 3),
        Family::O4 => f(2 * p + 4) * f(2 * n - 2 * p - 1) + f(2 * p + 2) * f(2 * n - 2 * p - 2),
        Family::O5 => f(2 * n + 2),
    })
}

/// One k-bit record-setter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormEntry {
    /// `None` for entries taken from the table (k < 12).
    pub descriptor: Option<FamilyDescriptor>,
    pub index: BigUint,
    pub bits: GenString,
    pub stern_value: BigUint,
}

/// The k-bit record-setters in increasing order: table data below 12 bits,
/// instantiated families from 12 on. Stern values come from matrix
/// products over the binary form, so large `k` needs no scan.
pub fn generate_kbit(k: u32) -> Vec<ClosedFormEntry> {
    if k < FAMILY_MIN_BITS {
        return table_row(k)
            .unwrap_or_default()
            .iter()
            .map(|s| {
                let bits: GenString = s.parse().expect("table strings are binary");
                let index = bits.value();
                ClosedFormEntry {
                    descriptor: None,
                    stern_value: stern_a_big(&index).into_inner(),
                    index,
                    bits,
                }
            })
            .collect();
    }
    let mut entries = generate_in_family_order(k);
    entries.sort_by(|x, y| x.index.cmp(&y.index));
    entries
}

/// Family members for `k >= 12` in listing order, unsorted.
pub fn generate_in_family_order(k: u32) -> Vec<ClosedFormEntry> {
    let (n, _) = half_length(k);
    descriptors(k)
        .into_iter()
        .map(|d| {
            let bits = d.render(n).expect("descriptors are in range");
            let index = bits.value();
            ClosedFormEntry {
                descriptor: Some(d),
                stern_value: stern_a_matrix(&index),
                index,
                bits,
            }
        })
        .collect()
}

/// Number of k-bit record-setters: `floor(3k/4) - (-1)^k` from 12 bits on.
pub fn count_kbit(k: u32) -> u64 {
    if k < FAMILY_MIN_BITS {
        return table_row(k).map_or(0, |row| row.len() as u64);
    }
    let base = u64::from(3 * k / 4);
    if k.is_multiple_of(2) {
        base - 1
    } else {
        base + 1
    }
}

/// The descriptor whose rendering is `bits`, if any.
pub fn family_of(bits: &GenString) -> Option<FamilyDescriptor> {
    let k = bits.len() as u32;
    let (n, _) = half_length(k);
    descriptors(k)
        .into_iter()
        .find(|d| d.render(n).as_ref() == Ok(bits))
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CrossValidation {
    pub k: u32,
    pub checked: usize,
    pub discrepancies: Vec<String>,
}

impl CrossValidation {
    pub fn passed(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

/// Compares [`generate_kbit`] against the brute-force scan at bit length `k`
/// and, from 12 bits on, every closed-form index and Stern value against
/// its rendering.
pub fn cross_validate(k: u32) -> Result<CrossValidation> {
    cross_validate_with(k, &Budget::default())
}

pub fn cross_validate_with(k: u32, budget: &Budget) -> Result<CrossValidation> {
    let scanned = records_in_bitlength_with(k, Convention::A, budget)?;
    let generated = generate_kbit(k);
    let mut out = CrossValidation {
        k,
        checked: generated.len().max(scanned.len()),
        discrepancies: Vec::new(),
    };
    if scanned.len() != generated.len() {
        out.discrepancies.push(format!(
            "k = {k}: scan found {} record-setters, closed form gives {}",
            scanned.len(),
            generated.len()
        ));
    }
    if k >= FAMILY_MIN_BITS && generated.len() as u64 != count_kbit(k) {
        out.discrepancies.push(format!(
            "k = {k}: {} entries but the count formula gives {}",
            generated.len(),
            count_kbit(k)
        ));
    }
    for (i, (s, g)) in scanned.iter().zip(&generated).enumerate() {
        if BigUint::from(s.index) != g.index || s.value.as_biguint() != &g.stern_value {
            out.discrepancies.push(format!(
                "k = {k}, #{i}: scan ({}, {}) vs closed form ({}, {})",
                s.index, s.value, g.index, g.stern_value
            ));
        }
    }
    let (n, _) = half_length(k);
    for g in generated.iter().filter(|g| g.descriptor.is_some()) {
        let d = g.descriptor.expect("filtered");
        let index = closed_form_index(&d, n)?;
        let value = closed_form_stern_value(&d, n)?;
        if index != g.index {
            out.discrepancies
                .push(format!("{d}: closed-form index {index} vs bits {}", g.bits));
        }
        if value != g.stern_value || stern_a_big(&g.index).as_biguint() != &value {
            out.discrepancies.push(format!(
                "{d}: closed-form value {value} vs a({}) = {}",
                g.index, g.stern_value
            ));
        }
    }
    Ok(out)
}
