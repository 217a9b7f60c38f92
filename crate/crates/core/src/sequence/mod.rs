//! Stern's diatomic sequence `a(n)` and the shifted sequence `s(n) = a(n+1)`.

mod hyperbinary;
mod row;

pub use hyperbinary::{hyperbinary_count_dp, hyperbinary_enumerate, Enumeration, HyperbinaryRepr};
pub use row::{
    stern_row, stern_row_chunks, stern_row_with, CellWidth, RowCells, SternRow, SternRows,
};

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

/// An exact Stern value.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SternValue(BigUint);

impl SternValue {
    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn into_inner(self) -> BigUint {
        self.0
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }
}

impl From<u64> for SternValue {
    fn from(v: u64) -> Self {
        SternValue(BigUint::from(v))
    }
}

impl From<BigUint> for SternValue {
    fn from(v: BigUint) -> Self {
        SternValue(v)
    }
}

impl PartialEq<u64> for SternValue {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl fmt::Display for SternValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `(a(n), a(n+1))` by walking the bits of `n` from the top.
///
/// Values stay below `F(66)`, well inside `u64`.
pub fn stern_pair_u64(n: u64) -> (u64, u64) {
    let (mut lo, mut hi) = (0u64, 1u64);
    for i in (0..64 - n.leading_zeros()).rev() {
        if (n >> i) & 1 == 0 {
            hi += lo;
        } else {
            lo += hi;
        }
    }
    (lo, hi)
}

pub fn stern_a_u64(n: u64) -> u64 {
    stern_pair_u64(n).0
}

pub fn stern_s_u64(n: u64) -> u64 {
    stern_pair_u64(n).1
}

/// `a(n)` from `a(0) = 0`, `a(1) = 1`, `a(2n) = a(n)`, `a(2n+1) = a(n) + a(n+1)`.
pub fn stern_a(n: u64) -> SternValue {
    SternValue::from(stern_a_u64(n))
}

/// `s(n) = a(n + 1)`.
pub fn stern_s(n: u64) -> SternValue {
    SternValue::from(stern_s_u64(n))
}

fn stern_pair_big(n: &BigUint) -> (BigUint, BigUint) {
    let (mut lo, mut hi) = (BigUint::zero(), BigUint::one());
    for i in (0..n.bits()).rev() {
        if n.bit(i) {
            lo += &hi;
        } else {
            hi += &lo;
        }
    }
    (lo, hi)
}

pub fn stern_a_big(n: &BigUint) -> SternValue {
    SternValue(stern_pair_big(n).0)
}

pub fn stern_s_big(n: &BigUint) -> SternValue {
    SternValue(stern_pair_big(n).1)
}
