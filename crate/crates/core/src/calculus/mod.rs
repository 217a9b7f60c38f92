//! Digit-string calculus.
//!
//! `G(x)` counts the hyperbinary representations reachable from the digit
//! string `x` by breaking bits (rewriting a unit at position `i` as two units
//! at position `i - 1`, each position at most once). For a binary string,
//! `G(x) = s([x]_2)`.
//!
//! `G` is linearized by the matrix
//!
//! ```text
//! mu(x) = [ G(x)   G(x'')     ]
//!         [ G(x')  G((x')'')  ]
//! ```
//!
//! which is multiplicative over concatenation, so `G(x) = v mu(x) w` with
//! `v = (1, 0)` and `w = (1, 0)^T`.

mod matrix;
mod string;

pub use matrix::Mat2;
pub use string::{GenString, GenStringOrZero};

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::Result;

/// The three matrix dominance tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Comparator {
    /// `mu(t) >= mu(y)` entrywise.
    Infix,
    /// `mu(t) w >= mu(y) w` entrywise.
    Suffix,
    /// `v mu(t) >= v mu(y)` entrywise.
    Prefix,
}

/// Product of per-digit matrices in string order. Only `{0, 1}` is admitted.
pub fn mu_of(x: &GenString) -> Result<Mat2> {
    x.require_binary()?;
    Ok(transfer_product(x))
}

/// Per-digit matrix product for any digit string, including 2s and 3s.
fn transfer_product(x: &GenString) -> Mat2 {
    x.digits()
        .iter()
        .fold(Mat2::identity(), |acc, &d| &acc * &Mat2::digit(d))
}

/// `G(x)`.
///
/// Binary strings go straight through `mu`. A leading 2 or 3 in front of a
/// binary tail is removed by the leading-digit rewrites (`2h -> 1h`,
/// `3 1^i 0 h -> 1h`, `3 1^i -> 0`); strings with 2s or 3s further in are
/// evaluated with the per-digit transfer matrices.
pub fn g_value(x: &GenString) -> BigUint {
    if x.is_binary() {
        return transfer_product(x).entry(0, 0).clone();
    }
    let digits = x.digits();
    let tail_binary = digits[1..].iter().all(|&d| d <= 1);
    if tail_binary {
        return match rewrite_leading(digits[0], &digits[1..]) {
            Some(rest) => g_value(&rest),
            None => BigUint::zero(),
        };
    }
    transfer_product(x).entry(0, 0).clone()
}

/// `G` extended to the annihilator: `G(⊥) = 0`.
pub fn g_value_or_zero(x: &GenStringOrZero) -> BigUint {
    match x {
        GenStringOrZero::Str(s) => g_value(s),
        GenStringOrZero::Zero => BigUint::zero(),
    }
}

/// Rewrites a leading 2 or 3; `None` when the string has no valid breaking.
fn rewrite_leading(lead: u8, rest: &[u8]) -> Option<GenString> {
    match lead {
        0 | 1 => {
            let mut digits = vec![lead];
            digits.extend_from_slice(rest);
            Some(GenString::from_digits_unchecked(digits))
        }
        2 => {
            let mut digits = vec![1];
            digits.extend_from_slice(rest);
            Some(GenString::from_digits_unchecked(digits))
        }
        3 => {
            // The 3 must break; the carry runs through a block of 1s and is
            // absorbed by the first 0, which then leads as a 2 (= a 1).
            let ones = rest.iter().take_while(|&&d| d == 1).count();
            match rest.get(ones) {
                Some(0) => {
                    let mut digits = vec![1];
                    digits.extend_from_slice(&rest[ones + 1..]);
                    Some(GenString::from_digits_unchecked(digits))
                }
                _ => None,
            }
        }
        _ => None,
    }
}

/// `h'`: add 2 to the leftmost digit, then normalize.
///
/// The result is binary, or the string `3` (for `ε' = 3` and
/// `(1^i)' = 3`), whose `G` is 0 but
/// whose double prime `2` still has `G = 1`. `⊥` is returned only when the
/// input already carries a 2 or 3 that would be pushed to 4.
pub fn prime(h: &GenString) -> GenStringOrZero {
    let three = || GenStringOrZero::Str(GenString::from_digits_unchecked(vec![3]));
    let digits = h.digits();
    let Some((&lead, rest)) = digits.split_first() else {
        return three();
    };
    match lead + 2 {
        2 => {
            let mut out = vec![1];
            out.extend_from_slice(rest);
            GenStringOrZero::Str(GenString::from_digits_unchecked(out))
        }
        3 => {
            let ones = rest.iter().take_while(|&&d| d == 1).count();
            match rest.get(ones) {
                None => three(),
                Some(0) => {
                    let mut out = vec![1];
                    out.extend_from_slice(&rest[ones + 1..]);
                    GenStringOrZero::Str(GenString::from_digits_unchecked(out))
                }
                Some(_) => GenStringOrZero::Zero,
            }
        }
        _ => GenStringOrZero::Zero,
    }
}

/// `h''`: strip trailing zeros and decrement the last digit. `⊥` for `0^i`.
pub fn double_prime(h: &GenString) -> GenStringOrZero {
    let digits = h.digits();
    let Some(last) = digits.iter().rposition(|&d| d != 0) else {
        return GenStringOrZero::Zero;
    };
    let mut out = digits[..=last].to_vec();
    out[last] -= 1;
    GenStringOrZero::Str(GenString::from_digits_unchecked(out))
}

/// `h''` lifted to `⊥`.
pub fn double_prime_or_zero(h: &GenStringOrZero) -> GenStringOrZero {
    match h {
        GenStringOrZero::Str(s) => double_prime(s),
        GenStringOrZero::Zero => GenStringOrZero::Zero,
    }
}

/// `G(xy) = G(x) G(y) + G(x'') G(y')`, evaluated from the four parts.
pub fn g_split(x: &GenString, y: &GenString) -> Result<BigUint> {
    x.require_binary()?;
    y.require_binary()?;
    let whole = g_value(x) * g_value(y);
    let carried = g_value_or_zero(&double_prime(x)) * g_value_or_zero(&prime(y));
    Ok(whole + carried)
}

/// Matrix dominance of `t` over `y` under the given comparator.
pub fn cmp(kind: Comparator, t: &GenString, y: &GenString) -> Result<bool> {
    let (mt, my) = (mu_of(t)?, mu_of(y)?);
    Ok(match kind {
        Comparator::Infix => mt.dominates(&my),
        Comparator::Suffix => {
            let (a, b) = (mt.suffix_vector(), my.suffix_vector());
            a[0] >= b[0] && a[1] >= b[1]
        }
        Comparator::Prefix => {
            let (a, b) = (mt.prefix_vector(), my.prefix_vector());
            a[0] >= b[0] && a[1] >= b[1]
        }
    })
}

/// Number of 0s minus number of 1s.
pub fn delta(x: &GenString) -> Result<i64> {
    x.require_binary()?;
    Ok(x.digits()
        .iter()
        .map(|&d| if d == 0 { 1 } else { -1 })
        .sum())
}

/// `s(n) = G([n]_2)` via the matrix product over the binary form of `n`.
pub fn stern_s_matrix(n: &BigUint) -> BigUint {
    g_value(&GenString::binary_of_big(n))
}

/// `a(n)` via the matrix product over the binary form of `n`.
///
/// For `x = [n]_2`, `x''` is the binary form of `n / 2^t - 1` where `t`
/// counts trailing zeros, so the top-right entry `G(x'') = s(n / 2^t - 1) =
/// a(n)`.
pub fn stern_a_matrix(n: &BigUint) -> BigUint {
    transfer_product(&GenString::binary_of_big(n))
        .entry(0, 1)
        .clone()
}
