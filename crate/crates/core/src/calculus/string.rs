use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Digit string over `{0, 1, 2, 3}`, most significant digit first.
///
/// The empty string is `ε`; it displays as `ε` and parses from either `""`
/// or `"ε"`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenString {
    digits: Vec<u8>,
}

impl GenString {
    pub fn empty() -> Self {
        GenString::default()
    }

    pub fn new(digits: Vec<u8>) -> Result<Self> {
        if let Some((position, &digit)) = digits.iter().enumerate().find(|(_, &d)| d > 3) {
            return Err(Error::InvalidDigit { digit, position });
        }
        Ok(GenString { digits })
    }

    pub(crate) fn from_digits_unchecked(digits: Vec<u8>) -> Self {
        debug_assert!(digits.iter().all(|&d| d <= 3));
        GenString { digits }
    }

    /// Canonical binary form of `n`; `0` renders as `"0"`.
    pub fn binary_of(n: u64) -> Self {
        if n == 0 {
            return GenString { digits: vec![0] };
        }
        let bits = 64 - n.leading_zeros();
        let digits = (0..bits).rev().map(|i| ((n >> i) & 1) as u8).collect();
        GenString { digits }
    }

    pub fn binary_of_big(n: &BigUint) -> Self {
        if n.is_zero() {
            return GenString { digits: vec![0] };
        }
        let bits = n.bits();
        let digits = (0..bits).rev().map(|i| n.bit(i) as u8).collect();
        GenString { digits }
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn is_binary(&self) -> bool {
        self.digits.iter().all(|&d| d <= 1)
    }

    pub(crate) fn require_binary(&self) -> Result<()> {
        match self.digits.iter().enumerate().find(|(_, &d)| d > 1) {
            Some((position, &digit)) => Err(Error::InvalidDigit { digit, position }),
            None => Ok(()),
        }
    }

    pub fn concat(&self, other: &GenString) -> GenString {
        let mut digits = Vec::with_capacity(self.len() + other.len());
        digits.extend_from_slice(&self.digits);
        digits.extend_from_slice(&other.digits);
        GenString { digits }
    }

    pub fn repeat(&self, times: usize) -> GenString {
        GenString {
            digits: self.digits.repeat(times),
        }
    }

    /// Integer value under base-2 digit weights (digits 2 and 3 included).
    pub fn value(&self) -> BigUint {
        self.digits
            .iter()
            .fold(BigUint::zero(), |acc, &d| (acc << 1u32) + d)
    }

    pub fn value_u64(&self) -> Option<u64> {
        self.digits.iter().try_fold(0u64, |acc, &d| {
            acc.checked_mul(2).and_then(|v| v.checked_add(u64::from(d)))
        })
    }

    pub fn contains(&self, pattern: &str) -> bool {
        self.find_all(pattern).next().is_some()
    }

    /// Start positions of every (possibly overlapping) occurrence of `pattern`.
    pub fn find_all<'a>(&'a self, pattern: &'a str) -> impl Iterator<Item = usize> + 'a {
        let pat: Vec<u8> = pattern.bytes().map(|b| b - b'0').collect();
        let n = pat.len();
        (0..=self.digits.len().saturating_sub(n)).filter(move |&i| {
            n > 0 && i + n <= self.digits.len() && self.digits[i..i + n] == pat[..]
        })
    }
}

impl FromStr for GenString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "ε" {
            return Ok(GenString::empty());
        }
        let digits = s
            .bytes()
            .filter(|b| *b != b' ' && *b != b'_')
            .map(|b| match b {
                b'0'..=b'3' => Ok(b - b'0'),
                _ => Err(Error::Parse(s.to_string())),
            })
            .collect::<Result<Vec<u8>>>()?;
        Ok(GenString { digits })
    }
}

impl fmt::Display for GenString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.digits.is_empty() {
            return f.write_str("ε");
        }
        for d in &self.digits {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// A digit string, or the annihilator `⊥` whose `G`-value is zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GenStringOrZero {
    Str(GenString),
    Zero,
}

impl GenStringOrZero {
    pub fn as_str(&self) -> Option<&GenString> {
        match self {
            GenStringOrZero::Str(s) => Some(s),
            GenStringOrZero::Zero => None,
        }
    }
}

impl From<GenString> for GenStringOrZero {
    fn from(s: GenString) -> Self {
        GenStringOrZero::Str(s)
    }
}

impl fmt::Display for GenStringOrZero {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenStringOrZero::Str(s) => s.fmt(f),
            GenStringOrZero::Zero => f.write_str("⊥"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let s: GenString = "012211".parse().unwrap();
        assert_eq!(s.to_string(), "012211");
        assert_eq!(s.value(), BigUint::from(43u32));
        assert_eq!("".parse::<GenString>().unwrap(), GenString::empty());
        assert_eq!(GenString::empty().to_string(), "ε");
        assert!("0142".parse::<GenString>().is_err());
        assert_eq!(
            GenString::new(vec![1, 4]),
            Err(Error::InvalidDigit {
                digit: 4,
                position: 1
            })
        );
    }

    #[test]
    fn binary_forms() {
        assert_eq!(GenString::binary_of(0).to_string(), "0");
        assert_eq!(GenString::binary_of(43).to_string(), "101011");
        assert_eq!(
            GenString::binary_of_big(&BigUint::from(2219u32)).to_string(),
            "100010101011"
        );
        assert_eq!(GenString::binary_of(u64::MAX).len(), 64);
        assert_eq!(GenString::binary_of(u64::MAX).value_u64(), Some(u64::MAX));
    }

    #[test]
    fn substring_search() {
        let s: GenString = "1001000".parse().unwrap();
        assert_eq!(s.find_all("1000").collect::<Vec<_>>(), vec![3]);
        assert_eq!(s.find_all("100").collect::<Vec<_>>(), vec![0, 3]);
        assert!(!s.contains("11"));
        assert!(!GenString::empty().contains("1"));
    }
}
