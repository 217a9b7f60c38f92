//! Memory ceiling for materialized rows and scans.

use crate::error::{Error, Result};

/// Default ceiling: scans cover indices below `2^24`.
pub const DEFAULT_MAX_BITS: u32 = 24;

/// Largest bit length whose indices fit in a `u64`.
pub const MAX_ROW_BITS: u32 = 63;

/// Environment variable the CLI reads to override the ceiling.
pub const MAX_BITS_ENV: &str = "STERN_MAX_BITS";

/// Upper bound on the bit length of any row that gets materialized.
///
/// A row of `k` bits holds `2^(k-1)` cells; a scan to `k` bits keeps the
/// current and previous rows alive, so the default of 24 stays under 64 MiB
/// with 32-bit cells.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    max_bits: u32,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_bits: DEFAULT_MAX_BITS,
        }
    }
}

impl Budget {
    pub fn new(max_bits: u32) -> Self {
        Budget {
            max_bits: max_bits.min(MAX_ROW_BITS),
        }
    }

    pub fn max_bits(&self) -> u32 {
        self.max_bits
    }

    pub fn check(&self, bits: u32) -> Result<()> {
        if bits == 0 {
            return Err(Error::InvalidBitLength(0));
        }
        if bits > self.max_bits {
            return Err(Error::BudgetExceeded {
                bits,
                limit_bits: self.max_bits,
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_admits_24_bits() {
        let b = Budget::default();
        assert!(b.check(24).is_ok());
        assert_eq!(
            b.check(25),
            Err(Error::BudgetExceeded {
                bits: 25,
                limit_bits: 24
            })
        );
        assert_eq!(b.check(0), Err(Error::InvalidBitLength(0)));
    }

    #[test]
    fn ceiling_is_clamped() {
        assert_eq!(Budget::new(1000).max_bits(), MAX_ROW_BITS);
    }
}
