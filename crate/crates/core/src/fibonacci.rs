//! Fibonacci and Lucas numbers.

use num_bigint::BigUint;
use num_traits::{One, Zero};

fn two_term(n: u64, first: BigUint, second: BigUint) -> BigUint {
    let (mut x, mut y) = (first, second);
    for _ in 0..n {
        let next = &x + &y;
        x = std::mem::replace(&mut y, next);
    }
    x
}

/// `F(n)` with `F(0) = 0`, `F(1) = 1`.
pub fn fib(n: u64) -> BigUint {
    two_term(n, BigUint::zero(), BigUint::one())
}

/// `L(n)` with `L(0) = 2`, `L(1) = 1`.
pub fn lucas(n: u64) -> BigUint {
    two_term(n, BigUint::from(2u32), BigUint::one())
}

/// `F(n)` for `n <= 93`, the largest index that fits in a `u64`.
pub fn fib_u64(n: u32) -> u64 {
    assert!(n <= 93, "F({n}) overflows u64");
    let (mut x, mut y) = (0u64, 1u64);
    for _ in 0..n {
        let next = x + y;
        x = y;
        y = next;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(fib(0), BigUint::zero());
        assert_eq!(fib(12), BigUint::from(144u32));
        assert_eq!(lucas(0), BigUint::from(2u32));
        assert_eq!(lucas(1), BigUint::one());
        assert_eq!(lucas(10), BigUint::from(123u32));
    }

    #[test]
    fn fib_90() {
        assert_eq!(fib(90), BigUint::from(2880067194370816120u64));
        assert_eq!(fib(90), fib(89) + fib(88));
        assert_eq!(fib_u64(90), 2880067194370816120);
    }

    #[test]
    fn lucas_is_sum_of_neighbouring_fibs() {
        for n in 1..=90 {
            assert_eq!(lucas(n), fib(n - 1) + fib(n + 1), "n = {n}");
        }
    }
}
