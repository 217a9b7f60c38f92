//! Exhaustive checks of the extremal `G`-value facts over strings built from
//! `10` and `100` blocks.

use num_bigint::BigUint;

use super::audit::{AuditReport, Property, Violation};
use crate::calculus::{g_value, GenString};
use crate::fibonacci::fib;

/// Every concatenation of `10` and `100` blocks of total length `len` that
/// uses exactly `hundreds` copies of `100`.
pub fn block_strings(len: usize, hundreds: usize) -> Vec<GenString> {
    fn go(len: usize, hundreds: usize, prefix: &mut Vec<u8>, out: &mut Vec<GenString>) {
        if len == 0 {
            if hundreds == 0 {
                out.push(GenString::from_digits_unchecked(prefix.clone()));
            }
            return;
        }
        if len >= 2 {
            prefix.extend_from_slice(&[1, 0]);
            go(len - 2, hundreds, prefix, out);
            prefix.truncate(prefix.len() - 2);
        }
        if len >= 3 && hundreds > 0 {
            prefix.extend_from_slice(&[1, 0, 0]);
            go(len - 3, hundreds - 1, prefix, out);
            prefix.truncate(prefix.len() - 3);
        }
    }
    let mut out = Vec::new();
    go(len, hundreds, &mut Vec::with_capacity(len), &mut out);
    out
}

fn tens(i: usize) -> String {
    "10".repeat(i)
}

fn gs(s: &str) -> GenString {
    s.parse().expect("well-formed block string")
}

struct Checker {
    report: AuditReport,
}

impl Checker {
    fn fail(&mut self, subject: String, property: Property, detail: String) {
        self.report.violations.push(Violation {
            subject,
            index: None,
            property,
            detail,
        });
    }

    /// The two-100 maximum at length `len`: `target` attains it and the
    /// maximum equals `expected`.
    fn two_hundreds(&mut self, len: usize, target: &str, expected: BigUint) {
        let family = block_strings(len, 2);
        self.report.checked_count += family.len() as u64;
        let max = family.iter().map(g_value).max().unwrap_or_default();
        let target_value = g_value(&gs(target));
        if max != expected || target_value != max || !family.contains(&gs(target)) {
            self.fail(
                format!("length {len}"),
                Property::TwoHundredMaximum,
                format!("max {max}, G({target}) = {target_value}, formula {expected}"),
            );
        }
    }
}

/// Runs the extremal-value checks for parameters `1 ..= n_max`:
///
/// 1. among `10`/`100` strings with two `100`s, the maximum at length `4n`
///    is `F(4n) + F(2n)^2`, attained by `(10)^n 0 (10)^(n-1) 0`, and at
///    length `4n + 2` it is `F(4n+2) + F(2n) F(2n+2)`, attained by
///    `(10)^n 0 (10)^n 0`;
/// 2. the single-`100` minimum at length `2n + 1` is `F(2n+1) + F(2n-1)`,
///    first reached at `100 (10)^(n-1)`;
/// 3. at each odd length every string with three `100`s has a smaller `G`
///    than every string with one;
/// 4. `F(2i+1) F(2n-2i)` strictly decreases for `0 <= i < n` and
///    `F(2i) F(2n-2i)` strictly increases for `0 <= i <= n/2`.
///
/// Checks 2-4 run to twice the parameter range so they cover every Fibonacci
/// index the first check touches.
pub fn verify_extremal_lemmas(n_max: u32) -> AuditReport {
    let n_max = n_max as usize;
    let mut c = Checker {
        report: AuditReport {
            k_range: 1..=n_max as u32,
            violations: Vec::new(),
            informational: Vec::new(),
            checked_count: 0,
        },
    };

    for n in 1..=n_max {
        let n64 = n as u64;
        if n >= 2 {
            let target = format!("{}0{}0", tens(n), tens(n - 1));
            let expected = fib(4 * n64) + fib(2 * n64) * fib(2 * n64);
            c.two_hundreds(4 * n, &target, expected);
        }
        let target = format!("{}0{}0", tens(n), tens(n));
        let expected = fib(4 * n64 + 2) + fib(2 * n64) * fib(2 * n64 + 2);
        c.two_hundreds(4 * n + 2, &target, expected);
    }

    for n in 1..=2 * n_max {
        let n64 = n as u64;
        let expected = fib(2 * n64 + 1) + fib(2 * n64 - 1);
        let mut min: Option<(BigUint, usize)> = None;
        for i in 1..=n {
            let x = gs(&format!("{}0{}", tens(i), tens(n - i)));
            let g = g_value(&x);
            c.report.checked_count += 1;
            let i64_ = i as u64;
            let closed = fib(2 * n64 + 1) + fib(2 * i64_) * fib(2 * n64 - 2 * i64_ + 1);
            if g != closed {
                c.fail(
                    x.to_string(),
                    Property::SingleHundredMinimum,
                    format!("G = {g}, expected F(2n+1) + F(2i)F(2n-2i+1) = {closed}"),
                );
            }
            if min.as_ref().is_none_or(|(m, _)| g < *m) {
                min = Some((g, i));
            }
        }
        let block_count = block_strings(2 * n + 1, 1).len();
        match min {
            Some((m, 1)) if m == expected && block_count == n => {}
            other => c.fail(
                format!("length {}", 2 * n + 1),
                Property::SingleHundredMinimum,
                format!("minimum {other:?}, expected {expected} at i = 1"),
            ),
        }
    }

    for m in 4..=2 * n_max {
        let len = 2 * m + 1;
        let three = block_strings(len, 3);
        let one = block_strings(len, 1);
        c.report.checked_count += (three.len() + one.len()) as u64;
        let max3 = three.iter().map(g_value).max();
        let min1 = one.iter().map(g_value).min();
        if let (Some(max3), Some(min1)) = (max3, min1) {
            if max3 >= min1 {
                c.fail(
                    format!("length {len}"),
                    Property::OddDeltaSeparation,
                    format!("max G with three 100s {max3} >= min G with one {min1}"),
                );
            }
        }
    }

    for n in 1..=4 * n_max as u64 {
        let odd: Vec<BigUint> = (0..n)
            .map(|i| fib(2 * i + 1) * fib(2 * n - 2 * i))
            .collect();
        let even: Vec<BigUint> = (0..=n / 2)
            .map(|i| fib(2 * i) * fib(2 * n - 2 * i))
            .collect();
        c.report.checked_count += (odd.len() + even.len()) as u64;
        if !odd.windows(2).all(|w| w[0] > w[1]) {
            c.fail(
                format!("n = {n}"),
                Property::OddFibProductsDecreasing,
                format!("{odd:?}"),
            );
        }
        if !even.windows(2).all(|w| w[0] < w[1]) {
            c.fail(
                format!("n = {n}"),
                Property::EvenFibProductsIncreasing,
                format!("{even:?}"),
            );
        }
    }

    c.report
}
