//! Verification suites, each returning a report of what was checked and
//! what disagreed.

use std::ops::RangeInclusive;

use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::budget::Budget;
use crate::calculus::{g_split, g_value, mu_of, GenString, Mat2};
use crate::classifier::{cross_validate_with, table_row};
use crate::error::Result;
use crate::fibonacci::fib;
use crate::search::{
    audit_substring_properties_with, records_in_bitlength_with, records_scan_with,
    verify_extremal_lemmas, Convention,
};
use crate::sequence::{hyperbinary_count_dp, hyperbinary_enumerate, stern_a, stern_s};

pub const TABLE_1: [u64; 16] = [0, 1, 1, 2, 1, 3, 2, 3, 1, 4, 3, 5, 2, 5, 3, 4];

pub const TABLE_2_INDICES: [u64; 18] = [
    0, 1, 3, 5, 9, 11, 19, 21, 35, 37, 43, 69, 73, 75, 83, 85, 139, 147,
];

pub const TABLE_2_VALUES: [u64; 18] = [
    0, 1, 2, 3, 4, 5, 7, 8, 9, 11, 13, 14, 15, 18, 19, 21, 23, 26,
];

/// Seed for the sampled identity checks.
pub const DEFAULT_SEED: u64 = 0x5733_726E;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checked: u64,
    pub discrepancies: Vec<String>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        SuiteReport {
            name,
            ..SuiteReport::default()
        }
    }

    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.discrepancies.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

/// The three small tables: first values, first records, and the k-bit
/// records for `k` in `range` below 12.
pub fn tables(range: RangeInclusive<u32>, budget: &Budget) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("tables");
    for (n, &v) in TABLE_1.iter().enumerate() {
        r.expect(stern_a(n as u64) == v, || format!("a({n}) != {v}"));
    }
    let records = records_scan_with(8, Convention::A, budget)?;
    let got: Vec<(u64, u64)> = records
        .iter()
        .take(TABLE_2_INDICES.len())
        .map(|x| (x.index, x.value.to_u64().unwrap_or(u64::MAX)))
        .collect();
    let want: Vec<(u64, u64)> = TABLE_2_INDICES.into_iter().zip(TABLE_2_VALUES).collect();
    r.expect(got == want, || format!("first records {got:?}"));
    for k in range.filter(|&k| (1..12).contains(&k)) {
        let row: Vec<String> = table_row(k)
            .unwrap_or_default()
            .iter()
            .map(|s| s.to_string())
            .collect();
        let scanned: Vec<String> = records_in_bitlength_with(k, Convention::A, budget)?
            .iter()
            .map(|x| x.bits().to_string())
            .collect();
        r.expect(row == scanned, || {
            format!("k = {k}: table {row:?} vs scan {scanned:?}")
        });
    }
    Ok(r)
}

fn random_binary(rng: &mut StdRng, len: usize) -> GenString {
    let digits = (0..len).map(|_| rng.gen_range(0..=1u8)).collect();
    GenString::new(digits).expect("binary digits")
}

/// Matrix homomorphism, split identity and `G = s` on `samples` random
/// strings, the Fibonacci values of `(10)^i` and friends, and Carlitz's
/// count for small `n`.
pub fn identities(samples: usize, seed: u64) -> SuiteReport {
    let mut r = SuiteReport::new("identities");
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..samples {
        let total = rng.gen_range(0..=24usize);
        let cut = rng.gen_range(0..=total);
        let x = random_binary(&mut rng, cut);
        let y = random_binary(&mut rng, total - cut);
        let xy = x.concat(&y);
        let (mx, my, mxy) = (mu_of(&x).unwrap(), mu_of(&y).unwrap(), mu_of(&xy).unwrap());
        r.expect(&mx * &my == mxy, || format!("mu({x})mu({y}) != mu({xy})"));
        let split = g_split(&x, &y).unwrap();
        r.expect(split == g_value(&xy), || {
            format!("split {x}|{y} gives {split}")
        });

        let len = rng.gen_range(1..=20usize);
        let z = random_binary(&mut rng, len);
        let n = z.value_u64().expect("short string");
        r.expect(g_value(&z) == *stern_s(n).as_biguint(), || {
            format!("G({z}) != s({n})")
        });
    }
    for i in 1..=40usize {
        let i64_ = i as u64;
        let t = "10".repeat(i);
        let cases = [
            (t.clone(), 2 * i64_ + 1),
            (format!("{t}0"), 2 * i64_ + 2),
            (format!("1{t}"), 2 * i64_ + 2),
            (format!("1{t}0"), 2 * i64_ + 3),
        ];
        for (s, fi) in cases {
            let x: GenString = s.parse().unwrap();
            r.expect(g_value(&x) == fib(fi), || format!("G({s}) != F({fi})"));
        }
        let want = Mat2::new([
            [fib(2 * i64_ + 1), fib(2 * i64_)],
            [fib(2 * i64_), fib(2 * i64_ - 1)],
        ]);
        let got = mu_of(&t.parse().unwrap()).unwrap();
        r.expect(got == want, || format!("mu((10)^{i}) = {got}"));
    }
    for n in 0..(1u64 << 12) {
        let count = hyperbinary_count_dp(n);
        let s = stern_s(n);
        r.expect(count == s, || {
            format!("dp count of {n} is {count}, s = {s}")
        });
        let listed = hyperbinary_enumerate(n, None).reprs.len() as u64;
        r.expect(s == listed, || {
            format!("{listed} representations of {n}, s = {s}")
        });
    }
    r
}

pub fn substrings(k_max: u32, budget: &Budget) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("substrings");
    let report = audit_substring_properties_with(k_max, budget)?;
    r.checked = report.checked_count;
    r.discrepancies = report.violations.iter().map(|v| v.to_string()).collect();
    r.notes = report.informational.iter().map(|v| v.to_string()).collect();
    Ok(r)
}

pub fn extremal(n_max: u32) -> SuiteReport {
    let mut r = SuiteReport::new("extremal");
    let report = verify_extremal_lemmas(n_max);
    r.checked = report.checked_count;
    r.discrepancies = report.violations.iter().map(|v| v.to_string()).collect();
    r
}

pub fn crossval(range: RangeInclusive<u32>, budget: &Budget) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("crossval");
    for k in range {
        let cv = cross_validate_with(k, budget)?;
        r.checked += cv.checked as u64;
        r.discrepancies.extend(cv.discrepancies);
    }
    Ok(r)
}

/// Compares `(n, value)` pairs, e.g. from a local b-file, against `a(n)`.
pub fn against_pairs(pairs: &[(BigUint, BigUint)]) -> SuiteReport {
    let mut r = SuiteReport::new("bfile");
    for (n, v) in pairs {
        let a = crate::sequence::stern_a_big(n);
        r.expect(a.as_biguint() == v, || {
            format!("a({n}) = {a}, file says {v}")
        });
    }
    r
}
