//! Acceptance criteria, one PASS/FAIL line each. Exits non-zero if any fail.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::One;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use stern_core::calculus::{double_prime, g_value_or_zero, prime};
use stern_core::classifier::descriptors;
use stern_core::search::Property;
use stern_core::{
    audit_substring_properties, closed_form_index, closed_form_stern_value, g_value, generate_kbit,
    hyperbinary_count_dp, hyperbinary_enumerate, mu_of, records_in_bitlength, records_scan,
    stern_a, stern_s, verify_extremal_lemmas, Convention, GenString, Mat2,
};

const SEED: u64 = 20_240_611;
const SAMPLES: usize = 10_000;
const MIB: u64 = 1 << 20;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

const TABLE_1: [u64; 16] = [0, 1, 1, 2, 1, 3, 2, 3, 1, 4, 3, 5, 2, 5, 3, 4];

const TABLE_2: [(u64, u64); 18] = [
    (0, 0),
    (1, 1),
    (3, 2),
    (5, 3),
    (9, 4),
    (11, 5),
    (19, 7),
    (21, 8),
    (35, 9),
    (37, 11),
    (43, 13),
    (69, 14),
    (73, 15),
    (75, 18),
    (83, 19),
    (85, 21),
    (139, 23),
    (147, 26),
];

const TABLE_3: &[(u32, &[(&str, u64)])] = &[
    (1, &[("1", 1)]),
    (2, &[("11", 3)]),
    (3, &[("101", 5)]),
    (4, &[("1001", 9), ("1011", 11)]),
    (5, &[("10011", 19), ("10101", 21)]),
    (6, &[("100011", 35), ("100101", 37), ("101011", 43)]),
    (
        7,
        &[
            ("1000101", 69),
            ("1001001", 73),
            ("1001011", 75),
            ("1010011", 83),
            ("1010101", 85),
        ],
    ),
    (
        8,
        &[
            ("10001011", 139),
            ("10010011", 147),
            ("10010101", 149),
            ("10100101", 165),
            ("10101011", 171),
        ],
    ),
    (
        9,
        &[
            ("100010101", 277),
            ("100100101", 293),
            ("100101011", 299),
            ("101001011", 331),
            ("101010011", 339),
            ("101010101", 341),
        ],
    ),
    (
        10,
        &[
            ("1000101011", 555),
            ("1001001011", 587),
            ("1001010011", 595),
            ("1001010101", 597),
            ("1010010101", 661),
            ("1010101011", 683),
        ],
    ),
    (
        11,
        &[
            ("10001010101", 1109),
            ("10010010101", 1173),
            ("10010100101", 1189),
            ("10010101011", 1195),
            ("10100101011", 1323),
            ("10101001011", 1355),
            ("10101010011", 1363),
            ("10101010101", 1365),
        ],
    ),
];

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn fib(n: u64) -> BigUint {
    let (mut a, mut b) = (BigUint::from(0u32), BigUint::one());
    for _ in 0..n {
        let c = &a + &b;
        a = b;
        b = c;
    }
    a
}

/// Peak resident set size of this process, when the platform reports it.
fn peak_rss_bytes() -> Option<u64> {
    let status = std::fs::read_to_string("/proc/self/status").ok()?;
    let line = status.lines().find(|l| l.starts_with("VmHWM:"))?;
    let kb: u64 = line.split_whitespace().nth(1)?.parse().ok()?;
    Some(kb * 1024)
}

fn naive_s(len: usize) -> Vec<u64> {
    let mut a = vec![0u64, 1];
    for n in 2..=len {
        a.push(if n % 2 == 0 {
            a[n / 2]
        } else {
            a[n / 2] + a[n / 2 + 1]
        });
    }
    a.remove(0);
    a.truncate(len);
    a
}

fn random_binary(rng: &mut StdRng, len: usize) -> GenString {
    GenString::new((0..len).map(|_| rng.gen_range(0..=1u8)).collect()).unwrap()
}

fn table_1() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_stern"))
        .args(["table", "1"])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || "table 1 failed".into())?;
    let text = String::from_utf8_lossy(&out.stdout);
    let row: Vec<u64> = text
        .lines()
        .find(|l| l.starts_with("a(n)"))
        .ok_or("no a(n) row")?
        .split_whitespace()
        .skip(1)
        .map(|v| v.parse().map_err(|_| format!("bad cell {v:?}")))
        .collect::<Result<_, _>>()?;
    ensure(row == TABLE_1, || format!("a(n) row is {row:?}"))?;
    Ok("a(0..15) exact".into())
}

fn table_2() -> Outcome {
    let got: Vec<(u64, u64)> = records_scan(8, Convention::A)
        .map_err(|e| e.to_string())?
        .iter()
        .map(|r| (r.index, r.value.to_u64().unwrap()))
        .collect();
    ensure(
        got.len() >= TABLE_2.len() && got[..TABLE_2.len()] == TABLE_2,
        || format!("scan gives {got:?}"),
    )?;
    // The rest of the scan below 2^8 is the tail of the 8-bit row.
    let eight: Vec<(u64, u64)> = TABLE_3[7]
        .1
        .iter()
        .map(|&(_, v)| (v, stern_a(v).to_u64().unwrap()))
        .collect();
    ensure(got[TABLE_2.len()..] == eight[2..], || {
        format!("tail {:?}", &got[TABLE_2.len()..])
    })?;
    Ok(format!("18 pairs exact, {} records below 2^8", got.len()))
}

fn table_3() -> Outcome {
    for &(k, row) in TABLE_3 {
        let got: Vec<(String, u64)> = records_in_bitlength(k, Convention::A)
            .map_err(|e| e.to_string())?
            .iter()
            .map(|r| (r.bits().to_string(), r.index))
            .collect();
        let want: Vec<(String, u64)> = row.iter().map(|&(s, v)| (s.to_string(), v)).collect();
        ensure(got == want, || format!("k = {k}: {got:?}"))?;
    }
    Ok("k = 1..11 exact".into())
}

fn classification() -> Outcome {
    let mut total = 0;
    for k in 12..=24u32 {
        let scanned = records_in_bitlength(k, Convention::A).map_err(|e| e.to_string())?;
        let generated = generate_kbit(k);
        let count = (3 * k / 4) as i64 - if k % 2 == 0 { 1 } else { -1 };
        ensure(generated.len() as i64 == count, || {
            format!("k = {k}: {} entries, formula {count}", generated.len())
        })?;
        ensure(scanned.len() == generated.len(), || {
            format!("k = {k}: scan has {}", scanned.len())
        })?;
        for (s, g) in scanned.iter().zip(&generated) {
            ensure(
                BigUint::from(s.index) == g.index
                    && s.value.as_biguint() == &g.stern_value
                    && s.bits() == g.bits,
                || format!("k = {k}: scan {} vs generated {}", s.index, g.index),
            )?;
        }
        total += generated.len();
    }
    let rss = peak_rss_bytes();
    if let Some(bytes) = rss {
        ensure(bytes <= 256 * MIB, || {
            format!("peak RSS {} MiB", bytes / MIB)
        })?;
    }
    let rss = rss.map_or("peak RSS n/a".into(), |b| {
        format!("peak RSS {} MiB", b / MIB)
    });
    Ok(format!("{total} record-setters, k = 12..24, {rss}"))
}

fn carlitz() -> Outcome {
    let s = naive_s(1 << 16);
    for n in 0..(1u64 << 16) {
        let want = s[n as usize];
        ensure(stern_s(n) == want, || format!("s({n})"))?;
        ensure(hyperbinary_count_dp(n) == want, || {
            format!("dp count at {n}")
        })?;
        if n <= 4096 {
            let e = hyperbinary_enumerate(n, None);
            ensure(!e.truncated && e.reprs.len() as u64 == want, || {
                format!("enumeration at {n}")
            })?;
        }
    }
    Ok("dp n < 2^16, enumeration n <= 4096".into())
}

fn matrix_calculus() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED);
    for _ in 0..SAMPLES {
        let total = rng.gen_range(0..=24usize);
        let cut = rng.gen_range(0..=total);
        let x = random_binary(&mut rng, cut);
        let y = random_binary(&mut rng, total - cut);
        let xy = x.concat(&y);
        let (mx, my, mxy) = (mu_of(&x).unwrap(), mu_of(&y).unwrap(), mu_of(&xy).unwrap());
        ensure(&mx * &my == mxy, || format!("mu({x}) mu({y})"))?;
        let split = g_value(&x) * g_value(&y)
            + g_value_or_zero(&double_prime(&x)) * g_value_or_zero(&prime(&y));
        ensure(g_value(&xy) == split, || format!("split {x} | {y}"))?;
    }
    for _ in 0..SAMPLES {
        let len = rng.gen_range(1..=24usize);
        let x = random_binary(&mut rng, len);
        let n = x.value_u64().unwrap();
        ensure(g_value(&x) == stern_s(n).into_inner(), || format!("G({x})"))?;
    }
    Ok(format!("{SAMPLES} pairs, {SAMPLES} singles, seed {SEED}"))
}

fn fibonacci_identities() -> Outcome {
    for i in 1..=40u64 {
        let t = "10".repeat(i as usize);
        for (s, f) in [
            (t.clone(), 2 * i + 1),
            (format!("{t}0"), 2 * i + 2),
            (format!("1{t}"), 2 * i + 2),
            (format!("1{t}0"), 2 * i + 3),
        ] {
            let x: GenString = s.parse().unwrap();
            ensure(g_value(&x) == fib(f), || format!("G({s}) != F({f})"))?;
        }
        let want = Mat2::new([[fib(2 * i + 1), fib(2 * i)], [fib(2 * i), fib(2 * i - 1)]]);
        ensure(mu_of(&t.parse().unwrap()).unwrap() == want, || {
            format!("mu((10)^{i})")
        })?;
    }
    Ok("i = 1..40".into())
}

fn closed_forms() -> Outcome {
    let mut checked = 0;
    for k in 12..=40u32 {
        let n = k / 2;
        for d in descriptors(k) {
            let bits = d.render(n).map_err(|e| e.to_string())?;
            let index = closed_form_index(&d, n).map_err(|e| e.to_string())?;
            let value = closed_form_stern_value(&d, n).map_err(|e| e.to_string())?;
            ensure(index == bits.value(), || {
                format!("{d}, k = {k}: index {index} vs {bits}")
            })?;
            let oracle = if k <= 24 {
                stern_a(u64::try_from(&index).unwrap()).into_inner()
            } else {
                g_value(&GenString::binary_of_big(&(&index - 1u32)))
            };
            ensure(value == oracle, || {
                format!("{d}, k = {k}: value {value} vs {oracle}")
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} closed forms, k = 12..40"))
}

fn substring_audit() -> Outcome {
    let report = audit_substring_properties(24).map_err(|e| e.to_string())?;
    ensure(report.violations.is_empty(), || {
        format!("{:?}", report.violations)
    })?;
    ensure(
        report
            .informational
            .iter()
            .any(|v| v.property == Property::AllowedException && v.subject == "1001000"),
        || "1001000 not reported".into(),
    )?;
    // independent string check over the same records
    let s_records = records_scan(24, Convention::S).map_err(|e| e.to_string())?;
    let mut audited = 0;
    for r in s_records
        .iter()
        .filter(|r| (12..=24).contains(&r.bit_length))
    {
        let b = r.bits().to_string();
        let thousand_ok = b.match_indices("1000").all(|(i, _)| i == 0);
        ensure(
            !b.contains("11") && !b.contains("10000") && thousand_ok,
            || b.clone(),
        )?;
        audited += 1;
    }
    let seven: Vec<String> = s_records
        .iter()
        .filter(|r| r.bit_length == 7)
        .map(|r| r.bits().to_string())
        .collect();
    ensure(seven.iter().any(|b| b == "1001000"), || {
        format!("k = 7 records {seven:?}")
    })?;
    Ok(format!(
        "{audited} S-records clean, 1001000 reported at k = 7"
    ))
}

fn extremal() -> Outcome {
    let report = verify_extremal_lemmas(8);
    ensure(report.violations.is_empty(), || {
        format!("{:?}", report.violations)
    })?;
    Ok(format!("{} instances", report.checked_count))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("table-1", table_1, Duration::from_secs(1)),
        ("table-2", table_2, Duration::from_secs(1)),
        ("table-3", table_3, Duration::from_secs(1)),
        ("classification", classification, Duration::from_secs(120)),
        ("carlitz", carlitz, Duration::from_secs(30)),
        ("matrix-calculus", matrix_calculus, Duration::from_secs(10)),
        (
            "fibonacci-identities",
            fibonacci_identities,
            Duration::from_secs(10),
        ),
        ("closed-forms", closed_forms, Duration::from_secs(60)),
        ("substring-audit", substring_audit, Duration::from_secs(60)),
        ("extremal", extremal, Duration::from_secs(60)),
    ];
    let mut failed = 0;
    for (i, (name, check, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(_) if elapsed > limit => Err(format!("took {elapsed:.2?}, limit {limit:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({elapsed:.2?})", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} ({elapsed:.2?})", i + 1);
            }
        }
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
