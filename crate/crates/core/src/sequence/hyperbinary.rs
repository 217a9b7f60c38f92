//! Hyperbinary representations: base-2 expansions using each power of two at
//! most twice. Their number for `n` is `s(n)`.

use std::fmt;

use super::SternValue;
use crate::calculus::GenString;

/// One representation, written at the width of the canonical binary form
/// (so a broken leading bit shows up as a leading 0).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HyperbinaryRepr(GenString);

impl HyperbinaryRepr {
    pub fn digits(&self) -> &GenString {
        &self.0
    }

    pub fn value_u64(&self) -> Option<u64> {
        self.0.value_u64()
    }
}

impl fmt::Display for HyperbinaryRepr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    pub reprs: Vec<HyperbinaryRepr>,
    /// Set when `cap` stopped the enumeration early.
    pub truncated: bool,
}

/// All hyperbinary representations of `n`, reached from the binary form of
/// `n` by breaking bits (`10 -> 02`), each position at most once.
///
/// Positions are decided left to right, "keep" before "break", so the
/// canonical binary form comes first. Every representation corresponds to
/// exactly one set of broken positions, so the output has no duplicates.
/// `0` has the single empty representation.
pub fn hyperbinary_enumerate(n: u64, cap: Option<usize>) -> Enumeration {
    let cap = cap.unwrap_or(usize::MAX);
    if n == 0 {
        return Enumeration {
            reprs: if cap == 0 {
                Vec::new()
            } else {
                vec![HyperbinaryRepr(GenString::empty())]
            },
            truncated: cap == 0,
        };
    }
    let mut search = Search {
        digits: GenString::binary_of(n).digits().to_vec(),
        out: Vec::new(),
        cap,
        truncated: false,
    };
    search.visit(0);
    Enumeration {
        reprs: search.out,
        truncated: search.truncated,
    }
}

struct Search {
    digits: Vec<u8>,
    out: Vec<HyperbinaryRepr>,
    cap: usize,
    truncated: bool,
}

impl Search {
    fn visit(&mut self, pos: usize) {
        if self.truncated {
            return;
        }
        let d = self.digits[pos];
        if pos + 1 == self.digits.len() {
            // 2^0 cannot be broken.
            if d <= 2 {
                if self.out.len() == self.cap {
                    self.truncated = true;
                    return;
                }
                self.out
                    .push(HyperbinaryRepr(GenString::from_digits_unchecked(
                        self.digits.clone(),
                    )));
            }
            return;
        }
        if d <= 2 {
            self.visit(pos + 1);
        }
        // Breaking leaves d - 1 here; a 3 has to break, a 4 never occurs.
        if (1..=3).contains(&d) {
            self.digits[pos] -= 1;
            self.digits[pos + 1] += 2;
            self.visit(pos + 1);
            self.digits[pos + 1] -= 2;
            self.digits[pos] += 1;
        }
    }
}

/// Number of hyperbinary representations of `n`, by a carry DP over the
/// binary digits of `n` from the least significant end.
///
/// With digits `d_i` in `{0, 1, 2}` summing to `n`, the partial sum of the
/// lowest `i` digits is `(n mod 2^i) + c_i 2^i` with carry `c_i` in `{0, 1}`,
/// and consecutive carries obey `c_i + d_i = b_i + 2 c_(i+1)`. The count is
/// the number of digit choices taking carry 0 to carry 0.
pub fn hyperbinary_count_dp(n: u64) -> SternValue {
    let bits = 64 - n.leading_zeros();
    // ways[c] = number of digit prefixes ending in carry c
    let mut ways = [1u64, 0u64];
    for i in 0..bits {
        let b = ((n >> i) & 1) as i32;
        let mut next = [0u64, 0u64];
        for (c, &w) in ways.iter().enumerate() {
            if w == 0 {
                continue;
            }
            for d in 0..=2i32 {
                let t = c as i32 + d - b;
                if t >= 0 && t % 2 == 0 {
                    next[(t / 2) as usize] += w;
                }
            }
        }
        ways = next;
    }
    SternValue::from(ways[0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::stern_s;
    use std::collections::HashSet;

    fn strings(n: u64) -> Vec<String> {
        hyperbinary_enumerate(n, None)
            .reprs
            .iter()
            .map(|r| r.to_string())
            .collect()
    }

    #[test]
    fn forty_three() {
        let got: HashSet<String> = strings(43).into_iter().collect();
        let want: HashSet<String> = ["101011", "012211", "020211", "021011", "100211"]
            .into_iter()
            .map(String::from)
            .collect();
        assert_eq!(got, want);
        assert_eq!(strings(43)[0], "101011");
    }

    #[test]
    fn zero_and_four() {
        let zero = hyperbinary_enumerate(0, None);
        assert_eq!(zero.reprs.len(), 1);
        assert!(zero.reprs[0].digits().is_empty());
        let four: HashSet<String> = strings(4).into_iter().collect();
        assert_eq!(four.len(), 3);
        assert!(four.contains("100") && four.contains("020") && four.contains("012"));
    }

    #[test]
    fn cap_truncates() {
        let e = hyperbinary_enumerate(43, Some(2));
        assert_eq!(e.reprs.len(), 2);
        assert!(e.truncated);
        let e = hyperbinary_enumerate(43, Some(5));
        assert_eq!(e.reprs.len(), 5);
        assert!(!e.truncated);
    }

    #[test]
    fn dp_examples() {
        assert_eq!(hyperbinary_count_dp(43), 5);
        assert_eq!(hyperbinary_count_dp(0), 1);
        assert_eq!(hyperbinary_count_dp((1 << 16) - 1), stern_s((1 << 16) - 1));
    }

    #[test]
    fn enumeration_is_sound_for_small_n() {
        for n in 0..=1024u64 {
            let reprs = hyperbinary_enumerate(n, None).reprs;
            let distinct: HashSet<_> = reprs.iter().collect();
            assert_eq!(distinct.len(), reprs.len(), "n = {n}");
            assert_eq!(reprs.len() as u64, stern_s(n).to_u64().unwrap(), "n = {n}");
            for r in &reprs {
                assert!(r.digits().digits().iter().all(|&d| d <= 2));
                assert_eq!(r.value_u64(), Some(n));
            }
        }
    }
}
