//! Stern's diatomic sequence and its record-setters.
//!
//! The crate is split along the lines of the computation:
//!
//! - [`sequence`]: the sequence itself (recurrence, bit-length rows,
//!   hyperbinary oracles).
//! - [`calculus`]: digit strings, the `G` function, the prime transforms and
//!   the 2x2 matrix representation `mu`.
//! - [`search`]: brute-force running-maximum scans plus audits of the
//!   structural properties record-setters are known to satisfy.
//! - [`classifier`]: closed-form k-bit record-setter families, their indices
//!   and Stern values via Fibonacci/Lucas products.
//! - [`checks`]: the verification suites driven by the `stern verify` CLI.

pub mod bfile;
pub mod budget;
pub mod calculus;
pub mod checks;
pub mod classifier;
pub mod error;
pub mod fibonacci;
pub mod search;
pub mod sequence;

pub use budget::Budget;
pub use calculus::{
    cmp, delta, double_prime, g_split, g_value, mu_of, prime, Comparator, GenString,
    GenStringOrZero, Mat2,
};
pub use classifier::{
    closed_form_index, closed_form_stern_value, count_kbit, cross_validate, generate_kbit,
    ClosedFormEntry, Family, FamilyDescriptor,
};
pub use error::{Error, Result};
pub use fibonacci::{fib, lucas};
pub use search::{
    audit_substring_properties, records_in_bitlength, records_scan, verify_extremal_lemmas,
    AuditReport, Convention, RecordSetter,
};
pub use sequence::{
    hyperbinary_count_dp, hyperbinary_enumerate, stern_a, stern_row, stern_s, SternRow, SternValue,
};
