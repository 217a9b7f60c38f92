//! k-bit record-setters for k < 12, where the closed-form families do not
//! yet apply.

pub const TABLE_3: &[(u32, &[&str])] = &[
    (1, &["1"]),
    (2, &["11"]),
    (3, &["101"]),
    (4, &["1001", "1011"]),
    (5, &["10011", "10101"]),
    (6, &["100011", "100101", "101011"]),
    (7, &["1000101", "1001001", "1001011", "1010011", "1010101"]),
    (
        8,
        &["10001011", "10010011", "10010101", "10100101", "10101011"],
    ),
    (
        9,
        &[
            "100010101",
            "100100101",
            "100101011",
            "101001011",
            "101010011",
            "101010101",
        ],
    ),
    (
        10,
        &[
            "1000101011",
            "1001001011",
            "1001010011",
            "1001010101",
            "1010010101",
            "1010101011",
        ],
    ),
    (
        11,
        &[
            "10001010101",
            "10010010101",
            "10010100101",
            "10010101011",
            "10100101011",
            "10101001011",
            "10101010011",
            "10101010101",
        ],
    ),
];

/// Numerical values printed alongside the strings, in the same order.
pub const TABLE_3_VALUES: &[(u32, &[u64])] = &[
    (1, &[1]),
    (2, &[3]),
    (3, &[5]),
    (4, &[9, 11]),
    (5, &[19, 21]),
    (6, &[35, 37, 43]),
    (7, &[69, 73, 75, 83, 85]),
    (8, &[139, 147, 149, 165, 171]),
    (9, &[277, 293, 299, 331, 339, 341]),
    (10, &[555, 587, 595, 597, 661, 683]),
    (11, &[1109, 1173, 1189, 1195, 1323, 1355, 1363, 1365]),
];

pub fn table_row(k: u32) -> Option<&'static [&'static str]> {
    TABLE_3
        .iter()
        .find(|(bits, _)| *bits == k)
        .map(|(_, row)| *row)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strings_and_values_agree() {
        for ((k, row), (k2, values)) in TABLE_3.iter().zip(TABLE_3_VALUES) {
            assert_eq!(k, k2);
            assert_eq!(row.len(), values.len());
            for (s, &v) in row.iter().zip(values.iter()) {
                assert_eq!(s.len() as u32, *k);
                assert_eq!(u64::from_str_radix(s, 2).unwrap(), v);
            }
        }
    }
}
