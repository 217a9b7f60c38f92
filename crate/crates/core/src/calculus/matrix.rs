use std::fmt;
use std::ops::Mul;

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// 2x2 matrix of non-negative integers, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat2 {
    e: [[BigUint; 2]; 2],
}

impl Mat2 {
    pub fn new(e: [[BigUint; 2]; 2]) -> Self {
        Mat2 { e }
    }

    pub fn from_u64(e: [[u64; 2]; 2]) -> Self {
        Mat2 {
            e: e.map(|row| row.map(BigUint::from)),
        }
    }

    pub fn identity() -> Self {
        Mat2::from_u64([[1, 0], [0, 1]])
    }

    /// Transfer matrix of a single digit.
    ///
    /// Row = whether the digit receives a broken unit from its left
    /// neighbour, column = whether the digit itself is broken. For digits 0
    /// and 1 these are `mu(0)` and `mu(1)`.
    pub fn digit(d: u8) -> Self {
        match d {
            0 => Mat2::from_u64([[1, 0], [1, 1]]),
            1 => Mat2::from_u64([[1, 1], [0, 1]]),
            2 => Mat2::from_u64([[1, 1], [0, 0]]),
            3 => Mat2::from_u64([[0, 1], [0, 0]]),
            _ => panic!("digit {d} out of range"),
        }
    }

    pub fn entry(&self, row: usize, col: usize) -> &BigUint {
        &self.e[row][col]
    }

    pub fn entries(&self) -> &[[BigUint; 2]; 2] {
        &self.e
    }

    /// `M * w` with `w = (1, 0)^T`: the first column.
    pub fn suffix_vector(&self) -> [BigUint; 2] {
        [self.e[0][0].clone(), self.e[1][0].clone()]
    }

    /// `v * M` with `v = (1, 0)`: the first row.
    pub fn prefix_vector(&self) -> [BigUint; 2] {
        self.e[0].clone()
    }

    /// Entrywise `self >= other`.
    pub fn dominates(&self, other: &Mat2) -> bool {
        self.e
            .iter()
            .flatten()
            .zip(other.e.iter().flatten())
            .all(|(a, b)| a >= b)
    }

    pub fn is_identity(&self) -> bool {
        self.e[0][0].is_one()
            && self.e[1][1].is_one()
            && self.e[0][1].is_zero()
            && self.e[1][0].is_zero()
    }
}

impl Mul<&Mat2> for &Mat2 {
    type Output = Mat2;

    fn mul(self, rhs: &Mat2) -> Mat2 {
        let (a, b) = (&self.e, &rhs.e);
        let cell = |r: usize, c: usize| &a[r][0] * &b[0][c] + &a[r][1] * &b[1][c];
        Mat2 {
            e: [[cell(0, 0), cell(0, 1)], [cell(1, 0), cell(1, 1)]],
        }
    }
}

impl Mul for Mat2 {
    type Output = Mat2;

    fn mul(self, rhs: Mat2) -> Mat2 {
        &self * &rhs
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.e[0][0], self.e[0][1], self.e[1][0], self.e[1][1]
        )
    }
}
