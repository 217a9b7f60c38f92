//! Whole bit-length rows `a(2^(k-1)) .. a(2^k - 1)`.
//!
//! Row `k` is built from row `k - 1` by interleaving: `a(2m) = a(m)` copies a
//! cell, `a(2m + 1) = a(m) + a(m + 1)` sums two adjacent cells (the right
//! neighbour of the last cell is `a(2^(k-1)) = 1`).

use std::ops::Add;

use super::{stern_a_u64, SternValue};
use crate::budget::{Budget, MAX_ROW_BITS};
use crate::error::{Error, Result};

/// Cell width for a row. `F(46) < 2^32`, so 32-bit cells hold every row up
/// to 45 bits; beyond that rows use 64-bit cells (row indices stop fitting a
/// `u64` long before the values do).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CellWidth {
    U32,
    U64,
}

impl CellWidth {
    pub const U32_MAX_BITS: u32 = 45;

    pub fn for_bit_length(k: u32) -> CellWidth {
        if k <= Self::U32_MAX_BITS {
            CellWidth::U32
        } else {
            CellWidth::U64
        }
    }

    pub fn bytes(self) -> usize {
        match self {
            CellWidth::U32 => 4,
            CellWidth::U64 => 8,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RowCells {
    U32(Vec<u32>),
    U64(Vec<u64>),
}

impl RowCells {
    pub fn len(&self) -> usize {
        match self {
            RowCells::U32(v) => v.len(),
            RowCells::U64(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, i: usize) -> Option<u64> {
        match self {
            RowCells::U32(v) => v.get(i).map(|&x| u64::from(x)),
            RowCells::U64(v) => v.get(i).copied(),
        }
    }

    pub fn iter(&self) -> Box<dyn Iterator<Item = u64> + '_> {
        match self {
            RowCells::U32(v) => Box::new(v.iter().map(|&x| u64::from(x))),
            RowCells::U64(v) => Box::new(v.iter().copied()),
        }
    }

    fn extend(&mut self, other: RowCells) {
        match (self, other) {
            (RowCells::U32(a), RowCells::U32(b)) => a.extend(b),
            (RowCells::U64(a), RowCells::U64(b)) => a.extend(b),
            _ => unreachable!("chunks of one row share a width"),
        }
    }

    fn widened(&self) -> Vec<u64> {
        self.iter().collect()
    }
}

/// The values of one bit-length row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SternRow {
    bit_length: u32,
    cells: RowCells,
}

impl SternRow {
    fn first() -> SternRow {
        SternRow {
            bit_length: 1,
            cells: RowCells::U32(vec![1]),
        }
    }

    fn next(&self) -> SternRow {
        let k = self.bit_length + 1;
        let cells = match (&self.cells, CellWidth::for_bit_length(k)) {
            (RowCells::U32(prev), CellWidth::U32) => RowCells::U32(interleave(prev, 1)),
            (RowCells::U64(prev), _) => RowCells::U64(interleave(prev, 1)),
            (prev @ RowCells::U32(_), CellWidth::U64) => {
                RowCells::U64(interleave(&prev.widened(), 1))
            }
        };
        SternRow {
            bit_length: k,
            cells,
        }
    }

    pub fn bit_length(&self) -> u32 {
        self.bit_length
    }

    /// `2^(k-1)`, the index of the first cell.
    pub fn first_index(&self) -> u64 {
        1u64 << (self.bit_length - 1)
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cells(&self) -> &RowCells {
        &self.cells
    }

    pub fn cell_width(&self) -> CellWidth {
        match self.cells {
            RowCells::U32(_) => CellWidth::U32,
            RowCells::U64(_) => CellWidth::U64,
        }
    }

    /// `a(index)` if `index` lies in this row.
    pub fn value_at(&self, index: u64) -> Option<SternValue> {
        let offset = index.checked_sub(self.first_index())?;
        self.cells
            .get(usize::try_from(offset).ok()?)
            .map(SternValue::from)
    }

    /// `(index, value)` pairs in increasing index order.
    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        let first = self.first_index();
        self.cells
            .iter()
            .enumerate()
            .map(move |(i, v)| (first + i as u64, v))
    }

    /// The row maximum and the first index attaining it.
    pub fn max(&self) -> (u64, u64) {
        self.iter().fold(
            (0, 0),
            |best, (i, v)| if v > best.1 { (i, v) } else { best },
        )
    }
}

fn interleave<T: Copy + Add<Output = T>>(prev: &[T], one: T) -> Vec<T> {
    let mut out = Vec::with_capacity(prev.len() * 2);
    for (j, &left) in prev.iter().enumerate() {
        let right = prev.get(j + 1).copied().unwrap_or(one);
        out.push(left);
        out.push(left + right);
    }
    out
}

/// Successive rows `1, 2, 3, ...`, keeping only the latest one alive.
#[derive(Debug, Default)]
pub struct SternRows {
    current: Option<SternRow>,
}

impl SternRows {
    pub fn new() -> Self {
        SternRows::default()
    }

    /// Moves to the next row and returns it.
    pub fn advance(&mut self) -> &SternRow {
        let next = match &self.current {
            None => SternRow::first(),
            Some(row) => row.next(),
        };
        self.current.insert(next)
    }
}

/// Row `k` under the default memory ceiling.
pub fn stern_row(k: u32, chunking: Option<usize>) -> Result<SternRow> {
    stern_row_with(k, chunking, &Budget::default())
}

/// Row `k`, either built by repeated interleaving or, when `chunking` is
/// given, assembled from independently computed chunks of that size.
pub fn stern_row_with(k: u32, chunking: Option<usize>, budget: &Budget) -> Result<SternRow> {
    budget.check(k)?;
    match chunking {
        None => {
            let mut rows = SternRows::new();
            for _ in 1..k {
                rows.advance();
            }
            Ok(rows.advance().clone())
        }
        Some(chunk_len) => {
            let mut chunks = stern_row_chunks(k, chunk_len)?;
            let mut cells = chunks.next().expect("rows are never empty");
            for chunk in chunks {
                cells.extend(chunk);
            }
            Ok(SternRow {
                bit_length: k,
                cells,
            })
        }
    }
}

/// Streams row `k` in chunks of `chunk_len` cells without materializing it.
///
/// Each chunk is computed on its own from the matching (half-size) window of
/// the previous row, recursively, so memory stays proportional to the chunk.
pub fn stern_row_chunks(k: u32, chunk_len: usize) -> Result<RowChunks> {
    if k == 0 {
        return Err(Error::InvalidBitLength(0));
    }
    if k > MAX_ROW_BITS {
        return Err(Error::BudgetExceeded {
            bits: k,
            limit_bits: MAX_ROW_BITS,
        });
    }
    let start = 1u64 << (k - 1);
    Ok(RowChunks {
        width: CellWidth::for_bit_length(k),
        next: start,
        end: start << 1,
        chunk_len: chunk_len.max(1) as u64,
    })
}

#[derive(Clone, Debug)]
pub struct RowChunks {
    width: CellWidth,
    next: u64,
    end: u64,
    chunk_len: u64,
}

impl Iterator for RowChunks {
    type Item = RowCells;

    fn next(&mut self) -> Option<RowCells> {
        if self.next >= self.end {
            return None;
        }
        let lo = self.next;
        let len = self.chunk_len.min(self.end - lo);
        self.next += len;
        let values = window(lo, len as usize);
        Some(match self.width {
            CellWidth::U32 => RowCells::U32(values.into_iter().map(|v| v as u32).collect()),
            CellWidth::U64 => RowCells::U64(values),
        })
    }
}

/// `a(lo) .. a(lo + len - 1)` by interleaving the parent window.
fn window(lo: u64, len: usize) -> Vec<u64> {
    if len <= 4 || lo < 64 {
        return (lo..lo + len as u64).map(stern_a_u64).collect();
    }
    let p0 = lo / 2;
    let parent = window(p0, ((lo + len as u64) / 2 - p0 + 1) as usize);
    (lo..lo + len as u64)
        .map(|n| {
            let m = (n / 2 - p0) as usize;
            if n % 2 == 0 {
                parent[m]
            } else {
                parent[m] + parent[m + 1]
            }
        })
        .collect()
}
