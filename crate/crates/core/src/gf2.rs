//! Dense bit-packed matrices over GF(2).
//!
//! Rows are packed into `u64` words; bits past the last column are always
//! zero. Rank is computed by XOR elimination that pivots on the lowest set bit
//! of each vector, working on a scratch copy so the matrix itself is never
//! touched.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bits::{self, Ones};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    stride: usize,
    words: Vec<u64>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = bits::words_for(cols);
        Gf2Matrix {
            rows,
            cols,
            stride,
            words: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Gf2Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Parses rows written as strings of `0`/`1`. Panics on other characters
    /// or ragged rows; meant for literals in tests and examples.
    pub fn from_bit_strings(cols: usize, rows: &[&str]) -> Self {
        let mut m = Gf2Matrix::zeros(rows.len(), cols);
        for (r, s) in rows.iter().enumerate() {
            assert_eq!(s.len(), cols, "row {r} has the wrong length");
            for (c, ch) in s.bytes().enumerate() {
                match ch {
                    b'0' => {}
                    b'1' => m.set(r, c, true),
                    _ => panic!("row {r} contains {:?}", ch as char),
                }
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        assert!(row < self.rows && col < self.cols, "entry out of range");
        bits::get(self.row(row), col)
    }

    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        assert!(row < self.rows && col < self.cols, "entry out of range");
        bits::set(self.row_mut(row), col, value);
    }

    pub fn toggle(&mut self, row: usize, col: usize) {
        assert!(row < self.rows && col < self.cols, "entry out of range");
        bits::toggle(self.row_mut(row), col);
    }

    fn row(&self, row: usize) -> &[u64] {
        &self.words[row * self.stride..(row + 1) * self.stride]
    }

    fn row_mut(&mut self, row: usize) -> &mut [u64] {
        &mut self.words[row * self.stride..(row + 1) * self.stride]
    }

    /// Adds row `src` into row `dst` (over GF(2)).
    pub fn add_row(&mut self, src: usize, dst: usize) {
        assert!(src < self.rows && dst < self.rows && src != dst);
        let (s, d) = (src * self.stride, dst * self.stride);
        for w in 0..self.stride {
            let v = self.words[s + w];
            self.words[d + w] ^= v;
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for w in 0..self.stride {
            self.words.swap(a * self.stride + w, b * self.stride + w);
        }
    }

    pub fn count_ones(&self) -> usize {
        bits::count(&self.words)
    }

    pub fn transpose(&self) -> Gf2Matrix {
        let mut t = Gf2Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in Ones::new(self.row(r)) {
                t.set(c, r, true);
            }
        }
        t
    }

    /// Rank over GF(2).
    pub fn rank(&self) -> usize {
        // Row rank equals column rank; reduce the orientation with fewer
        // vectors.
        if self.rows > self.cols {
            return self.transpose().rank();
        }
        let stride = self.stride;
        // basis vectors indexed by their lowest set bit
        let mut basis: Vec<u64> = Vec::new();
        let mut pivot_slot = vec![usize::MAX; self.cols];
        let mut scratch = vec![0u64; stride];
        let mut rank = 0;
        for r in 0..self.rows {
            scratch.copy_from_slice(self.row(r));
            while let Some(p) = bits::lowest(&scratch) {
                let slot = pivot_slot[p];
                if slot == usize::MAX {
                    pivot_slot[p] = rank;
                    basis.extend_from_slice(&scratch);
                    rank += 1;
                    break;
                }
                bits::xor_assign(&mut scratch, &basis[slot * stride..(slot + 1) * stride]);
            }
        }
        rank
    }

    /// Dimension of the kernel of the map `GF(2)^cols → GF(2)^rows`.
    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf2Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            for c in 0..self.cols {
                f.write_str(if self.get(r, c) { "1" } else { "0" })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
