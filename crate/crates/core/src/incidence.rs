//! Vertex–facet incidence matrix minors.
//!
//! Rows are facets and columns are vertices. Row `r` is read as the subset of
//! vertex labels `{c + 1 : J[r][c] = 1}` of `[n] = {1, …, n}`; rows need not be
//! distinct. Row and column *indices* are 0-based like any Rust container,
//! vertex *labels* are 1-based.

use alloc::vec;
use alloc::vec::Vec;

use crate::bits::{self, Ones};
use crate::error::{Error, Result};

/// A claimed polytope dimension together with an `m × n` 0/1 matrix.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IncidenceMinor {
    dim: usize,
    rows: usize,
    cols: usize,
    stride: usize,
    words: Vec<u64>,
}

/// Largest row and column supports of a minor.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SizeStats {
    /// Maximum number of ones in a row.
    pub s: usize,
    /// Maximum number of ones in a column.
    pub s_col: usize,
    /// `min(s, s_col)`.
    pub s_prime: usize,
}

impl IncidenceMinor {
    /// All-zero `rows × cols` matrix.
    pub fn zeros(dim: usize, rows: usize, cols: usize) -> Self {
        let stride = bits::words_for(cols);
        IncidenceMinor {
            dim,
            rows,
            cols,
            stride,
            words: vec![0; rows * stride],
        }
    }

    /// Builds a minor from explicit 0/1 rows.
    pub fn from_rows<R: AsRef<[bool]>>(
        dim: usize,
        cols: usize,
        rows: impl IntoIterator<Item = R>,
    ) -> Result<Self> {
        let rows: Vec<R> = rows.into_iter().collect();
        let mut j = IncidenceMinor::zeros(dim, rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::ShapeMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            for (c, &b) in row.iter().enumerate() {
                j.set(r, c, b);
            }
        }
        Ok(j)
    }

    /// Builds a minor on `n` vertices from the 1-based vertex labels of each row.
    pub fn from_supports<R: AsRef<[u32]>>(
        dim: usize,
        n: usize,
        supports: impl IntoIterator<Item = R>,
    ) -> Result<Self> {
        let supports: Vec<R> = supports.into_iter().collect();
        let mut j = IncidenceMinor::zeros(dim, supports.len(), n);
        for (r, support) in supports.iter().enumerate() {
            for &label in support.as_ref() {
                if label == 0 || label as usize > n {
                    return Err(Error::VertexOutOfRange { label, n });
                }
                j.set(r, label as usize - 1, true);
            }
        }
        Ok(j)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Same matrix, different claimed dimension.
    pub fn with_dim(mut self, dim: usize) -> Self {
        self.dim = dim;
        self
    }

    pub fn num_rows(&self) -> usize {
        self.rows
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        assert!(row < self.rows && col < self.cols, "entry out of range");
        bits::get(self.row_words(row), col)
    }

    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        assert!(row < self.rows && col < self.cols, "entry out of range");
        let stride = self.stride;
        bits::set(
            &mut self.words[row * stride..(row + 1) * stride],
            col,
            value,
        );
    }

    pub(crate) fn row_words(&self, row: usize) -> &[u64] {
        &self.words[row * self.stride..(row + 1) * self.stride]
    }

    pub(crate) fn stride(&self) -> usize {
        self.stride
    }

    /// Vertex labels (1-based) of row `row`, increasing.
    pub fn row_support(&self, row: usize) -> impl Iterator<Item = u32> + '_ {
        Ones::new(self.row_words(row)).map(|c| c as u32 + 1)
    }

    /// Whether row `row` contains the vertex with 1-based `label`.
    pub fn row_contains(&self, row: usize, label: u32) -> bool {
        label >= 1
            && (label as usize) <= self.cols
            && bits::get(self.row_words(row), label as usize - 1)
    }

    pub fn row_len(&self, row: usize) -> usize {
        bits::count(self.row_words(row))
    }

    pub fn col_len(&self, col: usize) -> usize {
        (0..self.rows).filter(|&r| self.get(r, col)).count()
    }

    /// Iterator over rows as `bool` vectors.
    pub fn rows(&self) -> impl Iterator<Item = Vec<bool>> + '_ {
        (0..self.rows).map(move |r| (0..self.cols).map(|c| self.get(r, c)).collect())
    }

    /// The `n × m` transpose; rows become vertices and columns facets, so a
    /// complete matrix of `P` turns into a complete matrix of the polar `P*`.
    pub fn transpose(&self) -> IncidenceMinor {
        let mut t = IncidenceMinor::zeros(self.dim, self.cols, self.rows);
        for r in 0..self.rows {
            for c in Ones::new(self.row_words(r)) {
                t.set(c, r, true);
            }
        }
        t
    }

    pub fn size_stats(&self) -> SizeStats {
        let s = (0..self.rows).map(|r| self.row_len(r)).max().unwrap_or(0);
        let mut col_counts = vec![0usize; self.cols];
        for r in 0..self.rows {
            for c in Ones::new(self.row_words(r)) {
                col_counts[c] += 1;
            }
        }
        let s_col = col_counts.into_iter().max().unwrap_or(0);
        SizeStats {
            s,
            s_col,
            s_prime: s.min(s_col),
        }
    }

    /// Submatrix keeping the listed rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Result<IncidenceMinor> {
        if let Some(&index) = rows.iter().find(|&&r| r >= self.rows) {
            return Err(Error::IndexOutOfRange {
                what: "row",
                index,
                len: self.rows,
            });
        }
        if let Some(&index) = cols.iter().find(|&&c| c >= self.cols) {
            return Err(Error::IndexOutOfRange {
                what: "column",
                index,
                len: self.cols,
            });
        }
        let mut out = IncidenceMinor::zeros(self.dim, rows.len(), cols.len());
        for (nr, &r) in rows.iter().enumerate() {
            for (nc, &c) in cols.iter().enumerate() {
                if self.get(r, c) {
                    out.set(nr, nc, true);
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use proptest::prelude::*;

    fn triangle() -> IncidenceMinor {
        IncidenceMinor::from_supports(2, 3, [[1u32, 2], [2, 3], [1, 3]]).unwrap()
    }

    #[test]
    fn size_stats_of_examples() {
        let km = fixtures::cube_km();
        assert_eq!(
            km.size_stats(),
            SizeStats {
                s: 4,
                s_col: 3,
                s_prime: 3
            }
        );
        let z = IncidenceMinor::zeros(2, 2, 2);
        assert_eq!(
            z.size_stats(),
            SizeStats {
                s: 0,
                s_col: 0,
                s_prime: 0
            }
        );
        assert_eq!(
            triangle().size_stats(),
            SizeStats {
                s: 2,
                s_col: 2,
                s_prime: 2
            }
        );
    }

    #[test]
    fn transpose_of_km_lists_vertex_incidences() {
        let t = fixtures::cube_km().transpose();
        assert_eq!((t.num_rows(), t.num_cols()), (8, 6));
        // vertex 1 lies on facets 1234, 1278, 1458
        assert_eq!(t.row_support(0).collect::<Vec<_>>(), [1, 2, 3]);
        assert_eq!(t.row_support(7).collect::<Vec<_>>(), [2, 3, 6]);
        let empty = IncidenceMinor::zeros(1, 0, 0);
        assert_eq!(empty.transpose(), empty);
    }

    #[test]
    fn triangle_transpose_is_row_permutation() {
        let t = triangle().transpose();
        let mut a: Vec<Vec<bool>> = triangle().rows().collect();
        let mut b: Vec<Vec<bool>> = t.rows().collect();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_bad_rows() {
        assert_eq!(
            IncidenceMinor::from_rows(2, 3, [[true, false]]),
            Err(Error::ShapeMismatch {
                expected: 3,
                found: 2
            })
        );
        assert!(IncidenceMinor::from_supports(2, 3, [[4u32]]).is_err());
        assert!(fixtures::cube_km().select(&[6], &[]).is_err());
    }

    fn arb_minor() -> impl Strategy<Value = IncidenceMinor> {
        (0usize..7, 0usize..70).prop_flat_map(|(m, n)| {
            proptest::collection::vec(proptest::collection::vec(any::<bool>(), n), m)
                .prop_map(move |rows| IncidenceMinor::from_rows(3, n, rows).unwrap())
        })
    }

    proptest! {
        #[test]
        fn transpose_is_involution(j in arb_minor()) {
            prop_assert_eq!(j.transpose().transpose(), j);
        }

        #[test]
        fn transpose_swaps_stats(j in arb_minor()) {
            let a = j.size_stats();
            let b = j.transpose().size_stats();
            prop_assert_eq!(b.s, a.s_col);
            prop_assert_eq!(b.s_col, a.s);
            prop_assert!(a.s <= j.num_cols() && a.s_col <= j.num_rows());
        }
    }
}
