//! Slow reference computations for the test suites.
//!
//! Nothing here shares code with the optimized paths it checks: faces are
//! enumerated by bitmask, boundary matrices are dense byte arrays with their
//! own elimination, the pulling complex is enumerated over all row tuples, and
//! convex hulls are found with orientation determinants.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::incidence::IncidenceMinor;
use crate::pulling::is_pulling_facet;
use crate::simplex::Simplex;

/// Largest total face count [`homology_all_ranks`] accepts.
pub const MAX_FACES: usize = 50_000;

/// Reduced Betti numbers `b̃_k` for `k = -1, 0, …`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BettiProfile {
    reduced: Vec<i64>,
}

impl BettiProfile {
    /// `b̃_k`; zero outside the computed range.
    pub fn reduced(&self, k: isize) -> i64 {
        usize::try_from(k + 1)
            .ok()
            .and_then(|i| self.reduced.get(i).copied())
            .unwrap_or(0)
    }

    pub fn max_dim(&self) -> isize {
        self.reduced.len() as isize - 2
    }

    /// `Σ (-1)^k b̃_k` over `k ≥ -1`.
    pub fn euler_characteristic(&self) -> i64 {
        self.reduced
            .iter()
            .enumerate()
            .map(|(i, b)| if i % 2 == 1 { *b } else { -*b })
            .sum()
    }
}

/// Faces of `Γ(J)` grouped by size (index = number of vertices).
pub fn crosscut_faces(j: &IncidenceMinor) -> Result<Vec<BTreeSet<Vec<u32>>>> {
    let mut by_size: Vec<BTreeSet<Vec<u32>>> = vec![BTreeSet::new()];
    if j.num_rows() > 0 || j.num_cols() > 0 {
        by_size[0].insert(Vec::new());
    }
    let mut total = 0usize;
    for r in 0..j.num_rows() {
        let support: Vec<u32> = j.row_support(r).collect();
        if support.len() > 20 {
            return Err(Error::TooLarge(1 << support.len()));
        }
        for mask in 1u32..1 << support.len() {
            let face: Vec<u32> = (0..support.len())
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| support[b])
                .collect();
            let size = face.len();
            while by_size.len() <= size {
                by_size.push(BTreeSet::new());
            }
            if by_size[size].insert(face) {
                total += 1;
                if total > MAX_FACES {
                    return Err(Error::TooLarge(total));
                }
            }
        }
    }
    Ok(by_size)
}

/// `Σ_k (-1)^k f_k` over `k ≥ -1`, with `f_k` the number of `k`-faces of
/// `Γ(J)` including the empty face.
pub fn euler_characteristic(j: &IncidenceMinor) -> Result<i64> {
    let faces = crosscut_faces(j)?;
    Ok(faces
        .iter()
        .enumerate()
        .map(|(size, layer)| {
            let n = layer.len() as i64;
            // dimension k = size - 1; sign (-1)^k
            if size % 2 == 1 {
                n
            } else {
                -n
            }
        })
        .sum())
}

fn dense_rank(mut rows: Vec<Vec<u8>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c] == 1) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[c] == 1 {
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x ^= *y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rank of the boundary map from faces of `size` vertices to faces of
/// `size - 1` vertices.
fn boundary_rank(faces: &[BTreeSet<Vec<u32>>], size: usize) -> usize {
    if size == 0 || size >= faces.len() {
        return 0;
    }
    let lower: BTreeMap<&Vec<u32>, usize> = faces[size - 1]
        .iter()
        .enumerate()
        .map(|(i, f)| (f, i))
        .collect();
    let rows: Vec<Vec<u8>> = faces[size]
        .iter()
        .map(|face| {
            let mut row = vec![0u8; lower.len()];
            for skip in 0..face.len() {
                let mut sub = face.clone();
                sub.remove(skip);
                row[lower[&sub]] = 1;
            }
            row
        })
        .collect();
    dense_rank(rows)
}

/// All reduced Betti numbers of `Γ(J)` over Z₂, from the augmented chain
/// complex.
pub fn homology_all_ranks(j: &IncidenceMinor) -> Result<BettiProfile> {
    let faces = crosscut_faces(j)?;
    let ranks: Vec<usize> = (0..=faces.len())
        .map(|s| boundary_rank(&faces, s))
        .collect();
    let reduced = (0..faces.len())
        .map(|size| {
            let nullity = faces[size].len() - ranks[size];
            nullity as i64 - ranks[size + 1] as i64
        })
        .collect();
    Ok(BettiProfile { reduced })
}

fn intersect(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter()
        .copied()
        .filter(|x| b.binary_search(x).is_ok())
        .collect()
}

/// The pulling complex `Δ(d, J)` with `d = J.dim()`, enumerated from its
/// definition over all row tuples `(F_1, …, F_d)` with `v_i =
/// min(F_1 ∩ … ∩ F_i)` strictly increasing.
pub fn pulling_triangulation_by_flags(j: &IncidenceMinor) -> Result<BTreeSet<Simplex>> {
    pulling_complex_by_flags(j.dim(), j)
}

/// As [`pulling_triangulation_by_flags`] with an explicit `d`.
pub fn pulling_complex_by_flags(d: usize, j: &IncidenceMinor) -> Result<BTreeSet<Simplex>> {
    let rows: Vec<Vec<u32>> = (0..j.num_rows())
        .map(|r| j.row_support(r).collect())
        .collect();
    match rows.len().checked_pow(d as u32) {
        Some(tuples) if tuples <= 50_000_000 => {}
        other => return Err(Error::TooLarge(other.unwrap_or(usize::MAX))),
    }
    let mut out = BTreeSet::new();
    let all: Vec<u32> = (1..=j.num_cols() as u32).collect();
    let mut stack: Vec<(Vec<u32>, Vec<u32>)> = vec![(all, Vec::new())];
    // the outcome only depends on (meet, chosen), so repeated states are skipped
    let mut seen = BTreeSet::new();
    while let Some((meet, chosen)) = stack.pop() {
        if !seen.insert((meet.clone(), chosen.clone())) {
            continue;
        }
        if chosen.len() == d {
            out.insert(Simplex::new(chosen).expect("mins increase strictly"));
            continue;
        }
        for row in &rows {
            let next = intersect(&meet, row);
            let Some(&v) = next.first() else { continue };
            // mins of a shrinking chain never decrease; distinct means larger
            if chosen.last().is_some_and(|&last| v <= last) {
                continue;
            }
            let mut c = chosen.clone();
            c.push(v);
            stack.push((next, c));
        }
    }
    Ok(out)
}

/// Every `d`-subset of `[n]` accepted by [`is_pulling_facet`].
pub fn all_pulling_facets(d: usize, j: &IncidenceMinor) -> Vec<Simplex> {
    crate::combinatorics::Subsets::new(j.num_cols(), d)
        .map(|idx| Simplex::new(idx.into_iter().map(|i| i as u32 + 1).collect()).unwrap())
        .filter(|s| is_pulling_facet(d, j, s).unwrap())
        .collect()
}

fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign = 1;
    let mut prev = BigInt::from(1);
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for c in k + 1..n {
                let v = (&m[i][c] * &m[k][k] - &m[i][k] * &m[k][c]) / &prev;
                m[i][c] = v;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Facets of `conv{(t, t², …, t^d) : t = 1..n}` by brute force: a `d`-subset
/// is a facet when every other point lies strictly on one side of its affine
/// hull. Returned as sorted label lists in lexicographic order.
pub fn moment_curve_hull_facets(d: usize, n: usize) -> Vec<Vec<u32>> {
    let point = |t: usize| -> Vec<BigInt> {
        let mut row = vec![BigInt::from(1)];
        let mut x = BigInt::from(1);
        for _ in 0..d {
            x *= t;
            row.push(x.clone());
        }
        row
    };
    let mut facets = Vec::new();
    for idx in crate::combinatorics::Subsets::new(n, d) {
        let base: Vec<Vec<BigInt>> = idx.iter().map(|&i| point(i + 1)).collect();
        let mut side = 0;
        let mut ok = true;
        for q in (0..n).filter(|q| !idx.contains(q)) {
            let mut m = base.clone();
            m.push(point(q + 1));
            let det = bareiss_det(m);
            let s = if det.is_positive() {
                1
            } else if det.is_negative() {
                -1
            } else {
                0
            };
            if s == 0 || (side != 0 && s != side) {
                ok = false;
                break;
            }
            side = s;
        }
        if ok {
            facets.push(idx.into_iter().map(|i| i as u32 + 1).collect());
        }
    }
    facets
}

/// Whether `b` is obtained from `a` by permuting rows and columns. Exhaustive
/// over column bijections that preserve column sums; meant for `n ≤ 10`.
pub fn permutation_equivalent(a: &IncidenceMinor, b: &IncidenceMinor) -> bool {
    if a.num_rows() != b.num_rows() || a.num_cols() != b.num_cols() {
        return false;
    }
    let n = a.num_cols();
    let cols_a: Vec<usize> = (0..n).map(|c| a.col_len(c)).collect();
    let cols_b: Vec<usize> = (0..n).map(|c| b.col_len(c)).collect();
    let mut target: Vec<Vec<bool>> = b.rows().collect();
    target.sort();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn search(
        c: usize,
        a: &IncidenceMinor,
        cols_a: &[usize],
        cols_b: &[usize],
        target: &[Vec<bool>],
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let n = perm.len();
        if c == n {
            let mut rows: Vec<Vec<bool>> = (0..a.num_rows())
                .map(|r| {
                    let mut row = vec![false; n];
                    for (src, &dst) in perm.iter().enumerate() {
                        row[dst] = a.get(r, src);
                    }
                    row
                })
                .collect();
            rows.sort();
            return rows == target;
        }
        for dst in 0..n {
            if used[dst] || cols_a[c] != cols_b[dst] {
                continue;
            }
            used[dst] = true;
            perm[c] = dst;
            if search(c + 1, a, cols_a, cols_b, target, perm, used) {
                return true;
            }
            used[dst] = false;
        }
        false
    }

    search(0, a, &cols_a, &cols_b, &target, &mut perm, &mut used)
}
