//! The crosscut complex of an incidence minor and the homology test for
//! completeness.
//!
//! The crosscut complex `Γ(J)` has as faces all vertex sets contained in at
//! least one row of `J`. For a minor `J` of a `d`-polytope, `J` is complete
//! exactly when the reduced homology `H̃_{d-1}(Γ(J); Z₂)` is nonzero, i.e. when
//! `dim ker ∂_{d-1} > rank ∂_d`. Reduced homology is used throughout, so the
//! `(-1)`-layer holds the empty face and `∂_0` is the augmentation row of ones.

use alloc::collections::BTreeSet;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use crate::combinatorics::{binomial, Subsets};
use crate::error::{Error, Result};
use crate::gf2::Gf2Matrix;
use crate::incidence::IncidenceMinor;
use crate::simplex::Simplex;

/// All `k`-dimensional faces of a crosscut complex, sorted lexicographically.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FaceLayer {
    k: isize,
    faces: Vec<Simplex>,
}

impl FaceLayer {
    pub fn dim(&self) -> isize {
        self.k
    }

    pub fn faces(&self) -> &[Simplex] {
        &self.faces
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn index_of(&self, face: &Simplex) -> Option<usize> {
        self.faces.binary_search(face).ok()
    }
}

/// The `k`-faces of `Γ(J)`: every `(k+1)`-subset of `[n]` contained in some
/// row. `k = -1` gives the empty face whenever `J` has a row or a column.
pub fn enumerate_faces(j: &IncidenceMinor, k: isize) -> FaceLayer {
    if k < -1 {
        return FaceLayer {
            k,
            faces: Vec::new(),
        };
    }
    if k == -1 {
        let faces = if j.num_rows() > 0 || j.num_cols() > 0 {
            alloc::vec![Simplex::empty()]
        } else {
            Vec::new()
        };
        return FaceLayer { k, faces };
    }
    let size = (k + 1) as usize;
    let mut seen = BTreeSet::new();
    for r in 0..j.num_rows() {
        let support: Vec<u32> = j.row_support(r).collect();
        // rows shorter than the face size contribute nothing
        for idx in Subsets::new(support.len(), size) {
            seen.insert(Simplex::from_sorted_unchecked(
                idx.into_iter().map(|i| support[i]).collect(),
            ));
        }
    }
    FaceLayer {
        k,
        faces: seen.into_iter().collect(),
    }
}

/// The Z₂ boundary map from `upper` to `lower`: one column per upper face, one
/// row per lower face, with a one wherever the lower face is a facet of the
/// upper face.
pub fn boundary_matrix(upper: &FaceLayer, lower: &FaceLayer) -> Result<Gf2Matrix> {
    if upper.k != lower.k + 1 {
        return Err(Error::LayerMismatch {
            upper: upper.k,
            lower: lower.k,
        });
    }
    let mut m = Gf2Matrix::zeros(lower.len(), upper.len());
    for (col, face) in upper.faces.iter().enumerate() {
        for sub in face.boundary() {
            let row = lower
                .index_of(&sub)
                .ok_or_else(|| Error::MissingFace(sub.to_string()))?;
            m.set(row, col, true);
        }
    }
    Ok(m)
}

/// Which matrix the homology computation ran on.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Primal,
    Dual,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Primal => "primal",
            Side::Dual => "dual",
        })
    }
}

/// How [`analyze`] picks between `J` and its transpose.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum SideChoice {
    /// Primal when the largest row is no bigger than the largest column,
    /// dual otherwise.
    #[default]
    Auto,
    Primal,
    Dual,
}

/// Everything the completeness test computed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomologyReport {
    pub dim: usize,
    pub side: Side,
    /// `(rows, cols)` of `∂_d`.
    pub upper_shape: (usize, usize),
    pub rank_upper: usize,
    /// `(rows, cols)` of `∂_{d-1}`.
    pub lower_shape: (usize, usize),
    pub nullity_lower: usize,
    pub complete: bool,
}

impl HomologyReport {
    /// `dim H̃_{d-1}(Γ; Z₂)`.
    pub fn reduced_betti(&self) -> usize {
        self.nullity_lower.saturating_sub(self.rank_upper)
    }

    fn trivial(dim: usize, side: Side, complete: bool) -> Self {
        HomologyReport {
            dim,
            side,
            upper_shape: (0, 0),
            rank_upper: 0,
            lower_shape: (0, 0),
            nullity_lower: 0,
            complete,
        }
    }
}

/// Runs the homology test on `j` itself.
///
/// `d = 0` uses the convention that a 0-polytope is complete exactly when the
/// minor has one vertex. A minor with no rows or no columns is never complete
/// for `d ≥ 1`.
pub fn homology_report(d: usize, j: &IncidenceMinor, side: Side) -> HomologyReport {
    if d == 0 {
        return HomologyReport::trivial(d, side, j.num_cols() == 1);
    }
    if j.num_rows() == 0 || j.num_cols() == 0 {
        return HomologyReport::trivial(d, side, false);
    }
    let k = d as isize;
    let top = enumerate_faces(j, k);
    let mid = enumerate_faces(j, k - 1);
    let low = enumerate_faces(j, k - 2);
    let upper = boundary_matrix(&top, &mid).expect("layers come from the same complex");
    let lower = boundary_matrix(&mid, &low).expect("layers come from the same complex");
    let rank_upper = upper.rank();
    let nullity_lower = lower.nullity();
    HomologyReport {
        dim: d,
        side,
        upper_shape: (upper.rows(), upper.cols()),
        rank_upper,
        lower_shape: (lower.rows(), lower.cols()),
        nullity_lower,
        complete: nullity_lower > rank_upper,
    }
}

/// Completeness of `j` as a minor of a `d`-polytope, computed on `j` as given.
pub fn completeness_via_homology(d: usize, j: &IncidenceMinor) -> bool {
    homology_report(d, j, Side::Primal).complete
}

/// Completeness test on whichever of `j` and `jᵀ` has the smaller maximal
/// support, or on the side forced by `choice`.
pub fn analyze(d: usize, j: &IncidenceMinor, choice: SideChoice) -> HomologyReport {
    let side = match choice {
        SideChoice::Primal => Side::Primal,
        SideChoice::Dual => Side::Dual,
        SideChoice::Auto => {
            let stats = j.size_stats();
            // ties stay primal
            if stats.s <= stats.s_col {
                Side::Primal
            } else {
                Side::Dual
            }
        }
    };
    match side {
        Side::Primal => homology_report(d, j, side),
        Side::Dual => homology_report(d, &j.transpose(), side),
    }
}

/// Decides whether `j` is the complete incidence matrix of a `d`-polytope.
pub fn decide(d: usize, j: &IncidenceMinor) -> bool {
    analyze(d, j, SideChoice::Auto).complete
}

/// The upper bounds `(binom(s,d+1)·m, binom(s,d)·m, binom(s,d-1)·m)` on the
/// sizes of the `d`, `d-1` and `d-2` face layers of `Γ(J)`.
pub fn layer_size_bounds(d: usize, j: &IncidenceMinor) -> (u128, u128, u128) {
    let s = j.size_stats().s;
    let m = j.num_rows() as u128;
    let below = if d == 0 { 0 } else { binomial(s, d - 1) };
    (
        binomial(s, d + 1).saturating_mul(m),
        binomial(s, d).saturating_mul(m),
        below.saturating_mul(m),
    )
}
