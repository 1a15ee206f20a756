//! The pulling complex and certificates of incompleteness.
//!
//! For a dimension `d` and a set system `J` on `[n]`, the pulling complex
//! `Δ(d, J)` consists of the `d`-sets `{v_1 < … < v_d}` for which there are
//! rows `F_1, …, F_d` with `v_i = min(F_1 ∩ … ∩ F_i)`. When `J` is the
//! complete incidence matrix of a `d`-polytope this is the pulling
//! triangulation of its boundary for the vertex order `1 < 2 < … < n`, a
//! closed pseudomanifold; for any proper minor it is a proper subcomplex.
//!
//! A no-instance therefore has a short certificate: either the search for a
//! first facet fails ([`find_pulling_facet`] returns
//! [`PullingFacet::Incomplete`]), or some ridge lies in exactly one facet of
//! `Δ(d, J)`. Both are checked with `O(n)` calls to [`is_pulling_facet`].
//!
//! As with the homology test, soundness assumes `J` is a genuine minor of some
//! `d`-polytope.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bits;
use crate::error::{Error, Result};
use crate::incidence::IncidenceMinor;
use crate::simplex::Simplex;

/// Outcome of [`find_pulling_facet`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PullingFacet {
    /// A facet of `Δ(d, J)` not containing vertex 1.
    Facet(Simplex),
    /// No admissible row at some step; `J` is not complete.
    Incomplete,
}

/// Witness that a minor is incomplete.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PullingCertificate {
    /// [`find_pulling_facet`] finds nothing.
    EmptyPullingComplex,
    /// A `(d-1)`-set contained in exactly one facet of `Δ(d, J)`.
    BoundaryRidge(Simplex),
}

impl fmt::Display for PullingCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PullingCertificate::EmptyPullingComplex => f.write_str("EMPTY"),
            PullingCertificate::BoundaryRidge(ridge) => {
                f.write_str("RIDGE")?;
                for v in ridge.vertices() {
                    write!(f, " {v}")?;
                }
                Ok(())
            }
        }
    }
}

fn check_labels(j: &IncidenceMinor, s: &Simplex) -> Result<()> {
    match s.vertices().last() {
        Some(&label) if label as usize > j.num_cols() => Err(Error::VertexOutOfRange {
            label,
            n: j.num_cols(),
        }),
        _ => Ok(()),
    }
}

/// Bit set with the first `n` bits on.
fn universe(j: &IncidenceMinor) -> Vec<u64> {
    let mut all = vec![0u64; j.stride()];
    bits::fill_prefix(&mut all, j.num_cols());
    all
}

/// Whether `candidate` is a facet of `Δ(d, J)`.
///
/// First collects, for each `i`, the rows `𝓕_i` containing `{v_i, …, v_d}`.
/// Then for `i = 1..d` it takes the first row `F ∈ 𝓕_i` (by index) with
/// `min(F_1 ∩ … ∩ F_{i-1} ∩ F) = v_i`, answering no as soon as a step has none.
pub fn is_pulling_facet(d: usize, j: &IncidenceMinor, candidate: &Simplex) -> Result<bool> {
    if candidate.len() != d {
        return Err(Error::SimplexSize {
            expected: d,
            found: candidate.len(),
        });
    }
    check_labels(j, candidate)?;
    Ok(is_pulling_facet_unchecked(j, candidate.vertices()))
}

fn is_pulling_facet_unchecked(j: &IncidenceMinor, v: &[u32]) -> bool {
    let d = v.len();
    if d == 0 {
        return true;
    }
    let mut families: Vec<Vec<usize>> = vec![Vec::new(); d];
    families[d - 1] = (0..j.num_rows())
        .filter(|&r| j.row_contains(r, v[d - 1]))
        .collect();
    for i in (0..d - 1).rev() {
        families[i] = families[i + 1]
            .iter()
            .copied()
            .filter(|&r| j.row_contains(r, v[i]))
            .collect();
    }
    let mut meet = universe(j);
    for (i, family) in families.iter().enumerate() {
        let target = v[i] as usize - 1;
        let Some(&row) = family
            .iter()
            .find(|&&r| bits::lowest_of_and(&meet, j.row_words(r)) == Some(target))
        else {
            return false;
        };
        bits::and_assign(&mut meet, j.row_words(row));
    }
    true
}

/// Greedy search for a facet of `Δ(d, J)`.
///
/// Keeps a shrinking set `S`, starting from `[n]`. At each of the `d` steps it
/// picks the row `F` with `min S ∉ F` maximizing `|F ∩ S| > 0` (lowest row
/// index on ties), replaces `S` by `S ∩ F` and records `min S`. If some step
/// has no such row the minor is incomplete.
pub fn find_pulling_facet(d: usize, j: &IncidenceMinor) -> PullingFacet {
    let mut current = universe(j);
    let mut facet = Vec::with_capacity(d);
    for _ in 0..d {
        let Some(min_s) = bits::lowest(&current) else {
            return PullingFacet::Incomplete;
        };
        let mut best: Option<(usize, usize)> = None;
        for r in 0..j.num_rows() {
            let row = j.row_words(r);
            if bits::get(row, min_s) {
                continue;
            }
            let overlap = bits::count_of_and(&current, row);
            if overlap > 0 && best.is_none_or(|(_, size)| overlap > size) {
                best = Some((r, overlap));
            }
        }
        let Some((row, _)) = best else {
            return PullingFacet::Incomplete;
        };
        bits::and_assign(&mut current, j.row_words(row));
        let v = bits::lowest(&current).expect("overlap is nonempty");
        facet.push(v as u32 + 1);
    }
    PullingFacet::Facet(Simplex::from_sorted_unchecked(facet))
}

/// The vertices `v ∉ ridge` for which `ridge ∪ {v}` is a facet of `Δ(d, J)`,
/// in increasing order.
pub fn ridge_cofacets(d: usize, j: &IncidenceMinor, ridge: &Simplex) -> Result<Vec<u32>> {
    if ridge.len() + 1 != d {
        return Err(Error::SimplexSize {
            expected: d.saturating_sub(1),
            found: ridge.len(),
        });
    }
    check_labels(j, ridge)?;
    Ok((1..=j.num_cols() as u32)
        .filter_map(|v| ridge.with_vertex(v))
        .filter(|facet| is_pulling_facet_unchecked(j, facet.vertices()))
        .map(|facet| {
            *facet
                .vertices()
                .iter()
                .find(|v| !ridge.contains(**v))
                .expect("facet extends the ridge")
        })
        .collect())
}

/// Number of facets of `Δ(d, J)` containing `ridge`.
pub fn ridge_cofacet_count(d: usize, j: &IncidenceMinor, ridge: &Simplex) -> Result<usize> {
    ridge_cofacets(d, j, ridge).map(|c| c.len())
}

/// Searches for a certificate that `J` is not complete.
///
/// Returns `None` when `Δ(d, J)` looks like a closed pseudomanifold from the
/// facet found by [`find_pulling_facet`]: facets are visited in lexicographic
/// order through shared ridges, and the first ridge with exactly one cofacet
/// is returned.
pub fn find_certificate(d: usize, j: &IncidenceMinor) -> Option<PullingCertificate> {
    let start = match find_pulling_facet(d, j) {
        PullingFacet::Incomplete => return Some(PullingCertificate::EmptyPullingComplex),
        PullingFacet::Facet(f) => f,
    };
    let mut frontier = BTreeSet::from([start]);
    let mut visited = BTreeSet::new();
    let mut seen_ridges = BTreeSet::new();
    while let Some(facet) = frontier.pop_first() {
        visited.insert(facet.clone());
        let mut facet_ridges: Vec<Simplex> = facet.boundary().collect();
        facet_ridges.sort();
        for ridge in facet_ridges {
            if !seen_ridges.insert(ridge.clone()) {
                continue;
            }
            let cofacets = ridge_cofacets(d, j, &ridge).expect("ridge has d - 1 vertices");
            if cofacets.len() == 1 {
                return Some(PullingCertificate::BoundaryRidge(ridge));
            }
            for v in cofacets {
                let next = ridge.with_vertex(v).expect("v is not on the ridge");
                if !visited.contains(&next) {
                    frontier.insert(next);
                }
            }
        }
    }
    None
}

/// Checks a certificate against `J`: the facet search must fail for
/// [`PullingCertificate::EmptyPullingComplex`], and the ridge must have exactly
/// one cofacet for [`PullingCertificate::BoundaryRidge`].
pub fn verify_certificate(d: usize, j: &IncidenceMinor, cert: &PullingCertificate) -> Result<bool> {
    match cert {
        PullingCertificate::EmptyPullingComplex => {
            Ok(find_pulling_facet(d, j) == PullingFacet::Incomplete)
        }
        PullingCertificate::BoundaryRidge(ridge) => Ok(ridge_cofacet_count(d, j, ridge)? == 1),
    }
}
