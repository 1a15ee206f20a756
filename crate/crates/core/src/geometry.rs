//! Exact rational points and halfspaces, the checkable front end for the
//! combinatorial tests.
//!
//! An instance is a set of points `V ⊂ Q^d` and closed halfspaces
//! `a·x ≤ b`. [`validate_instance`] checks that `conv V` sits inside the
//! halfspace intersection, that every point is a vertex of the intersection
//! and every halfspace supports a facet of `conv V`. [`extract_incidence`]
//! then records which points lie on which boundary hyperplanes. All arithmetic
//! is exact.

use alloc::vec::Vec;
use core::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::incidence::IncidenceMinor;

pub type Rational = BigRational;

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

pub fn integer(value: i64) -> Rational {
    Rational::from_integer(value.into())
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalPoint(pub Vec<Rational>);

impl RationalPoint {
    pub fn from_integers(coords: &[i64]) -> Self {
        RationalPoint(coords.iter().map(|&c| integer(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }
}

/// The closed halfspace `normal · x ≤ offset`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Halfspace {
    normal: Vec<Rational>,
    offset: Rational,
}

impl Halfspace {
    pub fn new(normal: Vec<Rational>, offset: Rational) -> Result<Self> {
        if normal.iter().all(Zero::is_zero) {
            return Err(Error::ZeroNormal);
        }
        Ok(Halfspace { normal, offset })
    }

    pub fn from_integers(normal: &[i64], offset: i64) -> Result<Self> {
        Halfspace::new(
            normal.iter().map(|&c| integer(c)).collect(),
            integer(offset),
        )
    }

    pub fn normal(&self) -> &[Rational] {
        &self.normal
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    /// `offset - normal · p`; zero on the boundary, negative outside.
    pub fn slack(&self, p: &RationalPoint) -> Rational {
        &self.offset - dot(&self.normal, &p.0)
    }

    pub fn contains(&self, p: &RationalPoint) -> bool {
        !self.slack(p).is_negative()
    }

    pub fn is_tight(&self, p: &RationalPoint) -> bool {
        self.slack(p).is_zero()
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GeometricInstance {
    pub dim: usize,
    pub points: Vec<RationalPoint>,
    pub halfspaces: Vec<Halfspace>,
}

impl GeometricInstance {
    pub fn check_dimensions(&self) -> Result<()> {
        let lengths = self
            .points
            .iter()
            .map(RationalPoint::dim)
            .chain(self.halfspaces.iter().map(Halfspace::dim));
        for found in lengths {
            if found != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    found,
                });
            }
        }
        Ok(())
    }
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Reduces `rows` to reduced row echelon form in place and returns the pivot
/// columns.
fn row_reduce(rows: &mut [Vec<Rational>]) -> Vec<usize> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let factor = row[c].clone();
                for (x, p) in row[c..].iter_mut().zip(&pivot[c..]) {
                    *x -= &factor * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

/// Rank of a set of rational vectors.
pub fn rank(vectors: &[&[Rational]]) -> usize {
    let mut rows: Vec<Vec<Rational>> = vectors.iter().map(|v| v.to_vec()).collect();
    row_reduce(&mut rows).len()
}

/// Dimension of the affine hull; `-1` for no points.
pub fn affine_dimension(points: &[&RationalPoint]) -> isize {
    let Some((first, rest)) = points.split_first() else {
        return -1;
    };
    let diffs: Vec<Vec<Rational>> = rest
        .iter()
        .map(|p| p.0.iter().zip(&first.0).map(|(x, y)| x - y).collect())
        .collect();
    let refs: Vec<&[Rational]> = diffs.iter().map(Vec::as_slice).collect();
    rank(&refs) as isize
}

/// The hyperplane through `points` when they span exactly a hyperplane of
/// `Q^d`, oriented so that `reference` lies on the nonpositive side.
pub fn hyperplane_through(
    points: &[&RationalPoint],
    reference: &RationalPoint,
) -> Option<Halfspace> {
    let (first, rest) = points.split_first()?;
    let d = first.dim();
    let mut rows: Vec<Vec<Rational>> = rest
        .iter()
        .map(|p| p.0.iter().zip(&first.0).map(|(x, y)| x - y).collect())
        .collect();
    if rows.is_empty() {
        rows.push(alloc::vec![Rational::zero(); d]);
    }
    let pivots = row_reduce(&mut rows);
    if pivots.len() + 1 != d {
        return None;
    }
    let free = (0..d).find(|c| !pivots.contains(c))?;
    let mut normal = alloc::vec![Rational::zero(); d];
    normal[free] = Rational::one();
    for (r, &c) in pivots.iter().enumerate() {
        normal[c] = -rows[r][free].clone();
    }
    let mut offset = dot(&normal, &first.0);
    if dot(&normal, &reference.0) > offset {
        for x in normal.iter_mut() {
            *x = -x.clone();
        }
        offset = -offset;
    }
    Halfspace::new(normal, offset).ok()
}

/// A single failed precondition, naming the offending point or halfspace.
/// Indices are 0-based.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Failure {
    DuplicatePoint {
        first: usize,
        second: usize,
    },
    Violation {
        point: usize,
        halfspace: usize,
    },
    PointsNotFullDimensional {
        affine_dim: isize,
    },
    NormalsDoNotSpan {
        rank: usize,
    },
    NotAVertex {
        point: usize,
        tight: usize,
        rank: usize,
    },
    NotAFacet {
        halfspace: usize,
        on_boundary: usize,
        affine_dim: isize,
    },
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Failure::DuplicatePoint { first, second } => {
                write!(f, "point {} duplicates point {}", second + 1, first + 1)
            }
            Failure::Violation { point, halfspace } => {
                write!(f, "point {} violates halfspace {}", point + 1, halfspace + 1)
            }
            Failure::PointsNotFullDimensional { affine_dim } => {
                write!(f, "points span an affine space of dimension {affine_dim}")
            }
            Failure::NormalsDoNotSpan { rank } => {
                write!(f, "halfspace normals span only dimension {rank}")
            }
            Failure::NotAVertex { point, tight, rank } => write!(
                f,
                "point {} lies on {tight} boundaries whose normals have rank {rank}",
                point + 1
            ),
            Failure::NotAFacet {
                halfspace,
                on_boundary,
                affine_dim,
            } => write!(
                f,
                "halfspace {} has {on_boundary} points on its boundary spanning dimension {affine_dim}",
                halfspace + 1
            ),
        }
    }
}

/// Outcome of [`validate_instance`], one list of failures per named check.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ValidationReport {
    /// Points are pairwise distinct.
    pub distinct_points: Vec<Failure>,
    /// (a) every point satisfies every halfspace.
    pub containment: Vec<Failure>,
    /// (b) the points affinely span `Q^d` and the normals span `Q^d`.
    pub full_dimension: Vec<Failure>,
    /// (c) each point is tight at halfspaces whose normals have rank `d`.
    pub vertices: Vec<Failure>,
    /// (d) the points on each boundary span an affine space of dimension `d-1`.
    pub facets: Vec<Failure>,
}

impl ValidationReport {
    pub fn checks(&self) -> [(&'static str, &[Failure]); 5] {
        [
            ("distinct-points", &self.distinct_points),
            ("containment", &self.containment),
            ("full-dimension", &self.full_dimension),
            ("vertex-of-Q", &self.vertices),
            ("facet-of-P", &self.facets),
        ]
    }

    pub fn passed(&self) -> bool {
        self.checks().iter().all(|(_, f)| f.is_empty())
    }
}

/// Checks the preconditions under which the extracted incidence matrix is the
/// complete incidence matrix of `conv(points)`.
///
/// Check (c) is local: a point satisfying all halfspaces (check (a)) that is
/// tight at constraints with normals of full rank is the unique solution of
/// those equations, hence a vertex of the halfspace intersection.
pub fn validate_instance(inst: &GeometricInstance) -> Result<ValidationReport> {
    inst.check_dimensions()?;
    let d = inst.dim;
    let mut report = ValidationReport::default();

    for (i, p) in inst.points.iter().enumerate() {
        if let Some(first) = inst.points[..i].iter().position(|q| q == p) {
            report
                .distinct_points
                .push(Failure::DuplicatePoint { first, second: i });
        }
    }

    for (point, p) in inst.points.iter().enumerate() {
        for (halfspace, h) in inst.halfspaces.iter().enumerate() {
            if !h.contains(p) {
                report
                    .containment
                    .push(Failure::Violation { point, halfspace });
            }
        }
    }

    let all_points: Vec<&RationalPoint> = inst.points.iter().collect();
    let affine_dim = affine_dimension(&all_points);
    if affine_dim != d as isize {
        report
            .full_dimension
            .push(Failure::PointsNotFullDimensional { affine_dim });
    }
    let normals: Vec<&[Rational]> = inst.halfspaces.iter().map(Halfspace::normal).collect();
    let normal_rank = rank(&normals);
    if normal_rank != d {
        report
            .full_dimension
            .push(Failure::NormalsDoNotSpan { rank: normal_rank });
    }

    for (point, p) in inst.points.iter().enumerate() {
        let tight: Vec<&[Rational]> = inst
            .halfspaces
            .iter()
            .filter(|h| h.is_tight(p))
            .map(Halfspace::normal)
            .collect();
        let r = rank(&tight);
        if tight.len() < d || r != d {
            report.vertices.push(Failure::NotAVertex {
                point,
                tight: tight.len(),
                rank: r,
            });
        }
    }

    for (halfspace, h) in inst.halfspaces.iter().enumerate() {
        let on: Vec<&RationalPoint> = inst.points.iter().filter(|p| h.is_tight(p)).collect();
        let affine_dim = affine_dimension(&on);
        if affine_dim != d as isize - 1 {
            report.facets.push(Failure::NotAFacet {
                halfspace,
                on_boundary: on.len(),
                affine_dim,
            });
        }
    }

    Ok(report)
}

/// Incidence matrix with one row per halfspace and one column per point; an
/// entry is one exactly when the point lies on the halfspace's boundary.
pub fn extract_incidence(inst: &GeometricInstance) -> Result<IncidenceMinor> {
    inst.check_dimensions()?;
    let mut j = IncidenceMinor::zeros(inst.dim, inst.halfspaces.len(), inst.points.len());
    for (r, h) in inst.halfspaces.iter().enumerate() {
        for (c, p) in inst.points.iter().enumerate() {
            if h.is_tight(p) {
                j.set(r, c, true);
            }
        }
    }
    Ok(j)
}
