//! Complete incidence matrices and exact coordinates for a few polytope
//! families, plus the minor-deletion helper used to build no-instances.

use alloc::boxed::Box;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::combinatorics::Subsets;
use crate::error::{Error, Result};
use crate::geometry::{
    hyperplane_through, integer, GeometricInstance, Halfspace, Rational, RationalPoint,
};
use crate::incidence::IncidenceMinor;

pub const MAX_DIM: usize = 6;
pub const MAX_VERTICES: usize = 12;

/// A fixture family with its parameters.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FixtureSpec {
    /// The `d`-simplex: origin and unit vectors.
    Simplex { d: usize },
    /// The 3-cube with the Klee–Minty vertex labels of [`cube_km`].
    CubeKm,
    /// The 0/1 `d`-cube; vertex `k` has the binary digits of `k - 1` as
    /// coordinates.
    Cube { d: usize },
    /// Convex hull of `±e_i`; vertex `2i-1` is `+e_i` and `2i` is `-e_i`.
    CrossPolytope { d: usize },
    /// Cyclic polytope `C_d(n)` on the moment curve at `t = 1, …, n`.
    Cyclic { d: usize, n: usize },
    /// `P × [0,1]`.
    PrismOf(Box<FixtureSpec>),
}

impl FixtureSpec {
    pub fn dim(&self) -> usize {
        match self {
            FixtureSpec::Simplex { d }
            | FixtureSpec::Cube { d }
            | FixtureSpec::CrossPolytope { d }
            | FixtureSpec::Cyclic { d, .. } => *d,
            FixtureSpec::CubeKm => 3,
            FixtureSpec::PrismOf(inner) => inner.dim() + 1,
        }
    }

    /// The complete incidence matrix.
    pub fn incidence(&self) -> Result<IncidenceMinor> {
        match self {
            FixtureSpec::Simplex { d } => simplex(*d),
            FixtureSpec::CubeKm => Ok(cube_km()),
            FixtureSpec::Cube { d } => cube(*d),
            FixtureSpec::CrossPolytope { d } => cross_polytope(*d),
            FixtureSpec::Cyclic { d, n } => cyclic_incidence(*d, *n),
            FixtureSpec::PrismOf(inner) => {
                check_dim(inner.dim() + 1)?;
                Ok(prism(&inner.incidence()?))
            }
        }
    }
}

fn check_dim(d: usize) -> Result<()> {
    if d == 0 || d > MAX_DIM {
        return Err(Error::FixtureParameters(format!(
            "dimension {d} outside 1..={MAX_DIM}"
        )));
    }
    Ok(())
}

/// The `d`-simplex; row `i` omits vertex `i + 1`.
pub fn simplex(d: usize) -> Result<IncidenceMinor> {
    check_dim(d)?;
    let n = d + 1;
    let supports: Vec<Vec<u32>> = (1..=n as u32)
        .map(|skip| (1..=n as u32).filter(|&v| v != skip).collect())
        .collect();
    IncidenceMinor::from_supports(d, n, supports)
}

/// The 3-cube in Klee–Minty numbering, rows `1234, 1278, 1458, 2367, 3456,
/// 5678`.
pub fn cube_km() -> IncidenceMinor {
    IncidenceMinor::from_supports(
        3,
        8,
        [
            [1u32, 2, 3, 4],
            [1, 2, 7, 8],
            [1, 4, 5, 8],
            [2, 3, 6, 7],
            [3, 4, 5, 6],
            [5, 6, 7, 8],
        ],
    )
    .expect("labels are in range")
}

/// Coordinates realizing [`cube_km`] on the unit cube.
const KM_COORDS: [[i64; 3]; 8] = [
    [0, 1, 0],
    [1, 1, 0],
    [1, 0, 0],
    [0, 0, 0],
    [0, 0, 1],
    [1, 0, 1],
    [1, 1, 1],
    [0, 1, 1],
];

/// `(normal, offset)` of each [`cube_km`] facet, in row order.
const KM_FACETS: [([i64; 3], i64); 6] = [
    ([0, 0, -1], 0),
    ([0, 1, 0], 1),
    ([-1, 0, 0], 0),
    ([1, 0, 0], 1),
    ([0, -1, 0], 0),
    ([0, 0, 1], 1),
];

/// The 0/1 `d`-cube; rows come in pairs `x_j = 0`, `x_j = 1` for
/// `j = 1, …, d`.
pub fn cube(d: usize) -> Result<IncidenceMinor> {
    check_dim(d)?;
    let n = 1usize << d;
    let mut j = IncidenceMinor::zeros(d, 2 * d, n);
    for coord in 0..d {
        for v in 0..n {
            let bit = v >> coord & 1;
            j.set(2 * coord + bit, v, true);
        }
    }
    Ok(j)
}

/// The `d`-dimensional cross-polytope; row `mask` is the facet with sign
/// vector `σ_j = -1` exactly where bit `j` of `mask` is set.
pub fn cross_polytope(d: usize) -> Result<IncidenceMinor> {
    check_dim(d)?;
    let mut j = IncidenceMinor::zeros(d, 1 << d, 2 * d);
    for mask in 0..1usize << d {
        for coord in 0..d {
            j.set(mask, 2 * coord + (mask >> coord & 1), true);
        }
    }
    Ok(j)
}

/// Whether the sorted set `s ⊆ [n]` satisfies Gale's evenness condition:
/// every maximal run of consecutive labels avoiding both 1 and `n` has even
/// length.
pub fn gale_even(s: &[u32], n: u32) -> bool {
    let mut i = 0;
    while i < s.len() {
        let start = i;
        while i + 1 < s.len() && s[i + 1] == s[i] + 1 {
            i += 1;
        }
        let run = &s[start..=i];
        let interior = run[0] != 1 && run[run.len() - 1] != n;
        if interior && run.len() % 2 == 1 {
            return false;
        }
        i += 1;
    }
    true
}

/// Facets of the cyclic polytope `C_d(n)`, as the Gale-even `d`-subsets of
/// `[n]` in lexicographic order.
pub fn cyclic_incidence(d: usize, n: usize) -> Result<IncidenceMinor> {
    if d < 2 || n <= d || n > MAX_VERTICES || d > MAX_DIM {
        return Err(Error::FixtureParameters(format!(
            "cyclic polytope needs 2 <= d < n <= {MAX_VERTICES}, d <= {MAX_DIM}; got d={d}, n={n}"
        )));
    }
    let supports: Vec<Vec<u32>> = Subsets::new(n, d)
        .map(|idx| idx.into_iter().map(|i| i as u32 + 1).collect::<Vec<u32>>())
        .filter(|s| gale_even(s, n as u32))
        .collect();
    IncidenceMinor::from_supports(d, n, supports)
}

/// The prism `P × [0,1]` over a complete incidence matrix of `P`.
///
/// Vertices `1..=n` form the bottom copy and `n+1..=2n` the top copy. Row 0
/// is the bottom facet, row 1 the top facet, and row `r + 2` the vertical
/// facet over row `r` of `j`.
pub fn prism(j: &IncidenceMinor) -> IncidenceMinor {
    let n = j.num_cols();
    let mut out = IncidenceMinor::zeros(j.dim() + 1, j.num_rows() + 2, 2 * n);
    for v in 0..n {
        out.set(0, v, true);
        out.set(1, n + v, true);
    }
    for r in 0..j.num_rows() {
        for label in j.row_support(r) {
            let v = label as usize - 1;
            out.set(r + 2, v, true);
            out.set(r + 2, n + v, true);
        }
    }
    out
}

/// Removes the listed rows and columns (0-based indices); the dimension is
/// kept.
pub fn delete_minor(j: &IncidenceMinor, rows: &[usize], cols: &[usize]) -> Result<IncidenceMinor> {
    if let Some(&index) = rows.iter().find(|&&r| r >= j.num_rows()) {
        return Err(Error::IndexOutOfRange {
            what: "row",
            index,
            len: j.num_rows(),
        });
    }
    if let Some(&index) = cols.iter().find(|&&c| c >= j.num_cols()) {
        return Err(Error::IndexOutOfRange {
            what: "column",
            index,
            len: j.num_cols(),
        });
    }
    let keep_rows: Vec<usize> = (0..j.num_rows()).filter(|r| !rows.contains(r)).collect();
    let keep_cols: Vec<usize> = (0..j.num_cols()).filter(|c| !cols.contains(c)).collect();
    j.select(&keep_rows, &keep_cols)
}

fn unit(d: usize, i: usize, value: i64) -> Vec<i64> {
    let mut v = vec![0; d];
    v[i] = value;
    v
}

fn instance(
    d: usize,
    points: Vec<Vec<i64>>,
    facets: Vec<(Vec<i64>, i64)>,
) -> Result<GeometricInstance> {
    Ok(GeometricInstance {
        dim: d,
        points: points
            .iter()
            .map(|p| RationalPoint::from_integers(p))
            .collect(),
        halfspaces: facets
            .iter()
            .map(|(a, b)| Halfspace::from_integers(a, *b))
            .collect::<Result<_>>()?,
    })
}

/// Exact points and facet halfspaces whose extracted incidence matrix equals
/// `spec.incidence()` with the same row and column order.
pub fn geometric_fixture(spec: &FixtureSpec) -> Result<GeometricInstance> {
    match spec {
        FixtureSpec::Simplex { d } => {
            let d = *d;
            check_dim(d)?;
            let mut points = vec![vec![0; d]];
            points.extend((0..d).map(|i| unit(d, i, 1)));
            let mut facets = vec![(vec![1; d], 1)];
            facets.extend((0..d).map(|i| (unit(d, i, -1), 0)));
            instance(d, points, facets)
        }
        FixtureSpec::CubeKm => instance(
            3,
            KM_COORDS.iter().map(|p| p.to_vec()).collect(),
            KM_FACETS.iter().map(|(a, b)| (a.to_vec(), *b)).collect(),
        ),
        FixtureSpec::Cube { d } => {
            let d = *d;
            check_dim(d)?;
            let points = (0..1usize << d)
                .map(|v| (0..d).map(|c| (v >> c & 1) as i64).collect())
                .collect();
            let facets = (0..d)
                .flat_map(|c| [(unit(d, c, -1), 0), (unit(d, c, 1), 1)])
                .collect();
            instance(d, points, facets)
        }
        FixtureSpec::CrossPolytope { d } => {
            let d = *d;
            check_dim(d)?;
            let points = (0..d)
                .flat_map(|c| [unit(d, c, 1), unit(d, c, -1)])
                .collect();
            let facets = (0..1usize << d)
                .map(|mask| {
                    let normal = (0..d)
                        .map(|c| if mask >> c & 1 == 1 { -1 } else { 1 })
                        .collect();
                    (normal, 1)
                })
                .collect();
            instance(d, points, facets)
        }
        FixtureSpec::Cyclic { d, n } => {
            let j = cyclic_incidence(*d, *n)?;
            let points: Vec<RationalPoint> = (1..=*n as i64)
                .map(|t| RationalPoint((1..=*d as u32).map(|e| integer(t.pow(e))).collect()))
                .collect();
            let count = Rational::from_integer((*n as i64).into());
            let centroid = RationalPoint(
                (0..*d)
                    .map(|c| {
                        points
                            .iter()
                            .fold(Rational::from_integer(0.into()), |acc, p| acc + &p.0[c])
                            / &count
                    })
                    .collect(),
            );
            let halfspaces = (0..j.num_rows())
                .map(|r| {
                    let on: Vec<&RationalPoint> =
                        j.row_support(r).map(|l| &points[l as usize - 1]).collect();
                    hyperplane_through(&on, &centroid)
                        .expect("moment curve points are in general position")
                })
                .collect();
            Ok(GeometricInstance {
                dim: *d,
                points,
                halfspaces,
            })
        }
        FixtureSpec::PrismOf(inner) => {
            let base = geometric_fixture(inner)?;
            let d = base.dim + 1;
            check_dim(d)?;
            let lift = |p: &RationalPoint, h: i64| {
                let mut c = p.0.clone();
                c.push(integer(h));
                RationalPoint(c)
            };
            let mut points: Vec<RationalPoint> = base.points.iter().map(|p| lift(p, 0)).collect();
            points.extend(base.points.iter().map(|p| lift(p, 1)));
            let mut halfspaces = vec![
                Halfspace::from_integers(&unit(d, d - 1, -1), 0)?,
                Halfspace::from_integers(&unit(d, d - 1, 1), 1)?,
            ];
            for h in &base.halfspaces {
                let mut normal = h.normal().to_vec();
                normal.push(integer(0));
                halfspaces.push(Halfspace::new(normal, h.offset().clone())?);
            }
            Ok(GeometricInstance {
                dim: d,
                points,
                halfspaces,
            })
        }
    }
}
