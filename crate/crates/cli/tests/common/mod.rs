#![allow(dead_code)]

use polycomplete::fixtures::{self, FixtureSpec};
use polycomplete::IncidenceMinor;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct Instance {
    pub name: String,
    pub dim: usize,
    pub matrix: IncidenceMinor,
}

/// Fixtures with at most ten vertices.
pub fn small_fixtures() -> Vec<FixtureSpec> {
    use FixtureSpec::*;
    let mut specs = vec![CubeKm];
    specs.extend((1..=5).map(|d| Simplex { d }));
    specs.extend((2..=3).map(|d| Cube { d }));
    specs.extend((2..=5).map(|d| CrossPolytope { d }));
    for d in 2..=5 {
        specs.extend((d + 1..=10).map(|n| Cyclic { d, n }));
    }
    specs.push(PrismOf(Box::new(Simplex { d: 2 })));
    specs.push(PrismOf(Box::new(Cube { d: 2 })));
    specs.push(PrismOf(Box::new(Simplex { d: 3 })));
    specs.push(PrismOf(Box::new(Cyclic { d: 2, n: 5 })));
    specs
}

/// Each fixture unchanged plus seeded random row/column deletions.
pub fn minor_corpus(seed: u64, per_fixture: usize) -> Vec<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for spec in small_fixtures() {
        let full = spec.incidence().expect("fixture parameters are valid");
        let d = spec.dim();
        out.push(Instance {
            name: format!("{spec:?}"),
            dim: d,
            matrix: full.clone(),
        });
        for k in 0..per_fixture {
            let (row_p, col_p) = match k % 4 {
                0 => (rng.gen_range(0.6..1.0), 1.0),
                1 => (1.0, rng.gen_range(0.6..1.0)),
                2 => (rng.gen_range(0.3..1.0), rng.gen_range(0.3..1.0)),
                _ => (rng.gen_range(0.85..1.0), rng.gen_range(0.85..1.0)),
            };
            let mut rows: Vec<usize> = (0..full.num_rows())
                .filter(|_| !rng.gen_bool(row_p))
                .collect();
            let mut cols: Vec<usize> = (0..full.num_cols())
                .filter(|_| !rng.gen_bool(col_p))
                .collect();
            if rows.is_empty() && cols.is_empty() {
                if k % 2 == 0 {
                    rows.push(rng.gen_range(0..full.num_rows()));
                } else {
                    cols.push(rng.gen_range(0..full.num_cols()));
                }
            }
            let matrix = fixtures::delete_minor(&full, &rows, &cols).expect("indices in range");
            out.push(Instance {
                name: format!("{spec:?} minus rows {rows:?} cols {cols:?}"),
                dim: d,
                matrix,
            });
        }
    }
    out
}

/// The `m`-gon with edge `i` on vertices `i + 1` and `i + 2` (cyclically).
pub fn polygon(m: usize) -> IncidenceMinor {
    let supports = (0..m as u32).map(|i| [i + 1, (i + 1) % m as u32 + 1]);
    IncidenceMinor::from_supports(
        2,
        m,
        supports.map(|mut s| {
            s.sort_unstable();
            s
        }),
    )
    .expect("labels in range")
}
