mod common;

use polycomplete::crosscut::{analyze, decide, layer_size_bounds, SideChoice};
use polycomplete::fixtures::{self, FixtureSpec};
use polycomplete::oracle;
use polycomplete::pulling::{find_certificate, find_pulling_facet, ridge_cofacet_count};
use polycomplete::{IncidenceMinor, PullingCertificate, PullingFacet};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn sphere_fixtures() -> Vec<FixtureSpec> {
    use FixtureSpec::*;
    let mut specs = vec![CubeKm];
    specs.extend((1..=5).map(|d| Simplex { d }));
    specs.extend((1..=4).map(|d| Cube { d }));
    specs.extend((1..=4).map(|d| CrossPolytope { d }));
    for d in 2..=5 {
        specs.extend((d + 1..=9).map(|n| Cyclic { d, n }));
    }
    specs
}

#[test]
fn complete_fixtures_are_homology_spheres() {
    for spec in sphere_fixtures() {
        let d = spec.dim();
        let j = spec.incidence().unwrap();
        assert!(decide(d, &j), "{spec:?}");
        let betti = oracle::homology_all_ranks(&j).unwrap();
        for k in -1..=d as isize {
            let expected = i64::from(k == d as isize - 1);
            assert_eq!(betti.reduced(k), expected, "{spec:?} degree {k}");
        }
        let report = analyze(d, &j, SideChoice::Auto);
        assert_eq!(report.reduced_betti(), 1, "{spec:?}");
    }
}

#[test]
fn single_deletions_are_incomplete() {
    for spec in sphere_fixtures() {
        let d = spec.dim();
        let j = spec.incidence().unwrap();
        for r in 0..j.num_rows() {
            let minor = fixtures::delete_minor(&j, &[r], &[]).unwrap();
            assert!(!decide(d, &minor), "{spec:?} minus row {r}");
            assert!(
                find_certificate(d, &minor).is_some(),
                "{spec:?} minus row {r}"
            );
        }
        for c in 0..j.num_cols() {
            let minor = fixtures::delete_minor(&j, &[], &[c]).unwrap();
            assert!(!decide(d, &minor), "{spec:?} minus column {c}");
            assert!(
                find_certificate(d, &minor).is_some(),
                "{spec:?} minus column {c}"
            );
        }
    }
}

#[test]
fn every_side_choice_agrees() {
    let small = |j: &IncidenceMinor, d: usize| {
        let (a, b, c) = layer_size_bounds(d, j);
        a.max(b).max(c) <= 2_000
    };
    let mut checked = 0;
    for inst in common::minor_corpus(7, 4) {
        if !small(&inst.matrix, inst.dim) || !small(&inst.matrix.transpose(), inst.dim) {
            continue;
        }
        let answers: Vec<bool> = [SideChoice::Auto, SideChoice::Primal, SideChoice::Dual]
            .into_iter()
            .map(|c| analyze(inst.dim, &inst.matrix, c).complete)
            .collect();
        assert!(answers.iter().all(|&a| a == answers[0]), "{}", inst.name);
        checked += 1;
    }
    assert!(
        checked >= 100,
        "only {checked} instances small enough on both sides"
    );
}

#[test]
fn wrong_dimension_is_rejected() {
    for spec in sphere_fixtures() {
        let d = spec.dim();
        let j = spec.incidence().unwrap();
        assert!(!decide(d + 1, &j), "{spec:?} at d + 1");
        if d > 1 {
            assert!(!decide(d - 1, &j), "{spec:?} at d - 1");
        }
    }
}

#[test]
fn greedy_membership_matches_flag_enumeration_on_complete_matrices() {
    let mut specs = sphere_fixtures();
    specs.push(FixtureSpec::PrismOf(Box::new(FixtureSpec::Simplex {
        d: 2,
    })));
    specs.push(FixtureSpec::PrismOf(Box::new(FixtureSpec::CubeKm)));
    specs.push(FixtureSpec::PrismOf(Box::new(FixtureSpec::Cyclic {
        d: 3,
        n: 6,
    })));
    for spec in specs {
        let d = spec.dim();
        let j = spec.incidence().unwrap();
        let greedy = oracle::all_pulling_facets(d, &j);
        let flags = oracle::pulling_complex_by_flags(d, &j).unwrap();
        assert!(greedy.iter().eq(flags.iter()), "{spec:?}");
    }
}

fn assert_pseudomanifold(d: usize, j: &IncidenceMinor, what: &str) {
    let facets = oracle::all_pulling_facets(d, j);
    assert!(!facets.is_empty(), "{what}");
    for f in &facets {
        for ridge in f.boundary() {
            assert_eq!(
                ridge_cofacet_count(d, j, &ridge).unwrap(),
                2,
                "{what}: {ridge}"
            );
        }
    }
}

#[test]
fn pulling_triangulations_are_closed() {
    for spec in sphere_fixtures() {
        let j = spec.incidence().unwrap();
        assert_pseudomanifold(spec.dim(), &j, &format!("{spec:?}"));
        match find_pulling_facet(spec.dim(), &j) {
            PullingFacet::Facet(f) => {
                assert!(oracle::all_pulling_facets(spec.dim(), &j).contains(&f))
            }
            PullingFacet::Incomplete => panic!("{spec:?}: no pulling facet"),
        }
    }
}

#[test]
fn certificates_match_decisions_on_corpus() {
    for inst in common::minor_corpus(11, 6) {
        let complete = decide(inst.dim, &inst.matrix);
        match find_certificate(inst.dim, &inst.matrix) {
            None => assert!(complete, "{}", inst.name),
            Some(PullingCertificate::EmptyPullingComplex) => {
                assert!(!complete, "{}", inst.name);
                assert_eq!(
                    find_pulling_facet(inst.dim, &inst.matrix),
                    PullingFacet::Incomplete
                );
            }
            Some(PullingCertificate::BoundaryRidge(r)) => {
                assert!(!complete, "{}", inst.name);
                assert_eq!(ridge_cofacet_count(inst.dim, &inst.matrix, &r).unwrap(), 1);
            }
        }
    }
}

#[test]
fn reduced_euler_characteristic_of_spheres() {
    for spec in sphere_fixtures() {
        let d = spec.dim() as i64;
        let chi = oracle::euler_characteristic(&spec.incidence().unwrap()).unwrap();
        assert_eq!(chi, if d % 2 == 1 { 1 } else { -1 }, "{spec:?}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn permuting_rows_and_columns_preserves_the_answer(
        idx in 0usize..40,
        seed in any::<u64>(),
    ) {
        let specs = common::small_fixtures();
        let spec = &specs[idx % specs.len()];
        let j = spec.incidence().unwrap();
        let (m, n) = (j.num_rows(), j.num_cols());
        let mut rows: Vec<usize> = (0..m).collect();
        let mut cols: Vec<usize> = (0..n).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rows.shuffle(&mut rng);
        cols.shuffle(&mut rng);
        let permuted = j.select(&rows, &cols).unwrap();
        prop_assert!(oracle::permutation_equivalent(&permuted, &j));
        prop_assert_eq!(decide(spec.dim(), &permuted), decide(spec.dim(), &j));
        prop_assert!(decide(spec.dim(), &permuted));
    }
}
