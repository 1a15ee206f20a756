//! End-to-end acceptance checks. Runs without the test harness and prints one
//! PASS/FAIL line per criterion; exits non-zero if any criterion fails.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use polycomplete::combinatorics::binomial;
use polycomplete::crosscut::{analyze, decide, Side, SideChoice};
use polycomplete::fixtures::{self, FixtureSpec};
use polycomplete::geometry::{extract_incidence, validate_instance, Failure, GeometricInstance};
use polycomplete::oracle;
use polycomplete::pulling::{find_certificate, is_pulling_facet, verify_certificate};
use polycomplete::Simplex;

use common::{minor_corpus, polygon, Instance};

type Check = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn corpus() -> Vec<Instance> {
    minor_corpus(0x5eed_2024, 12)
}

fn km_decisions() -> Check {
    let km = fixtures::cube_km();
    let (yes, t3) = timed(|| decide(3, &km));
    let (no, t4) = timed(|| decide(4, &km));
    ensure(yes, || "decide(3, J_KM) returned no".into())?;
    ensure(!no, || "decide(4, J_KM) returned yes".into())?;
    let limit = Duration::from_secs(1);
    ensure(t3 < limit && t4 < limit, || {
        format!("too slow: {t3:?}, {t4:?}")
    })?;
    Ok(format!("d=3 yes in {t3:.2?}, d=4 no in {t4:.2?}"))
}

fn cyclic_polytope() -> Check {
    let c48 = fixtures::cyclic_incidence(4, 8).map_err(|e| e.to_string())?;
    ensure(c48.num_rows() == 20, || {
        format!("C4(8) has {} rows", c48.num_rows())
    })?;
    ensure(decide(4, &c48), || "decide(4, C4(8)) returned no".into())?;
    let km = fixtures::cube_km();
    let km_rows: Vec<Vec<bool>> = km.rows().collect();
    let keep: Vec<usize> = c48
        .rows()
        .enumerate()
        .filter(|(_, r)| !km_rows.contains(r))
        .map(|(i, _)| i)
        .collect();
    ensure(keep.len() == 14, || {
        format!("{} KM rows found in C4(8)", 20 - keep.len())
    })?;
    let minor = fixtures::delete_minor(&c48, &keep, &[]).map_err(|e| e.to_string())?;
    ensure(!decide(4, &minor), || {
        "decide(4, KM rows of C4(8)) returned yes".into()
    })?;
    Ok("C4(8) has 20 facets, full matrix yes, KM-row minor no".into())
}

fn prism_dichotomy() -> Check {
    for (name, spec) in [
        ("triangle", FixtureSpec::Simplex { d: 2 }),
        ("square", FixtureSpec::Cube { d: 2 }),
        ("3-cube", FixtureSpec::CubeKm),
    ] {
        let d = spec.dim();
        let j = spec.incidence().map_err(|e| e.to_string())?;
        let prism = fixtures::prism(&j);
        let n = j.num_cols();
        let top: Vec<usize> = (n..2 * n).collect();
        let minor = fixtures::delete_minor(&prism, &[0, 1], &top).map_err(|e| e.to_string())?;
        ensure(minor.clone().with_dim(d) == j, || {
            format!("{name}: prism minor is not J_P")
        })?;
        ensure(decide(d, &j), || {
            format!("{name}: decide(d, J_P) returned no")
        })?;
        ensure(!decide(d + 1, &minor), || {
            format!("{name}: decide(d+1, minor) returned yes")
        })?;
        ensure(decide(d + 1, &prism), || {
            format!("{name}: decide(d+1, prism) returned no")
        })?;
    }
    Ok("triangle, square, 3-cube: yes / no / yes".into())
}

fn oracle_equivalence(corpus: &[Instance]) -> Check {
    let mut yes = 0;
    for inst in corpus {
        let betti = oracle::homology_all_ranks(&inst.matrix).map_err(|e| e.to_string())?;
        let expected = betti.reduced(inst.dim as isize - 1) != 0;
        let got = decide(inst.dim, &inst.matrix);
        ensure(got == expected, || {
            format!("{}: decide {got}, oracle {expected}", inst.name)
        })?;
        yes += usize::from(got);
    }
    ensure(corpus.len() >= 200, || {
        format!("corpus has only {} minors", corpus.len())
    })?;
    Ok(format!(
        "{} minors agree ({yes} yes, {} no)",
        corpus.len(),
        corpus.len() - yes
    ))
}

fn certificates(corpus: &[Instance]) -> Check {
    let mut certified = 0;
    for inst in corpus {
        let complete = decide(inst.dim, &inst.matrix);
        match find_certificate(inst.dim, &inst.matrix) {
            None => ensure(complete, || {
                format!("{}: no certificate for a no-instance", inst.name)
            })?,
            Some(cert) => {
                ensure(!complete, || {
                    format!("{}: certificate {cert} for a yes-instance", inst.name)
                })?;
                let ok = verify_certificate(inst.dim, &inst.matrix, &cert)
                    .map_err(|e| format!("{}: {e}", inst.name))?;
                ensure(ok, || format!("{}: certificate {cert} rejected", inst.name))?;
                certified += 1;
            }
        }
    }
    Ok(format!(
        "{certified} no-instances certified and verified, yes-instances uncertified"
    ))
}

fn pulling_facets() -> Check {
    let km = fixtures::cube_km();
    let flag = Simplex::new(vec![1, 7, 8]).map_err(|e| e.to_string())?;
    ensure(is_pulling_facet(3, &km, &flag) == Ok(true), || {
        "{1,7,8} rejected".into()
    })?;
    let exhaustive = oracle::all_pulling_facets(3, &km);
    let flags = oracle::pulling_triangulation_by_flags(&km).map_err(|e| e.to_string())?;
    ensure(flags.len() == 12, || {
        format!("flag oracle found {} facets", flags.len())
    })?;
    ensure(exhaustive.iter().cloned().eq(flags.iter().cloned()), || {
        format!("greedy facets {exhaustive:?} differ from flags {flags:?}")
    })?;
    Ok("{1,7,8} accepted; 12-facet triangulation matches flag enumeration".into())
}

fn transpose_duality(corpus: &[Instance]) -> Check {
    for inst in corpus {
        let t = inst.matrix.transpose();
        ensure(
            decide(inst.dim, &inst.matrix) == decide(inst.dim, &t),
            || format!("{}: decide differs on the transpose", inst.name),
        )?;
    }
    Ok(format!(
        "{} minors agree with their transposes",
        corpus.len()
    ))
}

fn best_of<T>(runs: usize, mut f: impl FnMut() -> T) -> Duration {
    (0..runs).map(|_| timed(&mut f).1).min().expect("runs > 0")
}

fn polynomial_smoke() -> Check {
    let mut sweep = Duration::ZERO;
    for d in 3..=5 {
        for n in d + 1..=9 {
            let j = fixtures::cyclic_incidence(d, n).map_err(|e| e.to_string())?;
            let (ok, t) = timed(|| decide(d, &j));
            ensure(ok, || format!("C{d}({n}) decided no"))?;
            sweep += t;
        }
    }
    ensure(sweep < Duration::from_secs(10), || {
        format!("cyclic sweep took {sweep:?}")
    })?;
    let mut ratios = Vec::new();
    for m in [128, 256, 512] {
        let small = polygon(m);
        let large = polygon(2 * m);
        ensure(decide(2, &small) && decide(2, &large), || {
            format!("{m}-gon decided no")
        })?;
        let t1 = best_of(5, || decide(2, &small));
        let t2 = best_of(5, || decide(2, &large));
        ratios.push(t2.as_secs_f64() / t1.as_secs_f64().max(1e-9));
    }
    ensure(ratios.iter().all(|&r| r < 10.0), || {
        format!("doubling ratios {ratios:.2?}")
    })?;
    Ok(format!(
        "cyclic sweep {sweep:.2?}; polygon doubling ratios {ratios:.2?}"
    ))
}

fn geometric_round_trip() -> Check {
    let cube =
        fixtures::geometric_fixture(&FixtureSpec::Cube { d: 3 }).map_err(|e| e.to_string())?;
    let report = validate_instance(&cube).map_err(|e| e.to_string())?;
    ensure(report.passed(), || {
        format!("cube fails validation: {report:?}")
    })?;
    let j = extract_incidence(&cube).map_err(|e| e.to_string())?;
    ensure(
        oracle::permutation_equivalent(&j, &fixtures::cube_km()),
        || "extracted cube is not permutation-equivalent to J_KM".into(),
    )?;
    for missing in 0..cube.halfspaces.len() {
        let mut broken: GeometricInstance = cube.clone();
        broken.halfspaces.remove(missing);
        let report = validate_instance(&broken).map_err(|e| e.to_string())?;
        let mut failed: Vec<usize> = report
            .vertices
            .iter()
            .map(|f| match f {
                Failure::NotAVertex { point, .. } => *point,
                other => panic!("unexpected failure {other}"),
            })
            .collect();
        failed.sort_unstable();
        let expected: Vec<usize> = (0..j.num_cols()).filter(|&v| j.get(missing, v)).collect();
        ensure(failed == expected, || {
            format!("removing halfspace {missing}: vertices {failed:?} fail, expected {expected:?}")
        })?;
    }
    Ok(
        "cube extracts J_KM up to permutation; each missing facet breaks exactly its 4 vertices"
            .into(),
    )
}

fn size_bounds(corpus: &[Instance]) -> Check {
    for inst in corpus {
        let d = inst.dim;
        let report = analyze(d, &inst.matrix, SideChoice::Auto);
        let side = match report.side {
            Side::Primal => inst.matrix.clone(),
            Side::Dual => inst.matrix.transpose(),
        };
        let s = side.size_stats().s;
        let m = side.num_rows() as u128;
        let bound = |k: isize| {
            if k < 0 {
                1
            } else {
                binomial(s, k as usize) * m
            }
        };
        let d = d as isize;
        let (ur, uc) = report.upper_shape;
        let (lr, lc) = report.lower_shape;
        ensure(
            (ur as u128) <= bound(d) && (uc as u128) <= bound(d + 1),
            || format!("{}: boundary {d} is {ur}x{uc}", inst.name),
        )?;
        ensure(
            (lr as u128) <= bound(d - 1) && (lc as u128) <= bound(d),
            || format!("{}: boundary {} is {lr}x{lc}", inst.name, d - 1),
        )?;
    }
    Ok(format!(
        "{} minors within binomial size bounds",
        corpus.len()
    ))
}

fn main() -> ExitCode {
    let corpus = corpus();
    let criteria: [Criterion<'_>; 10] = [
        ("Klee-Minty cube decisions", Box::new(km_decisions)),
        ("cyclic polytope C4(8)", Box::new(cyclic_polytope)),
        ("prism dichotomy", Box::new(prism_dichotomy)),
        (
            "homology oracle equivalence",
            Box::new(|| oracle_equivalence(&corpus)),
        ),
        ("certificate soundness", Box::new(|| certificates(&corpus))),
        ("pulling facets", Box::new(pulling_facets)),
        ("transpose duality", Box::new(|| transpose_duality(&corpus))),
        ("polynomial smoke test", Box::new(polynomial_smoke)),
        ("geometric round trip", Box::new(geometric_round_trip)),
        ("boundary size bound", Box::new(|| size_bounds(&corpus))),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome =
            panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failures += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
