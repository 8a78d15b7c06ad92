//! Acceptance suite: one test per criterion, each printing a pass line and
//! enforcing its time budget. Run with
//!
//! ```text
//! cargo test --test acceptance -- --nocapture
//! ```

mod common;

use std::collections::BTreeSet;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use common::Lcg;
use edgetess::catalog::Family;
use edgetess::geom::{Isometry, Point2, Vec2};
use edgetess::scalar::Rational;
use edgetess::solver::{
    max_edge_count, param_solution_quad, param_solution_triangle, solve_system,
};
use edgetess::tiling::{expand, Verdict};
use edgetess::{corpus, ExtScalar, Polygon};

fn finish(number: u32, name: &str, start: Instant, budget: Duration) {
    let elapsed = start.elapsed();
    println!(
        "criterion {number} ({name}): PASS in {} ms (budget {} s)",
        elapsed.as_millis(),
        budget.as_secs()
    );
    assert!(
        elapsed < budget,
        "criterion {number} exceeded its {budget:?} budget: {elapsed:?}"
    );
}

fn run_binary(args: &[&str]) -> (i32, String) {
    let output = Command::new(env!("CARGO_BIN_EXE_edgetess"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        output.status.code().expect("exit code"),
        String::from_utf8(output.stdout).expect("utf-8"),
    )
}

#[test]
fn criterion_1_triangle_solutions() {
    let start = Instant::now();
    let (code, out) = run_binary(&["solve", "3"]);
    assert_eq!(code, 0);
    assert_eq!(out, "0 0 3 0\n0 2 0 1\n1 0 1 1\n");
    finish(
        1,
        "triangle solutions of the count system",
        start,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_2_quadrilateral_solution() {
    let start = Instant::now();
    let (code, out) = run_binary(&["solve", "4"]);
    assert_eq!(code, 0);
    assert_eq!(out, "0 0 0 4\n");
    finish(
        2,
        "quadrilateral solution of the count system",
        start,
        Duration::from_secs(1),
    );
}

#[test]
#[allow(clippy::assertions_on_constants)] // the bound's own boundary arithmetic
fn criterion_3_edge_bound() {
    let start = Instant::now();
    assert_eq!(max_edge_count(), 6);
    // The inequality the scan walks: holds at 6, fails at 7.
    assert!(180 * (6 - 2) <= 120 * 6);
    assert!(180 * (7 - 2) > 120 * 7);
    finish(
        3,
        "edge-count bound by scanning",
        start,
        Duration::from_secs(1),
    );
}

/// The similarity group elements used in criterion 4: exact rotations by
/// multiples of 15°, field scale factors, field translations, optional
/// mirror, plus a shuffle of the vertex list itself.
fn random_similarity_image(polygon: &Polygon, rng: &mut Lcg) -> Polygon {
    let rotation = Isometry::rotation_times_15(rng.below(24) as i32);
    let scales = [
        ExtScalar::from_int(2),
        ExtScalar::from_ratio(1, 3),
        ExtScalar::one() + ExtScalar::sqrt3(),
        ExtScalar::sqrt2(),
        ExtScalar::from_ratio(5, 2),
        ExtScalar::from_int(3),
        ExtScalar::from_ratio(1, 2),
        ExtScalar::from_int(2) + ExtScalar::sqrt6(),
    ];
    let scale = scales[rng.below(scales.len() as u64) as usize].clone();
    let shift = Vec2::new(
        ExtScalar::from_ratio(rng.signed(10), 1 + rng.below(4) as i64),
        ExtScalar::from_ratio(rng.signed(10), 1 + rng.below(4) as i64),
    );
    let mirror = rng.below(2) == 1;
    let mut verts: Vec<Point2> = polygon
        .vertices()
        .iter()
        .map(|p| {
            let p = if mirror {
                Point2::new(p.x.clone(), -p.y.clone())
            } else {
                p.clone()
            };
            let r = rotation.apply(&p);
            Point2::new(&r.x * &scale + &shift.dx, &r.y * &scale + &shift.dy)
        })
        .collect();
    let shift_by = rng.below(verts.len() as u64) as usize;
    verts.rotate_left(shift_by);
    if rng.below(2) == 1 {
        verts.reverse();
    }
    Polygon::new(verts).expect("similarity images are valid polygons")
}

#[test]
fn criterion_4_eight_family_round_trip() {
    let start = Instant::now();
    let mut families = Family::catalog(); // includes Rectangle at 1/2
    families.push(Family::Rectangle {
        aspect: ExtScalar::one(),
    });
    let mut rng = Lcg(0x5eed_0004);
    for family in &families {
        let canonical = family.canonical_polygon().unwrap();
        assert_eq!(
            canonical.classify(),
            Ok(family.clone()),
            "round trip {family}"
        );
        for _ in 0..12 {
            let image = random_similarity_image(&canonical, &mut rng);
            assert_eq!(
                image.classify(),
                Ok(family.clone()),
                "similarity invariance for {family}"
            );
        }
    }
    finish(
        4,
        "eight-family round trip + similarity",
        start,
        Duration::from_secs(5),
    );
}

#[test]
fn criterion_5_positive_tiling_oracle() {
    let start = Instant::now();
    let mut seeds = Family::catalog();
    seeds.push(Family::Rectangle {
        aspect: ExtScalar::one(),
    });
    let mut orders_seen: BTreeSet<usize> = BTreeSet::new();
    for family in &seeds {
        let seed = family.canonical_polygon().unwrap();
        let patch = expand(&seed, 4);
        let report = patch.verify();
        assert_eq!(report.verdict, Verdict::Pass, "{family} must verify");
        assert!(
            report.settled_vertex_count > 0,
            "{family} has settled vertices"
        );
        for (vertex, order) in &report.vertex_orders {
            assert!(
                [3usize, 4, 6, 8, 12].contains(order),
                "{family}: order {order} at a settled vertex"
            );
            orders_seen.insert(*order);
            if *order == 3 {
                // Three copies meet only at 120° bisector-symmetric
                // corners: all incident angles must be 120.
                for &(ti, pos) in &patch.vertex_index()[vertex] {
                    let tile = &patch.tiles()[ti];
                    let n = tile.vertices().len();
                    let v = &tile.vertices()[pos];
                    let to_prev = &tile.vertices()[(pos + n - 1) % n] - v;
                    let to_next = &tile.vertices()[(pos + 1) % n] - v;
                    let dot = to_prev.dot(&to_next);
                    // cos 120° = −1/2: dot = −|a||b|/2, so 4·dot² = |a|²|b|²
                    // and dot < 0.
                    let lhs = ExtScalar::from_int(4) * dot.square();
                    let rhs = to_prev.norm_sq() * to_next.norm_sq();
                    assert!(
                        dot.is_negative() && lhs == rhs,
                        "{family}: non-120 trivalent vertex"
                    );
                }
            }
        }
    }
    assert!(orders_seen.contains(&3) && orders_seen.contains(&4) && orders_seen.contains(&6));
    // A full fan around a 30° corner spans gallery distance 6, so order 12
    // appears two generations beyond the depth-4 patches checked above.
    let thirty = Family::ThirtyRight.canonical_polygon().unwrap();
    let deep = expand(&thirty, 6).verify();
    assert_eq!(deep.verdict, Verdict::Pass);
    assert!(
        deep.order_histogram().contains_key(&12),
        "order 12 must occur for the 30-right triangle"
    );
    finish(5, "positive tiling oracle", start, Duration::from_secs(60));
}

#[test]
fn criterion_6_negative_tiling_oracle() {
    let start = Instant::now();
    for (name, polygon) in corpus::all_impostors() {
        assert!(polygon.classify().is_err(), "{name} must be rejected");
        let report = expand(&polygon, 4).verify();
        assert_eq!(report.verdict, Verdict::Fail, "{name} must fail the oracle");
    }
    finish(6, "negative tiling oracle", start, Duration::from_secs(60));
}

#[test]
fn criterion_7_parameterization_cross_check() {
    let start = Instant::now();
    let nonneg = |p: [i64; 4], e: i64| p.iter().all(|&x| (0..=e).contains(&x));
    let mut triangle: BTreeSet<[i64; 4]> = BTreeSet::new();
    for t in 0..=1 {
        for s in -50..=50 {
            let p = param_solution_triangle(s, t);
            if nonneg(p, 3) {
                triangle.insert(p);
            }
        }
    }
    let expected: BTreeSet<[i64; 4]> = solve_system(3)
        .unwrap()
        .iter()
        .map(|s| [s.a as i64, s.b as i64, s.c as i64, s.d as i64])
        .collect();
    assert_eq!(triangle, expected);

    let mut quad: BTreeSet<[i64; 4]> = BTreeSet::new();
    for t in 0..=4 {
        for s in -50..=50 {
            let p = param_solution_quad(s, t);
            if nonneg(p, 4) {
                quad.insert(p);
            }
        }
    }
    let expected: BTreeSet<[i64; 4]> = solve_system(4)
        .unwrap()
        .iter()
        .map(|s| [s.a as i64, s.b as i64, s.c as i64, s.d as i64])
        .collect();
    assert_eq!(quad, expected);
    finish(
        7,
        "parameterization cross-check",
        start,
        Duration::from_secs(1),
    );
}

fn random_scalar(rng: &mut Lcg) -> ExtScalar {
    let mut coeff = || Rational::new(rng.signed(50).into(), (1 + rng.below(16) as i64).into());
    ExtScalar::new(coeff(), coeff(), coeff(), coeff())
}

#[test]
fn criterion_8_field_property_suite() {
    let start = Instant::now();
    let mut rng = Lcg(0x5eed_0008);
    let mut checks = 0u32;

    // Field axioms: 2500 randomized exact identities.
    for _ in 0..2500 {
        let (x, y, z) = (
            random_scalar(&mut rng),
            random_scalar(&mut rng),
            random_scalar(&mut rng),
        );
        assert_eq!((&x + &y) + &z, &x + &(&y + &z));
        assert_eq!(&x + &y, &y + &x);
        assert_eq!((&x * &y) * &z, &x * &(&y * &z));
        assert_eq!(&x * &y, &y * &x);
        assert_eq!(&x * &(&y + &z), &x * &y + &x * &z);
        assert_eq!(&x + &ExtScalar::zero(), x.clone());
        assert_eq!(&x * &ExtScalar::one(), x.clone());
        assert_eq!(&x + &(-&x), ExtScalar::zero());
        checks += 1;
    }

    // Multiplicative inverses: 2500 exact x · x⁻¹ = 1.
    for _ in 0..2500 {
        let x = random_scalar(&mut rng);
        if x.is_zero() {
            assert!(x.inv().is_err());
        } else {
            assert_eq!(&x * &x.inv().unwrap(), ExtScalar::one());
        }
        checks += 1;
    }

    // Sign consistency: 2500 checks of antisymmetry and squares.
    for _ in 0..2500 {
        let x = random_scalar(&mut rng);
        assert_eq!(x.sign(), -(-&x).sign());
        assert!(matches!(x.square().sign(), 0 | 1));
        assert_eq!(x.sign() == 0, x.is_zero());
        checks += 1;
    }

    // Isometries preserve squared distances exactly: 2500 checks.
    let mirror = Isometry::reflection_across(
        &Point2::from_ints(0, 0),
        &Point2::new(ExtScalar::sqrt3(), ExtScalar::one()),
    )
    .unwrap();
    for i in 0..2500u32 {
        let p = Point2::new(random_scalar(&mut rng), random_scalar(&mut rng));
        let q = Point2::new(random_scalar(&mut rng), random_scalar(&mut rng));
        let f = Isometry::rotation_times_15((i % 24) as i32).compose(&mirror);
        let dist = |a: &Point2, b: &Point2| (a - b).norm_sq();
        assert_eq!(dist(&f.apply(&p), &f.apply(&q)), dist(&p, &q));
        checks += 1;
    }

    assert_eq!(checks, 10_000);
    finish(
        8,
        "10,000 randomized exact field checks",
        start,
        Duration::from_secs(30),
    );
}

#[test]
fn criterion_9_figure_reproduction() {
    let start = Instant::now();
    let dir = std::env::temp_dir().join(format!("edgetess-accept-{}", std::process::id()));
    let (code, out) = run_binary(&["catalog", "--out-dir", dir.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 8, "catalog must emit exactly 8 files");

    let names_and_families = edgetess::cli::catalog_file_names();
    for (name, family) in &names_and_families {
        let text = std::fs::read_to_string(dir.join(format!("{name}.svg")))
            .unwrap_or_else(|_| panic!("{name}.svg missing"));
        common::check_xml(&text).unwrap_or_else(|e| panic!("{name}.svg: {e}"));
        let seed = family.canonical_polygon().unwrap();
        let patch = expand(&seed, 4);
        assert_eq!(
            text.matches("<path").count(),
            patch.tile_count(),
            "{name}.svg path count"
        );
    }

    // The 120°-bearing families are exactly the four of the 120° case:
    // 120-isosceles triangle, 60-rhombus, 60-90-120 kite, regular hexagon.
    let with_120: BTreeSet<&str> = names_and_families
        .iter()
        .filter(|(_, family)| {
            family
                .canonical_polygon()
                .unwrap()
                .interior_angles()
                .unwrap()
                .iter()
                .any(|a| a.degrees() == 120)
        })
        .map(|(name, _)| *name)
        .collect();
    let expected: BTreeSet<&str> = [
        "one-twenty-isosceles",
        "sixty-rhombus",
        "kite-60-90-120-90",
        "regular-hexagon",
    ]
    .into_iter()
    .collect();
    assert_eq!(with_120, expected);

    std::fs::remove_dir_all(&dir).ok();
    finish(9, "figure reproduction", start, Duration::from_secs(60));
}

/// Classifier/oracle agreement across the whole corpus (the spec's
/// cross-route invariant): classify accepts iff the oracle passes at
/// desk-scale depth.
#[test]
fn classifier_and_oracle_agree_on_the_corpus() {
    let mut seeds: Vec<(String, Polygon, bool)> = Family::catalog()
        .into_iter()
        .map(|f| (f.to_string(), f.canonical_polygon().unwrap(), true))
        .collect();
    seeds.extend(
        corpus::all_impostors()
            .into_iter()
            .map(|(name, p)| (name.to_string(), p, false)),
    );
    for (name, polygon, should_pass) in seeds {
        let accepted = polygon.classify().is_ok();
        let verdict = expand(&polygon, 4).verify().verdict;
        assert_eq!(accepted, should_pass, "{name} classify");
        assert_eq!(verdict == Verdict::Pass, should_pass, "{name} oracle");
    }
}

/// Expansion monotonicity: one more generation never removes tiles and
/// never flips a passing verdict.
#[test]
fn expansion_is_monotone_for_families() {
    for family in Family::catalog() {
        let seed = family.canonical_polygon().unwrap();
        let shallow = expand(&seed, 3);
        let deep = expand(&seed, 4);
        let shallow_keys: BTreeSet<_> = shallow.tile_keys().into_iter().cloned().collect();
        let deep_keys: BTreeSet<_> = deep.tile_keys().into_iter().cloned().collect();
        assert!(shallow_keys.is_subset(&deep_keys), "{family}");
        assert_eq!(shallow.verify().verdict, Verdict::Pass, "{family} at 3");
        assert_eq!(deep.verify().verdict, Verdict::Pass, "{family} at 4");
    }
}

/// The polygon file format round-trips the corpus through the data files
/// used by the CLI tests.
#[test]
fn corpus_data_files_match_the_builders() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data");
    let read = |name: &str| {
        edgetess::io::read_polygon_file(&dir.join(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
    };
    assert_eq!(
        read("house_pentagon.poly").vertices(),
        corpus::house_pentagon().vertices()
    );
    assert_eq!(
        read("skew_quad.poly").vertices(),
        corpus::skew_quad_60_90_120_90().vertices()
    );
    assert_eq!(
        read("rhombus_30_150.poly").vertices(),
        corpus::rhombus_30_150().vertices()
    );
    assert_eq!(
        read("triangle_45_60_75.poly").vertices(),
        corpus::triangle_45_60_75().vertices()
    );
}
