//! A fixed corpus of impostor polygons: shapes that look plausible (convex,
//! simple, mostly 15°-granular angles) but do not generate edge
//! tessellations. The classifier must reject each one, and the tiling
//! oracle must fail each one at desk-scale depth — the two refutation
//! routes stay independent.
//!
//! Every builder validates its own angle multiset before handing the
//! polygon out, so a typo in a coordinate cannot silently weaken a test.

use crate::catalog::Polygon;
use crate::geom::Point2;
use crate::scalar::{ExtScalar, Rational};

fn assert_angles(p: &Polygon, expect: &[u16], what: &str) {
    let got: Vec<u16> = p
        .interior_angles()
        .unwrap_or_else(|| panic!("{what}: angles must be 15°-granular"))
        .iter()
        .map(|a| a.degrees())
        .collect();
    assert_eq!(got, expect, "{what}: unexpected angle sequence");
}

/// Scalene triangle with angles 45°, 60°, 75°. All angles are on the
/// 15° grid, but (45,60,75) solves no angle-count system.
pub fn triangle_45_60_75() -> Polygon {
    // Apex at the intersection of a 45° ray from the origin and a 120° ray
    // from (2,0): (3−√3, 3−√3).
    let apex = ExtScalar::from_int(3) - ExtScalar::sqrt3();
    let p = Polygon::new(vec![
        Point2::from_ints(0, 0),
        Point2::from_ints(2, 0),
        Point2::new(apex.clone(), apex),
    ])
    .expect("valid triangle");
    assert_angles(&p, &[45, 60, 75], "triangle_45_60_75");
    p
}

/// The 3-4-5 right triangle: its acute angles are not multiples of 15°.
pub fn right_triangle_3_4_5() -> Polygon {
    let p = Polygon::from_int_coords(&[(0, 0), (4, 0), (0, 3)]).expect("valid triangle");
    assert!(
        p.interior_angles().is_none(),
        "3-4-5 angles must be off the 15° grid"
    );
    p
}

/// The house-shaped pentagon with angles (90°, 90°, 120°, 120°, 120°):
/// the unique numeric candidate among pentagons, refuted by tiling.
/// Apex height 1 + √3/3 makes all three upper angles exactly 120°.
pub fn house_pentagon() -> Polygon {
    let third = Rational::new(1.into(), 3.into());
    let apex_y = ExtScalar::one() + ExtScalar::sqrt3().scale(&third);
    let p = Polygon::new(vec![
        Point2::from_ints(0, 0),
        Point2::from_ints(2, 0),
        Point2::from_ints(2, 1),
        Point2::new(ExtScalar::one(), apex_y),
        Point2::from_ints(0, 1),
    ])
    .expect("valid pentagon");
    assert_angles(&p, &[90, 90, 120, 120, 120], "house_pentagon");
    p
}

/// A rhombus with angles 30° and 150°; 150° exceeds the 120° cap.
pub fn rhombus_30_150() -> Polygon {
    let half = Rational::new(1.into(), 2.into());
    let dx = ExtScalar::sqrt3().scale(&half); // cos 30°
    let dy = ExtScalar::from_ratio(1, 2); // sin 30°
    let p = Polygon::new(vec![
        Point2::from_ints(0, 0),
        Point2::from_ints(1, 0),
        Point2::new(ExtScalar::one() + dx.clone(), dy.clone()),
        Point2::new(dx, dy),
    ])
    .expect("valid rhombus");
    assert_angles(&p, &[30, 150, 30, 150], "rhombus_30_150");
    p
}

/// A quadrilateral with the kite's angles (60°, 90°, 120°, 90°) but no
/// bisector symmetry at the 120° vertex: the sides there measure 5/2
/// and 1, so three copies cannot close around it edge-to-edge.
pub fn skew_quad_60_90_120_90() -> Polygon {
    let s3 = ExtScalar::sqrt3();
    let p = Polygon::new(vec![
        Point2::from_ints(0, 0),
        Point2::new(
            ExtScalar::from_ratio(9, 4),
            ExtScalar::from_ratio(-3, 4) * s3.clone(),
        ),
        Point2::new(
            ExtScalar::from_ratio(7, 2),
            ExtScalar::from_ratio(1, 2) * s3.clone(),
        ),
        Point2::new(ExtScalar::from_int(3), s3),
    ])
    .expect("valid quadrilateral");
    assert_angles(&p, &[60, 90, 120, 90], "skew_quad_60_90_120_90");
    let apex = 2; // the 120° vertex
    assert!(
        !p.has_bisector_symmetry(apex),
        "skew quad must break the kaleidoscopic condition"
    );
    p
}

/// The whole corpus, in a fixed order.
pub fn all_impostors() -> Vec<(&'static str, Polygon)> {
    vec![
        ("triangle-45-60-75", triangle_45_60_75()),
        ("right-triangle-3-4-5", right_triangle_3_4_5()),
        ("house-pentagon", house_pentagon()),
        ("rhombus-30-150", rhombus_30_150()),
        ("skew-quad-60-90-120-90", skew_quad_60_90_120_90()),
    ]
}
