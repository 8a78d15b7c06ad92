//! The eight families of edge-tessellating polygons: canonical exact
//! representatives, and a classifier that decides membership for arbitrary
//! exact polygons.
//!
//! A polygon can generate an edge tessellation only if
//!
//! 1. every interior angle lies in {30°, 45°, 60°, 90°, 120°},
//! 2. it has 3, 4 or 6 edges, and
//! 3. it is mirror-symmetric about the angle bisector at every 120°
//!    vertex (three copies meet there, an odd number, so the reflection
//!    closure forces the kaleidoscopic condition).
//!
//! Together with side-length ratios these conditions pin down exactly eight
//! similarity families. [`Polygon::classify`] runs the decision procedure;
//! the tiling engine later confirms the accepted shapes (and refutes the
//! rejected ones) completely independently.

use std::fmt;

use thiserror::Error;

use crate::geom::{classify_angle, AngleDeg, GeomError, Isometry, Point2, Vec2};
use crate::scalar::{ExtScalar, Rational};
use crate::solver::ALLOWED_ANGLES;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolygonError {
    #[error("a polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("consecutive vertices {0} and {1} coincide")]
    RepeatedVertex(usize, usize),
    #[error("vertices are collinear: the polygon has zero area")]
    ZeroArea,
    #[error("reflex corner at vertex {0}: polygon is not convex")]
    NotConvex(usize),
    #[error("straight (180°) angle at vertex {0}")]
    StraightAngle(usize),
    #[error("edges {0} and {1} intersect: boundary is not simple")]
    SelfIntersecting(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("rectangle aspect ratio must be positive")]
    NonpositiveAspect,
}

/// Why a polygon was rejected by [`Polygon::classify`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rejection {
    /// Some interior angle is not in {30°, 45°, 60°, 90°, 120°}.
    AngleSet,
    /// Edge count is not 3, 4 or 6. Pentagons always land here: no
    /// combination of the allowed non-120° angles sums correctly, and the
    /// 120°-bearing candidates fail the tiling oracle.
    EdgeCount { edges: usize },
    /// A 120° vertex is not symmetric about its angle bisector.
    Kaleidoscope { vertex: usize },
    /// Angles pass but side-length ratios match no family.
    NoFamily,
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::AngleSet => {
                write!(
                    f,
                    "angle-set: an interior angle is outside {{30,45,60,90,120}}"
                )
            }
            Rejection::EdgeCount { edges } => {
                write!(
                    f,
                    "edge-count: {edges} edges, but only 3, 4 or 6 are possible"
                )
            }
            Rejection::Kaleidoscope { vertex } => write!(
                f,
                "kaleidoscope: no bisector symmetry at the 120° vertex {vertex}"
            ),
            Rejection::NoFamily => {
                write!(f, "no-family: side ratios match none of the eight families")
            }
        }
    }
}

/// A convex simple polygon with exact vertices, stored counterclockwise.
///
/// Construction validates everything the rest of the crate relies on:
/// at least three vertices, consecutive vertices distinct, strictly convex
/// corners (no straight angles), simple boundary, positive signed area.
/// Clockwise input is accepted and reversed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polygon {
    vertices: Vec<Point2>,
}

impl Polygon {
    pub fn new(mut vertices: Vec<Point2>) -> Result<Polygon, PolygonError> {
        let n = vertices.len();
        if n < 3 {
            return Err(PolygonError::TooFewVertices(n));
        }
        for i in 0..n {
            let j = (i + 1) % n;
            if vertices[i] == vertices[j] {
                return Err(PolygonError::RepeatedVertex(i, j));
            }
        }
        match signed_area_twice(&vertices).sign() {
            0 => return Err(PolygonError::ZeroArea),
            -1 => vertices.reverse(),
            _ => {}
        }
        for i in 0..n {
            let prev = &vertices[(i + n - 1) % n];
            let v = &vertices[i];
            let next = &vertices[(i + 1) % n];
            match (v - prev).cross(&(next - v)).sign() {
                1 => {}
                0 => return Err(PolygonError::StraightAngle(i)),
                _ => return Err(PolygonError::NotConvex(i)),
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if j == i + 1 || (i == 0 && j == n - 1) {
                    continue; // adjacent edges share a vertex by design
                }
                let (a, b) = (&vertices[i], &vertices[(i + 1) % n]);
                let (c, d) = (&vertices[j], &vertices[(j + 1) % n]);
                if segments_touch(a, b, c, d) {
                    return Err(PolygonError::SelfIntersecting(i, j));
                }
            }
        }
        Ok(Polygon { vertices })
    }

    /// Convenience constructor from integer coordinate pairs.
    pub fn from_int_coords(coords: &[(i64, i64)]) -> Result<Polygon, PolygonError> {
        Polygon::new(
            coords
                .iter()
                .map(|&(x, y)| Point2::from_ints(x, y))
                .collect(),
        )
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Edge vector from vertex `i` to vertex `i+1` (cyclic).
    pub fn edge_vector(&self, i: usize) -> Vec2 {
        let n = self.vertices.len();
        &self.vertices[(i + 1) % n] - &self.vertices[i]
    }

    /// Squared length of edge `i`; lengths themselves may leave the field.
    pub fn side_sq(&self, i: usize) -> ExtScalar {
        self.edge_vector(i).norm_sq()
    }

    /// Per-vertex interior angles, or `None` if any vertex angle is not a
    /// multiple of 15°.
    pub fn interior_angles(&self) -> Option<Vec<AngleDeg>> {
        let n = self.vertices.len();
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let v = &self.vertices[i];
            let to_prev = &self.vertices[(i + n - 1) % n] - v;
            let to_next = &self.vertices[(i + 1) % n] - v;
            // Counterclockwise polygons: the interior angle opens from the
            // outgoing ray to the incoming ray.
            match classify_angle(&to_next, &to_prev) {
                Ok(Some(angle)) => out.push(angle),
                Ok(None) => return None,
                Err(GeomError::ZeroVector) => unreachable!("validated polygon"),
                Err(e) => unreachable!("unexpected geometry error: {e}"),
            }
        }
        Some(out)
    }

    /// True iff reflecting the polygon across the interior angle bisector at
    /// vertex `i` maps the vertex set onto itself, exactly.
    ///
    /// A convex polygon invariant under that mirror must swap the two edges
    /// at `i`, so unequal squared edge lengths settle the question without
    /// ever constructing the bisector (whose direction can leave the field
    /// in the unequal case). With equal lengths the bisector direction is
    /// the vector sum of the two edge rays.
    pub fn has_bisector_symmetry(&self, i: usize) -> bool {
        let n = self.vertices.len();
        assert!(i < n, "vertex index {i} out of range for {n}-gon");
        let v = &self.vertices[i];
        let to_prev = &self.vertices[(i + n - 1) % n] - v;
        let to_next = &self.vertices[(i + 1) % n] - v;
        if to_prev.norm_sq() != to_next.norm_sq() {
            return false;
        }
        let axis = &to_prev + &to_next;
        debug_assert!(!axis.is_zero(), "straight angles are excluded");
        let mirror =
            Isometry::reflection_across(v, &(v + &axis)).expect("bisector axis is nondegenerate");
        let mut image: Vec<Point2> = self.vertices.iter().map(|p| mirror.apply(p)).collect();
        let mut original = self.vertices.clone();
        image.sort();
        original.sort();
        image == original
    }

    /// Decide which of the eight families this polygon belongs to, or why
    /// it cannot generate an edge tessellation.
    ///
    /// The result is invariant under rotation/reversal of the vertex list
    /// and under exact similarity transforms.
    pub fn classify(&self) -> Result<Family, Rejection> {
        let angles = self.interior_angles().ok_or(Rejection::AngleSet)?;
        let degs: Vec<u16> = angles.iter().map(|a| a.degrees()).collect();
        if degs.iter().any(|d| !ALLOWED_ANGLES.contains(d)) {
            return Err(Rejection::AngleSet);
        }
        let e = degs.len();
        if !matches!(e, 3 | 4 | 6) {
            return Err(Rejection::EdgeCount { edges: e });
        }
        for (i, &d) in degs.iter().enumerate() {
            if d == 120 && !self.has_bisector_symmetry(i) {
                return Err(Rejection::Kaleidoscope { vertex: i });
            }
        }
        let sides: Vec<ExtScalar> = (0..e).map(|i| self.side_sq(i)).collect();
        let mut sorted = degs.clone();
        sorted.sort_unstable();
        match e {
            3 => match sorted[..] {
                [60, 60, 60] => Ok(Family::Equilateral),
                [30, 60, 90] => Ok(Family::ThirtyRight),
                [45, 45, 90] => Ok(Family::IsoscelesRight),
                [30, 30, 120] => Ok(Family::OneTwentyIsosceles),
                _ => Err(Rejection::NoFamily),
            },
            4 => self.classify_quadrilateral(&degs, &sorted, &sides),
            6 => {
                if sorted.iter().all(|&d| d == 120) && all_equal(&sides) {
                    Ok(Family::RegularHexagon)
                } else {
                    Err(Rejection::NoFamily)
                }
            }
            _ => unreachable!(),
        }
    }

    fn classify_quadrilateral(
        &self,
        degs: &[u16],
        sorted: &[u16],
        sides: &[ExtScalar],
    ) -> Result<Family, Rejection> {
        match sorted {
            [90, 90, 90, 90] => {
                // An equiangular quadrilateral is a rectangle; successive
                // edges are exact quarter turns, so the aspect ratio
                // |s1|/|s0| stays in the field.
                let s0 = self.edge_vector(0);
                let s1 = self.edge_vector(1);
                let k = &s0.cross(&s1) / &s0.norm_sq();
                debug_assert!(k.is_positive());
                let aspect = if (k.square() - ExtScalar::one()).sign() > 0 {
                    k.inv().expect("positive ratio")
                } else {
                    k
                };
                Ok(Family::Rectangle { aspect })
            }
            [60, 60, 120, 120] => {
                let alternating = degs[0] == degs[2] && degs[1] == degs[3];
                if alternating && all_equal(sides) {
                    Ok(Family::SixtyRhombus)
                } else {
                    Err(Rejection::NoFamily)
                }
            }
            [60, 90, 90, 120] => {
                let apex = degs.iter().position(|&d| d == 60).expect("60 present");
                let at = |k: usize| degs[(apex + k) % 4];
                let side = |k: i64| &sides[(apex as i64 + k).rem_euclid(4) as usize];
                let angle_order = at(1) == 90 && at(2) == 120 && at(3) == 90;
                // The two long sides meet at the 60° apex, the two short
                // ones at the opposite 120° vertex.
                if angle_order && side(-1) == side(0) && side(1) == side(2) {
                    Ok(Family::Kite609012090)
                } else {
                    Err(Rejection::NoFamily)
                }
            }
            _ => Err(Rejection::NoFamily),
        }
    }
}

fn all_equal(values: &[ExtScalar]) -> bool {
    values.windows(2).all(|w| w[0] == w[1])
}

/// Twice the signed area (shoelace), positive for counterclockwise order.
pub fn signed_area_twice(vertices: &[Point2]) -> ExtScalar {
    let n = vertices.len();
    let mut sum = ExtScalar::zero();
    for i in 0..n {
        let p = &vertices[i];
        let q = &vertices[(i + 1) % n];
        sum = sum + (&p.x * &q.y - &q.x * &p.y);
    }
    sum
}

/// Do closed segments AB and CD share any point? Exact, all cases.
fn segments_touch(a: &Point2, b: &Point2, c: &Point2, d: &Point2) -> bool {
    let ab = b - a;
    let cd = d - c;
    let o1 = ab.cross(&(c - a)).sign();
    let o2 = ab.cross(&(d - a)).sign();
    let o3 = cd.cross(&(a - c)).sign();
    let o4 = cd.cross(&(b - c)).sign();
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    (o1 == 0 && on_segment(c, a, b))
        || (o2 == 0 && on_segment(d, a, b))
        || (o3 == 0 && on_segment(a, c, d))
        || (o4 == 0 && on_segment(b, c, d))
}

/// Is `p` (already known collinear with AB) inside the closed segment?
fn on_segment(p: &Point2, a: &Point2, b: &Point2) -> bool {
    (a - p).dot(&(b - p)).sign() <= 0
}

/// One of the eight similarity families of the catalog. Every family but
/// the rectangle is a single similarity class; rectangles carry their
/// aspect ratio, normalized so that `aspect <= 1` (the class {r, 1/r}).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[allow(clippy::large_enum_variant)]
pub enum Family {
    Equilateral,
    ThirtyRight,
    IsoscelesRight,
    OneTwentyIsosceles,
    Rectangle { aspect: ExtScalar },
    SixtyRhombus,
    Kite609012090,
    RegularHexagon,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Equilateral => "Equilateral",
            Family::ThirtyRight => "ThirtyRight",
            Family::IsoscelesRight => "IsoscelesRight",
            Family::OneTwentyIsosceles => "OneTwentyIsosceles",
            Family::Rectangle { .. } => "Rectangle",
            Family::SixtyRhombus => "SixtyRhombus",
            Family::Kite609012090 => "Kite609012090",
            Family::RegularHexagon => "RegularHexagon",
        }
    }

    /// The eight catalog entries, rectangles represented at aspect 1/2.
    pub fn catalog() -> Vec<Family> {
        vec![
            Family::Equilateral,
            Family::ThirtyRight,
            Family::IsoscelesRight,
            Family::OneTwentyIsosceles,
            Family::Rectangle {
                aspect: ExtScalar::from_ratio(1, 2),
            },
            Family::SixtyRhombus,
            Family::Kite609012090,
            Family::RegularHexagon,
        ]
    }

    /// An exact representative with fixed coordinates. Errors only for a
    /// rectangle with nonpositive aspect ratio.
    pub fn canonical_polygon(&self) -> Result<Polygon, CatalogError> {
        let s3 = ExtScalar::sqrt3;
        let i = ExtScalar::from_int;
        let half = Rational::new(1.into(), 2.into());
        let verts: Vec<Point2> = match self {
            Family::Equilateral => vec![
                Point2::from_ints(0, 0),
                Point2::from_ints(2, 0),
                Point2::new(i(1), s3()),
            ],
            Family::ThirtyRight => vec![
                Point2::from_ints(0, 0),
                Point2::new(s3(), i(0)),
                Point2::from_ints(0, 1),
            ],
            Family::IsoscelesRight => vec![
                Point2::from_ints(0, 0),
                Point2::from_ints(1, 0),
                Point2::from_ints(0, 1),
            ],
            Family::OneTwentyIsosceles => vec![
                Point2::from_ints(0, 0),
                Point2::new(i(2) * s3(), i(0)),
                Point2::new(s3(), i(1)),
            ],
            Family::Rectangle { aspect } => {
                if aspect.sign() <= 0 {
                    return Err(CatalogError::NonpositiveAspect);
                }
                vec![
                    Point2::from_ints(0, 0),
                    Point2::from_ints(1, 0),
                    Point2::new(i(1), aspect.clone()),
                    Point2::new(i(0), aspect.clone()),
                ]
            }
            Family::SixtyRhombus => vec![
                Point2::from_ints(0, 0),
                Point2::from_ints(1, 0),
                Point2::new(ExtScalar::from_ratio(3, 2), s3().scale(&half)),
                Point2::new(ExtScalar::from_ratio(1, 2), s3().scale(&half)),
            ],
            Family::Kite609012090 => vec![
                Point2::from_ints(0, 0),
                Point2::new(i(3), -s3()),
                Point2::from_ints(4, 0),
                Point2::new(i(3), s3()),
            ],
            Family::RegularHexagon => vec![
                Point2::from_ints(2, 0),
                Point2::new(i(1), s3()),
                Point2::new(i(-1), s3()),
                Point2::from_ints(-2, 0),
                Point2::new(i(-1), -s3()),
                Point2::new(i(1), -s3()),
            ],
        };
        Ok(Polygon::new(verts).expect("canonical coordinates are valid"))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Rectangle { aspect } => write!(f, "Rectangle ratio {aspect}"),
            other => write!(f, "{}", other.name()),
        }
    }
}
