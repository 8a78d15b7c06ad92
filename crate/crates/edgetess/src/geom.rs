//! Exact planar geometry: points, vectors, isometries and the angle
//! classifier for multiples of 15°.
//!
//! Angles are recognized through exact tangent ratios (`cross/dot` stays in
//! the coordinate field, cosines would not), so every predicate here is a
//! sign computation — there is no approximate path to fall back on.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Sub};

use thiserror::Error;

use crate::scalar::ExtScalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("zero vector has no direction")]
    ZeroVector,
    #[error("degenerate edge: endpoints coincide")]
    DegenerateEdge,
}

/// A point of the plane with coordinates in Q(√2, √3).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Point2 {
    pub x: ExtScalar,
    pub y: ExtScalar,
}

/// A displacement between points.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vec2 {
    pub dx: ExtScalar,
    pub dy: ExtScalar,
}

impl Point2 {
    pub fn new(x: ExtScalar, y: ExtScalar) -> Self {
        Point2 { x, y }
    }

    /// Integer-coordinate convenience constructor.
    pub fn from_ints(x: i64, y: i64) -> Self {
        Point2::new(ExtScalar::from_int(x), ExtScalar::from_int(y))
    }
}

impl Vec2 {
    pub fn new(dx: ExtScalar, dy: ExtScalar) -> Self {
        Vec2 { dx, dy }
    }

    pub fn is_zero(&self) -> bool {
        self.dx.is_zero() && self.dy.is_zero()
    }

    /// Exact dot product.
    pub fn dot(&self, other: &Vec2) -> ExtScalar {
        &self.dx * &other.dx + &self.dy * &other.dy
    }

    /// Exact 2D cross product; positive iff `other` is counterclockwise
    /// from `self` by less than 180°.
    pub fn cross(&self, other: &Vec2) -> ExtScalar {
        &self.dx * &other.dy - &self.dy * &other.dx
    }

    /// Squared Euclidean length (lengths themselves may leave the field).
    pub fn norm_sq(&self) -> ExtScalar {
        self.dot(self)
    }
}

impl Sub for &Point2 {
    type Output = Vec2;
    fn sub(self, rhs: &Point2) -> Vec2 {
        Vec2::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

impl Add<&Vec2> for &Point2 {
    type Output = Point2;
    fn add(self, rhs: &Vec2) -> Point2 {
        Point2::new(&self.x + &rhs.dx, &self.y + &rhs.dy)
    }
}

impl Add for &Vec2 {
    type Output = Vec2;
    fn add(self, rhs: &Vec2) -> Vec2 {
        Vec2::new(&self.dx + &rhs.dx, &self.dy + &rhs.dy)
    }
}

impl PartialOrd for Point2 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Point2 {
    /// Numeric lexicographic order on (x, y); used for canonical signatures.
    fn cmp(&self, other: &Self) -> Ordering {
        self.x.cmp(&other.x).then_with(|| self.y.cmp(&other.y))
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A plane isometry stored as an exact orthogonal linear part plus a
/// translation. `parity` is the determinant of the linear part: +1 for
/// rotations/translations, −1 for reflections and glide reflections.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Isometry {
    m11: ExtScalar,
    m12: ExtScalar,
    m21: ExtScalar,
    m22: ExtScalar,
    tx: ExtScalar,
    ty: ExtScalar,
    parity: i8,
}

impl Isometry {
    fn new_checked(
        m11: ExtScalar,
        m12: ExtScalar,
        m21: ExtScalar,
        m22: ExtScalar,
        tx: ExtScalar,
        ty: ExtScalar,
    ) -> Self {
        let det = &m11 * &m22 - &m12 * &m21;
        let parity = match det.sign() {
            1 => 1,
            -1 => -1,
            _ => panic!("isometry with singular linear part"),
        };
        let iso = Isometry {
            m11,
            m12,
            m21,
            m22,
            tx,
            ty,
            parity,
        };
        debug_assert!(iso.columns_orthonormal(), "linear part must be orthogonal");
        debug_assert_eq!(
            ExtScalar::from_int(parity as i64),
            &iso.m11 * &iso.m22 - &iso.m12 * &iso.m21
        );
        iso
    }

    fn columns_orthonormal(&self) -> bool {
        let one = ExtScalar::one();
        (&self.m11 * &self.m11 + &self.m21 * &self.m21) == one
            && (&self.m12 * &self.m12 + &self.m22 * &self.m22) == one
            && (&self.m11 * &self.m12 + &self.m21 * &self.m22).is_zero()
    }

    pub fn identity() -> Self {
        Isometry::new_checked(
            ExtScalar::one(),
            ExtScalar::zero(),
            ExtScalar::zero(),
            ExtScalar::one(),
            ExtScalar::zero(),
            ExtScalar::zero(),
        )
    }

    pub fn translation(v: &Vec2) -> Self {
        Isometry::new_checked(
            ExtScalar::one(),
            ExtScalar::zero(),
            ExtScalar::zero(),
            ExtScalar::one(),
            v.dx.clone(),
            v.dy.clone(),
        )
    }

    /// Counterclockwise rotation about the origin by `k` times 15°, the
    /// angle granularity whose sines and cosines live in the field.
    pub fn rotation_times_15(k: i32) -> Self {
        // cos 15° = (√6 + √2)/4, sin 15° = (√6 − √2)/4.
        let quarter = crate::scalar::Rational::new(1.into(), 4.into());
        let cos15 = (ExtScalar::sqrt6() + ExtScalar::sqrt2()).scale(&quarter);
        let sin15 = (ExtScalar::sqrt6() - ExtScalar::sqrt2()).scale(&quarter);
        let step = Isometry::new_checked(
            cos15.clone(),
            -sin15.clone(),
            sin15,
            cos15,
            ExtScalar::zero(),
            ExtScalar::zero(),
        );
        let mut out = Isometry::identity();
        let times = k.rem_euclid(24);
        for _ in 0..times {
            out = step.compose(&out);
        }
        out
    }

    /// The unique orientation-reversing isometry fixing the line through
    /// `a` and `b`. Errors if the endpoints coincide.
    pub fn reflection_across(a: &Point2, b: &Point2) -> Result<Self, GeomError> {
        let d = b - a;
        if d.is_zero() {
            return Err(GeomError::DegenerateEdge);
        }
        let n = d.norm_sq();
        let inv_n = n.inv().expect("nonzero direction has nonzero norm");
        let dx2 = &d.dx * &d.dx;
        let dy2 = &d.dy * &d.dy;
        let dxy = &d.dx * &d.dy;
        let m11 = (&dx2 - &dy2) * &inv_n;
        let m12 = (&dxy + &dxy) * &inv_n;
        let m21 = m12.clone();
        let m22 = (&dy2 - &dx2) * &inv_n;
        // Translation chosen so that `a` is a fixed point.
        let tx = &a.x - &(&m11 * &a.x + &m12 * &a.y);
        let ty = &a.y - &(&m21 * &a.x + &m22 * &a.y);
        Ok(Isometry::new_checked(m11, m12, m21, m22, tx, ty))
    }

    /// The isometry applying `inner` first, then `self`.
    pub fn compose(&self, inner: &Isometry) -> Isometry {
        let m11 = &self.m11 * &inner.m11 + &self.m12 * &inner.m21;
        let m12 = &self.m11 * &inner.m12 + &self.m12 * &inner.m22;
        let m21 = &self.m21 * &inner.m11 + &self.m22 * &inner.m21;
        let m22 = &self.m21 * &inner.m12 + &self.m22 * &inner.m22;
        let tx = &self.m11 * &inner.tx + &self.m12 * &inner.ty + &self.tx;
        let ty = &self.m21 * &inner.tx + &self.m22 * &inner.ty + &self.ty;
        Isometry::new_checked(m11, m12, m21, m22, tx, ty)
    }

    pub fn apply(&self, p: &Point2) -> Point2 {
        Point2::new(
            &self.m11 * &p.x + &self.m12 * &p.y + &self.tx,
            &self.m21 * &p.x + &self.m22 * &p.y + &self.ty,
        )
    }

    pub fn apply_vec(&self, v: &Vec2) -> Vec2 {
        Vec2::new(
            &self.m11 * &v.dx + &self.m12 * &v.dy,
            &self.m21 * &v.dx + &self.m22 * &v.dy,
        )
    }

    /// Determinant of the linear part: +1 or −1.
    pub fn parity(&self) -> i8 {
        self.parity
    }
}

/// An angle in degrees, always a positive multiple of 15 below 360 when
/// produced by [`classify_angle`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AngleDeg(u16);

impl AngleDeg {
    pub fn degrees(self) -> u16 {
        self.0
    }
}

impl fmt::Display for AngleDeg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}°", self.0)
    }
}

/// Exact tangents of 15°, 30°, 45°, 60°, 75° — the full table needed to
/// recognize every angle at 15° granularity within a quadrant.
fn tangent_table() -> [(ExtScalar, u16); 5] {
    let third = crate::scalar::Rational::new(1.into(), 3.into());
    [
        (ExtScalar::from_int(2) - ExtScalar::sqrt3(), 15),
        (ExtScalar::sqrt3().scale(&third), 30),
        (ExtScalar::one(), 45),
        (ExtScalar::sqrt3(), 60),
        (ExtScalar::from_int(2) + ExtScalar::sqrt3(), 75),
    ]
}

/// Acute angle φ ∈ {15°,…,75°} with tan φ = `num`/`den`, given both positive.
fn match_acute(num: &ExtScalar, den: &ExtScalar) -> Option<u16> {
    tangent_table()
        .into_iter()
        .find(|(t, _)| num == &(den * t))
        .map(|(_, deg)| deg)
}

/// The angle from `u` to `v`, measured counterclockwise in (0°, 360°),
/// returned iff it is a multiple of 15°. The quadrant comes from the sign
/// pair (sign dot, sign cross); within a quadrant the exact tangent ratio
/// is compared against the 15°-granular tangent table. `Ok(None)` means the
/// angle exists but is not a multiple of 15° (or is 0°, outside the range).
pub fn classify_angle(u: &Vec2, v: &Vec2) -> Result<Option<AngleDeg>, GeomError> {
    if u.is_zero() || v.is_zero() {
        return Err(GeomError::ZeroVector);
    }
    let d = u.dot(v);
    let c = u.cross(v);
    let deg = match (d.sign(), c.sign()) {
        (1, 0) => None, // parallel, angle 0: outside (0°, 360°)
        (-1, 0) => Some(180),
        (0, 1) => Some(90),
        (0, -1) => Some(270),
        (1, 1) => match_acute(&c, &d),
        (-1, 1) => match_acute(&c, &-&d).map(|phi| 180 - phi),
        (-1, -1) => match_acute(&-&c, &-&d).map(|phi| 180 + phi),
        (1, -1) => match_acute(&-&c, &d).map(|phi| 360 - phi),
        _ => unreachable!("nonzero vectors cannot have dot = cross = 0"),
    };
    Ok(deg.map(AngleDeg))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(n: i64) -> ExtScalar {
        ExtScalar::from_int(n)
    }

    fn pt(x: i64, y: i64) -> Point2 {
        Point2::from_ints(x, y)
    }

    fn vec(dx: ExtScalar, dy: ExtScalar) -> Vec2 {
        Vec2::new(dx, dy)
    }

    #[test]
    fn dot_and_cross_basics() {
        let ex = vec(s(1), s(0));
        let ey = vec(s(0), s(1));
        assert!(ex.dot(&ey).is_zero());
        assert_eq!(
            vec(ExtScalar::sqrt2(), s(0)).dot(&vec(ExtScalar::sqrt2(), s(0))),
            s(2)
        );
        assert_eq!(
            vec(s(1), ExtScalar::sqrt3()).dot(&vec(s(1), ExtScalar::sqrt3())),
            s(4)
        );
        assert_eq!(ex.cross(&ey), s(1));
        let u = vec(s(3), ExtScalar::sqrt3());
        assert!(u.cross(&u).is_zero());
        assert_eq!(ex.cross(&vec(ExtScalar::sqrt3(), s(1))), s(1));
    }

    #[test]
    fn reflection_in_axes() {
        let mirror_y = Isometry::reflection_across(&pt(0, 0), &pt(0, 1)).unwrap();
        assert_eq!(mirror_y.apply(&pt(1, 0)), pt(-1, 0));
        assert_eq!(mirror_y.parity(), -1);

        let mirror_x = Isometry::reflection_across(&pt(0, 0), &pt(1, 0)).unwrap();
        let p = Point2::new(ExtScalar::sqrt3(), s(1));
        assert_eq!(mirror_x.apply(&p), Point2::new(ExtScalar::sqrt3(), s(-1)));

        let diagonal = Isometry::reflection_across(&pt(0, 0), &pt(1, 1)).unwrap();
        assert_eq!(diagonal.apply(&pt(1, 0)), pt(0, 1));

        assert_eq!(
            Isometry::reflection_across(&pt(2, 2), &pt(2, 2)),
            Err(GeomError::DegenerateEdge)
        );
    }

    #[test]
    fn composing_mirrors_at_60_degrees_gives_rotation_120() {
        // Mirror lines through the origin at 0° and 60°; reflecting first in
        // the x-axis and then in the 60° line rotates by 120°.
        let r0 = Isometry::reflection_across(&pt(0, 0), &pt(1, 0)).unwrap();
        let p60 = Point2::new(s(1), ExtScalar::sqrt3());
        let r60 = Isometry::reflection_across(&pt(0, 0), &p60).unwrap();
        let rot = r60.compose(&r0);
        assert_eq!(rot.parity(), 1);
        let image = rot.apply(&pt(1, 0));
        let half = crate::scalar::Rational::new(1.into(), 2.into());
        assert_eq!(image.x, ExtScalar::from_ratio(-1, 2));
        assert_eq!(image.y, ExtScalar::sqrt3().scale(&half));
        // Same rotation straight from the 15° table.
        assert_eq!(rot, Isometry::rotation_times_15(8));
    }

    #[test]
    fn apply_identity_and_rotation() {
        let p = Point2::new(ExtScalar::sqrt2(), ExtScalar::sqrt6());
        assert_eq!(Isometry::identity().apply(&p), p);
        let rot120 = Isometry::rotation_times_15(8);
        let image = rot120.apply(&pt(1, 0));
        assert_eq!(image.x, ExtScalar::from_ratio(-1, 2));
    }

    #[test]
    fn classify_table_angles() {
        let ex = vec(s(1), s(0));
        let check = |v: Vec2, expect: u16| {
            assert_eq!(
                classify_angle(&ex, &v).unwrap().map(AngleDeg::degrees),
                Some(expect)
            );
        };
        check(vec(s(0), s(1)), 90);
        check(vec(ExtScalar::sqrt3(), s(1)), 30);
        check(vec(s(1), s(1)), 45);
        check(vec(s(1), ExtScalar::sqrt3()), 60);
        check(vec(s(-1), ExtScalar::sqrt3()), 120);
        check(vec(s(-1), s(0)), 180);
        check(vec(s(-1), s(-1)), 225);
        check(vec(s(0), s(-1)), 270);
        check(vec(s(1), s(-1)), 315);
        check(vec(ExtScalar::sqrt3(), s(-1)), 330);
        // 15° and 75°: tangents 2−√3 and 2+√3.
        check(vec(s(1), s(2) - ExtScalar::sqrt3()), 15);
        check(vec(s(1), s(2) + ExtScalar::sqrt3()), 75);
    }

    #[test]
    fn classify_rejects_off_table() {
        let ex = vec(s(1), s(0));
        assert_eq!(classify_angle(&ex, &vec(s(2), s(1))).unwrap(), None);
        // tan = 1/2 matches none of the ten signed tangent values.
        for (t, _) in tangent_table() {
            assert_ne!(s(1), s(2) * t.clone());
            assert_ne!(s(1), s(2) * -t);
        }
        // Parallel equal direction: angle 0 is outside (0°, 360°).
        assert_eq!(classify_angle(&ex, &vec(s(3), s(0))).unwrap(), None);
        assert_eq!(
            classify_angle(&ex, &vec(s(0), s(0))),
            Err(GeomError::ZeroVector)
        );
    }

    #[test]
    fn classify_angle_sums_to_360() {
        let u = vec(s(1), s(0));
        for v in [
            vec(s(1), s(1)),
            vec(s(0), s(1)),
            vec(s(-1), ExtScalar::sqrt3()),
            vec(s(1), -(s(2) - ExtScalar::sqrt3())),
        ] {
            let a = classify_angle(&u, &v).unwrap().unwrap().degrees();
            let b = classify_angle(&v, &u).unwrap().unwrap().degrees();
            assert_eq!(a + b, 360);
        }
    }

    prop_compose! {
        fn arb_coord()(n in -30i64..=30, d in 1i64..=6, r2 in -3i64..=3, r3 in -3i64..=3) -> ExtScalar {
            ExtScalar::from_ratio(n, d)
                + ExtScalar::sqrt2() * ExtScalar::from_int(r2)
                + ExtScalar::sqrt3() * ExtScalar::from_int(r3)
        }
    }

    prop_compose! {
        fn arb_point()(x in arb_coord(), y in arb_coord()) -> Point2 {
            Point2::new(x, y)
        }
    }

    fn dist_sq(p: &Point2, q: &Point2) -> ExtScalar {
        (p - q).norm_sq()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn isometries_preserve_squared_distance(p in arb_point(), q in arb_point(), k in 0i32..24) {
            let rot = Isometry::rotation_times_15(k);
            let refl = Isometry::reflection_across(
                &Point2::from_ints(0, 0),
                &Point2::new(ExtScalar::sqrt2(), ExtScalar::from_int(1)),
            ).unwrap();
            let f = rot.compose(&refl);
            prop_assert_eq!(dist_sq(&f.apply(&p), &f.apply(&q)), dist_sq(&p, &q));
        }

        #[test]
        fn reflections_are_involutions(p in arb_point(), a in arb_point(), b in arb_point()) {
            if a != b {
                let m = Isometry::reflection_across(&a, &b).unwrap();
                prop_assert_eq!(m.compose(&m).apply(&p), p.clone());
                prop_assert_eq!(m.compose(&m), Isometry::identity());
            }
        }

        #[test]
        fn composition_is_associative(p in arb_point(), i in 0i32..24, j in 0i32..24) {
            let f = Isometry::rotation_times_15(i);
            let g = Isometry::reflection_across(&Point2::from_ints(0, 0), &Point2::from_ints(1, 2)).unwrap();
            let h = Isometry::rotation_times_15(j).compose(
                &Isometry::translation(&Vec2::new(ExtScalar::from_int(3), ExtScalar::sqrt3())));
            let lhs = f.compose(&g).compose(&h);
            let rhs = f.compose(&g.compose(&h));
            prop_assert_eq!(lhs.clone(), rhs);
            prop_assert_eq!(lhs.apply(&p), f.apply(&g.apply(&h.apply(&p))));
        }
    }
}
