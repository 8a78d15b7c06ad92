//! Integer enumeration of interior-angle multisets.
//!
//! For a polygon with `e` edges whose interior angles avoid 120°, the counts
//! `(a, b, c, d)` of 30°, 45°, 60° and 90° angles satisfy
//!
//! ```text
//! 30a + 45b + 60c + 90d = 180(e − 2)
//!  a +   b +   c +   d  = e
//! ```
//!
//! [`solve_system`] enumerates the nonnegative solutions exhaustively, while
//! [`param_solution_triangle`] / [`param_solution_quad`] reproduce the closed
//! parameterized solution families so the two routes can be cross-checked.
//! [`enumerate_multisets`] widens the angle set to include 120°, which the
//! count system above excludes and which downstream classification handles
//! through the bisector-symmetry condition.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("edge count {0} out of range: polygons here have 3 to 6 edges")]
    EdgeCountOutOfRange(u32),
}

/// A nonnegative solution of the angle-count system for `e` edges:
/// `a, b, c, d` count the 30°, 45°, 60° and 90° interior angles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AngleSolution {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
    pub e: u32,
}

impl AngleSolution {
    /// Both defining equations, checked exactly.
    pub fn is_valid(&self) -> bool {
        let weighted = 30 * self.a + 45 * self.b + 60 * self.c + 90 * self.d;
        let count = self.a + self.b + self.c + self.d;
        weighted == 180 * (self.e - 2) && count == self.e
    }
}

impl fmt::Display for AngleSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} {}", self.a, self.b, self.c, self.d)
    }
}

/// The five interior angles available to an edge-tessellating polygon.
pub const ALLOWED_ANGLES: [u16; 5] = [30, 45, 60, 90, 120];

/// A multiset of interior angles drawn from [`ALLOWED_ANGLES`] for a polygon
/// with `e` edges; `counts[i]` is the multiplicity of `ALLOWED_ANGLES[i]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AngleMultiset {
    pub counts: [u32; 5],
    pub e: u32,
}

impl AngleMultiset {
    pub fn count_of(&self, degrees: u16) -> u32 {
        ALLOWED_ANGLES
            .iter()
            .position(|&a| a == degrees)
            .map(|i| self.counts[i])
            .unwrap_or(0)
    }

    /// Cardinality and weighted-sum invariants.
    pub fn is_valid(&self) -> bool {
        let total: u32 = self.counts.iter().sum();
        let weighted: u32 = self
            .counts
            .iter()
            .zip(ALLOWED_ANGLES)
            .map(|(&n, a)| n * a as u32)
            .sum();
        (3..=6).contains(&self.e) && total == self.e && weighted == 180 * (self.e - 2)
    }

    /// The sorted list of angles, e.g. `[30, 30, 120]`.
    pub fn angles(&self) -> Vec<u16> {
        let mut out = Vec::with_capacity(self.e as usize);
        for (i, &n) in self.counts.iter().enumerate() {
            out.extend(std::iter::repeat_n(ALLOWED_ANGLES[i], n as usize));
        }
        out
    }
}

impl fmt::Display for AngleMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {} {} {}",
            self.counts[0], self.counts[1], self.counts[2], self.counts[3], self.counts[4]
        )
    }
}

/// Largest edge count compatible with interior angles of at most 120°:
/// the interior angle sum 180(e − 2) must not exceed 120e. Found by
/// scanning upward, not hard-coded; the answer is 6.
pub fn max_edge_count() -> u32 {
    let mut e = 3;
    while 180 * ((e + 1) - 2) <= 120 * (e + 1) {
        e += 1;
    }
    e
}

/// All nonnegative solutions of the angle-count system for `e` edges, in
/// lexicographic order by `(a, b, c, d)`.
pub fn solve_system(e: u32) -> Result<Vec<AngleSolution>, SolverError> {
    if !(3..=6).contains(&e) {
        return Err(SolverError::EdgeCountOutOfRange(e));
    }
    let mut out = Vec::new();
    for a in 0..=e {
        for b in 0..=e {
            for c in 0..=e {
                for d in 0..=e {
                    let sol = AngleSolution { a, b, c, d, e };
                    if sol.is_valid() {
                        out.push(sol);
                    }
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// The parameterized general solution of the count system for triangles:
/// `s(1,−2,1,0) + t(3,−4,0,1) + (−3,6,0,0)`. Entries may be negative.
pub fn param_solution_triangle(s: i64, t: i64) -> [i64; 4] {
    affine_combination(s, t, [-3, 6, 0, 0])
}

/// The parameterized general solution for quadrilaterals:
/// `s(1,−2,1,0) + t(3,−4,0,1) + (−12,16,0,0)`.
pub fn param_solution_quad(s: i64, t: i64) -> [i64; 4] {
    affine_combination(s, t, [-12, 16, 0, 0])
}

fn affine_combination(s: i64, t: i64, particular: [i64; 4]) -> [i64; 4] {
    let dirs = [[1i64, -2, 1, 0], [3, -4, 0, 1]];
    let mut out = particular;
    for i in 0..4 {
        out[i] += s * dirs[0][i] + t * dirs[1][i];
    }
    out
}

/// All multisets over the full angle set {30°, 45°, 60°, 90°, 120°} with
/// cardinality `e` and weighted sum 180(e − 2), sorted by count vector.
pub fn enumerate_multisets(e: u32) -> Result<Vec<AngleMultiset>, SolverError> {
    if !(3..=6).contains(&e) {
        return Err(SolverError::EdgeCountOutOfRange(e));
    }
    let mut out = Vec::new();
    let mut counts = [0u32; 5];
    fill(&mut out, &mut counts, 0, e);
    out.sort();
    Ok(out)
}

fn fill(out: &mut Vec<AngleMultiset>, counts: &mut [u32; 5], idx: usize, e: u32) {
    if idx == 5 {
        let m = AngleMultiset { counts: *counts, e };
        if m.is_valid() {
            out.push(m);
        }
        return;
    }
    let used: u32 = counts[..idx].iter().sum();
    for n in 0..=(e - used) {
        counts[idx] = n;
        fill(out, counts, idx + 1, e);
    }
    counts[idx] = 0;
}
