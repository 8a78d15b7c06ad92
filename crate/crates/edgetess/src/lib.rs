//! Exact computation with the polygons that generate edge tessellations of
//! the plane.
//!
//! An *edge tessellation* is a tiling of the plane produced by repeatedly
//! reflecting a single polygon in its own edges. Exactly eight shapes can do
//! this: the equilateral, 30-right, isosceles-right and 120-isosceles
//! triangles, rectangles, the 60-rhombus, the 60-90-120 kite, and the
//! regular hexagon. This crate makes that catalog executable:
//!
//! - [`scalar`] — exact arithmetic in Q(√2, √3), the coordinate field for
//!   every angle that is a multiple of 15°;
//! - [`geom`] — exact points, isometries, reflections and the 15°-granular
//!   angle classifier;
//! - [`solver`] — integer enumeration of the interior-angle count systems
//!   and their parameterized solution families;
//! - [`catalog`] — canonical representatives of the eight families and a
//!   classifier that accepts or rejects arbitrary exact polygons;
//! - [`tiling`] — a brute-force oracle that expands a seed polygon by
//!   breadth-first reflection closure and verifies, exactly, that the patch
//!   tiles a disk;
//! - [`svg`] — deterministic SVG rendering of patches;
//! - [`io`] — the plain-text polygon file format;
//! - [`cli`] — the `edgetess` command-line front end.
//!
//! Everything is computed in exact arithmetic; there are no epsilons and no
//! floating-point geometry anywhere. See the `examples/` directory for a
//! runnable tour of each capability.

pub mod catalog;
pub mod cli;
pub mod corpus;
pub mod geom;
pub mod io;
pub mod scalar;
pub mod solver;
pub mod svg;
pub mod tiling;

pub use catalog::{Family, Polygon, Rejection};
pub use geom::{AngleDeg, Isometry, Point2, Vec2};
pub use scalar::{ExtScalar, Rational};
pub use solver::{AngleMultiset, AngleSolution};
pub use svg::RenderStyle;
pub use tiling::{expand, Patch, Tile, Verdict, VerificationReport};
