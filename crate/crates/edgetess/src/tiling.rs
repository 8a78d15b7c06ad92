//! The brute-force tiling oracle: expand a seed polygon by breadth-first
//! reflection closure, then verify — in exact arithmetic — that the
//! resulting patch tiles a disk.
//!
//! Expansion reflects every frontier tile in each of its edges and
//! deduplicates by a canonical vertex signature (distinct reflection words
//! routinely produce the same tile, the group has torsion). Verification
//! checks three things, any failure of which falsifies "tiles the plane":
//!
//! - no two tiles have interiors that intersect (separating-axis test with
//!   exact signs; shared edges and vertices are contact, not overlap);
//! - every edge of a settled tile is shared by exactly two tiles;
//! - around every settled vertex the incident angles sum to exactly 360°.
//!
//! A vertex counts as *settled* when its fan of incident tiles is closed:
//! each tile edge through the vertex is shared by exactly two incident
//! tiles. Frontier vertices with incomplete fans are skipped — checking
//! them would produce false defects. (A fixed generation cutoff cannot play
//! this role: a full fan around a 30° corner spans gallery distance six, so
//! patches of moderate depth legitimately contain vertices of low-numbered
//! tiles whose fans are still open.)

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use crate::catalog::Polygon;
use crate::geom::{classify_angle, Isometry, Point2, Vec2};
use crate::scalar::ExtScalar;

/// Canonical signature of a tile: its vertex list rotated/reversed to the
/// lexicographic minimum. Two tiles cover the same region iff keys match.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TileKey(Vec<Point2>);

impl TileKey {
    fn canonical(verts: &[Point2]) -> TileKey {
        let n = verts.len();
        let mut best: Option<Vec<Point2>> = None;
        let mut reversed: Vec<Point2> = verts.to_vec();
        reversed.reverse();
        for list in [verts, reversed.as_slice()] {
            for shift in 0..n {
                let mut candidate: Vec<Point2> = Vec::with_capacity(n);
                candidate.extend(list.iter().cycle().skip(shift).take(n).cloned());
                if best.as_ref().is_none_or(|b| candidate < *b) {
                    best = Some(candidate);
                }
            }
        }
        TileKey(best.expect("nonempty vertex list"))
    }

    pub fn points(&self) -> &[Point2] {
        &self.0
    }
}

impl fmt::Display for TileKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "({},{})", p.x.approx(6), p.y.approx(6))?;
        }
        write!(f, "]")
    }
}

/// One copy of the seed inside a patch.
#[derive(Debug, Clone)]
pub struct Tile {
    iso: Isometry,
    verts: Vec<Point2>,
    generation: u32,
    key: TileKey,
}

impl Tile {
    fn from_isometry(iso: Isometry, generation: u32, seed: &Polygon) -> Tile {
        let verts: Vec<Point2> = seed.vertices().iter().map(|p| iso.apply(p)).collect();
        let key = TileKey::canonical(&verts);
        Tile {
            iso,
            verts,
            generation,
            key,
        }
    }

    /// The seed-to-tile isometry.
    pub fn isometry(&self) -> &Isometry {
        &self.iso
    }

    /// Image of the seed's vertices, in seed order.
    pub fn vertices(&self) -> &[Point2] {
        &self.verts
    }

    /// Breadth-first depth at which this tile was first reached.
    pub fn generation(&self) -> u32 {
        self.generation
    }

    pub fn key(&self) -> &TileKey {
        &self.key
    }

    /// The tile obtained by reflecting this one in its edge
    /// `edge_index_in_tile`. Panics if the index is out of range.
    pub fn reflect_in_edge(&self, edge_index_in_tile: usize, seed: &Polygon) -> Tile {
        let n = self.verts.len();
        assert!(
            edge_index_in_tile < n,
            "edge index {edge_index_in_tile} out of range for {n}-gon tile"
        );
        let a = &self.verts[edge_index_in_tile];
        let b = &self.verts[(edge_index_in_tile + 1) % n];
        let mirror = Isometry::reflection_across(a, b).expect("tile edges are nondegenerate");
        Tile::from_isometry(mirror.compose(&self.iso), self.generation + 1, seed)
    }

    /// Interior angle in degrees at vertex `pos`, when it is a multiple
    /// of 15°. Mirror-image tiles store their vertex list clockwise, so the
    /// ray order flips with the isometry's parity.
    fn angle_at(&self, pos: usize) -> Option<u16> {
        let n = self.verts.len();
        let v = &self.verts[pos];
        let to_prev = &self.verts[(pos + n - 1) % n] - v;
        let to_next = &self.verts[(pos + 1) % n] - v;
        let (u, w) = if self.iso.parity() == 1 {
            (to_next, to_prev)
        } else {
            (to_prev, to_next)
        };
        classify_angle(&u, &w)
            .expect("tile vertices are distinct")
            .map(|a| a.degrees())
    }

    fn bbox(&self) -> BBox {
        BBox::of(&self.verts)
    }
}

/// Unordered exact endpoint pair, stored with the smaller point first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeKey(Point2, Point2);

impl EdgeKey {
    fn new(a: Point2, b: Point2) -> EdgeKey {
        if a <= b {
            EdgeKey(a, b)
        } else {
            EdgeKey(b, a)
        }
    }

    pub fn endpoints(&self) -> (&Point2, &Point2) {
        (&self.0, &self.1)
    }
}

/// A finite fragment of the reflection closure of a seed polygon,
/// deduplicated, with edge and vertex incidence indexes.
#[derive(Debug, Clone)]
pub struct Patch {
    seed: Polygon,
    generations: u32,
    /// Tiles in sorted key order, independent of discovery schedule.
    tiles: Vec<Tile>,
    /// Edge -> indexes of incident tiles (in `tiles` order).
    edge_index: HashMap<EdgeKey, Vec<usize>>,
    /// Vertex -> (tile index, vertex position) incidences.
    vertex_index: HashMap<Point2, Vec<(usize, usize)>>,
}

/// Breadth-first reflection closure of `seed`, stopped after `generations`
/// rounds of reflecting every frontier tile in each of its edges.
/// Expansion proceeds even if tiles overlap; detecting that is
/// [`Patch::verify`]'s job. Output is deterministic: tiles are stored in
/// sorted key order regardless of execution schedule.
pub fn expand(seed: &Polygon, generations: u32) -> Patch {
    let edge_count = seed.vertex_count();
    let mut tiles = vec![Tile::from_isometry(Isometry::identity(), 0, seed)];
    let mut seen: HashSet<TileKey> = HashSet::new();
    seen.insert(tiles[0].key.clone());
    let mut frontier: Vec<usize> = vec![0];
    for _ in 1..=generations {
        let mut next = Vec::new();
        for &index in &frontier {
            for edge in 0..edge_count {
                let tile = tiles[index].reflect_in_edge(edge, seed);
                if seen.insert(tile.key.clone()) {
                    next.push(tiles.len());
                    tiles.push(tile);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    tiles.sort_by(|a, b| a.key.cmp(&b.key));

    let mut edge_index: HashMap<EdgeKey, Vec<usize>> = HashMap::new();
    let mut vertex_index: HashMap<Point2, Vec<(usize, usize)>> = HashMap::new();
    for (ti, tile) in tiles.iter().enumerate() {
        let n = tile.verts.len();
        for pos in 0..n {
            let a = tile.verts[pos].clone();
            let b = tile.verts[(pos + 1) % n].clone();
            edge_index
                .entry(EdgeKey::new(a.clone(), b))
                .or_default()
                .push(ti);
            vertex_index.entry(a).or_default().push((ti, pos));
        }
    }
    Patch {
        seed: seed.clone(),
        generations,
        tiles,
        edge_index,
        vertex_index,
    }
}

impl Patch {
    pub fn seed(&self) -> &Polygon {
        &self.seed
    }

    pub fn generations(&self) -> u32 {
        self.generations
    }

    pub fn tiles(&self) -> &[Tile] {
        &self.tiles
    }

    pub fn tile_count(&self) -> usize {
        self.tiles.len()
    }

    /// Sorted tile keys; equal for any two runs on the same input.
    pub fn tile_keys(&self) -> Vec<&TileKey> {
        self.tiles.iter().map(|t| &t.key).collect()
    }

    pub fn edge_index(&self) -> &HashMap<EdgeKey, Vec<usize>> {
        &self.edge_index
    }

    pub fn vertex_index(&self) -> &HashMap<Point2, Vec<(usize, usize)>> {
        &self.vertex_index
    }

    /// Exact bounding box over all tile vertices.
    pub fn bounding_box(&self) -> BBox {
        let mut boxes = self.tiles.iter().map(Tile::bbox);
        let first = boxes.next().expect("patch contains the seed");
        boxes.fold(first, BBox::union)
    }

    /// Exact verification that this patch is consistent with an edge
    /// tessellation of the covered disk. See the module docs for the three
    /// checks and the settled-vertex rule; the report records everything.
    pub fn verify(&self) -> VerificationReport {
        let g = self.generations;
        let settled_tile = |tile: &Tile| tile.generation < g;

        // Pairwise interior overlaps, bounding-box prefiltered.
        let boxes: Vec<BBox> = self.tiles.iter().map(Tile::bbox).collect();
        let mut overlap_pairs = Vec::new();
        for i in 0..self.tiles.len() {
            for j in (i + 1)..self.tiles.len() {
                if !boxes[i].overlaps_strictly(&boxes[j]) {
                    continue;
                }
                if interiors_intersect(&self.tiles[i].verts, &self.tiles[j].verts) {
                    overlap_pairs.push((self.tiles[i].key.clone(), self.tiles[j].key.clone()));
                }
            }
        }

        // Every edge of a settled tile must be shared by exactly two tiles:
        // its reflection partner was expanded, so a count of one means a
        // geometric mismatch and three or more means a fold-over.
        let mut edges: Vec<(&EdgeKey, &Vec<usize>)> = self.edge_index.iter().collect();
        edges.sort_by(|a, b| a.0.cmp(b.0));
        let mut bad_edges = Vec::new();
        for (key, incident) in edges {
            let touches_settled = incident.iter().any(|&ti| settled_tile(&self.tiles[ti]));
            if touches_settled && incident.len() != 2 {
                bad_edges.push(BadEdge {
                    endpoints: (key.0.clone(), key.1.clone()),
                    incident_tiles: incident.len(),
                });
            }
        }

        // Settled vertices: the incident fan is closed (each tile edge
        // through the vertex shared by exactly two incident tiles).
        let mut vertices: Vec<(&Point2, &Vec<(usize, usize)>)> = self.vertex_index.iter().collect();
        vertices.sort_by(|a, b| a.0.cmp(b.0));
        let mut vertex_orders = BTreeMap::new();
        let mut vertex_defects = Vec::new();
        for (v, incidences) in vertices {
            let mut edge_uses: HashMap<EdgeKey, u32> = HashMap::new();
            for &(ti, pos) in incidences {
                let tile = &self.tiles[ti];
                let n = tile.verts.len();
                let prev = tile.verts[(pos + n - 1) % n].clone();
                let next = tile.verts[(pos + 1) % n].clone();
                for other in [prev, next] {
                    *edge_uses.entry(EdgeKey::new(v.clone(), other)).or_default() += 1;
                }
            }
            let closed = edge_uses.values().all(|&count| count == 2);
            if !closed {
                continue;
            }
            vertex_orders.insert(v.clone(), incidences.len());
            let mut sum: Option<u32> = Some(0);
            for &(ti, pos) in incidences {
                sum = match (sum, self.tiles[ti].angle_at(pos)) {
                    (Some(acc), Some(deg)) => Some(acc + deg as u32),
                    _ => None,
                };
            }
            if sum != Some(360) {
                vertex_defects.push(VertexDefect {
                    vertex: v.clone(),
                    angle_sum: sum,
                });
            }
        }

        let verdict =
            if overlap_pairs.is_empty() && bad_edges.is_empty() && vertex_defects.is_empty() {
                Verdict::Pass
            } else {
                Verdict::Fail
            };
        VerificationReport {
            generations: g,
            tile_count: self.tiles.len(),
            settled_tile_count: self.tiles.iter().filter(|t| settled_tile(t)).count(),
            settled_vertex_count: vertex_orders.len(),
            overlap_pairs,
            bad_edges,
            vertex_defects,
            vertex_orders,
            verdict,
        }
    }
}

/// Exact axis-aligned bounding box.
#[derive(Debug, Clone)]
pub struct BBox {
    pub min_x: ExtScalar,
    pub max_x: ExtScalar,
    pub min_y: ExtScalar,
    pub max_y: ExtScalar,
}

impl BBox {
    fn of(points: &[Point2]) -> BBox {
        let mut iter = points.iter();
        let first = iter.next().expect("nonempty point list");
        let mut bb = BBox {
            min_x: first.x.clone(),
            max_x: first.x.clone(),
            min_y: first.y.clone(),
            max_y: first.y.clone(),
        };
        for p in iter {
            if p.x < bb.min_x {
                bb.min_x = p.x.clone();
            }
            if p.x > bb.max_x {
                bb.max_x = p.x.clone();
            }
            if p.y < bb.min_y {
                bb.min_y = p.y.clone();
            }
            if p.y > bb.max_y {
                bb.max_y = p.y.clone();
            }
        }
        bb
    }

    fn union(self, other: BBox) -> BBox {
        BBox {
            min_x: self.min_x.min(other.min_x),
            max_x: self.max_x.max(other.max_x),
            min_y: self.min_y.min(other.min_y),
            max_y: self.max_y.max(other.max_y),
        }
    }

    /// Positive-area intersection; touching boxes do not count.
    fn overlaps_strictly(&self, other: &BBox) -> bool {
        self.min_x < other.max_x
            && other.min_x < self.max_x
            && self.min_y < other.max_y
            && other.min_y < self.max_y
    }
}

/// Do two convex polygons intersect with positive area? Separating-axis
/// test over the edge normals of both polygons, exact signs only; touching
/// along edges or at vertices is not an intersection.
fn interiors_intersect(a: &[Point2], b: &[Point2]) -> bool {
    !has_separating_axis(a, b) && !has_separating_axis(b, a)
}

fn has_separating_axis(axes_of: &[Point2], other: &[Point2]) -> bool {
    let n = axes_of.len();
    for i in 0..n {
        let edge = &axes_of[(i + 1) % n] - &axes_of[i];
        let normal = Vec2::new(-edge.dy.clone(), edge.dx.clone());
        let (a_min, a_max) = project(axes_of, &normal);
        let (b_min, b_max) = project(other, &normal);
        // Equality means contact without shared interior.
        if a_max <= b_min || b_max <= a_min {
            return true;
        }
    }
    false
}

fn project(points: &[Point2], axis: &Vec2) -> (ExtScalar, ExtScalar) {
    let mut values = points.iter().map(|p| &p.x * &axis.dx + &p.y * &axis.dy);
    let first = values.next().expect("nonempty point list");
    let mut lo = first.clone();
    let mut hi = first;
    for v in values {
        if v < lo {
            lo = v.clone();
        } else if v > hi {
            hi = v;
        }
    }
    (lo, hi)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "PASS"),
            Verdict::Fail => write!(f, "FAIL"),
        }
    }
}

/// An edge of a settled tile with the wrong number of incident tiles.
#[derive(Debug, Clone)]
pub struct BadEdge {
    pub endpoints: (Point2, Point2),
    pub incident_tiles: usize,
}

/// A settled vertex whose incident angles do not sum to 360°.
/// `angle_sum` is `None` when some incident angle is off the 15° grid.
#[derive(Debug, Clone)]
pub struct VertexDefect {
    pub vertex: Point2,
    pub angle_sum: Option<u32>,
}

/// Everything [`Patch::verify`] finds. The verdict passes iff all three
/// defect lists are empty.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub generations: u32,
    pub tile_count: usize,
    pub settled_tile_count: usize,
    pub settled_vertex_count: usize,
    pub overlap_pairs: Vec<(TileKey, TileKey)>,
    pub bad_edges: Vec<BadEdge>,
    pub vertex_defects: Vec<VertexDefect>,
    /// Settled vertex -> number of incident tiles.
    pub vertex_orders: BTreeMap<Point2, usize>,
    pub verdict: Verdict,
}

impl VerificationReport {
    /// Counts of settled vertices by order.
    pub fn order_histogram(&self) -> BTreeMap<usize, usize> {
        let mut histogram = BTreeMap::new();
        for order in self.vertex_orders.values() {
            *histogram.entry(*order).or_default() += 1;
        }
        histogram
    }

    /// Plain-text summary, one fact per line.
    pub fn summary(&self) -> String {
        let orders: Vec<String> = self
            .order_histogram()
            .into_iter()
            .map(|(order, count)| format!("{order}x{count}"))
            .collect();
        format!(
            "generations: {}\n\
             tiles: {}\n\
             settled tiles (generation <= {}): {}\n\
             settled vertices (closed fans): {}\n\
             vertex orders (order x count): {}\n\
             overlapping tile pairs: {}\n\
             bad edges: {}\n\
             vertex angle defects: {}\n\
             verdict: {}",
            self.generations,
            self.tile_count,
            self.generations.saturating_sub(1),
            self.settled_tile_count,
            self.settled_vertex_count,
            if orders.is_empty() {
                "none".to_string()
            } else {
                orders.join(" ")
            },
            self.overlap_pairs.len(),
            self.bad_edges.len(),
            self.vertex_defects.len(),
            self.verdict,
        )
    }

    /// Machine-readable listing, one defect per line.
    pub fn defect_lines(&self) -> Vec<String> {
        let mut lines = Vec::new();
        for (a, b) in &self.overlap_pairs {
            lines.push(format!("overlap {a} {b}"));
        }
        for edge in &self.bad_edges {
            lines.push(format!(
                "bad-edge ({},{})-({},{}) incident={}",
                edge.endpoints.0.x.approx(6),
                edge.endpoints.0.y.approx(6),
                edge.endpoints.1.x.approx(6),
                edge.endpoints.1.y.approx(6),
                edge.incident_tiles
            ));
        }
        for defect in &self.vertex_defects {
            let sum = match defect.angle_sum {
                Some(deg) => format!("{deg}"),
                None => "unrecognized".to_string(),
            };
            lines.push(format!(
                "vertex-defect ({},{}) sum={}",
                defect.vertex.x.approx(6),
                defect.vertex.y.approx(6),
                sum
            ));
        }
        lines
    }
}
