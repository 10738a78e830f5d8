//! The three reference solids: octahedron, cube and icosahedron.
//!
//! Coordinates use a body-centred frame: +x is right, +y is forward and +z
//! is up. Every vertex carries one [`Direction`]; the 26 direction tokens
//! are unique across the three solids.
//!
//! | solid       | vertices (v1, v2, ...)                                       |
//! |-------------|--------------------------------------------------------------|
//! | octahedron  | UP DOWN BACK FWD RIGHT LEFT                                  |
//! | icosahedron | FH BH HR HL MRF MLF MRB MLB FL BL LR LL                      |
//! | cube        | RFH LFH RBH LBH RFL LFL RBL LBL                              |
//!
//! The icosahedron is built from three mutually orthogonal golden
//! rectangles, `(0, ±1, ±φ)` in the sagittal plane, `(±1, ±φ, 0)` in the
//! horizontal plane and `(±φ, 0, ±1)` in the vertical plane.
//!
//! Edges are the minimal-distance vertex pairs, and symmetry groups are
//! derived from the geometry: every orthogonal map sending a reference
//! vertex triple onto a congruent triple is tested against the vertex set.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use nalgebra::{Matrix3, Vector3};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::permgroup::{PermGroup, Permutation};

/// Relative tolerance for distance and coordinate comparisons.
pub const TOLERANCE: f64 = 1e-9;

/// The golden ratio `(1 + √5) / 2`.
pub fn golden_ratio() -> f64 {
    (1.0 + 5f64.sqrt()) / 2.0
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Solid {
    Octahedron,
    Cube,
    Icosahedron,
}

impl Solid {
    pub const ALL: [Solid; 3] = [Solid::Octahedron, Solid::Cube, Solid::Icosahedron];

    pub fn name(self) -> &'static str {
        match self {
            Solid::Octahedron => "octahedron",
            Solid::Cube => "cube",
            Solid::Icosahedron => "icosahedron",
        }
    }

    pub fn vertex_count(self) -> usize {
        self.vocabulary().len()
    }

    /// Direction tokens and descriptions in vertex order.
    pub fn vocabulary(self) -> &'static [(&'static str, &'static str)] {
        match self {
            Solid::Octahedron => &OCTAHEDRON_VOCABULARY,
            Solid::Cube => &CUBE_VOCABULARY,
            Solid::Icosahedron => &ICOSAHEDRON_VOCABULARY,
        }
    }

    /// A lazily built, shared instance of this solid.
    pub fn polyhedron(self) -> &'static Polyhedron {
        static CELLS: [OnceLock<Polyhedron>; 3] = [OnceLock::new(), OnceLock::new(), OnceLock::new()];
        let cell = &CELLS[self as usize];
        cell.get_or_init(|| Polyhedron::build(self))
    }
}

impl fmt::Display for Solid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Solid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "octahedron" | "octa" => Ok(Solid::Octahedron),
            "cube" => Ok(Solid::Cube),
            "icosahedron" | "ico" => Ok(Solid::Icosahedron),
            _ => Err(Error::UnknownSolid(s.to_string())),
        }
    }
}

const OCTAHEDRON_VOCABULARY: [(&str, &str); 6] = [
    ("UP", "up (head)"),
    ("DOWN", "down (feet)"),
    ("BACK", "middle back"),
    ("FWD", "middle forward"),
    ("RIGHT", "middle side right"),
    ("LEFT", "middle side left"),
];

const ICOSAHEDRON_VOCABULARY: [(&str, &str); 12] = [
    ("FH", "forward high"),
    ("BH", "back high"),
    ("HR", "high right"),
    ("HL", "high left"),
    ("MRF", "middle right forward"),
    ("MLF", "middle left forward"),
    ("MRB", "middle right back"),
    ("MLB", "middle left back"),
    ("FL", "forward low"),
    ("BL", "back low"),
    ("LR", "low right"),
    ("LL", "low left"),
];

const CUBE_VOCABULARY: [(&str, &str); 8] = [
    ("RFH", "right forward high"),
    ("LFH", "left forward high"),
    ("RBH", "right back high"),
    ("LBH", "left back high"),
    ("RFL", "right forward low"),
    ("LFL", "left forward low"),
    ("RBL", "right back low"),
    ("LBL", "left back low"),
];

/// A labeled spatial direction: one vertex of one solid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Direction {
    solid: Solid,
    vertex: usize,
}

impl Direction {
    pub fn new(solid: Solid, vertex: usize) -> Result<Direction> {
        if vertex < solid.vertex_count() {
            Ok(Direction { solid, vertex })
        } else {
            Err(Error::OutOfRange {
                index: vertex,
                domain_size: solid.vertex_count(),
            })
        }
    }

    /// Looks up a token from the 26-direction vocabulary (case-sensitive).
    pub fn from_token(token: &str) -> Result<Direction> {
        Solid::ALL
            .iter()
            .find_map(|&solid| {
                solid
                    .vocabulary()
                    .iter()
                    .position(|(t, _)| *t == token)
                    .map(|vertex| Direction { solid, vertex })
            })
            .ok_or_else(|| Error::UnknownDirection(token.to_string()))
    }

    pub fn solid(self) -> Solid {
        self.solid
    }

    /// 0-based vertex index.
    pub fn vertex(self) -> usize {
        self.vertex
    }

    pub fn token(self) -> &'static str {
        self.solid.vocabulary()[self.vertex].0
    }

    pub fn description(self) -> &'static str {
        self.solid.vocabulary()[self.vertex].1
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Direction::from_token(s)
    }
}

/// Resolves a direction token to its owning solid and 0-based vertex.
pub fn vertex_for_direction(token: &str) -> Result<(Solid, usize)> {
    let d = Direction::from_token(token)?;
    Ok((d.solid, d.vertex))
}

/// The three anatomical planes, each holding four icosahedron vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BodyPlane {
    /// Splits left from right (x = 0).
    Sagittal,
    /// Splits top from bottom (z = 0).
    Horizontal,
    /// Splits front from back (y = 0); also called frontal.
    Vertical,
}

impl BodyPlane {
    pub const ALL: [BodyPlane; 3] = [BodyPlane::Sagittal, BodyPlane::Horizontal, BodyPlane::Vertical];

    pub fn name(self) -> &'static str {
        match self {
            BodyPlane::Sagittal => "sagittal",
            BodyPlane::Horizontal => "horizontal",
            BodyPlane::Vertical => "vertical",
        }
    }

    /// The icosahedron vertices in the plane, 0-based.
    pub fn fixed_vertices(self) -> [usize; 4] {
        match self {
            BodyPlane::Sagittal => [0, 1, 8, 9],
            BodyPlane::Horizontal => [4, 5, 6, 7],
            BodyPlane::Vertical => [2, 3, 10, 11],
        }
    }

    /// Coordinate axis normal to the plane.
    pub fn normal_axis(self) -> usize {
        match self {
            BodyPlane::Sagittal => 0,
            BodyPlane::Vertical => 1,
            BodyPlane::Horizontal => 2,
        }
    }
}

impl fmt::Display for BodyPlane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BodyPlane {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sagittal" => Ok(BodyPlane::Sagittal),
            "horizontal" => Ok(BodyPlane::Horizontal),
            "vertical" | "frontal" => Ok(BodyPlane::Vertical),
            _ => Err(Error::UnknownPlane(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PolyVertex {
    pub index: usize,
    pub coords: [f64; 3],
    pub direction: Direction,
}

/// One isometry of a solid, as the vertex permutation it induces.
#[derive(Debug, Clone)]
pub struct Symmetry {
    pub perm: Permutation,
    /// `true` for rotations, `false` for reflections and rotoreflections.
    pub proper: bool,
}

#[derive(Debug, Clone)]
pub struct Polyhedron {
    kind: Solid,
    vertices: Vec<PolyVertex>,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<BTreeSet<usize>>,
    antipodes: Vec<usize>,
    edge_length: f64,
    symmetries: OnceLock<Vec<Symmetry>>,
    rotation_group: OnceLock<PermGroup>,
    full_group: OnceLock<PermGroup>,
}

fn canonical_coordinates(kind: Solid) -> Vec<[f64; 3]> {
    let phi = golden_ratio();
    match kind {
        Solid::Octahedron => vec![
            [0.0, 0.0, 1.0],
            [0.0, 0.0, -1.0],
            [0.0, -1.0, 0.0],
            [0.0, 1.0, 0.0],
            [1.0, 0.0, 0.0],
            [-1.0, 0.0, 0.0],
        ],
        Solid::Cube => {
            let mut out = Vec::with_capacity(8);
            for z in [1.0, -1.0] {
                for y in [1.0, -1.0] {
                    for x in [1.0, -1.0] {
                        out.push([x, y, z]);
                    }
                }
            }
            out
        }
        Solid::Icosahedron => vec![
            [0.0, 1.0, phi],
            [0.0, -1.0, phi],
            [phi, 0.0, 1.0],
            [-phi, 0.0, 1.0],
            [1.0, phi, 0.0],
            [-1.0, phi, 0.0],
            [1.0, -phi, 0.0],
            [-1.0, -phi, 0.0],
            [0.0, 1.0, -phi],
            [0.0, -1.0, -phi],
            [phi, 0.0, -1.0],
            [-phi, 0.0, -1.0],
        ],
    }
}

fn distance(a: [f64; 3], b: [f64; 3]) -> f64 {
    Vector3::from(a).metric_distance(&Vector3::from(b))
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= TOLERANCE * a.abs().max(b.abs()).max(1.0)
}

impl Polyhedron {
    pub fn build(kind: Solid) -> Polyhedron {
        let coords = canonical_coordinates(kind);
        let n = coords.len();
        let vertices: Vec<PolyVertex> = coords
            .iter()
            .enumerate()
            .map(|(index, &c)| PolyVertex {
                index,
                coords: c,
                direction: Direction {
                    solid: kind,
                    vertex: index,
                },
            })
            .collect();

        let mut edge_length = f64::INFINITY;
        for i in 0..n {
            for j in (i + 1)..n {
                edge_length = edge_length.min(distance(coords[i], coords[j]));
            }
        }
        let mut edges = Vec::new();
        let mut adjacency = vec![BTreeSet::new(); n];
        for i in 0..n {
            for j in (i + 1)..n {
                if close(distance(coords[i], coords[j]), edge_length) {
                    edges.push((i, j));
                    adjacency[i].insert(j);
                    adjacency[j].insert(i);
                }
            }
        }

        let antipodes = coords
            .iter()
            .map(|&c| {
                let negated = [-c[0], -c[1], -c[2]];
                coords
                    .iter()
                    .position(|&d| distance(d, negated) <= TOLERANCE)
                    .expect("centrally symmetric solid")
            })
            .collect();

        Polyhedron {
            kind,
            vertices,
            edges,
            adjacency,
            antipodes,
            edge_length,
            symmetries: OnceLock::new(),
            rotation_group: OnceLock::new(),
            full_group: OnceLock::new(),
        }
    }

    /// Parses a solid name and builds it.
    pub fn build_named(name: &str) -> Result<Polyhedron> {
        Ok(Self::build(name.parse()?))
    }

    pub fn kind(&self) -> Solid {
        self.kind
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[PolyVertex] {
        &self.vertices
    }

    /// Edges as `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_length(&self) -> f64 {
        self.edge_length
    }

    pub fn is_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency.get(a).is_some_and(|n| n.contains(&b))
    }

    fn check(&self, v: usize) -> Result<()> {
        if v < self.vertices.len() {
            Ok(())
        } else {
            Err(Error::OutOfRange {
                index: v,
                domain_size: self.vertices.len(),
            })
        }
    }

    pub fn neighbors(&self, v: usize) -> Result<&BTreeSet<usize>> {
        self.check(v)?;
        Ok(&self.adjacency[v])
    }

    /// The vertex with negated coordinates.
    pub fn antipode(&self, v: usize) -> Result<usize> {
        self.check(v)?;
        Ok(self.antipodes[v])
    }

    /// The antipodal map as a permutation of the vertices.
    pub fn antipode_map(&self) -> Permutation {
        Permutation::from_images(self.antipodes.clone()).expect("antipode is a bijection")
    }

    pub fn direction(&self, v: usize) -> Result<Direction> {
        self.check(v)?;
        Ok(self.vertices[v].direction)
    }

    /// Vertex whose coordinates match `point`, if any.
    pub fn vertex_at(&self, point: [f64; 3]) -> Option<usize> {
        let scale = self.edge_length.max(1.0);
        self.vertices
            .iter()
            .position(|v| distance(v.coords, point) <= TOLERANCE * scale)
    }

    /// Vertex permutation induced by a linear map, if the map preserves the vertex set.
    pub fn permutation_of_linear_map(&self, map: &Matrix3<f64>) -> Option<Permutation> {
        let images: Option<Vec<usize>> = self
            .vertices
            .iter()
            .map(|v| {
                let image = map * Vector3::from(v.coords);
                self.vertex_at([image.x, image.y, image.z])
            })
            .collect();
        Permutation::from_images(images?).ok()
    }

    /// All vertex permutations induced by isometries of the solid.
    pub fn symmetries(&self) -> &[Symmetry] {
        self.symmetries.get_or_init(|| self.derive_symmetries())
    }

    fn reference_triple(&self) -> [usize; 3] {
        let a = 0;
        let b = *self.adjacency[a].first().expect("vertex has neighbors");
        let c = self.adjacency[a]
            .intersection(&self.adjacency[b])
            .next()
            .copied()
            .unwrap_or_else(|| *self.adjacency[a].iter().find(|&&u| u != b).expect("degree >= 2"));
        [a, b, c]
    }

    fn derive_symmetries(&self) -> Vec<Symmetry> {
        let column_matrix =
            |t: [usize; 3]| Matrix3::from_columns(&t.map(|i| Vector3::from(self.vertices[i].coords)));
        let [a, b, c] = self.reference_triple();
        let source = column_matrix([a, b, c]);
        let source_inverse = source.try_inverse().expect("reference triple spans space");
        let d_ac = distance(self.vertices[a].coords, self.vertices[c].coords);
        let d_bc = distance(self.vertices[b].coords, self.vertices[c].coords);

        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for a2 in 0..self.vertices.len() {
            for &b2 in &self.adjacency[a2] {
                for c2 in 0..self.vertices.len() {
                    let pa = self.vertices[a2].coords;
                    let pb = self.vertices[b2].coords;
                    let pc = self.vertices[c2].coords;
                    if !close(distance(pa, pc), d_ac) || !close(distance(pb, pc), d_bc) {
                        continue;
                    }
                    let map = column_matrix([a2, b2, c2]) * source_inverse;
                    let gram = map.transpose() * map;
                    if (gram - Matrix3::identity()).abs().max() > 1e-9 {
                        continue;
                    }
                    let Some(perm) = self.permutation_of_linear_map(&map) else {
                        continue;
                    };
                    if seen.insert(perm.clone()) {
                        out.push(Symmetry {
                            perm,
                            proper: map.determinant() > 0.0,
                        });
                    }
                }
            }
        }
        out.sort_by(|x, y| x.perm.cmp(&y.perm));
        out
    }

    /// Vertex permutations induced by rotations.
    pub fn rotation_group(&self) -> &PermGroup {
        self.rotation_group.get_or_init(|| {
            let rotations: Vec<Permutation> = self
                .symmetries()
                .iter()
                .filter(|s| s.proper)
                .map(|s| s.perm.clone())
                .collect();
            PermGroup::closure(&rotations).expect("identity is a rotation")
        })
    }

    /// Vertex permutations induced by all isometries.
    pub fn full_symmetry_group(&self) -> &PermGroup {
        self.full_group.get_or_init(|| {
            let all: Vec<Permutation> = self.symmetries().iter().map(|s| s.perm.clone()).collect();
            PermGroup::closure(&all).expect("identity is a symmetry")
        })
    }

    /// Whether `perm` maps the edge set onto itself.
    pub fn preserves_edges(&self, perm: &Permutation) -> bool {
        perm.domain_size() == self.vertex_count()
            && self
                .edges
                .iter()
                .all(|&(i, j)| self.is_edge(perm.apply(i), perm.apply(j)))
    }

    /// Vertex permutation induced by reflecting across a coordinate plane.
    pub fn coordinate_reflection(&self, axis: usize) -> Option<Permutation> {
        let mut map = Matrix3::identity();
        map[(axis, axis)] = -1.0;
        self.permutation_of_linear_map(&map)
    }

    pub fn export(&self) -> PolyhedronExport {
        PolyhedronExport {
            solid: self.kind,
            edge_length: self.edge_length,
            vertices: self
                .vertices
                .iter()
                .map(|v| ExportVertex {
                    index: v.index + 1,
                    coords: v.coords,
                    token: v.direction.token(),
                })
                .collect(),
            edges: self.edges.iter().map(|&(i, j)| [i + 1, j + 1]).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.export()).expect("plain data serializes")
    }
}

/// JSON shape of an exported solid; indices are 1-based.
#[derive(Debug, Serialize)]
pub struct PolyhedronExport {
    pub solid: Solid,
    pub edge_length: f64,
    pub vertices: Vec<ExportVertex>,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Debug, Serialize)]
pub struct ExportVertex {
    pub index: usize,
    pub coords: [f64; 3],
    pub token: &'static str,
}
