//! Symmetry groups of the octahedron, cube and icosahedron, and the
//! choreographic devices they induce on spatial directions.
//!
//! * [`permgroup`]: permutations, group closure, orbits and stabilizers.
//! * [`polyhedra`]: the three reference solids and their direction tokens.
//! * [`devices`]: inversions, composition, the `⊕` operation and normal zones.
//! * [`scale`]: the twelve-position clock, transposition and cosets of Z12.
//! * [`notation`]: parsers for sequences, device expressions and scripts.

pub mod devices;
pub mod error;
pub mod notation;
pub mod permgroup;
pub mod polyhedra;
pub mod scale;

pub use devices::{
    compose_devices, inversion_from_plane, invert_octahedral, normal_zone, oplus, Device, DeviceKind, Limb,
    MovementSequence, NormalZone,
};
pub use error::{Error, Result};
pub use notation::{parse_device_expr, parse_sequence, serialize_sequence, DeviceExpr, ParseError, Script};
pub use permgroup::{OrbitPartition, PermGroup, Permutation};
pub use polyhedra::{vertex_for_direction, BodyPlane, Direction, Polyhedron, Solid};
pub use scale::{
    apply_device_on_clock, coset_family, diametral_clock, make_scale, transpose, ClockPosition, Scale,
    ScaleLibrary, TraceForm,
};
