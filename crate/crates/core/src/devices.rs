//! Choreographic devices: named permutations of directions.
//!
//! The three icosahedral inversions are the reflections across the body
//! planes. Each is recovered as the single non-identity element of the
//! pointwise stabilizer of one plane's four vertices in the full symmetry
//! group:
//!
//! | device | fixed plane | permutation                  |
//! |--------|-------------|------------------------------|
//! | `fb`   | vertical    | `(1 2)(5 7)(6 8)(9 10)`      |
//! | `lh`   | horizontal  | `(1 9)(2 10)(3 11)(4 12)`    |
//! | `lr`   | sagittal    | `(3 4)(5 6)(7 8)(11 12)`     |
//!
//! Vertices lying in the fixed plane have no opposite for that device and
//! are mapped to themselves, so every device is a total permutation.
//! [`Device::fixed_directions`] reports them.
//!
//! Octahedral inversion and diametral inversion are the antipodal maps of
//! the octahedron and icosahedron.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::permgroup::Permutation;
use crate::polyhedra::{BodyPlane, Direction, Polyhedron, Solid};
use crate::scale::{ClockPosition, Scale};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DeviceKind {
    FrontBack,
    LowHigh,
    LeftRight,
    Octahedral,
    Diametral,
    Transposition(u8),
    Identity,
    Composite,
}

impl DeviceKind {
    /// Short name as used in device expressions.
    pub fn short_name(self) -> String {
        match self {
            DeviceKind::FrontBack => "fb".into(),
            DeviceKind::LowHigh => "lh".into(),
            DeviceKind::LeftRight => "lr".into(),
            DeviceKind::Octahedral => "octa".into(),
            DeviceKind::Diametral => "diam".into(),
            DeviceKind::Transposition(k) => format!("T{k}"),
            DeviceKind::Identity => "id".into(),
            DeviceKind::Composite => "composite".into(),
        }
    }

    pub fn is_inversion(self) -> bool {
        matches!(
            self,
            DeviceKind::FrontBack
                | DeviceKind::LowHigh
                | DeviceKind::LeftRight
                | DeviceKind::Octahedral
                | DeviceKind::Diametral
        )
    }
}

/// A permutation of one solid's directions, with the names of the devices
/// it was composed from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Device {
    kind: DeviceKind,
    solid: Solid,
    perm: Permutation,
    trail: Vec<String>,
    clock_shift: Option<u8>,
}

impl Device {
    fn primitive(kind: DeviceKind, solid: Solid, perm: Permutation) -> Device {
        Device {
            kind,
            solid,
            perm,
            trail: vec![kind.short_name()],
            clock_shift: None,
        }
    }

    pub fn identity(solid: Solid) -> Device {
        Device {
            kind: DeviceKind::Identity,
            solid,
            perm: Permutation::identity(solid.vertex_count()),
            trail: Vec::new(),
            clock_shift: if solid == Solid::Icosahedron {
                Some(0)
            } else {
                None
            },
        }
    }

    /// Inversion across the vertical plane (front ↔ back).
    pub fn front_back() -> Device {
        inversion_from_plane(Solid::Icosahedron.polyhedron(), BodyPlane::Vertical).expect("icosahedron")
    }

    /// Inversion across the horizontal plane (low ↔ high).
    pub fn low_high() -> Device {
        inversion_from_plane(Solid::Icosahedron.polyhedron(), BodyPlane::Horizontal).expect("icosahedron")
    }

    /// Inversion across the sagittal plane (left ↔ right).
    pub fn left_right() -> Device {
        inversion_from_plane(Solid::Icosahedron.polyhedron(), BodyPlane::Sagittal).expect("icosahedron")
    }

    /// Antipodal map of the octahedron.
    pub fn octahedral() -> Device {
        let octahedron = Solid::Octahedron.polyhedron();
        Self::primitive(
            DeviceKind::Octahedral,
            Solid::Octahedron,
            octahedron.antipode_map(),
        )
    }

    /// Antipodal map of the icosahedron.
    pub fn diametral() -> Device {
        let icosahedron = Solid::Icosahedron.polyhedron();
        Self::primitive(
            DeviceKind::Diametral,
            Solid::Icosahedron,
            icosahedron.antipode_map(),
        )
    }

    /// Rotation by `k` steps around the clock of `scale`, as a permutation
    /// of icosahedron vertices.
    pub fn transposition(scale: &Scale, k: i64) -> Device {
        let k = k.rem_euclid(12) as u8;
        let images = (0..12)
            .map(|v| {
                let p = scale.position_of(v).expect("scale covers all vertices");
                scale.vertex_at(p.shifted(k as i64))
            })
            .collect();
        let perm = Permutation::from_images(images).expect("scale is a bijection");
        let mut device = Self::primitive(DeviceKind::Transposition(k), Solid::Icosahedron, perm);
        device.clock_shift = Some(k);
        device
    }

    pub fn kind(&self) -> DeviceKind {
        self.kind
    }

    pub fn name(&self) -> String {
        self.kind.short_name()
    }

    pub fn solid(&self) -> Solid {
        self.solid
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    /// Constituent device names in application order.
    pub fn trail(&self) -> &[String] {
        &self.trail
    }

    /// Net clock rotation, when the device is built only from transpositions.
    pub fn clock_shift(&self) -> Option<u8> {
        self.clock_shift
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity()
    }

    /// Directions the device leaves in place.
    pub fn fixed_directions(&self) -> Vec<Direction> {
        self.perm
            .fixed_points()
            .into_iter()
            .map(|v| Direction::new(self.solid, v).expect("in range"))
            .collect()
    }

    fn check_solid(&self, solid: Solid) -> Result<()> {
        if solid == self.solid {
            Ok(())
        } else {
            Err(Error::SolidMismatch {
                left: self.solid,
                right: solid,
            })
        }
    }

    pub fn apply(&self, dir: Direction) -> Result<Direction> {
        self.check_solid(dir.solid())?;
        Direction::new(self.solid, self.perm.apply(dir.vertex()))
    }

    /// Applies the device to every step of a sequence.
    pub fn apply_sequence(&self, seq: &MovementSequence) -> Result<MovementSequence> {
        self.check_solid(seq.solid())?;
        let steps = seq
            .steps()
            .iter()
            .map(|&d| self.apply(d))
            .collect::<Result<_>>()?;
        MovementSequence::new(steps)
    }

    /// `self` first, then `next`.
    pub fn then(&self, next: &Device) -> Result<Device> {
        compose_devices(self, next)
    }
}

impl fmt::Display for Device {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = if self.trail.is_empty() {
            "id".to_string()
        } else {
            self.trail.join(".")
        };
        write!(f, "{name} on {}: {}", self.solid, self.perm)
    }
}

/// The reflection fixing `plane` pointwise, found as the unique non-identity
/// element of that plane's pointwise stabilizer in the full symmetry group.
pub fn inversion_from_plane(p: &Polyhedron, plane: BodyPlane) -> Result<Device> {
    if p.kind() != Solid::Icosahedron {
        return Err(Error::UnsupportedSolid {
            expected: Solid::Icosahedron,
            found: p.kind(),
        });
    }
    let stabilizer = p
        .full_symmetry_group()
        .pointwise_set_stabilizer(plane.fixed_vertices())?;
    assert_eq!(
        stabilizer.order(),
        2,
        "a plane of an icosahedron is fixed by one reflection"
    );
    let perm = stabilizer.non_identity().next().expect("order 2").clone();
    let kind = match plane {
        BodyPlane::Vertical => DeviceKind::FrontBack,
        BodyPlane::Horizontal => DeviceKind::LowHigh,
        BodyPlane::Sagittal => DeviceKind::LeftRight,
    };
    Ok(Device::primitive(kind, Solid::Icosahedron, perm))
}

/// `d1` applied first, then `d2`; the permutation is `d2 ∘ d1`.
pub fn compose_devices(d1: &Device, d2: &Device) -> Result<Device> {
    d1.check_solid(d2.solid)?;
    let perm = d2.perm.compose(&d1.perm)?;
    let trail = d1.trail.iter().chain(&d2.trail).cloned().collect();
    let clock_shift = match (d1.clock_shift, d2.clock_shift) {
        (Some(a), Some(b)) => Some((a + b) % 12),
        _ => None,
    };
    Ok(Device {
        kind: DeviceKind::Composite,
        solid: d1.solid,
        perm,
        trail,
        clock_shift,
    })
}

/// Spatial opposite of an octahedral direction.
pub fn invert_octahedral(dir: Direction) -> Result<Direction> {
    Device::octahedral().apply(dir)
}

/// An ordered, nonempty list of directions from one solid.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MovementSequence {
    steps: Vec<Direction>,
}

impl MovementSequence {
    pub fn new(steps: Vec<Direction>) -> Result<MovementSequence> {
        let first = steps.first().ok_or(Error::EmptySequence)?;
        if let Some(other) = steps.iter().find(|d| d.solid() != first.solid()) {
            return Err(Error::SolidMismatch {
                left: first.solid(),
                right: other.solid(),
            });
        }
        Ok(MovementSequence { steps })
    }

    pub fn single(dir: Direction) -> MovementSequence {
        MovementSequence { steps: vec![dir] }
    }

    pub fn steps(&self) -> &[Direction] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn solid(&self) -> Solid {
        self.steps[0].solid()
    }

    /// Where the sequence ends up.
    pub fn destination(&self) -> Direction {
        *self.steps.last().expect("nonempty")
    }
}

impl fmt::Display for MovementSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.steps.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(d.token())?;
        }
        Ok(())
    }
}

/// Performing `p` and then `r`; only the final destination is kept.
pub fn oplus(p: &MovementSequence, r: &MovementSequence) -> Result<Direction> {
    if p.is_empty() || r.is_empty() {
        return Err(Error::EmptySequence);
    }
    if p.solid() != r.solid() {
        return Err(Error::SolidMismatch {
            left: p.solid(),
            right: r.solid(),
        });
    }
    Ok(r.destination())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Limb {
    LeftArm,
    RightArm,
    LeftLeg,
    RightLeg,
}

impl Limb {
    pub const ALL: [Limb; 4] = [Limb::LeftArm, Limb::RightArm, Limb::LeftLeg, Limb::RightLeg];

    pub fn name(self) -> &'static str {
        match self {
            Limb::LeftArm => "left-arm",
            Limb::RightArm => "right-arm",
            Limb::LeftLeg => "left-leg",
            Limb::RightLeg => "right-leg",
        }
    }

    pub fn title(self) -> &'static str {
        match self {
            Limb::LeftArm => "Left Arm",
            Limb::RightArm => "Right Arm",
            Limb::LeftLeg => "Left Leg",
            Limb::RightLeg => "Right Leg",
        }
    }

    /// Icosahedron vertex of the limb's standard position (0-based).
    pub fn standard_vertex(self) -> usize {
        match self {
            Limb::LeftArm => 3,
            Limb::RightArm => 2,
            Limb::LeftLeg => 11,
            Limb::RightLeg => 10,
        }
    }
}

impl FromStr for Limb {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace(['_', ' '], "-").as_str() {
            "left-arm" => Ok(Limb::LeftArm),
            "right-arm" => Ok(Limb::RightArm),
            "left-leg" => Ok(Limb::LeftLeg),
            "right-leg" => Ok(Limb::RightLeg),
            _ => Err(Error::UnknownLimb(s.to_string())),
        }
    }
}

/// The five directions around a limb's standard position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalZone {
    pub limb: Limb,
    pub standard: Direction,
    /// The zone in ring order: starting from the lowest-numbered vertex and
    /// walking around the standard vertex towards the lower of its two
    /// ring neighbours.
    pub range: Vec<Direction>,
}

impl NormalZone {
    pub fn range_set(&self) -> BTreeSet<Direction> {
        self.range.iter().copied().collect()
    }
}

/// The orbit of a neighbour of the standard vertex under that vertex's
/// stabilizer in the rotation group.
pub fn normal_zone(p: &Polyhedron, limb: Limb) -> Result<NormalZone> {
    if p.kind() != Solid::Icosahedron {
        return Err(Error::UnsupportedSolid {
            expected: Solid::Icosahedron,
            found: p.kind(),
        });
    }
    let standard = limb.standard_vertex();
    let neighbors = p.neighbors(standard)?;
    let start = *neighbors.first().expect("degree 5");
    let stabilizer = p.rotation_group().point_stabilizer(standard)?;
    let orbit = stabilizer.orbit(start)?;

    let mut ring = vec![start];
    while ring.len() < orbit.len() {
        let last = *ring.last().expect("nonempty");
        let next = orbit
            .iter()
            .copied()
            .filter(|&u| p.is_edge(last, u) && !ring.contains(&u))
            .min()
            .expect("orbit of a neighbour is a closed ring");
        ring.push(next);
    }

    Ok(NormalZone {
        limb,
        standard: p.direction(standard)?,
        range: ring.into_iter().map(|v| p.direction(v)).collect::<Result<_>>()?,
    })
}

/// Applies a device to each position of a trace form by way of the scale.
pub(crate) fn apply_on_positions(
    scale: &Scale,
    device: &Device,
    path: &[ClockPosition],
) -> Result<Vec<ClockPosition>> {
    if device.solid != Solid::Icosahedron {
        return Err(Error::UnsupportedSolid {
            expected: Solid::Icosahedron,
            found: device.solid,
        });
    }
    Ok(path
        .iter()
        .map(|&p| match device.clock_shift {
            Some(k) => p.shifted(k as i64),
            None => scale
                .position_of(device.perm.apply(scale.vertex_at(p)))
                .expect("bijection"),
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::PermGroup;

    fn ico(token: &str) -> Direction {
        Direction::from_token(token).unwrap()
    }

    fn seq(tokens: &[&str]) -> MovementSequence {
        MovementSequence::new(tokens.iter().map(|t| ico(t)).collect()).unwrap()
    }

    #[test]
    fn plane_inversions() {
        assert_eq!(Device::front_back().perm().to_string(), "(1 2)(5 7)(6 8)(9 10)");
        assert_eq!(Device::low_high().perm().to_string(), "(1 9)(2 10)(3 11)(4 12)");
        assert_eq!(Device::left_right().perm().to_string(), "(3 4)(5 6)(7 8)(11 12)");
    }

    #[test]
    fn inversion_requires_icosahedron() {
        let cube = Polyhedron::build(Solid::Cube);
        assert_eq!(
            inversion_from_plane(&cube, BodyPlane::Sagittal),
            Err(Error::UnsupportedSolid {
                expected: Solid::Icosahedron,
                found: Solid::Cube
            })
        );
    }

    #[test]
    fn apply_examples() {
        assert_eq!(Device::front_back().apply(ico("MRF")).unwrap(), ico("MRB"));
        assert_eq!(Device::low_high().apply(ico("HR")).unwrap(), ico("LR"));
        assert_eq!(Device::front_back().apply(ico("HR")).unwrap(), ico("HR"));
        assert_eq!(
            Device::front_back().apply(ico("UP")),
            Err(Error::SolidMismatch {
                left: Solid::Icosahedron,
                right: Solid::Octahedron
            })
        );
    }

    #[test]
    fn octahedral_inversion() {
        assert_eq!(invert_octahedral(ico("BACK")).unwrap(), ico("FWD"));
        assert_eq!(invert_octahedral(ico("UP")).unwrap(), ico("DOWN"));
        assert_eq!(invert_octahedral(ico("RIGHT")).unwrap(), ico("LEFT"));
        assert!(invert_octahedral(ico("FH")).is_err());
    }

    // Rebuild octahedral inversion axis by axis from orbits of half-turn
    // subgroups: I(v) = orb(v) - {v}.
    #[test]
    fn octahedral_inversion_from_half_turn_orbits() {
        let o = Polyhedron::build(Solid::Octahedron);
        let rotations = o.rotation_group();
        let half_turn_about = |a: usize, b: usize| {
            let axis_stab = rotations.pointwise_set_stabilizer([a, b]).unwrap();
            let half = axis_stab
                .elements()
                .iter()
                .find(|g| g.order() == 2)
                .unwrap()
                .clone();
            PermGroup::closure(&[half]).unwrap()
        };
        // Half turn about right-left pairs up/down and back/forward; the
        // stabilizer of RIGHT inside it is the whole two-element group.
        let about_x = half_turn_about(4, 5);
        let stab = about_x.point_stabilizer(4).unwrap();
        assert_eq!(stab.order(), 2);
        assert_eq!(stab.non_identity().next().unwrap().to_string(), "(1 2)(3 4)");
        // Half turn about up/down pairs right/left.
        let about_z = half_turn_about(0, 1);

        let mut images = vec![usize::MAX; 6];
        for (v, image) in images.iter_mut().enumerate() {
            let group = if v >= 4 { &about_z } else { &about_x };
            let orbit = group.orbit(v).unwrap();
            let others: Vec<usize> = orbit.into_iter().filter(|&u| u != v).collect();
            assert_eq!(others.len(), 1);
            *image = others[0];
        }
        assert_eq!(images, Device::octahedral().perm().images());
    }

    #[test]
    fn oplus_projects_destination() {
        let a = seq(&["MRF"]);
        let b = seq(&["MLB"]);
        assert_eq!(oplus(&a, &b).unwrap(), ico("MLB"));
        let fb = Device::front_back();
        let ia = fb.apply_sequence(&a).unwrap();
        let ib = fb.apply_sequence(&b).unwrap();
        assert_eq!(oplus(&ia, &ib).unwrap(), ico("MLF"));
        assert_eq!(fb.apply(oplus(&a, &b).unwrap()).unwrap(), ico("MLF"));
        assert_eq!(oplus(&a, &a).unwrap(), ico("MRF"));
        let up = MovementSequence::single(ico("UP"));
        assert!(oplus(&a, &up).is_err());
    }

    #[test]
    fn sequences_require_one_solid() {
        assert_eq!(MovementSequence::new(vec![]), Err(Error::EmptySequence));
        assert!(MovementSequence::new(vec![ico("FH"), ico("UP")]).is_err());
    }

    #[test]
    fn apply_sequence_examples() {
        let fb = Device::front_back();
        assert_eq!(
            fb.apply_sequence(&seq(&["MRF", "MLB"])).unwrap(),
            seq(&["MRB", "MLF"])
        );
        let id = Device::identity(Solid::Icosahedron);
        assert_eq!(
            id.apply_sequence(&seq(&["FH", "LL"])).unwrap(),
            seq(&["FH", "LL"])
        );
        let triple = compose_devices(
            &compose_devices(&Device::front_back(), &Device::left_right()).unwrap(),
            &Device::low_high(),
        )
        .unwrap();
        assert_eq!(triple.apply_sequence(&seq(&["FH"])).unwrap(), seq(&["BL"]));
    }

    #[test]
    fn composition() {
        let fb_lr = compose_devices(&Device::front_back(), &Device::left_right()).unwrap();
        assert_eq!(fb_lr.apply(ico("MRF")).unwrap(), ico("MLB"));
        assert_eq!(fb_lr.kind(), DeviceKind::Composite);
        assert_eq!(fb_lr.trail(), &["fb".to_string(), "lr".to_string()]);
        assert!(compose_devices(&Device::front_back(), &Device::front_back())
            .unwrap()
            .is_identity());
        let all = fb_lr.then(&Device::low_high()).unwrap();
        assert_eq!(all.perm(), Device::diametral().perm());
        assert!(compose_devices(&Device::front_back(), &Device::octahedral()).is_err());
    }

    #[test]
    fn fixed_directions_are_plane_vertices() {
        let fixed: Vec<&str> = Device::front_back()
            .fixed_directions()
            .iter()
            .map(|d| d.token())
            .collect();
        assert_eq!(fixed, ["HR", "HL", "LR", "LL"]);
        assert!(Device::diametral().fixed_directions().is_empty());
    }

    #[test]
    fn zones() {
        let p = Polyhedron::build(Solid::Icosahedron);
        let tokens = |z: &NormalZone| z.range.iter().map(|d| d.token()).collect::<Vec<_>>().join(" ");
        let left_arm = normal_zone(&p, Limb::LeftArm).unwrap();
        assert_eq!(left_arm.standard.token(), "HL");
        assert_eq!(tokens(&left_arm), "FH BH MLB LL MLF");
        let right_arm = normal_zone(&p, Limb::RightArm).unwrap();
        assert_eq!(tokens(&right_arm), "FH BH MRB LR MRF");
        let right_leg = normal_zone(&p, Limb::RightLeg).unwrap();
        assert_eq!(right_leg.standard.token(), "LR");
        let expected: BTreeSet<Direction> = ["MRF", "HR", "MRB", "BL", "FL"].iter().map(|t| ico(t)).collect();
        assert_eq!(right_leg.range_set(), expected);
        for limb in Limb::ALL {
            assert_eq!(normal_zone(&p, limb).unwrap().range.len(), 5);
        }
        assert!(normal_zone(&Polyhedron::build(Solid::Octahedron), Limb::LeftArm).is_err());
        assert_eq!("torso".parse::<Limb>(), Err(Error::UnknownLimb("torso".into())));
        assert_eq!("Left Arm".parse::<Limb>().unwrap(), Limb::LeftArm);
    }
}
