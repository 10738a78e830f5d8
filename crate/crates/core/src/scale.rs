//! The twelve-position clock of a scale on the icosahedron.
//!
//! A [`Scale`] is a bijection between the clock positions `0..12` and the
//! twelve icosahedron vertices. Trace forms are paths of clock positions,
//! so clock arithmetic (transposition, the `+6` diametral map, cosets of
//! the subgroups of Z12) acts on them directly, and vertex devices act on
//! them through the scale.
//!
//! Scales and trace forms are loaded from JSON:
//!
//! ```json
//! {
//!   "scales": [{ "name": "primary", "order": [3, 10, 5, 4, 9, 7, 12, 1, 8, 11, 2, 6] }],
//!   "trace_forms": [{ "name": "girdle", "scale": "primary", "path": [0, 2, 4, 6, 8, 10] }]
//! }
//! ```
//!
//! `order` lists 1-based vertex numbers by clock position; `path` lists
//! clock positions.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

use crate::devices::{apply_on_positions, Device, MovementSequence};
use crate::error::{Error, Result};
use crate::polyhedra::{Direction, Polyhedron, Solid};

const BUNDLED_CONFIG: &str = include_str!("../data/scales.json");

/// A position on the twelve-hour clock, `0..=11`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub struct ClockPosition(u8);

impl ClockPosition {
    pub fn new(value: usize) -> Result<ClockPosition> {
        if value < 12 {
            Ok(ClockPosition(value as u8))
        } else {
            Err(Error::OutOfRange {
                index: value,
                domain_size: 12,
            })
        }
    }

    /// Reduces any integer mod 12.
    pub fn wrapping(value: i64) -> ClockPosition {
        ClockPosition(value.rem_euclid(12) as u8)
    }

    pub fn value(self) -> usize {
        self.0 as usize
    }

    pub fn shifted(self, k: i64) -> ClockPosition {
        Self::wrapping(self.0 as i64 + k)
    }

    pub fn all() -> impl Iterator<Item = ClockPosition> {
        (0..12).map(ClockPosition)
    }
}

impl Add<i64> for ClockPosition {
    type Output = ClockPosition;

    fn add(self, k: i64) -> ClockPosition {
        self.shifted(k)
    }
}

impl TryFrom<u8> for ClockPosition {
    type Error = Error;

    fn try_from(value: u8) -> Result<Self> {
        Self::new(value as usize)
    }
}

impl From<ClockPosition> for u8 {
    fn from(p: ClockPosition) -> u8 {
        p.0
    }
}

impl fmt::Display for ClockPosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The `+6` map: the opposite end of a clock diameter.
pub fn diametral_clock(p: ClockPosition) -> ClockPosition {
    p.shifted(6)
}

/// A bijection from clock positions to icosahedron vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scale {
    name: String,
    order: [usize; 12],
    positions: [u8; 12],
}

impl Scale {
    /// `vertex_order[i]` is the 0-based vertex at clock position `i`.
    pub fn new(name: impl Into<String>, vertex_order: &[usize]) -> Result<Scale> {
        if vertex_order.len() != 12 {
            return Err(Error::InvalidScale(format!(
                "expected 12 vertices, got {}",
                vertex_order.len()
            )));
        }
        let mut order = [0; 12];
        let mut positions = [u8::MAX; 12];
        for (i, &v) in vertex_order.iter().enumerate() {
            if v >= 12 {
                return Err(Error::InvalidScale(format!("vertex v{} does not exist", v + 1)));
            }
            if positions[v] != u8::MAX {
                return Err(Error::InvalidScale(format!("vertex v{} appears twice", v + 1)));
            }
            order[i] = v;
            positions[v] = i as u8;
        }
        Ok(Scale {
            name: name.into(),
            order,
            positions,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// 0-based vertices by clock position.
    pub fn order(&self) -> &[usize; 12] {
        &self.order
    }

    pub fn vertex_at(&self, p: ClockPosition) -> usize {
        self.order[p.value()]
    }

    pub fn try_vertex_at(&self, position: usize) -> Result<usize> {
        Ok(self.vertex_at(ClockPosition::new(position)?))
    }

    pub fn position_of(&self, vertex: usize) -> Result<ClockPosition> {
        self.positions
            .get(vertex)
            .map(|&p| ClockPosition(p))
            .ok_or(Error::OutOfRange {
                index: vertex,
                domain_size: 12,
            })
    }

    pub fn direction_at(&self, p: ClockPosition) -> Direction {
        Direction::new(Solid::Icosahedron, self.vertex_at(p)).expect("icosahedron vertex")
    }

    /// Whether opposite clock positions hold antipodal vertices.
    pub fn is_diametrally_compatible(&self, icosahedron: &Polyhedron) -> bool {
        ClockPosition::all()
            .all(|p| icosahedron.antipode(self.vertex_at(p)).ok() == Some(self.vertex_at(diametral_clock(p))))
    }

    /// Directions visited by a path.
    pub fn directions(&self, form: &TraceForm) -> MovementSequence {
        MovementSequence::new(form.path.iter().map(|&p| self.direction_at(p)).collect())
            .expect("trace forms are nonempty")
    }

    /// Clock path of an icosahedral movement sequence.
    pub fn trace_form(&self, name: impl Into<String>, seq: &MovementSequence) -> Result<TraceForm> {
        if seq.solid() != Solid::Icosahedron {
            return Err(Error::UnsupportedSolid {
                expected: Solid::Icosahedron,
                found: seq.solid(),
            });
        }
        let path = seq
            .steps()
            .iter()
            .map(|d| self.position_of(d.vertex()))
            .collect::<Result<_>>()?;
        TraceForm::new(name, path)
    }
}

/// `position i ↦ vertex_order[i]`, validating the bijection.
pub fn make_scale(name: &str, vertex_order: &[usize]) -> Result<Scale> {
    Scale::new(name, vertex_order)
}

/// A named, nonempty path of clock positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceForm {
    name: String,
    path: Vec<ClockPosition>,
}

impl TraceForm {
    pub fn new(name: impl Into<String>, path: Vec<ClockPosition>) -> Result<TraceForm> {
        if path.is_empty() {
            return Err(Error::EmptySequence);
        }
        Ok(TraceForm {
            name: name.into(),
            path,
        })
    }

    pub fn from_values(name: impl Into<String>, values: &[usize]) -> Result<TraceForm> {
        let path = values
            .iter()
            .map(|&v| ClockPosition::new(v))
            .collect::<Result<_>>()?;
        Self::new(name, path)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn path(&self) -> &[ClockPosition] {
        &self.path
    }

    pub fn values(&self) -> Vec<usize> {
        self.path.iter().map(|p| p.value()).collect()
    }

    pub fn renamed(&self, name: impl Into<String>) -> TraceForm {
        TraceForm {
            name: name.into(),
            path: self.path.clone(),
        }
    }
}

impl fmt::Display for TraceForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.path.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Rotates every position by `k` (taken mod 12).
pub fn transpose(k: i64, form: &TraceForm) -> TraceForm {
    TraceForm {
        name: form.name.clone(),
        path: form.path.iter().map(|p| p.shifted(k)).collect(),
    }
}

/// Cosets of `step·Z12` in Z12, each as a sorted set, ordered by smallest
/// element. Step 4 gives the triangles, 3 the quadrangles and 6 the
/// diameters.
pub fn coset_family(step: usize) -> Result<Vec<BTreeSet<ClockPosition>>> {
    if step == 0 || 12 % step != 0 {
        return Err(Error::InvalidSubgroup { step });
    }
    Ok((0..step)
        .map(|r| (r..12).step_by(step).map(|v| ClockPosition(v as u8)).collect())
        .collect())
}

/// Pushes a device through the scale onto every position of `form`.
///
/// Transposition-only devices rotate the clock directly; every other
/// device maps the vertex at each position and reads back its position.
pub fn apply_device_on_clock(scale: &Scale, device: &Device, form: &TraceForm) -> Result<TraceForm> {
    let path = apply_on_positions(scale, device, &form.path)?;
    TraceForm::new(form.name.clone(), path)
}

#[derive(Debug, Deserialize, Serialize)]
struct ConfigFile {
    #[serde(default)]
    scales: Vec<ScaleEntry>,
    #[serde(default)]
    trace_forms: Vec<TraceFormEntry>,
}

#[derive(Debug, Deserialize, Serialize)]
struct ScaleEntry {
    name: String,
    order: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    note: Option<String>,
}

#[derive(Debug, Deserialize, Serialize)]
struct TraceFormEntry {
    name: String,
    scale: String,
    path: Vec<usize>,
    #[serde(default = "default_verified")]
    verified: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    note: Option<String>,
}

fn default_verified() -> bool {
    true
}

/// A trace form together with the scale it is drawn on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StoredTraceForm {
    pub form: TraceForm,
    pub scale: String,
    pub verified: bool,
    pub note: Option<String>,
}

/// Scales and trace forms from a config file.
#[derive(Debug, Clone)]
pub struct ScaleLibrary {
    scales: Vec<(Scale, Option<String>)>,
    trace_forms: Vec<StoredTraceForm>,
    warnings: Vec<String>,
}

impl ScaleLibrary {
    /// The configuration shipped with the crate. Its scales must be
    /// diametrally compatible.
    pub fn bundled() -> ScaleLibrary {
        Self::from_json_with(BUNDLED_CONFIG, true).expect("bundled config is valid")
    }

    pub fn bundled_json() -> &'static str {
        BUNDLED_CONFIG
    }

    /// Loads a user config. Scales whose opposite positions are not
    /// antipodal are accepted with a warning.
    pub fn from_json(text: &str) -> Result<ScaleLibrary> {
        Self::from_json_with(text, false)
    }

    pub fn from_json_with(text: &str, require_diametral: bool) -> Result<ScaleLibrary> {
        let file: ConfigFile = serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        let icosahedron = Solid::Icosahedron.polyhedron();
        let mut scales: Vec<(Scale, Option<String>)> = Vec::new();
        let mut warnings = Vec::new();

        for entry in file.scales {
            if scales.iter().any(|(s, _)| s.name == entry.name) {
                return Err(Error::Config(format!("duplicate scale `{}`", entry.name)));
            }
            let zero_based = entry
                .order
                .iter()
                .map(|&v| {
                    v.checked_sub(1).ok_or_else(|| {
                        Error::InvalidScale(format!("scale `{}`: vertex numbers are 1-based", entry.name))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            let scale = Scale::new(entry.name.clone(), &zero_based)
                .map_err(|e| Error::InvalidScale(format!("scale `{}`: {e}", entry.name)))?;
            if !scale.is_diametrally_compatible(icosahedron) {
                let message = format!(
                    "scale `{}`: opposite clock positions do not hold opposite directions",
                    entry.name
                );
                if require_diametral {
                    return Err(Error::InvalidScale(message));
                }
                warnings.push(message);
            }
            scales.push((scale, entry.note));
        }

        let mut trace_forms: Vec<StoredTraceForm> = Vec::new();
        for entry in file.trace_forms {
            if trace_forms.iter().any(|t| t.form.name == entry.name) {
                return Err(Error::Config(format!("duplicate trace form `{}`", entry.name)));
            }
            if !scales.iter().any(|(s, _)| s.name == entry.scale) {
                return Err(Error::Config(format!(
                    "trace form `{}` refers to unknown scale `{}`",
                    entry.name, entry.scale
                )));
            }
            let form = TraceForm::from_values(entry.name.clone(), &entry.path)
                .map_err(|e| Error::Config(format!("trace form `{}`: {e}", entry.name)))?;
            trace_forms.push(StoredTraceForm {
                form,
                scale: entry.scale,
                verified: entry.verified,
                note: entry.note,
            });
        }

        Ok(ScaleLibrary {
            scales,
            trace_forms,
            warnings,
        })
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    pub fn scales(&self) -> impl Iterator<Item = &Scale> {
        self.scales.iter().map(|(s, _)| s)
    }

    pub fn scale(&self, name: &str) -> Result<&Scale> {
        self.scales
            .iter()
            .map(|(s, _)| s)
            .find(|s| s.name == name)
            .ok_or_else(|| Error::UnknownScale(name.to_string()))
    }

    pub fn scale_note(&self, name: &str) -> Option<&str> {
        self.scales
            .iter()
            .find(|(s, _)| s.name == name)
            .and_then(|(_, n)| n.as_deref())
    }

    /// The first scale listed, used when none is named.
    pub fn default_scale(&self) -> Option<&Scale> {
        self.scales.first().map(|(s, _)| s)
    }

    pub fn trace_forms(&self) -> &[StoredTraceForm] {
        &self.trace_forms
    }

    pub fn trace_form(&self, name: &str) -> Result<&StoredTraceForm> {
        self.trace_forms
            .iter()
            .find(|t| t.form.name == name)
            .ok_or_else(|| Error::UnknownTraceForm(name.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn positions(values: &[usize]) -> BTreeSet<ClockPosition> {
        values.iter().map(|&v| ClockPosition::new(v).unwrap()).collect()
    }

    #[test]
    fn make_scale_validates() {
        assert!(make_scale("id", &(0..12).collect::<Vec<_>>()).is_ok());
        assert!(matches!(
            make_scale("short", &(0..11).collect::<Vec<_>>()),
            Err(Error::InvalidScale(_))
        ));
        let mut dup: Vec<usize> = (0..12).collect();
        dup[11] = 0;
        assert!(matches!(make_scale("dup", &dup), Err(Error::InvalidScale(_))));
        let mut big: Vec<usize> = (0..12).collect();
        big[0] = 12;
        assert!(matches!(make_scale("big", &big), Err(Error::InvalidScale(_))));
    }

    #[test]
    fn lookups_round_trip() {
        let library = ScaleLibrary::bundled();
        let s = library.scale("primary").unwrap();
        let seven = ClockPosition::new(7).unwrap();
        assert_eq!(s.position_of(s.vertex_at(seven)).unwrap(), seven);
        assert_eq!(s.vertex_at(s.position_of(2).unwrap()), 2);
        let onto: BTreeSet<usize> = ClockPosition::all().map(|p| s.vertex_at(p)).collect();
        assert_eq!(onto.len(), 12);
        assert!(s.position_of(12).is_err());
        assert!(s.try_vertex_at(12).is_err());
    }

    #[test]
    fn transposition() {
        let f = TraceForm::from_values("t", &[0, 4, 8]).unwrap();
        assert_eq!(transpose(0, &f), f);
        assert_eq!(transpose(12, &f), f);
        assert_eq!(transpose(3, &f).values(), vec![3, 7, 11]);
        assert_eq!(transpose(-1, &f).values(), vec![11, 3, 7]);
    }

    #[test]
    fn diametral() {
        assert_eq!(diametral_clock(ClockPosition::new(0).unwrap()).value(), 6);
        assert_eq!(diametral_clock(ClockPosition::new(6).unwrap()).value(), 0);
        for p in ClockPosition::all() {
            assert_eq!(diametral_clock(diametral_clock(p)), p);
            assert_ne!(diametral_clock(p), p);
        }
    }

    #[test]
    fn cosets() {
        let triangles = coset_family(4).unwrap();
        assert_eq!(
            triangles,
            vec![
                positions(&[0, 4, 8]),
                positions(&[1, 5, 9]),
                positions(&[2, 6, 10]),
                positions(&[3, 7, 11])
            ]
        );
        let quadrangles = coset_family(3).unwrap();
        assert_eq!(quadrangles.len(), 3);
        assert!(quadrangles.iter().all(|q| q.len() == 4));
        let diameters = coset_family(6).unwrap();
        assert_eq!(diameters.len(), 6);
        assert!(diameters.iter().all(|d| d.len() == 2));
        assert_eq!(coset_family(5), Err(Error::InvalidSubgroup { step: 5 }));
        assert_eq!(coset_family(0), Err(Error::InvalidSubgroup { step: 0 }));
    }

    #[test]
    fn bundled_scale_is_a_transversal_circuit() {
        let library = ScaleLibrary::bundled();
        let s = library.default_scale().unwrap();
        let ico = Solid::Icosahedron.polyhedron();
        assert!(s.is_diametrally_compatible(ico));
        for p in ClockPosition::all() {
            let (a, b) = (s.vertex_at(p), s.vertex_at(p + 1));
            assert!(!ico.is_edge(a, b));
            assert_ne!(ico.antipode(a).unwrap(), b);
        }
        assert!(library.warnings().is_empty());
    }

    #[test]
    fn bundled_girdle_is_an_edge_ring() {
        let library = ScaleLibrary::bundled();
        let girdle = library.trace_form("girdle").unwrap();
        assert!(!girdle.verified);
        let s = library.scale(&girdle.scale).unwrap();
        let ico = Solid::Icosahedron.polyhedron();
        let path = girdle.form.path();
        for (i, &p) in path.iter().enumerate() {
            let q = path[(i + 1) % path.len()];
            assert!(ico.is_edge(s.vertex_at(p), s.vertex_at(q)));
        }
    }

    #[test]
    fn device_on_clock() {
        let library = ScaleLibrary::bundled();
        let s = library.scale("primary").unwrap();
        let path = vec![s.position_of(4).unwrap(), s.position_of(2).unwrap()];
        let form = TraceForm::new("f", path).unwrap();
        let out = apply_device_on_clock(s, &Device::diametral(), &form).unwrap();
        assert_eq!(
            out.path(),
            &[s.position_of(7).unwrap(), s.position_of(11).unwrap()]
        );
        let id = Device::identity(Solid::Icosahedron);
        assert_eq!(apply_device_on_clock(s, &id, &form).unwrap(), form);
        let t6 = Device::transposition(s, 6);
        let via_t6 = apply_device_on_clock(s, &t6, &form).unwrap();
        let pointwise: Vec<ClockPosition> = form.path().iter().map(|&p| diametral_clock(p)).collect();
        assert_eq!(via_t6.path(), pointwise.as_slice());
        assert!(apply_device_on_clock(s, &Device::octahedral(), &form).is_err());
    }

    #[test]
    fn user_configs() {
        let incompatible = r#"{"scales":[{"name":"plain","order":[1,2,3,4,5,6,7,8,9,10,11,12]}]}"#;
        let library = ScaleLibrary::from_json(incompatible).unwrap();
        assert_eq!(library.warnings().len(), 1);
        assert!(ScaleLibrary::from_json_with(incompatible, true).is_err());

        let zero = r#"{"scales":[{"name":"z","order":[0,2,3,4,5,6,7,8,9,10,11,12]}]}"#;
        assert!(matches!(
            ScaleLibrary::from_json(zero),
            Err(Error::InvalidScale(_))
        ));
        let dangling = r#"{"scales":[],"trace_forms":[{"name":"t","scale":"nope","path":[0]}]}"#;
        assert!(matches!(ScaleLibrary::from_json(dangling), Err(Error::Config(_))));
        let bad_position = r#"{"scales":[{"name":"plain","order":[1,2,3,4,5,6,7,8,9,10,11,12]}],
            "trace_forms":[{"name":"t","scale":"plain","path":[12]}]}"#;
        assert!(matches!(
            ScaleLibrary::from_json(bad_position),
            Err(Error::Config(_))
        ));
        assert!(matches!(ScaleLibrary::from_json("{"), Err(Error::Config(_))));
        assert!(matches!(
            ScaleLibrary::bundled().scale("nope"),
            Err(Error::UnknownScale(_))
        ));
    }

    #[test]
    fn clock_position_serializes_as_integer() {
        let p = ClockPosition::new(9).unwrap();
        assert_eq!(serde_json::to_string(&p).unwrap(), "9");
        assert!(serde_json::from_str::<ClockPosition>("12").is_err());
    }
}
