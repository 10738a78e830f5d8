//! The worked examples behind `kinesphere check`.
//!
//! Every case recomputes its answer from the library and compares it with
//! the value printed alongside the original derivation. A case that
//! disagrees is reported as `FAIL` with both sides shown; nothing is
//! special-cased to turn green.

use std::collections::BTreeSet;
use std::io::{self, Write};
use std::time::{Duration, Instant};

use kinesphere::{
    coset_family, inversion_from_plane, normal_zone, oplus, parse_device_expr, parse_sequence,
    vertex_for_direction, BodyPlane, Device, Direction, Limb, MovementSequence, PermGroup, Permutation,
    Solid,
};

type Outcome = Result<(), String>;

pub struct Case {
    pub id: &'static str,
    pub title: &'static str,
    run: fn() -> Outcome,
}

pub struct CaseResult {
    pub id: &'static str,
    pub title: &'static str,
    pub outcome: Outcome,
}

pub struct Report {
    pub results: Vec<CaseResult>,
    pub elapsed: Duration,
}

impl Report {
    pub fn passed(&self) -> usize {
        self.results.iter().filter(|r| r.outcome.is_ok()).count()
    }

    pub fn failed(&self) -> impl Iterator<Item = &CaseResult> {
        self.results.iter().filter(|r| r.outcome.is_err())
    }

    pub fn all_passed(&self) -> bool {
        self.failed().next().is_none()
    }

    pub fn write(&self, out: &mut dyn Write) -> io::Result<()> {
        for r in &self.results {
            match &r.outcome {
                Ok(()) => writeln!(out, "PASS {:<22} {}", r.id, r.title)?,
                Err(detail) => writeln!(out, "FAIL {:<22} {}\n     {}", r.id, r.title, detail)?,
            }
        }
        writeln!(
            out,
            "{} passed, {} failed, {} total in {:.3}s",
            self.passed(),
            self.results.len() - self.passed(),
            self.results.len(),
            self.elapsed.as_secs_f64()
        )
    }
}

pub fn run_all() -> Report {
    let start = Instant::now();
    let results = cases()
        .iter()
        .map(|c| CaseResult {
            id: c.id,
            title: c.title,
            outcome: (c.run)(),
        })
        .collect();
    Report {
        results,
        elapsed: start.elapsed(),
    }
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(actual: T, expected: T) -> Outcome {
    if actual == expected {
        Ok(())
    } else {
        Err(format!("expected {expected:?}, got {actual:?}"))
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// 1-based vertex numbers to 0-based indices.
fn vs(items: &[usize]) -> BTreeSet<usize> {
    items.iter().map(|v| v - 1).collect()
}

fn blocks(items: &[&[usize]]) -> Vec<BTreeSet<usize>> {
    items.iter().map(|b| vs(b)).collect()
}

fn cycles(text: &str, n: usize) -> Result<Permutation, String> {
    Permutation::parse_cycles(text, n).map_err(err)
}

fn show_blocks(bs: &[BTreeSet<usize>]) -> String {
    bs.iter()
        .map(|b| {
            format!(
                "{{{}}}",
                b.iter()
                    .map(|v| format!("v{}", v + 1))
                    .collect::<Vec<_>>()
                    .join(",")
            )
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn partition_matches(group: &PermGroup, expected: &[BTreeSet<usize>]) -> Outcome {
    let partition = group.orbit_partition();
    if partition.same_blocks_as(expected) {
        Ok(())
    } else {
        Err(format!(
            "expected {}, got {}",
            show_blocks(expected),
            show_blocks(partition.blocks())
        ))
    }
}

fn element_set(group: &PermGroup) -> BTreeSet<String> {
    group.elements().iter().map(|p| p.to_string()).collect()
}

fn expect_elements(group: &PermGroup, expected: &[&str]) -> Outcome {
    let expected: BTreeSet<String> = expected.iter().map(|s| s.to_string()).collect();
    expect_eq(element_set(group), expected)
}

fn dir(token: &str) -> Result<Direction, String> {
    Direction::from_token(token).map_err(err)
}

fn seq(text: &str) -> Result<MovementSequence, String> {
    parse_sequence(text).map_err(err)
}

fn ico_vertex(v: usize) -> Result<Direction, String> {
    Direction::new(Solid::Icosahedron, v - 1).map_err(err)
}

/// The half-turn about the axis through two opposite vertices of the
/// octahedron: the involution among the rotations fixing both.
fn octahedral_half_turn(a: usize, b: usize) -> Result<PermGroup, String> {
    let rot = Solid::Octahedron.polyhedron().rotation_group();
    let axis = rot.pointwise_set_stabilizer([a - 1, b - 1]).map_err(err)?;
    let half = axis
        .non_identity()
        .find(|p| p.is_involution())
        .ok_or("no half-turn about the axis")?;
    PermGroup::closure(std::slice::from_ref(half)).map_err(err)
}

/// The half-turn about the axis through the midpoints of edge v1v2 and
/// edge v9v10, taken from the setwise stabilizer of {v1, v2}.
fn edge_half_turn() -> Result<PermGroup, String> {
    let rot = Solid::Icosahedron.polyhedron().rotation_group();
    rot.setwise_stabilizer(vs(&[1, 2])).map_err(err)
}

fn cli(args: &[&str]) -> (i32, String) {
    let mut argv = vec!["kinesphere"];
    argv.extend_from_slice(args);
    let (code, out, _) = crate::capture(argv);
    (code, out)
}

pub fn cases() -> Vec<Case> {
    vec![
        Case {
            id: "cycles/octa-pair",
            title: "(v1 v2)(v3 v4) on 6 points swaps v1,v2 and v3,v4, fixes v5,v6",
            run: || {
                let p = Permutation::from_cycles(&[[0, 1], [2, 3]], 6).map_err(err)?;
                expect_eq(p.images().to_vec(), vec![1, 0, 3, 2, 4, 5])
            },
        },
        Case {
            id: "cycles/low-high",
            title: "(v1 v9)(v2 v10)(v3 v11)(v4 v12) is the low-high involution",
            run: || {
                let p = Permutation::from_cycles(&[[0, 8], [1, 9], [2, 10], [3, 11]], 12).map_err(err)?;
                expect_eq(&p, Device::low_high().perm())
            },
        },
        Case {
            id: "closure/order-2",
            title: "closure of (v1 v2)(v3 v4) has order 2",
            run: || {
                let g = PermGroup::closure(&[cycles("(1 2)(3 4)", 6)?]).map_err(err)?;
                expect_eq(g.order(), 2)
            },
        },
        Case {
            id: "orbit/octa-v3",
            title: "orb(v3) under <(v1 v2)(v3 v4)> is {v3, v4}",
            run: || {
                let g = PermGroup::closure(&[cycles("(1 2)(3 4)", 6)?]).map_err(err)?;
                expect_eq(g.orbit(2).map_err(err)?, vs(&[3, 4]))
            },
        },
        Case {
            id: "orbits/octa-pairs",
            title: "<(v1 v2)(v3 v4)> has orbits {v1,v2},{v3,v4} and fixes v5,v6",
            run: || {
                let g = PermGroup::closure(&[cycles("(1 2)(3 4)", 6)?]).map_err(err)?;
                partition_matches(&g, &blocks(&[&[1, 2], &[3, 4], &[5], &[6]]))
            },
        },
        Case {
            id: "orbits/low-high",
            title: "<lh> pairs v1-v9, v2-v10, v3-v11, v4-v12 and fixes v5..v8",
            run: || {
                let g = PermGroup::closure(std::slice::from_ref(Device::low_high().perm())).map_err(err)?;
                partition_matches(
                    &g,
                    &blocks(&[&[1, 9], &[2, 10], &[3, 11], &[4, 12], &[5], &[6], &[7], &[8]]),
                )
            },
        },
        Case {
            id: "orbits/front-back",
            title: "<fb> pairs v1-v2, v5-v7, v6-v8, v9-v10 and fixes v3,v4,v11,v12",
            run: || {
                let g = PermGroup::closure(std::slice::from_ref(Device::front_back().perm())).map_err(err)?;
                partition_matches(
                    &g,
                    &blocks(&[&[1, 2], &[5, 7], &[6, 8], &[9, 10], &[3], &[4], &[11], &[12]]),
                )
            },
        },
        Case {
            id: "orbits/edge-half-turn",
            title: "<rho180 about the v1v2 edge axis> has six pairs incl. {v5,v7},{v6,v8}",
            run: || {
                let g = edge_half_turn()?;
                partition_matches(
                    &g,
                    &blocks(&[&[1, 2], &[3, 4], &[5, 7], &[6, 8], &[9, 10], &[11, 12]]),
                )
            },
        },
        Case {
            id: "stab/octa-half-turn",
            title: "stab(v5) in <rho180 about the v5-v6 axis> is {e, (v1 v2)(v3 v4)}",
            run: || {
                let g = octahedral_half_turn(5, 6)?;
                let stab = g.point_stabilizer(4).map_err(err)?;
                expect_elements(&stab, &["e", "(1 2)(3 4)"])
            },
        },
        Case {
            id: "stab/horizontal-plane",
            title: "pointwise stabilizer of {v5..v8} in the order-120 group is {e, lh}",
            run: || {
                let full = Solid::Icosahedron.polyhedron().full_symmetry_group();
                let stab = full.pointwise_set_stabilizer(vs(&[5, 6, 7, 8])).map_err(err)?;
                expect_elements(&stab, &["e", "(1 9)(2 10)(3 11)(4 12)"])
            },
        },
        Case {
            id: "stab/sagittal-plane",
            title: "pointwise stabilizer of {v1,v2,v9,v10} in the order-120 group is {e, lr}",
            run: || {
                let full = Solid::Icosahedron.polyhedron().full_symmetry_group();
                let stab = full.pointwise_set_stabilizer(vs(&[1, 2, 9, 10])).map_err(err)?;
                expect_elements(&stab, &["e", "(3 4)(5 6)(7 8)(11 12)"])
            },
        },
        Case {
            id: "stab/edge-setwise",
            title: "setwise stabilizer of {v1,v2} in the rotation group is {e, rho180}",
            run: || {
                let g = edge_half_turn()?;
                let rho = g.non_identity().next().ok_or("stabilizer is trivial")?;
                expect_eq((g.order(), rho.order(), rho.fixed_points().len()), (2, 2, 0))
            },
        },
        Case {
            id: "solid/octahedron",
            title: "octahedron has 6 vertices, 12 edges, v1 is UP (head)",
            run: || {
                let p = Solid::Octahedron.polyhedron();
                let v1 = p.direction(0).map_err(err)?;
                expect_eq((p.vertex_count(), p.edges().len(), v1.token()), (6, 12, "UP"))
            },
        },
        Case {
            id: "neighbors/v4",
            title: "icosahedron neighbours of v4 are {v1,v2,v6,v8,v12}",
            run: || {
                let p = Solid::Icosahedron.polyhedron();
                expect_eq(p.neighbors(3).map_err(err)?.clone(), vs(&[1, 2, 6, 8, 12]))
            },
        },
        Case {
            id: "neighbors/v11",
            title: "icosahedron neighbours of v11 are {v3,v5,v7,v9,v10}",
            run: || {
                let p = Solid::Icosahedron.polyhedron();
                expect_eq(p.neighbors(10).map_err(err)?.clone(), vs(&[3, 5, 7, 9, 10]))
            },
        },
        Case {
            id: "antipode/octa-v1",
            title: "the octahedral antipode of v1 is v2",
            run: || expect_eq(Solid::Octahedron.polyhedron().antipode(0).map_err(err)?, 1),
        },
        Case {
            id: "antipode/ico-v5",
            title: "the icosahedral antipode of v5 (MRF) is v8 (MLB)",
            run: || expect_eq(Solid::Icosahedron.polyhedron().antipode(4).map_err(err)?, 7),
        },
        Case {
            id: "token/FH",
            title: "FH is icosahedron v1",
            run: || expect_eq(vertex_for_direction("FH").map_err(err)?, (Solid::Icosahedron, 0)),
        },
        Case {
            id: "token/MRB",
            title: "MRB is icosahedron v7",
            run: || expect_eq(vertex_for_direction("MRB").map_err(err)?, (Solid::Icosahedron, 6)),
        },
        Case {
            id: "token/UP",
            title: "UP is octahedron v1",
            run: || expect_eq(vertex_for_direction("UP").map_err(err)?, (Solid::Octahedron, 0)),
        },
        Case {
            id: "plane/horizontal",
            title: "the horizontal plane induces lh = (v1 v9)(v2 v10)(v3 v11)(v4 v12)",
            run: || {
                let d = inversion_from_plane(Solid::Icosahedron.polyhedron(), BodyPlane::Horizontal)
                    .map_err(err)?;
                expect_eq(d.perm().clone(), cycles("(1 9)(2 10)(3 11)(4 12)", 12)?)
            },
        },
        Case {
            id: "plane/sagittal",
            title: "the sagittal plane induces lr = (v3 v4)(v5 v6)(v7 v8)(v11 v12)",
            run: || {
                let d = inversion_from_plane(Solid::Icosahedron.polyhedron(), BodyPlane::Sagittal)
                    .map_err(err)?;
                expect_eq(d.perm().clone(), cycles("(3 4)(5 6)(7 8)(11 12)", 12)?)
            },
        },
        Case {
            id: "device/fb-MRF",
            title: "fb sends MRF (v5) to MRB (v7)",
            run: || expect_eq(Device::front_back().apply(dir("MRF")?).map_err(err)?, dir("MRB")?),
        },
        Case {
            id: "device/lh-HR",
            title: "lh sends HR (v3) to LR (v11)",
            run: || expect_eq(Device::low_high().apply(dir("HR")?).map_err(err)?, dir("LR")?),
        },
        Case {
            id: "octa/BACK",
            title: "octahedral inversion sends BACK (v3) to FWD (v4)",
            run: || {
                expect_eq(
                    Device::octahedral().apply(dir("BACK")?).map_err(err)?,
                    dir("FWD")?,
                )
            },
        },
        Case {
            id: "octa/UP",
            title: "octahedral inversion sends UP (v1) to DOWN (v2)",
            run: || expect_eq(Device::octahedral().apply(dir("UP")?).map_err(err)?, dir("DOWN")?),
        },
        Case {
            id: "octa/RIGHT",
            title: "octahedral inversion sends RIGHT (v5) to LEFT (v6)",
            run: || {
                expect_eq(
                    Device::octahedral().apply(dir("RIGHT")?).map_err(err)?,
                    dir("LEFT")?,
                )
            },
        },
        Case {
            id: "oplus/A-B",
            title: "A = {v5}, B = {v8}: A (+) B = {v8}",
            run: || {
                let a = MovementSequence::single(ico_vertex(5)?);
                let b = MovementSequence::single(ico_vertex(8)?);
                expect_eq(oplus(&a, &b).map_err(err)?, ico_vertex(8)?)
            },
        },
        Case {
            id: "oplus/fb-A-B",
            title: "I_fb(A) (+) I_fb(B) = {v6}",
            run: || {
                let fb = Device::front_back();
                let a = fb
                    .apply_sequence(&MovementSequence::single(ico_vertex(5)?))
                    .map_err(err)?;
                let b = fb
                    .apply_sequence(&MovementSequence::single(ico_vertex(8)?))
                    .map_err(err)?;
                expect_eq(oplus(&a, &b).map_err(err)?, ico_vertex(6)?)
            },
        },
        Case {
            id: "oplus/homomorphism",
            title: "I_fb(A (+) B) = I_fb(A) (+) I_fb(B) for A = {v5}, B = {v8}",
            run: || {
                let fb = Device::front_back();
                let a = MovementSequence::single(ico_vertex(5)?);
                let b = MovementSequence::single(ico_vertex(8)?);
                let left = fb.apply(oplus(&a, &b).map_err(err)?).map_err(err)?;
                let right = oplus(
                    &fb.apply_sequence(&a).map_err(err)?,
                    &fb.apply_sequence(&b).map_err(err)?,
                )
                .map_err(err)?;
                expect_eq(left, right)
            },
        },
        Case {
            id: "sequence/fb",
            title: "fb maps MRF MLB to MRB MLF",
            run: || {
                let out = Device::front_back()
                    .apply_sequence(&seq("MRF MLB")?)
                    .map_err(err)?;
                expect_eq(out.to_string(), "MRB MLF".to_string())
            },
        },
        Case {
            id: "compose/fb-lr",
            title: "fb then lr sends MRF (v5) to MLB (v8)",
            run: || {
                let d = Device::front_back().then(&Device::left_right()).map_err(err)?;
                expect_eq(d.apply(dir("MRF")?).map_err(err)?, dir("MLB")?)
            },
        },
        Case {
            id: "zones/left-arm",
            title: "Left Arm: standard v4, range {v1,v2,v8,v12,v6}",
            run: || {
                let z = normal_zone(Solid::Icosahedron.polyhedron(), Limb::LeftArm).map_err(err)?;
                let range: BTreeSet<usize> = z.range.iter().map(|d| d.vertex()).collect();
                expect_eq((z.standard.vertex(), range), (3, vs(&[1, 2, 8, 12, 6])))
            },
        },
        Case {
            id: "zones/right-leg",
            title: "Right Leg: standard v11, range {v5,v3,v7,v10,v9}",
            run: || {
                let z = normal_zone(Solid::Icosahedron.polyhedron(), Limb::RightLeg).map_err(err)?;
                let range: BTreeSet<usize> = z.range.iter().map(|d| d.vertex()).collect();
                expect_eq((z.standard.vertex(), range), (10, vs(&[5, 3, 7, 10, 9])))
            },
        },
        Case {
            id: "cosets/quadrangles",
            title: "3Z12 gives 3 quadrangles of size 4",
            run: || {
                let family = coset_family(3).map_err(err)?;
                expect_eq(family.iter().map(|c| c.len()).collect::<Vec<_>>(), vec![4; 3])
            },
        },
        Case {
            id: "cosets/diameters",
            title: "6Z12 gives 6 diameters",
            run: || {
                let family = coset_family(6).map_err(err)?;
                expect_eq(family.iter().map(|c| c.len()).collect::<Vec<_>>(), vec![2; 6])
            },
        },
        Case {
            id: "parse/MRF-MLB",
            title: "\"MRF MLB\" parses to [v5, v8] on the icosahedron",
            run: || {
                let s = seq("MRF MLB")?;
                expect_eq(
                    (
                        s.solid(),
                        s.steps().iter().map(|d| d.vertex()).collect::<Vec<_>>(),
                    ),
                    (Solid::Icosahedron, vec![4, 7]),
                )
            },
        },
        Case {
            id: "serialize/v7-v6",
            title: "[v7, v6] serializes to \"MRB MLF\"",
            run: || {
                let s = MovementSequence::new(vec![ico_vertex(7)?, ico_vertex(6)?]).map_err(err)?;
                expect_eq(s.to_string(), "MRB MLF".to_string())
            },
        },
        Case {
            id: "serialize/v1",
            title: "[v1] serializes to \"FH\"",
            run: || {
                expect_eq(
                    MovementSequence::single(ico_vertex(1)?).to_string(),
                    "FH".to_string(),
                )
            },
        },
        Case {
            id: "expr/fb.lr",
            title: "\"fb.lr\" maps v5 to v8",
            run: || {
                let d = parse_device_expr("fb.lr").map_err(err)?;
                expect_eq(d.apply(ico_vertex(5)?).map_err(err)?, ico_vertex(8)?)
            },
        },
        Case {
            id: "cli/invert",
            title: "`invert fb \"MRF MLB\"` prints MRB MLF",
            run: || expect_eq(cli(&["invert", "fb", "MRF MLB"]), (0, "MRB MLF\n".to_string())),
        },
        Case {
            id: "cli/zones",
            title: "`zones` lists Left Arm with standard HL and range FH BH MLB LL MLF",
            run: || {
                let (code, out) = cli(&["zones"]);
                let row = out
                    .lines()
                    .find(|l| l.starts_with("Left Arm"))
                    .ok_or("no Left Arm row")?;
                let fields: Vec<&str> = row.split_whitespace().collect();
                expect_eq(
                    (code, fields.get(2..8)),
                    (0, Some(&["HL", "FH", "BH", "MLB", "LL", "MLF"][..])),
                )
            },
        },
        Case {
            id: "cli/orbits-horizontal",
            title: "`orbits icosahedron --group full --stab-plane horizontal` lists 4 pairs, 4 fixed",
            run: || {
                let (code, out) = cli(&[
                    "orbits",
                    "icosahedron",
                    "--group",
                    "full",
                    "--stab-plane",
                    "horizontal",
                ]);
                let orbits = out
                    .lines()
                    .find(|l| l.starts_with("orbits:"))
                    .unwrap_or("")
                    .to_string();
                let fixed = out
                    .lines()
                    .find(|l| l.starts_with("fixed:"))
                    .unwrap_or("")
                    .to_string();
                expect_eq(
                    (code, orbits, fixed),
                    (
                        0,
                        "orbits: (v1 v9)(v2 v10)(v3 v11)(v4 v12)".to_string(),
                        "fixed: v5 v6 v7 v8".to_string(),
                    ),
                )
            },
        },
    ]
}
