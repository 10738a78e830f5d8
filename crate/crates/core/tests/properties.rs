use std::collections::BTreeSet;

use kinesphere::notation::DeviceExpr;
use kinesphere::{
    coset_family, oplus, parse_sequence, serialize_sequence, transpose, ClockPosition, Device, Direction,
    MovementSequence, PermGroup, Permutation, Polyhedron, ScaleLibrary, Script, Solid, TraceForm,
};
use proptest::prelude::*;

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::from_images(images).unwrap())
}

fn ico_sequence(max: usize) -> impl Strategy<Value = MovementSequence> {
    prop::collection::vec(0usize..12, 1..=max).prop_map(|vs| {
        MovementSequence::new(
            vs.into_iter()
                .map(|v| Direction::new(Solid::Icosahedron, v).unwrap())
                .collect(),
        )
        .unwrap()
    })
}

fn any_sequence() -> impl Strategy<Value = MovementSequence> {
    prop::sample::select(Solid::ALL.to_vec()).prop_flat_map(|solid| {
        prop::collection::vec(0..solid.vertex_count(), 1..12).prop_map(move |vs| {
            MovementSequence::new(
                vs.into_iter()
                    .map(|v| Direction::new(solid, v).unwrap())
                    .collect(),
            )
            .unwrap()
        })
    })
}

fn inversions() -> Vec<Device> {
    vec![
        Device::front_back(),
        Device::low_high(),
        Device::left_right(),
        Device::diametral(),
    ]
}

proptest! {
    #[test]
    fn compose_with_inverse_is_identity(p in permutation(12)) {
        prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
        prop_assert!(p.inverse().compose(&p).unwrap().is_identity());
        let mut seen = p.images().to_vec();
        seen.sort();
        prop_assert_eq!(seen, (0..12).collect::<Vec<_>>());
    }

    #[test]
    fn composition_is_associative(p in permutation(8), q in permutation(8), r in permutation(8)) {
        let left = p.compose(&q).unwrap().compose(&r).unwrap();
        let right = p.compose(&q.compose(&r).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn cycle_notation_round_trips(p in permutation(12)) {
        prop_assert_eq!(Permutation::parse_cycles(&p.to_string(), 12).unwrap(), p);
    }

    #[test]
    fn generated_groups_are_lawful(gens in prop::collection::vec(permutation(5), 1..3)) {
        let g = PermGroup::closure(&gens).unwrap();
        prop_assert_eq!(120 % g.order(), 0);
        for x in g.elements() {
            prop_assert!(g.contains(&x.inverse()));
        }
        for gen in &gens {
            prop_assert!(g.contains(gen));
        }
        let again = PermGroup::closure(g.elements()).unwrap();
        prop_assert_eq!(again.order(), g.order());

        let partition = g.orbit_partition();
        let mut covered: Vec<usize> = partition.blocks().iter().flatten().copied().collect();
        covered.sort();
        prop_assert_eq!(covered, (0..5).collect::<Vec<_>>());
        for point in 0..5 {
            let stab = g.point_stabilizer(point).unwrap();
            prop_assert_eq!(g.order() % stab.order(), 0);
            prop_assert_eq!(g.orbit(point).unwrap().len() * stab.order(), g.order());
            for x in g.elements() {
                let block = partition.block_of(point).unwrap();
                prop_assert_eq!(&x.image_of_set(block), block);
            }
        }
    }

    #[test]
    fn inversions_are_involutions(seq in ico_sequence(8)) {
        for d in inversions() {
            let twice = d.apply_sequence(&d.apply_sequence(&seq).unwrap()).unwrap();
            prop_assert_eq!(&twice, &seq);
        }
    }

    #[test]
    fn inversion_is_a_homomorphism_over_oplus(a in ico_sequence(4), b in ico_sequence(4)) {
        for d in inversions() {
            let lhs = d.apply(oplus(&a, &b).unwrap()).unwrap();
            let rhs = oplus(&d.apply_sequence(&a).unwrap(), &d.apply_sequence(&b).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn sequences_round_trip(seq in any_sequence()) {
        let text = serialize_sequence(&seq);
        prop_assert_eq!(&parse_sequence(&text).unwrap(), &seq);
        let spaced = format!("  {}\t", text.replace(' ', "   "));
        prop_assert_eq!(serialize_sequence(&parse_sequence(&spaced).unwrap()), text);
    }

    #[test]
    fn parsers_never_panic(bytes in prop::collection::vec(any::<u8>(), 0..64)) {
        let text = String::from_utf8_lossy(&bytes);
        let _ = parse_sequence(&text);
        let _ = DeviceExpr::parse(&text);
        let _ = Script::parse(&text);
        let _ = Permutation::parse_cycles(&text, 12);
    }

    #[test]
    fn transpositions_permute_coset_families(k in -24i64..24) {
        for step in [3usize, 4, 6] {
            let family: BTreeSet<BTreeSet<ClockPosition>> = coset_family(step).unwrap().into_iter().collect();
            let moved: BTreeSet<BTreeSet<ClockPosition>> =
                family.iter().map(|c| c.iter().map(|p| p.shifted(k)).collect()).collect();
            prop_assert_eq!(moved, family);
        }
    }

    #[test]
    fn devices_on_the_clock_are_bijections(expr in prop::sample::select(vec![
        "fb", "lh", "lr", "diam", "T1", "T5", "fb.T3", "T2.lr.T10", "diam.T6",
    ])) {
        let library = ScaleLibrary::bundled();
        let scale = library.default_scale().unwrap();
        let device = DeviceExpr::parse(expr).unwrap().build(scale).unwrap();
        let all = TraceForm::from_values("all", &(0..12).collect::<Vec<_>>()).unwrap();
        let image = kinesphere::apply_device_on_clock(scale, &device, &all).unwrap();
        let distinct: BTreeSet<ClockPosition> = image.path().iter().copied().collect();
        prop_assert_eq!(distinct.len(), 12);
        prop_assert_eq!(transpose(0, &image), image);
    }
}

#[test]
fn inversion_devices_are_symmetries() {
    let ico = Polyhedron::build(Solid::Icosahedron);
    let full = ico.full_symmetry_group();
    for d in inversions() {
        assert!(full.contains(d.perm()), "{d}");
        assert!(d.perm().is_involution());
    }
    let octa = Polyhedron::build(Solid::Octahedron);
    assert!(octa.full_symmetry_group().contains(Device::octahedral().perm()));
}
