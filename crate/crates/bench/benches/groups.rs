use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use kinesphere::{parse_sequence, serialize_sequence, Device, Polyhedron, Solid};
use kinesphere_bench::walk;

fn symmetry_groups(c: &mut Criterion) {
    let mut group = c.benchmark_group("full_symmetry_group");
    for solid in Solid::ALL {
        group.bench_with_input(BenchmarkId::from_parameter(solid), &solid, |b, &solid| {
            b.iter(|| Polyhedron::build(black_box(solid)).full_symmetry_group().order())
        });
    }
    group.finish();
}

fn stabilizers(c: &mut Criterion) {
    let icosahedron = Polyhedron::build(Solid::Icosahedron);
    let full = icosahedron.full_symmetry_group();
    c.bench_function("orbit_partition/icosahedron", |b| {
        b.iter(|| full.orbit_partition())
    });
    c.bench_function("pointwise_set_stabilizer/horizontal", |b| {
        b.iter(|| {
            full.pointwise_set_stabilizer(black_box([4, 5, 6, 7]))
                .unwrap()
                .order()
        })
    });
}

fn notation(c: &mut Criterion) {
    let text = serialize_sequence(&walk(256));
    c.bench_function("parse_sequence/256", |b| {
        b.iter(|| parse_sequence(black_box(&text)).unwrap())
    });
    let seq = walk(256);
    let fb = Device::front_back();
    c.bench_function("apply_sequence/256", |b| {
        b.iter(|| fb.apply_sequence(black_box(&seq)).unwrap())
    });
}

criterion_group!(benches, symmetry_groups, stabilizers, notation);
criterion_main!(benches);
