//! Fixtures shared by the benchmarks.

use kinesphere::{MovementSequence, Solid};

/// A deterministic icosahedral sequence of `len` steps.
pub fn walk(len: usize) -> MovementSequence {
    let vocabulary = Solid::Icosahedron.vocabulary();
    let steps = (0..len)
        .map(|i| kinesphere::Direction::from_token(vocabulary[(i * 7 + 3) % 12].0).expect("token"))
        .collect();
    MovementSequence::new(steps).expect("nonempty")
}
