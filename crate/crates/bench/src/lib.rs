//! Seeded inputs shared by the benchmarks.

use gitkit_core::rational::qf;
use gitkit_core::torus_git::ProjPoint;
use gitkit_core::Weight;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `n` weights of rank `r` on the 1/8 grid in [−3, 3].
pub fn random_weights(r: usize, n: usize, seed: u64) -> Vec<Weight> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| Weight::new((0..r).map(|_| qf(rng.random_range(-24..=24), 8)).collect())).collect()
}

/// A point whose support surrounds the origin, so descent converges.
pub fn stable_point(r: usize) -> ProjPoint {
    let mut ws: Vec<Weight> = (0..r).map(|i| Weight::unit(r, i)).collect();
    ws.push(Weight::from_ints(&vec![-1; r]));
    ProjPoint::uniform(&ws).expect("nonempty")
}

/// Support in an open halfspace, so descent escapes.
pub fn unstable_point() -> ProjPoint {
    let ws = [[-1, -1], [3, -1], [-1, 3]].map(|w| Weight::new(vec![qf(w[0], 4), qf(w[1] + 8, 4)]));
    ProjPoint::uniform(&ws).expect("nonempty")
}
