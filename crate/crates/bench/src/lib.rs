//! Deterministic inputs shared by the benchmarks.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use starring::backends::QiMatrix;
use starring::{Backend, MatQi};

pub const SEED: u64 = 0xbe7c_4000;

/// `count` seeded random matrices over `Q(i)` of size `k`.
pub fn qi_samples(k: usize, count: usize) -> (MatQi, Vec<QiMatrix>) {
    let r = MatQi::new(k).expect("k is positive");
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ k as u64);
    let samples = (0..count).map(|_| r.sample(&mut rng)).collect();
    (r, samples)
}
