//! Shared workloads for the benchmarks.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use frobgp_core::corpus::{named_algebra, named_extension, random_module};
use frobgp_core::frobenius::RingExtension;
use frobgp_core::{Algebra, FieldSpec, Mat, Module};

pub fn algebra(name: &str) -> Arc<Algebra> {
    named_algebra(name).expect("corpus algebra")
}

pub fn extension(name: &str) -> RingExtension {
    named_extension(name)
        .and_then(|e| e.extension())
        .expect("corpus extension")
}

/// A quotient of a free module with a fixed seed.
pub fn sample_module(name: &str, rank: usize, seed: u64) -> Module {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_module(&algebra(name), rank, 2, &mut rng)
}

pub fn sample_matrix(field: FieldSpec, n: usize, seed: u64) -> Mat {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Mat::random(field, n, n, &mut rng)
}
