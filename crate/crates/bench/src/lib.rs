//! Fixtures shared by the benchmarks.

use lefschetz_core::{DenseMatrix, FieldSpec, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Square matrix of corank `corank`: a random `n × (n - corank)` factor times a random
/// `(n - corank) × n` factor.
pub fn random_matrix(field: FieldSpec, n: usize, corank: usize, seed: u64) -> DenseMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let inner = n - corank;
    let mut entry = |_, _| match field.modulus() {
        Some(p) => Scalar::from_i64(field, rng.random_range(0..p) as i64),
        None => Scalar::from_i64(field, rng.random_range(-10..=10)),
    };
    let a = DenseMatrix::from_fn(field, n, inner, &mut entry);
    let b = DenseMatrix::from_fn(field, inner, n, &mut entry);
    a.mul(&b).expect("conformable")
}
