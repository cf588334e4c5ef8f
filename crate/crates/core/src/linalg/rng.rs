//! Deterministic random streams.
//!
//! Every randomized routine in the crate draws from ChaCha8 seeded with a
//! caller-supplied 64-bit seed. Independent trials split off the same seed
//! by stream index: trial `i` uses `stream_rng(seed, i)`. Reports record
//! the `(seed, stream)` pair, which reproduces any single trial bit-for-bit
//! regardless of how many trials ran or in which order.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::matrix::ComplexMatrix;

/// The crate-wide deterministic generator, split by stream index.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Standard normal via Box-Muller; two uniforms per pair of normals.
pub fn standard_normal(rng: &mut ChaCha8Rng) -> f64 {
    loop {
        let u1: f64 = rng.gen::<f64>();
        if u1 > f64::MIN_POSITIVE {
            let u2: f64 = rng.gen::<f64>();
            return (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos();
        }
    }
}

/// Complex standard normal entry (real and imaginary parts i.i.d. N(0,1)).
pub fn complex_normal(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(standard_normal(rng), standard_normal(rng))
}

/// Ginibre matrix: i.i.d. complex normal entries.
pub fn ginibre(rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> ComplexMatrix {
    ComplexMatrix::from_fn(rows, cols, |_, _| complex_normal(rng))
}
