//! The one pseudo-random source used throughout: ChaCha8 with a 64-bit seed
//! and a per-instance stream, uniforms from the top 53 bits of each word,
//! Gaussians by Box-Muller. All three choices are fixed so that golden
//! outputs do not drift.

use num_complex::Complex64;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::TAU;

#[derive(Debug, Clone)]
pub struct PinnedRng {
    inner: ChaCha8Rng,
}

impl PinnedRng {
    pub fn from_seed(seed: u64) -> Self {
        Self {
            inner: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Independent stream `index` under `seed`.
    pub fn for_stream(seed: u64, index: u64) -> Self {
        let mut inner = ChaCha8Rng::seed_from_u64(seed);
        inner.set_stream(index);
        Self { inner }
    }

    /// Uniform on `[0, 1)`.
    pub fn uniform(&mut self) -> f64 {
        (self.inner.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Standard real normal pair.
    pub fn gaussian_pair(&mut self) -> (f64, f64) {
        let u1 = 1.0 - self.uniform();
        let u2 = self.uniform();
        let r = (-2.0 * u1.ln()).sqrt();
        let (s, c) = (TAU * u2).sin_cos();
        (r * c, r * s)
    }

    /// Standard complex normal, `E|z|^2 = 1`.
    pub fn complex_gaussian(&mut self) -> Complex64 {
        let (x, y) = self.gaussian_pair();
        Complex64::new(x, y) * std::f64::consts::FRAC_1_SQRT_2
    }
}
