//! Deterministic counter-based random numbers.
//!
//! Datasets must replicate across implementations, so the generator is fully
//! specified here rather than drawn from an external crate:
//!
//! - The `i`-th raw draw (zero-based) is `mix(seed + (i+1) · 0x9E3779B97F4A7C15)`
//!   in wrapping 64-bit arithmetic, where `mix` is the SplitMix64 finalizer
//!   (`z ^= z >> 30; z *= 0xBF58476D1CE4E5B9; z ^= z >> 27;
//!   z *= 0x94D049BB133111EB; z ^= z >> 31`).
//! - Uniform doubles take the top 53 bits: `(raw >> 11) · 2⁻⁵³ ∈ [0, 1)`.
//! - Standard normals use the Box–Muller transform on a pair of uniforms
//!   `(u₁, u₂)`: `√(−2 ln(1−u₁)) · (cos 2πu₂, sin 2πu₂)`. A single draw
//!   consumes a pair and keeps only the cosine branch; bulk fills consume
//!   pairs and use both branches.

use num_traits::Float;

const GOLDEN: u64 = 0x9E3779B97F4A7C15;

/// SplitMix64 stream addressed by an advancing counter.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    seed: u64,
    counter: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { seed, counter: 0 }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.counter = self.counter.wrapping_add(1);
        let mut z = self.seed.wrapping_add(self.counter.wrapping_mul(GOLDEN));
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform on `[0, 1)` with 53-bit resolution.
    pub fn uniform(&mut self) -> f64 {
        const SCALE: f64 = 1.0 / 9_007_199_254_740_992.0; // 2^-53
        ((self.next_u64() >> 11) as f64) * SCALE
    }

    pub fn uniform_in(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.uniform()
    }

    /// Uniform integer in `0..n`.
    pub fn index(&mut self, n: usize) -> usize {
        debug_assert!(n > 0);
        let v = (self.uniform() * n as f64) as usize;
        v.min(n - 1)
    }

    fn normal_pair(&mut self) -> (f64, f64) {
        let u1 = 1.0 - self.uniform(); // (0, 1], keeps the log finite
        let u2 = self.uniform();
        let r = (-2.0 * u1.ln()).sqrt();
        let theta = 2.0 * core::f64::consts::PI * u2;
        (r * theta.cos(), r * theta.sin())
    }

    /// One standard normal draw (consumes two uniforms).
    pub fn standard_normal(&mut self) -> f64 {
        self.normal_pair().0
    }

    /// Fill a slice with standard normals, two per Box–Muller pair.
    pub fn fill_standard_normal(&mut self, out: &mut [f64]) {
        let mut i = 0;
        while i + 1 < out.len() {
            let (a, b) = self.normal_pair();
            out[i] = a;
            out[i + 1] = b;
            i += 2;
        }
        if i < out.len() {
            out[i] = self.standard_normal();
        }
    }
}
