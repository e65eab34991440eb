//! Reproducible random density matrices.
//!
//! Sample `index` of a scan is `ρ = GG†/Tr(GG†)`, where `G` is an `(mn)×k` matrix of
//! independent standard complex Gaussians. With the default `k = mn` this is the
//! Hilbert-Schmidt measure; other `k` give the other induced measures, and `k = 1`
//! yields pure states.
//!
//! Each sample draws from its own generator, so a scan is a pure function of
//! `(seed, index)` regardless of evaluation order:
//!
//! 1. `key = splitmix64(splitmix64(seed) ^ index)`, where `splitmix64` is the
//!    SplitMix64 output function (increment `0x9E3779B97F4A7C15`, multipliers
//!    `0xBF58476D1CE4E5B9` and `0x94D049BB133111EB`, shifts 30/27/31).
//! 2. The generator is ChaCha8 seeded through `SeedableRng::seed_from_u64(key)`.
//! 3. Uniforms are 53-bit doubles in `[0, 1)`; normals come in pairs from the
//!    Marsaglia polar transform. Entries of `G` are filled row-major, real part
//!    then imaginary part, each entry consuming one pair.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::numerics::ComplexMatrix;
use crate::states::BipartiteState;

/// Parameters of a random-state ensemble.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SamplerConfig {
    pub dim_a: usize,
    pub dim_b: usize,
    /// Column count of the Gaussian factor; at least 1.
    pub ginibre_k: usize,
    pub seed: u64,
}

impl SamplerConfig {
    /// Hilbert-Schmidt ensemble (`k = dim_a · dim_b`).
    pub fn new(dim_a: usize, dim_b: usize, seed: u64) -> Self {
        Self {
            dim_a,
            dim_b,
            ginibre_k: dim_a * dim_b,
            seed,
        }
    }

    pub fn with_ginibre_k(mut self, k: usize) -> Self {
        assert!(k >= 1, "ginibre_k must be at least 1");
        self.ginibre_k = k;
        self
    }
}

/// SplitMix64 output function.
pub fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of the substream used for sample `index`.
pub fn substream_seed(seed: u64, index: u64) -> u64 {
    splitmix64(splitmix64(seed) ^ index)
}

/// Source of standard normal variates.
pub struct GaussianStream {
    rng: ChaCha8Rng,
}

impl GaussianStream {
    pub fn from_seed(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn for_sample(seed: u64, index: u64) -> Self {
        Self::from_seed(substream_seed(seed, index))
    }

    /// Standard complex Gaussian (unit-variance real and imaginary parts).
    pub fn complex(&mut self) -> Complex64 {
        let (re, im) = gaussian_pair(self);
        Complex64::new(re, im)
    }

    /// Uniform on `[-1, 1)`.
    fn symmetric_uniform(&mut self) -> f64 {
        2.0 * self.rng.random::<f64>() - 1.0
    }
}

/// Two independent standard normals via the Marsaglia polar method.
pub fn gaussian_pair(stream: &mut GaussianStream) -> (f64, f64) {
    loop {
        let u = stream.symmetric_uniform();
        let v = stream.symmetric_uniform();
        let s = u * u + v * v;
        if s > 0.0 && s < 1.0 {
            let factor = (-2.0 * s.ln() / s).sqrt();
            return (u * factor, v * factor);
        }
    }
}

/// Ginibre matrix with `rows × cols` standard complex Gaussian entries.
pub fn ginibre(stream: &mut GaussianStream, rows: usize, cols: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(rows, cols, |_, _| stream.complex())
}

/// Normalized `G G†`, exactly Hermitian and positive semidefinite.
pub(crate) fn wishart_state(g: &ComplexMatrix) -> ComplexMatrix {
    let w = g.matmul(&g.adjoint());
    let tr = w.trace().re;
    w.scale(1.0 / tr)
}

/// Draws sample `index` of the ensemble described by `cfg`.
pub fn sample_state(cfg: &SamplerConfig, index: u64) -> BipartiteState {
    assert!(cfg.ginibre_k >= 1, "ginibre_k must be at least 1");
    let mut stream = GaussianStream::for_sample(cfg.seed, index);
    let g = ginibre(&mut stream, cfg.dim_a * cfg.dim_b, cfg.ginibre_k);
    BipartiteState::from_trusted(cfg.dim_a, cfg.dim_b, wishart_state(&g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::make_state;

    #[test]
    fn deterministic_per_index() {
        let cfg = SamplerConfig::new(2, 3, 42);
        let a = sample_state(&cfg, 7);
        let b = sample_state(&cfg, 7);
        assert_eq!(a.rho().as_slice(), b.rho().as_slice());
        let c = sample_state(&cfg, 8);
        assert_ne!(a.rho().as_slice(), c.rho().as_slice());
    }

    #[test]
    fn gaussian_moments() {
        let mut s = GaussianStream::from_seed(1);
        let n = 500_000;
        let (mut sum, mut sum_sq) = (0.0, 0.0);
        for _ in 0..n {
            let (a, b) = gaussian_pair(&mut s);
            sum += a + b;
            sum_sq += a * a + b * b;
        }
        let count = (2 * n) as f64;
        let mean = sum / count;
        let var = sum_sq / count - mean * mean;
        assert!(mean.abs() < 0.01, "mean {mean}");
        assert!((var - 1.0).abs() < 0.01, "variance {var}");
    }

    #[test]
    fn gaussian_is_deterministic() {
        let mut a = GaussianStream::from_seed(99);
        let mut b = GaussianStream::from_seed(99);
        for _ in 0..100 {
            assert_eq!(gaussian_pair(&mut a), gaussian_pair(&mut b));
        }
    }

    #[test]
    fn rank_one_is_pure() {
        let cfg = SamplerConfig::new(2, 3, 5).with_ginibre_k(1);
        for i in 0..20 {
            let s = sample_state(&cfg, i);
            let purity = s.rho().matmul(s.rho()).trace().re;
            assert!((purity - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn samples_pass_validation() {
        for (m, n) in [(2, 2), (2, 3), (2, 5), (3, 3)] {
            let cfg = SamplerConfig::new(m, n, 11);
            for i in 0..50 {
                let s = sample_state(&cfg, i);
                assert!(make_state(m, n, s.rho().clone()).is_ok());
                assert!((s.rho().trace().re - 1.0).abs() < 1e-12);
                assert_eq!(s.rho().hermitian_defect(), 0.0);
            }
        }
    }

    #[test]
    fn ensemble_mean_is_maximally_mixed() {
        let cfg = SamplerConfig::new(2, 2, 2024);
        let n = 10_000;
        let mut acc = ComplexMatrix::zeros(4, 4);
        for i in 0..n {
            acc = &acc + sample_state(&cfg, i).rho();
        }
        let mean = acc.scale(1.0 / n as f64);
        let target = ComplexMatrix::identity(4).scale(0.25);
        assert!(mean.max_abs_diff(&target) < 0.02);
    }
}
