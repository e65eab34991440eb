use num_complex::Complex64;

use super::{make_state, BipartiteState, StateError};
use crate::numerics::{kron, ComplexMatrix};
use crate::sampling::GaussianStream;

/// Parameters of the `m⊗m` Werner state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WernerSpec {
    pub m: usize,
    pub z: f64,
}

impl WernerSpec {
    pub fn new(m: usize, z: f64) -> Result<Self, StateError> {
        if m < 2 {
            return Err(StateError::Dimension(format!(
                "Werner state needs m >= 2, got {m}"
            )));
        }
        if !(-1.0..=1.0).contains(&z) {
            return Err(StateError::OutOfRange {
                name: "z",
                value: z,
                range: "[-1, 1]",
            });
        }
        Ok(Self { m, z })
    }
}

/// Swap operator `F = Σ |k⟩⟨l| ⊗ |l⟩⟨k|` on `C^m ⊗ C^m`.
pub fn swap_operator(m: usize) -> ComplexMatrix {
    let mut f = ComplexMatrix::zeros(m * m, m * m);
    for k in 0..m {
        for l in 0..m {
            f[(k * m + l, l * m + k)] = Complex64::new(1.0, 0.0);
        }
    }
    f
}

/// `ρ_w = ((m − z)/(m³ − m)) I + ((mz − 1)/(m³ − m)) F`.
pub fn werner_state(w: &WernerSpec) -> Result<BipartiteState, StateError> {
    let w = WernerSpec::new(w.m, w.z)?;
    let m = w.m as f64;
    let denom = m * m * m - m;
    let id = ComplexMatrix::identity(w.m * w.m).scale((m - w.z) / denom);
    let swap = swap_operator(w.m).scale((m * w.z - 1.0) / denom);
    make_state(w.m, w.m, &id + &swap)
}

/// `|Φ⁺⟩ = Σ|kk⟩/√m`.
pub fn maximally_entangled_vector(m: usize) -> Vec<Complex64> {
    let amp = 1.0 / (m as f64).sqrt();
    let mut v = vec![Complex64::new(0.0, 0.0); m * m];
    for k in 0..m {
        v[k * m + k] = Complex64::new(amp, 0.0);
    }
    v
}

/// Isotropic state `f·|Φ⁺⟩⟨Φ⁺| + (1 − f)(I − |Φ⁺⟩⟨Φ⁺|)/(m² − 1)` with singlet fraction `f`.
pub fn isotropic_state(m: usize, f: f64) -> Result<BipartiteState, StateError> {
    if m < 2 {
        return Err(StateError::Dimension(format!(
            "isotropic state needs m >= 2, got {m}"
        )));
    }
    if !(0.0..=1.0).contains(&f) {
        return Err(StateError::OutOfRange {
            name: "f",
            value: f,
            range: "[0, 1]",
        });
    }
    let d = m * m;
    let proj = ComplexMatrix::outer(&maximally_entangled_vector(m));
    let complement = &ComplexMatrix::identity(d) - &proj;
    let rho = &proj.scale(f) + &complement.scale((1.0 - f) / (d as f64 - 1.0));
    make_state(m, m, rho)
}

/// `I/(mn)`.
pub fn maximally_mixed(dim_a: usize, dim_b: usize) -> BipartiteState {
    let d = dim_a * dim_b;
    BipartiteState::from_trusted(
        dim_a,
        dim_b,
        ComplexMatrix::identity(d).scale(1.0 / d as f64),
    )
}

/// `|Φ⁺⟩⟨Φ⁺|` on two qubits.
pub fn bell_state() -> BipartiteState {
    BipartiteState::from_trusted(2, 2, ComplexMatrix::outer(&maximally_entangled_vector(2)))
}

/// `ρ_A ⊗ ρ_B`.
pub fn product_state(
    rho_a: &ComplexMatrix,
    rho_b: &ComplexMatrix,
) -> Result<BipartiteState, StateError> {
    make_state(rho_a.rows(), rho_b.rows(), kron(rho_a, rho_b))
}

/// Projector onto a normalized complex Gaussian vector drawn from `seed`.
pub fn random_pure_state(dim_a: usize, dim_b: usize, seed: u64) -> BipartiteState {
    let mut stream = GaussianStream::from_seed(seed);
    let mut v: Vec<Complex64> = (0..dim_a * dim_b).map(|_| stream.complex()).collect();
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.iter_mut().for_each(|z| *z /= norm);
    BipartiteState::from_trusted(dim_a, dim_b, ComplexMatrix::outer(&v))
}
