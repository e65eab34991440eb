use num_complex::Complex64;

use super::{ComplexMatrix, NumericsError};

/// Off-diagonal Frobenius norm (relative to the input norm) at which a sweep stops.
pub const JACOBI_TOLERANCE: f64 = 1e-13;
/// Maximum number of cyclic sweeps before giving up.
pub const JACOBI_MAX_SWEEPS: usize = 100;
/// Largest anti-Hermitian part (relative to `max(1, ‖a‖)`) accepted by the solver.
pub const HERMITIAN_TOLERANCE: f64 = 1e-10;

/// Eigenvalues in non-increasing order with their orthonormal eigenvectors.
///
/// Column `k` of `eigenvectors` belongs to `eigenvalues[k]`.
#[derive(Debug, Clone)]
pub struct HermitianSpectrum {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: ComplexMatrix,
}

impl HermitianSpectrum {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn eigenvector(&self, k: usize) -> Vec<Complex64> {
        self.eigenvectors.column(k)
    }

    /// `Σ λᵢ vᵢvᵢ†`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let n = self.dim();
        let v = &self.eigenvectors;
        ComplexMatrix::from_fn(n, n, |i, j| {
            (0..n)
                .map(|k| v[(i, k)] * v[(j, k)].conj() * self.eigenvalues[k])
                .sum()
        })
    }
}

/// Negative-eigenvalue threshold `τ = 1e-12 · max(1, ‖a‖)`.
///
/// Eigenvalues inside `[−τ, τ]` are treated as zero by every count and sum.
pub fn zero_threshold(a: &ComplexMatrix) -> f64 {
    1e-12 * a.frobenius().max(1.0)
}

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi rotations.
///
/// The input is symmetrized as `(a + a†)/2` first; matrices whose anti-Hermitian
/// part exceeds `1e-10 · max(1, ‖a‖)` are rejected.
pub fn hermitian_eig(a: &ComplexMatrix) -> Result<HermitianSpectrum, NumericsError> {
    if !a.is_square() {
        return Err(NumericsError::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let norm = a.frobenius();
    let anti = 0.5 * a.hermitian_defect();
    if anti > HERMITIAN_TOLERANCE * norm.max(1.0) {
        return Err(NumericsError::NotHermitian { defect: anti });
    }

    let mut m = a.hermitian_part();
    for i in 0..n {
        m[(i, i)].im = 0.0;
    }
    let mut v = ComplexMatrix::identity(n);
    let target = JACOBI_TOLERANCE * norm;

    let mut converged = off_diagonal_norm(&m) <= target;
    let mut sweeps = 0;
    while !converged && sweeps < JACOBI_MAX_SWEEPS {
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut m, &mut v, p, q);
            }
        }
        sweeps += 1;
        converged = off_diagonal_norm(&m) <= target;
    }
    if !converged {
        return Err(NumericsError::NoConvergence {
            sweeps,
            residual: off_diagonal_norm(&m),
        });
    }

    let mut order: Vec<usize> = (0..n).collect();
    // stable: ties keep solver order
    order.sort_by(|&i, &j| m[(j, j)].re.total_cmp(&m[(i, i)].re));
    let eigenvalues = order.iter().map(|&k| m[(k, k)].re).collect();
    let eigenvectors = ComplexMatrix::from_fn(n, n, |i, j| v[(i, order[j])]);
    Ok(HermitianSpectrum {
        eigenvalues,
        eigenvectors,
    })
}

/// Trace norm `Σ |λᵢ|` of a Hermitian matrix.
pub fn trace_norm_hermitian(a: &ComplexMatrix) -> Result<f64, NumericsError> {
    Ok(hermitian_eig(a)?.eigenvalues.iter().map(|l| l.abs()).sum())
}

fn off_diagonal_norm(m: &ComplexMatrix) -> f64 {
    let n = m.rows();
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc += m[(i, j)].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

/// Applies `m ← J† m J`, `v ← v J` with the unitary that zeroes `m[p, q]`.
fn rotate(m: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let b = m[(p, q)];
    let modulus = b.norm();
    if modulus == 0.0 {
        return;
    }
    let phase = b / modulus;
    let app = m[(p, p)].re;
    let aqq = m[(q, q)].re;

    let theta = (aqq - app) / (2.0 * modulus);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let s_fwd = phase * s; // s e^{iφ}
    let s_bwd = phase.conj() * s; // s e^{-iφ}

    let n = m.rows();
    for k in 0..n {
        let mkp = m[(k, p)];
        let mkq = m[(k, q)];
        m[(k, p)] = mkp * c - mkq * s_bwd;
        m[(k, q)] = mkp * s_fwd + mkq * c;
    }
    for k in 0..n {
        let mpk = m[(p, k)];
        let mqk = m[(q, k)];
        m[(p, k)] = mpk * c - mqk * s_fwd;
        m[(q, k)] = mpk * s_bwd + mqk * c;
    }
    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * c - vkq * s_bwd;
        v[(k, q)] = vkp * s_fwd + vkq * c;
    }

    m[(p, q)] = Complex64::new(0.0, 0.0);
    m[(q, p)] = Complex64::new(0.0, 0.0);
    m[(p, p)] = Complex64::new(app - t * modulus, 0.0);
    m[(q, q)] = Complex64::new(aqq + t * modulus, 0.0);
}
