//! Generalized Gell-Mann basis and the Bloch form
//!
//! ```text
//! ρ = 1/(mn) [ I⊗I + Σ xᵢ λᵢ⊗I + Σ yⱼ I⊗λⱼ + Σ Tᵢⱼ λᵢ⊗λⱼ ]
//! ```
//!
//! with generators normalized to `Tr(λₐλ_b) = 2δₐ_b`.

use num_complex::Complex64;

use super::{make_state, BipartiteState, StateError};
use crate::numerics::{kron, ComplexMatrix};

/// The `d² − 1` generalized Gell-Mann matrices of dimension `d`.
///
/// Order: the `d(d−1)/2` symmetric matrices `|j⟩⟨k| + |k⟩⟨j|` for `j < k` in
/// row-major order, then the antisymmetric `−i|j⟩⟨k| + i|k⟩⟨j|` in the same order,
/// then the diagonal `√(2/(l(l+1))) (Σ_{j<l} |j⟩⟨j| − l|l⟩⟨l|)` for `l = 1..d−1`.
/// For `d = 2` this is `(σx, σy, σz)`.
#[derive(Debug, Clone)]
pub struct GeneratorBasis {
    pub dim: usize,
    pub matrices: Vec<ComplexMatrix>,
}

impl GeneratorBasis {
    pub fn len(&self) -> usize {
        self.matrices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matrices.is_empty()
    }

    /// `Σ cᵢ λᵢ` for real coefficients.
    pub fn combine(&self, coeffs: &[f64]) -> ComplexMatrix {
        assert_eq!(coeffs.len(), self.len());
        let mut out = ComplexMatrix::zeros(self.dim, self.dim);
        for (c, l) in coeffs.iter().zip(&self.matrices) {
            if *c != 0.0 {
                out = &out + &l.scale(*c);
            }
        }
        out
    }
}

pub fn generator_basis(d: usize) -> Result<GeneratorBasis, StateError> {
    if d < 2 {
        return Err(StateError::Dimension(format!(
            "generator basis needs d >= 2, got {d}"
        )));
    }
    let one = Complex64::new(1.0, 0.0);
    let i = Complex64::new(0.0, 1.0);
    let mut matrices = Vec::with_capacity(d * d - 1);
    for j in 0..d {
        for k in (j + 1)..d {
            let mut m = ComplexMatrix::zeros(d, d);
            m[(j, k)] = one;
            m[(k, j)] = one;
            matrices.push(m);
        }
    }
    for j in 0..d {
        for k in (j + 1)..d {
            let mut m = ComplexMatrix::zeros(d, d);
            m[(j, k)] = -i;
            m[(k, j)] = i;
            matrices.push(m);
        }
    }
    for l in 1..d {
        let norm = (2.0 / (l * (l + 1)) as f64).sqrt();
        let mut diag = vec![0.0; d];
        diag[..l].iter_mut().for_each(|v| *v = norm);
        diag[l] = -(l as f64) * norm;
        matrices.push(ComplexMatrix::from_real_diagonal(&diag));
    }
    Ok(GeneratorBasis { dim: d, matrices })
}

/// Local Bloch vectors and correlation matrix of a bipartite state.
#[derive(Debug, Clone, PartialEq)]
pub struct BlochForm {
    pub dim_a: usize,
    pub dim_b: usize,
    /// Length `m² − 1`.
    pub x: Vec<f64>,
    /// Length `n² − 1`.
    pub y: Vec<f64>,
    /// `(m² − 1) × (n² − 1)`, row-major.
    pub t: Vec<f64>,
}

impl BlochForm {
    /// All-zero data: the maximally mixed state.
    pub fn zero(dim_a: usize, dim_b: usize) -> Self {
        let (ka, kb) = (dim_a * dim_a - 1, dim_b * dim_b - 1);
        Self {
            dim_a,
            dim_b,
            x: vec![0.0; ka],
            y: vec![0.0; kb],
            t: vec![0.0; ka * kb],
        }
    }

    pub fn t_rows(&self) -> usize {
        self.x.len()
    }

    pub fn t_cols(&self) -> usize {
        self.y.len()
    }

    #[inline]
    pub fn t_at(&self, i: usize, j: usize) -> f64 {
        self.t[i * self.t_cols() + j]
    }

    pub fn x_norm_sq(&self) -> f64 {
        self.x.iter().map(|v| v * v).sum()
    }

    pub fn y_norm_sq(&self) -> f64 {
        self.y.iter().map(|v| v * v).sum()
    }

    /// `‖T‖²` (Frobenius).
    pub fn t_norm_sq(&self) -> f64 {
        self.t.iter().map(|v| v * v).sum()
    }

    /// `G = x xᵗ + (2/n) T Tᵗ`, row-major, `(m²−1) × (m²−1)`.
    pub fn g_matrix(&self) -> Vec<f64> {
        let k = self.t_rows();
        let c = self.t_cols();
        let w = 2.0 / self.dim_b as f64;
        let mut g = vec![0.0; k * k];
        for i in 0..k {
            for j in 0..k {
                let tt: f64 = (0..c).map(|l| self.t_at(i, l) * self.t_at(j, l)).sum();
                g[i * k + j] = self.x[i] * self.x[j] + w * tt;
            }
        }
        g
    }
}

/// `Tr_A[ρ (L ⊗ I)]` as an `n×n` matrix.
fn contract_a(rho: &ComplexMatrix, m: usize, n: usize, l: &ComplexMatrix) -> ComplexMatrix {
    let mut out = ComplexMatrix::zeros(n, n);
    for a in 0..m {
        for ap in 0..m {
            let w = l[(ap, a)];
            if w.re == 0.0 && w.im == 0.0 {
                continue;
            }
            for b in 0..n {
                for bp in 0..n {
                    out[(b, bp)] += rho[(a * n + b, ap * n + bp)] * w;
                }
            }
        }
    }
    out
}

/// Bloch coordinates `xᵢ = (m/2)Tr[ρ(λᵢ⊗I)]`, `yⱼ = (n/2)Tr[ρ(I⊗λⱼ)]`,
/// `Tᵢⱼ = (mn/4)Tr[ρ(λᵢ⊗λⱼ)]`.
pub fn bloch_decompose(s: &BipartiteState) -> BlochForm {
    let (m, n) = (s.dim_a(), s.dim_b());
    let basis_a = generator_basis(m).expect("dim_a >= 2 for a Bloch decomposition");
    let basis_b = generator_basis(n).expect("dim_b >= 2 for a Bloch decomposition");
    let rho = s.rho();
    let (mf, nf) = (m as f64, n as f64);

    let rho_b = s.reduced_b();
    let y: Vec<f64> = basis_b
        .matrices
        .iter()
        .map(|lj| real_part(rho_b.trace_product(lj)) * nf / 2.0)
        .collect();

    let mut x = Vec::with_capacity(basis_a.len());
    let mut t = Vec::with_capacity(basis_a.len() * basis_b.len());
    for li in &basis_a.matrices {
        let r = contract_a(rho, m, n, li);
        x.push(real_part(r.trace()) * mf / 2.0);
        for lj in &basis_b.matrices {
            t.push(real_part(r.trace_product(lj)) * mf * nf / 4.0);
        }
    }
    BlochForm {
        dim_a: m,
        dim_b: n,
        x,
        y,
        t,
    }
}

#[inline]
fn real_part(z: Complex64) -> f64 {
    debug_assert!(
        z.im.abs() <= 1e-10,
        "Bloch coefficient has imaginary part {}",
        z.im
    );
    z.re
}

/// Assembles the state described by `b`; fails if the result is not a density matrix.
pub fn bloch_reconstruct(b: &BlochForm, m: usize, n: usize) -> Result<BipartiteState, StateError> {
    if m < 2 || n < 2 {
        return Err(StateError::Dimension(format!(
            "Bloch form needs both dimensions >= 2, got ({m}, {n})"
        )));
    }
    let (ka, kb) = (m * m - 1, n * n - 1);
    if b.x.len() != ka || b.y.len() != kb || b.t.len() != ka * kb {
        return Err(StateError::Dimension(format!(
            "Bloch data of lengths x={}, y={}, t={} does not fit {m}⊗{n}",
            b.x.len(),
            b.y.len(),
            b.t.len()
        )));
    }
    let basis_a = generator_basis(m)?;
    let basis_b = generator_basis(n)?;
    let id_a = ComplexMatrix::identity(m);
    let id_b = ComplexMatrix::identity(n);

    let mut acc = ComplexMatrix::identity(m * n);
    acc = &acc + &kron(&basis_a.combine(&b.x), &id_b);
    acc = &acc + &kron(&id_a, &basis_b.combine(&b.y));
    for (i, li) in basis_a.matrices.iter().enumerate() {
        let row = &b.t[i * kb..(i + 1) * kb];
        if row.iter().all(|v| *v == 0.0) {
            continue;
        }
        acc = &acc + &kron(li, &basis_b.combine(row));
    }
    make_state(m, n, acc.scale(1.0 / (m * n) as f64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{bell_state, maximally_mixed};

    #[test]
    fn pauli_matrices_for_d2() {
        let b = generator_basis(2).unwrap();
        let i = Complex64::new(0.0, 1.0);
        let one = Complex64::new(1.0, 0.0);
        let sx = ComplexMatrix::new(2, 2, vec![0.0.into(), one, one, 0.0.into()]).unwrap();
        let sy = ComplexMatrix::new(2, 2, vec![0.0.into(), -i, i, 0.0.into()]).unwrap();
        let sz = ComplexMatrix::from_real_diagonal(&[1.0, -1.0]);
        assert_eq!(b.matrices, vec![sx, sy, sz]);
    }

    #[test]
    fn orthogonality_and_count() {
        for d in 2..=8 {
            let b = generator_basis(d).unwrap();
            assert_eq!(b.len(), d * d - 1);
            for (p, lp) in b.matrices.iter().enumerate() {
                assert!(lp.trace().norm() < 1e-12);
                assert!(lp.hermitian_defect() == 0.0);
                for (q, lq) in b.matrices.iter().enumerate() {
                    let want = if p == q { 2.0 } else { 0.0 };
                    assert!(
                        (lp.trace_product(lq) - want).norm() < 1e-12,
                        "d={d} p={p} q={q}"
                    );
                }
            }
        }
        assert!(generator_basis(1).is_err());
    }

    #[test]
    fn maximally_mixed_has_zero_bloch_data() {
        let b = bloch_decompose(&maximally_mixed(2, 3));
        assert_eq!(b, BlochForm::zero(2, 3));
        let s = bloch_reconstruct(&BlochForm::zero(3, 3), 3, 3).unwrap();
        assert!(
            s.rho()
                .max_abs_diff(&ComplexMatrix::identity(9).scale(1.0 / 9.0))
                < 1e-15
        );
    }

    #[test]
    fn bell_correlation_matrix() {
        let b = bloch_decompose(&bell_state());
        assert!(b.x_norm_sq() < 1e-30 && b.y_norm_sq() < 1e-30);
        let want = [1.0, 0.0, 0.0, 0.0, -1.0, 0.0, 0.0, 0.0, 1.0];
        for (g, w) in b.t.iter().zip(want) {
            assert!((g - w).abs() < 1e-14);
        }
    }

    #[test]
    fn outside_bloch_ball_is_rejected() {
        let mut b = BlochForm::zero(2, 2);
        b.x[2] = 2.0;
        // eigenvalues (1 ± 2)/2 on A, i.e. ρ has eigenvalue −1/4
        assert!(matches!(
            bloch_reconstruct(&b, 2, 2),
            Err(StateError::NotPositive { min_eigenvalue }) if (min_eigenvalue + 0.25).abs() < 1e-12
        ));
    }

    #[test]
    fn reconstruct_rejects_mismatched_lengths() {
        let b = BlochForm::zero(2, 3);
        assert!(matches!(
            bloch_reconstruct(&b, 2, 2),
            Err(StateError::Dimension(_))
        ));
    }
}
