use num_complex::Complex64;

use super::measurement::measure_a;
use super::MeasureError;
use crate::numerics::{hermitian_eig, ComplexMatrix, HermitianSpectrum};
use crate::states::{bloch_decompose, BipartiteState, BlochForm};

/// Geometric discord of a `2⊗n` state and the measurement that attains it.
#[derive(Debug, Clone)]
pub struct DiscordResult {
    pub value: f64,
    /// Eigenvalues of `G = xxᵗ + (2/n)TTᵗ`, non-increasing.
    pub g_eigenvalues: Vec<f64>,
    /// Unit Bloch vector `e` of the optimal projective measurement `(I ± e·σ)/2`.
    pub optimal_direction: [f64; 3],
    /// `Π^A(ρ)` for the optimal measurement.
    pub classical_state: ComplexMatrix,
}

fn real_symmetric_eig(g: &[f64], k: usize) -> Result<HermitianSpectrum, MeasureError> {
    let gm = ComplexMatrix::from_fn(k, k, |i, j| Complex64::new(g[i * k + j], 0.0));
    Ok(hermitian_eig(&gm)?)
}

/// `‖x‖² + (2/n)‖T‖² − Σ_{k<m−1} λ_k↓(G)` together with the spectrum of `G`.
fn bracket(b: &BlochForm) -> Result<(f64, HermitianSpectrum), MeasureError> {
    let k = b.t_rows();
    let spectrum = real_symmetric_eig(&b.g_matrix(), k)?;
    let top: f64 = spectrum.eigenvalues[..b.dim_a - 1].iter().sum();
    let n = b.dim_b as f64;
    Ok((b.x_norm_sq() + 2.0 / n * b.t_norm_sq() - top, spectrum))
}

/// Exact geometric discord of a `2⊗n` state,
/// `D = (1/n)[‖x‖² + (2/n)‖T‖² − λ_max(G)]`.
///
/// The optimal measurement direction is the top eigenvector of `G`; when that
/// eigenvalue is degenerate the solver's first eigenvector is used, which attains the
/// same value.
pub fn discord_2n(s: &BipartiteState) -> Result<DiscordResult, MeasureError> {
    if s.dim_a() != 2 {
        return Err(MeasureError::Dimension(format!(
            "exact discord needs dim_a = 2, got {}",
            s.dim_a()
        )));
    }
    if s.dim_b() < 2 {
        return Err(MeasureError::Dimension(format!(
            "exact discord needs dim_b >= 2, got {}",
            s.dim_b()
        )));
    }
    let b = bloch_decompose(s);
    let (bracket, spectrum) = bracket(&b)?;
    let value = bracket / b.dim_b as f64;

    let v = spectrum.eigenvector(0);
    // eigenvectors of a real symmetric matrix are real up to a global phase
    let pivot = v
        .iter()
        .copied()
        .max_by(|a, b| a.norm().total_cmp(&b.norm()))
        .expect("3-vector");
    let phase = pivot.conj() / pivot.norm();
    let mut e = [0.0; 3];
    for (dst, z) in e.iter_mut().zip(&v) {
        *dst = (z * phase).re;
    }
    let norm = e.iter().map(|c| c * c).sum::<f64>().sqrt();
    e.iter_mut().for_each(|c| *c /= norm);

    let classical_state = measure_a(s, &e);
    Ok(DiscordResult {
        value,
        g_eigenvalues: spectrum.eigenvalues,
        optimal_direction: e,
        classical_state,
    })
}

/// Lower bound on the geometric discord of an `m⊗n` state (`m ≤ n`):
/// `(2/(m(m−1)n))[‖x‖² + (2/n)‖T‖² − Σ_{k=1}^{m−1} λ_k↓(G)]`.
///
/// Exact when `m = 2`.
pub fn discord_lower_bound(s: &BipartiteState) -> Result<f64, MeasureError> {
    let (m, n) = (s.dim_a(), s.dim_b());
    if m < 2 || m > n {
        return Err(MeasureError::Dimension(format!(
            "discord bound needs 2 <= dim_a <= dim_b, got {m}⊗{n}"
        )));
    }
    let (bracket, _) = bracket(&bloch_decompose(s))?;
    let (mf, nf) = (m as f64, n as f64);
    Ok(2.0 / (mf * (mf - 1.0) * nf) * bracket)
}

/// Residuals of the optimality identities for `χ = Π^A(ρ)` at the closed-form optimum:
/// `|Tr χ² − Tr ρχ|` and `|D − 2 Tr(ρ² − χ²)|`.
pub fn optimality_residuals(s: &BipartiteState) -> Result<(f64, f64), MeasureError> {
    let d = discord_2n(s)?;
    let chi = &d.classical_state;
    let chi_sq = chi.frobenius_sq();
    let rho_chi = s.rho().trace_product(chi).re;
    let rho_sq = s.rho().frobenius_sq();
    Ok((
        (chi_sq - rho_chi).abs(),
        (d.value - 2.0 * (rho_sq - chi_sq)).abs(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::ComplexMatrix;
    use crate::states::{bell_state, maximally_mixed, product_state, werner_state, WernerSpec};

    #[test]
    fn bell_discord_is_one() {
        let d = discord_2n(&bell_state()).unwrap();
        assert!((d.value - 1.0).abs() < 1e-14);
        for g in &d.g_eigenvalues {
            assert!((g - 1.0).abs() < 1e-14);
        }
        let diff = bell_state().rho() - &d.classical_state;
        assert!((2.0 * diff.frobenius_sq() - d.value).abs() < 1e-12);
    }

    #[test]
    fn product_state_has_zero_discord() {
        let ra = ComplexMatrix::from_real_diagonal(&[0.8, 0.2]);
        let rb = ComplexMatrix::from_real_diagonal(&[0.5, 0.3, 0.2]);
        let s = product_state(&ra, &rb).unwrap();
        assert!(discord_2n(&s).unwrap().value.abs() < 1e-15);
        let (r1, r2) = optimality_residuals(&s).unwrap();
        assert!(r1 < 1e-12 && r2 < 1e-12);
    }

    #[test]
    fn bell_optimality_residuals() {
        let (r1, r2) = optimality_residuals(&bell_state()).unwrap();
        assert!(r1 <= 1e-10 && r2 <= 1e-10);
    }

    #[test]
    fn werner_2x8_discord() {
        for z in [-1.0, -0.5, 0.0, 0.25, 0.6, 1.0] {
            let w = werner_state(&WernerSpec::new(4, z).unwrap())
                .unwrap()
                .reinterpret(2, 8)
                .unwrap();
            let want = ((4.0 * z - 1.0) / 15.0f64).powi(2);
            assert!(
                (discord_2n(&w).unwrap().value - want).abs() < 1e-12,
                "z={z}"
            );
        }
    }

    #[test]
    fn lower_bound_edge_cases() {
        assert!(discord_lower_bound(&maximally_mixed(3, 4)).unwrap().abs() < 1e-15);
        assert!(discord_lower_bound(&maximally_mixed(3, 2)).is_err());
        assert!(discord_2n(&maximally_mixed(3, 3)).is_err());

        let w = werner_state(&WernerSpec::new(4, -1.0).unwrap()).unwrap();
        let bound = discord_lower_bound(&w).unwrap();
        assert!(bound <= 1.0 / 9.0 + 1e-12, "bound {bound}");
        assert!(bound >= 0.0);
    }
}
