use super::MeasureError;
use crate::numerics::{hermitian_eig, zero_threshold};
use crate::states::BipartiteState;

/// Negativity of a state together with the partial-transpose spectrum it came from.
#[derive(Debug, Clone, PartialEq)]
pub struct NegativityResult {
    /// `(2/(m − 1)) Σ |λ|` over eigenvalues of `ρ^{T_A}` below `−τ`.
    pub value: f64,
    /// Number of eigenvalues of `ρ^{T_A}` below `−τ`.
    pub negative_count: usize,
    /// Eigenvalues of `ρ^{T_A}`, non-increasing.
    pub spectrum: Vec<f64>,
    /// Zero threshold `τ` used for the count and the sum.
    pub threshold: f64,
}

impl NegativityResult {
    pub fn is_ppt(&self) -> bool {
        self.negative_count == 0
    }
}

/// Negativity `(‖ρ^{T_A}‖₁ − 1)/(m − 1)` with `m = dim_a`.
///
/// The normalization always uses the first factor's dimension, whichever factor is
/// smaller; callers who want the `m ≤ n` convention should [`reinterpret`] first.
/// Partial-transpose eigenvalues within `τ = 1e-12·max(1, ‖ρ^{T_A}‖)` of zero are
/// ignored.
///
/// [`reinterpret`]: crate::states::reinterpret
pub fn negativity(s: &BipartiteState) -> Result<NegativityResult, MeasureError> {
    if s.dim_a() < 2 {
        return Err(MeasureError::Dimension(format!(
            "negativity needs dim_a >= 2, got {}",
            s.dim_a()
        )));
    }
    let pt = s.partial_transpose_a();
    let threshold = zero_threshold(&pt);
    let spectrum = hermitian_eig(&pt)?.eigenvalues;
    let negatives = spectrum.iter().filter(|&&l| l < -threshold);
    let negative_count = negatives.clone().count();
    let abs_sum: f64 = negatives.map(|l| -l).sum();
    let value = 2.0 * abs_sum / (s.dim_a() - 1) as f64;
    Ok(NegativityResult {
        value,
        negative_count,
        spectrum,
        threshold,
    })
}

/// Number of negative partial-transpose eigenvalues (below the zero threshold).
///
/// For `dim_a = 2` this never exceeds `dim_b − 1`.
pub fn negative_count(s: &BipartiteState) -> Result<usize, MeasureError> {
    Ok(negativity(s)?.negative_count)
}
