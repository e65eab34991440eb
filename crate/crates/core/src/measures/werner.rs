//! Closed forms for the Werner family.

use super::MeasureError;

fn check_z(z: f64) -> Result<(), MeasureError> {
    if (-1.0..=1.0).contains(&z) {
        Ok(())
    } else {
        Err(MeasureError::OutOfRange {
            name: "z",
            value: z,
            range: "[-1, 1]",
        })
    }
}

/// Geometric discord of the `m⊗m` Werner state: `((mz − 1)/(m² − 1))²`.
///
/// The same value holds for the `m = 4` state viewed as `2⊗8`.
pub fn werner_discord_closed(m: usize, z: f64) -> Result<f64, MeasureError> {
    check_z(z)?;
    let m = m as f64;
    Ok(((m * z - 1.0) / (m * m - 1.0)).powi(2))
}

/// Negativity of the `m = 4` Werner state viewed as `2⊗8`:
///
/// ```text
/// (−2 − 7z)/10   z ∈ [−1, −2/7)
/// 0              z ∈ [−2/7, 2/3]
/// (−2 + 3z)/10   z ∈ (2/3, 1]
/// ```
pub fn werner_negativity_2x8_closed(z: f64) -> Result<f64, MeasureError> {
    check_z(z)?;
    Ok(if z < -2.0 / 7.0 {
        (-2.0 - 7.0 * z) / 10.0
    } else if z <= 2.0 / 3.0 {
        0.0
    } else {
        (-2.0 + 3.0 * z) / 10.0
    })
}

/// `D − N²` for the `2⊗8` view, from the closed forms.
pub fn werner_gap_2x8_closed(z: f64) -> Result<f64, MeasureError> {
    Ok(werner_discord_closed(4, z)? - werner_negativity_2x8_closed(z)?.powi(2))
}

/// Bisects `f` on `[lo, hi]` (which must bracket a sign change) down to `tol`.
pub fn bisect_root(
    mut f: impl FnMut(f64) -> f64,
    mut lo: f64,
    mut hi: f64,
    tol: f64,
) -> Option<f64> {
    let mut f_lo = f(lo);
    let f_hi = f(hi);
    if f_lo == 0.0 {
        return Some(lo);
    }
    if f_hi == 0.0 {
        return Some(hi);
    }
    if f_lo.signum() == f_hi.signum() {
        return None;
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return Some(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Some(0.5 * (lo + hi))
}
