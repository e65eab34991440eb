//! Discord as an explicit minimization over projective measurements on a qubit A.
//!
//! This route never touches the Bloch decomposition: it projects `ρ` with
//! `Π_± = (I ± e·σ)/2` and searches the sphere of directions `e`. It serves as an
//! independent check of the closed form in [`discord_2n`](super::discord_2n).

use num_complex::Complex64;

use super::MeasureError;
use crate::numerics::ComplexMatrix;
use crate::states::BipartiteState;

/// Default number of Fibonacci-sphere directions for the coarse search.
pub const DEFAULT_RESOLUTION: usize = 2000;
/// Angular tolerance of the golden-section refinement.
pub const DIRECTION_TOLERANCE: f64 = 1e-10;
const MAX_REFINE_ROUNDS: usize = 500;

/// `(I + s·e·σ)/2` for `s = ±1`.
fn qubit_projector(e: &[f64; 3], sign: f64) -> [[Complex64; 2]; 2] {
    let half = 0.5 * sign;
    [
        [
            Complex64::new(0.5 + half * e[2], 0.0),
            Complex64::new(half * e[0], -half * e[1]),
        ],
        [
            Complex64::new(half * e[0], half * e[1]),
            Complex64::new(0.5 - half * e[2], 0.0),
        ],
    ]
}

/// `Π^A(ρ) = Σ_± (Π_± ⊗ I) ρ (Π_± ⊗ I)` for the measurement along `e`.
pub(crate) fn measure_a(s: &BipartiteState, e: &[f64; 3]) -> ComplexMatrix {
    debug_assert_eq!(s.dim_a(), 2);
    let n = s.dim_b();
    let rho = s.rho();
    let mut out = ComplexMatrix::zeros(2 * n, 2 * n);
    for sign in [1.0, -1.0] {
        let p = qubit_projector(e, sign);
        for a in 0..2 {
            for b in 0..2 {
                for ap in 0..2 {
                    for bp in 0..2 {
                        let w = p[a][ap] * p[bp][b];
                        if w.re == 0.0 && w.im == 0.0 {
                            continue;
                        }
                        for i in 0..n {
                            for j in 0..n {
                                out[(a * n + i, b * n + j)] += w * rho[(ap * n + i, bp * n + j)];
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

fn objective(s: &BipartiteState, e: &[f64; 3]) -> f64 {
    2.0 * (s.rho() - &measure_a(s, e)).frobenius_sq()
}

/// `2‖ρ − Π^A(ρ)‖²` for the projective measurement along the unit vector `direction`.
pub fn discord_via_measurement(
    s: &BipartiteState,
    direction: &[f64; 3],
) -> Result<f64, MeasureError> {
    if s.dim_a() != 2 {
        return Err(MeasureError::Dimension(format!(
            "measurement discord needs dim_a = 2, got {}",
            s.dim_a()
        )));
    }
    let norm = direction.iter().map(|c| c * c).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > 1e-10 {
        return Err(MeasureError::NotUnit { norm });
    }
    Ok(objective(s, direction))
}

/// `count` nearly uniform points on the unit sphere (golden-angle spiral).
pub fn fibonacci_sphere(count: usize) -> Vec<[f64; 3]> {
    let golden_angle = std::f64::consts::PI * (3.0 - 5f64.sqrt());
    (0..count)
        .map(|i| {
            let z = 1.0 - (2 * i + 1) as f64 / count as f64;
            let r = (1.0 - z * z).max(0.0).sqrt();
            let phi = golden_angle * i as f64;
            [r * phi.cos(), r * phi.sin(), z]
        })
        .collect()
}

fn normalize(v: [f64; 3]) -> [f64; 3] {
    let n = v.iter().map(|c| c * c).sum::<f64>().sqrt();
    [v[0] / n, v[1] / n, v[2] / n]
}

fn cross(a: &[f64; 3], b: &[f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// Orthonormal pair spanning the tangent plane at `e`.
fn tangent_frame(e: &[f64; 3]) -> ([f64; 3], [f64; 3]) {
    let helper = if e[0].abs() < 0.9 {
        [1.0, 0.0, 0.0]
    } else {
        [0.0, 1.0, 0.0]
    };
    let u = normalize(cross(e, &helper));
    let v = cross(e, &u);
    (u, v)
}

fn on_great_circle(e: &[f64; 3], u: &[f64; 3], t: f64) -> [f64; 3] {
    let (s, c) = t.sin_cos();
    normalize([
        e[0] * c + u[0] * s,
        e[1] * c + u[1] * s,
        e[2] * c + u[2] * s,
    ])
}

/// Golden-section minimization of `f` on `[lo, hi]`; returns the abscissa.
fn golden_section(mut f: impl FnMut(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while hi - lo > tol {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
    }
    0.5 * (lo + hi)
}

/// Brute-force discord of a `2⊗n` state: the best of `resolution` Fibonacci-sphere
/// directions, polished by golden-section searches along great circles through the
/// current point until a full round moves it by less than `1e-10` radians.
pub fn discord_bruteforce(s: &BipartiteState, resolution: usize) -> Result<f64, MeasureError> {
    Ok(minimize_over_directions(s, resolution)?.0)
}

/// Minimum value and the direction attaining it.
pub fn minimize_over_directions(
    s: &BipartiteState,
    resolution: usize,
) -> Result<(f64, [f64; 3]), MeasureError> {
    if s.dim_a() != 2 {
        return Err(MeasureError::Dimension(format!(
            "measurement discord needs dim_a = 2, got {}",
            s.dim_a()
        )));
    }
    let resolution = resolution.max(1);
    let (mut best_e, mut best) = fibonacci_sphere(resolution)
        .into_iter()
        .map(|e| (e, objective(s, &e)))
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .expect("at least one direction");

    // cap radius: a few grid spacings
    let mut radius = (3.0 * (4.0 * std::f64::consts::PI / resolution as f64).sqrt())
        .min(std::f64::consts::FRAC_PI_4);
    for _ in 0..MAX_REFINE_ROUNDS {
        let start = best_e;
        let (u, v) = tangent_frame(&best_e);
        let diag_p = normalize([u[0] + v[0], u[1] + v[1], u[2] + v[2]]);
        let diag_m = normalize([u[0] - v[0], u[1] - v[1], u[2] - v[2]]);
        for dir in [u, v, diag_p, diag_m] {
            let e0 = best_e;
            // re-orthogonalize against the moving point
            let dot: f64 = dir.iter().zip(&e0).map(|(a, b)| a * b).sum();
            let tangent = [
                dir[0] - dot * e0[0],
                dir[1] - dot * e0[1],
                dir[2] - dot * e0[2],
            ];
            let tn = tangent.iter().map(|c| c * c).sum::<f64>().sqrt();
            if tn < 1e-12 {
                continue;
            }
            let tangent = [tangent[0] / tn, tangent[1] / tn, tangent[2] / tn];
            let t = golden_section(
                |t| objective(s, &on_great_circle(&e0, &tangent, t)),
                -radius,
                radius,
                DIRECTION_TOLERANCE,
            );
            let candidate = on_great_circle(&e0, &tangent, t);
            let value = objective(s, &candidate);
            if value <= best {
                best = value;
                best_e = candidate;
            }
        }
        let moved = angle_between(&start, &best_e);
        if moved < DIRECTION_TOLERANCE {
            break;
        }
        radius = (4.0 * moved).clamp(1e-6, radius);
    }
    Ok((best, best_e))
}

fn angle_between(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    let c = cross(a, b);
    let sin = c.iter().map(|x| x * x).sum::<f64>().sqrt();
    let cos: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
    sin.atan2(cos)
}
