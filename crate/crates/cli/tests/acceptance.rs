//! Acceptance gate. Prints one PASS/FAIL line per criterion and exits non-zero
//! if any criterion fails. Lines starting with `info` are diagnostics only.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use qdiscord::measures::{
    bisect_root, discord_2n, discord_bruteforce, gap, negative_count, negativity,
    optimality_residuals, werner_discord_closed, werner_gap_2x8_closed,
    werner_negativity_2x8_closed, DEFAULT_RESOLUTION, SAFE_NEGATIVITY,
};
use qdiscord::numerics::{hermitian_eig, ComplexMatrix};
use qdiscord::sampling::{sample_state, substream_seed, GaussianStream, SamplerConfig};
use qdiscord::states::{
    bloch_decompose, bloch_reconstruct, isotropic_state, random_pure_state, read_state_file,
    werner_state, BipartiteState, WernerSpec,
};
use qdiscord_cli::{scan_records, ScanRecord};
use rayon::prelude::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const TIGHT: f64 = 1e-10;
const CUSHION: f64 = -1e-10;

fn werner_2x8(z: f64) -> BipartiteState {
    werner_state(&WernerSpec::new(4, z).unwrap())
        .unwrap()
        .reinterpret(2, 8)
        .unwrap()
}

fn grid(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    (0..points)
        .map(|k| {
            if k + 1 == points {
                hi
            } else {
                lo + (hi - lo) * k as f64 / (points - 1) as f64
            }
        })
        .collect()
}

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn werner_exactness() -> Outcome {
    let mut worst: f64 = 0.0;
    let s = werner_2x8(-1.0);
    let d = discord_2n(&s).unwrap().value;
    let n = negativity(&s).unwrap().value;
    worst = worst
        .max((d - 1.0 / 9.0).abs())
        .max((n - 0.5).abs())
        .max((d - n * n + 5.0 / 36.0).abs());

    let zb = -8.0 / 13.0;
    let s = werner_2x8(zb);
    let d = discord_2n(&s).unwrap().value;
    let n = negativity(&s).unwrap().value;
    worst = worst
        .max((d - 9.0 / 169.0).abs())
        .max((n - 3.0 / 13.0).abs())
        .max((d - n * n).abs());

    for z in grid(-1.0, 1.0, 41) {
        let s = werner_2x8(z);
        let d = discord_2n(&s).unwrap().value;
        let n = negativity(&s).unwrap().value;
        worst = worst
            .max((d - werner_discord_closed(4, z).unwrap()).abs())
            .max((n - werner_negativity_2x8_closed(z).unwrap()).abs());
    }
    check(
        worst <= TIGHT,
        format!("max deviation {worst:.3e} (tol 1e-10)"),
    )
}

fn violation_interval() -> Outcome {
    let zb = -8.0 / 13.0;
    let mut wrong = Vec::new();
    let mut flips = None;
    let pts = grid(-1.0, 1.0, 41);
    let mut prev: Option<(f64, bool)> = None;
    for &z in &pts {
        let g = gap(&werner_2x8(z)).unwrap();
        let negative = g.gap < 0.0;
        let expected = z < zb;
        if negative != expected || (!expected && g.violates) {
            wrong.push(z);
        }
        if let Some((pz, pneg)) = prev {
            if pneg != negative && flips.is_none() {
                flips = Some((pz, z));
            }
        }
        prev = Some((z, negative));
    }
    let boundary = flips
        .and_then(|(lo, hi)| bisect_root(|z| werner_gap_2x8_closed(z).unwrap(), lo, hi, 1e-13));
    let numeric_boundary =
        flips.and_then(|(lo, hi)| bisect_root(|z| gap(&werner_2x8(z)).unwrap().gap, lo, hi, 1e-13));
    match (boundary, numeric_boundary) {
        (Some(b), Some(nb)) => check(
            wrong.is_empty() && (b - zb).abs() <= TIGHT && (nb - zb).abs() <= TIGHT,
            format!(
                "misclassified grid points {wrong:?}; closed-form root {b:.15} numeric root {nb:.15} (|Δ| {:.1e}, {:.1e})",
                (b - zb).abs(),
                (nb - zb).abs()
            ),
        ),
        _ => Err(format!("no sign change on the grid; misclassified {wrong:?}")),
    }
}

fn theorem_bound() -> Outcome {
    let mut details = Vec::new();
    let mut ok = true;
    for n in [3usize, 4, 5] {
        let cfg = SamplerConfig::new(2, n, 1);
        let counts: Vec<usize> = (0..10_000u64)
            .into_par_iter()
            .map(|i| negative_count(&sample_state(&cfg, i)).unwrap())
            .collect();
        let max = counts.iter().copied().max().unwrap();
        let saturated = counts.iter().filter(|&&c| c == n - 1).count();
        ok &= max < n;
        details.push(format!(
            "2x{n}: max {max} <= {} (saturated {saturated})",
            n - 1
        ));
    }
    let pure_max = (0..1000u64)
        .into_par_iter()
        .map(|i| negative_count(&random_pure_state(2, 5, substream_seed(1, i))).unwrap())
        .max()
        .unwrap();
    ok &= pure_max <= 1;
    details.push(format!("pure 2x5: max {pure_max} <= 1"));
    check(ok, details.join("; "))
}

fn oracle_equivalence() -> Outcome {
    let mut worst_rel: f64 = 0.0;
    let mut worst_res: f64 = 0.0;
    for n in [2usize, 3, 4] {
        let cfg = SamplerConfig::new(2, n, 2024);
        let stats: Vec<(f64, f64)> = (0..100u64)
            .into_par_iter()
            .map(|i| {
                let s = sample_state(&cfg, i);
                let exact = discord_2n(&s).unwrap().value;
                let brute = discord_bruteforce(&s, DEFAULT_RESOLUTION).unwrap();
                let (r1, r2) = optimality_residuals(&s).unwrap();
                (
                    (exact - brute).abs() / exact.abs().max(f64::MIN_POSITIVE),
                    r1.max(r2),
                )
            })
            .collect();
        for (rel, res) in stats {
            worst_rel = worst_rel.max(rel);
            worst_res = worst_res.max(res);
        }
    }
    check(
        worst_rel <= 1e-6 && worst_res <= 1e-8,
        format!("max relative difference {worst_rel:.3e} (tol 1e-6), max residual {worst_res:.3e} (tol 1e-8)"),
    )
}

fn low_negativity_violators(records: &[ScanRecord]) -> Vec<&ScanRecord> {
    records
        .iter()
        .filter(|r| r.violates() && r.negativity <= SAFE_NEGATIVITY)
        .collect()
}

fn safe_region() -> Outcome {
    let records = scan_records(&SamplerConfig::new(2, 3, 1), 100_000).unwrap();
    let bad_safe = records
        .iter()
        .filter(|r| r.negativity <= SAFE_NEGATIVITY && r.gap < CUSHION)
        .count();
    let violating: Vec<_> = records.iter().filter(|r| r.violates()).collect();
    let bad_violators = violating
        .iter()
        .filter(|r| r.negativity <= SAFE_NEGATIVITY)
        .count();

    // Off the default ensemble: rank-2 states.
    let cfg = SamplerConfig::new(2, 3, 1).with_ginibre_k(2);
    let low_rank = scan_records(&cfg, 100_000).unwrap();
    let counter = low_negativity_violators(&low_rank);
    if let Some(r) = counter
        .iter()
        .min_by(|a, b| a.negativity.total_cmp(&b.negativity))
    {
        let s = sample_state(&cfg, r.index);
        let brute = discord_bruteforce(&s, DEFAULT_RESOLUTION).unwrap();
        println!(
            "info  rank-2 2x3 ensemble (1e5 samples): {} violations with N <= 2/5; lowest N = {:.6} at index {} (D closed {:.10}, D brute {:.10}, gap {:.3e})",
            counter.len(),
            r.negativity,
            r.index,
            r.discord,
            brute,
            brute - r.negativity * r.negativity
        );
    }
    check(
        bad_safe == 0 && bad_violators == 0,
        format!(
            "{} samples, {} violations, {bad_safe} with N <= 2/5 and gap < -1e-10",
            records.len(),
            violating.len()
        ),
    )
}

fn count_violations(dim_b: usize, count: u64, k: Option<usize>) -> usize {
    let mut cfg = SamplerConfig::new(2, dim_b, 1);
    if let Some(k) = k {
        cfg = cfg.with_ginibre_k(k);
    }
    scan_records(&cfg, count)
        .unwrap()
        .iter()
        .filter(|r| r.violates())
        .count()
}

fn fixture_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/fixtures/counterexample_2x3.json")
}

fn counterexample_existence() -> Outcome {
    let v3 = count_violations(3, 100_000, None);
    let v4 = count_violations(4, 100_000, None);
    let v15 = count_violations(15, 10, None);
    let fixture_gap = read_state_file(fixture_path())
        .map_err(|e| e.to_string())
        .and_then(|s| gap(&s).map_err(|e| e.to_string()));
    println!("info  2x3 scan (1e5, default ensemble): {v3} violations");
    for (n, count) in [(3usize, 100_000u64), (4, 100_000), (15, 10)] {
        println!(
            "info  ginibre_k = {} (dim_b + 1), 2x{n}, {count} samples: {} violations",
            n + 1,
            count_violations(n, count, Some(n + 1))
        );
    }
    let fixture_ok = matches!(&fixture_gap, Ok(g) if g.gap < 0.0);
    let fixture_text = match &fixture_gap {
        Ok(g) => format!("{:.6e}", g.gap),
        Err(e) => e.clone(),
    };
    check(
        v4 >= 10 && v15 >= 8 && fixture_ok,
        format!("2x4: {v4} violations (need >= 10); 2x15: {v15}/10 (need >= 8); fixture gap {fixture_text} (need < 0)"),
    )
}

fn two_qubit_soundness() -> Outcome {
    let records = scan_records(&SamplerConfig::new(2, 2, 1), 10_000).unwrap();
    let min = records.iter().map(|r| r.gap).fold(f64::INFINITY, f64::min);
    check(min >= CUSHION, format!("10000 states, min gap {min:.3e}"))
}

fn isotropic_non_violation() -> Outcome {
    let mut min = f64::INFINITY;
    for f in grid(0.0, 1.0, 41) {
        let s = isotropic_state(4, f).unwrap().reinterpret(2, 8).unwrap();
        min = min.min(gap(&s).unwrap().gap);
    }
    check(min >= CUSHION, format!("41 values of f, min gap {min:.3e}"))
}

fn random_hermitian(n: usize, seed: u64) -> ComplexMatrix {
    let mut s = GaussianStream::from_seed(seed);
    ComplexMatrix::from_fn(n, n, |_, _| s.complex()).hermitian_part()
}

fn kernel_properties() -> Outcome {
    let mut recon: f64 = 0.0;
    let mut hw_failures = 0;
    for i in 0..1000u64 {
        let n = 2 + (i % 15) as usize;
        let a = random_hermitian(n, substream_seed(9, 2 * i));
        let b = random_hermitian(n, substream_seed(9, 2 * i + 1));
        let ea = hermitian_eig(&a).unwrap();
        let eb = hermitian_eig(&b).unwrap();
        recon = recon
            .max(ea.reconstruct().max_abs_diff(&a))
            .max(eb.reconstruct().max_abs_diff(&b));
        let spectral: f64 = ea
            .eigenvalues
            .iter()
            .zip(&eb.eigenvalues)
            .map(|(x, y)| (x - y).powi(2))
            .sum();
        if (&a - &b).frobenius_sq() < spectral - 1e-10 * (1.0 + spectral) {
            hw_failures += 1;
        }
    }
    let dims = [(2usize, 2usize), (2, 3), (2, 4), (3, 3)];
    let mut roundtrip: f64 = 0.0;
    for (j, &(m, n)) in dims.iter().enumerate() {
        let cfg = SamplerConfig::new(m, n, 40 + j as u64);
        for i in 0..100 {
            let s = sample_state(&cfg, i);
            let back = bloch_reconstruct(&bloch_decompose(&s), m, n).unwrap();
            roundtrip = roundtrip.max(back.rho().max_abs_diff(s.rho()));
        }
    }
    check(
        recon <= TIGHT && hw_failures == 0 && roundtrip <= TIGHT,
        format!(
            "reconstruction {recon:.3e}, Hoffman-Wielandt failures {hw_failures}/1000, Bloch roundtrip {roundtrip:.3e}"
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("werner exactness", werner_exactness),
        ("violation interval", violation_interval),
        ("negative PT eigenvalue bound", theorem_bound),
        ("oracle equivalence", oracle_equivalence),
        ("safe region N <= 2/5", safe_region),
        ("counterexample existence", counterexample_existence),
        ("two-qubit soundness", two_qubit_soundness),
        ("isotropic non-violation", isotropic_non_violation),
        ("kernel properties", kernel_properties),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(d) => println!("PASS  {}. {name}: {d} [{secs:.1}s]", i + 1),
            Err(d) => {
                failed += 1;
                println!("FAIL  {}. {name}: {d} [{secs:.1}s]", i + 1)
            }
        }
    }
    println!(
        "{} of {} acceptance criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
