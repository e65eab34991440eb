use std::fmt;
use std::fs;
use std::path::PathBuf;

use qdiscord::measures::{
    bisect_root, discord_2n, discord_lower_bound, negativity, werner_discord_closed,
    werner_gap_2x8_closed, werner_negativity_2x8_closed, GapReport,
};
use qdiscord::states::{werner_state, BipartiteState, WernerSpec};
use qdiscord::MeasureError;

use crate::format::fmt17;
use crate::{svg, CliError};

const BISECTION_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone)]
pub struct WernerArgs {
    pub m: usize,
    pub view_a: usize,
    pub view_b: usize,
    pub z_min: f64,
    pub z_max: f64,
    /// Number of grid intervals; the grid has `steps + 1` points.
    pub steps: usize,
    pub out: Option<PathBuf>,
    pub svg: Option<PathBuf>,
}

impl WernerArgs {
    fn is_2x8_view(&self) -> bool {
        self.m == 4 && (self.view_a, self.view_b) == (2, 8)
    }

    fn has_discord_closed(&self) -> bool {
        self.is_2x8_view() || (self.view_a, self.view_b) == (self.m, self.m)
    }

    fn grid(&self) -> impl Iterator<Item = f64> + '_ {
        let span = self.z_max - self.z_min;
        (0..=self.steps).map(move |k| {
            if k == self.steps {
                self.z_max
            } else {
                self.z_min + span * k as f64 / self.steps as f64
            }
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WernerRow {
    pub z: f64,
    pub discord_numeric: f64,
    pub discord_closed: Option<f64>,
    pub neg_numeric: f64,
    pub neg_closed: Option<f64>,
    /// `discord_numeric − neg_numeric²`.
    pub gap: f64,
}

impl WernerRow {
    pub fn violates(&self) -> bool {
        GapReport::new(self.discord_numeric, self.neg_numeric).violates
    }
}

#[derive(Debug, Clone)]
pub struct WernerReport {
    pub m: usize,
    pub view: (usize, usize),
    pub rows: Vec<WernerRow>,
    pub violating: usize,
    /// Adjacent grid points across which the violation flag flips.
    pub bracket: Option<(f64, f64)>,
    /// Bisected root of the gap inside `bracket`.
    pub boundary: Option<f64>,
    /// Known exact boundary, when one exists for this view.
    pub exact_boundary: Option<f64>,
}

impl fmt::Display for WernerReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "werner m={} viewed as {}x{}: {} grid points, {} violating",
            self.m,
            self.view.0,
            self.view.1,
            self.rows.len(),
            self.violating
        )?;
        match (self.bracket, self.boundary) {
            (Some((lo, hi)), Some(z)) => write!(
                f,
                "  violation boundary z* = {} (bracket [{}, {}])",
                fmt17(z),
                fmt17(lo),
                fmt17(hi)
            )?,
            (Some((lo, hi)), None) => write!(
                f,
                "  violation flips between z = {} and {}",
                fmt17(lo),
                fmt17(hi)
            )?,
            _ => write!(f, "  no violation boundary on this grid")?,
        }
        if let Some(exact) = self.exact_boundary {
            write!(f, "\n  exact boundary -8/13 = {}", fmt17(exact))?;
            if let Some(z) = self.boundary {
                write!(f, " (difference {:.3e})", (z - exact).abs())?;
            }
        }
        Ok(())
    }
}

fn numeric_state(args: &WernerArgs, z: f64) -> Result<BipartiteState, CliError> {
    let w = werner_state(&WernerSpec::new(args.m, z)?)?;
    Ok(w.reinterpret(args.view_a, args.view_b)?)
}

fn numeric_discord(s: &BipartiteState) -> Result<f64, MeasureError> {
    if s.dim_a() == 2 {
        Ok(discord_2n(s)?.value)
    } else {
        discord_lower_bound(s)
    }
}

fn numeric_gap(args: &WernerArgs, z: f64) -> Result<f64, CliError> {
    let s = numeric_state(args, z)?;
    let n = negativity(&s)?.value;
    Ok(numeric_discord(&s)? - n * n)
}

fn validate(args: &WernerArgs) -> Result<(), CliError> {
    if args.m < 2 {
        return Err(CliError::Validation(format!(
            "--m must be at least 2, got {}",
            args.m
        )));
    }
    if args.view_a * args.view_b != args.m * args.m {
        return Err(CliError::Validation(format!(
            "view {}x{} does not factor dimension {}",
            args.view_a,
            args.view_b,
            args.m * args.m
        )));
    }
    if args.view_a < 2 || args.view_a > args.view_b {
        return Err(CliError::Validation(format!(
            "view needs 2 <= view_a <= view_b, got {}x{}",
            args.view_a, args.view_b
        )));
    }
    if args.steps == 0 {
        return Err(CliError::Validation("--steps must be positive".into()));
    }
    let in_range = |z: f64| (-1.0..=1.0).contains(&z);
    if !(in_range(args.z_min) && in_range(args.z_max)) || args.z_min >= args.z_max {
        return Err(CliError::Validation(format!(
            "invalid z grid [{}, {}]; need -1 <= z-min < z-max <= 1",
            args.z_min, args.z_max
        )));
    }
    Ok(())
}

/// Numeric and closed-form measures on the z grid.
pub fn werner_rows(args: &WernerArgs) -> Result<Vec<WernerRow>, CliError> {
    validate(args)?;
    args.grid()
        .map(|z| {
            let s = numeric_state(args, z)?;
            let discord_numeric = numeric_discord(&s)?;
            let neg_numeric = negativity(&s)?.value;
            let discord_closed = if args.has_discord_closed() {
                Some(werner_discord_closed(args.m, z)?)
            } else {
                None
            };
            let neg_closed = if args.is_2x8_view() {
                Some(werner_negativity_2x8_closed(z)?)
            } else {
                None
            };
            Ok(WernerRow {
                z,
                discord_numeric,
                discord_closed,
                neg_numeric,
                neg_closed,
                gap: discord_numeric - neg_numeric * neg_numeric,
            })
        })
        .collect()
}

fn opt(v: Option<f64>) -> String {
    v.map(fmt17).unwrap_or_default()
}

/// Sweeps the Werner parameter, writes the CSV and brackets the violation boundary.
///
/// For the `m = 4`, `2⊗8` view the boundary is bisected on the closed forms; other
/// views bisect the numerically computed gap.
pub fn cmd_werner(args: &WernerArgs) -> Result<WernerReport, CliError> {
    let rows = werner_rows(args)?;

    let bracket = rows
        .windows(2)
        .find(|w| w[0].violates() != w[1].violates())
        .map(|w| (w[0].z, w[1].z));
    let boundary = match bracket {
        Some((lo, hi)) if args.is_2x8_view() => bisect_root(
            |z| werner_gap_2x8_closed(z).unwrap_or(f64::NAN),
            lo,
            hi,
            BISECTION_TOLERANCE,
        ),
        Some((lo, hi)) => bisect_root(
            |z| numeric_gap(args, z).unwrap_or(f64::NAN),
            lo,
            hi,
            BISECTION_TOLERANCE,
        ),
        None => None,
    };

    if let Some(path) = &args.out {
        let mut text =
            String::from("z,discord_numeric,discord_closed,neg_numeric,neg_closed,gap\n");
        for r in &rows {
            text.push_str(&format!(
                "{},{},{},{},{},{}\n",
                fmt17(r.z),
                fmt17(r.discord_numeric),
                opt(r.discord_closed),
                fmt17(r.neg_numeric),
                opt(r.neg_closed),
                fmt17(r.gap)
            ));
        }
        fs::write(path, text).map_err(|e| CliError::io(path, e))?;
    }
    if let Some(path) = &args.svg {
        let d: Vec<_> = rows.iter().map(|r| (r.z, r.discord_numeric)).collect();
        let n2: Vec<_> = rows
            .iter()
            .map(|r| (r.z, r.neg_numeric * r.neg_numeric))
            .collect();
        let title = format!("Werner m={} as {}x{}", args.m, args.view_a, args.view_b);
        svg::write_lines(
            path,
            &title,
            "z",
            &[("D", "steelblue", d), ("N²", "crimson", n2)],
        )
        .map_err(|e| CliError::io(path, e))?;
    }

    Ok(WernerReport {
        m: args.m,
        view: (args.view_a, args.view_b),
        violating: rows.iter().filter(|r| r.violates()).count(),
        rows,
        bracket,
        boundary,
        exact_boundary: args.is_2x8_view().then_some(-8.0 / 13.0),
    })
}
