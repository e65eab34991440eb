use std::fmt;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use qdiscord::measures::{discord_2n, negativity, GapReport};
use qdiscord::sampling::{sample_state, SamplerConfig};
use qdiscord::states::write_state_file;
use qdiscord::MeasureError;
use rayon::prelude::*;

use crate::format::fmt17;
use crate::{svg, CliError};

pub const CSV_HEADER: &str = "index,discord,negativity,neg_sq,gap,neg_count";

/// One sampled state of a scan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanRecord {
    pub index: u64,
    pub discord: f64,
    pub negativity: f64,
    pub neg_sq: f64,
    pub gap: f64,
    pub neg_count: usize,
}

impl ScanRecord {
    pub fn violates(&self) -> bool {
        GapReport::new(self.discord, self.negativity).violates
    }

    fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.index,
            fmt17(self.discord),
            fmt17(self.negativity),
            fmt17(self.neg_sq),
            fmt17(self.gap),
            self.neg_count
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanSummary {
    pub dim_a: usize,
    pub dim_b: usize,
    pub total: u64,
    pub violations: u64,
    pub min_gap: f64,
    pub min_gap_index: u64,
    /// Samples whose partial transpose has the maximal `n − 1` negative eigenvalues.
    pub saturation_count: u64,
    /// State file written for the most-violating sample, if any sample violated.
    pub fixture: Option<PathBuf>,
}

impl fmt::Display for ScanSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "scan {}x{}", self.dim_a, self.dim_b)?;
        writeln!(f, "  total:       {}", self.total)?;
        writeln!(f, "  violations:  {}", self.violations)?;
        writeln!(
            f,
            "  min gap:     {} (index {})",
            fmt17(self.min_gap),
            self.min_gap_index
        )?;
        write!(
            f,
            "  neg_count = {}: {}",
            self.dim_b.saturating_sub(1),
            self.saturation_count
        )?;
        if let Some(p) = &self.fixture {
            write!(f, "\n  worst state: {}", p.display())?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct ScanArgs {
    pub dim_a: usize,
    pub dim_b: usize,
    pub count: u64,
    pub seed: u64,
    pub ginibre_k: Option<usize>,
    pub out: PathBuf,
    pub svg: Option<PathBuf>,
}

impl ScanArgs {
    pub fn sampler(&self) -> SamplerConfig {
        let cfg = SamplerConfig::new(self.dim_a, self.dim_b, self.seed);
        match self.ginibre_k {
            Some(k) => cfg.with_ginibre_k(k),
            None => cfg,
        }
    }
}

/// Measures samples `0..count` of `cfg` in parallel; output is in index order.
pub fn scan_records(cfg: &SamplerConfig, count: u64) -> Result<Vec<ScanRecord>, MeasureError> {
    (0..count)
        .into_par_iter()
        .map(|index| {
            let s = sample_state(cfg, index);
            let d = discord_2n(&s)?.value;
            let n = negativity(&s)?;
            let neg_sq = n.value * n.value;
            Ok(ScanRecord {
                index,
                discord: d,
                negativity: n.value,
                neg_sq,
                gap: d - neg_sq,
                neg_count: n.negative_count,
            })
        })
        .collect()
}

pub fn summarize(dim_a: usize, dim_b: usize, records: &[ScanRecord]) -> ScanSummary {
    let (min_gap, min_gap_index) = records.iter().fold((f64::INFINITY, 0), |(g, i), r| {
        if r.gap < g {
            (r.gap, r.index)
        } else {
            (g, i)
        }
    });
    ScanSummary {
        dim_a,
        dim_b,
        total: records.len() as u64,
        violations: records.iter().filter(|r| r.violates()).count() as u64,
        min_gap,
        min_gap_index,
        saturation_count: records.iter().filter(|r| r.neg_count + 1 == dim_b).count() as u64,
        fixture: None,
    }
}

fn write_csv(path: &Path, records: &[ScanRecord]) -> Result<(), CliError> {
    let file = File::create(path).map_err(|e| CliError::io(path, e))?;
    let mut w = BufWriter::new(file);
    let mut emit = || -> std::io::Result<()> {
        writeln!(w, "{CSV_HEADER}")?;
        for r in records {
            writeln!(w, "{}", r.csv_line())?;
        }
        w.flush()
    };
    emit().map_err(|e| CliError::io(path, e))
}

/// `<out>.worst.json` next to the CSV.
fn fixture_path(out: &Path) -> PathBuf {
    out.with_extension("worst.json")
}

/// Samples `count` random states, writes one CSV row each and returns the summary.
///
/// When any sample violates `D ≥ N²`, the most-violating state is stored as JSON
/// beside the CSV.
pub fn cmd_scan(args: &ScanArgs) -> Result<ScanSummary, CliError> {
    if args.dim_a != 2 {
        return Err(CliError::Validation(format!(
            "scan needs --dim-a 2 (exact discord is only available for 2⊗n), got {}",
            args.dim_a
        )));
    }
    if args.dim_b < 2 {
        return Err(CliError::Validation(format!(
            "scan needs --dim-b >= 2, got {}",
            args.dim_b
        )));
    }
    if args.ginibre_k == Some(0) {
        return Err(CliError::Validation(
            "--ginibre-k must be at least 1".into(),
        ));
    }
    let cfg = args.sampler();
    let records = scan_records(&cfg, args.count)?;
    write_csv(&args.out, &records)?;

    let mut summary = summarize(args.dim_a, args.dim_b, &records);
    if summary.violations > 0 {
        let path = fixture_path(&args.out);
        write_state_file(&path, &sample_state(&cfg, summary.min_gap_index))?;
        summary.fixture = Some(path);
    }
    if let Some(svg_path) = &args.svg {
        let points: Vec<(f64, f64, bool)> = records
            .iter()
            .map(|r| (r.neg_sq, r.discord, r.violates()))
            .collect();
        let title = format!(
            "D vs N² for {} random {}x{} states",
            args.count, args.dim_a, args.dim_b
        );
        svg::write_scatter(svg_path, &title, &points).map_err(|e| CliError::io(svg_path, e))?;
    }
    Ok(summary)
}
