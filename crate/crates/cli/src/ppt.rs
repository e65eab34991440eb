use std::fmt;
use std::fs;
use std::path::PathBuf;

use qdiscord::measures::negative_count;
use qdiscord::sampling::{sample_state, substream_seed, SamplerConfig};
use qdiscord::states::random_pure_state;
use qdiscord::MeasureError;
use rayon::prelude::*;

use crate::CliError;

#[derive(Debug, Clone)]
pub struct PptArgs {
    pub dim_a: usize,
    pub dim_b: usize,
    pub count: u64,
    pub seed: u64,
    pub pure: bool,
    pub ginibre_k: Option<usize>,
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PptReport {
    pub dim_a: usize,
    pub dim_b: usize,
    pub total: u64,
    /// `histogram[c]` = number of states with `c` negative partial-transpose eigenvalues.
    pub histogram: Vec<u64>,
    /// `dim_b − 1` when `dim_a = 2`; no bound is asserted otherwise.
    pub bound: Option<usize>,
}

impl PptReport {
    pub fn max_count(&self) -> usize {
        self.histogram.iter().rposition(|&c| c > 0).unwrap_or(0)
    }

    /// True when some `2⊗n` state had more than `n − 1` negative eigenvalues.
    pub fn bound_violated(&self) -> bool {
        self.bound
            .is_some_and(|b| self.max_count() > b && self.total > 0)
    }
}

impl fmt::Display for PptReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "negative partial-transpose eigenvalues, {} states of {}x{}",
            self.total, self.dim_a, self.dim_b
        )?;
        for (c, n) in self.histogram.iter().enumerate().take(self.max_count() + 1) {
            writeln!(f, "  {c:>3}: {n}")?;
        }
        match self.bound {
            Some(b) if self.bound_violated() => {
                write!(f, "  BOUND VIOLATED: max count {} > {b}", self.max_count())
            }
            Some(b) => write!(f, "  max count {} <= {b}", self.max_count()),
            None => write!(
                f,
                "  max count {} (no bound asserted for dim_a != 2)",
                self.max_count()
            ),
        }
    }
}

/// Histogram of negative PT eigenvalue counts over `count` random states.
pub fn ppt_histogram(args: &PptArgs) -> Result<PptReport, MeasureError> {
    let cfg = {
        let c = SamplerConfig::new(args.dim_a, args.dim_b, args.seed);
        match args.ginibre_k {
            Some(k) => c.with_ginibre_k(k),
            None => c,
        }
    };
    let counts: Vec<usize> = (0..args.count)
        .into_par_iter()
        .map(|i| {
            let s = if args.pure {
                random_pure_state(args.dim_a, args.dim_b, substream_seed(args.seed, i))
            } else {
                sample_state(&cfg, i)
            };
            negative_count(&s)
        })
        .collect::<Result<_, _>>()?;
    let mut histogram = vec![0u64; args.dim_a * args.dim_b + 1];
    for c in counts {
        histogram[c] += 1;
    }
    Ok(PptReport {
        dim_a: args.dim_a,
        dim_b: args.dim_b,
        total: args.count,
        histogram,
        bound: (args.dim_a == 2).then(|| args.dim_b - 1),
    })
}

pub fn cmd_ppt_count(args: &PptArgs) -> Result<PptReport, CliError> {
    if args.dim_a < 2 || args.dim_b < 1 {
        return Err(CliError::Validation(format!(
            "ppt-count needs dim_a >= 2 and dim_b >= 1, got {}x{}",
            args.dim_a, args.dim_b
        )));
    }
    if args.ginibre_k == Some(0) {
        return Err(CliError::Validation(
            "--ginibre-k must be at least 1".into(),
        ));
    }
    let report = ppt_histogram(args)?;
    if let Some(path) = &args.out {
        let mut text = String::from("neg_count,frequency\n");
        for (c, n) in report.histogram.iter().enumerate() {
            text.push_str(&format!("{c},{n}\n"));
        }
        fs::write(path, text).map_err(|e| CliError::io(path, e))?;
    }
    Ok(report)
}
