use std::fmt;
use std::path::Path;

use qdiscord::measures::{discord_2n, discord_lower_bound, negativity, GapReport};
use qdiscord::states::{bloch_decompose, read_state_file};

use crate::format::fmt17;
use crate::CliError;

/// Measures of a single state read from a JSON file.
#[derive(Debug, Clone)]
pub struct ExampleReport {
    pub dim_a: usize,
    pub dim_b: usize,
    /// Exact for `dim_a = 2`, the lower bound otherwise; absent when `dim_a > dim_b`.
    pub discord: Option<f64>,
    pub discord_exact: bool,
    pub negativity: f64,
    pub neg_count: usize,
    pub gap: Option<GapReport>,
    pub x_norm: f64,
    pub y_norm: f64,
    pub t_norm: f64,
    pub g_eigenvalues: Vec<f64>,
}

impl fmt::Display for ExampleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "state {}x{}", self.dim_a, self.dim_b)?;
        match self.discord {
            Some(d) if self.discord_exact => writeln!(f, "  discord:      {}", fmt17(d))?,
            Some(d) => writeln!(f, "  discord >=    {}", fmt17(d))?,
            None => writeln!(f, "  discord:      n/a (dim_a > dim_b)")?,
        }
        writeln!(f, "  negativity:   {}", fmt17(self.negativity))?;
        writeln!(f, "  neg_count:    {}", self.neg_count)?;
        if let Some(g) = &self.gap {
            writeln!(
                f,
                "  gap D - N^2:  {}{}",
                fmt17(g.gap),
                if g.violates {
                    "  (violates D >= N^2)"
                } else {
                    ""
                }
            )?;
        }
        writeln!(
            f,
            "  |x| = {}  |y| = {}  |T| = {}",
            fmt17(self.x_norm),
            fmt17(self.y_norm),
            fmt17(self.t_norm)
        )?;
        let g: Vec<String> = self.g_eigenvalues.iter().map(|v| fmt17(*v)).collect();
        write!(f, "  eig(G):       [{}]", g.join(", "))
    }
}

pub fn cmd_example(path: &Path) -> Result<ExampleReport, CliError> {
    let s = read_state_file(path)?;
    let (m, n) = (s.dim_a(), s.dim_b());
    if m < 2 || n < 2 {
        return Err(CliError::Validation(format!(
            "example needs both dimensions >= 2, got {m}x{n}"
        )));
    }
    let neg = negativity(&s)?;
    let bloch = bloch_decompose(&s);

    let (discord, discord_exact, g_eigenvalues) = if m == 2 {
        let d = discord_2n(&s)?;
        (Some(d.value), true, d.g_eigenvalues)
    } else {
        let d = if m <= n {
            Some(discord_lower_bound(&s)?)
        } else {
            None
        };
        (d, false, g_spectrum(&bloch.g_matrix(), bloch.t_rows())?)
    };
    let gap = discord
        .filter(|_| discord_exact)
        .map(|d| GapReport::new(d, neg.value));

    Ok(ExampleReport {
        dim_a: m,
        dim_b: n,
        discord,
        discord_exact,
        negativity: neg.value,
        neg_count: neg.negative_count,
        gap,
        x_norm: bloch.x_norm_sq().sqrt(),
        y_norm: bloch.y_norm_sq().sqrt(),
        t_norm: bloch.t_norm_sq().sqrt(),
        g_eigenvalues,
    })
}

fn g_spectrum(g: &[f64], k: usize) -> Result<Vec<f64>, CliError> {
    use qdiscord::numerics::{hermitian_eig, ComplexMatrix};
    let gm = ComplexMatrix::from_fn(k, k, |i, j| g[i * k + j].into());
    Ok(hermitian_eig(&gm)
        .map_err(qdiscord::MeasureError::from)?
        .eigenvalues)
}
