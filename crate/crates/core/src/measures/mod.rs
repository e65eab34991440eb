//! Correlation measures of bipartite states.
//!
//! - [`negativity`] / [`negative_count`]: partial-transpose spectrum based entanglement.
//! - [`discord_2n`]: exact geometric discord of `2⊗n` states from the Bloch form;
//!   [`discord_lower_bound`] for general `m⊗n`.
//! - [`discord_via_measurement`] / [`discord_bruteforce`]: the same quantity as an
//!   explicit minimum over projective measurements, used as an oracle.
//! - [`gap`]: `D − N²`, negative for states where discord falls below squared
//!   negativity.

mod discord;
mod measurement;
mod negativity;
mod werner;

pub use discord::{discord_2n, discord_lower_bound, optimality_residuals, DiscordResult};
pub use measurement::{
    discord_bruteforce, discord_via_measurement, fibonacci_sphere, minimize_over_directions,
    DEFAULT_RESOLUTION, DIRECTION_TOLERANCE,
};
pub use negativity::{negative_count, negativity, NegativityResult};
pub use werner::{
    bisect_root, werner_discord_closed, werner_gap_2x8_closed, werner_negativity_2x8_closed,
};

use crate::numerics::NumericsError;
use crate::states::{BipartiteState, StateError};

/// Gaps below `−VIOLATION_CUSHION` count as violations.
pub const VIOLATION_CUSHION: f64 = 1e-10;

/// Negativity at or below which `2⊗3` states cannot violate `D ≥ N²`.
pub const SAFE_NEGATIVITY: f64 = 2.0 / 5.0;

#[derive(Debug, thiserror::Error)]
pub enum MeasureError {
    #[error(transparent)]
    Numerics(#[from] NumericsError),
    #[error(transparent)]
    State(#[from] StateError),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("measurement direction has norm {norm}, expected 1")]
    NotUnit { norm: f64 },
    #[error("{name} = {value} is outside {range}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },
}

/// Discord, negativity and the gap between them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GapReport {
    pub discord: f64,
    pub negativity: f64,
    /// `discord − negativity²`.
    pub gap: f64,
    /// `gap < −1e-10`.
    pub violates: bool,
}

impl GapReport {
    pub fn new(discord: f64, negativity: f64) -> Self {
        let gap = discord - negativity * negativity;
        Self {
            discord,
            negativity,
            gap,
            violates: gap < -VIOLATION_CUSHION,
        }
    }
}

/// `D − N²` for a `2⊗n` state.
pub fn gap(s: &BipartiteState) -> Result<GapReport, MeasureError> {
    let d = discord_2n(s)?;
    let n = negativity(s)?;
    Ok(GapReport::new(d.value, n.value))
}

/// True when `N ≤ 2/5`, the region that the eigenvalue estimate
/// `D − N² ≥ (N/16)(2 − 5N)` claims is free of violations for `2⊗3` states.
///
/// The estimate does not hold in general: rank-2 `2⊗3` states violate `D ≥ N²` with
/// negativity well below 2/5. Hilbert-Schmidt samples happen to stay clear of it.
pub fn safe_region_predicate(n_value: f64) -> bool {
    debug_assert!(n_value >= 0.0);
    n_value <= SAFE_NEGATIVITY
}
