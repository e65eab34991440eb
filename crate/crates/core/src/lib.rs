//! Geometric discord and negativity of finite-dimensional bipartite states.
//!
//! The crate is organized bottom-up:
//!
//! - [`numerics`]: dense complex matrices and a Jacobi Hermitian eigensolver.
//! - [`states`]: validated density matrices, partial transposition, the
//!   generalized Gell-Mann basis and Bloch decomposition, Werner/isotropic families.
//! - [`measures`]: negativity, negative partial-transpose eigenvalue counts, the
//!   closed-form discord of `2⊗n` states and its measurement-based oracle.
//! - [`sampling`]: reproducible Ginibre-induced random density matrices.
//!
//! ```
//! use qdiscord::{measures, states};
//!
//! let bell = states::bell_state();
//! let report = measures::gap(&bell).unwrap();
//! assert!((report.discord - 1.0).abs() < 1e-12);
//! assert!((report.negativity - 1.0).abs() < 1e-12);
//! assert!(!report.violates);
//! ```

pub mod measures;
pub mod numerics;
pub mod sampling;
pub mod states;

pub use measures::{DiscordResult, GapReport, MeasureError, NegativityResult};
pub use numerics::{ComplexMatrix, HermitianSpectrum, NumericsError};
pub use sampling::SamplerConfig;
pub use states::{BipartiteState, BlochForm, GeneratorBasis, StateError, WernerSpec};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/linear-algebra.md")]
    mod linear_algebra {}
    #[doc = include_str!("../../../book/src/states.md")]
    mod states {}
    #[doc = include_str!("../../../book/src/bloch.md")]
    mod bloch {}
    #[doc = include_str!("../../../book/src/negativity.md")]
    mod negativity {}
    #[doc = include_str!("../../../book/src/discord.md")]
    mod discord {}
    #[doc = include_str!("../../../book/src/werner.md")]
    mod werner {}
    #[doc = include_str!("../../../book/src/sampling.md")]
    mod sampling {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
