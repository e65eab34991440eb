//! Dense complex linear algebra for the small matrices used throughout the crate.
//!
//! Everything here is sized for operators on a few dozen dimensions: a row-major
//! [`ComplexMatrix`], the Kronecker product, norms, and a cyclic Jacobi solver for
//! Hermitian eigenproblems.

mod eig;
mod matrix;

pub use eig::{
    hermitian_eig, trace_norm_hermitian, zero_threshold, HermitianSpectrum, HERMITIAN_TOLERANCE,
    JACOBI_MAX_SWEEPS, JACOBI_TOLERANCE,
};
pub use matrix::{frobenius_sq, kron, ComplexMatrix};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum NumericsError {
    #[error("matrix of {rows}x{cols} cannot hold {len} entries")]
    Shape {
        rows: usize,
        cols: usize,
        len: usize,
    },
    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not Hermitian (anti-Hermitian part {defect:e})")]
    NotHermitian { defect: f64 },
    #[error(
        "Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {residual:e})"
    )]
    NoConvergence { sweeps: usize, residual: f64 },
}
