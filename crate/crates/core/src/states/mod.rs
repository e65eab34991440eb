//! Bipartite density matrices.
//!
//! A [`BipartiteState`] is a density matrix on `C^m ⊗ C^n` together with the
//! factorization `(m, n)`. Basis index `k = a·n + b` is A-major: the matrix is an
//! `m×m` array of `n×n` blocks, block `(a, a')` holding `⟨a|ρ|a'⟩` as an operator on B.

mod bloch;
mod families;
mod io;

pub use bloch::{bloch_decompose, bloch_reconstruct, generator_basis, BlochForm, GeneratorBasis};
pub use families::{
    bell_state, isotropic_state, maximally_entangled_vector, maximally_mixed, product_state,
    random_pure_state, swap_operator, werner_state, WernerSpec,
};
pub use io::{read_state_file, state_from_json, state_to_json, write_state_file, StateFile};

use crate::numerics::{hermitian_eig, ComplexMatrix, NumericsError};

/// Entrywise tolerance on `ρ − ρ†`.
pub const HERMITICITY_TOLERANCE: f64 = 1e-10;
/// Allowed deviation of `Tr ρ` from 1.
pub const TRACE_TOLERANCE: f64 = 1e-10;
/// Smallest eigenvalue accepted as positive semidefinite.
pub const POSITIVITY_TOLERANCE: f64 = 1e-10;

#[derive(Debug, thiserror::Error)]
pub enum StateError {
    #[error(transparent)]
    Numerics(#[from] NumericsError),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is not Hermitian: max |ρ - ρ†| entry is {defect:e}")]
    NotHermitian { defect: f64 },
    #[error("trace is {re}{im:+}i, expected 1")]
    Trace { re: f64, im: f64 },
    #[error("matrix is not positive semidefinite: minimum eigenvalue {min_eigenvalue:e}")]
    NotPositive { min_eigenvalue: f64 },
    #[error("{name} = {value} is outside {range}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },
    #[error("invalid state JSON at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Density matrix with a fixed `(dim_a, dim_b)` factorization.
#[derive(Debug, Clone, PartialEq)]
pub struct BipartiteState {
    dim_a: usize,
    dim_b: usize,
    rho: ComplexMatrix,
}

/// Validates `matrix` as a density matrix on `C^dim_a ⊗ C^dim_b`.
///
/// The stored matrix is the Hermitian part `(ρ + ρ†)/2`, which is bit-identical to
/// the input whenever the input is exactly Hermitian.
pub fn make_state(
    dim_a: usize,
    dim_b: usize,
    matrix: ComplexMatrix,
) -> Result<BipartiteState, StateError> {
    if dim_a == 0 || dim_b == 0 {
        return Err(StateError::Dimension(format!(
            "subsystem dimensions must be positive, got ({dim_a}, {dim_b})"
        )));
    }
    let dim = dim_a * dim_b;
    if matrix.rows() != dim || matrix.cols() != dim {
        return Err(StateError::Dimension(format!(
            "expected a {dim}x{dim} matrix for {dim_a}⊗{dim_b}, got {}x{}",
            matrix.rows(),
            matrix.cols()
        )));
    }
    let defect = matrix.max_abs_diff(&matrix.adjoint());
    if defect > HERMITICITY_TOLERANCE {
        return Err(StateError::NotHermitian { defect });
    }
    let tr = matrix.trace();
    if (tr.re - 1.0).abs() > TRACE_TOLERANCE || tr.im.abs() > TRACE_TOLERANCE {
        return Err(StateError::Trace {
            re: tr.re,
            im: tr.im,
        });
    }
    let rho = matrix.hermitian_part();
    let spectrum = hermitian_eig(&rho)?;
    let min_eigenvalue = *spectrum.eigenvalues.last().expect("non-empty spectrum");
    if min_eigenvalue < -POSITIVITY_TOLERANCE {
        return Err(StateError::NotPositive { min_eigenvalue });
    }
    Ok(BipartiteState { dim_a, dim_b, rho })
}

impl BipartiteState {
    /// Wraps a matrix known to be a density matrix (e.g. `GG†/Tr`), skipping the
    /// eigenvalue check.
    pub(crate) fn from_trusted(dim_a: usize, dim_b: usize, rho: ComplexMatrix) -> Self {
        debug_assert_eq!(rho.rows(), dim_a * dim_b);
        Self { dim_a, dim_b, rho }
    }

    #[inline]
    pub fn dim_a(&self) -> usize {
        self.dim_a
    }

    #[inline]
    pub fn dim_b(&self) -> usize {
        self.dim_b
    }

    /// Total dimension `dim_a · dim_b`.
    #[inline]
    pub fn dim(&self) -> usize {
        self.dim_a * self.dim_b
    }

    #[inline]
    pub fn rho(&self) -> &ComplexMatrix {
        &self.rho
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.rho
    }

    /// Partial transpose on subsystem A: block `(a, a')` moves to `(a', a)`.
    pub fn partial_transpose_a(&self) -> ComplexMatrix {
        partial_transpose_a(self)
    }

    /// Same matrix, different factorization tag.
    pub fn reinterpret(&self, dim_a: usize, dim_b: usize) -> Result<BipartiteState, StateError> {
        reinterpret(self, dim_a, dim_b)
    }

    /// `Tr_B ρ`.
    pub fn reduced_a(&self) -> ComplexMatrix {
        let (m, n) = (self.dim_a, self.dim_b);
        ComplexMatrix::from_fn(m, m, |a, ap| {
            (0..n).map(|b| self.rho[(a * n + b, ap * n + b)]).sum()
        })
    }

    /// `Tr_A ρ`.
    pub fn reduced_b(&self) -> ComplexMatrix {
        let (m, n) = (self.dim_a, self.dim_b);
        ComplexMatrix::from_fn(n, n, |b, bp| {
            (0..m).map(|a| self.rho[(a * n + b, a * n + bp)]).sum()
        })
    }

    /// `Tr ρ²`.
    pub fn purity(&self) -> f64 {
        self.rho.frobenius_sq()
    }
}

/// Partial transpose of `ρ` with respect to subsystem A.
pub fn partial_transpose_a(s: &BipartiteState) -> ComplexMatrix {
    let n = s.dim_b;
    ComplexMatrix::from_fn(s.dim(), s.dim(), |i, j| {
        let (a, b) = (i / n, i % n);
        let (ap, bp) = (j / n, j % n);
        s.rho[(ap * n + b, a * n + bp)]
    })
}

/// Views the same matrix under another factorization with equal total dimension.
pub fn reinterpret(
    s: &BipartiteState,
    dim_a: usize,
    dim_b: usize,
) -> Result<BipartiteState, StateError> {
    if dim_a == 0 || dim_b == 0 || dim_a * dim_b != s.dim() {
        return Err(StateError::Dimension(format!(
            "cannot view a {}⊗{} state as {dim_a}⊗{dim_b}",
            s.dim_a, s.dim_b
        )));
    }
    Ok(BipartiteState {
        dim_a,
        dim_b,
        rho: s.rho.clone(),
    })
}
