//! Constructors for generalized doubly stochastic matrices: the symmetric
//! 3x3 family, orthogonal bases with uniform first column, conjugation of
//! block matrices, prescribed spectra, and Yang-Baxter solutions.

mod basis;
mod block;
mod eig;
mod gds3;
mod ybe;

pub use basis::{extend_to_un_basis, un_from_reflector};
pub use block::{build_gds_from_block, recover_block};
pub use eig::{build_eig_gds, EigSpec};
pub use gds3::{build_gds3_stable, build_gds3_unstable};
pub use ybe::{build_ybe_gds, build_ybe_seed, YbeSeedSpec};

use crate::error::{GdsError, Result};
use crate::matrix::Matrix;
use crate::norm::vec_norm;

/// Validation tolerance for caller-supplied orthogonal inputs.
pub(crate) const INPUT_ORTH_TOL: f64 = 1e-8;

pub(crate) fn ensure_orthogonal(m: &Matrix, what: &'static str) -> Result<()> {
    let qtq = m.transpose().matmul(m)?;
    let deviation = Matrix::identity(m.rows()).sub(&qtq)?.spectral_norm();
    if deviation > INPUT_ORTH_TOL {
        return Err(GdsError::NotOrthogonal {
            what,
            deviation,
            tol: INPUT_ORTH_TOL,
        });
    }
    Ok(())
}

/// Checks membership in the family of orthogonal matrices whose first
/// column is `e / sqrt(n)`.
pub(crate) fn ensure_un_basis(q: &Matrix, what: &'static str) -> Result<()> {
    if !q.is_square() {
        return Err(GdsError::NotSquare {
            what,
            rows: q.rows(),
            cols: q.cols(),
        });
    }
    ensure_orthogonal(q, what)?;
    let n = q.rows();
    let inv_sqrt_n = 1.0 / (n as f64).sqrt();
    let diff: Vec<f64> = q.column(0).iter().map(|v| v - inv_sqrt_n).collect();
    let deviation = vec_norm(&diff);
    if deviation > INPUT_ORTH_TOL {
        return Err(GdsError::FirstColumnNotUniform { what, deviation });
    }
    Ok(())
}
