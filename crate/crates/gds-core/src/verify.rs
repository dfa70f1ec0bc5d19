//! Residual statistics certifying the constructions.
//!
//! Three numbers summarize how close a matrix is to being orthogonal and
//! generalized doubly stochastic, and a small-residual value guarantees a
//! nearby matrix with the exact property:
//!
//! * `err_orth = ||I - A^T A||_2`
//! * `err_rows = ||A e - e||_2`
//! * `err_columns = ||A^T e - e||_2`

use crate::complex::ComplexVec;
use crate::construct::EigSpec;
use crate::error::{GdsError, Result};
use crate::matrix::Matrix;
use crate::norm::vec_norm;

/// The three error statistics for an n x n matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GdsReport {
    pub n: usize,
    pub err_orth: f64,
    pub err_rows: f64,
    pub err_columns: f64,
}

/// Computes the orthogonality and row/column sum errors of a square matrix.
pub fn gds_report(a: &Matrix) -> Result<GdsReport> {
    if !a.is_square() {
        return Err(GdsError::NotSquare {
            what: "A",
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let ata = a.transpose().matmul(a)?;
    let err_orth = Matrix::identity(n).sub(&ata)?.spectral_norm();
    let e = vec![1.0; n];
    let rows: Vec<f64> = a.matvec(&e)?.iter().map(|v| v - 1.0).collect();
    let cols: Vec<f64> = a.matvec_transposed(&e)?.iter().map(|v| v - 1.0).collect();
    Ok(GdsReport {
        n,
        err_orth,
        err_rows: vec_norm(&rows),
        err_columns: vec_norm(&cols),
    })
}

/// True when all row sums and column sums equal one to within `tol`.
///
/// Non-square matrices are never g.d.s.
pub fn is_gds(a: &Matrix, tol: f64) -> bool {
    assert!(tol > 0.0, "tolerance must be positive");
    if !a.is_square() {
        return false;
    }
    let e = vec![1.0; a.rows()];
    let rows: Vec<f64> = a.matvec(&e).expect("square").iter().map(|v| v - 1.0).collect();
    let cols: Vec<f64> = a
        .matvec_transposed(&e)
        .expect("square")
        .iter()
        .map(|v| v - 1.0)
        .collect();
    vec_norm(&rows) <= tol && vec_norm(&cols) <= tol
}

/// Frobenius norm of the Yang-Baxter defect
/// `(A (x) I)(I (x) A)(A (x) I) - (I (x) A)(A (x) I)(I (x) A)`.
///
/// Evaluated by direct Kronecker expansion with `n^3 x n^3` intermediates,
/// so this is only meant for desk-scale `n`.
pub fn ybe_residual(a: &Matrix) -> Result<f64> {
    if !a.is_square() {
        return Err(GdsError::NotSquare {
            what: "A",
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let m = a.rows();
    let n = (m as f64).sqrt().round() as usize;
    if n * n != m {
        return Err(GdsError::NotPerfectSquare { dim: m });
    }
    let eye = Matrix::identity(n);
    let left = a.kron(&eye)?;
    let right = eye.kron(a)?;
    let lhs = left.matmul(&right)?.matmul(&left)?;
    let rhs = right.matmul(&left)?.matmul(&right)?;
    Ok(lhs.sub(&rhs)?.frobenius_norm())
}

/// Maximum eigenpair residual of a matrix built by spectrum prescription.
///
/// Columns of `q` are the claimed invariant directions: the first `r` carry
/// eigenvalue +1, the next `p` carry -1, and each rotation block spans two
/// trailing columns whose combination `v = q_i - i q_j` is an eigenvector
/// for `c - i s`. No eigensolver is involved; the residuals certify the
/// spectrum directly.
pub fn verify_eigenpairs(a: &Matrix, spec: &EigSpec, q: &Matrix) -> Result<f64> {
    let n = spec.dim();
    if !a.is_square() || a.rows() != n || !q.is_square() || q.rows() != n {
        return Err(GdsError::ShapeMismatch {
            op: "verify_eigenpairs",
            left_rows: a.rows(),
            left_cols: a.cols(),
            right_rows: q.rows(),
            right_cols: q.cols(),
        });
    }
    let mut worst = 0.0f64;
    for i in 0..spec.r() + spec.p() {
        let sign = if i < spec.r() { 1.0 } else { -1.0 };
        let qi = q.column(i);
        let aqi = a.matvec(&qi)?;
        let residual: Vec<f64> = aqi
            .iter()
            .zip(&qi)
            .map(|(av, v)| av - sign * v)
            .collect();
        worst = worst.max(vec_norm(&residual));
    }
    for (k, &(c, s)) in spec.pairs().iter().enumerate() {
        let i = spec.r() + spec.p() + 2 * k;
        let v = ComplexVec::new(q.column(i), q.column(i + 1).iter().map(|x| -x).collect())?;
        // lambda v for lambda = c - i s has real part c*re + s*im and
        // imaginary part c*im - s*re.
        let a_re = a.matvec(v.re())?;
        let a_im = a.matvec(v.im())?;
        let res_re: Vec<f64> = (0..n)
            .map(|t| a_re[t] - (c * v.re()[t] + s * v.im()[t]))
            .collect();
        let res_im: Vec<f64> = (0..n)
            .map(|t| a_im[t] - (c * v.im()[t] - s * v.re()[t]))
            .collect();
        let residual = ComplexVec::new(res_re, res_im)?.norm();
        worst = worst.max(residual);
    }
    Ok(worst)
}
