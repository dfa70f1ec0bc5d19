//! Orthogonal bases whose first column is `e / sqrt(n)`.
//!
//! Conjugating a block matrix by such a basis is what turns "first row and
//! column of `B` pinned to `e_1`" into "all row and column sums equal one".

use crate::error::{GdsError, Result};
use crate::matrix::Matrix;
use crate::qr::{householder_reflector, qr_householder};

/// Orthogonal completion of `e / sqrt(n)` guided by columns `2..n` of `x`.
///
/// Overwrites the first column of `x` with `e / sqrt(n)`, factorizes with
/// Householder QR, and relies on the nonnegative-diagonal sign convention so
/// the first column of the result is `+e / sqrt(n)`. Rank-deficient
/// replacements of the remaining columns are tolerated; the output is a full
/// orthogonal basis regardless.
pub fn extend_to_un_basis(x: &Matrix) -> Result<Matrix> {
    if !x.is_square() {
        return Err(GdsError::NotSquare {
            what: "X",
            rows: x.rows(),
            cols: x.cols(),
        });
    }
    let n = x.rows();
    let inv_sqrt_n = 1.0 / (n as f64).sqrt();
    let mut guided = x.clone();
    for i in 0..n {
        guided.set(i, 0, inv_sqrt_n);
    }
    Ok(qr_householder(&guided)?.q)
}

/// The symmetric member of the family: `Q = -H` for the reflector built
/// from `z = e + sqrt(n) e_1`.
///
/// `Q` is orthogonal, symmetric (hence an involution) and sends `e_1` to
/// `e / sqrt(n)`.
pub fn un_from_reflector(n: usize) -> Matrix {
    assert!(n >= 1, "dimension must be positive");
    let mut z = vec![1.0; n];
    z[0] += (n as f64).sqrt();
    let h = householder_reflector(&z).expect("z is nonzero");
    h.scale(-1.0).expect("negation keeps entries finite")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::norm::vec_norm;

    fn orth_error(q: &Matrix) -> f64 {
        let qtq = q.transpose().matmul(q).unwrap();
        Matrix::identity(q.rows()).sub(&qtq).unwrap().spectral_norm()
    }

    fn first_column_deviation(q: &Matrix) -> f64 {
        let n = q.rows();
        let inv = 1.0 / (n as f64).sqrt();
        let diff: Vec<f64> = q.column(0).iter().map(|v| v - inv).collect();
        vec_norm(&diff)
    }

    #[test]
    fn two_by_two_identity_guide() {
        // Hand Gram-Schmidt of {e/sqrt(2), e_2}.
        let q = extend_to_un_basis(&Matrix::identity(2)).unwrap();
        let s = 1.0 / 2.0f64.sqrt();
        let expected = Matrix::from_rows(&[&[s, -s], &[s, s]]).unwrap();
        assert!(q.max_abs_diff(&expected) <= 1e-15, "q = {q:?}");
    }

    #[test]
    fn rank_deficient_guide_still_orthogonal() {
        // Column 2 equal to e duplicates the inserted first column.
        let mut x = Matrix::identity(4);
        for i in 0..4 {
            x.set(i, 1, 1.0);
        }
        let q = extend_to_un_basis(&x).unwrap();
        assert!(orth_error(&q) <= 1e-14);
        assert!(first_column_deviation(&q) <= 32.0 * 4.0 * f64::EPSILON);
    }

    #[test]
    fn non_square_rejected() {
        let err = extend_to_un_basis(&Matrix::zeros(3, 2)).unwrap_err();
        assert!(err.to_string().contains("X should be a square matrix"));
    }

    #[test]
    fn single_element_basis() {
        let q = extend_to_un_basis(&Matrix::identity(1)).unwrap();
        assert_eq!(q.get(0, 0), 1.0);
        assert_eq!(un_from_reflector(1), Matrix::identity(1));
    }

    #[test]
    fn reflector_basis_sends_first_axis_to_uniform() {
        let q = un_from_reflector(4);
        let qe1 = q.column(0);
        for v in qe1 {
            assert!((v - 0.5).abs() <= 1e-15);
        }
    }

    #[test]
    fn reflector_basis_is_symmetric_involution() {
        for n in [2, 5, 17, 100] {
            let q = un_from_reflector(n);
            assert_eq!(q, q.transpose(), "Q must be exactly symmetric");
            let qq = q.matmul(&q).unwrap();
            let dev = Matrix::identity(n).sub(&qq).unwrap().spectral_norm();
            assert!(dev <= 1e-13, "n = {n}: ||I - Q^2|| = {dev:e}");
        }
    }
}
