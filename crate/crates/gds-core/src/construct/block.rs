//! Conjugation between g.d.s. matrices and their trailing blocks.
//!
//! For `Q` orthogonal with first column `e / sqrt(n)` and any
//! `(n-1) x (n-1)` matrix `W`, the conjugation `A = Q B Q^T` of
//! `B = [[1, 0], [0, W]]` has all row and column sums equal to one, and `A`
//! is orthogonal exactly when `W` is. The converse recovers `W` from `A`.

use crate::construct::{ensure_orthogonal, ensure_un_basis, INPUT_ORTH_TOL};
use crate::error::{GdsError, Result};
use crate::matrix::Matrix;
use crate::norm::vec_norm;

/// Tolerance on the recovered leading block structure.
const BLOCK_TOL: f64 = 1e-10;

fn embed_block(w: &Matrix) -> Matrix {
    let n = w.rows() + 1;
    let mut b = Matrix::zeros(n, n);
    b.set(0, 0, 1.0);
    for i in 0..w.rows() {
        for j in 0..w.cols() {
            b.set(i + 1, j + 1, w.get(i, j));
        }
    }
    b
}

/// Builds the orthogonal g.d.s. matrix `Q [[1, 0], [0, W]] Q^T`.
///
/// Both inputs are validated: `q` must be orthogonal with uniform first
/// column and `w` must be orthogonal of size `n - 1`.
pub fn build_gds_from_block(q: &Matrix, w: &Matrix) -> Result<Matrix> {
    ensure_un_basis(q, "Q")?;
    if !w.is_square() {
        return Err(GdsError::NotSquare {
            what: "W",
            rows: w.rows(),
            cols: w.cols(),
        });
    }
    let n = q.rows();
    if w.rows() != n - 1 {
        return Err(GdsError::WrongBlockSize {
            expected: n - 1,
            found: w.rows(),
        });
    }
    ensure_orthogonal(w, "W")?;
    let b = embed_block(w);
    q.matmul(&b)?.matmul(&q.transpose())
}

/// Recovers the trailing block of `B = Q^T A Q` from a g.d.s. matrix.
///
/// Validates that `a` is g.d.s. and `q` is an orthogonal basis with uniform
/// first column, forms `B`, asserts its first row and column match
/// `[[1, 0], [0, X]]` to `1e-10`, and returns the trailing block `X`.
pub fn recover_block(a: &Matrix, q: &Matrix) -> Result<Matrix> {
    ensure_un_basis(q, "Q")?;
    if !a.is_square() {
        return Err(GdsError::NotSquare {
            what: "A",
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = q.rows();
    if a.rows() != n {
        return Err(GdsError::ShapeMismatch {
            op: "recover_block",
            left_rows: a.rows(),
            left_cols: a.cols(),
            right_rows: n,
            right_cols: n,
        });
    }
    if n < 2 {
        return Err(GdsError::WrongBlockSize {
            expected: 1,
            found: 0,
        });
    }
    let e = vec![1.0; n];
    let row_residual: Vec<f64> = a.matvec(&e)?.iter().map(|v| v - 1.0).collect();
    let col_residual: Vec<f64> = a.matvec_transposed(&e)?.iter().map(|v| v - 1.0).collect();
    let err_rows = vec_norm(&row_residual);
    let err_columns = vec_norm(&col_residual);
    if err_rows > INPUT_ORTH_TOL || err_columns > INPUT_ORTH_TOL {
        return Err(GdsError::NotGds {
            err_rows,
            err_columns,
        });
    }

    let b = q.transpose().matmul(a)?.matmul(q)?;
    let mut deviation = (b.get(0, 0) - 1.0).abs();
    for k in 1..n {
        deviation = deviation.max(b.get(0, k).abs());
        deviation = deviation.max(b.get(k, 0).abs());
    }
    if deviation > BLOCK_TOL {
        return Err(GdsError::NotGdsRelativeTo { deviation });
    }

    let mut x = Matrix::zeros(n - 1, n - 1);
    for i in 0..n - 1 {
        for j in 0..n - 1 {
            x.set(i, j, b.get(i + 1, j + 1));
        }
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{extend_to_un_basis, un_from_reflector};

    #[test]
    fn identity_block_conjugates_to_identity() {
        let q = un_from_reflector(5);
        let a = build_gds_from_block(&q, &Matrix::identity(4)).unwrap();
        assert!(a.max_abs_diff(&Matrix::identity(5)) <= 1e-14);
    }

    #[test]
    fn two_by_two_hand_value() {
        // q1 q1^T - q2 q2^T with q = [[s, -s], [s, s]] is the swap matrix.
        let s = 1.0 / 2.0f64.sqrt();
        let q = Matrix::from_rows(&[&[s, -s], &[s, s]]).unwrap();
        let w = Matrix::from_rows(&[&[-1.0]]).unwrap();
        let a = build_gds_from_block(&q, &w).unwrap();
        let expected = Matrix::from_rows(&[&[0.0, 1.0], &[1.0, 0.0]]).unwrap();
        assert!(a.max_abs_diff(&expected) <= 1e-15);
    }

    #[test]
    fn wrong_block_size_rejected() {
        let q = un_from_reflector(4);
        let err = build_gds_from_block(&q, &Matrix::identity(4)).unwrap_err();
        assert_eq!(
            err,
            GdsError::WrongBlockSize {
                expected: 3,
                found: 4
            }
        );
    }

    #[test]
    fn non_orthogonal_inputs_rejected() {
        let q = un_from_reflector(3);
        let skew = Matrix::from_rows(&[&[1.0, 1.0], &[0.0, 1.0]]).unwrap();
        assert!(matches!(
            build_gds_from_block(&q, &skew),
            Err(GdsError::NotOrthogonal { what: "W", .. })
        ));
        let not_un = Matrix::identity(3);
        assert!(matches!(
            build_gds_from_block(&not_un, &Matrix::identity(2)),
            Err(GdsError::FirstColumnNotUniform { .. })
        ));
    }

    #[test]
    fn recover_identity_block() {
        let q = un_from_reflector(4);
        let x = recover_block(&Matrix::identity(4), &q).unwrap();
        assert!(x.max_abs_diff(&Matrix::identity(3)) <= 1e-14);
    }

    #[test]
    fn round_trip_returns_original_block() {
        let q = extend_to_un_basis(
            &Matrix::from_rows(&[
                &[0.3, -1.2, 0.7],
                &[1.1, 0.4, -0.2],
                &[-0.6, 0.9, 1.5],
            ])
            .unwrap(),
        )
        .unwrap();
        let w = Matrix::from_rows(&[
            &[0.6, 0.8],
            &[-0.8, 0.6],
        ])
        .unwrap();
        let a = build_gds_from_block(&q, &w).unwrap();
        let back = recover_block(&a, &q).unwrap();
        assert!(back.max_abs_diff(&w) <= 1e-12);
    }

    #[test]
    fn paper_style_example_recovers_orthogonal_block() {
        let a = Matrix::from_rows(&[
            &[-1.0 / 3.0, 2.0 / 3.0, 2.0 / 3.0],
            &[2.0 / 3.0, 2.0 / 3.0, -1.0 / 3.0],
            &[2.0 / 3.0, -1.0 / 3.0, 2.0 / 3.0],
        ])
        .unwrap();
        let q = un_from_reflector(3);
        let x = recover_block(&a, &q).unwrap();
        assert_eq!(x.rows(), 2);
        let xtx = x.transpose().matmul(&x).unwrap();
        let dev = Matrix::identity(2).sub(&xtx).unwrap().spectral_norm();
        assert!(dev <= 1e-14, "recovered block must be orthogonal: {dev:e}");
    }

    #[test]
    fn non_gds_input_rejected() {
        let q = un_from_reflector(3);
        let mut bad = Matrix::identity(3);
        bad.set(0, 1, 1.0); // row 0 now sums to 2
        assert!(matches!(
            recover_block(&bad, &q),
            Err(GdsError::NotGds { .. })
        ));
    }
}
