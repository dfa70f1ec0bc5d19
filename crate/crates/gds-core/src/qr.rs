//! Householder reflectors and Householder QR factorization.
//!
//! The factorization is sign-normalized so that `diag(r) >= 0`; this makes
//! the factors deterministic and gives `q`'s first column the direction of
//! `x`'s first column, independent of any vendor convention.

use crate::dot::{compensated_dot, dot};
use crate::error::{GdsError, Result};
use crate::matrix::Matrix;
use crate::norm::vec_norm;

/// Orthogonal factor `q` and upper triangular factor `r` with `q * r = x`.
///
/// Entries of `r` strictly below the diagonal are exact zeros and the
/// diagonal is nonnegative; zero diagonal entries appear for rank-deficient
/// input.
#[derive(Debug, Clone)]
pub struct QrResult {
    pub q: Matrix,
    pub r: Matrix,
}

/// Householder reflector `H = I - (2 / z^T z) z z^T` for a nonzero vector.
///
/// `H` is symmetric, orthogonal, and maps `z` to `-z`.
pub fn householder_reflector(z: &[f64]) -> Result<Matrix> {
    let n = z.len();
    let scale = z.iter().map(|&v| v * v).sum::<f64>();
    if n == 0 || scale == 0.0 {
        return Err(GdsError::ZeroReflector);
    }
    let beta = 2.0 / scale;
    let mut h = Matrix::identity(n);
    for i in 0..n {
        let row = h.row_mut(i);
        for (j, &zj) in z.iter().enumerate() {
            row[j] -= beta * z[i] * zj;
        }
    }
    // Enforce exact symmetry against rounding in the rank-one update.
    for i in 0..n {
        for j in 0..i {
            let v = h.get(i, j);
            h.set(j, i, v);
        }
    }
    Ok(h)
}

/// Householder QR of a square matrix, tolerating rank-deficient input.
pub fn qr_householder(x: &Matrix) -> Result<QrResult> {
    if !x.is_square() {
        return Err(GdsError::NotSquare {
            what: "X",
            rows: x.rows(),
            cols: x.cols(),
        });
    }
    let n = x.rows();
    let mut r = x.clone();
    let mut q = Matrix::identity(n);
    let mut v = vec![0.0; n];
    let mut w = vec![0.0; n];

    for k in 0..n.saturating_sub(1) {
        let len = n - k;
        for t in 0..len {
            v[t] = r.get(k + t, k);
        }
        let norm = vec_norm(&v[..len]);
        if norm == 0.0 {
            continue; // column already zeroed below the diagonal
        }
        // Reflection sign that avoids cancellation: alpha = -sign(x_k) |x|.
        let alpha = if v[0] >= 0.0 { -norm } else { norm };
        v[0] -= alpha;
        // The reflector is orthogonal exactly when beta matches v^T v, so
        // that sum is compensated; a coherent relative error here would
        // degrade every column the reflector touches.
        let beta = 2.0 / compensated_dot(&v[..len], &v[..len]);

        // R <- H R on the trailing columns: w = v^T R, then R -= beta v w^T,
        // both passes walking rows contiguously.
        let wlen = n - k - 1;
        if wlen > 0 {
            w[..wlen].fill(0.0);
            for t in 0..len {
                let vt = v[t];
                let row = &r.row(k + t)[k + 1..];
                for (acc, &rv) in w[..wlen].iter_mut().zip(row) {
                    *acc += vt * rv;
                }
            }
            for t in 0..len {
                let f = beta * v[t];
                let row = &mut r.row_mut(k + t)[k + 1..];
                for (rv, &wv) in row.iter_mut().zip(&w[..wlen]) {
                    *rv -= f * wv;
                }
            }
        }
        r.set(k, k, alpha);
        for i in (k + 1)..n {
            r.set(i, k, 0.0);
        }

        // Q <- Q H, touching columns k..n of each row.
        for i in 0..n {
            let ui = dot(&q.row(i)[k..], &v[..len]);
            let f = beta * ui;
            for (qv, &vt) in q.row_mut(i)[k..].iter_mut().zip(&v[..len]) {
                *qv -= f * vt;
            }
        }
    }

    // Write exact zeros below the diagonal (skipped steps may leave
    // subnormal dust there).
    for i in 1..n {
        for j in 0..i {
            r.set(i, j, 0.0);
        }
    }
    // Normalize so diag(r) >= 0 by flipping matched column/row signs.
    for j in 0..n {
        if r.get(j, j) < 0.0 {
            for t in r.row_mut(j)[j..].iter_mut() {
                *t = -*t;
            }
            for i in 0..n {
                let flipped = -q.get(i, j);
                q.set(i, j, flipped);
            }
        }
    }

    Ok(QrResult { q, r })
}
