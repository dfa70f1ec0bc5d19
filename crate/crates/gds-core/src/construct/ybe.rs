//! Yang-Baxter solutions of the scaled-shuffle family and their orthogonal
//! g.d.s. conjugates.
//!
//! The seed is `X = D P`: a diagonal scaling times the perfect-shuffle
//! permutation that maps the vectorization of an n x n matrix to the
//! vectorization of its transpose. Every member satisfies
//! `(X (x) I)(I (x) X)(X (x) I) = (I (x) X)(X (x) I)(I (x) X)` and fixes the
//! first axis up to the scaling `d_1`.

use crate::construct::{ensure_orthogonal, ensure_un_basis, INPUT_ORTH_TOL};
use crate::error::{GdsError, Result};
use crate::matrix::Matrix;
use crate::norm::vec_norm;
use crate::verify::ybe_residual;

const UNIMODULAR_TOL: f64 = 1e-12;

/// Seed parameters: base dimension `n` and scaling vector `d` of length
/// `n^2`.
#[derive(Debug, Clone, PartialEq)]
pub struct YbeSeedSpec {
    n: usize,
    d: Vec<f64>,
}

impl YbeSeedSpec {
    pub fn new(n: usize, d: Vec<f64>) -> Result<YbeSeedSpec> {
        if n < 2 {
            return Err(GdsError::EmptyMatrix { rows: n, cols: n });
        }
        if d.len() != n * n {
            return Err(GdsError::WrongSeedLength {
                expected: n * n,
                found: d.len(),
            });
        }
        if let Some(index) = d.iter().position(|v| !v.is_finite()) {
            return Err(GdsError::NonFinite {
                row: index,
                col: 0,
            });
        }
        Ok(YbeSeedSpec { n, d })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> &[f64] {
        &self.d
    }

    /// Requires `d_1 = 1` and `|d_i| = 1` for all `i`, the condition under
    /// which the seed is orthogonal and fixes `e_1` exactly.
    pub fn require_unimodular(&self) -> Result<()> {
        if (self.d[0] - 1.0).abs() > UNIMODULAR_TOL {
            return Err(GdsError::NotUnimodular {
                index: 0,
                value: self.d[0],
            });
        }
        for (index, &value) in self.d.iter().enumerate() {
            if (value.abs() - 1.0).abs() > UNIMODULAR_TOL {
                return Err(GdsError::NotUnimodular { index, value });
            }
        }
        Ok(())
    }

    /// The shuffle as an index vector: entry `j` is the row (0-based) of the
    /// single nonzero in column `j` of the permutation factor.
    pub(crate) fn shuffle_indices(&self) -> Vec<usize> {
        let n = self.n;
        // Column-wise walk of S[i][j] = i*n + j (0-based rows/cols).
        let mut p = Vec::with_capacity(n * n);
        for j in 0..n {
            for i in 0..n {
                p.push(i * n + j);
            }
        }
        p
    }
}

/// Materializes the seed `X = D P` as a dense matrix.
///
/// Column `j` holds the single entry `d[p_j]` in row `p_j`, so the output
/// has exactly one nonzero per row and per column and satisfies
/// `X e_1 = d_1 e_1` and `X^T e_1 = d_1 e_1`.
pub fn build_ybe_seed(spec: &YbeSeedSpec) -> Result<Matrix> {
    let m = spec.n * spec.n;
    let mut x = Matrix::zeros(m, m);
    for (j, &pj) in spec.shuffle_indices().iter().enumerate() {
        x.set(pj, j, spec.d[pj]);
    }
    Ok(x)
}

/// Conjugates a Yang-Baxter solution `b` by `P (x) P`, yielding an
/// orthogonal g.d.s. matrix on `R^{n^2}` that still satisfies the equation.
///
/// Preconditions are validated: `b` must be orthogonal, satisfy the
/// Yang-Baxter equation, and fix `e_1` from both sides; `p` must be
/// orthogonal with uniform first column; `b` must be `n^2 x n^2` for
/// `p` of size `n`.
pub fn build_ybe_gds(b: &Matrix, p: &Matrix) -> Result<Matrix> {
    ensure_un_basis(p, "P")?;
    if !b.is_square() {
        return Err(GdsError::NotSquare {
            what: "B",
            rows: b.rows(),
            cols: b.cols(),
        });
    }
    let n = p.rows();
    let m = b.rows();
    if m != n * n {
        return Err(GdsError::WrongSeedLength {
            expected: n * n,
            found: m,
        });
    }
    ensure_orthogonal(b, "B")?;
    let mut e1 = vec![0.0; m];
    e1[0] = 1.0;
    let fix = |v: Vec<f64>| -> f64 {
        let diff: Vec<f64> = v.iter().zip(&e1).map(|(a, b)| a - b).collect();
        vec_norm(&diff)
    };
    let dev_right = fix(b.matvec(&e1)?);
    if dev_right > INPUT_ORTH_TOL {
        return Err(GdsError::DoesNotFixFirstAxis {
            what: "B",
            deviation: dev_right,
        });
    }
    let dev_left = fix(b.matvec_transposed(&e1)?);
    if dev_left > INPUT_ORTH_TOL {
        return Err(GdsError::DoesNotFixFirstAxis {
            what: "B^T",
            deviation: dev_left,
        });
    }
    let residual = ybe_residual(b)?;
    if residual > INPUT_ORTH_TOL {
        return Err(GdsError::YbeViolation {
            residual,
            tol: INPUT_ORTH_TOL,
        });
    }

    let q = p.kron(p)?;
    q.matmul(b)?.matmul(&q.transpose())
}
