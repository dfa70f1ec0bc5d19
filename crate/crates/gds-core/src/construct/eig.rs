//! Orthogonal g.d.s. matrices with a prescribed spectrum.
//!
//! The spectrum of an orthogonal matrix lives on the unit circle: some +1s,
//! some -1s, and conjugate pairs `c +- i s` with `c^2 + s^2 = 1`. Placing
//! those as a block diagonal of `I_r`, `-I_p` and 2x2 rotation blocks and
//! conjugating by a basis with uniform first column yields an orthogonal
//! g.d.s. matrix with exactly those eigenvalues.

use crate::construct::ensure_un_basis;
use crate::error::{GdsError, Result};
use crate::matrix::Matrix;

const UNIT_CIRCLE_TOL: f64 = 1e-12;

/// Prescribed spectrum: `r` eigenvalues +1, `p` eigenvalues -1, and one
/// representative `c + i s` per complex conjugate pair.
///
/// `r >= 1` is required so the uniform vector can be an eigenvector of the
/// conjugated matrix; `r = 0` is excluded. Every pair must sit on the unit
/// circle with a nonzero imaginary part.
#[derive(Debug, Clone, PartialEq)]
pub struct EigSpec {
    r: usize,
    p: usize,
    pairs: Vec<(f64, f64)>,
}

impl EigSpec {
    pub fn new(r: usize, p: usize, pairs: Vec<(f64, f64)>) -> Result<EigSpec> {
        if r == 0 {
            return Err(GdsError::NoUnitEigenvalue);
        }
        for (index, &(c, s)) in pairs.iter().enumerate() {
            let deviation = (c * c + s * s - 1.0).abs();
            if !deviation.is_finite() || deviation > UNIT_CIRCLE_TOL {
                return Err(GdsError::EigenvalueOffUnitCircle { index, deviation });
            }
            if s == 0.0 {
                return Err(GdsError::RealPairForbidden { index });
            }
        }
        Ok(EigSpec { r, p, pairs })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn pairs(&self) -> &[(f64, f64)] {
        &self.pairs
    }

    /// Total dimension `r + p + 2m`.
    pub fn dim(&self) -> usize {
        self.r + self.p + 2 * self.pairs.len()
    }

    /// The block diagonal of `I_r`, `-I_p` and the rotation blocks.
    pub(crate) fn block_diagonal(&self) -> Matrix {
        let n = self.dim();
        let mut b = Matrix::zeros(n, n);
        for i in 0..self.r {
            b.set(i, i, 1.0);
        }
        for i in self.r..self.r + self.p {
            b.set(i, i, -1.0);
        }
        for (k, &(c, s)) in self.pairs.iter().enumerate() {
            let i = self.r + self.p + 2 * k;
            b.set(i, i, c);
            b.set(i, i + 1, s);
            b.set(i + 1, i, -s);
            b.set(i + 1, i + 1, c);
        }
        b
    }
}

/// Conjugates the spectrum's block diagonal by `q`, producing an orthogonal
/// g.d.s. matrix with eigenvalues +1 (x r), -1 (x p) and `c_k +- i s_k`.
pub fn build_eig_gds(spec: &EigSpec, q: &Matrix) -> Result<Matrix> {
    ensure_un_basis(q, "Q")?;
    let n = spec.dim();
    if q.rows() != n {
        return Err(GdsError::ShapeMismatch {
            op: "build_eig_gds",
            left_rows: n,
            left_cols: n,
            right_rows: q.rows(),
            right_cols: q.cols(),
        });
    }
    let b = spec.block_diagonal();
    q.matmul(&b)?.matmul(&q.transpose())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::un_from_reflector;

    #[test]
    fn all_unit_eigenvalues_give_identity() {
        let spec = EigSpec::new(4, 0, vec![]).unwrap();
        let q = un_from_reflector(4);
        let a = build_eig_gds(&spec, &q).unwrap();
        assert!(a.max_abs_diff(&Matrix::identity(4)) <= 1e-14);
    }

    #[test]
    fn plus_minus_pair_in_dimension_two() {
        let s = 1.0 / 2.0f64.sqrt();
        let q = Matrix::from_rows(&[&[s, -s], &[s, s]]).unwrap();
        let spec = EigSpec::new(1, 1, vec![]).unwrap();
        let a = build_eig_gds(&spec, &q).unwrap();
        let expected = Matrix::from_rows(&[&[0.0, 1.0], &[1.0, 0.0]]).unwrap();
        assert!(a.max_abs_diff(&expected) <= 1e-15);
    }

    #[test]
    fn rejects_r_zero() {
        assert_eq!(
            EigSpec::new(0, 1, vec![]).unwrap_err(),
            GdsError::NoUnitEigenvalue
        );
    }

    #[test]
    fn rejects_off_circle_and_real_pairs() {
        assert!(matches!(
            EigSpec::new(1, 0, vec![(0.6, 0.9)]),
            Err(GdsError::EigenvalueOffUnitCircle { index: 0, .. })
        ));
        assert!(matches!(
            EigSpec::new(1, 0, vec![(1.0, 0.0)]),
            Err(GdsError::RealPairForbidden { index: 0 })
        ));
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let spec = EigSpec::new(2, 1, vec![(0.6, 0.8)]).unwrap(); // dim 5
        let q = un_from_reflector(4);
        assert!(matches!(
            build_eig_gds(&spec, &q),
            Err(GdsError::ShapeMismatch { .. })
        ));
    }

    #[test]
    fn block_diagonal_layout() {
        let spec = EigSpec::new(1, 1, vec![(0.6, 0.8)]).unwrap();
        let b = spec.block_diagonal();
        let expected = Matrix::from_rows(&[
            &[1.0, 0.0, 0.0, 0.0],
            &[0.0, -1.0, 0.0, 0.0],
            &[0.0, 0.0, 0.6, 0.8],
            &[0.0, 0.0, -0.8, 0.6],
        ])
        .unwrap();
        assert_eq!(b, expected);
    }

    #[test]
    fn duplicate_pairs_allowed() {
        let spec = EigSpec::new(1, 0, vec![(0.6, 0.8), (0.6, 0.8)]).unwrap();
        assert_eq!(spec.dim(), 5);
    }
}
