//! Symmetric orthogonal g.d.s. matrices of size 3.
//!
//! The target pattern is
//!
//! ```text
//!     | x  y  z |
//!     | y  z  x |
//!     | z  x  y |
//! ```
//!
//! with `x + y + z = 1` and `x^2 + y^2 + z^2 = 1`, which pins `x` to a root
//! of `x^2 - x(1-z) - z(1-z) = 0`. The discriminant `(1-z)(1+3z)` is
//! nonnegative exactly for `z` in `[-1/3, 1]`.

use crate::error::{GdsError, Result};
use crate::matrix::Matrix;

fn check_range(z: f64) -> Result<()> {
    if !(z >= -1.0 / 3.0 && z <= 1.0) {
        return Err(GdsError::ZOutOfRange { z });
    }
    Ok(())
}

fn circulant(x: f64, y: f64, z: f64) -> Matrix {
    Matrix::from_vec(3, 3, vec![x, y, z, y, z, x, z, x, y]).expect("finite entries by construction")
}

/// Builds the symmetric pattern using the cancellation-free root
/// `x = (1 - z + sqrt(delta)) / 2`.
///
/// Accurate over the whole admissible interval, including `z` near zero.
pub fn build_gds3_stable(z: f64) -> Result<Matrix> {
    check_range(z)?;
    let t = 1.0 - z;
    if t == 0.0 {
        return Ok(circulant(0.0, 0.0, 1.0));
    }
    let delta = t * (1.0 + 3.0 * z);
    let x = (t + delta.sqrt()) / 2.0;
    let y = -z * t / x;
    Ok(circulant(x, y, z))
}

/// Builds the same pattern from the other quadratic root
/// `x = (1 - z - sqrt(delta)) / 2`.
///
/// For `z` near zero the numerator subtracts two nearly equal quantities,
/// so the result loses accuracy catastrophically; this variant exists to
/// demonstrate that loss and must not be used when accuracy matters.
pub fn build_gds3_unstable(z: f64) -> Result<Matrix> {
    check_range(z)?;
    let t = 1.0 - z;
    if t == 0.0 {
        return Ok(circulant(0.0, 0.0, 1.0));
    }
    if z == 0.0 {
        return Ok(circulant(0.0, 1.0, 0.0));
    }
    let delta = t * (1.0 + 3.0 * z);
    let x = (t - delta.sqrt()) / 2.0;
    let y = -z * t / x;
    Ok(circulant(x, y, z))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stable_at_one_returns_exact_permutation() {
        let a = build_gds3_stable(1.0).unwrap();
        let expected =
            Matrix::from_rows(&[&[0.0, 0.0, 1.0], &[0.0, 1.0, 0.0], &[1.0, 0.0, 0.0]]).unwrap();
        assert_eq!(a, expected);
    }

    #[test]
    fn stable_at_zero_returns_exact_permutation() {
        let a = build_gds3_stable(0.0).unwrap();
        let expected =
            Matrix::from_rows(&[&[1.0, 0.0, 0.0], &[0.0, 0.0, 1.0], &[0.0, 1.0, 0.0]]).unwrap();
        assert_eq!(a, expected);
    }

    #[test]
    fn boundary_gives_two_thirds_entries() {
        // delta = 0 at z = -1/3, so x = y = (1 - z)/2 = 2/3 for both roots.
        let z = -1.0 / 3.0;
        for a in [build_gds3_stable(z).unwrap(), build_gds3_unstable(z).unwrap()] {
            let x = a.get(0, 0);
            let y = a.get(0, 1);
            assert!((x - 2.0 / 3.0).abs() <= 1e-15, "x = {x}");
            assert!((y - 2.0 / 3.0).abs() <= 1e-15, "y = {y}");
            let sum = x + y + z;
            assert!((sum - 1.0).abs() <= 4.0 * f64::EPSILON);
            let sq = x * x + y * y + z * z;
            assert!((sq - 1.0).abs() <= 1e-15);
        }
    }

    #[test]
    fn unstable_at_zero_and_one_return_exact_permutations() {
        let a0 = build_gds3_unstable(0.0).unwrap();
        let expected0 =
            Matrix::from_rows(&[&[0.0, 1.0, 0.0], &[1.0, 0.0, 0.0], &[0.0, 0.0, 1.0]]).unwrap();
        assert_eq!(a0, expected0);
        let a1 = build_gds3_unstable(1.0).unwrap();
        let expected1 =
            Matrix::from_rows(&[&[0.0, 0.0, 1.0], &[0.0, 1.0, 0.0], &[1.0, 0.0, 0.0]]).unwrap();
        assert_eq!(a1, expected1);
    }

    #[test]
    fn out_of_range_rejected_by_both_variants() {
        for z in [2.0, -0.34, -1.0, f64::NAN] {
            assert!(matches!(
                build_gds3_stable(z),
                Err(GdsError::ZOutOfRange { .. })
            ));
            assert!(matches!(
                build_gds3_unstable(z),
                Err(GdsError::ZOutOfRange { .. })
            ));
        }
    }

    #[test]
    fn pattern_is_exactly_symmetric() {
        for &z in &[-0.3, -0.1, 0.25, 0.7, 0.99] {
            let a = build_gds3_stable(z).unwrap();
            assert_eq!(a, a.transpose());
        }
    }
}
