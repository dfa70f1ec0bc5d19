//! Matrix and vector norms.
//!
//! The spectral norm is evaluated by power iteration on `A^T A` with a
//! deterministic start vector, so repeated calls on the same matrix give
//! identical results without any external dependency.

use crate::dot::dot;
use crate::matrix::Matrix;

const RAYLEIGH_REL_TOL: f64 = 1e-14;
const MAX_POWER_ITERATIONS: usize = 100_000;

/// Euclidean norm of a vector.
pub fn vec_norm(v: &[f64]) -> f64 {
    dot(v, v).sqrt()
}

fn normalize(v: &mut [f64]) -> f64 {
    let n = vec_norm(v);
    if n > 0.0 {
        for x in v.iter_mut() {
            *x /= n;
        }
    }
    n
}

impl Matrix {
    /// Square root of the sum of squared entries.
    pub fn frobenius_norm(&self) -> f64 {
        vec_norm(self.as_slice())
    }

    /// Largest singular value, by power iteration on `A^T A`.
    ///
    /// The start vector is all-ones perturbed by `1/(i+1)` per coordinate to
    /// break symmetry; iteration stops when successive Rayleigh quotients
    /// agree to `1e-14` relative or after 100 000 iterations, whichever comes
    /// first, returning the best estimate seen.
    pub fn spectral_norm(&self) -> f64 {
        if self.frobenius_norm() == 0.0 {
            return 0.0;
        }
        let n = self.cols();
        let mut start: Vec<f64> = (0..n).map(|i| 1.0 + 1.0 / (i as f64 + 1.0)).collect();
        normalize(&mut start);
        // Fall back to canonical basis vectors if a start lands in the null
        // space; some e_k must escape it since A is nonzero.
        for attempt in 0..=n {
            if let Some(s) = self.power_iterate(&start) {
                return s;
            }
            if attempt < n {
                start = vec![0.0; n];
                start[attempt] = 1.0;
            }
        }
        0.0
    }

    fn power_iterate(&self, start: &[f64]) -> Option<f64> {
        let mut v = start.to_vec();
        let mut best = 0.0f64;
        let mut prev = f64::NAN;
        for _ in 0..MAX_POWER_ITERATIONS {
            // Rayleigh quotient of A^T A at unit v is |Av|^2.
            let w = self.matvec(&v).expect("start vector length matches cols");
            let lambda = dot(&w, &w);
            if lambda == 0.0 {
                return None;
            }
            best = best.max(lambda);
            if (lambda - prev).abs() < RAYLEIGH_REL_TOL * lambda {
                break;
            }
            prev = lambda;
            v = self
                .matvec_transposed(&w)
                .expect("intermediate length matches rows");
            if normalize(&mut v) == 0.0 {
                return None;
            }
        }
        Some(best.sqrt())
    }
}
