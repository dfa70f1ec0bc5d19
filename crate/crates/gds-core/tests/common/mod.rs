//! Independent oracles for the integration suites. Nothing here reuses the
//! library's algorithms: the product oracle accumulates in the opposite
//! order, the spectral oracle is a Jacobi sweep instead of power iteration,
//! and the root oracle bisects instead of using the closed form.

use gds_core::Matrix;

/// Triple-loop product with descending-k accumulation, so its rounding
/// pattern differs from the library's row-major kernel.
pub fn naive_matmul(a: &Matrix, b: &Matrix) -> Matrix {
    assert_eq!(a.cols(), b.rows());
    let mut out = Matrix::zeros(a.rows(), b.cols());
    for i in 0..a.rows() {
        for j in 0..b.cols() {
            let mut acc = 0.0;
            for k in (0..a.cols()).rev() {
                acc += a.get(i, k) * b.get(k, j);
            }
            out.set(i, j, acc);
        }
    }
    out
}

/// Largest singular value via a cyclic Jacobi eigenvalue sweep on `A^T A`,
/// run to off-diagonal exhaustion.
pub fn jacobi_spectral_norm(a: &Matrix) -> f64 {
    let m = a.transpose().matmul(a).unwrap();
    let n = m.rows();
    let mut w: Vec<f64> = m.as_slice().to_vec();
    let frob: f64 = w.iter().map(|v| v * v).sum::<f64>().sqrt();
    if frob == 0.0 {
        return 0.0;
    }
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| w[i * n + j] * w[i * n + j])
            .sum::<f64>()
            .sqrt();
        if off <= 1e-15 * frob {
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = w[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let tau = (w[q * n + q] - w[p * n + p]) / (2.0 * apq);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = w[k * n + p];
                    let akq = w[k * n + q];
                    w[k * n + p] = c * akp - s * akq;
                    w[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = w[p * n + k];
                    let aqk = w[q * n + k];
                    w[p * n + k] = c * apk - s * aqk;
                    w[q * n + k] = s * apk + c * aqk;
                }
            }
        }
    }
    let lambda_max = (0..n).map(|i| w[i * n + i]).fold(0.0f64, f64::max);
    lambda_max.max(0.0).sqrt()
}

/// Largest root of `t^2 - t(1-z) - z(1-z)` on `[0, 2]` by bisection from
/// the parabola vertex; no quadratic formula involved.
pub fn stable_root_by_bisection(z: f64) -> f64 {
    let f = |t: f64| t * t - t * (1.0 - z) - z * (1.0 - z);
    let mut lo = (1.0 - z) / 2.0; // vertex: f(lo) = -delta/4 <= 0
    let mut hi = 2.0;
    if f(lo) >= 0.0 {
        return lo; // double root at the vertex
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid) >= 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Deterministic uniform sequence in [0, 1); self-contained so oracle-side
/// sampling never depends on the library's generator.
pub fn uniform_seq(seed: u64, count: usize) -> Vec<f64> {
    fn splitmix64(mut x: u64) -> u64 {
        x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
        x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        x ^ (x >> 31)
    }
    let mut state = seed;
    (0..count)
        .map(|_| {
            state = splitmix64(state);
            (state >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
        })
        .collect()
}

/// `||I - Q^T Q||_2` via the library norm.
pub fn orth_error(q: &Matrix) -> f64 {
    let qtq = q.transpose().matmul(q).unwrap();
    Matrix::identity(q.rows()).sub(&qtq).unwrap().spectral_norm()
}
