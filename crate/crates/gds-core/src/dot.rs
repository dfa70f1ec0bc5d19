//! Accumulation kernels for the hot paths.
//!
//! Long sequential floating-point sums drift by O(n eps); the kernels here
//! keep that growth flat. `dot` spreads the chain over eight lanes per
//! 256-element chunk and combines chunk partials with Neumaier
//! compensation; `compensated_dot` is fully compensated and is used where a
//! coherent relative error would hurt most, like the reflector scale
//! `2 / v^T v` in the QR factorization.

const CHUNK: usize = 256;

fn dot8(a: &[f64], b: &[f64]) -> f64 {
    let mut acc = [0.0f64; 8];
    let mut ia = a.chunks_exact(8);
    let mut ib = b.chunks_exact(8);
    for (ca, cb) in (&mut ia).zip(&mut ib) {
        for k in 0..8 {
            acc[k] += ca[k] * cb[k];
        }
    }
    let mut tail = 0.0;
    for (x, y) in ia.remainder().iter().zip(ib.remainder()) {
        tail += x * y;
    }
    ((acc[0] + acc[1]) + (acc[2] + acc[3])) + ((acc[4] + acc[5]) + (acc[6] + acc[7])) + tail
}

#[inline]
fn neumaier_add(sum: &mut f64, comp: &mut f64, value: f64) {
    let t = *sum + value;
    if sum.abs() >= value.abs() {
        *comp += (*sum - t) + value;
    } else {
        *comp += (value - t) + *sum;
    }
    *sum = t;
}

/// Dot product with eight-lane accumulation and compensated chunk combine.
pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    if a.len() <= CHUNK {
        return dot8(a, b);
    }
    let mut sum = 0.0;
    let mut comp = 0.0;
    for (ca, cb) in a.chunks(CHUNK).zip(b.chunks(CHUNK)) {
        neumaier_add(&mut sum, &mut comp, dot8(ca, cb));
    }
    sum + comp
}

/// Fully compensated dot product; per-term product rounding remains but the
/// summation itself is exact to a final rounding.
pub(crate) fn compensated_dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    let mut sum = 0.0;
    let mut comp = 0.0;
    for (&x, &y) in a.iter().zip(b) {
        neumaier_add(&mut sum, &mut comp, x * y);
    }
    sum + comp
}
