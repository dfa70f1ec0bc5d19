use crate::error::{GdsError, Result};

/// Complex vector stored as separate real and imaginary parts.
///
/// Only used for eigenpair residuals, where eigenvectors of rotation blocks
/// come in conjugate pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexVec {
    re: Vec<f64>,
    im: Vec<f64>,
}

impl ComplexVec {
    pub fn new(re: Vec<f64>, im: Vec<f64>) -> Result<ComplexVec> {
        if re.is_empty() || re.len() != im.len() {
            return Err(GdsError::BadDataLength {
                rows: re.len(),
                cols: 1,
                len: im.len(),
            });
        }
        Ok(ComplexVec { re, im })
    }

    pub fn len(&self) -> usize {
        self.re.len()
    }

    pub fn is_empty(&self) -> bool {
        self.re.is_empty()
    }

    pub fn re(&self) -> &[f64] {
        &self.re
    }

    pub fn im(&self) -> &[f64] {
        &self.im
    }

    /// Euclidean norm over both parts.
    pub fn norm(&self) -> f64 {
        self.re
            .iter()
            .chain(&self.im)
            .map(|&v| v * v)
            .sum::<f64>()
            .sqrt()
    }
}
