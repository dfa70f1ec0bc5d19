use thiserror::Error;

/// Errors produced by matrix construction and verification.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GdsError {
    #[error("dimension mismatch in {op}: left is {left_rows}x{left_cols}, right is {right_rows}x{right_cols}")]
    ShapeMismatch {
        op: &'static str,
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },

    #[error("{what} should be a square matrix, got {rows}x{cols}")]
    NotSquare {
        what: &'static str,
        rows: usize,
        cols: usize,
    },

    #[error("matrix dimensions must be positive, got {rows}x{cols}")]
    EmptyMatrix { rows: usize, cols: usize },

    #[error("data length {len} does not match {rows}x{cols}")]
    BadDataLength {
        rows: usize,
        cols: usize,
        len: usize,
    },

    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("result dimensions {rows} x {cols} overflow the index type")]
    DimensionOverflow { rows: u128, cols: u128 },

    #[error("zero reflector vector")]
    ZeroReflector,

    #[error("z should be in the interval [-1/3,1], got {z}")]
    ZOutOfRange { z: f64 },

    #[error("{what} is not orthogonal: ||I - Q^T Q||_2 = {deviation:.3e} exceeds {tol:.1e}")]
    NotOrthogonal {
        what: &'static str,
        deviation: f64,
        tol: f64,
    },

    #[error("{what} first column is not e/sqrt(n): deviation {deviation:.3e}")]
    FirstColumnNotUniform { what: &'static str, deviation: f64 },

    #[error("size of w should be equal to n-1 = {expected}, got {found}")]
    WrongBlockSize { expected: usize, found: usize },

    #[error("input is not g.d.s.: err_rows = {err_rows:.3e}, err_columns = {err_columns:.3e}")]
    NotGds { err_rows: f64, err_columns: f64 },

    #[error("input is not g.d.s. relative to q: leading block deviation {deviation:.3e}")]
    NotGdsRelativeTo { deviation: f64 },

    #[error("r must be at least 1")]
    NoUnitEigenvalue,

    #[error("eigenvalue off unit circle: |c^2 + s^2 - 1| = {deviation:.3e} for pair {index}")]
    EigenvalueOffUnitCircle { index: usize, deviation: f64 },

    #[error("pair {index} has zero imaginary part; declare real eigenvalues via r or p")]
    RealPairForbidden { index: usize },

    #[error("wrong dimensions: d has {found} entries, expected n^2 = {expected}")]
    WrongSeedLength { expected: usize, found: usize },

    #[error("scaling vector must have d_1 = 1 and |d_i| = 1, violated at index {index} (value {value})")]
    NotUnimodular { index: usize, value: f64 },

    #[error("matrix dimension {dim} is not a perfect square")]
    NotPerfectSquare { dim: usize },

    #[error("input does not satisfy the Yang-Baxter equation: residual {residual:.3e} exceeds {tol:.1e}")]
    YbeViolation { residual: f64, tol: f64 },

    #[error("{what} does not fix e_1: deviation {deviation:.3e}")]
    DoesNotFixFirstAxis { what: &'static str, deviation: f64 },

    #[error("experiment sizes must be nonempty for {id}")]
    EmptySizes { id: &'static str },

    #[error("experiment z values must be nonempty for {id}")]
    EmptyZValues { id: &'static str },

    #[error("unknown experiment id {found:?}, valid ids: {valid}")]
    UnknownExperiment { found: String, valid: &'static str },
}

pub type Result<T> = std::result::Result<T, GdsError>;
