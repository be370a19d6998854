use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Crate-wide error type. CLI exit codes distinguish parse errors (2)
/// from numerical failures (3) via [`Error::is_parse_error`].
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch in {op}: left is {lhs_rows}x{lhs_cols}, right is {rhs_rows}x{rhs_cols}")]
    ShapeMismatch {
        op: &'static str,
        lhs_rows: usize,
        lhs_cols: usize,
        rhs_rows: usize,
        rhs_cols: usize,
    },

    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not Hermitian: relative deviation {deviation:.3e}")]
    NotHermitian { deviation: f64 },

    #[error("non-finite entry at row {row}, column {col}")]
    NonFinite { row: usize, col: usize },

    #[error("entries length {got} does not match {rows}x{cols} = {expected}")]
    EntryCount {
        rows: usize,
        cols: usize,
        expected: usize,
        got: usize,
    },

    #[error("Jacobi eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:.3e})")]
    EigNonConvergence { sweeps: usize, off_norm: f64 },

    #[error("norm overflow during spectral radius estimation")]
    Overflow,

    #[error("invalid engine configuration: {0}")]
    BadConfig(String),

    #[error("exponent r = {r} is below 1")]
    ExponentBelowOne { r: f64 },

    #[error("block partition is not conformable: block ({row},{col}) is {got_rows}x{got_cols}, expected {want_rows}x{want_cols}")]
    NonConformableBlocks {
        row: usize,
        col: usize,
        got_rows: usize,
        got_cols: usize,
        want_rows: usize,
        want_cols: usize,
    },

    #[error("operator pair list is empty")]
    EmptyPairList,

    #[error("polynomial degree {degree} is below 2; bounds are defined for monic polynomials of degree n >= 2")]
    DegreeTooSmall { degree: usize },

    #[error("leading coefficient is zero")]
    ZeroLeadingCoefficient,

    #[error("root iteration did not converge: worst residual {max_residual:.3e}")]
    RootsNonConvergence { max_residual: f64 },

    #[error("malformed complex literal {token:?} at position {position}")]
    ParseComplex { token: String, position: usize },

    #[error("expected at least 3 coefficients, got {got}")]
    TooFewCoefficients { got: usize },

    #[error("invalid matrix file: {0}")]
    BadMatrixFile(String),

    #[error("{0}")]
    BadRequest(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True for errors caused by unparseable input rather than numerics.
    pub fn is_parse_error(&self) -> bool {
        matches!(
            self,
            Error::ParseComplex { .. }
                | Error::TooFewCoefficients { .. }
                | Error::BadMatrixFile(_)
                | Error::BadRequest(_)
                | Error::Io(_)
                | Error::Json(_)
                | Error::EntryCount { .. }
                | Error::NonFinite { .. }
                | Error::ZeroLeadingCoefficient
                | Error::DegreeTooSmall { .. }
        )
    }
}
