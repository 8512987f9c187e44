//! Signed simplex volumes and the vector identity satisfied by any `n + 2`
//! points in `R^n`.
//!
//! The geometry is written once, generic over [`Scalar`], and instantiated
//! for exact rationals ([`Rational`]) and binary floats (`f32`, `f64`). The
//! aliases below name the common instantiations.

pub mod applications;
pub mod cli;
pub mod config;
pub mod det;
pub mod format;
pub mod identity;
pub mod matrix;
pub mod scalar;
pub mod verification;

use thiserror::Error;

pub use applications::{
    barycentric, dependence_certificate, is_degenerate_simplex, ApplicationError,
    BarycentricCoords, DegeneracyTest, DependenceCertificate,
};
pub use config::{Configuration, Point};
pub use det::{det_bareiss, det_cofactor, det_exact, det_float, Determinant};
pub use identity::{
    build_m_matrix, coefficients, delta, delta_expanded, residual, sign, signed_volume,
    CoefficientVector, Residual, TolerancePolicy, ToleranceUsed, Verdict,
};
pub use matrix::SquareMatrix;
pub use scalar::{parse_rational, Rational, Scalar};

pub type ExactPoint = Point<Rational>;
pub type ExactConfiguration = Configuration<Rational>;
pub type ExactMatrix = SquareMatrix<Rational>;
pub type ExactCoefficients = CoefficientVector<Rational>;
pub type ExactResidual = Residual<Rational>;

pub type FloatPoint = Point<f64>;
pub type FloatConfiguration = Configuration<f64>;
pub type FloatMatrix = SquareMatrix<f64>;
pub type FloatCoefficients = CoefficientVector<f64>;
pub type FloatResidual = Residual<f64>;

pub type Float32Configuration = Configuration<f32>;

/// Malformed matrix input to a determinant kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("matrix of order 0")]
    EmptyMatrix,
    #[error("column {column} has length {len}, expected {order}")]
    RaggedColumn {
        column: usize,
        len: usize,
        order: usize,
    },
    #[error("non-finite entry at row {row}, column {col}")]
    NonFinite { row: usize, col: usize },
    #[error("order {order} exceeds the cofactor limit {max}")]
    OrderTooLarge { order: usize, max: usize },
}

/// Invalid configuration or index.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("expected {expected} points, found {found}")]
    PointCount { expected: usize, found: usize },
    #[error("point {index} has {found} coordinates, expected {expected}")]
    PointLength {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("index {index} out of range for {len} points")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("non-finite coordinate")]
    NonFinite,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
