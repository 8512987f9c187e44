//! Consequences of the identity: barycentric coordinates, affine dependence
//! certificates and simplex degeneracy.
//!
//! Appending a query point `p` to a simplex `A_0, …, A_n` gives an `n + 2`
//! point configuration whose signed coefficients `c_i` satisfy
//! `Σ c_i A_i = 0` and `Σ c_i = 0`. Solving for `p = A_{n+1}` yields
//! `p = Σ_k (−c_k / c_{n+1}) A_k` with weights summing to one.

use thiserror::Error;

use crate::config::{Configuration, Point};
use crate::identity::coefficients;
use crate::matrix::SquareMatrix;
use crate::scalar::Scalar;
use crate::GeometryError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ApplicationError<T: Scalar> {
    /// The simplex is flat; `witness` is `det[A_1 − A_0 | … | A_n − A_0]`.
    #[error("degenerate simplex (determinant {witness})")]
    DegenerateSimplex { witness: T },
    /// Every `Δ_i` vanishes, so the identity yields no dependence.
    #[error("every coefficient vanishes; no dependence certificate")]
    AllDegenerate,
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// Weights `λ_k` with `Σ λ_k = 1` and `Σ λ_k A_k = p`.
#[derive(Debug, Clone, PartialEq)]
pub struct BarycentricCoords<T> {
    pub lambdas: Vec<T>,
}

impl<T: Scalar> BarycentricCoords<T> {
    pub fn sum(&self) -> T {
        self.lambdas
            .iter()
            .fold(T::zero(), |acc, l| acc + l.clone())
    }

    /// `Σ λ_k A_k`
    pub fn reconstruct(&self, simplex: &[Point<T>]) -> Point<T> {
        let n = simplex.first().map_or(0, |p| p.dimension());
        self.lambdas
            .iter()
            .zip(simplex)
            .fold(Point::zeros(n), |acc, (l, a)| acc.add_scaled(l, a))
    }

    /// All weights strictly between 0 and 1.
    pub fn is_strictly_inside(&self) -> bool {
        self.lambdas.iter().all(|l| *l > T::zero() && *l < T::one())
    }
}

fn simplex_dimension<T: Scalar>(simplex: &[Point<T>]) -> Result<usize, GeometryError> {
    if simplex.len() < 2 {
        return Err(GeometryError::PointCount {
            expected: 2,
            found: simplex.len(),
        });
    }
    let n = simplex.len() - 1;
    if let Some((index, p)) = simplex.iter().enumerate().find(|(_, p)| p.dimension() != n) {
        return Err(GeometryError::PointLength {
            index,
            expected: n,
            found: p.dimension(),
        });
    }
    Ok(n)
}

/// Barycentric coordinates of `p` with respect to `simplex`, read off the
/// identity's coefficients.
pub fn barycentric<T: Scalar>(
    simplex: &[Point<T>],
    p: &Point<T>,
) -> Result<BarycentricCoords<T>, ApplicationError<T>> {
    let n = simplex_dimension(simplex)?;
    if p.dimension() != n {
        return Err(GeometryError::PointLength {
            index: n + 1,
            expected: n,
            found: p.dimension(),
        }
        .into());
    }
    let mut points = simplex.to_vec();
    points.push(p.clone());
    let cfg = Configuration::with_dimension(n, points)?;
    if !cfg.is_finite() {
        return Err(GeometryError::NonFinite.into());
    }
    let coeffs = coefficients(&cfg)?;
    let last = n + 1;
    let pivot = coeffs.signed[last].clone();
    let degenerate = if T::EXACT {
        pivot.is_zero()
    } else {
        pivot.abs() <= coeffs.error_scales[last]
    };
    if degenerate {
        return Err(ApplicationError::DegenerateSimplex {
            witness: coeffs.deltas[last].clone(),
        });
    }
    let lambdas = coeffs.signed[..last]
        .iter()
        .map(|c| -(c.clone() / pivot.clone()))
        .collect();
    Ok(BarycentricCoords { lambdas })
}

/// Coefficients `c_i`, not all zero, with `Σ c_i A_i = 0` and `Σ c_i = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct DependenceCertificate<T> {
    pub coeffs: Vec<T>,
}

impl<T: Scalar> DependenceCertificate<T> {
    pub fn weighted_sum(&self, cfg: &Configuration<T>) -> Point<T> {
        self.coeffs
            .iter()
            .zip(cfg.points())
            .fold(Point::zeros(cfg.dimension()), |acc, (c, a)| {
                acc.add_scaled(c, a)
            })
    }

    pub fn sum(&self) -> T {
        self.coeffs.iter().fold(T::zero(), |acc, c| acc + c.clone())
    }
}

/// The identity's signed coefficients as an affine dependence of the points.
pub fn dependence_certificate<T: Scalar>(
    cfg: &Configuration<T>,
) -> Result<DependenceCertificate<T>, ApplicationError<T>> {
    let coeffs = coefficients(cfg)?;
    let vanishes = if T::EXACT {
        coeffs.is_zero()
    } else {
        coeffs
            .deltas
            .iter()
            .zip(&coeffs.error_scales)
            .all(|(d, e)| d.abs() <= *e)
    };
    if vanishes {
        return Err(ApplicationError::AllDegenerate);
    }
    Ok(DependenceCertificate {
        coeffs: coeffs.signed,
    })
}

/// Outcome of a flatness test on `n + 1` points in `R^n`.
#[derive(Debug, Clone, PartialEq)]
pub struct DegeneracyTest<T> {
    pub degenerate: bool,
    /// `det[A_1 − A_0 | … | A_n − A_0]`
    pub witness: T,
}

pub fn is_degenerate_simplex<T: Scalar>(
    simplex: &[Point<T>],
) -> Result<DegeneracyTest<T>, GeometryError> {
    simplex_dimension(simplex)?;
    let origin = &simplex[0];
    let columns = simplex[1..]
        .iter()
        .map(|a| a.sub(origin).into_coords())
        .collect();
    let det = T::determinant(&SquareMatrix::from_columns(columns)?)?;
    Ok(DegeneracyTest {
        degenerate: det.is_negligible(),
        witness: det.value,
    })
}
