//! Points and `n + 2` point configurations.

use std::ops::{Deref, Index};

use crate::scalar::Scalar;
use crate::GeometryError;

/// A coordinate vector in `R^n`.
#[derive(Debug, Clone, PartialEq)]
pub struct Point<T>(Vec<T>);

impl<T: Scalar> Point<T> {
    pub fn new(coords: Vec<T>) -> Self {
        Self(coords)
    }

    pub fn zeros(dimension: usize) -> Self {
        Self(vec![T::zero(); dimension])
    }

    pub fn dimension(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[T] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<T> {
        self.0
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        )
    }

    pub fn scale(&self, c: &T) -> Self {
        Self(self.0.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// `self + c · other`
    pub fn add_scaled(&self, c: &T, other: &Self) -> Self {
        Self(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.clone() + c.clone() * b.clone())
                .collect(),
        )
    }

    pub fn max_abs(&self) -> T {
        self.0.iter().fold(T::zero(), |acc, v| {
            let a = v.abs();
            if a > acc {
                a
            } else {
                acc
            }
        })
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|v| v.is_zero())
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(Scalar::is_finite)
    }

    /// Converts every coordinate into another scalar realization.
    ///
    /// Fails on non-finite coordinates, which have no rational value.
    pub fn convert<U: Scalar>(&self) -> Result<Point<U>, GeometryError> {
        self.0
            .iter()
            .map(|v| v.to_rational().map(|r| U::from_rational(&r)))
            .collect::<Option<Vec<_>>>()
            .map(Point)
            .ok_or(GeometryError::NonFinite)
    }
}

impl<T> Deref for Point<T> {
    type Target = [T];

    fn deref(&self) -> &[T] {
        &self.0
    }
}

impl<T: Scalar> From<Vec<T>> for Point<T> {
    fn from(coords: Vec<T>) -> Self {
        Self(coords)
    }
}

/// `n + 2` points `A_0, …, A_{n+1}` in `R^n`, `n ≥ 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct Configuration<T> {
    dimension: usize,
    points: Vec<Point<T>>,
}

impl<T: Scalar> Configuration<T> {
    pub fn new(points: Vec<Point<T>>) -> Result<Self, GeometryError> {
        let count = points.len();
        if count < 3 {
            return Err(GeometryError::PointCount {
                expected: 3,
                found: count,
            });
        }
        Self::with_dimension(count - 2, points)
    }

    /// Like [`Configuration::new`] but checks against a declared dimension.
    pub fn with_dimension(dimension: usize, points: Vec<Point<T>>) -> Result<Self, GeometryError> {
        if dimension == 0 {
            return Err(GeometryError::ZeroDimension);
        }
        if points.len() != dimension + 2 {
            return Err(GeometryError::PointCount {
                expected: dimension + 2,
                found: points.len(),
            });
        }
        if let Some((index, p)) = points
            .iter()
            .enumerate()
            .find(|(_, p)| p.dimension() != dimension)
        {
            return Err(GeometryError::PointLength {
                index,
                expected: dimension,
                found: p.dimension(),
            });
        }
        Ok(Self { dimension, points })
    }

    /// Builds from plain coordinate rows.
    pub fn from_coords(rows: Vec<Vec<T>>) -> Result<Self, GeometryError> {
        Self::new(rows.into_iter().map(Point::new).collect())
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Number of points, always `dimension + 2`.
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn points(&self) -> &[Point<T>] {
        &self.points
    }

    /// Point `A_k` with `k` reduced modulo `n + 2`.
    pub fn point_cyclic(&self, k: usize) -> &Point<T> {
        &self.points[k % self.points.len()]
    }

    pub fn translated(&self, t: &Point<T>) -> Self {
        Self {
            dimension: self.dimension,
            points: self.points.iter().map(|p| p.add(t)).collect(),
        }
    }

    pub fn scaled(&self, c: &T) -> Self {
        Self {
            dimension: self.dimension,
            points: self.points.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// `(A_1, …, A_{n+1}, A_0)`
    pub fn rotated_left(&self) -> Self {
        let mut points = self.points.clone();
        points.rotate_left(1);
        Self {
            dimension: self.dimension,
            points,
        }
    }

    /// Copy with `A_target` replaced by `A_source`.
    pub fn with_duplicate(&self, source: usize, target: usize) -> Self {
        let mut points = self.points.clone();
        points[target] = points[source].clone();
        Self {
            dimension: self.dimension,
            points,
        }
    }

    pub fn convert<U: Scalar>(&self) -> Result<Configuration<U>, GeometryError> {
        Ok(Configuration {
            dimension: self.dimension,
            points: self
                .points
                .iter()
                .map(Point::convert)
                .collect::<Result<_, _>>()?,
        })
    }

    pub fn is_finite(&self) -> bool {
        self.points.iter().all(Point::is_finite)
    }
}

impl<T> Index<usize> for Configuration<T> {
    type Output = Point<T>;

    fn index(&self, k: usize) -> &Point<T> {
        &self.points[k]
    }
}
