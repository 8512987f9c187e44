//! The `n + 2` point identity.
//!
//! For points `A_0, …, A_{n+1}` in `R^n`, let
//! `M_i = [A_{i+2} − A_{i+1} | … | A_{i+n+1} − A_{i+1}]` with indices taken
//! modulo `n + 2`, and `Δ_i = det M_i`. Then
//!
//! ```text
//! Σ_i (−1)^{i(n+1)} Δ_i A_i = 0      and      Σ_i (−1)^{i(n+1)} Δ_i = 0.
//! ```
//!
//! `Δ_i` is `n!` times the signed volume of the simplex spanned by every
//! point except `A_i`; [`signed_volume`] divides the factor out.

use crate::config::{Configuration, Point};
use crate::det::Determinant;
use crate::matrix::SquareMatrix;
use crate::scalar::{factorial, Scalar};
use crate::GeometryError;

/// Relative tolerance used for float residual verdicts unless overridden.
pub const DEFAULT_FLOAT_TOLERANCE: f64 = 1e-9;

/// `(−1)^{i(n+1)}`: all `+1` for odd `n`, alternating for even `n`.
pub fn sign(dimension: usize, i: usize) -> i8 {
    if (i * (dimension + 1)).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn check_index<T: Scalar>(cfg: &Configuration<T>, i: usize) -> Result<(), GeometryError> {
    if i >= cfg.len() {
        Err(GeometryError::IndexOutOfRange {
            index: i,
            len: cfg.len(),
        })
    } else {
        Ok(())
    }
}

/// `M_i`: column `j` (1-based) is `A_{i+j+1} − A_{i+1}`, indices mod `n + 2`.
pub fn build_m_matrix<T: Scalar>(
    cfg: &Configuration<T>,
    i: usize,
) -> Result<SquareMatrix<T>, GeometryError> {
    check_index(cfg, i)?;
    let n = cfg.dimension();
    let base = cfg.point_cyclic(i + 1);
    let columns = (1..=n)
        .map(|j| cfg.point_cyclic(i + j + 1).sub(base).into_coords())
        .collect();
    Ok(SquareMatrix::from_columns(columns)?)
}

/// `Δ_i` together with the backend's error scale.
pub fn delta_determinant<T: Scalar>(
    cfg: &Configuration<T>,
    i: usize,
) -> Result<Determinant<T>, GeometryError> {
    let m = build_m_matrix(cfg, i)?;
    Ok(T::determinant(&m)?)
}

/// `Δ_i = det M_i`.
pub fn delta<T: Scalar>(cfg: &Configuration<T>, i: usize) -> Result<T, GeometryError> {
    delta_determinant(cfg, i).map(|d| d.value)
}

/// `Δ_i / n!`, the signed volume of the simplex omitting `A_i`.
pub fn signed_volume<T: Scalar>(cfg: &Configuration<T>, i: usize) -> Result<T, GeometryError> {
    Ok(delta(cfg, i)? / factorial::<T>(cfg.dimension()))
}

/// `Δ_i` as an alternating sum of `n + 1` determinants of raw point columns:
///
/// ```text
/// Δ_i = Σ_{j=1}^{n+1} (−1)^{j−1} det[A_{i+1} | … | Â_{i+j} | … | A_{i+n+1}]
/// ```
///
/// where the hatted column is left out. No differences are formed.
pub fn delta_expanded<T: Scalar>(cfg: &Configuration<T>, i: usize) -> Result<T, GeometryError> {
    check_index(cfg, i)?;
    let n = cfg.dimension();
    let mut total = T::zero();
    for j in 1..=n + 1 {
        let columns = (1..=n + 1)
            .filter(|&k| k != j)
            .map(|k| cfg.point_cyclic(i + k).coords().to_vec())
            .collect();
        let term = T::determinant(&SquareMatrix::from_columns(columns)?)?.value;
        total = if j % 2 == 1 {
            total + term
        } else {
            total - term
        };
    }
    Ok(total)
}

/// The `n + 2` coefficients of the identity, in index order.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientVector<T> {
    pub deltas: Vec<T>,
    /// `(−1)^{i(n+1)}`
    pub signs: Vec<i8>,
    /// `signs[i] · deltas[i]`
    pub signed: Vec<T>,
    /// Per-`Δ_i` rounding scale; all zero for exact scalars.
    pub error_scales: Vec<T>,
}

impl<T: Scalar> CoefficientVector<T> {
    pub fn dimension(&self) -> usize {
        self.deltas.len() - 2
    }

    pub fn is_zero(&self) -> bool {
        self.deltas.iter().all(|d| d.is_zero())
    }

    /// `Σ |Δ_i|`
    pub fn mass(&self) -> T {
        self.deltas.iter().fold(T::zero(), |acc, d| acc + d.abs())
    }

    /// `signed` rescaled so its first nonzero entry is 1; `None` if all zero.
    ///
    /// Useful for comparing with dependence vectors that are only defined up
    /// to scale.
    pub fn normalized(&self) -> Option<Vec<T>> {
        let lead = self.signed.iter().find(|c| !c.is_zero())?.clone();
        Some(
            self.signed
                .iter()
                .map(|c| c.clone() / lead.clone())
                .collect(),
        )
    }
}

pub fn coefficients<T: Scalar>(
    cfg: &Configuration<T>,
) -> Result<CoefficientVector<T>, GeometryError> {
    let n = cfg.dimension();
    let count = cfg.len();
    let mut deltas = Vec::with_capacity(count);
    let mut error_scales = Vec::with_capacity(count);
    for i in 0..count {
        let d = delta_determinant(cfg, i)?;
        deltas.push(d.value);
        error_scales.push(d.error_scale);
    }
    let signs: Vec<i8> = (0..count).map(|i| sign(n, i)).collect();
    let signed = deltas
        .iter()
        .zip(&signs)
        .map(|(d, &s)| if s > 0 { d.clone() } else { -d.clone() })
        .collect();
    Ok(CoefficientVector {
        deltas,
        signs,
        signed,
        error_scales,
    })
}

/// How a residual is judged.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TolerancePolicy {
    /// Both sums must be exactly zero.
    ExactZero,
    /// `‖vector‖_∞ ≤ tol · (Σ|Δ_i|) · max_i ‖A_i‖_∞` and `|scalar| ≤ tol · Σ|Δ_i|`.
    Relative(f64),
}

impl TolerancePolicy {
    /// Exact zero for exact scalars, [`DEFAULT_FLOAT_TOLERANCE`] otherwise.
    pub fn default_for<T: Scalar>() -> Self {
        if T::EXACT {
            Self::ExactZero
        } else {
            Self::Relative(DEFAULT_FLOAT_TOLERANCE)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(pass: bool) -> Self {
        if pass {
            Self::Pass
        } else {
            Self::Fail
        }
    }

    pub fn passed(self) -> bool {
        self == Self::Pass
    }
}

/// The bounds a residual was compared against.
#[derive(Debug, Clone, PartialEq)]
pub enum ToleranceUsed<T> {
    ExactZero,
    Relative {
        tolerance: f64,
        vector_bound: T,
        scalar_bound: T,
    },
}

/// Evaluated identity: `Σ signed_i A_i` and `Σ signed_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct Residual<T> {
    pub vector: Point<T>,
    pub scalar: T,
    pub verdict: Verdict,
    pub tolerance_used: ToleranceUsed<T>,
    /// Coefficient mass `Σ|Δ_i|`.
    pub mass: T,
    /// `max_i ‖A_i‖_∞`
    pub coordinate_scale: T,
}

impl<T: Scalar> Residual<T> {
    /// Residual size relative to the natural scales, as `f64`.
    ///
    /// `max(‖vector‖_∞ / (mass · coordinate_scale), |scalar| / mass)`, with
    /// `0/0` read as zero.
    pub fn relative_error(&self) -> f64 {
        fn ratio(num: f64, den: f64) -> f64 {
            if num == 0.0 {
                0.0
            } else if den == 0.0 {
                f64::INFINITY
            } else {
                num / den
            }
        }
        let mass = self.mass.to_f64();
        let v = ratio(
            self.vector.max_abs().to_f64(),
            mass * self.coordinate_scale.to_f64(),
        );
        let s = ratio(self.scalar.abs().to_f64(), mass);
        v.max(s)
    }
}

/// Evaluates both sums of the identity and judges them under `policy`.
pub fn residual<T: Scalar>(
    cfg: &Configuration<T>,
    policy: TolerancePolicy,
) -> Result<Residual<T>, GeometryError> {
    if !cfg.is_finite() {
        return Err(GeometryError::NonFinite);
    }
    let coeffs = coefficients(cfg)?;
    Ok(residual_from_coefficients(cfg, &coeffs, policy))
}

/// [`residual`] with precomputed coefficients.
pub fn residual_from_coefficients<T: Scalar>(
    cfg: &Configuration<T>,
    coeffs: &CoefficientVector<T>,
    policy: TolerancePolicy,
) -> Residual<T> {
    let mut vector = Point::zeros(cfg.dimension());
    let mut scalar = T::zero();
    for (c, a) in coeffs.signed.iter().zip(cfg.points()) {
        vector = vector.add_scaled(c, a);
        scalar = scalar + c.clone();
    }
    let mass = coeffs.mass();
    let coordinate_scale = cfg.points().iter().fold(T::zero(), |acc, p| {
        let m = p.max_abs();
        if m > acc {
            m
        } else {
            acc
        }
    });
    let (pass, tolerance_used) = match policy {
        TolerancePolicy::ExactZero => (
            vector.is_zero() && scalar.is_zero(),
            ToleranceUsed::ExactZero,
        ),
        TolerancePolicy::Relative(tol) => {
            let tol_t = T::from_rational(&crate::scalar::rationalize(tol).unwrap_or_default());
            let vector_bound = tol_t.clone() * mass.clone() * coordinate_scale.clone();
            let scalar_bound = tol_t * mass.clone();
            (
                vector.max_abs() <= vector_bound && scalar.abs() <= scalar_bound,
                ToleranceUsed::Relative {
                    tolerance: tol,
                    vector_bound,
                    scalar_bound,
                },
            )
        }
    };
    Residual {
        vector,
        scalar,
        verdict: Verdict::from_bool(pass),
        tolerance_used,
        mass,
        coordinate_scale,
    }
}
