//! Determinant kernels.
//!
//! * [`det_cofactor`]: Laplace expansion, the reference every other kernel is
//!   checked against. Minors are memoized by column subset, so the cost is
//!   `O(n · 2^n)` instead of `O(n!)`, but no elimination is involved.
//! * [`det_bareiss`]: fraction-free elimination for exact rationals.
//! * [`det_float`]: partial-pivot elimination returning a value and an error
//!   scale for threshold decisions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Float, Num, One, Zero};

use crate::matrix::SquareMatrix;
use crate::scalar::{Rational, Scalar};
use crate::LinalgError;

/// Largest order accepted by [`det_cofactor`]; the minor table has `2^order` slots.
pub const MAX_COFACTOR_ORDER: usize = 24;

/// A determinant value with an absolute error scale.
///
/// `error_scale` is zero for exact arithmetic. For floats it bounds the
/// rounding error the elimination could have introduced and is consumed by
/// degeneracy tests only; it never alters `value`.
#[derive(Debug, Clone, PartialEq)]
pub struct Determinant<T> {
    pub value: T,
    pub error_scale: T,
}

impl<T: Zero> Determinant<T> {
    pub fn exact(value: T) -> Self {
        Self {
            value,
            error_scale: T::zero(),
        }
    }
}

impl<T: Scalar> Determinant<T> {
    /// Zero exactly, or within the error scale for floats.
    pub fn is_negligible(&self) -> bool {
        if T::EXACT {
            self.value.is_zero()
        } else {
            self.value.abs() <= self.error_scale
        }
    }
}

/// Exact determinant by cofactor expansion along successive rows.
pub fn det_cofactor<T: Scalar>(m: &SquareMatrix<T>) -> Result<T, LinalgError> {
    let n = m.order();
    if n > MAX_COFACTOR_ORDER {
        return Err(LinalgError::OrderTooLarge {
            order: n,
            max: MAX_COFACTOR_ORDER,
        });
    }
    if let Some(err) = non_finite_entry(m) {
        return Err(err);
    }
    let full = (1usize << n) - 1;
    let mut memo: Vec<Option<T>> = vec![None; full + 1];
    Ok(cofactor_minor(m, full, &mut memo))
}

// Determinant of the minor using rows `n - |cols| ..` and the columns in `cols`.
fn cofactor_minor<T: Scalar>(m: &SquareMatrix<T>, cols: usize, memo: &mut [Option<T>]) -> T {
    if cols == 0 {
        return T::one();
    }
    if let Some(v) = &memo[cols] {
        return v.clone();
    }
    let n = m.order();
    let row = n - cols.count_ones() as usize;
    let mut acc = T::zero();
    let mut position = 0usize;
    for c in 0..n {
        if cols & (1 << c) == 0 {
            continue;
        }
        let entry = m.get(row, c);
        if !entry.is_zero() {
            let term = entry.clone() * cofactor_minor(m, cols & !(1 << c), memo);
            acc = if position.is_multiple_of(2) {
                acc + term
            } else {
                acc - term
            };
        }
        position += 1;
    }
    memo[cols] = Some(acc.clone());
    acc
}

fn non_finite_entry<T: Scalar>(m: &SquareMatrix<T>) -> Option<LinalgError> {
    for (col, column) in m.columns().iter().enumerate() {
        if let Some(row) = column.iter().position(|v| !v.is_finite()) {
            return Some(LinalgError::NonFinite { row, col });
        }
    }
    None
}

/// Pivots and value produced by a fraction-free elimination run.
#[derive(Debug, Clone, PartialEq)]
pub struct BareissTrace<T> {
    pub determinant: T,
    /// Leading entry of each elimination step, after any row swap.
    pub pivots: Vec<T>,
    /// Every entry written during elimination, in order.
    pub intermediates: Vec<T>,
}

/// Single-step Bareiss elimination on a row-major square array.
///
/// Every division is exact whenever the input entries lie in an integral
/// domain, so integer input keeps integer intermediates.
pub fn bareiss<T: Clone + Num>(mut a: Vec<Vec<T>>, record: bool) -> BareissTrace<T> {
    let n = a.len();
    let mut pivots = Vec::with_capacity(n);
    let mut intermediates = Vec::new();
    let mut previous = T::one();
    let mut negate = false;
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => {
                    return BareissTrace {
                        determinant: T::zero(),
                        pivots,
                        intermediates,
                    }
                }
            }
        }
        let pivot = a[k][k].clone();
        pivots.push(pivot.clone());
        for i in k + 1..n {
            for j in k + 1..n {
                let value = (a[i][j].clone() * pivot.clone() - a[i][k].clone() * a[k][j].clone())
                    / previous.clone();
                if record {
                    intermediates.push(value.clone());
                }
                a[i][j] = value;
            }
            a[i][k] = T::zero();
        }
        previous = pivot;
    }
    let det = a[n - 1][n - 1].clone();
    BareissTrace {
        determinant: if negate { T::zero() - det } else { det },
        pivots,
        intermediates,
    }
}

/// Exact determinant by fraction-free elimination.
///
/// Each column is first scaled by the lcm of its denominators so the
/// elimination itself runs on integers; the scale is divided out at the end.
pub fn det_bareiss(m: &SquareMatrix<Rational>) -> Rational {
    let n = m.order();
    let mut scale = BigInt::one();
    let mut int_cols: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for column in m.columns() {
        let lcm = column
            .iter()
            .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        int_cols.push(
            column
                .iter()
                .map(|v| v.numer() * (&lcm / v.denom()))
                .collect(),
        );
        scale *= lcm;
    }
    let rows: Vec<Vec<BigInt>> = (0..n)
        .map(|r| int_cols.iter().map(|c| c[r].clone()).collect())
        .collect();
    let det = bareiss(rows, false).determinant;
    Rational::new(det, scale)
}

/// Exact determinant with backend dispatch: cofactor for order ≤ 3, Bareiss above.
pub fn det_exact(m: &SquareMatrix<Rational>) -> Result<Rational, LinalgError> {
    if m.order() <= 3 {
        det_cofactor(m)
    } else {
        Ok(det_bareiss(m))
    }
}

/// Floating-point determinant by Gaussian elimination with partial pivoting.
///
/// The error scale is `u · n³ · ρ · Π_j ‖col_j‖_∞`, where `u` is the unit
/// roundoff and `ρ` the element growth observed during elimination.
pub fn det_float<F: Float + Scalar>(m: &SquareMatrix<F>) -> Result<Determinant<F>, LinalgError> {
    if let Some(err) = non_finite_entry(m) {
        return Err(err);
    }
    let n = m.order();
    let mut a = m.to_rows();
    let initial_max = a
        .iter()
        .flatten()
        .fold(F::zero(), |acc, v| acc.max(v.abs()));
    let column_norms = m.columns().iter().fold(F::one(), |acc, c| {
        acc * c.iter().fold(F::zero(), |mx, v| mx.max(v.abs()))
    });
    let mut max_seen = initial_max;
    let mut det = F::one();
    for k in 0..n {
        let (p, pivot_abs) =
            (k..n)
                .map(|i| (i, a[i][k].abs()))
                .fold(
                    (k, F::zero()),
                    |best, cur| if cur.1 > best.1 { cur } else { best },
                );
        if pivot_abs.is_zero() {
            det = F::zero();
            break;
        }
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        let pivot = a[k][k];
        det = det * pivot;
        for i in k + 1..n {
            let factor = a[i][k] / pivot;
            if factor.is_zero() {
                continue;
            }
            for j in k + 1..n {
                a[i][j] = a[i][j] - factor * a[k][j];
                max_seen = max_seen.max(a[i][j].abs());
            }
            a[i][k] = F::zero();
        }
    }
    let growth = if initial_max.is_zero() {
        F::zero()
    } else {
        max_seen / initial_max
    };
    let order = F::from_i64(n as i64);
    let error_scale = F::unit_roundoff() * order * order * order * growth * column_norms;
    Ok(Determinant {
        value: det,
        error_scale,
    })
}
