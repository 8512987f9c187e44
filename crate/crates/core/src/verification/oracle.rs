//! Affine-dependence oracle by exact Gaussian elimination.
//!
//! The `n + 2` points are lifted to columns `(A_i; 1)` of an
//! `(n + 1) × (n + 2)` matrix. When its rank is `n + 1` the null space is a
//! line, and the identity's signed coefficients must lie on it.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::config::Configuration;
use crate::scalar::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("lifted matrix has rank {rank}, need {needed}; dependence is not unique")]
    RankDeficient { rank: usize, needed: usize },
}

/// The `(n + 1) × (n + 2)` matrix with columns `(A_i; 1)`, row-major.
pub fn lifted_matrix(cfg: &Configuration<Rational>) -> Vec<Vec<Rational>> {
    let n = cfg.dimension();
    let mut rows: Vec<Vec<Rational>> = (0..n)
        .map(|r| cfg.points().iter().map(|p| p[r].clone()).collect())
        .collect();
    rows.push(vec![Rational::one(); cfg.len()]);
    rows
}

/// Reduced row echelon form in place; returns the pivot column of each row.
fn rref(rows: &mut [Vec<Rational>]) -> Vec<usize> {
    let height = rows.len();
    let width = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..width {
        if r == height {
            break;
        }
        let Some(p) = (r..height).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..height {
            if i != r && !rows[i][c].is_zero() {
                let factor = rows[i][c].clone();
                for j in c..width {
                    let delta = &factor * &rows[r][j];
                    rows[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// A spanning vector of the null space of the lifted matrix.
pub fn nullspace_oracle(cfg: &Configuration<Rational>) -> Result<Vec<Rational>, OracleError> {
    let mut rows = lifted_matrix(cfg);
    let needed = rows.len();
    let pivots = rref(&mut rows);
    if pivots.len() < needed {
        return Err(OracleError::RankDeficient {
            rank: pivots.len(),
            needed,
        });
    }
    let width = cfg.len();
    let free = (0..width)
        .find(|c| !pivots.contains(c))
        .expect("n + 1 pivots among n + 2 columns leave one free column");
    let mut v = vec![Rational::zero(); width];
    v[free] = Rational::one();
    for (row, &pc) in pivots.iter().enumerate() {
        v[pc] = -rows[row][free].clone();
    }
    Ok(v)
}

/// `c_i d_j = c_j d_i` for every pair: `c` and `d` span the same line, or
/// one of them is zero.
pub fn are_parallel(c: &[Rational], d: &[Rational]) -> bool {
    c.len() == d.len()
        && (0..c.len()).all(|i| (i + 1..c.len()).all(|j| &c[i] * &d[j] == &c[j] * &d[i]))
}

/// `M · v` for the lifted matrix.
pub fn apply_lifted(cfg: &Configuration<Rational>, v: &[Rational]) -> Vec<Rational> {
    lifted_matrix(cfg)
        .iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::parse_rational;

    fn q(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    fn cfg(rows: &[&[i64]]) -> Configuration<Rational> {
        Configuration::from_coords(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&v| Rational::from_integer(v.into()))
                        .collect()
                })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn bipyramid_null_vector() {
        let c = cfg(&[
            &[0, 0, -1],
            &[1, 0, 0],
            &[0, 1, 0],
            &[-1, -1, 0],
            &[0, 0, 1],
        ]);
        let v = nullspace_oracle(&c).unwrap();
        let expected = ["3", "-2", "-2", "-2", "3"].map(q);
        assert!(are_parallel(&v, &expected));
        assert!(apply_lifted(&c, &v).iter().all(Zero::is_zero));
    }

    #[test]
    fn line_null_vector() {
        let c = cfg(&[&[0], &[1], &[5]]);
        let v = nullspace_oracle(&c).unwrap();
        assert!(are_parallel(&v, &["4", "-5", "1"].map(q)));
        assert!(!are_parallel(&v, &["4", "5", "1"].map(q)));
    }

    #[test]
    fn unit_square() {
        let c = cfg(&[&[0, 0], &[1, 0], &[1, 1], &[0, 1]]);
        let v = nullspace_oracle(&c).unwrap();
        assert!(are_parallel(&v, &["1", "-1", "1", "-1"].map(q)));
    }

    #[test]
    fn rank_deficient() {
        let collinear = cfg(&[&[0, 0], &[1, 1], &[2, 2], &[3, 3]]);
        assert_eq!(
            nullspace_oracle(&collinear),
            Err(OracleError::RankDeficient { rank: 2, needed: 3 })
        );
        let same = cfg(&[&[4], &[4], &[4]]);
        assert_eq!(
            nullspace_oracle(&same),
            Err(OracleError::RankDeficient { rank: 1, needed: 2 })
        );
    }

    #[test]
    fn parallel_edge_cases() {
        let zero = vec![q("0"); 3];
        assert!(are_parallel(&zero, &["1", "2", "3"].map(q)));
        assert!(are_parallel(
            &["0", "2", "-4"].map(q),
            &["0", "-1", "2"].map(q)
        ));
        assert!(!are_parallel(&["1", "0"].map(q), &["0", "1"].map(q)));
        assert!(!are_parallel(&["1"].map(q), &["1", "1"].map(q)));
    }
}
