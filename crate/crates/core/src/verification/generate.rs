//! Reproducible random configurations.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::config::{Configuration, Point};
use crate::scalar::Rational;

/// Bound on integer coordinates.
pub const INTEGER_RANGE: i64 = 10;
/// Bound on numerators and denominators of rational coordinates.
pub const RATIONAL_BOUND: i64 = 100;
/// Exponent of the default near-degenerate offset `2^-40`.
pub const NEAR_DEGENERATE_LOG2: i32 = -40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Distribution {
    /// Integers in `[-10, 10]`.
    SmallIntegers,
    /// `p/q` with `1 ≤ q ≤ 100`, `|p| ≤ 100` and `|p/q| ≤ 10`.
    BoundedRationals,
    /// Integer points, with `A_{n+1}` placed `2^-40` off the affine span of
    /// `A_0, …, A_{n-1}`.
    NearDegenerate,
}

impl Distribution {
    pub const ALL: [Distribution; 3] = [
        Distribution::SmallIntegers,
        Distribution::BoundedRationals,
        Distribution::NearDegenerate,
    ];
}

/// Generator seeded from `seed`, with an independent stream per `stream` id.
pub fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

pub fn random_integer<R: Rng>(rng: &mut R, range: i64) -> Rational {
    Rational::from_integer(BigInt::from(rng.gen_range(-range..=range)))
}

pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    let den = rng.gen_range(1..=RATIONAL_BOUND);
    let limit = RATIONAL_BOUND.min(INTEGER_RANGE * den);
    let num = rng.gen_range(-limit..=limit);
    Rational::new(num.into(), den.into())
}

pub fn random_point<R: Rng>(rng: &mut R, dimension: usize, dist: Distribution) -> Point<Rational> {
    Point::new(
        (0..dimension)
            .map(|_| match dist {
                Distribution::BoundedRationals => random_rational(rng),
                _ => random_integer(rng, INTEGER_RANGE),
            })
            .collect(),
    )
}

/// Positive weights summing to one.
pub fn random_convex_weights<R: Rng>(rng: &mut R, count: usize) -> Vec<Rational> {
    let raw: Vec<i64> = (0..count).map(|_| rng.gen_range(1..=20)).collect();
    let total: i64 = raw.iter().sum();
    raw.into_iter()
        .map(|w| Rational::new(w.into(), total.into()))
        .collect()
}

/// `2^exponent` as an exact rational.
pub fn power_of_two(exponent: i32) -> Rational {
    let magnitude = num_traits::pow(BigInt::from(2u8), exponent.unsigned_abs() as usize);
    if exponent >= 0 {
        Rational::from_integer(magnitude)
    } else {
        Rational::new(BigInt::one(), magnitude)
    }
}

/// Draws a configuration from `rng`.
///
/// For [`Distribution::NearDegenerate`] the offset applied to the last point
/// is `perturbation` (pass zero to get an exactly flat subset).
pub fn sample_configuration<R: Rng>(
    rng: &mut R,
    dimension: usize,
    dist: Distribution,
    perturbation: &Rational,
) -> Configuration<Rational> {
    assert!(dimension >= 1, "dimension must be at least 1");
    let mut points: Vec<Point<Rational>> = (0..dimension + 2)
        .map(|_| random_point(rng, dimension, dist))
        .collect();
    if dist == Distribution::NearDegenerate {
        let weights = random_convex_weights(rng, dimension);
        let on_span = weights
            .iter()
            .zip(&points[..dimension])
            .fold(Point::zeros(dimension), |acc, (w, p)| acc.add_scaled(w, p));
        let mut direction: Vec<Rational> = (0..dimension)
            .map(|_| Rational::from_integer(rng.gen_range(-1i64..=1).into()))
            .collect();
        if direction.iter().all(Zero::is_zero) {
            direction[rng.gen_range(0..dimension)] = Rational::one();
        }
        points[dimension + 1] = on_span.add_scaled(perturbation, &Point::new(direction));
    }
    Configuration::with_dimension(dimension, points).expect("generated shape is valid")
}

/// A reproducible configuration for `(dimension, distribution, seed)`.
pub fn generate_configuration(
    dimension: usize,
    dist: Distribution,
    seed: u64,
) -> Configuration<Rational> {
    let mut rng = rng_for(seed, 0);
    sample_configuration(
        &mut rng,
        dimension,
        dist,
        &power_of_two(NEAR_DEGENERATE_LOG2),
    )
}

/// The `n + 1` points `A_0, …, A_{n-1}, A_{n+1}` that a near-degenerate
/// configuration makes almost flat.
pub fn near_flat_subset(cfg: &Configuration<Rational>) -> Vec<Point<Rational>> {
    let n = cfg.dimension();
    let mut subset = cfg.points()[..n].to_vec();
    subset.push(cfg[n + 1].clone());
    subset
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::applications::is_degenerate_simplex;
    use num_traits::Signed;

    #[test]
    fn deterministic() {
        for dist in Distribution::ALL {
            assert_eq!(
                generate_configuration(3, dist, 17),
                generate_configuration(3, dist, 17)
            );
        }
        assert_ne!(
            generate_configuration(3, Distribution::SmallIntegers, 1),
            generate_configuration(3, Distribution::SmallIntegers, 2)
        );
    }

    #[test]
    fn integer_range() {
        for seed in 0..50 {
            let cfg = generate_configuration(2, Distribution::SmallIntegers, seed);
            assert_eq!(cfg.len(), 4);
            for p in cfg.points() {
                assert_eq!(p.dimension(), 2);
                for v in p.coords() {
                    assert!(v.is_integer());
                    assert!(v.abs() <= Rational::from_integer(10.into()));
                }
            }
        }
    }

    #[test]
    fn rational_bounds() {
        for seed in 0..50 {
            let cfg = generate_configuration(3, Distribution::BoundedRationals, seed);
            for v in cfg.points().iter().flat_map(|p| p.coords()) {
                assert!(v.numer().abs() <= BigInt::from(RATIONAL_BOUND));
                assert!(*v.denom() <= BigInt::from(RATIONAL_BOUND));
                assert!(v.abs() <= Rational::from_integer(10.into()));
            }
        }
    }

    #[test]
    fn zero_perturbation_is_exactly_flat() {
        for n in 1..=5 {
            for seed in 0..10 {
                let mut rng = rng_for(seed, n as u64);
                let cfg = sample_configuration(
                    &mut rng,
                    n,
                    Distribution::NearDegenerate,
                    &Rational::zero(),
                );
                let t = is_degenerate_simplex(&near_flat_subset(&cfg)).unwrap();
                assert!(t.degenerate, "n={n} seed={seed}");
                assert!(t.witness.is_zero());
            }
        }
    }

    #[test]
    fn default_perturbation_is_tiny_but_nonzero() {
        let eps = power_of_two(NEAR_DEGENERATE_LOG2);
        assert_eq!(Rational::from_float(2f64.powi(-40)).unwrap(), eps);
        let bound = Rational::new(1.into(), 1_000_000.into());
        let mut nonzero = 0;
        for seed in 0..20 {
            let cfg = generate_configuration(3, Distribution::NearDegenerate, seed);
            let t = is_degenerate_simplex(&near_flat_subset(&cfg)).unwrap();
            assert!(t.witness.abs() < bound);
            if !t.witness.is_zero() {
                nonzero += 1;
            }
        }
        assert!(nonzero > 15);
    }
}
