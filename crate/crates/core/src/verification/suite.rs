//! Randomized property suite.
//!
//! Every trial draws a configuration plus the auxiliary data the metamorphic
//! checks need (translation, scale factor, duplicated pair, interior
//! weights). All of it is recorded with any failure so the failure can be
//! replayed from its serialized form alone.
//!
//! Exact checks run first; the float residual is then judged on the same
//! configuration rounded to `f64`, and any float miss is re-evaluated exactly
//! on the rounded input so the miss can be attributed to rounding.

use std::fmt::Display;
use std::ops::RangeInclusive;

use num_traits::{One, Zero};
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::generate::{
    power_of_two, random_convex_weights, random_integer, random_rational, rng_for,
    sample_configuration, Distribution, NEAR_DEGENERATE_LOG2,
};
use super::oracle::{are_parallel, nullspace_oracle};
use crate::applications::{barycentric, is_degenerate_simplex};
use crate::config::{Configuration, Point};
use crate::det::{det_bareiss, det_cofactor};
use crate::format::{ConfigFile, FormatError};
use crate::identity::{
    build_m_matrix, coefficients, delta, delta_expanded, residual, sign, TolerancePolicy,
    DEFAULT_FLOAT_TOLERANCE,
};
use crate::scalar::{canonical_string, parse_rational, Rational};

/// Minimum share of well-conditioned float trials that must pass.
pub const FLOAT_PASS_RATE: f64 = 0.99;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    /// `Σ signed_i A_i = 0` and `Σ signed_i = 0`, exactly.
    ExactResidual,
    /// The hatted point-column expansion reproduces every `Δ_i`.
    ExpansionAgreement,
    TranslationInvariance,
    /// Rotating the labels shifts `Δ` by one and multiplies the signed
    /// coefficients by `(−1)^{n+1}`.
    CyclicRelabel,
    /// With `A_q = A_p`, every `Δ_i` with `i ∉ {p, q}` vanishes.
    DuplicateVanishing,
    SignPattern,
    /// Scaling every point by `c` scales every `Δ_i` by `c^n`.
    Scaling,
    BarycentricReconstruction,
    /// Bareiss, cofactor and the dispatching kernel agree on every `M_i`.
    DeterminantAgreement,
    NullspaceAgreement,
}

impl Property {
    pub const ALL: [Property; 10] = [
        Property::ExactResidual,
        Property::ExpansionAgreement,
        Property::TranslationInvariance,
        Property::CyclicRelabel,
        Property::DuplicateVanishing,
        Property::SignPattern,
        Property::Scaling,
        Property::BarycentricReconstruction,
        Property::DeterminantAgreement,
        Property::NullspaceAgreement,
    ];
}

/// A configuration with the auxiliary inputs of every check.
#[derive(Debug, Clone, PartialEq)]
pub struct TrialCase {
    pub trial: usize,
    pub distribution: Distribution,
    pub config: Configuration<Rational>,
    pub translation: Point<Rational>,
    pub scale: Rational,
    /// `(source, target)`: `A_target` is overwritten with `A_source`.
    pub duplicate: (usize, usize),
    /// Strictly positive, summing to one; weights on `A_0, …, A_n`.
    pub interior_weights: Vec<Rational>,
}

impl TrialCase {
    /// Trial `trial` of dimension `dimension` under `seed`.
    ///
    /// Each `(dimension, trial)` pair owns its own random stream, so cases
    /// can be built in any order or in parallel.
    pub fn generate(seed: u64, dimension: usize, trial: usize) -> Self {
        let mut rng = rng_for(seed, ((dimension as u64) << 32) | trial as u64);
        let distribution = Distribution::ALL[trial % Distribution::ALL.len()];
        let config = sample_configuration(
            &mut rng,
            dimension,
            distribution,
            &power_of_two(NEAR_DEGENERATE_LOG2),
        );
        Self::with_config(config, trial, distribution, &mut rng)
    }

    /// Wraps a given configuration, drawing the auxiliary inputs from `rng`.
    pub fn with_config<R: Rng>(
        config: Configuration<Rational>,
        trial: usize,
        distribution: Distribution,
        rng: &mut R,
    ) -> Self {
        let n = config.dimension();
        let translation = Point::new((0..n).map(|_| random_rational(rng)).collect());
        let scale = loop {
            let c = random_integer(rng, 10) / random_integer(rng, 10).max(Rational::one());
            if !c.is_zero() {
                break c;
            }
        };
        let source = rng.gen_range(0..n + 2);
        let target = (source + rng.gen_range(1..n + 2)) % (n + 2);
        let interior_weights = random_convex_weights(rng, n + 1);
        Self {
            trial,
            distribution,
            config,
            translation,
            scale,
            duplicate: (source, target),
            interior_weights,
        }
    }

    pub fn dimension(&self) -> usize {
        self.config.dimension()
    }

    pub fn to_record(&self) -> CaseRecord {
        CaseRecord {
            dimension: self.dimension(),
            trial: self.trial,
            distribution: self.distribution,
            config: ConfigFile::from_configuration(&self.config),
            translation: self
                .translation
                .coords()
                .iter()
                .map(canonical_string)
                .collect(),
            scale: canonical_string(&self.scale),
            duplicate: [self.duplicate.0, self.duplicate.1],
            interior_weights: self.interior_weights.iter().map(canonical_string).collect(),
        }
    }
}

/// Serializable form of a [`TrialCase`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseRecord {
    pub dimension: usize,
    pub trial: usize,
    pub distribution: Distribution,
    pub config: ConfigFile,
    pub translation: Vec<String>,
    pub scale: String,
    pub duplicate: [usize; 2],
    pub interior_weights: Vec<String>,
}

impl CaseRecord {
    pub fn to_case(&self) -> Result<TrialCase, FormatError> {
        let parse_all = |items: &[String]| {
            items
                .iter()
                .map(|s| parse_rational(s))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|source| FormatError::Number {
                    point: 0,
                    coord: 0,
                    source,
                })
        };
        let config = self.config.to_configuration()?;
        let len = config.len();
        if self.duplicate.iter().any(|&k| k >= len) || self.duplicate[0] == self.duplicate[1] {
            return Err(FormatError::Structure("invalid duplicate pair".into()));
        }
        let translation = parse_all(&self.translation)?;
        let interior_weights = parse_all(&self.interior_weights)?;
        if translation.len() != config.dimension()
            || interior_weights.len() != config.dimension() + 1
        {
            return Err(FormatError::Structure(
                "auxiliary data has wrong length".into(),
            ));
        }
        Ok(TrialCase {
            trial: self.trial,
            distribution: self.distribution,
            config,
            translation: Point::new(translation),
            scale: parse_all(std::slice::from_ref(&self.scale))?.remove(0),
            duplicate: (self.duplicate[0], self.duplicate[1]),
            interior_weights,
        })
    }
}

/// Expected versus observed values of a failed check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub expected: String,
    pub actual: String,
}

impl Mismatch {
    fn new(expected: impl Display, actual: impl Display) -> Self {
        Self {
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckOutcome {
    Held,
    /// Preconditions not met (degenerate simplex, rank-deficient lift).
    Skipped,
}

fn show(values: &[Rational]) -> String {
    let parts: Vec<String> = values.iter().map(canonical_string).collect();
    format!("[{}]", parts.join(", "))
}

fn deltas(cfg: &Configuration<Rational>) -> Result<Vec<Rational>, Mismatch> {
    (0..cfg.len())
        .map(|i| delta(cfg, i))
        .collect::<Result<_, _>>()
        .map_err(|e| Mismatch::new("deltas", e))
}

fn expect_eq(expected: &[Rational], actual: &[Rational]) -> Result<CheckOutcome, Mismatch> {
    if expected == actual {
        Ok(CheckOutcome::Held)
    } else {
        Err(Mismatch::new(show(expected), show(actual)))
    }
}

/// Runs one exact property on one case.
pub fn check_property(property: Property, case: &TrialCase) -> Result<CheckOutcome, Mismatch> {
    let cfg = &case.config;
    let n = cfg.dimension();
    let count = cfg.len();
    let err = |e: crate::GeometryError| Mismatch::new("no error", e);
    match property {
        Property::ExactResidual => {
            let r = residual(cfg, TolerancePolicy::ExactZero).map_err(err)?;
            if r.verdict.passed() {
                Ok(CheckOutcome::Held)
            } else {
                let mut actual = r.vector.coords().to_vec();
                actual.push(r.scalar);
                Err(Mismatch::new(
                    show(&vec![Rational::zero(); n + 1]),
                    show(&actual),
                ))
            }
        }
        Property::ExpansionAgreement => {
            let expanded = (0..count)
                .map(|i| delta_expanded(cfg, i))
                .collect::<Result<Vec<_>, _>>()
                .map_err(err)?;
            expect_eq(&deltas(cfg)?, &expanded)
        }
        Property::TranslationInvariance => {
            expect_eq(&deltas(cfg)?, &deltas(&cfg.translated(&case.translation))?)
        }
        Property::CyclicRelabel => {
            let base = deltas(cfg)?;
            let shifted: Vec<Rational> =
                (0..count).map(|i| base[(i + 1) % count].clone()).collect();
            expect_eq(&shifted, &deltas(&cfg.rotated_left())?)?;
            let original = coefficients(cfg).map_err(err)?.signed;
            let rotated = coefficients(&cfg.rotated_left()).map_err(err)?.signed;
            let factor = if n % 2 == 1 {
                Rational::one()
            } else {
                -Rational::one()
            };
            let predicted: Vec<Rational> = (0..count)
                .map(|i| &factor * &original[(i + 1) % count])
                .collect();
            expect_eq(&predicted, &rotated)
        }
        Property::DuplicateVanishing => {
            let (p, q) = case.duplicate;
            let dup = cfg.with_duplicate(p, q);
            let coeffs = coefficients(&dup).map_err(err)?;
            let mut expected = coeffs.signed.clone();
            for (i, e) in expected.iter_mut().enumerate() {
                if i != p && i != q {
                    *e = Rational::zero();
                }
            }
            expect_eq(&expected, &coeffs.signed)?;
            let pair_sum = &coeffs.signed[p] + &coeffs.signed[q];
            if !pair_sum.is_zero() {
                return Err(Mismatch::new(
                    "signed[p] + signed[q] = 0",
                    canonical_string(&pair_sum),
                ));
            }
            Ok(CheckOutcome::Held)
        }
        Property::SignPattern => {
            let coeffs = coefficients(cfg).map_err(err)?;
            let expected: Vec<i8> = (0..count)
                .map(|i| if n % 2 == 1 || i % 2 == 0 { 1 } else { -1 })
                .collect();
            let computed: Vec<i8> = (0..count).map(|i| sign(n, i)).collect();
            if coeffs.signs != expected || computed != expected {
                return Err(Mismatch::new(
                    format!("{expected:?}"),
                    format!("{:?}", coeffs.signs),
                ));
            }
            let rebuilt: Vec<Rational> = coeffs
                .deltas
                .iter()
                .zip(&coeffs.signs)
                .map(|(d, &s)| if s > 0 { d.clone() } else { -d.clone() })
                .collect();
            expect_eq(&rebuilt, &coeffs.signed)
        }
        Property::Scaling => {
            let factor = num_traits::pow(case.scale.clone(), n);
            let predicted: Vec<Rational> = deltas(cfg)?.iter().map(|d| d * &factor).collect();
            expect_eq(&predicted, &deltas(&cfg.scaled(&case.scale))?)
        }
        Property::BarycentricReconstruction => check_barycentric(case),
        Property::DeterminantAgreement => {
            for i in 0..count {
                let m = build_m_matrix(cfg, i).map_err(err)?;
                let reference = det_cofactor(&m).map_err(|e| Mismatch::new("cofactor", e))?;
                let fast = det_bareiss(&m);
                let dispatched = delta(cfg, i).map_err(err)?;
                if fast != reference || dispatched != reference {
                    return Err(Mismatch::new(
                        format!("M_{i}: cofactor {}", canonical_string(&reference)),
                        format!(
                            "bareiss {}, dispatch {}",
                            canonical_string(&fast),
                            canonical_string(&dispatched)
                        ),
                    ));
                }
            }
            Ok(CheckOutcome::Held)
        }
        Property::NullspaceAgreement => {
            let Ok(null) = nullspace_oracle(cfg) else {
                return Ok(CheckOutcome::Skipped);
            };
            let signed = coefficients(cfg).map_err(err)?.signed;
            if signed.iter().all(Zero::is_zero) || !are_parallel(&null, &signed) {
                return Err(Mismatch::new(
                    format!("parallel to {}", show(&null)),
                    show(&signed),
                ));
            }
            Ok(CheckOutcome::Held)
        }
    }
}

fn check_barycentric(case: &TrialCase) -> Result<CheckOutcome, Mismatch> {
    let n = case.dimension();
    let simplex = &case.config.points()[..=n];
    let flat = is_degenerate_simplex(simplex).map_err(|e| Mismatch::new("simplex", e))?;
    if flat.degenerate {
        return Ok(CheckOutcome::Skipped);
    }
    let weights = &case.interior_weights;
    let p = weights
        .iter()
        .zip(simplex)
        .fold(Point::zeros(n), |acc, (w, a)| acc.add_scaled(w, a));
    let coords = barycentric(simplex, &p).map_err(|e| Mismatch::new("coordinates", e))?;
    expect_eq(weights, &coords.lambdas)?;
    if coords.sum() != Rational::one() {
        return Err(Mismatch::new("sum 1", canonical_string(&coords.sum())));
    }
    let rebuilt = coords.reconstruct(simplex);
    if rebuilt != p {
        return Err(Mismatch::new(show(p.coords()), show(rebuilt.coords())));
    }
    if !coords.is_strictly_inside() {
        return Err(Mismatch::new(
            "all weights in (0, 1)",
            show(&coords.lambdas),
        ));
    }
    // Relabelling the vertices relabels the weights.
    let mut rotated = simplex.to_vec();
    rotated.rotate_left(1);
    let mut expected = weights.clone();
    expected.rotate_left(1);
    let relabeled = barycentric(&rotated, &p).map_err(|e| Mismatch::new("coordinates", e))?;
    expect_eq(&expected, &relabeled.lambdas)
}

/// Float residual of a case and its exact re-evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct FloatOutcome {
    pub passed: bool,
    pub relative_error: f64,
    /// Exact residual of the rounded (then rationalized) input vanished.
    pub exact_pass_on_rationalized: bool,
}

pub fn check_float(case: &TrialCase, tolerance: f64) -> FloatOutcome {
    let Ok(rounded) = case.config.convert::<f64>() else {
        return FloatOutcome {
            passed: false,
            relative_error: f64::INFINITY,
            exact_pass_on_rationalized: false,
        };
    };
    let float = residual(&rounded, TolerancePolicy::Relative(tolerance));
    let (passed, relative_error) = match &float {
        Ok(r) => (r.verdict.passed(), r.relative_error()),
        Err(_) => (false, f64::INFINITY),
    };
    let exact_pass_on_rationalized = rounded
        .convert::<Rational>()
        .ok()
        .and_then(|c| residual(&c, TolerancePolicy::ExactZero).ok())
        .is_some_and(|r| r.verdict.passed());
    FloatOutcome {
        passed,
        relative_error,
        exact_pass_on_rationalized,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub property: Property,
    pub dimension: usize,
    pub trial: usize,
    pub expected: String,
    pub actual: String,
    pub case: CaseRecord,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FloatFailure {
    pub dimension: usize,
    pub trial: usize,
    pub distribution: Distribution,
    pub relative_error: f64,
    pub exact_pass_on_rationalized: bool,
    pub config: ConfigFile,
}

/// Aggregated suite result.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialReport {
    pub seed: u64,
    pub dimensions: [usize; 2],
    pub trials_per_dimension: usize,
    pub trial_count: usize,
    pub checks_held: usize,
    pub checks_skipped: usize,
    pub failures: Vec<Failure>,
    pub float_tolerance: f64,
    /// Float trials on well-conditioned (integer and rational) cases.
    pub float_trials: usize,
    pub float_passes: usize,
    pub max_float_residual: f64,
    pub near_degenerate_trials: usize,
    pub near_degenerate_passes: usize,
    pub max_near_degenerate_residual: f64,
    pub float_failures: Vec<FloatFailure>,
}

impl TrialReport {
    pub fn float_pass_rate(&self) -> f64 {
        if self.float_trials == 0 {
            1.0
        } else {
            self.float_passes as f64 / self.float_trials as f64
        }
    }

    /// No exact failure, enough float passes, and every float miss explained
    /// by rounding.
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
            && self.float_pass_rate() >= FLOAT_PASS_RATE
            && self
                .float_failures
                .iter()
                .all(|f| f.exact_pass_on_rationalized)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SuiteError {
    #[error("trials must be at least 1")]
    NoTrials,
    #[error("dimension range {0}..{1} is empty or starts at 0")]
    BadDimensions(usize, usize),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteConfig {
    pub dimensions: RangeInclusive<usize>,
    pub trials: usize,
    pub seed: u64,
    pub float_tolerance: f64,
}

impl SuiteConfig {
    pub fn new(dimensions: RangeInclusive<usize>, trials: usize, seed: u64) -> Self {
        Self {
            dimensions,
            trials,
            seed,
            float_tolerance: DEFAULT_FLOAT_TOLERANCE,
        }
    }

    fn validate(&self) -> Result<(), SuiteError> {
        if self.trials == 0 {
            return Err(SuiteError::NoTrials);
        }
        let (lo, hi) = (*self.dimensions.start(), *self.dimensions.end());
        if lo == 0 || lo > hi {
            return Err(SuiteError::BadDimensions(lo, hi));
        }
        Ok(())
    }
}

struct CaseResult {
    dimension: usize,
    trial: usize,
    distribution: Distribution,
    held: usize,
    skipped: usize,
    failures: Vec<Failure>,
    float: FloatOutcome,
    config: ConfigFile,
}

fn evaluate(case: &TrialCase, tolerance: f64) -> CaseResult {
    let mut held = 0;
    let mut skipped = 0;
    let mut failures = Vec::new();
    for property in Property::ALL {
        match check_property(property, case) {
            Ok(CheckOutcome::Held) => held += 1,
            Ok(CheckOutcome::Skipped) => skipped += 1,
            Err(m) => failures.push(Failure {
                property,
                dimension: case.dimension(),
                trial: case.trial,
                expected: m.expected,
                actual: m.actual,
                case: case.to_record(),
            }),
        }
    }
    CaseResult {
        dimension: case.dimension(),
        trial: case.trial,
        distribution: case.distribution,
        held,
        skipped,
        failures,
        float: check_float(case, tolerance),
        config: ConfigFile::from_configuration(&case.config),
    }
}

/// Generates and checks `trials` cases for every dimension in range.
pub fn run_property_suite(config: &SuiteConfig) -> Result<TrialReport, SuiteError> {
    config.validate()?;
    let cases: Vec<(usize, usize)> = config
        .dimensions
        .clone()
        .flat_map(|n| (0..config.trials).map(move |t| (n, t)))
        .collect();
    let seed = config.seed;
    let results: Vec<CaseResult> = cases
        .into_par_iter()
        .map(|(n, t)| evaluate(&TrialCase::generate(seed, n, t), config.float_tolerance))
        .collect();
    Ok(aggregate(config, results))
}

/// Checks caller-supplied cases (e.g. hand-built degenerate inputs).
pub fn run_cases(config: &SuiteConfig, cases: &[TrialCase]) -> TrialReport {
    let results: Vec<CaseResult> = cases
        .par_iter()
        .map(|c| evaluate(c, config.float_tolerance))
        .collect();
    aggregate(config, results)
}

fn aggregate(config: &SuiteConfig, results: Vec<CaseResult>) -> TrialReport {
    let mut report = TrialReport {
        seed: config.seed,
        dimensions: [*config.dimensions.start(), *config.dimensions.end()],
        trials_per_dimension: config.trials,
        trial_count: results.len(),
        checks_held: 0,
        checks_skipped: 0,
        failures: Vec::new(),
        float_tolerance: config.float_tolerance,
        float_trials: 0,
        float_passes: 0,
        max_float_residual: 0.0,
        near_degenerate_trials: 0,
        near_degenerate_passes: 0,
        max_near_degenerate_residual: 0.0,
        float_failures: Vec::new(),
    };
    for r in results {
        report.checks_held += r.held;
        report.checks_skipped += r.skipped;
        report.failures.extend(r.failures);
        let f = &r.float;
        if r.distribution == Distribution::NearDegenerate {
            report.near_degenerate_trials += 1;
            report.near_degenerate_passes += usize::from(f.passed);
            report.max_near_degenerate_residual =
                report.max_near_degenerate_residual.max(f.relative_error);
        } else {
            report.float_trials += 1;
            report.float_passes += usize::from(f.passed);
            report.max_float_residual = report.max_float_residual.max(f.relative_error);
        }
        if !f.passed {
            report.float_failures.push(FloatFailure {
                dimension: r.dimension,
                trial: r.trial,
                distribution: r.distribution,
                relative_error: f.relative_error,
                exact_pass_on_rationalized: f.exact_pass_on_rationalized,
                config: r.config,
            });
        }
    }
    report
}

/// Re-runs a recorded failure from its serialized case. Returns the fresh
/// failure if it reproduces, `None` if the property now holds.
pub fn replay(failure: &Failure) -> Result<Option<Failure>, FormatError> {
    let case = failure.case.to_case()?;
    Ok(match check_property(failure.property, &case) {
        Err(m) => Some(Failure {
            property: failure.property,
            dimension: case.dimension(),
            trial: case.trial,
            expected: m.expected,
            actual: m.actual,
            case: case.to_record(),
        }),
        Ok(_) => None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cases_are_reproducible() {
        assert_eq!(TrialCase::generate(9, 3, 4), TrialCase::generate(9, 3, 4));
        assert_ne!(TrialCase::generate(9, 3, 4), TrialCase::generate(9, 3, 5));
        let case = TrialCase::generate(9, 2, 7);
        assert_ne!(case.duplicate.0, case.duplicate.1);
        assert!(!case.scale.is_zero());
        assert_eq!(
            case.interior_weights
                .iter()
                .fold(Rational::zero(), |a, w| a + w),
            Rational::one()
        );
    }

    #[test]
    fn record_round_trip() {
        let case = TrialCase::generate(3, 4, 1);
        let text = serde_json::to_string(&case.to_record()).unwrap();
        let back: CaseRecord = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_case().unwrap(), case);
    }

    #[test]
    fn small_suite_passes() {
        let report = run_property_suite(&SuiteConfig::new(1..=4, 12, 42)).unwrap();
        assert!(report.failures.is_empty(), "{:#?}", report.failures);
        assert_eq!(report.trial_count, 48);
        assert!(report.passed());
    }

    #[test]
    fn rejects_bad_ranges() {
        assert_eq!(
            run_property_suite(&SuiteConfig::new(1..=2, 0, 1)),
            Err(SuiteError::NoTrials)
        );
        assert_eq!(
            run_property_suite(&SuiteConfig::new(0..=2, 1, 1)),
            Err(SuiteError::BadDimensions(0, 2))
        );
    }

    #[test]
    fn injected_degenerate_case_still_passes() {
        let point = Point::new(vec![Rational::from_integer(3.into())]);
        let cfg = Configuration::new(vec![point; 3]).unwrap();
        let mut rng = rng_for(0, 0);
        let case = TrialCase::with_config(cfg, 0, Distribution::SmallIntegers, &mut rng);
        let report = run_cases(&SuiteConfig::new(1..=1, 1, 0), &[case]);
        assert!(report.failures.is_empty(), "{:#?}", report.failures);
        assert_eq!(report.float_passes, 1);
        // Barycentric and null-space checks have no valid input here.
        assert_eq!(report.checks_skipped, 2);
    }

    #[test]
    fn broken_record_replays_as_failure() {
        let case = (0..)
            .map(|t| TrialCase::generate(1, 2, t))
            .find(|c| {
                check_property(Property::BarycentricReconstruction, c) == Ok(CheckOutcome::Held)
            })
            .unwrap();
        let mut record = case.to_record();
        // Weights that no longer sum to one cannot match the coordinates.
        record.interior_weights[0] = "5".into();
        let failure = Failure {
            property: Property::BarycentricReconstruction,
            dimension: 2,
            trial: case.trial,
            expected: String::new(),
            actual: String::new(),
            case: record,
        };
        let again = replay(&failure).unwrap().expect("corrupted case must fail");
        assert_eq!(replay(&again).unwrap(), Some(again.clone()));
    }
}
