//! Independent oracles and the randomized property harness.

pub mod generate;
pub mod oracle;
pub mod suite;

pub use generate::{generate_configuration, Distribution};
pub use oracle::{are_parallel, nullspace_oracle, OracleError};
pub use suite::{
    check_float, check_property, replay, run_cases, run_property_suite, CheckOutcome, Failure,
    Property, SuiteConfig, SuiteError, TrialCase, TrialReport,
};
