//! Checkers for the stability statements, extremal families, the
//! discretizer, and the seeded experiment suite.

pub mod discretize;
pub mod families;
pub mod freiman;
pub mod oracles;
pub mod sample;
pub mod stability;
pub mod suite;

pub use discretize::discretize;
pub use families::{
    check_degenerate_family, gen_degenerate_family, gen_functional_example, gen_lowerbound_family, DegenerateCheck,
};
pub use freiman::{check_freiman, enumerate_freiman, FreimanCheck, FreimanEnumeration, DEFAULT_FREIMAN_CAP};
pub use stability::{check_converse, check_stability, StabilityReport};
pub use suite::{run_suite, Experiment, ExperimentConfig, Report, SuiteSummary};
