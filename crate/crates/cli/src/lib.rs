//! Configuration, studies and the table benchmark gate behind the `fgbeam`
//! command-line tool.

pub mod benchmark;
pub mod config;
pub mod study;

pub use benchmark::{benchmark_compare, embedded_fixtures, BenchReport, Fixture};
pub use config::{parse_config, CaseConfig, ConfigError};
pub use study::{convergence_study, profile_csv, run_case, sweep, SweepParam};
