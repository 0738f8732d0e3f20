//! Library half of the `capflat` command-line tool: report types for the
//! `flat` subcommand and the verification sweep machinery behind `verify`.

pub mod output;
pub mod sweep;

pub use output::{FlatReport, PieceReport};
pub use sweep::{run_sweep, sweep_space, OraclePolicy, SweepConfig, SweepReport, Violation};
