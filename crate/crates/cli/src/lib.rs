//! Experiment drivers behind the `chebsig` command: each experiment builds
//! an in-memory report that can be checked against golden values and
//! written out as CSV series plus a JSON summary.

pub mod checks;
mod error;
pub mod experiments;
pub mod report;
pub mod svg;

pub use checks::{check, Check};
pub use error::{HarnessError, HarnessResult};
pub use experiments::{run, run_all, ChebFit, Experiment, Options, SpacingChoice};
pub use report::{write_report, ExperimentReport};
