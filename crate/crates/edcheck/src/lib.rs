//! Runs the verification scenarios of `edcheck-core` and reports on them.
//!
//! [`Context`] computes shared objects once (optionally reading group
//! closures from a [`GroupCache`]), [`scenarios`] turns them into checks, and
//! [`ScenarioReport`] renders the result as JSON or text.

pub mod cache;
pub mod context;
pub mod report;
pub mod scenarios;

pub use cache::GroupCache;
pub use context::Context;
pub use report::{Check, ScenarioReport, Status, Witness};
pub use scenarios::{run, run_all, Scenario, ALL, SCENARIOS};
