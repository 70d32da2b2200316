//! Executable checks of long-cycle covering results over exhaustive graph
//! universes and family constructors, with JSON reports.

pub mod checks;
pub mod report;
pub mod runner;
pub mod witness;

pub use checks::{random_graphs, run_all, run_check, CheckParams, Tier, CHECK_IDS};
pub use report::{CheckReport, GraphRecord, Outcome};
pub use runner::{Runner, Tally};
pub use witness::{subdivision_witness, witness_search, Requirement, SearchMode, WitnessProfile};
