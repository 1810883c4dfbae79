//! Quantum query algorithms for bounded-height Dyck languages, simulated
//! classically with exact query accounting.

pub mod bench;
pub mod dyck;
pub mod error;
pub mod instances;
pub mod minimal;
pub mod oracle;
pub mod search;
pub mod substring;
pub mod word;

pub use dyck::{amplification_runs, decide_dyck, decide_dyck_amplified, Decision};
pub use error::{Error, Result};
pub use minimal::{Coverage, MinimalIndex};
pub use oracle::CountingOracle;
pub use search::{BackendPolicy, Direction, Mode, SimRng};
pub use substring::{ExactSearch, SearchStats, Searcher};
pub use word::{
    balance, balance_range, brute_force_substrings, classical_dyck, prefix_heights, Match, Sign, SignSet, Word,
};
