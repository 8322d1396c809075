//! Text formats, invariant reports and the command-line front end for
//! [`kloop_core`].

pub mod cli;
pub mod error;
pub mod format;
pub mod report;

pub use error::{KloopError, Result};
pub use format::{parse_subset, parse_table, parse_tables, serialize_subset, serialize_table};
pub use report::{loop_report, symetron_report, InvariantReport};
