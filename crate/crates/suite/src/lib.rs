//! Fixture catalogue and brute-force oracles for the acceptance suite.
//!
//! The oracles work on plain `Vec<Vec<usize>>` tables and recompute every
//! notion from its definition, sharing no code with `kloop-core` beyond the
//! table type used to hand data over.

pub mod fixtures;
pub mod oracle;
