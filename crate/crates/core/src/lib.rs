//! Finite loops, Bol loops, K-loops and symétrons given by explicit Cayley
//! tables.
//!
//! Everything here works on carriers `0..n` with `n <= 256`. Elements are
//! plain `usize` indices at the API boundary and bytes in storage. Loops are
//! always normalized so that the identity is element `0`.
//!
//! The crate is `no_std` and only needs `alloc`; text formats and the command
//! line live in the companion `kloop` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod closed_sets;
pub mod constructions;
pub mod enumerate;
mod error;
pub mod identities;
pub mod interp;
pub mod loops;
pub mod mlt;
mod morphism;
pub mod perm;
pub mod subquotient;
pub mod subset;
pub mod symetron;
pub mod table;

pub use crate::error::{Error, Result};
pub use crate::loops::LoopStructure;
pub use crate::perm::{GeneratedGroup, Permutation};
pub use crate::subset::SubsetMask;
pub use crate::symetron::SymetronStructure;
pub use crate::table::CayleyTable;

/// Largest carrier the library accepts. Elements are stored as bytes.
pub const MAX_ORDER: usize = 256;

/// Default cap on the size of generated permutation groups.
pub const DEFAULT_GROUP_CAP: usize = 1_000_000;
