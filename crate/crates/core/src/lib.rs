//! Prime graphs (Gruenberg–Kegel graphs) of alternating and symmetric groups,
//! their degree patterns, and the arithmetic behind lower bounds for the
//! number of groups sharing an order and a degree pattern with `A_m` or `S_m`.
//!
//! The crate is `no_std` and only needs `alloc`. File IO, JSON output and the
//! command-line front-end live in the `primegraph` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod arith;
pub mod census;
pub mod coincidence;
pub mod error;
pub mod families;
pub mod graph;
pub mod group_counts;
pub mod spectrum;

pub use error::{Error, Result};
