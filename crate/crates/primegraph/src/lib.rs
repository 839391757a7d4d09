//! File formats, rendering and the command-line front-end for
//! [`primegraph_core`].

pub mod cli;
pub mod render;
pub mod table;
