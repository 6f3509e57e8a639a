//! Balanced vertex colorings of graphs.
//!
//! A k-coloring here is any map from vertices to `1..=k`; adjacent vertices
//! may share a color. The crate computes color degree matrices, transforms
//! graphs by color-preserving 2-switches, and decides how evenly the colors
//! can be spread over every open or closed neighborhood.

pub mod balance;
pub mod caterpillar;
pub mod cdm;
pub mod error;
pub mod families;
pub mod generate;
pub mod graph;
pub mod reduction;
pub mod switching;

pub use error::{Error, Result};
