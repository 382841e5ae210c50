//! Formats, generators, rendering and benchmarking.

pub mod format;
pub mod gen;
pub mod bench;
pub mod svg;
