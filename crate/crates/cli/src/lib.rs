//! Graph files, generators, reports and the command line around
//! `cyclepack-core`.

pub mod app;
pub mod format;
pub mod generate;
pub mod report;

pub use app::run;
pub use format::{parse_graph, serialize_graph, AnyGraph, FormatError};
