//! File formats, the parallel search driver and the command line for
//! `blowup-core`.

pub mod cli;
pub mod dot;
pub mod graph6;
pub mod parallel;
pub mod report;

pub use graph6::{decode_graph6, encode_graph6, Graph6Error};
pub use report::{emit_report, Report};
