//! Verification kernel for Turán and spectral Turán problems on edge
//! blow-ups of star forests.
//!
//! The crate is `no_std` (with `alloc`): graph values, the named graph
//! families, exact counting formulas, Perron roots, pattern containment and
//! exhaustive desk-scale searches. File formats and the command line live in
//! the `blowup-lab` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod combinatorics;
pub mod constructions;
mod error;
pub mod freeness;
pub mod graph;
pub mod search;
pub mod spectral;

pub use constructions::StarForestSpec;
pub use error::{Error, GraphError, Result};
pub use graph::{Graph, VertexSet};
pub use spectral::{SpectralConfig, SpectralResult};
