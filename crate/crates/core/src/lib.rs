//! Twin-cover kernelization for H-coloring.
//!
//! The crate computes twin decompositions and twin covers, expresses the
//! colorings of a twin class's neighborhood as GF(2) polynomial constraints,
//! and removes edges between classes whenever the constraint span is
//! unchanged. Exact exponential solvers serve as oracles, and a
//! cross-composition builder produces instances for the matching lower bound.

pub mod error;
pub mod guards;
pub mod graph;
pub mod gf2;
pub mod constraints;
pub mod kernel;
pub mod oracle;
pub mod compose;
pub mod io;

pub use error::{Error, Result};
pub use guards::Guards;
