//! Parallel graph vertex coloring on CSR graphs.
//!
//! The crate provides two algorithm families and the plumbing to benchmark
//! them against each other:
//!
//! * **Speculative greedy**: color optimistically in parallel, detect
//!   conflicting edges, uncolor one endpoint per conflict and retry. Both a
//!   topology-driven driver (sweeps every vertex each iteration) and a
//!   work-efficient data-driven driver (double-buffered worklist with
//!   prefix-sum compaction) are included, together with the id-based and
//!   degree-based conflict resolution policies.
//! * **Independent set**: Jones–Plassmann with per-round random priorities,
//!   and the multi-hash variant that extracts `2N` independent sets per
//!   round from local maxima/minima of `N` hash values.
//!
//! Supporting modules handle CSR construction, Matrix Market ingestion,
//! R-MAT synthesis, coloring verification and machine-readable run reports.

pub mod error;
pub mod graph;
pub mod greedy;
pub mod harness;
pub mod independent_set;
pub mod speculative;

mod rng;

pub use error::Error;
pub use graph::{CsrGraph, DegreeStats, EdgeList, RmatParams};
pub use greedy::{ColorRead, Coloring, UNCOLORED};
pub use harness::{RunReport, Violation};
pub use speculative::{BalanceMode, ConflictPolicy, ConvergenceTrace, SpecConfig, Worklist};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
