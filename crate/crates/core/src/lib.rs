//! Quality metrics for crisp and fuzzy overlapping community covers.
//!
//! The crate is `no_std` (it needs `alloc`) and holds only the numeric side:
//! an immutable weighted graph, covers with belonging coefficients, the four
//! global overlapping metrics (`Q_ov`, `NQ_ov`, `Q_ov^L`, `Q_ds^ov`) plus their
//! disjoint baselines, the eight local metrics, and the parameter-sweep
//! consensus used to pick a detection algorithm's best parameter.
//!
//! Parsing, report rendering and the command-line driver live in the
//! `ovmetrics` crate.
#![no_std]
#![warn(missing_docs)]

extern crate alloc;

pub mod aggregates;
pub mod belonging;
pub mod cover;
mod error;
pub mod global;
pub mod graph;
pub mod local;
pub mod report;
pub mod sweep;

pub use aggregates::{community_aggregates, CommunityAggregates};
pub use belonging::{logistic, BelongingConfig, BelongingFunction, CoefficientScheme, PrepareOptions};
pub use cover::{Community, Cover, CoverKind};
pub use error::Error;
pub use global::{nq_disjoint, nq_ov, q_disjoint, q_ds_disjoint, q_ds_ov, q_ov, q_ov_link, q_ov_prime};
pub use graph::{label_order, DirectedPolicy, Edge, Graph, GraphBuilder, NodeId};
pub use local::{aggregate, local_row, local_rows, LocalMetricRow, LocalSummary};
pub use report::{evaluate, Direction, Metric, MetricReport};
pub use sweep::{
    best_params, consensus, consensus_from_bests, evaluate_sweep, ConsensusResult, ParamPoint, SweepTable,
    DEFAULT_TIE_TOLERANCE,
};

/// Convenience alias used throughout the crate.
pub type Result<T, E = Error> = core::result::Result<T, E>;
