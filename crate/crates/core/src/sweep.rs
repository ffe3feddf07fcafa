//! Parameter sweeps and cross-metric consensus.
//!
//! A sweep evaluates every metric at each parameter value of a detection
//! algorithm, averaging over repeated runs. Each metric then nominates the
//! parameter(s) where it is best, and the consensus winner is the parameter
//! nominated by the most metrics.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;

use crate::belonging::{BelongingConfig, PrepareOptions};
use crate::cover::Cover;
use crate::graph::Graph;
use crate::report::{evaluate, Direction, Metric, MetricReport};
use crate::{Error, Result};

/// Absolute tolerance under which two averaged metric values count as tied.
pub const DEFAULT_TIE_TOLERANCE: f64 = 1e-9;

/// One parameter value with the covers of its repeated runs.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamPoint {
    /// Parameter label, kept verbatim (`"0.50"` and `"0.5"` are different).
    pub param: String,
    /// One cover per run; must not be empty.
    pub covers: Vec<Cover>,
}

/// Averaged metric values per parameter, in sweep order.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepTable {
    params: Vec<String>,
    rows: Vec<MetricReport>,
}

impl SweepTable {
    /// Builds a table from `(param, report)` rows. Params must be unique and
    /// the table non-empty.
    pub fn new(rows: Vec<(String, MetricReport)>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::EmptySweep);
        }
        let mut params: Vec<String> = Vec::with_capacity(rows.len());
        let mut values = Vec::with_capacity(rows.len());
        for (param, report) in rows {
            if params.contains(&param) {
                return Err(Error::DuplicateParam(param));
            }
            params.push(param);
            values.push(report);
        }
        Ok(Self { params, rows: values })
    }

    /// Parameter labels in sweep order.
    pub fn params(&self) -> &[String] {
        &self.params
    }

    /// Averaged report per parameter, aligned with [`SweepTable::params`].
    pub fn rows(&self) -> &[MetricReport] {
        &self.rows
    }

    /// Values of `metric` across the sweep.
    pub fn column(&self, metric: Metric) -> Vec<f64> {
        self.rows.iter().map(|r| r.get(metric)).collect()
    }

    /// Better direction of each metric, in column order.
    pub fn directions(&self) -> [Direction; 12] {
        Metric::ALL.map(Metric::direction)
    }
}

/// Prepares and evaluates every cover of every point, averaging runs per point.
///
/// Failures are wrapped in [`Error::AtParam`] naming the offending parameter.
pub fn evaluate_sweep(
    graph: &Graph,
    points: &[ParamPoint],
    cfg: &BelongingConfig,
    options: PrepareOptions,
) -> Result<SweepTable> {
    if points.is_empty() {
        return Err(Error::EmptySweep);
    }
    let mut rows = Vec::with_capacity(points.len());
    for point in points {
        let at = |source: Error| Error::AtParam { param: point.param.clone(), source: Box::new(source) };
        if point.covers.is_empty() {
            return Err(Error::EmptyPoint(point.param.clone()));
        }
        let mut reports = Vec::with_capacity(point.covers.len());
        for cover in &point.covers {
            let prepared = cfg.prepare(graph, cover, options).map_err(at)?;
            reports.push(evaluate(graph, &prepared, cfg).map_err(at)?);
        }
        let mean = MetricReport::mean(&reports).expect("point has at least one cover");
        rows.push((point.param.clone(), mean));
    }
    SweepTable::new(rows)
}

/// Indices of the best entries of `values` in `direction`, ties within
/// `tolerance` of the optimum included. Empty input gives an empty result.
pub fn best_in_column(values: &[f64], direction: Direction, tolerance: f64) -> Vec<usize> {
    let optimum = match direction {
        Direction::Larger => values.iter().copied().fold(f64::NEG_INFINITY, f64::max),
        Direction::Smaller => values.iter().copied().fold(f64::INFINITY, f64::min),
    };
    values.iter().enumerate().filter(|&(_, &v)| (v - optimum).abs() <= tolerance).map(|(i, _)| i).collect()
}

/// Parameters at which `metric` is best, in sweep order.
pub fn best_params(table: &SweepTable, metric: Metric, tolerance: f64) -> Vec<String> {
    best_in_column(&table.column(metric), metric.direction(), tolerance)
        .into_iter()
        .map(|i| table.params[i].clone())
        .collect()
}

/// Per-metric best sets and the parameters most metrics agree on.
#[derive(Debug, Clone, PartialEq)]
pub struct ConsensusResult {
    /// Best parameter set of each metric, in column order.
    pub per_metric_best: Vec<(Metric, Vec<String>)>,
    /// Parameters contained in the largest number of best sets, in sweep order.
    pub winners: Vec<String>,
    /// How many best sets contain each winner.
    pub count: usize,
}

/// Consensus over all twelve metrics of `table`.
pub fn consensus(table: &SweepTable, tolerance: f64) -> ConsensusResult {
    let bests = Metric::ALL.iter().map(|&m| (m, best_params(table, m, tolerance))).collect();
    consensus_from_bests(table.params(), bests)
}

/// Consensus from precomputed best sets. Each best set gives one vote to every
/// parameter it contains; winners follow `order`, with labels missing from
/// `order` appended in first-seen order.
pub fn consensus_from_bests(order: &[String], per_metric_best: Vec<(Metric, Vec<String>)>) -> ConsensusResult {
    let mut labels: Vec<String> = order.to_vec();
    for (_, set) in &per_metric_best {
        for p in set {
            if !labels.contains(p) {
                labels.push(p.clone());
            }
        }
    }
    let votes: Vec<usize> =
        labels.iter().map(|label| per_metric_best.iter().filter(|(_, set)| set.contains(label)).count()).collect();
    let count = votes.iter().copied().max().unwrap_or(0);
    let winners = if count == 0 {
        Vec::new()
    } else {
        labels.iter().zip(&votes).filter(|&(_, &v)| v == count).map(|(l, _)| l.clone()).collect()
    };
    ConsensusResult { per_metric_best, winners, count }
}
