//! The twelve network-level metrics, their names and better directions.

use core::fmt;
use core::str::FromStr;

use crate::aggregates::community_aggregates;
use crate::belonging::BelongingConfig;
use crate::cover::Cover;
use crate::global::{nq_ov_from, q_ds_ov_from, q_ov_from, q_ov_link};
use crate::graph::Graph;
use crate::local::{aggregate, local_rows};
use crate::{Error, Result};

/// Which way a metric improves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// Larger values are better.
    Larger,
    /// Smaller values are better.
    Smaller,
}

/// One of the twelve reported metrics, in report column order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[allow(missing_docs)]
pub enum Metric {
    QOv,
    NqOv,
    QOvLink,
    QDsOv,
    Ie,
    Id,
    Cnt,
    Be,
    Exp,
    Cnd,
    Fitness,
    D,
}

impl Metric {
    /// All metrics in column order.
    pub const ALL: [Metric; 12] = [
        Metric::QOv,
        Metric::NqOv,
        Metric::QOvLink,
        Metric::QDsOv,
        Metric::Ie,
        Metric::Id,
        Metric::Cnt,
        Metric::Be,
        Metric::Exp,
        Metric::Cnd,
        Metric::Fitness,
        Metric::D,
    ];

    /// Column name.
    pub fn name(self) -> &'static str {
        match self {
            Metric::QOv => "Q_ov",
            Metric::NqOv => "NQ_ov",
            Metric::QOvLink => "Q_ov^L",
            Metric::QDsOv => "Q_ds^ov",
            Metric::Ie => "IE",
            Metric::Id => "ID",
            Metric::Cnt => "CNT",
            Metric::Be => "BE",
            Metric::Exp => "EXP",
            Metric::Cnd => "CND",
            Metric::Fitness => "F",
            Metric::D => "D",
        }
    }

    /// Boundary-edges, expansion and conductance improve downwards; everything else upwards.
    pub fn direction(self) -> Direction {
        match self {
            Metric::Be | Metric::Exp | Metric::Cnd => Direction::Smaller,
            _ => Direction::Larger,
        }
    }

    /// Position in [`Metric::ALL`].
    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Error for an unrecognised metric name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownMetric;

impl fmt::Display for UnknownMetric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("unknown metric name")
    }
}

impl FromStr for Metric {
    type Err = UnknownMetric;

    /// Accepts column names case-insensitively, with `_L`/`_ds_ov` spellings for the
    /// superscripted ones.
    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        let lower = s.trim().to_ascii_lowercase();
        let metric = match lower.as_str() {
            "q_ov" | "qov" => Metric::QOv,
            "nq_ov" | "nqov" => Metric::NqOv,
            "q_ov^l" | "q_ov_l" | "qovl" => Metric::QOvLink,
            "q_ds^ov" | "q_ds_ov" | "qdsov" => Metric::QDsOv,
            "ie" => Metric::Ie,
            "id" => Metric::Id,
            "cnt" => Metric::Cnt,
            "be" => Metric::Be,
            "exp" => Metric::Exp,
            "cnd" => Metric::Cnd,
            "f" | "fitness" => Metric::Fitness,
            "d" => Metric::D,
            _ => return Err(UnknownMetric),
        };
        Ok(metric)
    }
}

/// The twelve network-level metric values for one graph, cover and config.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
#[allow(missing_docs)]
pub struct MetricReport {
    pub q_ov: f64,
    pub nq_ov: f64,
    pub q_ov_link: f64,
    pub q_ds_ov: f64,
    pub ie: f64,
    pub id: f64,
    pub cnt: f64,
    pub be: f64,
    pub exp: f64,
    pub cnd: f64,
    pub fitness: f64,
    pub d: f64,
}

impl MetricReport {
    /// Value of `metric`.
    pub fn get(&self, metric: Metric) -> f64 {
        self.values()[metric.index()]
    }

    /// Values in column order.
    pub fn values(&self) -> [f64; 12] {
        [
            self.q_ov,
            self.nq_ov,
            self.q_ov_link,
            self.q_ds_ov,
            self.ie,
            self.id,
            self.cnt,
            self.be,
            self.exp,
            self.cnd,
            self.fitness,
            self.d,
        ]
    }

    /// Report from values in column order.
    pub fn from_values(v: [f64; 12]) -> Self {
        Self {
            q_ov: v[0],
            nq_ov: v[1],
            q_ov_link: v[2],
            q_ds_ov: v[3],
            ie: v[4],
            id: v[5],
            cnt: v[6],
            be: v[7],
            exp: v[8],
            cnd: v[9],
            fitness: v[10],
            d: v[11],
        }
    }

    /// Per-metric arithmetic mean, `None` for an empty slice.
    ///
    /// Uses the running form `μ += (x − μ) / k`, so a run of identical reports
    /// averages to that report bit for bit.
    pub fn mean(reports: &[MetricReport]) -> Option<MetricReport> {
        let (first, rest) = reports.split_first()?;
        let mut mean = first.values();
        for (k, report) in rest.iter().enumerate() {
            let count = (k + 2) as f64;
            for (mu, x) in mean.iter_mut().zip(report.values()) {
                *mu += (x - *mu) / count;
            }
        }
        Some(Self::from_values(mean))
    }

    /// True when every value is finite.
    pub fn is_finite(&self) -> bool {
        self.values().iter().all(|v| v.is_finite())
    }
}

/// Computes all twelve metrics for a cover whose coefficients are already in
/// place (see [`BelongingConfig::prepare`]).
pub fn evaluate(graph: &Graph, cover: &Cover, cfg: &BelongingConfig) -> Result<MetricReport> {
    cfg.validate()?;
    let m = graph.total_edge_weight();
    if m <= 0.0 {
        return Err(Error::EmptyGraph);
    }
    let aggs = community_aggregates(graph, cover, cfg)?;
    let local = aggregate(&local_rows(&aggs))?;
    Ok(MetricReport {
        q_ov: q_ov_from(&aggs, m),
        nq_ov: nq_ov_from(&aggs),
        q_ov_link: q_ov_link(graph, cover, cfg.p)?,
        q_ds_ov: q_ds_ov_from(&aggs, m),
        ie: local.ie,
        id: local.id,
        cnt: local.cnt,
        be: local.be,
        exp: local.exp,
        cnd: local.cnd,
        fitness: local.fitness,
        d: local.d,
    })
}
