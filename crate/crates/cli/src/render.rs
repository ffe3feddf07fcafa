//! TSV and JSON reports.
//!
//! TSV prints values with 6 significant digits, JSON with 17 so that every
//! number parses back to the same `f64`. Non-finite values become `null` in JSON.

use std::fmt::Write as _;

use ovmetrics_core::{ConsensusResult, Metric, MetricReport, SweepTable};
use serde_json::{json, Map, Number, Value};

use crate::numfmt::sig;

/// Winner cell in the `value (count)` shape: `3 (11)` for a single winner,
/// `{0.5,1} (3)` for ties.
pub fn winner_cell(result: &ConsensusResult) -> String {
    let winners =
        if result.winners.len() == 1 { result.winners[0].clone() } else { format!("{{{}}}", result.winners.join(",")) };
    format!("{winners} ({})", result.count)
}

/// JSON number for `x`, `null` when it is not finite.
pub fn number(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    let n: Number = sig(x, 17).parse().expect("formatted float is valid JSON");
    Value::Number(n)
}

/// Header line and one value line.
pub fn report_tsv(report: &MetricReport, metrics: &[Metric]) -> String {
    let names: Vec<&str> = metrics.iter().map(|m| m.name()).collect();
    let values: Vec<String> = metrics.iter().map(|&m| sig(report.get(m), 6)).collect();
    format!("{}\n{}\n", names.join("\t"), values.join("\t"))
}

/// `{"metric": value, ...}` in column order.
pub fn report_json(report: &MetricReport, metrics: &[Metric]) -> Value {
    let mut map = Map::new();
    for &m in metrics {
        map.insert(m.name().to_string(), number(report.get(m)));
    }
    Value::Object(map)
}

/// Sweep table, one row per param, then the `best` row carrying each metric's
/// best set and the winner cell.
pub fn sweep_tsv(table: &SweepTable, result: &ConsensusResult) -> String {
    let metrics: Vec<Metric> = result.per_metric_best.iter().map(|(m, _)| *m).collect();
    let mut out = String::from("param");
    for m in &metrics {
        let _ = write!(out, "\t{}", m.name());
    }
    out.push_str("\tconsensus\n");
    for (param, row) in table.params().iter().zip(table.rows()) {
        out.push_str(param);
        for &m in &metrics {
            let _ = write!(out, "\t{}", sig(row.get(m), 6));
        }
        out.push_str("\t\n");
    }
    out.push_str("best");
    for (_, set) in &result.per_metric_best {
        let _ = write!(out, "\t{}", set.join(","));
    }
    let _ = writeln!(out, "\t{}", winner_cell(result));
    out
}

/// Sweep as JSON: `params`, `table`, `per_metric_best`, `winners`, `count`, `cell`.
pub fn sweep_json(table: &SweepTable, result: &ConsensusResult) -> Value {
    let metrics: Vec<Metric> = result.per_metric_best.iter().map(|(m, _)| *m).collect();
    let rows: Vec<Value> = table
        .params()
        .iter()
        .zip(table.rows())
        .map(|(param, row)| json!({ "param": param, "metrics": report_json(row, &metrics) }))
        .collect();
    let mut best = Map::new();
    for (m, set) in &result.per_metric_best {
        best.insert(m.name().to_string(), json!(set));
    }
    json!({
        "params": table.params(),
        "table": rows,
        "per_metric_best": best,
        "winners": result.winners,
        "count": result.count,
        "cell": winner_cell(result),
    })
}
