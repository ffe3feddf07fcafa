//! Metric tables as TSV.
//!
//! Layout: a header `param` + metric names (+ an optional trailing
//! `consensus`), one row per param, and optionally a final `best` row. The
//! reader ignores the `best` row and the `consensus` column, so a rendered
//! sweep report can be fed back for a consensus-only run.

use ovmetrics_core::{Metric, MetricReport, SweepTable};

use crate::ParseError;

/// A table read from TSV together with the metric columns it carried.
#[derive(Debug, Clone, PartialEq)]
pub struct LoadedTable {
    pub table: SweepTable,
    /// Metric columns present in the file, in file order. Absent metrics hold NaN.
    pub metrics: Vec<Metric>,
}

/// Reads a metric table.
pub fn parse(text: &str) -> Result<LoadedTable, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'));
    let (header_line, header) = lines.next().ok_or_else(|| ParseError::new(0, "table is empty"))?;
    let cols: Vec<&str> = header.split('\t').map(str::trim).collect();
    if cols.first() != Some(&"param") {
        return Err(ParseError::new(header_line, "header must start with `param`"));
    }
    let mut metrics = Vec::new();
    let mut consensus_col = None;
    for (i, name) in cols.iter().enumerate().skip(1) {
        if *name == "consensus" {
            consensus_col = Some(i);
            continue;
        }
        let m: Metric =
            name.parse().map_err(|_| ParseError::new(header_line, format!("unknown metric column `{name}`")))?;
        if metrics.contains(&m) {
            return Err(ParseError::new(header_line, format!("metric column `{name}` repeated")));
        }
        metrics.push(m);
    }
    if metrics.is_empty() {
        return Err(ParseError::new(header_line, "no metric columns"));
    }

    let mut rows = Vec::new();
    for (line_no, line) in lines {
        let cells: Vec<&str> = line.split('\t').map(str::trim).collect();
        if cells[0] == "best" {
            continue;
        }
        if cells.len() != cols.len() && !(consensus_col == Some(cols.len() - 1) && cells.len() == cols.len() - 1) {
            return Err(ParseError::new(line_no, format!("expected {} fields, got {}", cols.len(), cells.len())));
        }
        let mut values = [f64::NAN; 12];
        let mut k = 0;
        for (i, cell) in cells.iter().enumerate().skip(1) {
            if Some(i) == consensus_col {
                continue;
            }
            let v: f64 = cell.parse().map_err(|_| ParseError::new(line_no, format!("invalid number `{cell}`")))?;
            values[metrics[k].index()] = v;
            k += 1;
        }
        rows.push((line_no, cells[0].to_string(), MetricReport::from_values(values)));
    }
    if rows.is_empty() {
        return Err(ParseError::new(header_line, "table has no parameter rows"));
    }
    let last_line = rows.last().map(|r| r.0).unwrap_or(header_line);
    let table = SweepTable::new(rows.into_iter().map(|(_, p, r)| (p, r)).collect())
        .map_err(|e| ParseError::new(last_line, e.to_string()))?;
    Ok(LoadedTable { table, metrics })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_rendered_layout() {
        let text = "param\tQ_ov\tCND\tconsensus\n3\t0.4\t0.1\t\n5\t0.2\t0.3\t\nbest\t3\t3\t3 (2)\n";
        let t = parse(text).unwrap();
        assert_eq!(t.metrics, [Metric::QOv, Metric::Cnd]);
        assert_eq!(t.table.params(), ["3", "5"]);
        assert_eq!(t.table.column(Metric::Cnd), [0.1, 0.3]);
        assert!(t.table.column(Metric::Ie).iter().all(|v| v.is_nan()));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse("").is_err());
        assert!(parse("x\tQ_ov\n").is_err());
        assert!(parse("param\tnope\n1\t2\n").is_err());
        assert_eq!(parse("param\tQ_ov\n1\t2\n2\tz\n").unwrap_err().line, 3);
        assert_eq!(parse("param\tQ_ov\n1\t2\n1\t3\n").unwrap_err().line, 3);
        assert!(parse("param\tQ_ov\n").is_err());
    }
}
