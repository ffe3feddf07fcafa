#![allow(dead_code)]

pub mod fixtures;
pub mod oracle;

use ovmetrics_core::{Cover, DirectedPolicy, Graph, NodeId};

pub fn graph(n: usize, edges: &[(usize, usize, f64)]) -> Graph {
    Graph::from_index_edges(n, edges.iter().copied(), DirectedPolicy::Symmetrize).unwrap()
}

pub fn crisp(n: usize, communities: &[Vec<usize>]) -> Cover {
    Cover::crisp(n, communities.iter().map(|c| c.iter().copied().map(NodeId).collect()).collect()).unwrap()
}

/// Fuzzy cover from a `communities × n` coefficient matrix.
pub fn fuzzy(coef: &[Vec<f64>]) -> Cover {
    let n = coef.first().map_or(0, Vec::len);
    let rows = coef
        .iter()
        .map(|row| row.iter().enumerate().filter(|(_, &a)| a > 0.0).map(|(i, &a)| (NodeId(i), a)).collect())
        .collect();
    Cover::fuzzy(n, rows).unwrap()
}

/// Dense indicator matrix of a crisp cover.
pub fn indicator(n: usize, communities: &[Vec<usize>]) -> Vec<Vec<f64>> {
    communities
        .iter()
        .map(|c| {
            let mut row = vec![0.0; n];
            for &i in c {
                row[i] = 1.0;
            }
            row
        })
        .collect()
}

pub fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * (1.0 + a.abs().max(b.abs()))
}
