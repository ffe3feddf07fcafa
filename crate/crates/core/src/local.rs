//! The eight local community-quality metrics and their network-level roll-up.

use alloc::vec::Vec;

use crate::aggregates::CommunityAggregates;
use crate::{Error, Result};

/// Local metrics of one community. Every ratio with a zero denominator is 0.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct LocalMetricRow {
    /// Community id.
    pub community_id: usize,
    /// Intra-edges `e_in`.
    pub ie: f64,
    /// Intra-density `d_c`.
    pub id: f64,
    /// Contraction `2 e_in / |c|`.
    pub cnt: f64,
    /// Boundary-edges `e_out`.
    pub be: f64,
    /// Expansion `e_out / |c|`.
    pub exp: f64,
    /// Conductance `e_out / (2 e_in + e_out)`.
    pub cnd: f64,
    /// Fitness `e_in / (e_in + e_out)`.
    pub fitness: f64,
    /// Average modularity degree `(2 e_in − e_out) / |c|`.
    pub d_term: f64,
}

#[inline]
fn ratio(num: f64, den: f64) -> f64 {
    if den > 0.0 {
        num / den
    } else {
        0.0
    }
}

/// Local metrics of one community from its aggregates and fuzzy size.
pub fn local_row(community_id: usize, agg: &CommunityAggregates, size: f64) -> LocalMetricRow {
    let (e_in, e_out) = (agg.e_in, agg.e_out);
    LocalMetricRow {
        community_id,
        ie: e_in,
        id: agg.d_in,
        cnt: ratio(2.0 * e_in, size),
        be: e_out,
        exp: ratio(e_out, size),
        cnd: ratio(e_out, 2.0 * e_in + e_out),
        fitness: ratio(e_in, e_in + e_out),
        d_term: ratio(2.0 * e_in - e_out, size),
    }
}

/// Rows for every community, using each aggregate's own fuzzy size.
pub fn local_rows(aggs: &[CommunityAggregates]) -> Vec<LocalMetricRow> {
    aggs.iter().enumerate().map(|(cid, a)| local_row(cid, a, a.size)).collect()
}

/// Network-level local metrics.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct LocalSummary {
    /// `Σ ie`
    pub ie: f64,
    /// mean `id`
    pub id: f64,
    /// mean `cnt`
    pub cnt: f64,
    /// `Σ be`
    pub be: f64,
    /// mean `exp`
    pub exp: f64,
    /// mean `cnd`
    pub cnd: f64,
    /// mean `fitness`
    pub fitness: f64,
    /// `Σ d_term`
    pub d: f64,
}

/// Sums the extensive metrics (IE, BE, D) and averages the rest, unweighted.
pub fn aggregate(rows: &[LocalMetricRow]) -> Result<LocalSummary> {
    if rows.is_empty() {
        return Err(Error::EmptyCover);
    }
    let n = rows.len() as f64;
    let sum = |f: fn(&LocalMetricRow) -> f64| rows.iter().map(f).sum::<f64>();
    Ok(LocalSummary {
        ie: sum(|r| r.ie),
        id: sum(|r| r.id) / n,
        cnt: sum(|r| r.cnt) / n,
        be: sum(|r| r.be),
        exp: sum(|r| r.exp) / n,
        cnd: sum(|r| r.cnd) / n,
        fitness: sum(|r| r.fitness) / n,
        d: sum(|r| r.d_term),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn agg(e_in: f64, e_out: f64, d_in: f64, size: f64) -> CommunityAggregates {
        CommunityAggregates { e_in, e_out, d_in, size, ..Default::default() }
    }

    #[test]
    fn barbell_triangle() {
        let r = local_row(0, &agg(3.0, 1.0, 1.0, 3.0), 3.0);
        assert_eq!(r.ie, 3.0);
        assert_eq!(r.id, 1.0);
        assert_eq!(r.cnt, 2.0);
        assert_eq!(r.be, 1.0);
        assert_eq!(r.exp, 1.0 / 3.0);
        assert_eq!(r.cnd, 1.0 / 7.0);
        assert_eq!(r.fitness, 0.75);
        assert_eq!(r.d_term, 5.0 / 3.0);

        let s = aggregate(&[r, LocalMetricRow { community_id: 1, ..r }]).unwrap();
        assert_eq!(s.ie, 6.0);
        assert_eq!(s.be, 2.0);
        assert_eq!(s.d, 10.0 / 3.0);
        assert_eq!(s.cnd, 1.0 / 7.0);
        assert_eq!(s.fitness, 0.75);
        assert_eq!(s.cnt, 2.0);
        assert_eq!(s.id, 1.0);
        assert_eq!(s.exp, 1.0 / 3.0);
    }

    #[test]
    fn whole_graph_has_no_boundary() {
        let r = local_row(0, &agg(7.0, 0.0, 7.0 / 15.0, 6.0), 6.0);
        assert_eq!((r.be, r.exp, r.cnd, r.fitness), (0.0, 0.0, 0.0, 1.0));
        let s = aggregate(&[r]).unwrap();
        assert_eq!(s.ie, r.ie);
        assert_eq!(s.fitness, r.fitness);
        assert_eq!(s.d, r.d_term);
    }

    #[test]
    fn isolated_singleton_is_all_zero() {
        let r = local_row(4, &agg(0.0, 0.0, 0.0, 1.0), 1.0);
        assert_eq!(r, LocalMetricRow { community_id: 4, ..Default::default() });
    }

    #[test]
    fn conductance_mean() {
        let a = LocalMetricRow { cnd: 0.2, ..Default::default() };
        let b = LocalMetricRow { cnd: 0.4, ..Default::default() };
        assert!((aggregate(&[a, b]).unwrap().cnd - 0.3).abs() < 1e-15);
    }

    #[test]
    fn empty_is_error() {
        assert_eq!(aggregate(&[]), Err(Error::EmptyCover));
    }
}
