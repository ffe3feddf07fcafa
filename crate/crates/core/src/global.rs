//! Global modularity-family metrics.
//!
//! Overlapping variants take coefficients from the cover as given (run
//! [`BelongingConfig::prepare`] first) and the belonging function from the
//! config. The disjoint baselines work straight from community labels and
//! serve as the reduction targets of the overlapping ones.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::aggregates::{check_sizes, community_aggregates, transform, CommunityAggregates};
use crate::belonging::{logistic, BelongingConfig, BelongingFunction};
use crate::cover::{Cover, CoverKind};
use crate::graph::{Graph, NodeId};
use crate::{Error, Result};

fn edge_weight(graph: &Graph) -> Result<f64> {
    let m = graph.total_edge_weight();
    if m > 0.0 {
        Ok(m)
    } else {
        Err(Error::EmptyGraph)
    }
}

/// `Q_ov = Σ_c [e_in/m − ((2e_in + e_out)/2m)²]`.
pub fn q_ov(graph: &Graph, cover: &Cover, cfg: &BelongingConfig) -> Result<f64> {
    let m = edge_weight(graph)?;
    Ok(q_ov_from(&community_aggregates(graph, cover, cfg)?, m))
}

pub(crate) fn q_ov_from(aggs: &[CommunityAggregates], m: f64) -> f64 {
    aggs.iter()
        .map(|a| {
            let share = (2.0 * a.e_in + a.e_out) / (2.0 * m);
            a.e_in / m - share * share
        })
        .sum()
}

/// Coefficient of `node` in community `cid`, 0 for non-members.
#[inline]
fn coefficient_in(cover: &Cover, node: NodeId, cid: usize) -> Option<f64> {
    let row = cover.memberships(node);
    row.binary_search_by_key(&cid, |&(c, _)| c).ok().map(|i| row[i].1)
}

/// `Σ_{i,j∈c} f(a_{i,c}, a_{j,c}) A_ij` for every community, walking each
/// member's adjacency.
fn internal_attraction(graph: &Graph, cover: &Cover, f: impl Fn(f64, f64) -> f64) -> Vec<f64> {
    cover
        .communities()
        .iter()
        .enumerate()
        .map(|(cid, community)| {
            let mut total = 0.0;
            for &(i, ai) in community.members() {
                for &(j, w) in graph.neighbors(i) {
                    if let Some(aj) = coefficient_in(cover, j, cid) {
                        total += f(ai, aj) * w;
                    }
                }
            }
            total
        })
        .collect()
}

/// `Q_ov' = (1/2m) Σ_c Σ_{i,j∈c} [A_ij − k_i k_j / 2m] f(a_{i,c}, a_{j,c})`.
///
/// The null-model double sum is evaluated per community in `O(|c|)`:
/// `(Σ k_i a_i)²` for product, `(Σ k_i)(Σ k_i a_i)` for average and
/// `(Σ k_i g(a_i))²` for logistic.
pub fn q_ov_prime(graph: &Graph, cover: &Cover, cfg: &BelongingConfig) -> Result<f64> {
    check_sizes(graph, cover)?;
    let m = edge_weight(graph)?;
    let attraction = internal_attraction(graph, cover, |a, b| cfg.value(a, b));
    let degrees = graph.degrees();
    let mut total = 0.0;
    for (community, attract) in cover.communities().iter().zip(attraction) {
        let null = match cfg.function {
            BelongingFunction::Average => {
                let k_sum: f64 = community.members().iter().map(|&(i, _)| degrees[i.0]).sum();
                let weighted: f64 = community.members().iter().map(|&(i, a)| degrees[i.0] * a).sum();
                k_sum * weighted
            }
            _ => {
                let weighted: f64 = community.members().iter().map(|&(i, a)| degrees[i.0] * transform(cfg, a)).sum();
                weighted * weighted
            }
        };
        total += attract - null / (2.0 * m);
    }
    Ok(total / (2.0 * m))
}

/// Edge-based `Q_ov^L` with the two-dimensional logistic belonging function of
/// steepness `p`, whatever `cfg.function` says.
///
/// The expected-coefficient sums run over every node of the graph, members or
/// not; with `G_c = Σ_{k∈V} g(a_{k,c})` the null term factorizes into
/// `(G_c / |V|)² (Σ_{i∈c} g(a_{i,c}) k_i)² / 2m`.
pub fn q_ov_link(graph: &Graph, cover: &Cover, p: f64) -> Result<f64> {
    check_sizes(graph, cover)?;
    let m = edge_weight(graph)?;
    let g = |x: f64| logistic(p, x);
    let attraction = internal_attraction(graph, cover, |a, b| g(a) * g(b));
    let n = graph.node_count() as f64;
    let g_zero = g(0.0);
    let degrees = graph.degrees();
    let mut total = 0.0;
    for (community, attract) in cover.communities().iter().zip(attraction) {
        let member_g: f64 = community.members().iter().map(|&(_, a)| g(a)).sum();
        let expected = (member_g + (n - community.len() as f64) * g_zero) / n;
        let weighted: f64 = community.members().iter().map(|&(i, a)| g(a) * degrees[i.0]).sum();
        total += attract - expected * expected * weighted * weighted / (2.0 * m);
    }
    Ok(total / (2.0 * m))
}

/// Overlapping localized modularity `NQ_ov`.
///
/// Each community is scored against its neighborhood: itself plus every
/// community it shares positive `e_between` with. The neighborhood edge mass
/// is `Σ_{d∈S} e_in(d) + ½ Σ_{d≠d'∈S} e_between(d, d')`. Communities with an
/// empty neighborhood contribute 0.
pub fn nq_ov(graph: &Graph, cover: &Cover, cfg: &BelongingConfig) -> Result<f64> {
    edge_weight(graph)?;
    Ok(nq_ov_from(&community_aggregates(graph, cover, cfg)?))
}

pub(crate) fn nq_ov_from(aggs: &[CommunityAggregates]) -> f64 {
    let mut stamp = vec![usize::MAX; aggs.len()];
    let mut hood: Vec<usize> = Vec::new();
    let mut total = 0.0;
    for (c, agg) in aggs.iter().enumerate() {
        hood.clear();
        hood.push(c);
        hood.extend(agg.e_between.iter().filter(|&&(_, v)| v > 0.0).map(|&(d, _)| d));
        for &d in &hood {
            stamp[d] = c;
        }
        let mut inner = 0.0;
        let mut across = 0.0;
        for &d in &hood {
            inner += aggs[d].e_in;
            across += aggs[d].e_between.iter().filter(|&&(d2, _)| stamp[d2] == c).map(|&(_, v)| v).sum::<f64>();
        }
        let neighborhood = inner + across / 2.0;
        if neighborhood > 0.0 {
            let share = (2.0 * agg.e_in + agg.e_out) / (2.0 * neighborhood);
            total += agg.e_in / neighborhood - share * share;
        }
    }
    total
}

/// Overlapping modularity density
/// `Q_ds^ov = Σ_c [(e_in/m) d_c − ((2e_in + e_out)/2m · d_c)² − Σ_{c'≠c} (e_between/2m) d_{c,c'}]`.
pub fn q_ds_ov(graph: &Graph, cover: &Cover, cfg: &BelongingConfig) -> Result<f64> {
    let m = edge_weight(graph)?;
    Ok(q_ds_ov_from(&community_aggregates(graph, cover, cfg)?, m))
}

pub(crate) fn q_ds_ov_from(aggs: &[CommunityAggregates], m: f64) -> f64 {
    aggs.iter()
        .map(|a| {
            let share = (2.0 * a.e_in + a.e_out) / (2.0 * m) * a.d_in;
            let split: f64 = a.e_between.iter().zip(&a.pair_density).map(|(&(_, e), &(_, d))| e / (2.0 * m) * d).sum();
            a.e_in / m * a.d_in - share * share - split
        })
        .sum()
}

/// Community label per node of a crisp partition, checked.
fn partition_labels(graph: &Graph, partition: &Cover) -> Result<Vec<usize>> {
    check_sizes(graph, partition)?;
    partition.check_partition()?;
    if partition.kind() != CoverKind::Crisp {
        for i in 0..partition.node_count() {
            let a = partition.memberships(NodeId(i))[0].1;
            if a != 1.0 {
                let community = partition.memberships(NodeId(i))[0].0;
                return Err(Error::NotCrisp { community, node: i, value: a });
            }
        }
    }
    Ok((0..partition.node_count()).map(|i| partition.memberships(NodeId(i))[0].0).collect())
}

struct CrispSums {
    e_in: Vec<f64>,
    e_out: Vec<f64>,
    between: Vec<BTreeMap<usize, f64>>,
    sizes: Vec<f64>,
}

fn crisp_sums(graph: &Graph, partition: &Cover) -> Result<CrispSums> {
    let label = partition_labels(graph, partition)?;
    let k = partition.len();
    let mut sums = CrispSums {
        e_in: vec![0.0; k],
        e_out: vec![0.0; k],
        between: vec![BTreeMap::new(); k],
        sizes: partition.communities().iter().map(|c| c.len() as f64).collect(),
    };
    for e in graph.edges() {
        let (x, y) = (label[e.u.0], label[e.v.0]);
        if x == y {
            sums.e_in[x] += e.weight;
        } else {
            sums.e_out[x] += e.weight;
            sums.e_out[y] += e.weight;
            *sums.between[x].entry(y).or_insert(0.0) += e.weight;
            *sums.between[y].entry(x).or_insert(0.0) += e.weight;
        }
    }
    Ok(sums)
}

/// Newman modularity of a disjoint partition covering every node.
pub fn q_disjoint(graph: &Graph, partition: &Cover) -> Result<f64> {
    let m = edge_weight(graph)?;
    let s = crisp_sums(graph, partition)?;
    Ok(s.e_in
        .iter()
        .zip(&s.e_out)
        .map(|(&e_in, &e_out)| {
            let share = (2.0 * e_in + e_out) / (2.0 * m);
            e_in / m - share * share
        })
        .sum())
}

/// Localized modularity `NQ` of a disjoint partition.
pub fn nq_disjoint(graph: &Graph, partition: &Cover) -> Result<f64> {
    edge_weight(graph)?;
    let s = crisp_sums(graph, partition)?;
    let mut total = 0.0;
    for c in 0..s.e_in.len() {
        let mut hood: Vec<usize> = s.between[c].keys().copied().collect();
        hood.push(c);
        let mut edges = 0.0;
        for &d in &hood {
            edges += s.e_in[d];
            for (other, w) in &s.between[d] {
                if *other > d && hood.contains(other) {
                    edges += w;
                }
            }
        }
        if edges > 0.0 {
            let share = (2.0 * s.e_in[c] + s.e_out[c]) / (2.0 * edges);
            total += s.e_in[c] / edges - share * share;
        }
    }
    Ok(total)
}

/// Modularity density `Q_ds` of a disjoint partition, with
/// `d_c = 2e_in / (|c|(|c|−1))` and `d_{c,c'} = e_between / (|c||c'|)`.
pub fn q_ds_disjoint(graph: &Graph, partition: &Cover) -> Result<f64> {
    let m = edge_weight(graph)?;
    let s = crisp_sums(graph, partition)?;
    let mut total = 0.0;
    for c in 0..s.e_in.len() {
        let n = s.sizes[c];
        let d = if n > 1.0 { 2.0 * s.e_in[c] / (n * (n - 1.0)) } else { 0.0 };
        let share = (2.0 * s.e_in[c] + s.e_out[c]) / (2.0 * m) * d;
        let split: f64 = s.between[c].iter().map(|(&o, &w)| w / (2.0 * m) * (w / (n * s.sizes[o]))).sum();
        total += s.e_in[c] / m * d - share * share - split;
    }
    Ok(total)
}
