//! Per-community edge aggregates under a belonging function.
//!
//! Every global and local metric is a function of these sums:
//!
//! * `e_in(c)   = ½ Σ_{i,j∈c} f(a_{i,c}, a_{j,c}) A_ij`
//! * `e_between(c,c') = Σ_{i∈c, j∈c'} f(a_{i,c}, a_{j,c'}) A_ij` over ordered
//!   endpoint roles, so an edge whose endpoints both sit in `c` and `c'`
//!   contributes once per role assignment
//! * `e_out(c)  = Σ_{c'≠c} e_between(c, c')`
//! * `d_c = 2 e_in / Σ_{i≠j∈c} f(a_{i,c}, a_{j,c})` and
//!   `d_{c,c'} = e_between / Σ_{i∈c, j∈c'} f(a_{i,c}, a_{j,c'})`, both 0 when
//!   the pair mass is 0.
//!
//! Pair masses are evaluated in closed form from per-community moments, so the
//! whole pass costs `O(Σ_edges O_u·O_v + |C| log |C|)`.

use alloc::vec;
use alloc::vec::Vec;

use crate::belonging::{logistic, BelongingConfig, BelongingFunction};
use crate::cover::Cover;
use crate::graph::{Graph, NodeId};
use crate::{Error, Result};

/// Edge sums and densities of one community.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct CommunityAggregates {
    /// `|E_c^in|`
    pub e_in: f64,
    /// `|E_c^out|`
    pub e_out: f64,
    /// `(c', |E_{c,c'}|)` for every other community reached by an edge, ascending by `c'`.
    pub e_between: Vec<(usize, f64)>,
    /// Internal density `d_c`.
    pub d_in: f64,
    /// `(c', d_{c,c'})`, aligned with `e_between`.
    pub pair_density: Vec<(usize, f64)>,
    /// Fuzzy size `|c| = Σ a_{i,c}`.
    pub size: f64,
}

/// Sums needed for closed-form pair masses.
#[derive(Debug, Clone, Copy, Default)]
struct Moments {
    count: f64,
    // Σ a for average; Σ h(a) for product-like functions
    sum: f64,
    // Σ_{i<j} h_i h_j, accumulated term by term; (Σh)² − Σh² cancels badly
    // when one h is near 1 and the rest near 0
    cross: f64,
}

/// `f(a,b) = h(a)h(b)` for product and logistic; average has no such split.
#[inline]
pub(crate) fn transform(cfg: &BelongingConfig, a: f64) -> f64 {
    match cfg.function {
        BelongingFunction::Logistic => logistic(cfg.p, a),
        _ => a,
    }
}

#[inline]
fn combine(function: BelongingFunction, a: f64, ha: f64, b: f64, hb: f64) -> f64 {
    match function {
        BelongingFunction::Average => (a + b) / 2.0,
        BelongingFunction::Product | BelongingFunction::Logistic => ha * hb,
    }
}

fn within_mass(function: BelongingFunction, m: &Moments) -> f64 {
    match function {
        // Σ_{i≠j} (a_i + a_j)/2 = (n - 1) Σ a
        BelongingFunction::Average => (m.count - 1.0) * m.sum,
        _ => 2.0 * m.cross,
    }
}

fn between_mass(function: BelongingFunction, x: &Moments, y: &Moments) -> f64 {
    match function {
        BelongingFunction::Average => (y.count * x.sum + x.count * y.sum) / 2.0,
        _ => x.sum * y.sum,
    }
}

pub(crate) fn check_sizes(graph: &Graph, cover: &Cover) -> Result<()> {
    if graph.node_count() != cover.node_count() {
        return Err(Error::NodeOutOfRange { index: cover.node_count(), node_count: graph.node_count() });
    }
    Ok(())
}

/// Computes [`CommunityAggregates`] for every community of `cover`, in id order.
///
/// `cfg.scheme` is ignored; coefficients are taken from `cover` as they are.
pub fn community_aggregates(graph: &Graph, cover: &Cover, cfg: &BelongingConfig) -> Result<Vec<CommunityAggregates>> {
    check_sizes(graph, cover)?;
    let function = cfg.function;
    let k = cover.len();

    let mut moments = vec![Moments::default(); k];
    let mut size = vec![0.0; k];
    for (cid, community) in cover.communities().iter().enumerate() {
        let m = &mut moments[cid];
        for &(_, a) in community.members() {
            let h = match function {
                BelongingFunction::Average => a,
                _ => transform(cfg, a),
            };
            m.count += 1.0;
            m.cross += h * m.sum;
            m.sum += h;
            size[cid] += a;
        }
    }

    // h(a) per membership slot, so the edge loop never calls exp
    let transformed: Vec<Vec<f64>> = (0..cover.node_count())
        .map(|i| cover.memberships(NodeId(i)).iter().map(|&(_, a)| transform(cfg, a)).collect())
        .collect();

    let mut e_in = vec![0.0; k];
    let mut raw_between: Vec<Vec<(usize, f64)>> = vec![Vec::new(); k];
    for edge in graph.edges() {
        let (mu, mv) = (cover.memberships(edge.u), cover.memberships(edge.v));
        if mu.is_empty() || mv.is_empty() {
            continue;
        }
        let (hu, hv) = (&transformed[edge.u.0], &transformed[edge.v.0]);
        for (x, &(cu, au)) in mu.iter().enumerate() {
            for (y, &(cv, av)) in mv.iter().enumerate() {
                let value = combine(function, au, hu[x], av, hv[y]) * edge.weight;
                if cu == cv {
                    e_in[cu] += value;
                } else {
                    raw_between[cu].push((cv, value));
                    raw_between[cv].push((cu, value));
                }
            }
        }
    }

    let mut out = Vec::with_capacity(k);
    for (cid, mut raw) in raw_between.into_iter().enumerate() {
        raw.sort_by_key(|&(other, _)| other);
        let mut e_between: Vec<(usize, f64)> = Vec::new();
        for (other, value) in raw {
            match e_between.last_mut() {
                Some(last) if last.0 == other => last.1 += value,
                _ => e_between.push((other, value)),
            }
        }
        let e_out = e_between.iter().map(|&(_, v)| v).fold(0.0, |s, v| s + v);
        let within = within_mass(function, &moments[cid]);
        let d_in = if within > 0.0 { 2.0 * e_in[cid] / within } else { 0.0 };
        let pair_density = e_between
            .iter()
            .map(|&(other, v)| {
                let mass = between_mass(function, &moments[cid], &moments[other]);
                (other, if mass > 0.0 { v / mass } else { 0.0 })
            })
            .collect();
        out.push(CommunityAggregates { e_in: e_in[cid], e_out, e_between, d_in, pair_density, size: size[cid] });
    }
    Ok(out)
}
