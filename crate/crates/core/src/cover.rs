//! Crisp and fuzzy community covers.
//!
//! A [`Cover`] is a list of communities, each mapping member nodes to a
//! belonging coefficient in `(0, 1]`. Zero coefficients are never stored, so
//! membership always means a positive coefficient. Crisp covers are the
//! special case where every stored coefficient is exactly 1.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, NodeId};
use crate::{Error, Result};

/// Whether coefficients are binary or weighted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverKind {
    /// Every coefficient is 1.
    Crisp,
    /// Arbitrary coefficients in `(0, 1]`.
    Fuzzy,
}

/// One community: members sorted by node index with their coefficients.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Community {
    members: Vec<(NodeId, f64)>,
}

impl Community {
    /// Members and coefficients, sorted by node.
    pub fn members(&self) -> &[(NodeId, f64)] {
        &self.members
    }

    /// Number of member nodes.
    pub fn len(&self) -> usize {
        self.members.len()
    }

    /// True for a community without members.
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Fuzzy size `|c| = Σ_{i∈c} a_{i,c}`.
    pub fn fuzzy_size(&self) -> f64 {
        self.members.iter().map(|&(_, a)| a).fold(0.0, |s, a| s + a)
    }

    /// Coefficient of `node`, 0 for non-members.
    pub fn coefficient(&self, node: NodeId) -> f64 {
        self.members.binary_search_by_key(&node, |&(n, _)| n).map(|i| self.members[i].1).unwrap_or(0.0)
    }
}

/// A set of possibly overlapping communities over `node_count` nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct Cover {
    node_count: usize,
    kind: CoverKind,
    communities: Vec<Community>,
    // per-node (community, coefficient), CSR layout, communities ascending
    offsets: Vec<usize>,
    memberships: Vec<(usize, f64)>,
}

impl Cover {
    /// Crisp cover from member lists. Duplicate members within a community are an error.
    pub fn crisp(node_count: usize, communities: Vec<Vec<NodeId>>) -> Result<Self> {
        let communities =
            communities.into_iter().map(|members| members.into_iter().map(|n| (n, 1.0)).collect()).collect();
        Self::fuzzy(node_count, communities).map(|mut c| {
            c.kind = CoverKind::Crisp;
            c
        })
    }

    /// Fuzzy cover from `(node, coefficient)` lists. Coefficients must lie in
    /// `[0, 1]`; zeros are dropped. Row sums are not checked here.
    pub fn fuzzy(node_count: usize, communities: Vec<Vec<(NodeId, f64)>>) -> Result<Self> {
        let mut built = Vec::with_capacity(communities.len());
        for (cid, mut members) in communities.into_iter().enumerate() {
            for &(node, a) in &members {
                if node.0 >= node_count {
                    return Err(Error::NodeOutOfRange { index: node.0, node_count });
                }
                if !(0.0..=1.0).contains(&a) {
                    return Err(Error::CoefficientOutOfRange { community: cid, node: node.0, value: a });
                }
            }
            members.sort_by_key(|&(n, _)| n);
            if let Some(w) = members.windows(2).find(|w| w[0].0 == w[1].0) {
                return Err(Error::DuplicateMember { community: cid, node: w[0].0 .0 });
            }
            members.retain(|&(_, a)| a > 0.0);
            built.push(Community { members });
        }
        Ok(Self::from_communities(node_count, CoverKind::Fuzzy, built))
    }

    fn from_communities(node_count: usize, kind: CoverKind, communities: Vec<Community>) -> Self {
        let mut offsets = vec![0usize; node_count + 1];
        for c in &communities {
            for &(n, _) in &c.members {
                offsets[n.0 + 1] += 1;
            }
        }
        for i in 0..node_count {
            offsets[i + 1] += offsets[i];
        }
        let mut cursor = offsets.clone();
        let mut memberships = vec![(0usize, 0.0); offsets[node_count]];
        for (cid, c) in communities.iter().enumerate() {
            for &(n, a) in &c.members {
                memberships[cursor[n.0]] = (cid, a);
                cursor[n.0] += 1;
            }
        }
        Self { node_count, kind, communities, offsets, memberships }
    }

    /// Number of nodes in the underlying graph.
    pub fn node_count(&self) -> usize {
        self.node_count
    }

    /// Crisp or fuzzy.
    pub fn kind(&self) -> CoverKind {
        self.kind
    }

    /// All communities, in id order.
    pub fn communities(&self) -> &[Community] {
        &self.communities
    }

    /// Number of communities `|C|`.
    pub fn len(&self) -> usize {
        self.communities.len()
    }

    /// True when there are no communities.
    pub fn is_empty(&self) -> bool {
        self.communities.is_empty()
    }

    /// `(community, coefficient)` pairs of `node`, ascending by community.
    #[inline]
    pub fn memberships(&self, node: NodeId) -> &[(usize, f64)] {
        &self.memberships[self.offsets[node.0]..self.offsets[node.0 + 1]]
    }

    /// `O_i`, the number of communities containing `node`.
    pub fn occupancy(&self, node: NodeId) -> usize {
        self.offsets[node.0 + 1] - self.offsets[node.0]
    }

    /// Nodes that belong to no community, ascending.
    pub fn uncovered(&self) -> Vec<NodeId> {
        (0..self.node_count).map(NodeId).filter(|&n| self.occupancy(n) == 0).collect()
    }

    /// True when no node belongs to two communities.
    pub fn is_disjoint(&self) -> bool {
        (0..self.node_count).all(|i| self.occupancy(NodeId(i)) <= 1)
    }

    /// Fails unless the cover is a partition: every node in exactly one community.
    pub fn check_partition(&self) -> Result<()> {
        for i in 0..self.node_count {
            match self.occupancy(NodeId(i)) {
                0 => return Err(Error::Uncovered { node: i }),
                1 => {}
                _ => return Err(Error::Overlapping { node: i }),
            }
        }
        Ok(())
    }

    /// Fails if some covered node's coefficients do not sum to 1 within `tolerance`.
    pub fn check_row_sums(&self, tolerance: f64) -> Result<()> {
        for i in 0..self.node_count {
            let row = self.memberships(NodeId(i));
            if row.is_empty() {
                continue;
            }
            let sum: f64 = row.iter().map(|&(_, a)| a).sum();
            if (sum - 1.0).abs() > tolerance || sum.is_nan() {
                return Err(Error::RowSum { node: i, sum });
            }
        }
        Ok(())
    }

    /// Rescales each covered node's coefficients to sum to 1.
    pub fn normalized(&self) -> Cover {
        let sums: Vec<f64> =
            (0..self.node_count).map(|i| self.memberships(NodeId(i)).iter().map(|&(_, a)| a).sum()).collect();
        let communities = self
            .communities
            .iter()
            .map(|c| Community { members: c.members.iter().map(|&(n, a)| (n, a / sums[n.0])).collect() })
            .collect();
        let kind =
            if self.kind == CoverKind::Crisp && self.is_disjoint() { CoverKind::Crisp } else { CoverKind::Fuzzy };
        Self::from_communities(self.node_count, kind, communities)
    }

    fn require_crisp(&self) -> Result<()> {
        if self.kind == CoverKind::Crisp {
            Ok(())
        } else {
            Err(Error::ExpectedCrisp)
        }
    }

    /// Reciprocal-occupancy coefficients `a_{i,c} = 1 / O_i`.
    pub fn assign_v1(&self) -> Result<Cover> {
        self.require_crisp()?;
        let communities = self
            .communities
            .iter()
            .map(|c| Community {
                members: c.members.iter().map(|&(n, _)| (n, 1.0 / self.occupancy(n) as f64)).collect(),
            })
            .collect();
        Ok(Self::from_communities(self.node_count, CoverKind::Fuzzy, communities))
    }

    /// Node-strength coefficients `a_{i,c} = Σ_{k∈c} A_ik / Σ_{c'∈C_i} Σ_{k∈c'} A_ik`.
    ///
    /// A node in a single community gets coefficient 1 even when it has no
    /// edges into it. A node in several communities with no edges into any of
    /// them is an error unless `fallback` is set, in which case it gets `1 / O_i`.
    /// Memberships whose strength is 0 are dropped.
    pub fn assign_v2(&self, graph: &Graph, fallback: bool) -> Result<Cover> {
        self.require_crisp()?;
        if graph.node_count() != self.node_count {
            return Err(Error::NodeOutOfRange { index: self.node_count, node_count: graph.node_count() });
        }
        let mut coefficient: Vec<Vec<f64>> = self.communities.iter().map(|c| vec![0.0; c.len()]).collect();
        let mut strength: Vec<f64> = Vec::new();
        for i in 0..self.node_count {
            let node = NodeId(i);
            let own = self.memberships(node);
            if own.is_empty() {
                continue;
            }
            strength.clear();
            strength.resize(own.len(), 0.0);
            for &(k, w) in graph.neighbors(node) {
                let theirs = self.memberships(k);
                // both membership lists are sorted by community id
                let (mut x, mut y) = (0, 0);
                while x < own.len() && y < theirs.len() {
                    match own[x].0.cmp(&theirs[y].0) {
                        core::cmp::Ordering::Less => x += 1,
                        core::cmp::Ordering::Greater => y += 1,
                        core::cmp::Ordering::Equal => {
                            strength[x] += w;
                            x += 1;
                            y += 1;
                        }
                    }
                }
            }
            let total: f64 = strength.iter().sum();
            for (slot, &(cid, _)) in own.iter().enumerate() {
                let a = if own.len() == 1 {
                    1.0
                } else if total > 0.0 {
                    strength[slot] / total
                } else if fallback {
                    1.0 / own.len() as f64
                } else {
                    return Err(Error::ZeroStrength { node: i, communities: own.len() });
                };
                let pos = self.communities[cid].members.binary_search_by_key(&node, |&(n, _)| n).unwrap_or(0);
                coefficient[cid][pos] = a;
            }
        }
        let communities = self
            .communities
            .iter()
            .zip(coefficient)
            .map(|(c, coefs)| Community {
                members: c.members.iter().zip(coefs).filter(|(_, a)| *a > 0.0).map(|(&(n, _), a)| (n, a)).collect(),
            })
            .collect();
        Ok(Self::from_communities(self.node_count, CoverKind::Fuzzy, communities))
    }

    /// Keeps memberships with `a_{i,c} > threshold` as crisp memberships.
    ///
    /// Communities emptied by the cut are removed. Returns the new cover and the
    /// nodes that were covered before but lost every membership.
    pub fn to_crisp(&self, threshold: f64) -> (Cover, Vec<NodeId>) {
        let communities: Vec<Community> = self
            .communities
            .iter()
            .map(|c| Community {
                members: c.members.iter().filter(|&&(_, a)| a > threshold).map(|&(n, _)| (n, 1.0)).collect(),
            })
            .filter(|c| !c.is_empty())
            .collect();
        let crisp = Self::from_communities(self.node_count, CoverKind::Crisp, communities);
        let dropped =
            (0..self.node_count).map(NodeId).filter(|&n| self.occupancy(n) > 0 && crisp.occupancy(n) == 0).collect();
        (crisp, dropped)
    }

    /// Appends a one-node community (coefficient 1) for every uncovered node of `graph`.
    pub fn with_singletons(&self, graph: &Graph) -> Cover {
        let n = graph.node_count().max(self.node_count);
        let mut communities = self.communities.clone();
        for i in 0..n {
            if i >= self.node_count || self.occupancy(NodeId(i)) == 0 {
                communities.push(Community { members: vec![(NodeId(i), 1.0)] });
            }
        }
        Self::from_communities(n, self.kind, communities)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::DirectedPolicy;

    fn ids(v: &[usize]) -> Vec<NodeId> {
        v.iter().copied().map(NodeId).collect()
    }

    fn barbell() -> Graph {
        // labels 0..5 stand for 1..6
        Graph::from_index_edges(
            6,
            [(0, 1, 1.0), (0, 2, 1.0), (1, 2, 1.0), (3, 4, 1.0), (3, 5, 1.0), (4, 5, 1.0), (2, 3, 1.0)],
            DirectedPolicy::Reject,
        )
        .unwrap()
    }

    fn overlap() -> Cover {
        Cover::crisp(6, vec![ids(&[0, 1, 2, 3]), ids(&[2, 3, 4, 5])]).unwrap()
    }

    #[test]
    fn occupancy_counts_overlap() {
        let c = overlap();
        assert_eq!(c.occupancy(NodeId(2)), 2);
        assert_eq!(c.occupancy(NodeId(0)), 1);
        assert!(!c.is_disjoint());
        assert_eq!(c.kind(), CoverKind::Crisp);
    }

    #[test]
    fn v1_reciprocal() {
        let f = overlap().assign_v1().unwrap();
        assert_eq!(f.communities()[0].coefficient(NodeId(2)), 0.5);
        assert_eq!(f.communities()[1].coefficient(NodeId(2)), 0.5);
        assert_eq!(f.communities()[0].coefficient(NodeId(0)), 1.0);
        f.check_row_sums(1e-12).unwrap();

        let four = Cover::crisp(1, vec![ids(&[0]), ids(&[0]), ids(&[0]), ids(&[0])]).unwrap().assign_v1().unwrap();
        assert!(four.memberships(NodeId(0)).iter().all(|&(_, a)| a == 0.25));
    }

    #[test]
    fn v2_node_strength() {
        let f = overlap().assign_v2(&barbell(), false).unwrap();
        assert!((f.communities()[0].coefficient(NodeId(2)) - 0.75).abs() < 1e-12);
        assert!((f.communities()[1].coefficient(NodeId(2)) - 0.25).abs() < 1e-12);
        // node 3 (label 4) reaches B through 3, 5 and 6 and A through 3 only
        assert!((f.communities()[0].coefficient(NodeId(3)) - 0.25).abs() < 1e-12);
        assert!((f.communities()[1].coefficient(NodeId(3)) - 0.75).abs() < 1e-12);
        f.check_row_sums(1e-12).unwrap();
    }

    #[test]
    fn v2_on_disjoint_is_all_ones() {
        let c = Cover::crisp(6, vec![ids(&[0, 1, 2]), ids(&[3, 4, 5])]).unwrap();
        let f = c.assign_v2(&barbell(), false).unwrap();
        assert!(f.communities().iter().all(|c| c.members().iter().all(|&(_, a)| a == 1.0)));
    }

    #[test]
    fn v2_zero_denominator() {
        // node 0 only touches node 1, which shares neither of node 0's communities
        let g = Graph::from_index_edges(3, [(0, 1, 1.0)], DirectedPolicy::Reject).unwrap();
        let c = Cover::crisp(3, vec![ids(&[0, 2]), ids(&[0, 2]), ids(&[1])]).unwrap();
        assert_eq!(c.assign_v2(&g, false).unwrap_err(), Error::ZeroStrength { node: 0, communities: 2 });
        let f = c.assign_v2(&g, true).unwrap();
        assert_eq!(f.communities()[0].coefficient(NodeId(0)), 0.5);
    }

    #[test]
    fn fuzzy_parse_rules() {
        let f =
            Cover::fuzzy(6, vec![vec![(NodeId(0), 1.0), (NodeId(2), 0.5)], vec![(NodeId(2), 0.5), (NodeId(4), 1.0)]])
                .unwrap();
        let row: f64 = f.memberships(NodeId(2)).iter().map(|&(_, a)| a).sum();
        assert_eq!(row, 1.0);
        assert!(matches!(Cover::fuzzy(2, vec![vec![(NodeId(0), 1.5)]]), Err(Error::CoefficientOutOfRange { .. })));
        assert!(matches!(
            Cover::crisp(2, vec![ids(&[0, 1, 0])]),
            Err(Error::DuplicateMember { community: 0, node: 0 })
        ));
        let z = Cover::fuzzy(2, vec![vec![(NodeId(0), 0.0), (NodeId(1), 1.0)]]).unwrap();
        assert_eq!(z.communities()[0].len(), 1);
    }

    #[test]
    fn threshold_is_strict() {
        let f = overlap().assign_v1().unwrap();
        let (keep, dropped) = f.to_crisp(0.4);
        assert_eq!(keep.occupancy(NodeId(2)), 2);
        assert!(dropped.is_empty());
        let (cut, dropped) = f.to_crisp(0.5);
        assert_eq!(cut.occupancy(NodeId(2)), 0);
        assert_eq!(dropped, ids(&[2, 3]));
        let (all, _) = f.to_crisp(0.0);
        assert_eq!(all, overlap());
        let (none, _) = f.to_crisp(1.0);
        assert!(none.is_empty());
    }

    #[test]
    fn crisp_as_fuzzy_threshold_identity() {
        let c = Cover::crisp(6, vec![ids(&[0, 1, 2]), ids(&[3, 4, 5])]).unwrap();
        assert_eq!(c.to_crisp(0.99).0, c);
    }

    #[test]
    fn singletons_fill_gaps() {
        let g = barbell();
        let c = Cover::crisp(6, vec![ids(&[0, 1, 2, 3])]).unwrap().with_singletons(&g);
        assert_eq!(c.len(), 3);
        assert_eq!(c.communities()[1].members(), &[(NodeId(4), 1.0)]);
        assert_eq!(c.communities()[2].members(), &[(NodeId(5), 1.0)]);
        c.check_partition().unwrap();

        let full = overlap();
        assert_eq!(full.with_singletons(&g), full);
        let empty = Cover::crisp(6, vec![]).unwrap().with_singletons(&g);
        assert_eq!(empty.len(), 6);
    }

    #[test]
    fn fuzzy_sizes() {
        let c = Cover::crisp(5, vec![ids(&[0, 1, 2, 3, 4])]).unwrap();
        assert_eq!(c.communities()[0].fuzzy_size(), 5.0);
        let f = Cover::fuzzy(6, vec![vec![(NodeId(2), 0.5), (NodeId(3), 0.5), (NodeId(4), 1.0), (NodeId(5), 1.0)]])
            .unwrap();
        assert_eq!(f.communities()[0].fuzzy_size(), 3.0);
        assert_eq!(Community::default().fuzzy_size(), 0.0);
    }

    #[test]
    fn partition_checks() {
        assert_eq!(overlap().check_partition(), Err(Error::Overlapping { node: 2 }));
        let partial = Cover::crisp(6, vec![ids(&[0, 1])]).unwrap();
        assert_eq!(partial.check_partition(), Err(Error::Uncovered { node: 2 }));
    }

    #[test]
    fn normalize_rescales_rows() {
        let f = Cover::fuzzy(2, vec![vec![(NodeId(0), 0.2)], vec![(NodeId(0), 0.6), (NodeId(1), 0.5)]]).unwrap();
        assert!(f.check_row_sums(1e-9).is_err());
        let n = f.normalized();
        n.check_row_sums(1e-12).unwrap();
        assert!((n.communities()[0].coefficient(NodeId(0)) - 0.25).abs() < 1e-15);
    }
}
