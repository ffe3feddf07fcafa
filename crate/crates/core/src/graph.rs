//! Immutable weighted undirected graph.
//!
//! Nodes carry an arbitrary string label and a dense index in `0..node_count`.
//! Indices follow [`label_order`], not input order, so the same edge set always
//! yields the same indices and a written edge list reloads to an identical graph. Adjacency is stored in compressed sparse row
//! form with neighbors sorted by index.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::{Error, Result};

/// Dense internal index of a node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub usize);

impl NodeId {
    /// The raw index.
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

/// An undirected edge with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    /// Smaller endpoint.
    pub u: NodeId,
    /// Larger endpoint.
    pub v: NodeId,
    /// Positive weight.
    pub weight: f64,
}

/// What to do with repeated or antiparallel edges in the input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DirectedPolicy {
    /// Merge repeated and antiparallel edges by summing their weights.
    #[default]
    Symmetrize,
    /// Treat any repeated unordered pair as an error.
    Reject,
}

/// Weighted undirected graph without self-loops or parallel edges.
#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    labels: Vec<String>,
    lookup: BTreeMap<String, NodeId>,
    edges: Vec<Edge>,
    offsets: Vec<usize>,
    adjacency: Vec<(NodeId, f64)>,
    degrees: Vec<f64>,
    total_weight: f64,
}

impl Graph {
    /// Builds a graph over nodes labelled `"0"..node_count` from index pairs.
    ///
    /// Mostly useful for tests and synthetic inputs; self-loops are dropped
    /// and repeated pairs handled according to `policy`.
    pub fn from_index_edges(
        node_count: usize,
        edges: impl IntoIterator<Item = (usize, usize, f64)>,
        policy: DirectedPolicy,
    ) -> Result<Self> {
        let mut builder = GraphBuilder::new(policy);
        for i in 0..node_count {
            builder.node(&i.to_string());
        }
        for (u, v, w) in edges {
            if u >= node_count || v >= node_count {
                return Err(Error::NodeOutOfRange { index: u.max(v), node_count });
            }
            builder.add_index_edge(NodeId(u), NodeId(v), w)?;
        }
        builder.build()
    }

    /// Number of nodes `|V|`.
    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    /// Number of stored undirected edges.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Total edge weight `m = ½ Σ_ij A_ij`. Equals the edge count for unweighted input.
    pub fn total_edge_weight(&self) -> f64 {
        self.total_weight
    }

    /// Weighted degree `k_i`.
    pub fn degree(&self, node: NodeId) -> Result<f64> {
        self.degrees.get(node.0).copied().ok_or(Error::NodeOutOfRange { index: node.0, node_count: self.node_count() })
    }

    /// Weighted degree of the node with the given label.
    pub fn degree_of(&self, label: &str) -> Result<f64> {
        let id = self.node_id(label).ok_or_else(|| Error::UnknownNode(label.to_string()))?;
        self.degree(id)
    }

    /// All weighted degrees, indexed by node.
    pub fn degrees(&self) -> &[f64] {
        &self.degrees
    }

    /// Neighbors of `node` with edge weights, sorted by index.
    ///
    /// Panics if `node` is out of range.
    #[inline]
    pub fn neighbors(&self, node: NodeId) -> &[(NodeId, f64)] {
        &self.adjacency[self.offsets[node.0]..self.offsets[node.0 + 1]]
    }

    /// Edges sorted by `(u, v)` with `u < v`.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Label of `node`.
    pub fn label(&self, node: NodeId) -> &str {
        &self.labels[node.0]
    }

    /// All labels in index order.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Looks up a node by label.
    pub fn node_id(&self, label: &str) -> Option<NodeId> {
        self.lookup.get(label).copied()
    }

    /// True when every edge has weight exactly 1.
    pub fn is_unweighted(&self) -> bool {
        self.edges.iter().all(|e| e.weight == 1.0)
    }

    /// Edges as `(label, label, weight)` with each pair's labels ordered and the
    /// list sorted; independent of how indices were assigned.
    pub fn labelled_edges(&self) -> Vec<(&str, &str, f64)> {
        let mut out: Vec<_> = self
            .edges
            .iter()
            .map(|e| {
                let (a, b) = (self.label(e.u), self.label(e.v));
                if a <= b {
                    (a, b, e.weight)
                } else {
                    (b, a, e.weight)
                }
            })
            .collect();
        out.sort_by(|x, y| (x.0, x.1).cmp(&(y.0, y.1)));
        out
    }
}

/// Natural label order: labels that parse as unsigned integers first, by value,
/// then all others bytewise. Equal values (`7`, `007`) fall back to bytewise.
pub fn label_order(a: &str, b: &str) -> Ordering {
    let key = |s: &str| s.parse::<u64>().ok();
    match (key(a), key(b)) {
        (Some(x), Some(y)) => x.cmp(&y).then_with(|| a.cmp(b)),
        (Some(_), None) => Ordering::Less,
        (None, Some(_)) => Ordering::Greater,
        (None, None) => a.cmp(b),
    }
}

/// Incremental constructor for [`Graph`]. Indices are assigned at
/// [`GraphBuilder::build`] in [`label_order`].
#[derive(Debug, Clone, Default)]
pub struct GraphBuilder {
    policy: DirectedPolicy,
    labels: Vec<String>,
    lookup: BTreeMap<String, NodeId>,
    // (min, max, weight, origin)
    pending: Vec<(usize, usize, f64, usize)>,
    self_loops: usize,
    added: usize,
}

impl GraphBuilder {
    /// Empty builder using `policy` for repeated pairs.
    pub fn new(policy: DirectedPolicy) -> Self {
        Self { policy, ..Self::default() }
    }

    /// Declares a node, which is kept even if no edge touches it.
    pub fn node(&mut self, label: &str) {
        self.intern(label);
    }

    // provisional index, remapped by `build`
    fn intern(&mut self, label: &str) -> NodeId {
        if let Some(&id) = self.lookup.get(label) {
            return id;
        }
        let id = NodeId(self.labels.len());
        self.labels.push(label.to_string());
        self.lookup.insert(label.to_string(), id);
        id
    }

    /// Adds an edge by label. `origin` defaults to the insertion ordinal.
    pub fn add_edge(&mut self, u: &str, v: &str, weight: f64) -> Result<()> {
        let origin = self.added;
        self.add_edge_at(u, v, weight, origin)
    }

    /// Adds an edge by label, tagging it with a caller-chosen `origin`
    /// (a line number, say) that is echoed back in duplicate-edge errors.
    pub fn add_edge_at(&mut self, u: &str, v: &str, weight: f64, origin: usize) -> Result<()> {
        let a = self.intern(u);
        let b = self.intern(v);
        self.push(a, b, weight, origin)
    }

    fn add_index_edge(&mut self, u: NodeId, v: NodeId, weight: f64) -> Result<()> {
        let origin = self.added;
        self.push(u, v, weight, origin)
    }

    fn push(&mut self, a: NodeId, b: NodeId, weight: f64, origin: usize) -> Result<()> {
        self.added += 1;
        if !(weight > 0.0 && weight.is_finite()) {
            return Err(Error::BadWeight { u: self.labels[a.0].clone(), v: self.labels[b.0].clone(), weight });
        }
        if a == b {
            self.self_loops += 1;
            return Ok(());
        }
        self.pending.push((a.0.min(b.0), a.0.max(b.0), weight, origin));
        Ok(())
    }

    /// Number of self-loops dropped so far.
    pub fn self_loops_dropped(&self) -> usize {
        self.self_loops
    }

    /// Merges duplicates, builds adjacency and degrees.
    pub fn build(mut self) -> Result<Graph> {
        let mut order: Vec<usize> = (0..self.labels.len()).collect();
        order.sort_by(|&x, &y| label_order(&self.labels[x], &self.labels[y]));
        let mut rank = alloc::vec![0usize; order.len()];
        for (new, &old) in order.iter().enumerate() {
            rank[old] = new;
        }
        let mut slots: Vec<Option<String>> = core::mem::take(&mut self.labels).into_iter().map(Some).collect();
        self.labels = order.iter().map(|&old| slots[old].take().expect("each label moves once")).collect();
        for id in self.lookup.values_mut() {
            *id = NodeId(rank[id.0]);
        }
        for e in &mut self.pending {
            let (a, b) = (rank[e.0], rank[e.1]);
            (e.0, e.1) = (a.min(b), a.max(b));
        }

        self.pending.sort_by_key(|&(u, v, _, origin)| (u, v, origin));

        let mut edges: Vec<Edge> = Vec::with_capacity(self.pending.len());
        for &(u, v, w, origin) in &self.pending {
            match edges.last_mut() {
                Some(last) if last.u.0 == u && last.v.0 == v => match self.policy {
                    DirectedPolicy::Symmetrize => last.weight += w,
                    DirectedPolicy::Reject => {
                        return Err(Error::DuplicateEdge {
                            u: self.labels[u].clone(),
                            v: self.labels[v].clone(),
                            origin,
                        })
                    }
                },
                _ => edges.push(Edge { u: NodeId(u), v: NodeId(v), weight: w }),
            }
        }

        let n = self.labels.len();
        let mut offsets = alloc::vec![0usize; n + 1];
        for e in &edges {
            offsets[e.u.0 + 1] += 1;
            offsets[e.v.0 + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut cursor = offsets.clone();
        let mut adjacency = alloc::vec![(NodeId(0), 0.0); offsets[n]];
        // Edges are sorted by (u, v), so every node receives its smaller
        // neighbors (as v) before its larger ones (as u), both ascending.
        for e in &edges {
            adjacency[cursor[e.u.0]] = (e.v, e.weight);
            cursor[e.u.0] += 1;
            adjacency[cursor[e.v.0]] = (e.u, e.weight);
            cursor[e.v.0] += 1;
        }

        let degrees: Vec<f64> = (0..n)
            .map(|i| adjacency[offsets[i]..offsets[i + 1]].iter().map(|&(_, w)| w).fold(0.0, |s, w| s + w))
            .collect();
        let total_weight = degrees.iter().sum::<f64>() / 2.0;

        Ok(Graph { labels: self.labels, lookup: self.lookup, edges, offsets, adjacency, degrees, total_weight })
    }
}
