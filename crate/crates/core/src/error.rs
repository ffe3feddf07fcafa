use alloc::string::String;

/// Everything that can go wrong while building graphs, covers or reports.
#[allow(missing_docs)]
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[non_exhaustive]
pub enum Error {
    #[error("unknown node `{0}`")]
    UnknownNode(String),
    #[error("node index {index} out of range for a graph with {node_count} nodes")]
    NodeOutOfRange { index: usize, node_count: usize },
    #[error("edge {{{u}, {v}}} has non-positive or non-finite weight {weight}")]
    BadWeight { u: String, v: String, weight: f64 },
    #[error("duplicate edge {{{u}, {v}}} (entry {origin}) rejected by the reject policy")]
    DuplicateEdge { u: String, v: String, origin: usize },
    #[error("community {community}: coefficient {value} of node {node} is outside [0, 1]")]
    CoefficientOutOfRange { community: usize, node: usize, value: f64 },
    #[error("community {community}: node {node} listed more than once")]
    DuplicateMember { community: usize, node: usize },
    #[error("community {community}: crisp coefficient of node {node} is {value}, expected 1")]
    NotCrisp { community: usize, node: usize, value: f64 },
    #[error("operation requires a crisp cover")]
    ExpectedCrisp,
    #[error("node {node}: belonging coefficients sum to {sum}, expected 1")]
    RowSum { node: usize, sum: f64 },
    #[error("node {node}: no edges into any of its {communities} communities (node-strength coefficient undefined)")]
    ZeroStrength { node: usize, communities: usize },
    #[error("communities overlap at node {node}; a disjoint partition is required")]
    Overlapping { node: usize },
    #[error("node {node} is not covered; a partition must cover every node")]
    Uncovered { node: usize },
    #[error("graph has no edges (total edge weight is 0)")]
    EmptyGraph,
    #[error("cover has no communities")]
    EmptyCover,
    #[error("logistic steepness p must be a positive finite number, got {0}")]
    InvalidSteepness(f64),
    #[error("sweep has no parameter points")]
    EmptySweep,
    #[error("parameter `{0}` has no covers")]
    EmptyPoint(String),
    #[error("parameter `{0}` appears more than once")]
    DuplicateParam(String),
    #[error("parameter `{param}`: {source}")]
    AtParam {
        param: String,
        #[source]
        source: alloc::boxed::Box<Error>,
    },
}
