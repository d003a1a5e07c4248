//! Exact packing colorings and packing-critical graphs.
//!
//! The crate computes packing chromatic numbers with a branch-and-bound
//! search, certifies edge- and vertex-criticality, generates the graph
//! families that realize the edge-deletion bounds, and checks structural
//! characterizations of critical graphs against brute-force ground truth.

pub mod bits;
pub mod blocks;
pub mod canon;
pub mod characterizations;
pub mod corpus;
pub mod criticality;
pub mod exec;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod independence;
pub mod metric;
pub mod solver;

pub use blocks::{block_decomposition, BlockDecomposition};
pub use graph::{Edge, Graph, GraphError, VertexMap};
pub use graph6::{emit_graph6, parse_graph6, Graph6Error};
pub use independence::{exists_alpha_set_avoiding, independence_number, IndependentSet};
pub use metric::{all_pairs_distances, metric_summary, DistanceMatrix, MetricSummary, INFINITE};
pub use solver::{
    brute_force_chi_rho, decide_packing_k_colorable, is_valid_packing_coloring, packing_chromatic_number,
    packing_chromatic_number_with, ChiRhoResult, PackingColoring, SolveError, SolveOptions,
};
