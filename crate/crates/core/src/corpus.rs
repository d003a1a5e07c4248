//! Exhaustive corpora of small graphs, one per isomorphism class.
//!
//! Graphs on n vertices are grown from the classes on n−1 vertices by adding
//! a vertex with every possible neighbourhood, then reduced by canonical
//! form. Every class on n vertices arises this way (delete any vertex).

use std::collections::HashSet;

use crate::canon::{canonical_form, canonical_graph};
use crate::exec::Execution;
use crate::graph::Graph;

/// Largest order accepted by the generators; 8-vertex graphs number 12346.
pub const CORPUS_LIMIT: usize = 8;

/// One graph per isomorphism class on exactly `n` vertices, in canonical
/// labelling, in a deterministic order.
pub fn all_graphs(n: usize, exec: Execution) -> Vec<Graph> {
    assert!(n <= CORPUS_LIMIT, "corpus generation supports n <= {CORPUS_LIMIT}");
    let mut layer = vec![Graph::empty(0)];
    for m in 0..n {
        layer = extend(&layer, m, exec);
    }
    layer
}

fn extend(layer: &[Graph], m: usize, exec: Execution) -> Vec<Graph> {
    let children: Vec<Vec<(u128, Graph)>> = exec.map(layer, |g| {
        (0u64..1 << m)
            .map(|mask| {
                let mut edges: Vec<(usize, usize)> = g.edges().into_iter().map(|e| (e.u, e.v)).collect();
                edges.extend((0..m).filter(|&v| mask >> v & 1 == 1).map(|v| (v, m)));
                let grown = Graph::from_edges(m + 1, edges).expect("extension stays simple");
                (canonical_form(&grown).bits, grown)
            })
            .collect()
    });
    let mut seen = HashSet::new();
    let mut out: Vec<(u128, Graph)> = Vec::new();
    for (code, g) in children.into_iter().flatten() {
        if seen.insert(code) {
            out.push((code, g));
        }
    }
    out.sort_by_key(|(code, _)| *code);
    exec.map(&out, |(_, g)| canonical_graph(g))
}

/// One graph per isomorphism class on `1..=max_n` vertices.
pub fn all_graphs_up_to(max_n: usize, exec: Execution) -> Vec<Graph> {
    assert!(max_n <= CORPUS_LIMIT, "corpus generation supports n <= {CORPUS_LIMIT}");
    let mut out = Vec::new();
    let mut layer = vec![Graph::empty(0)];
    for m in 0..max_n {
        layer = extend(&layer, m, exec);
        out.extend(layer.iter().cloned());
    }
    out
}

/// Connected graphs on `1..=max_n` vertices, one per isomorphism class.
pub fn connected_graphs_up_to(max_n: usize, exec: Execution) -> Vec<Graph> {
    all_graphs_up_to(max_n, exec)
        .into_iter()
        .filter(Graph::is_connected)
        .collect()
}

/// Every labelled graph on exactly `n` vertices (2^(n(n−1)/2) of them).
pub fn labelled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 7, "labelled enumeration supports n <= 7");
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p);
        Graph::from_edges(n, edges).expect("pairs are distinct")
    })
}
