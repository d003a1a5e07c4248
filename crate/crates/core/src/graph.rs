//! Simple undirected graphs with bit-row adjacency.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bits::{self, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),
    #[error("edge {0} not present")]
    MissingEdge(Edge),
    #[error("graph is disconnected")]
    Disconnected,
}

/// An undirected edge, stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "[usize; 2]", from = "[usize; 2]")]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Self {
        if a <= b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn contains(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }
}

impl From<Edge> for [usize; 2] {
    fn from(e: Edge) -> Self {
        [e.u, e.v]
    }
}

impl From<[usize; 2]> for Edge {
    fn from(p: [usize; 2]) -> Self {
        Edge::new(p[0], p[1])
    }
}

impl From<(usize, usize)> for Edge {
    fn from(p: (usize, usize)) -> Self {
        Edge::new(p.0, p.1)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// Immutable simple graph on vertices `0..n`.
///
/// Adjacency is a flat array of bit rows, `stride` words per row. For
/// `n <= 64` every row is a single word.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let stride = bits::words_for(n);
        Graph {
            n,
            stride,
            rows: vec![0; n * stride],
        }
    }

    pub fn from_edges<I, E>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        let mut g = Graph::empty(n);
        for e in edges {
            let e = e.into();
            if e.v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: e.v, n });
            }
            if e.u == e.v {
                return Err(GraphError::SelfLoop(e.u));
            }
            if g.has_edge(e.u, e.v) {
                return Err(GraphError::DuplicateEdge(e));
            }
            g.link(e.u, e.v);
        }
        Ok(g)
    }

    pub(crate) fn link(&mut self, u: usize, v: usize) {
        let s = self.stride;
        bits::set(&mut self.rows[u * s..(u + 1) * s], v);
        bits::set(&mut self.rows[v * s..(v + 1) * s], u);
    }

    fn unlink(&mut self, u: usize, v: usize) {
        let s = self.stride;
        bits::clear(&mut self.rows[u * s..(u + 1) * s], v);
        bits::clear(&mut self.rows[v * s..(v + 1) * s], u);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Words per adjacency row.
    #[inline]
    pub fn stride(&self) -> usize {
        self.stride
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.stride..(v + 1) * self.stride]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && bits::test(self.row(u), v)
    }

    pub fn neighbors(&self, v: usize) -> bits::Ones<'_> {
        bits::iter(self.row(v))
    }

    pub fn neighbor_set(&self, v: usize) -> VertexSet {
        VertexSet::from_iter_with_capacity(self.n, self.neighbors(v))
    }

    /// N[v]
    pub fn closed_neighbor_set(&self, v: usize) -> VertexSet {
        let mut s = self.neighbor_set(v);
        s.insert(v);
        s
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        bits::count(self.row(v))
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).max()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if u < v {
                    out.push(Edge { u, v });
                }
            }
        }
        out
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.degree(v) == 1
    }

    pub fn leaf_neighbors(&self, v: usize) -> Vec<usize> {
        self.neighbors(v).filter(|&w| self.is_leaf(w)).collect()
    }

    pub fn is_support(&self, v: usize) -> bool {
        self.neighbors(v).any(|w| self.is_leaf(w))
    }

    /// N(v) induces a complete graph.
    pub fn is_simplicial(&self, v: usize) -> bool {
        let nb: Vec<usize> = self.neighbors(v).collect();
        nb.iter()
            .enumerate()
            .all(|(i, &a)| nb[i + 1..].iter().all(|&b| self.has_edge(a, b)))
    }

    pub fn has_isolated_vertex(&self) -> bool {
        (0..self.n).any(|v| self.degree(v) == 0)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let x = comp[i];
                i += 1;
                for y in self.neighbors(x) {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edge_count() == self.n - 1 && self.is_connected()
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Subgraph induced by `vertices` (in the given order); vertex `i` of the
    /// result is `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.link(i, j);
                }
            }
        }
        g
    }

    /// G − e. Vertex ids are unchanged.
    pub fn delete_edge(&self, e: Edge) -> Result<Graph, GraphError> {
        if !self.has_edge(e.u, e.v) {
            return Err(GraphError::MissingEdge(e));
        }
        let mut g = self.clone();
        g.unlink(e.u, e.v);
        Ok(g)
    }

    /// G − v. Ids above `v` shift down by one; the returned map sends each
    /// new id to its original id.
    pub fn delete_vertex(&self, v: usize) -> Result<(Graph, VertexMap), GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        let keep: Vec<usize> = (0..self.n).filter(|&x| x != v).collect();
        Ok((self.induced(&keep), VertexMap { original: keep }))
    }

    /// G − S for a set of vertices, with the id map.
    pub fn delete_vertices(&self, removed: &VertexSet) -> (Graph, VertexMap) {
        let keep: Vec<usize> = (0..self.n).filter(|&x| !removed.contains(x)).collect();
        (self.induced(&keep), VertexMap { original: keep })
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for e in self.edges() {
            g.link(e.u, e.v);
        }
        for e in other.edges() {
            g.link(e.u + self.n, e.v + self.n);
        }
        g
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::empty(self.n);
        for e in self.edges() {
            g.link(perm[e.u], perm[e.v]);
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "])")
    }
}

/// Maps compacted vertex ids back to ids of the graph they came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMap {
    original: Vec<usize>,
}

impl VertexMap {
    pub fn identity(n: usize) -> Self {
        VertexMap {
            original: (0..n).collect(),
        }
    }

    pub fn original(&self, new_id: usize) -> usize {
        self.original[new_id]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.original
    }

    pub fn to_new(&self, original_id: usize) -> Option<usize> {
        self.original.binary_search(&original_id).ok()
    }
}
