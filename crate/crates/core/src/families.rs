//! Deterministic generators for the named graphs and families.
//!
//! Vertex numbering is fixed: clique A first, then clique B, then leaves in
//! owner order. Every generator returns its graph together with labels for
//! the distinguished vertices and edges.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::canon::tree_code;
use crate::graph::{Edge, Graph};
use crate::metric::diameter;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{family}: {reason}")]
    BadParameter { family: &'static str, reason: String },
    #[error("unknown graph kind {0:?}")]
    UnknownKind(String),
    #[error("leaf_counts has {found} entries, cycle has {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },
    #[error("exhaustive {what} enumeration supports n <= {limit}, got {n}")]
    TooLarge { what: &'static str, n: usize, limit: usize },
}

fn bad(family: &'static str, reason: impl Into<String>) -> FamilyError {
    FamilyError::BadParameter {
        family,
        reason: reason.into(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Label {
    Vertex(usize),
    Edge(Edge),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: BTreeMap<String, Label>,
}

impl LabeledGraph {
    pub fn unlabeled(graph: Graph) -> Self {
        LabeledGraph {
            graph,
            labels: BTreeMap::new(),
        }
    }

    pub fn vertex(&self, name: &str) -> Option<usize> {
        match self.labels.get(name) {
            Some(Label::Vertex(v)) => Some(*v),
            _ => None,
        }
    }

    pub fn edge(&self, name: &str) -> Option<Edge> {
        match self.labels.get(name) {
            Some(Label::Edge(e)) => Some(*e),
            _ => None,
        }
    }
}

/// Edge list plus labels; vertices are allocated in call order.
#[derive(Default)]
struct Builder {
    n: usize,
    edges: Vec<(usize, usize)>,
    labels: BTreeMap<String, Label>,
}

impl Builder {
    fn vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    fn clique(&mut self, size: usize) -> Vec<usize> {
        let vs: Vec<usize> = (0..size).map(|_| self.vertex()).collect();
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                self.edges.push((u, v));
            }
        }
        vs
    }

    fn leaves(&mut self, owner: usize, count: usize) -> Vec<usize> {
        (0..count)
            .map(|_| {
                let l = self.vertex();
                self.edges.push((owner, l));
                l
            })
            .collect()
    }

    fn label_vertex(&mut self, name: impl Into<String>, v: usize) {
        self.labels.insert(name.into(), Label::Vertex(v));
    }

    fn label_edge(&mut self, name: impl Into<String>, u: usize, v: usize) {
        self.labels.insert(name.into(), Label::Edge(Edge::new(u, v)));
    }

    fn finish(self) -> LabeledGraph {
        LabeledGraph {
            graph: Graph::from_edges(self.n, self.edges).expect("generators emit simple graphs"),
            labels: self.labels,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasicKind {
    Path,
    Cycle,
    Complete,
    Star,
}

impl FromStr for BasicKind {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "path" => Ok(BasicKind::Path),
            "cycle" => Ok(BasicKind::Cycle),
            "complete" => Ok(BasicKind::Complete),
            "star" => Ok(BasicKind::Star),
            _ => Err(FamilyError::UnknownKind(s.to_string())),
        }
    }
}

impl fmt::Display for BasicKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BasicKind::Path => "path",
            BasicKind::Cycle => "cycle",
            BasicKind::Complete => "complete",
            BasicKind::Star => "star",
        })
    }
}

/// P_n, C_n, K_n, or the star K_{1,n} (hub 0, labeled "hub").
pub fn gen_basic(kind: BasicKind, n: usize) -> Result<LabeledGraph, FamilyError> {
    let mut b = Builder::default();
    match kind {
        BasicKind::Path | BasicKind::Complete if n == 0 => return Err(bad("basic", "n must be at least 1")),
        BasicKind::Cycle if n < 3 => return Err(bad("basic", "a cycle needs at least 3 vertices")),
        BasicKind::Star if n == 0 => return Err(bad("basic", "a star needs at least one leaf")),
        BasicKind::Path => {
            for i in 0..n {
                b.vertex();
                if i > 0 {
                    b.edges.push((i - 1, i));
                }
            }
        }
        BasicKind::Cycle => {
            for i in 0..n {
                b.vertex();
                b.edges.push((i, (i + 1) % n));
                b.label_vertex(format!("cycle[{i}]"), i);
            }
        }
        BasicKind::Complete => {
            b.clique(n);
        }
        BasicKind::Star => {
            let hub = b.vertex();
            b.leaves(hub, n);
            b.label_vertex("hub", hub);
        }
    }
    Ok(b.finish())
}

/// Two cliques of order `size` on `a` and `b`, the bridge `ab`, and `leaves`
/// pendant leaves on every other clique vertex.
fn bridged_cliques(size_a: usize, size_b: usize, leaves: usize) -> Builder {
    let mut b = Builder::default();
    let ca = b.clique(size_a);
    let cb = b.clique(size_b);
    let (a, bb) = (ca[0], cb[0]);
    b.edges.push((a, bb));
    b.label_vertex("a", a);
    b.label_vertex("b", bb);
    b.label_edge("bridge", a, bb);
    for &x in ca[1..].iter().chain(&cb[1..]) {
        b.leaves(x, leaves);
    }
    b
}

/// G_n: two copies of K_n joined by the bridge `ab`, with 2n−2 leaves on
/// every non-bridge clique vertex. χρ(G_n) = 2n−1 and χρ(G_n − ab) = n.
pub fn gen_sharpness_family(n: usize) -> Result<LabeledGraph, FamilyError> {
    if n < 2 {
        return Err(bad("sharpness", "n must be at least 2"));
    }
    Ok(bridged_cliques(n, n, 2 * n - 2).finish())
}

/// A graph with χρ(G) = k and χρ(G − e) = n for the labeled edge "e".
///
/// For n = k this is K_k with one pendant leaf and e the leaf edge.
/// Otherwise K_n and K_{k+1−n} are joined by the bridge e, and every other
/// clique vertex gets k−1 leaves.
pub fn gen_realization(k: usize, n: usize) -> Result<LabeledGraph, FamilyError> {
    if k < 3 {
        return Err(bad("realization", "k must be at least 3"));
    }
    if n > k || 2 * n < k + 1 {
        return Err(bad("realization", format!("n must lie in [{}, {k}]", (k + 2) / 2)));
    }
    if n == k {
        let mut b = Builder::default();
        let clique = b.clique(k);
        let leaf = b.leaves(clique[0], 1)[0];
        b.label_vertex("leaf", leaf);
        b.label_edge("e", clique[0], leaf);
        return Ok(b.finish());
    }
    let mut b = bridged_cliques(n, k + 1 - n, k - 1);
    let bridge = b.labels["bridge"];
    b.labels.insert("e".into(), bridge);
    Ok(b.finish())
}

/// C4 `a b x y` with one leaf on each of the adjacent vertices `a`, `b`.
pub fn gen_decorated_c4() -> LabeledGraph {
    let mut b = Builder::default();
    let names = ["a", "b", "x", "y"];
    for (i, name) in names.iter().enumerate() {
        b.vertex();
        b.edges.push((i, (i + 1) % 4));
        b.label_vertex(*name, i);
    }
    let a1 = b.leaves(0, 1)[0];
    let b1 = b.leaves(1, 1)[0];
    b.label_vertex("a1", a1);
    b.label_vertex("b1", b1);
    b.finish()
}

/// The net: triangle `b1 b2 b3` with leaf `a_i` on `b_i`.
pub fn gen_net() -> LabeledGraph {
    let mut b = Builder::default();
    let tri = b.clique(3);
    for (i, &x) in tri.iter().enumerate() {
        b.label_vertex(format!("b{}", i + 1), x);
    }
    for (i, &x) in tri.iter().enumerate() {
        let leaf = b.leaves(x, 1)[0];
        b.label_vertex(format!("a{}", i + 1), leaf);
    }
    b.finish()
}

/// C8 with one leaf on each of two cycle vertices at distance 3.
///
/// Labels: `a` = 0 and `b` = 3 carry the leaves `a1`, `b1`; `e` is the
/// cycle edge 5–6 opposite both.
pub fn gen_decorated_c8() -> LabeledGraph {
    let mut lg = gen_class_c(8, &[1, 0, 0, 1, 0, 0, 0, 0]).expect("fixed parameters");
    let labels = &mut lg.labels;
    labels.insert("a".into(), Label::Vertex(0));
    labels.insert("b".into(), Label::Vertex(3));
    labels.insert("a1".into(), Label::Vertex(8));
    labels.insert("b1".into(), Label::Vertex(9));
    labels.insert("e".into(), Label::Edge(Edge::new(5, 6)));
    lg
}

/// Cycle `0..cycle_len` with `leaf_counts[i]` pendant leaves on vertex `i`.
pub fn gen_class_c(cycle_len: usize, leaf_counts: &[usize]) -> Result<LabeledGraph, FamilyError> {
    if cycle_len < 3 {
        return Err(bad("class-c", "cycle length must be at least 3"));
    }
    if leaf_counts.len() != cycle_len {
        return Err(FamilyError::LengthMismatch {
            expected: cycle_len,
            found: leaf_counts.len(),
        });
    }
    let mut b = Builder::default();
    for i in 0..cycle_len {
        b.vertex();
        b.edges.push((i, (i + 1) % cycle_len));
        b.label_vertex(format!("cycle[{i}]"), i);
    }
    for (i, &c) in leaf_counts.iter().enumerate() {
        b.leaves(i, c);
    }
    Ok(b.finish())
}

/// Every class-C graph with cycle length in `3..=max_cycle` and at most
/// `max_leaves` leaves per cycle vertex, one per leaf vector up to rotation
/// and reflection.
pub fn enumerate_class_c(max_cycle: usize, max_leaves: usize) -> Vec<LabeledGraph> {
    let mut out = Vec::new();
    for len in 3..=max_cycle {
        let mut seen = BTreeSet::new();
        let mut counts = vec![0usize; len];
        loop {
            let canonical = dihedral_min(&counts);
            if seen.insert(canonical.clone()) {
                out.push(gen_class_c(len, &canonical).expect("valid parameters"));
            }
            // odometer over {0..=max_leaves}^len
            let mut i = 0;
            while i < len && counts[i] == max_leaves {
                counts[i] = 0;
                i += 1;
            }
            if i == len {
                break;
            }
            counts[i] += 1;
        }
    }
    out
}

fn dihedral_min(v: &[usize]) -> Vec<usize> {
    let n = v.len();
    let mut best = v.to_vec();
    for shift in 0..n {
        for rev in [false, true] {
            let cand: Vec<usize> = (0..n)
                .map(|i| {
                    if rev {
                        v[(shift + n - i) % n]
                    } else {
                        v[(shift + i) % n]
                    }
                })
                .collect();
            if cand < best {
                best = cand;
            }
        }
    }
    best
}

pub const TREE_LIMIT: usize = 13;

/// One tree per isomorphism class on `n` vertices, built by leaf addition.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>, FamilyError> {
    if n == 0 {
        return Err(bad("trees", "n must be at least 1"));
    }
    if n > TREE_LIMIT {
        return Err(FamilyError::TooLarge {
            what: "tree",
            n,
            limit: TREE_LIMIT,
        });
    }
    let mut layer = vec![Graph::empty(1)];
    for m in 1..n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for t in &layer {
            for v in 0..m {
                let mut edges: Vec<(usize, usize)> = t.edges().into_iter().map(|e| (e.u, e.v)).collect();
                edges.push((v, m));
                let grown = Graph::from_edges(m + 1, edges).expect("leaf addition stays simple");
                if seen.insert(tree_code(&grown)) {
                    next.push(grown);
                }
            }
        }
        layer = next;
    }
    Ok(layer)
}

/// Caterpillar with spine `0..leaves.len()` and `leaves[i]` leaves on spine
/// vertex `i`.
pub fn caterpillar(leaves: &[usize]) -> Graph {
    let mut b = Builder::default();
    for i in 0..leaves.len() {
        b.vertex();
        if i > 0 {
            b.edges.push((i - 1, i));
        }
    }
    for (i, &c) in leaves.iter().enumerate() {
        b.leaves(i, c);
    }
    b.finish().graph
}

/// One caterpillar per isomorphism class on `n` vertices, from every spine
/// length and leaf vector.
pub fn enumerate_caterpillars(n: usize) -> Result<Vec<Graph>, FamilyError> {
    if n == 0 {
        return Err(bad("caterpillars", "n must be at least 1"));
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for spine in 1..=n {
        let extra = n - spine;
        for vec in compositions_with_zeros(extra, spine) {
            let g = caterpillar(&vec);
            if seen.insert(tree_code(&g)) {
                out.push(g);
            }
        }
    }
    Ok(out)
}

/// All length-`parts` vectors of non-negative integers summing to `total`.
fn compositions_with_zeros(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn rec(total: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            cur.push(total);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for x in 0..=total {
            cur.push(x);
            rec(total - x, parts - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if parts > 0 {
        rec(total, parts, &mut Vec::new(), &mut out);
    }
    out
}

/// Non-increasing sequences of integers `>= min` summing to exactly `total`.
fn partitions(total: usize, min: usize) -> Vec<Vec<usize>> {
    fn rec(total: usize, min: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if total == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (min..=max.min(total)).rev() {
            cur.push(p);
            rec(total - p, min, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(total, min.max(1), total, &mut Vec::new(), &mut out);
    out
}

/// Cliques of the given orders glued at one shared vertex 0 (labeled
/// "center"). With two or more cliques this is a block graph of diameter 2.
pub fn windmill(block_orders: &[usize]) -> LabeledGraph {
    let mut b = Builder::default();
    let x = b.vertex();
    b.label_vertex("center", x);
    for &order in block_orders {
        let vs = b.clique(order - 1);
        for v in vs {
            b.edges.push((x, v));
        }
    }
    b.finish()
}

/// Every block graph of diameter 2 on `3..=max_n` vertices: at least two
/// cliques sharing one vertex, one graph per multiset of block orders.
pub fn enumerate_block_graphs_diam2(max_n: usize) -> Vec<LabeledGraph> {
    let mut out = Vec::new();
    for n in 3..=max_n {
        for parts in partitions(n - 1, 1) {
            if parts.len() >= 2 {
                let orders: Vec<usize> = parts.iter().map(|p| p + 1).collect();
                out.push(windmill(&orders));
            }
        }
    }
    out
}

/// Block graph with central clique `B` of order `side_blocks.len()`, where
/// central vertex `i` carries pendant cliques of the orders in
/// `side_blocks[i]` (order 2 is a leaf). Central vertices are labeled
/// `central[i]`.
pub fn block_graph_from_shape(side_blocks: &[Vec<usize>]) -> LabeledGraph {
    let mut b = Builder::default();
    let central = b.clique(side_blocks.len());
    for (i, &x) in central.iter().enumerate() {
        b.label_vertex(format!("central[{i}]"), x);
    }
    for (i, orders) in side_blocks.iter().enumerate() {
        for &order in orders {
            let vs = b.clique(order - 1);
            for v in vs {
                b.edges.push((central[i], v));
            }
        }
    }
    b.finish()
}

pub const BLOCK_DIAM3_LIMIT: usize = 14;

/// Every block graph of diameter 3 on at most `max_n` vertices.
///
/// In such a graph every vertex outside the central block B is adjacent to
/// B, so the graph is determined by |B| and, per central vertex, the
/// multiset of orders of the cliques hanging from it. The diameter is 3
/// exactly when at least two central vertices carry a side block. Shapes are
/// listed once per multiset of per-vertex multisets.
pub fn enumerate_block_graphs_diam3(max_n: usize) -> Result<Vec<LabeledGraph>, FamilyError> {
    if max_n > BLOCK_DIAM3_LIMIT {
        return Err(FamilyError::TooLarge {
            what: "diameter-3 block graph",
            n: max_n,
            limit: BLOCK_DIAM3_LIMIT,
        });
    }
    let mut out = Vec::new();
    for m in 2..max_n {
        let budget = max_n - m;
        // per-vertex options: multisets of side-block orders, each order
        // contributing order-1 vertices
        let mut options: Vec<(usize, Vec<usize>)> = vec![(0, Vec::new())];
        for used in 1..=budget {
            for p in partitions(used, 1) {
                options.push((used, p.iter().map(|x| x + 1).collect()));
            }
        }
        let mut shape = Vec::with_capacity(m);
        choose_shapes(&options, m, 0, budget, &mut shape, &mut out);
    }
    Ok(out)
}

/// Non-increasing (by option index) assignments of options to `m` central
/// vertices; emits those with side blocks on at least two vertices.
fn choose_shapes(
    options: &[(usize, Vec<usize>)],
    m: usize,
    start: usize,
    budget: usize,
    shape: &mut Vec<usize>,
    out: &mut Vec<LabeledGraph>,
) {
    if shape.len() == m {
        let decorated = shape.iter().filter(|&&o| options[o].0 > 0).count();
        if decorated >= 2 {
            let sides: Vec<Vec<usize>> = shape.iter().map(|&o| options[o].1.clone()).collect();
            let lg = block_graph_from_shape(&sides);
            debug_assert_eq!(diameter(&lg.graph), 3);
            out.push(lg);
        }
        return;
    }
    for o in start..options.len() {
        let cost = options[o].0;
        if cost > budget {
            continue;
        }
        shape.push(o);
        choose_shapes(options, m, o, budget - cost, shape, out);
        shape.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::{canonical_form, is_isomorphic};
    use crate::metric::diameter;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, e.iter().copied()).unwrap()
    }

    #[test]
    fn basic_examples() {
        let c4 = gen_basic(BasicKind::Cycle, 4).unwrap();
        assert!(is_isomorphic(&c4.graph, &g(4, &[(0, 1), (1, 2), (2, 3), (0, 3)])));
        let star = gen_basic(BasicKind::Star, 5).unwrap();
        assert_eq!(star.graph.n(), 6);
        assert_eq!(star.graph.degree(star.vertex("hub").unwrap()), 5);
        let p4 = gen_basic(BasicKind::Path, 4).unwrap();
        assert_eq!(p4.graph, g(4, &[(0, 1), (1, 2), (2, 3)]));
        assert!(gen_basic(BasicKind::Cycle, 2).is_err());
        assert!(gen_basic(BasicKind::Path, 0).is_err());
        assert_eq!("star".parse::<BasicKind>(), Ok(BasicKind::Star));
        assert!("wheel".parse::<BasicKind>().is_err());
    }

    #[test]
    fn sharpness_shape() {
        for n in 2..=5 {
            let lg = gen_sharpness_family(n).unwrap();
            assert_eq!(lg.graph.n(), 2 * n + 2 * (n - 1) * (2 * n - 2));
            let (a, b) = (lg.vertex("a").unwrap(), lg.vertex("b").unwrap());
            assert_eq!((a, b), (0, n));
            assert_eq!(lg.edge("bridge"), Some(Edge::new(a, b)));
            assert_eq!(lg.graph.degree(a), n);
            assert_eq!(lg.graph.degree(1), n - 1 + 2 * n - 2);
        }
        assert_eq!(gen_sharpness_family(4).unwrap().graph.n(), 44);
        assert!(gen_sharpness_family(1).is_err());
    }

    #[test]
    fn realization_shape() {
        let lg = gen_realization(5, 5).unwrap();
        assert_eq!(lg.graph.n(), 6);
        assert!(lg.graph.is_leaf(lg.edge("e").unwrap().v));
        let lg = gen_realization(5, 3).unwrap();
        // K3 and K3, 4 non-bridge clique vertices with 4 leaves each
        assert_eq!(lg.graph.n(), 6 + 16);
        assert_eq!(lg.edge("e"), lg.edge("bridge"));
        assert!(gen_realization(3, 2).is_ok());
        assert!(gen_realization(5, 2).is_err());
        assert!(gen_realization(5, 6).is_err());
        assert!(gen_realization(2, 2).is_err());
    }

    #[test]
    fn fixed_graphs_and_class_c() {
        let net = gen_net();
        assert_eq!(net.graph.n(), 6);
        assert_eq!(net.graph.degrees(), vec![3, 3, 3, 1, 1, 1]);
        assert!(is_isomorphic(&net.graph, &gen_class_c(3, &[1, 1, 1]).unwrap().graph));

        let dc4 = gen_decorated_c4();
        assert!(is_isomorphic(&dc4.graph, &gen_class_c(4, &[1, 1, 0, 0]).unwrap().graph));
        let (a, b) = (dc4.vertex("a").unwrap(), dc4.vertex("b").unwrap());
        assert!(dc4.graph.has_edge(a, b));
        assert!(dc4.graph.has_edge(a, dc4.vertex("a1").unwrap()));

        let dc8 = gen_decorated_c8();
        assert_eq!(dc8.graph.n(), 10);
        assert_eq!(dc8.graph.edge_count(), 10);

        let c5 = gen_class_c(5, &[0; 5]).unwrap();
        assert!(is_isomorphic(&c5.graph, &gen_basic(BasicKind::Cycle, 5).unwrap().graph));
        assert_eq!(
            gen_class_c(4, &[1, 1, 0]),
            Err(FamilyError::LengthMismatch { expected: 4, found: 3 })
        );
    }

    #[test]
    fn class_c_enumeration_is_up_to_symmetry() {
        let all = enumerate_class_c(4, 1);
        // triangle: 0..3 leaves placed => 4 shapes; square: necklaces of 0/1
        // under the dihedral group => 6
        assert_eq!(all.len(), 4 + 6);
        let codes: BTreeSet<_> = all.iter().map(|lg| canonical_form(&lg.graph)).collect();
        assert_eq!(codes.len(), all.len());
    }

    #[test]
    fn tree_counts() {
        // number of unlabeled trees on n vertices
        let expected = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106];
        for (i, &count) in expected.iter().enumerate() {
            assert_eq!(enumerate_trees(i + 1).unwrap().len(), count, "n = {}", i + 1);
        }
        let four = enumerate_trees(4).unwrap();
        assert!(four.iter().any(|t| t.max_degree() == Some(3)));
        assert!(four.iter().any(|t| t.max_degree() == Some(2)));
        assert!(enumerate_trees(14).is_err());
    }

    #[test]
    fn caterpillar_counts() {
        // caterpillars on n vertices: 2^(n-4) + 2^floor((n-4)/2) for n >= 3
        assert_eq!(enumerate_caterpillars(3).unwrap().len(), 1);
        for n in 4..=12usize {
            let expected = (1usize << (n - 4)) + (1usize << ((n - 4) / 2));
            assert_eq!(enumerate_caterpillars(n).unwrap().len(), expected, "n = {n}");
        }
        let p5 = gen_basic(BasicKind::Path, 5).unwrap().graph;
        assert!(enumerate_caterpillars(5).unwrap().iter().any(|c| is_isomorphic(c, &p5)));
    }

    #[test]
    fn block_diam2_windmills() {
        let all = enumerate_block_graphs_diam2(6);
        for lg in &all {
            assert_eq!(diameter(&lg.graph), 2);
        }
        // partitions of n-1 into >= 2 parts for n = 3..=6: 1 + 2 + 4 + 6
        assert_eq!(all.len(), 13);
    }

    #[test]
    fn block_diam3_examples() {
        let all = enumerate_block_graphs_diam3(8).unwrap();
        assert!(all.iter().all(|lg| diameter(&lg.graph) == 3));
        let p4 = g(4, &[(0, 1), (1, 2), (2, 3)]);
        assert!(all.iter().any(|lg| is_isomorphic(&lg.graph, &p4)));
        let k3_sides = block_graph_from_shape(&[vec![3], vec![3]]);
        assert!(all.iter().any(|lg| is_isomorphic(&lg.graph, &k3_sides.graph)));
        let codes: BTreeSet<_> = all.iter().map(|lg| canonical_form(&lg.graph)).collect();
        assert_eq!(codes.len(), all.len());
        assert!(enumerate_block_graphs_diam3(15).is_err());
    }
}
