//! Structural tests for critical graphs, each paired with brute-force
//! ground truth so that a corpus run can confirm or refute it.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::blocks::block_decomposition;
use crate::criticality::{criticality_report_with, CriticalityError, CriticalityReport, ReportOptions};
use crate::exec::Execution;
use crate::families::caterpillar;
use crate::graph::{Edge, Graph, GraphError};
use crate::graph6::emit_graph6;
use crate::independence::{exists_alpha_set_avoiding, independence_number};
use crate::metric::{all_pairs_distances, diameter};
use crate::solver::{decide_with_pins, SolveError, SolveOptions};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharacterizationError {
    #[error("{theorem}: {reason}")]
    WrongShape { theorem: TheoremId, reason: String },
    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),
    #[error(transparent)]
    Criticality(#[from] CriticalityError),
}

impl From<SolveError> for CharacterizationError {
    fn from(e: SolveError) -> Self {
        CharacterizationError::Criticality(e.into())
    }
}

impl From<GraphError> for CharacterizationError {
    fn from(e: GraphError) -> Self {
        CharacterizationError::Criticality(e.into())
    }
}

fn wrong_shape(theorem: TheoremId, reason: impl Into<String>) -> CharacterizationError {
    CharacterizationError::WrongShape {
        theorem,
        reason: reason.into(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(into = "String")]
pub enum TheoremId {
    Diam2,
    BlockDiam2,
    BlockDiam3,
    TreeEquivalence,
    ClassC4Critical,
    SmallCritical2,
    SmallCritical3,
}

impl TheoremId {
    pub const ALL: [TheoremId; 7] = [
        TheoremId::Diam2,
        TheoremId::BlockDiam2,
        TheoremId::BlockDiam3,
        TheoremId::TreeEquivalence,
        TheoremId::ClassC4Critical,
        TheoremId::SmallCritical2,
        TheoremId::SmallCritical3,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Diam2 => "diam2",
            TheoremId::BlockDiam2 => "block-diam2",
            TheoremId::BlockDiam3 => "block-diam3",
            TheoremId::TreeEquivalence => "tree-equivalence",
            TheoremId::ClassC4Critical => "class-c-4critical",
            TheoremId::SmallCritical2 => "small-critical-2",
            TheoremId::SmallCritical3 => "small-critical-3",
        }
    }

    /// Whether `g` satisfies the shape precondition of the theorem.
    pub fn applies(self, g: &Graph) -> bool {
        match self {
            TheoremId::Diam2 => g.is_connected() && diameter(g) == 2,
            TheoremId::BlockDiam2 => g.is_connected() && diameter(g) == 2 && is_block_graph(g),
            TheoremId::BlockDiam3 => g.is_connected() && diameter(g) == 3 && is_block_graph(g),
            TheoremId::TreeEquivalence => g.is_tree(),
            TheoremId::ClassC4Critical => is_class_c(g),
            TheoremId::SmallCritical2 | TheoremId::SmallCritical3 => g.is_connected(),
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl From<TheoremId> for String {
    fn from(t: TheoremId) -> Self {
        t.as_str().to_string()
    }
}

impl FromStr for TheoremId {
    type Err = CharacterizationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| CharacterizationError::UnknownTheorem(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremVerdict {
    pub theorem_id: TheoremId,
    /// The graph in graph6.
    pub graph: String,
    pub structural_verdict: bool,
    pub ground_truth: bool,
    pub agree: bool,
    pub details: Vec<String>,
}

impl TheoremVerdict {
    fn new(theorem_id: TheoremId, g: &Graph, structural: bool, truth: bool, details: Vec<String>) -> Self {
        TheoremVerdict {
            theorem_id,
            graph: emit_graph6(g),
            structural_verdict: structural,
            ground_truth: truth,
            agree: structural == truth,
            details,
        }
    }
}

fn is_block_graph(g: &Graph) -> bool {
    block_decomposition(g).is_ok_and(|d| d.is_block_graph)
}

fn edge_report(g: &Graph, solve: &SolveOptions) -> Result<CriticalityReport, CriticalityError> {
    let opts = ReportOptions {
        vertices: false,
        exec: Execution::Sequential,
        solve: solve.clone(),
        ..ReportOptions::default()
    };
    criticality_report_with(g, &opts)
}

/// 2 if `g` is K2, 3 if `g` is C3 or P4, recognized from order and degrees.
pub fn classify_small_critical(g: &Graph) -> Option<usize> {
    let mut degrees = g.degrees();
    degrees.sort_unstable();
    match (g.n(), degrees.as_slice()) {
        (2, [1, 1]) => Some(2),
        (3, [2, 2, 2]) => Some(3),
        (4, [1, 1, 2, 2]) if g.is_connected() => Some(3),
        _ => None,
    }
}

/// Structural test: `g` is the graph of order k with the small-critical
/// shape. Ground truth: `g` is edge-critical with χρ(G) = k.
pub fn check_small_critical(
    g: &Graph,
    k: usize,
    solve: &SolveOptions,
) -> Result<TheoremVerdict, CharacterizationError> {
    let id = match k {
        2 => TheoremId::SmallCritical2,
        3 => TheoremId::SmallCritical3,
        _ => return Err(CharacterizationError::UnknownTheorem(format!("small-critical-{k}"))),
    };
    let structural = classify_small_critical(g) == Some(k);
    let r = edge_report(g, solve)?;
    let truth = r.edge_critical() && r.chi_rho == k;
    let details = vec![format!(
        "chi_rho = {}, edge-critical = {}",
        r.chi_rho,
        r.edge_critical()
    )];
    Ok(TheoremVerdict::new(id, g, structural, truth, details))
}

/// Cycle and pendant-leaf structure of a class-C graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassCShape {
    /// Cycle vertices in cyclic order.
    pub cycle: Vec<usize>,
    /// Leaf count per entry of `cycle`.
    pub leaves: Vec<usize>,
}

/// The cycle and leaf counts if `g` is connected and unicyclic with every
/// vertex off the cycle a leaf adjacent to the cycle.
pub fn class_c_shape(g: &Graph) -> Option<ClassCShape> {
    let n = g.n();
    if n < 3 || !g.is_connected() || g.edge_count() != n {
        return None;
    }
    // strip leaves down to the 2-core, which is the unique cycle
    let mut deg = g.degrees();
    let mut removed = vec![false; n];
    let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    while let Some(v) = stack.pop() {
        if removed[v] {
            continue;
        }
        removed[v] = true;
        for w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    stack.push(w);
                }
            }
        }
    }
    for v in (0..n).filter(|&v| removed[v]) {
        if g.degree(v) != 1 || g.neighbors(v).any(|w| removed[w]) {
            return None;
        }
    }
    let start = (0..n).find(|&v| !removed[v])?;
    let mut cycle = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = g
            .neighbors(cur)
            .find(|&w| !removed[w] && w != prev)
            .expect("2-core of a unicyclic graph is a cycle");
        if next == start {
            break;
        }
        cycle.push(next);
        prev = cur;
        cur = next;
    }
    let leaves = cycle.iter().map(|&v| g.degree(v) - 2).collect();
    Some(ClassCShape { cycle, leaves })
}

pub fn is_class_c(g: &Graph) -> bool {
    class_c_shape(g).is_some()
}

/// Whether a class-C graph is C_n with n >= 5 and n not divisible by 4, the
/// net, or C4 with one leaf on each of two adjacent vertices.
pub fn classify_4critical_in_c(g: &Graph) -> Result<bool, CharacterizationError> {
    let shape = class_c_shape(g).ok_or_else(|| wrong_shape(TheoremId::ClassC4Critical, "graph is not in class C"))?;
    Ok(shape_is_4critical(&shape))
}

fn shape_is_4critical(shape: &ClassCShape) -> bool {
    let len = shape.cycle.len();
    let l = &shape.leaves;
    let bare_cycle = l.iter().all(|&c| c == 0) && len >= 5 && !len.is_multiple_of(4);
    let net = len == 3 && l.iter().all(|&c| c == 1);
    let decorated_c4 = len == 4
        && l.iter().filter(|&&c| c == 1).count() == 2
        && l.iter().filter(|&&c| c == 0).count() == 2
        && (0..4).any(|i| l[i] == 1 && l[(i + 1) % 4] == 1);
    bare_cycle || net || decorated_c4
}

pub fn check_class_c_4critical(g: &Graph, solve: &SolveOptions) -> Result<TheoremVerdict, CharacterizationError> {
    let shape = class_c_shape(g).ok_or_else(|| wrong_shape(TheoremId::ClassC4Critical, "graph is not in class C"))?;
    let structural = shape_is_4critical(&shape);
    let r = edge_report(g, solve)?;
    let truth = r.edge_critical() && r.chi_rho == 4;
    let details = vec![
        format!("cycle length {}, leaves {:?}", shape.cycle.len(), shape.leaves),
        format!("chi_rho = {}, edge-critical = {}", r.chi_rho, r.edge_critical()),
    ];
    Ok(TheoremVerdict::new(
        TheoremId::ClassC4Critical,
        g,
        structural,
        truth,
        details,
    ))
}

/// For a connected graph of diameter 2: critical iff every edge `u1u2`
/// satisfies (i) α(G−e) > α(G), or (ii) some `y` in `N[u_i]` has
/// d_{G−e}(y, u_j) >= 3 and some α(G)-set avoids both `y` and `u_j`.
pub fn check_diam2_characterization(g: &Graph) -> Result<TheoremVerdict, CharacterizationError> {
    check_diam2_with(g, &SolveOptions::default())
}

pub fn check_diam2_with(g: &Graph, solve: &SolveOptions) -> Result<TheoremVerdict, CharacterizationError> {
    if !g.is_connected() || diameter(g) != 2 {
        return Err(wrong_shape(TheoremId::Diam2, "graph must be connected with diameter 2"));
    }
    let alpha = independence_number(g).alpha;
    let mut structural = true;
    let mut details = Vec::new();
    for e in g.edges() {
        let (ok, note) = diam2_edge_condition(g, e, alpha)?;
        details.push(format!("{e}: {note}"));
        structural &= ok;
    }
    let r = edge_report(g, solve)?;
    details.push(format!("chi_rho = {}, edge values {:?}", r.chi_rho, values(&r)));
    Ok(TheoremVerdict::new(
        TheoremId::Diam2,
        g,
        structural,
        r.edge_critical(),
        details,
    ))
}

fn diam2_edge_condition(g: &Graph, e: Edge, alpha: usize) -> Result<(bool, String), CharacterizationError> {
    let h = g.delete_edge(e)?;
    let alpha_h = independence_number(&h).alpha;
    if alpha_h > alpha {
        return Ok((true, format!("(i) alpha(G-e) = {alpha_h} > {alpha}")));
    }
    let dh = all_pairs_distances(&h);
    for (ui, uj) in [(e.u, e.v), (e.v, e.u)] {
        let closed = std::iter::once(ui).chain(g.neighbors(ui));
        for y in closed {
            if y != uj && dh.get(y, uj) >= 3 && exists_alpha_set_avoiding(g, &[y, uj]) {
                return Ok((true, format!("(ii) y = {y}, u_j = {uj}")));
            }
        }
    }
    Ok((false, format!("neither: alpha(G-e) = {alpha_h}, no y")))
}

fn values(r: &CriticalityReport) -> Vec<usize> {
    r.edge_values.iter().map(|e| e.value).collect()
}

/// For a block graph of diameter 2: critical iff δ(G) >= 2.
pub fn check_block_diam2(g: &Graph) -> Result<TheoremVerdict, CharacterizationError> {
    check_block_diam2_with(g, &SolveOptions::default())
}

pub fn check_block_diam2_with(g: &Graph, solve: &SolveOptions) -> Result<TheoremVerdict, CharacterizationError> {
    if !TheoremId::BlockDiam2.applies(g) {
        return Err(wrong_shape(
            TheoremId::BlockDiam2,
            "graph must be a block graph with diameter 2",
        ));
    }
    let delta = g.min_degree().unwrap_or(0);
    let r = edge_report(g, solve)?;
    let details = vec![format!(
        "min degree {delta}, chi_rho = {}, edge values {:?}",
        r.chi_rho,
        values(&r)
    )];
    Ok(TheoremVerdict::new(
        TheoremId::BlockDiam2,
        g,
        delta >= 2,
        r.edge_critical(),
        details,
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BlockDiam3Case {
    A,
    B,
    C,
    None,
}

/// Conditions met by one vertex of the central block.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CentralVertex {
    pub vertex: usize,
    /// In a side block of order >= 4 and no leaf neighbour.
    pub c1: bool,
    /// In at least two side blocks of order 3 and no leaf neighbour.
    pub c2: bool,
    /// Degree |B|+1 with both outside neighbours leaves.
    pub c3: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockDiam3Classification {
    pub case: BlockDiam3Case,
    pub central_block: Vec<usize>,
    pub per_vertex: Vec<CentralVertex>,
    /// Central vertices satisfying c3.
    pub p3: usize,
    pub block_count: usize,
}

impl BlockDiam3Classification {
    pub fn is_critical(&self) -> bool {
        self.case != BlockDiam3Case::None
    }
}

/// For a block graph of diameter 3 with central block B, critical iff
/// (a) every B vertex has degree |B|; or (b) every B vertex has degree
/// |B|+1 and exactly |B|−1 of them have two leaf neighbours; or (c) every B
/// vertex satisfies c1, c2 or c3 and at least one satisfies c1 or c2.
pub fn classify_block_diam3(g: &Graph) -> Result<BlockDiam3Classification, CharacterizationError> {
    let shape_err = || wrong_shape(TheoremId::BlockDiam3, "graph must be a block graph with diameter 3");
    let d = block_decomposition(g).map_err(|_| shape_err())?;
    let central = d.central_block.filter(|_| d.is_block_graph).ok_or_else(shape_err)?;
    let b = &d.blocks[central];
    let m = b.len();

    let per_vertex: Vec<CentralVertex> = b
        .iter()
        .map(|&x| {
            let leaf_nbrs = g.leaf_neighbors(x).len();
            let side_orders: Vec<usize> = d
                .blocks_containing(x)
                .filter(|&i| i != central)
                .map(|i| d.blocks[i].len())
                .collect();
            CentralVertex {
                vertex: x,
                c1: leaf_nbrs == 0 && side_orders.iter().any(|&o| o >= 4),
                c2: leaf_nbrs == 0 && side_orders.iter().filter(|&&o| o == 3).count() >= 2,
                c3: g.degree(x) == m + 1 && leaf_nbrs == 2,
            }
        })
        .collect();

    let two_leaves = b.iter().filter(|&&x| g.leaf_neighbors(x).len() == 2).count();
    let case = if b.iter().all(|&x| g.degree(x) == m) {
        BlockDiam3Case::A
    } else if b.iter().all(|&x| g.degree(x) == m + 1) && two_leaves == m - 1 {
        BlockDiam3Case::B
    } else if per_vertex.iter().all(|v| v.c1 || v.c2 || v.c3) && per_vertex.iter().any(|v| v.c1 || v.c2) {
        BlockDiam3Case::C
    } else {
        BlockDiam3Case::None
    };
    Ok(BlockDiam3Classification {
        case,
        central_block: b.clone(),
        p3: per_vertex.iter().filter(|v| v.c3).count(),
        per_vertex,
        block_count: d.blocks.len(),
    })
}

pub fn check_block_diam3(g: &Graph, solve: &SolveOptions) -> Result<TheoremVerdict, CharacterizationError> {
    let c = classify_block_diam3(g)?;
    let r = edge_report(g, solve)?;
    let mut details = vec![format!("case {:?}, central block {:?}", c.case, c.central_block)];
    details.extend(
        c.per_vertex
            .iter()
            .map(|v| format!("vertex {}: c1={} c2={} c3={}", v.vertex, v.c1, v.c2, v.c3)),
    );
    details.push(format!("chi_rho = {}, edge values {:?}", r.chi_rho, values(&r)));
    Ok(TheoremVerdict::new(
        TheoremId::BlockDiam3,
        g,
        c.is_critical(),
        r.edge_critical(),
        details,
    ))
}

/// A tree is edge-critical iff it is vertex-critical. The structural side is
/// vertex-criticality, the ground truth edge-criticality.
pub fn check_tree_equivalence(t: &Graph) -> Result<TheoremVerdict, CharacterizationError> {
    check_tree_equivalence_with(t, &SolveOptions::default())
}

pub fn check_tree_equivalence_with(t: &Graph, solve: &SolveOptions) -> Result<TheoremVerdict, CharacterizationError> {
    if !t.is_tree() {
        return Err(wrong_shape(TheoremId::TreeEquivalence, "graph is not a tree"));
    }
    let opts = ReportOptions {
        exec: Execution::Sequential,
        solve: solve.clone(),
        ..ReportOptions::default()
    };
    let r = criticality_report_with(t, &opts)?;
    let vertex_values: Vec<usize> = r.vertex_values.iter().map(|v| v.value).collect();
    let details = vec![format!(
        "chi_rho = {}, edge values {:?}, vertex values {:?}",
        r.chi_rho,
        values(&r),
        vertex_values
    )];
    Ok(TheoremVerdict::new(
        TheoremId::TreeEquivalence,
        t,
        r.vertex_critical(),
        r.edge_critical(),
        details,
    ))
}

/// Runs the check for `id` on one graph that satisfies its shape.
pub fn check_theorem(id: TheoremId, g: &Graph, solve: &SolveOptions) -> Result<TheoremVerdict, CharacterizationError> {
    match id {
        TheoremId::Diam2 => check_diam2_with(g, solve),
        TheoremId::BlockDiam2 => check_block_diam2_with(g, solve),
        TheoremId::BlockDiam3 => check_block_diam3(g, solve),
        TheoremId::TreeEquivalence => check_tree_equivalence_with(g, solve),
        TheoremId::ClassC4Critical => check_class_c_4critical(g, solve),
        TheoremId::SmallCritical2 => check_small_critical(g, 2, solve),
        TheoremId::SmallCritical3 => check_small_critical(g, 3, solve),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationSummary {
    pub theorem_id: TheoremId,
    /// Graphs in the corpus.
    pub total: usize,
    /// Graphs satisfying the shape precondition and fully checked.
    pub checked: usize,
    /// Graphs outside the theorem's shape.
    pub skipped: usize,
    /// graph6 of graphs whose solve hit the deadline.
    pub timed_out: Vec<String>,
    /// Sorted by graph6.
    pub disagreements: Vec<TheoremVerdict>,
    /// graph6 of checked graphs with a positive structural verdict, sorted.
    pub positives: Vec<String>,
}

impl VerificationSummary {
    pub fn verified(&self) -> bool {
        self.disagreements.is_empty() && self.timed_out.is_empty()
    }
}

/// Checks every corpus graph that satisfies the theorem's shape.
pub fn verify_theorem(
    id: TheoremId,
    corpus: &[Graph],
    exec: Execution,
    solve: &SolveOptions,
) -> Result<VerificationSummary, CharacterizationError> {
    let results = exec.map(corpus, |g| -> Result<Option<TheoremVerdict>, CharacterizationError> {
        if !id.applies(g) {
            return Ok(None);
        }
        check_theorem(id, g, solve).map(Some)
    });

    let mut summary = VerificationSummary {
        theorem_id: id,
        total: corpus.len(),
        checked: 0,
        skipped: 0,
        timed_out: Vec::new(),
        disagreements: Vec::new(),
        positives: Vec::new(),
    };
    for (g, r) in corpus.iter().zip(results) {
        match r {
            Ok(None) => summary.skipped += 1,
            Ok(Some(v)) => {
                summary.checked += 1;
                if v.structural_verdict {
                    summary.positives.push(v.graph.clone());
                }
                if !v.agree {
                    summary.disagreements.push(v);
                }
            }
            Err(CharacterizationError::Criticality(CriticalityError::Solve(SolveError::TimedOut))) => {
                summary.timed_out.push(emit_graph6(g));
            }
            Err(e) => return Err(e),
        }
    }
    summary.timed_out.sort();
    summary.positives.sort();
    summary.disagreements.sort_by(|a, b| a.graph.cmp(&b.graph));
    Ok(summary)
}

/// Searches for an edge-critical caterpillar with χρ = k, returned as its
/// spine leaf vector (see [`caterpillar`]).
///
/// The first caterpillar with `t` leaves on each of `spine` spine vertices
/// (`t` outer, `spine` inner, up to the given maxima) that is not
/// (k−1)-colorable is trimmed: spine vertices are dropped from either end,
/// then leaves one by one, as long as the graph stays non-(k−1)-colorable.
/// Every deletion keeps a subgraph, so a deletion refused once stays refused,
/// and at the end every edge deletion yields a (k−1)-colorable graph. Leaf
/// deletions lower χρ by at most one, so χρ is exactly k and the caterpillar
/// is critical.
pub fn find_critical_caterpillar(
    k: usize,
    max_spine: usize,
    max_leaves: usize,
    solve: &SolveOptions,
) -> Result<Option<Vec<usize>>, CharacterizationError> {
    if k <= 1 {
        return Ok((k == 1).then(|| vec![0]));
    }
    let too_many = |leaves: &[usize]| -> Result<bool, CharacterizationError> {
        let g = caterpillar(leaves);
        Ok(decide_with_pins(&g, k - 1, &[], solve)?.is_none())
    };
    for t in 0..=max_leaves {
        for spine in 1..=max_spine {
            let mut leaves = vec![t; spine];
            if !too_many(&leaves)? {
                continue;
            }
            while leaves.len() > 1 && too_many(&leaves[1..])? {
                leaves.remove(0);
            }
            while leaves.len() > 1 && too_many(&leaves[..leaves.len() - 1])? {
                leaves.pop();
            }
            for i in 0..leaves.len() {
                while leaves[i] > 0 {
                    leaves[i] -= 1;
                    if !too_many(&leaves)? {
                        leaves[i] += 1;
                        break;
                    }
                }
            }
            return Ok(Some(leaves));
        }
    }
    Ok(None)
}

/// graph6 strings of a graph list, deduplicated and sorted.
pub fn graph6_set<'a>(graphs: impl IntoIterator<Item = &'a Graph>) -> BTreeSet<String> {
    graphs.into_iter().map(emit_graph6).collect()
}
