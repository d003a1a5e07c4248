//! Edge- and vertex-criticality for the packing chromatic number.
//!
//! A graph is edge-critical when every proper subgraph has a smaller packing
//! chromatic number. For graphs without isolated vertices that is the same as
//! a strict drop under every single edge deletion; a graph with an isolated
//! vertex and at least two vertices is never critical, and K1 is critical.

use serde::Serialize;
use thiserror::Error;

use crate::exec::Execution;
use crate::graph::{Edge, Graph, GraphError};
use crate::metric::{all_pairs_distances, distances_from, Distance};
use crate::solver::{
    conflicts, decide_with_pins, is_valid_with, packing_chromatic_number_with, Color, ColoringError, PackingColoring,
    SolveError, SolveOptions,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CriticalityError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error("edge {edge}: chi_rho(G-e) = {value} outside [{lower}, {upper}]")]
    BoundViolation {
        edge: Edge,
        value: usize,
        lower: usize,
        upper: usize,
    },
    #[error("coloring is not a packing coloring of G - {0}")]
    InvalidDeletedColoring(Edge),
    #[error("color {color}: conflicting vertices admit no single vertex to recolor")]
    RepairFailed { color: Color },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeValue {
    pub edge: Edge,
    pub value: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<PackingColoring>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexValue {
    /// Id in the original graph.
    pub vertex: usize,
    pub value: usize,
    /// Indexed by original ids; the deleted vertex carries color 0.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<PackingColoring>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriticalityReport {
    pub chi_rho: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<PackingColoring>,
    pub edge_values: Vec<EdgeValue>,
    pub vertex_values: Vec<VertexValue>,
    /// `None` when edge deletions were not evaluated.
    pub is_edge_critical: Option<bool>,
    /// `None` when vertex deletions were not evaluated.
    pub is_vertex_critical: Option<bool>,
}

impl CriticalityReport {
    pub fn edge_critical(&self) -> bool {
        self.is_edge_critical.expect("edge deletions were not evaluated")
    }

    pub fn vertex_critical(&self) -> bool {
        self.is_vertex_critical.expect("vertex deletions were not evaluated")
    }
}

#[derive(Debug, Clone)]
pub struct ReportOptions {
    pub edges: bool,
    pub vertices: bool,
    pub witnesses: bool,
    pub exec: Execution,
    pub solve: SolveOptions,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            edges: true,
            vertices: true,
            witnesses: false,
            exec: Execution::Parallel,
            solve: SolveOptions::default(),
        }
    }
}

impl ReportOptions {
    pub fn sequential() -> Self {
        ReportOptions {
            exec: Execution::Sequential,
            ..Self::default()
        }
    }
}

/// Edge-criticality from χρ(G) and the per-edge values.
pub fn edge_critical_from(g: &Graph, chi_rho: usize, edge_values: &[usize]) -> bool {
    match g.n() {
        0 => false,
        1 => true,
        _ => !g.has_isolated_vertex() && edge_values.iter().all(|&v| v < chi_rho),
    }
}

pub fn criticality_report_with(g: &Graph, opts: &ReportOptions) -> Result<CriticalityReport, CriticalityError> {
    let base = packing_chromatic_number_with(g, &opts.solve)?;
    let chi = base.value;

    let mut edge_values = Vec::new();
    if opts.edges {
        let edges = g.edges();
        let solved = opts.exec.map(&edges, |&e| -> Result<EdgeValue, CriticalityError> {
            let h = g.delete_edge(e)?;
            let r = packing_chromatic_number_with(&h, &opts.solve)?;
            Ok(EdgeValue {
                edge: e,
                value: r.value,
                witness: opts.witnesses.then_some(r.witness),
            })
        });
        edge_values = solved.into_iter().collect::<Result<_, _>>()?;
    }

    let mut vertex_values = Vec::new();
    if opts.vertices {
        let solved = opts
            .exec
            .map_range(g.n(), |v| -> Result<VertexValue, CriticalityError> {
                let (h, map) = g.delete_vertex(v)?;
                let r = packing_chromatic_number_with(&h, &opts.solve)?;
                let witness = opts.witnesses.then(|| {
                    let mut colors = vec![0; g.n()];
                    for (i, &c) in r.witness.colors().iter().enumerate() {
                        colors[map.original(i)] = c;
                    }
                    PackingColoring::new(colors)
                });
                Ok(VertexValue {
                    vertex: v,
                    value: r.value,
                    witness,
                })
            });
        vertex_values = solved.into_iter().collect::<Result<_, _>>()?;
    }

    let is_edge_critical = opts.edges.then(|| {
        let values: Vec<usize> = edge_values.iter().map(|e| e.value).collect();
        edge_critical_from(g, chi, &values)
    });
    let is_vertex_critical = opts
        .vertices
        .then(|| g.n() > 0 && vertex_values.iter().all(|v| v.value < chi));

    Ok(CriticalityReport {
        chi_rho: chi,
        witness: opts.witnesses.then_some(base.witness),
        edge_values,
        vertex_values,
        is_edge_critical,
        is_vertex_critical,
    })
}

pub fn criticality_report(g: &Graph) -> CriticalityReport {
    criticality_report_with(g, &ReportOptions::default()).expect("no deadline set")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EdgeDrop {
    pub edge: Edge,
    pub value: usize,
    pub drop: usize,
}

/// ⌈(χρ(G) + 1) / 2⌉, the smallest value χρ(G − e) can take.
pub fn edge_deletion_lower_bound(chi_rho: usize) -> usize {
    (chi_rho + 2) / 2
}

/// Whether χρ(G − e) = `value` is admissible for χρ(G) = `chi_rho`: at most
/// χρ(G), and at least ⌈(χρ(G)+1)/2⌉ except for K2 plus isolated vertices,
/// where 2 drops to 1.
pub fn edge_deletion_value_admissible(chi_rho: usize, value: usize) -> bool {
    value <= chi_rho && (value >= edge_deletion_lower_bound(chi_rho) || (chi_rho == 2 && value == 1))
}

/// χρ(G − e) and the drop for every edge. Values that are not
/// [admissible](edge_deletion_value_admissible) are reported as an error.
pub fn edge_drop_profile_with(g: &Graph, opts: &ReportOptions) -> Result<(usize, Vec<EdgeDrop>), CriticalityError> {
    let report = criticality_report_with(
        g,
        &ReportOptions {
            vertices: false,
            edges: true,
            witnesses: false,
            ..opts.clone()
        },
    )?;
    let chi = report.chi_rho;
    let lower = edge_deletion_lower_bound(chi);
    let mut out = Vec::with_capacity(report.edge_values.len());
    for ev in report.edge_values {
        if !edge_deletion_value_admissible(chi, ev.value) {
            return Err(CriticalityError::BoundViolation {
                edge: ev.edge,
                value: ev.value,
                lower,
                upper: chi,
            });
        }
        out.push(EdgeDrop {
            edge: ev.edge,
            value: ev.value,
            drop: chi - ev.value,
        });
    }
    Ok((chi, out))
}

pub fn edge_drop_profile(g: &Graph) -> Result<Vec<EdgeDrop>, CriticalityError> {
    edge_drop_profile_with(g, &ReportOptions::default()).map(|(_, p)| p)
}

/// A χρ(G)-coloring with `c(v) > c(u) >= diam(G)`, provided
/// `diam(G − e) > diam(G)` and `d_{G−e}(u, v) > diam(G)`; `None` when a
/// premise fails or no such coloring exists.
pub fn lemma1_witness(
    g: &Graph,
    e: Edge,
    u: usize,
    v: usize,
    opts: &SolveOptions,
) -> Result<Option<PackingColoring>, CriticalityError> {
    let h = g.delete_edge(e)?;
    for x in [u, v] {
        if x >= g.n() {
            return Err(GraphError::VertexOutOfRange { vertex: x, n: g.n() }.into());
        }
    }
    let diam = all_pairs_distances(g).diameter();
    let dm_h = all_pairs_distances(&h);
    if dm_h.diameter() <= diam || dm_h.get(u, v) <= diam {
        return Ok(None);
    }
    let chi = packing_chromatic_number_with(g, opts)?.value;
    let k = diam as usize;
    for cu in k.max(1)..=chi {
        for cv in cu + 1..=chi {
            let pins = [(u, cu as Color), (v, cv as Color)];
            if let Some(c) = decide_with_pins(g, chi, &pins, opts)? {
                return Ok(Some(c));
            }
        }
    }
    Ok(None)
}

/// Whether every premise of the diameter-increase criterion holds for
/// `(e, u, v)`; when it does, χρ(G − e) < χρ(G).
pub fn lemma1_criterion(g: &Graph, e: Edge, u: usize, v: usize) -> Result<bool, CriticalityError> {
    Ok(lemma1_witness(g, e, u, v, &SolveOptions::default())?.is_some())
}

/// Turns a packing coloring of G − e with palette m into one of G with at
/// most 2m − 1 colors.
///
/// Each color class broken by the edge has one vertex adjacent (in the
/// conflict sense) to all others in the class; that vertex moves to a fresh
/// color above m. Fresh colors are handed out in increasing order of the
/// broken class, and either class 1 or class 2 is never broken.
pub fn repair_coloring(g: &Graph, e: Edge, c_prime: &PackingColoring) -> Result<PackingColoring, CriticalityError> {
    let h = g.delete_edge(e)?;
    if !is_valid_with(&all_pairs_distances(&h), c_prime)? {
        return Err(CriticalityError::InvalidDeletedColoring(e));
    }
    let dm = all_pairs_distances(g);
    let from_u: Vec<Distance> = distances_from(g, e.u);
    let m = c_prime.palette_size() as Color;
    let mut c = c_prime.clone();
    let all_conflicts = conflicts(&dm, c_prime);
    let mut fresh = m;
    for k in 1..=m {
        let broken: Vec<(usize, usize)> = all_conflicts
            .iter()
            .copied()
            .filter(|&(a, _)| c_prime.color(a) == k)
            .collect();
        if broken.is_empty() {
            continue;
        }
        let mut candidates: Vec<usize> = broken.iter().flat_map(|&(a, b)| [a, b]).collect();
        candidates.sort_unstable();
        candidates.dedup();
        candidates.retain(|&x| broken.iter().all(|&(a, b)| a == x || b == x));
        let x = candidates
            .into_iter()
            .min_by_key(|&x| (from_u[x], x))
            .ok_or(CriticalityError::RepairFailed { color: k })?;
        fresh += 1;
        c.set(x, fresh);
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::{is_valid_packing_coloring, packing_chromatic_number};

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn k2_is_critical() {
        let k2 = path(2);
        let r = criticality_report(&k2);
        assert_eq!(r.chi_rho, 2);
        assert_eq!(r.is_edge_critical, Some(true));
        assert_eq!(r.is_vertex_critical, Some(true));
        assert_eq!(edge_drop_profile(&k2).unwrap()[0].value, 1);
    }

    #[test]
    fn c4_is_not_critical() {
        let r = criticality_report(&cycle(4));
        assert_eq!(r.chi_rho, 3);
        assert!(r.edge_values.iter().any(|e| e.value == 3));
        assert_eq!(r.is_edge_critical, Some(false));
        assert_eq!(r.is_vertex_critical, Some(true));
    }

    #[test]
    fn c5_drops_by_one_everywhere() {
        let p = edge_drop_profile(&cycle(5)).unwrap();
        assert!(p.iter().all(|d| d.value == 3 && d.drop == 1));
    }

    #[test]
    fn isolated_vertex_blocks_edge_criticality() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        let r = criticality_report(&g);
        assert_eq!(r.is_edge_critical, Some(false));
        assert_eq!(r.is_vertex_critical, Some(false));
        assert_eq!(criticality_report(&Graph::empty(1)).is_edge_critical, Some(true));
        assert_eq!(criticality_report(&Graph::empty(1)).is_vertex_critical, Some(true));
    }

    #[test]
    fn witnesses_in_original_ids() {
        let opts = ReportOptions {
            witnesses: true,
            ..ReportOptions::default()
        };
        let g = path(4);
        let r = criticality_report_with(&g, &opts).unwrap();
        for vv in &r.vertex_values {
            let w = vv.witness.as_ref().unwrap();
            assert_eq!(w.color(vv.vertex), 0);
            assert_eq!(w.palette_size(), vv.value);
        }
        for ev in &r.edge_values {
            let h = g.delete_edge(ev.edge).unwrap();
            assert_eq!(is_valid_packing_coloring(&h, ev.witness.as_ref().unwrap()), Ok(true));
        }
    }

    #[test]
    fn lemma1_premise_failures() {
        // deleting an end edge of P4 disconnects it, but no optimal coloring
        // puts colors >= 3 on both endpoints
        let p4 = path(4);
        assert_eq!(lemma1_criterion(&p4, Edge::new(0, 1), 0, 3), Ok(false));
        // C5: deleting an edge gives P5 with diameter 4 > 2
        let c5 = cycle(5);
        assert!(lemma1_criterion(&c5, Edge::new(0, 4), 0, 4).is_ok());
        // not an edge of C5
        assert!(lemma1_criterion(&c5, Edge::new(0, 2), 0, 1).is_err());
    }

    #[test]
    fn repair_examples() {
        let p4 = path(4);
        let e = Edge::new(1, 2);
        let c = PackingColoring::new(vec![1, 2, 1, 2]);
        let fixed = repair_coloring(&p4, e, &c).unwrap();
        assert_eq!(is_valid_packing_coloring(&p4, &fixed), Ok(true));
        assert!(fixed.palette_size() <= 3);
        // the color-2 endpoint nearer to vertex 1 moves to color 3
        assert_eq!(fixed.colors(), &[1, 3, 1, 2]);

        // already valid on G: unchanged
        let ok = PackingColoring::new(vec![1, 2, 1, 3]);
        assert_eq!(repair_coloring(&p4, e, &ok).unwrap(), ok);

        let bad = PackingColoring::new(vec![1, 1, 1, 1]);
        assert_eq!(
            repair_coloring(&p4, e, &bad),
            Err(CriticalityError::InvalidDeletedColoring(e))
        );
        let optimal = packing_chromatic_number(&p4.delete_edge(e).unwrap()).witness;
        let fixed = repair_coloring(&p4, e, &optimal).unwrap();
        assert_eq!(is_valid_packing_coloring(&p4, &fixed), Ok(true));
    }
}
