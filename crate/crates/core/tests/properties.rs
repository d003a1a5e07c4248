use proptest::prelude::*;

use packcrit::canon::{canonical_form, canonical_graph};
use packcrit::criticality::{criticality_report_with, edge_deletion_value_admissible, repair_coloring, ReportOptions};
use packcrit::exec::Execution;
use packcrit::solver::{brute_force_chi_rho, decide_packing_k_colorable};
use packcrit::{
    all_pairs_distances, block_decomposition, emit_graph6, independence_number, is_valid_packing_coloring,
    packing_chromatic_number, parse_graph6, Graph, INFINITE,
};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n)
        .prop_flat_map(|n| (Just(n), proptest::collection::vec(any::<bool>(), n * (n - 1) / 2)))
        .prop_map(|(n, bits)| {
            let pairs = (0..n).flat_map(|v| (0..v).map(move |u| (u, v)));
            let edges: Vec<(usize, usize)> = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Graph::from_edges(n, edges).unwrap()
        })
}

/// Random spanning tree plus random extra edges.
fn connected(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n)
        .prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::vec(any::<prop::sample::Index>(), n.saturating_sub(1)),
                proptest::collection::vec(any::<bool>(), n * (n - 1) / 2),
            )
        })
        .prop_map(|(n, parents, extra)| {
            let mut edges: Vec<(usize, usize)> = parents
                .iter()
                .enumerate()
                .map(|(i, p)| (p.index(i + 1), i + 1))
                .collect();
            let pairs = (0..n).flat_map(|v| (0..v).map(move |u| (u, v)));
            edges.extend(pairs.zip(extra).filter(|(_, b)| *b).map(|(e, _)| e));
            edges.sort_unstable();
            edges.dedup();
            Graph::from_edges(n, edges).unwrap()
        })
}

fn sparse(n_range: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Graph> {
    n_range
        .prop_flat_map(|n| (Just(n), proptest::collection::vec((0..n, 0..n), 0..2 * n)))
        .prop_map(|(n, pairs)| {
            let mut edges: Vec<(usize, usize)> = pairs
                .into_iter()
                .filter(|(u, v)| u != v)
                .map(|(u, v)| (u.min(v), u.max(v)))
                .collect();
            edges.sort_unstable();
            edges.dedup();
            Graph::from_edges(n, edges).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_roundtrip(g in graph(12)) {
        let s = emit_graph6(&g);
        prop_assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn graph6_roundtrip_long_header(g in sparse(63..=90)) {
        let s = emit_graph6(&g);
        prop_assert_eq!(s.as_bytes()[0], 126);
        prop_assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn distances_form_a_metric(g in graph(10)) {
        let dm = all_pairs_distances(&g);
        let n = g.n();
        for u in 0..n {
            prop_assert_eq!(dm.get(u, u), 0);
            for v in 0..n {
                prop_assert_eq!(dm.get(u, v), dm.get(v, u));
                prop_assert_eq!(dm.get(u, v) == 1, g.has_edge(u, v));
                for w in 0..n {
                    let (a, b) = (dm.get(u, w), dm.get(w, v));
                    if a != INFINITE && b != INFINITE {
                        prop_assert!(dm.get(u, v) <= a + b);
                    }
                }
            }
        }
    }

    #[test]
    fn solver_matches_oracle(g in graph(7)) {
        let r = packing_chromatic_number(&g);
        prop_assert_eq!(r.value, brute_force_chi_rho(&g).unwrap());
        prop_assert!(is_valid_packing_coloring(&g, &r.witness).unwrap());
        prop_assert_eq!(r.witness.palette_size(), r.value);
        if r.value > 0 {
            prop_assert!(decide_packing_k_colorable(&g, r.value - 1).is_none());
        }
    }

    #[test]
    fn chi_rho_is_isomorphism_invariant(g in graph(8), seed in any::<u64>()) {
        let mut perm: Vec<usize> = (0..g.n()).collect();
        let mut s = seed;
        for i in (1..perm.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = g.permuted(&perm);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert_eq!(canonical_graph(&g), canonical_graph(&h));
        prop_assert_eq!(packing_chromatic_number(&g).value, packing_chromatic_number(&h).value);
    }

    #[test]
    fn chi_rho_bounded_by_independence(g in connected(9)) {
        let chi = packing_chromatic_number(&g).value;
        let alpha = independence_number(&g).alpha;
        prop_assert!(chi <= g.n() - alpha + 1);
        let dm = all_pairs_distances(&g);
        if dm.diameter() == 2 {
            prop_assert_eq!(chi, g.n() - alpha + 1);
        }
    }

    #[test]
    fn deletions_stay_in_range(g in connected(7)) {
        let r = criticality_report_with(&g, &ReportOptions::sequential()).unwrap();
        for ev in &r.edge_values {
            prop_assert!(edge_deletion_value_admissible(r.chi_rho, ev.value), "{} {}", emit_graph6(&g), ev.edge);
        }
        for vv in &r.vertex_values {
            prop_assert!(vv.value <= r.chi_rho);
        }
    }

    #[test]
    fn report_is_execution_independent(g in connected(7)) {
        let seq = criticality_report_with(&g, &ReportOptions::sequential()).unwrap();
        let par = criticality_report_with(&g, &ReportOptions { exec: Execution::Parallel, ..ReportOptions::sequential() }).unwrap();
        prop_assert_eq!(seq, par);
    }

    #[test]
    fn repair_yields_valid_coloring(g in connected(8), pick in any::<prop::sample::Index>()) {
        let edges = g.edges();
        prop_assume!(!edges.is_empty());
        let e = edges[pick.index(edges.len())];
        let c_prime = packing_chromatic_number(&g.delete_edge(e).unwrap()).witness;
        let m = c_prime.palette_size();
        let c = repair_coloring(&g, e, &c_prime).unwrap();
        prop_assert!(is_valid_packing_coloring(&g, &c).unwrap());
        // K2 is the one graph whose repair needs 2m colors
        if g.edge_count() > 1 {
            prop_assert!(c.palette_size() < 2 * m);
        }
    }

    #[test]
    fn independence_grows_by_at_most_one(g in graph(10), pick in any::<prop::sample::Index>()) {
        let edges = g.edges();
        prop_assume!(!edges.is_empty());
        let e = edges[pick.index(edges.len())];
        let a = independence_number(&g).alpha;
        let b = independence_number(&g.delete_edge(e).unwrap()).alpha;
        prop_assert!(b == a || b == a + 1);
    }

    #[test]
    fn block_cut_tree_is_a_tree(g in connected(12)) {
        let bd = block_decomposition(&g).unwrap();
        let incidences: usize = bd.cut_vertices.iter().map(|&v| bd.blocks_containing(v).count()).sum();
        prop_assert_eq!(incidences + 1, bd.blocks.len() + bd.cut_vertices.len());
        for v in 0..g.n() {
            let k = bd.blocks_containing(v).count();
            prop_assert_eq!(k > 1, bd.cut_vertices.contains(&v));
        }
        let edges_in_blocks: usize = bd.blocks.iter().map(|b| g.induced(b).edge_count()).sum();
        prop_assert_eq!(edges_in_blocks, g.edge_count());
    }
}
