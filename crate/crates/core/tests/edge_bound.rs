//! The edge-deletion lower bound ⌈(χρ+1)/2⌉ and the 2m−1 repair cap hold for
//! every edge of every connected graph on at most 6 vertices except K2.

use packcrit::corpus::connected_graphs_up_to;
use packcrit::criticality::{edge_deletion_lower_bound, edge_deletion_value_admissible, repair_coloring};
use packcrit::exec::Execution;
use packcrit::{emit_graph6, is_valid_packing_coloring, packing_chromatic_number};

#[test]
fn k2_is_the_only_exception() {
    let corpus = connected_graphs_up_to(6, Execution::Parallel);
    let found: Vec<Vec<String>> = Execution::Parallel.map(&corpus, |g| {
        let chi = packing_chromatic_number(g).value;
        let mut bad = Vec::new();
        for e in g.edges() {
            let c_prime = packing_chromatic_number(&g.delete_edge(e).unwrap()).witness;
            let m = c_prime.palette_size();
            assert!(edge_deletion_value_admissible(chi, m));
            if m < edge_deletion_lower_bound(chi) {
                bad.push(format!("bound {}", emit_graph6(g)));
            }
            let c = repair_coloring(g, e, &c_prime).unwrap();
            assert!(is_valid_packing_coloring(g, &c).unwrap());
            if c.palette_size() > 2 * m - 1 {
                bad.push(format!("repair {}", emit_graph6(g)));
            }
        }
        bad
    });
    let found: Vec<String> = found.into_iter().flatten().collect();
    assert_eq!(found, ["bound A_", "repair A_"]);
}
