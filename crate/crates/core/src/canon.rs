//! Canonical labelling for small graphs and rooted-tree encodings for trees.
//!
//! Graphs are canonized by colour refinement followed by exhaustive search
//! over the permutations that respect the refined cells, keeping the
//! lexicographically smallest upper-triangle bit string. This is exact and
//! fast for the graph orders used in exhaustive corpora (n <= 10).

use std::collections::BTreeMap;

use crate::graph::Graph;

/// Largest order accepted by [`canonical_form`]; the code must fit in 128 bits.
pub const MAX_CANON_N: usize = 16;

/// Isomorphism-invariant code: equal codes iff isomorphic graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode {
    pub n: usize,
    pub bits: u128,
}

/// Stable colour refinement. Returns a colour per vertex; colour classes are
/// numbered by an isomorphism-invariant order.
pub fn refine_colors(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colors: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).map(|w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut table: BTreeMap<&(usize, Vec<usize>), usize> = BTreeMap::new();
        for s in &sigs {
            table.entry(s).or_insert(0);
        }
        for (i, v) in table.values_mut().enumerate() {
            *v = i;
        }
        let next: Vec<usize> = sigs.iter().map(|s| table[s]).collect();
        let classes_before = {
            let mut c = colors.clone();
            c.sort_unstable();
            c.dedup();
            c.len()
        };
        let classes_after = table.len();
        colors = next;
        if classes_after == classes_before {
            return colors;
        }
    }
}

struct Canon<'a> {
    g: &'a Graph,
    cells: Vec<Vec<usize>>,
    order: Vec<usize>,
    used: Vec<bool>,
    best: Option<(u128, Vec<usize>)>,
}

impl Canon<'_> {
    fn position_cell(&self, p: usize) -> usize {
        let mut acc = 0;
        for (i, c) in self.cells.iter().enumerate() {
            acc += c.len();
            if p < acc {
                return i;
            }
        }
        unreachable!()
    }

    /// `prefix` holds the bits for positions `0..p`; `tied` means the prefix
    /// equals the best prefix of the same length.
    fn search(&mut self, p: usize, prefix: u128, tied: bool) {
        let n = self.g.n();
        if p == n {
            let better = match &self.best {
                None => true,
                Some((b, _)) => prefix < *b,
            };
            if better {
                self.best = Some((prefix, self.order.clone()));
            }
            return;
        }
        let cell = self.position_cell(p);
        for i in 0..self.cells[cell].len() {
            let v = self.cells[cell][i];
            if self.used[v] {
                continue;
            }
            let mut code = prefix;
            for q in 0..p {
                code = (code << 1) | self.g.has_edge(self.order[q], v) as u128;
            }
            let mut still_tied = false;
            if tied {
                if let Some((best, _)) = &self.best {
                    let bits_so_far = (p + 1) * p / 2;
                    let total = n * (n - 1) / 2;
                    let best_prefix = best >> (total - bits_so_far);
                    if code > best_prefix {
                        continue;
                    }
                    still_tied = code == best_prefix;
                }
            }
            self.used[v] = true;
            self.order.push(v);
            self.search(p + 1, code, still_tied || self.best.is_none());
            self.order.pop();
            self.used[v] = false;
        }
    }
}

/// Canonical ordering and code. `order[i]` is the vertex placed at position
/// `i` of the canonical graph.
pub fn canonical_labeling(g: &Graph) -> (CanonicalCode, Vec<usize>) {
    let n = g.n();
    assert!(n <= MAX_CANON_N, "canonical_form supports n <= {MAX_CANON_N}");
    if n <= 1 {
        return (CanonicalCode { n, bits: 0 }, (0..n).collect());
    }
    let colors = refine_colors(g);
    let k = colors.iter().max().map_or(0, |m| m + 1);
    let mut cells = vec![Vec::new(); k];
    for v in 0..n {
        cells[colors[v]].push(v);
    }
    let mut c = Canon {
        g,
        cells,
        order: Vec::with_capacity(n),
        used: vec![false; n],
        best: None,
    };
    c.search(0, 0, true);
    let (bits, order) = c.best.expect("at least one permutation");
    (CanonicalCode { n, bits }, order)
}

pub fn canonical_form(g: &Graph) -> CanonicalCode {
    canonical_labeling(g).0
}

/// The graph relabelled into canonical order.
pub fn canonical_graph(g: &Graph) -> Graph {
    let (_, order) = canonical_labeling(g);
    let mut perm = vec![0; g.n()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    g.permuted(&perm)
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b)
}

fn rooted_code(g: &Graph, v: usize, parent: Option<usize>) -> String {
    let mut kids: Vec<String> = g
        .neighbors(v)
        .filter(|&w| Some(w) != parent)
        .map(|w| rooted_code(g, w, Some(v)))
        .collect();
    kids.sort_unstable();
    let mut s = String::with_capacity(2 + kids.iter().map(String::len).sum::<usize>());
    s.push('(');
    for k in kids {
        s.push_str(&k);
    }
    s.push(')');
    s
}

/// Canonical string of a tree (rooted at its center; the smaller of the two
/// encodings for a bicentral tree). Panics if `g` is not a tree.
pub fn tree_code(g: &Graph) -> String {
    assert!(g.is_tree(), "tree_code requires a tree");
    let n = g.n();
    // center by repeated leaf stripping
    let mut deg = g.degrees();
    let mut remaining = n;
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for w in g.neighbors(v) {
                if deg[w] > 1 {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
            deg[v] = 0;
        }
        layer = next;
    }
    layer
        .iter()
        .map(|&c| rooted_code(g, c, None))
        .min()
        .expect("non-empty tree has a center")
}
