//! Exact maximum independent set by branch and bound.

use serde::Serialize;

use crate::bits::{self, VertexSet};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndependentSet {
    pub alpha: usize,
    /// Sorted vertex ids of one maximum independent set.
    pub witness: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    best: Vec<usize>,
    current: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self, candidates: VertexSet) {
        if self.current.len() + candidates.len() <= self.best.len() {
            return;
        }
        // pivot: candidate with most candidate neighbours
        let mut pivot = None;
        let mut pivot_deg = 0;
        for v in candidates.iter() {
            let d = self
                .g
                .row(v)
                .iter()
                .zip(candidates.words())
                .map(|(a, b)| (a & b).count_ones() as usize)
                .sum::<usize>();
            if pivot.is_none() || d > pivot_deg {
                pivot = Some(v);
                pivot_deg = d;
            }
        }
        let Some(v) = pivot else {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            return;
        };
        if pivot_deg == 0 {
            // all remaining candidates are pairwise non-adjacent
            let before = self.current.len();
            self.current.extend(candidates.iter());
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            self.current.truncate(before);
            return;
        }
        // take v
        let mut with = candidates.clone();
        with.remove(v);
        with.difference_with(self.g.row(v));
        self.current.push(v);
        self.run(with);
        self.current.pop();
        // leave v
        let mut without = candidates;
        without.remove(v);
        self.run(without);
    }
}

/// α restricted to the vertices of `within`.
pub fn independence_number_within(g: &Graph, within: &VertexSet) -> IndependentSet {
    let mut s = Search {
        g,
        best: Vec::new(),
        current: Vec::new(),
    };
    s.run(within.clone());
    let mut witness = s.best;
    witness.sort_unstable();
    IndependentSet {
        alpha: witness.len(),
        witness,
    }
}

pub fn independence_number(g: &Graph) -> IndependentSet {
    independence_number_within(g, &VertexSet::full(g.n()))
}

/// Whether some maximum independent set of `g` misses every vertex of
/// `forbidden`, decided as α(G − forbidden) = α(G).
pub fn exists_alpha_set_avoiding(g: &Graph, forbidden: &[usize]) -> bool {
    let all = VertexSet::full(g.n());
    let mut rest = all.clone();
    for &v in forbidden {
        if v < g.n() {
            rest.remove(v);
        }
    }
    independence_number_within(g, &rest).alpha == independence_number_within(g, &all).alpha
}

pub fn is_independent(g: &Graph, set: &[usize]) -> bool {
    set.iter()
        .enumerate()
        .all(|(i, &a)| set[i + 1..].iter().all(|&b| a != b && !bits::test(g.row(a), b)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn brute_alpha(g: &Graph) -> usize {
        let n = g.n();
        (0u32..1 << n)
            .filter(|m| {
                let s: Vec<usize> = (0..n).filter(|&i| m >> i & 1 == 1).collect();
                is_independent(g, &s)
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn complete_cycle_star() {
        let k5 = Graph::from_edges(5, (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v)))).unwrap();
        assert_eq!(independence_number(&k5).alpha, 1);

        let c5 = cycle(5);
        assert_eq!(brute_alpha(&c5), 2);
        let r = independence_number(&c5);
        assert_eq!(r.alpha, 2);
        assert!(is_independent(&c5, &r.witness));

        let star = Graph::from_edges(6, (1..6).map(|i| (0, i))).unwrap();
        assert_eq!(independence_number(&star).witness, vec![1, 2, 3, 4, 5]);
        assert_eq!(independence_number(&Graph::empty(0)).alpha, 0);
    }

    #[test]
    fn avoidance() {
        let c4 = cycle(4);
        assert!(!exists_alpha_set_avoiding(&c4, &[0, 1]));
        assert!(exists_alpha_set_avoiding(&c4, &[0, 2]));
        let k13 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(exists_alpha_set_avoiding(&k13, &[0]));
        let c6 = cycle(6);
        for v in 0..6 {
            assert!(exists_alpha_set_avoiding(&c6, &[v]));
            assert!(exists_alpha_set_avoiding(&c6, &[]));
        }
    }

    #[test]
    fn matches_brute_force_on_cycles_and_paths() {
        for n in 3..12 {
            assert_eq!(independence_number(&cycle(n)).alpha, brute_alpha(&cycle(n)));
        }
    }
}
