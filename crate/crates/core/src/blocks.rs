//! Blocks (biconnected components), cut vertices, and the central/side block
//! roles of diameter-3 block graphs.

use serde::Serialize;

use crate::graph::{Edge, Graph, GraphError};
use crate::metric::{all_pairs_distances, summary_from};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    /// Sorted vertex lists, ordered lexicographically.
    pub blocks: Vec<Vec<usize>>,
    pub cut_vertices: Vec<usize>,
    /// Every block induces a complete graph.
    pub is_block_graph: bool,
    /// Index into `blocks` of the block spanned by the center; set only for
    /// block graphs of diameter 3.
    pub central_block: Option<usize>,
    pub side_blocks: Vec<usize>,
}

impl BlockDecomposition {
    pub fn blocks_containing(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.blocks
            .iter()
            .enumerate()
            .filter(move |(_, b)| b.binary_search(&v).is_ok())
            .map(|(i, _)| i)
    }
}

struct Tarjan<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<Edge>,
    blocks: Vec<Vec<usize>>,
    is_cut: Vec<bool>,
}

impl Tarjan<'_> {
    fn visit(&mut self, u: usize, parent: Option<usize>) {
        self.time += 1;
        self.disc[u] = self.time;
        self.low[u] = self.time;
        let mut children = 0;
        let nbrs: Vec<usize> = self.g.neighbors(u).collect();
        for v in nbrs {
            if self.disc[v] == 0 {
                children += 1;
                self.stack.push(Edge::new(u, v));
                self.visit(v, Some(u));
                self.low[u] = self.low[u].min(self.low[v]);
                if self.low[v] >= self.disc[u] {
                    if parent.is_some() || children > 1 {
                        self.is_cut[u] = true;
                    }
                    let mut block = Vec::new();
                    while let Some(e) = self.stack.pop() {
                        block.push(e.u);
                        block.push(e.v);
                        if e == Edge::new(u, v) {
                            break;
                        }
                    }
                    block.sort_unstable();
                    block.dedup();
                    self.blocks.push(block);
                }
            } else if Some(v) != parent && self.disc[v] < self.disc[u] {
                self.stack.push(Edge::new(u, v));
                self.low[u] = self.low[u].min(self.disc[v]);
            }
        }
    }
}

/// Biconnected components of a connected graph. A single vertex forms one
/// block on its own.
pub fn block_decomposition(g: &Graph) -> Result<BlockDecomposition, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let n = g.n();
    let mut t = Tarjan {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
        is_cut: vec![false; n],
    };
    if n == 1 {
        t.blocks.push(vec![0]);
    } else if n > 1 {
        t.visit(0, None);
    }
    let mut blocks = t.blocks;
    blocks.sort();
    let cut_vertices: Vec<usize> = (0..n).filter(|&v| t.is_cut[v]).collect();
    let is_block_graph = blocks.iter().all(|b| {
        b.iter()
            .enumerate()
            .all(|(i, &x)| b[i + 1..].iter().all(|&y| g.has_edge(x, y)))
    });

    let mut central_block = None;
    if is_block_graph && n > 0 {
        let summary = summary_from(&all_pairs_distances(g));
        if summary.diameter == 3 {
            central_block = blocks.iter().position(|b| *b == summary.center);
        }
    }
    let side_blocks = match central_block {
        Some(c) => (0..blocks.len()).filter(|&i| i != c).collect(),
        None => Vec::new(),
    };
    Ok(BlockDecomposition {
        blocks,
        cut_vertices,
        is_block_graph,
        central_block,
        side_blocks,
    })
}
