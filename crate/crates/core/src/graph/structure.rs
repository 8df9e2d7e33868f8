use serde::{Deserialize, Serialize};

use super::{bits, Graph};

/// Blocks (maximal 2-connected pieces, bridges, isolated vertices) and cut vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDecomposition {
    /// Sorted vertex sets; bridges appear as two-vertex blocks, isolated vertices as singletons.
    pub blocks: Vec<Vec<usize>>,
    pub cut_vertices: Vec<usize>,
}

impl BlockDecomposition {
    pub fn of(g: &Graph) -> Self {
        let mut t = Tarjan::new(g);
        for s in 0..g.order() {
            if t.disc[s] == usize::MAX {
                if g.degree(s) == 0 {
                    t.disc[s] = t.time;
                    t.time += 1;
                    t.blocks.push(1u64 << s);
                } else {
                    t.visit(s, usize::MAX);
                }
            }
        }
        let mut blocks: Vec<Vec<usize>> = t.blocks.iter().map(|&m| bits(m).collect()).collect();
        blocks.sort();
        let cut_vertices = bits(t.cuts).collect();
        BlockDecomposition {
            blocks,
            cut_vertices,
        }
    }

    pub fn block_masks(&self) -> Vec<u64> {
        self.blocks
            .iter()
            .map(|b| b.iter().fold(0u64, |m, &v| m | 1u64 << v))
            .collect()
    }
}

struct Tarjan<'g> {
    g: &'g Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<(usize, usize)>,
    blocks: Vec<u64>,
    cuts: u64,
}

impl<'g> Tarjan<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.order();
        Tarjan {
            g,
            disc: vec![usize::MAX; n],
            low: vec![0; n],
            time: 0,
            stack: Vec::new(),
            blocks: Vec::new(),
            cuts: 0,
        }
    }

    fn visit(&mut self, u: usize, parent: usize) {
        self.disc[u] = self.time;
        self.low[u] = self.time;
        self.time += 1;
        let mut children = 0;
        for v in self.g.neighbors(u) {
            if self.disc[v] == usize::MAX {
                children += 1;
                self.stack.push((u, v));
                self.visit(v, u);
                self.low[u] = self.low[u].min(self.low[v]);
                if self.low[v] >= self.disc[u] {
                    if parent != usize::MAX || children > 1 {
                        self.cuts |= 1u64 << u;
                    }
                    let mut block = 0u64;
                    while let Some((a, b)) = self.stack.pop() {
                        block |= 1u64 << a | 1u64 << b;
                        if (a, b) == (u, v) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if v != parent && self.disc[v] < self.disc[u] {
                self.stack.push((u, v));
                self.low[u] = self.low[u].min(self.disc[v]);
            }
        }
    }
}

/// Everything the rule engine and the family recognizers ask about a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureReport {
    pub components: Vec<Vec<usize>>,
    pub connected: bool,
    pub degrees: Vec<usize>,
    pub pendants: Vec<usize>,
    pub isolated: usize,
    /// Adjacent pairs with equal closed neighborhoods, `u < v`.
    pub duplicate_pairs: Vec<(usize, usize)>,
    pub blocks: BlockDecomposition,
}

pub fn structure_queries(g: &Graph) -> StructureReport {
    let n = g.order();
    StructureReport {
        components: g.components(),
        connected: g.is_connected(),
        degrees: g.degree_sequence(),
        pendants: (0..n).filter(|&v| g.degree(v) == 1).collect(),
        isolated: g.isolated_count(),
        duplicate_pairs: duplicate_pairs(g),
        blocks: BlockDecomposition::of(g),
    }
}

/// `N(u) + u == N(v) + v` with `u ~ v`.
pub(crate) fn duplicate_pairs(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.order();
    let mut out = Vec::new();
    for u in 0..n {
        for v in bits(g.neighbor_mask(u) >> u >> 1).map(|k| u + 1 + k) {
            if g.neighbor_mask(u) | 1u64 << u == g.neighbor_mask(v) | 1u64 << v {
                out.push((u, v));
            }
        }
    }
    out
}
