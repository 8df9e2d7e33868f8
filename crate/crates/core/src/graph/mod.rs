//! Immutable simple graphs on dense vertex labels `0..n`.
//!
//! Adjacency is stored as one `u64` bitmask per vertex, which caps the order
//! at [`MAX_VERTICES`]. Every derived graph (complement, deletion, induced
//! subgraph, union, join) relabels its vertices densely.

mod graph6;
pub mod patterns;
mod structure;

use std::fmt;

pub use graph6::{parse_edge_list, parse_graph6, parse_graph_input, write_edge_list, write_graph6};
pub use patterns::{contains_induced, induced_copies, pattern_census, Pattern, PatternFlags};
pub(crate) use structure::duplicate_pairs;
pub use structure::{structure_queries, BlockDecomposition, StructureReport};

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

/// Iterates the set bits of a mask, lowest first.
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[inline]
fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    ///
    /// Panics if `n` exceeds [`MAX_VERTICES`].
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "graph order {n} exceeds {MAX_VERTICES}");
        Graph { n, adj: vec![0; n] }
    }

    /// Builds a graph from an edge list, rejecting loops and out-of-range endpoints.
    /// Repeated edges are merged.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::arg(format!(
                "graph order {n} exceeds {MAX_VERTICES}"
            )));
        }
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::arg(format!("edge ({u},{v}) out of range for n={n}")));
            }
            if u == v {
                return Err(Error::arg(format!("self-loop at vertex {u}")));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Like [`Graph::new`] but panics on invalid input; for literal constructions.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        Graph::new(n, edges).expect("valid edge list")
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 0..n {
            g.adj[v] = full_mask(n) & !(1u64 << v);
        }
        g
    }

    /// Path on `n` vertices, `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges)
    }

    /// Star `K_{1,n-1}` with center 0.
    pub fn star(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
    }

    /// Number of vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in bits(self.adj[u] >> u >> 1) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(|&m| m == 0)
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) + 1 == self.n)
    }

    pub fn complement(&self) -> Graph {
        let all = full_mask(self.n);
        let adj = (0..self.n)
            .map(|v| !self.adj[v] & all & !(1u64 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Induced subgraph on `v`'s complement, relabeled densely.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        if v >= self.n {
            return Err(Error::arg(format!(
                "vertex {v} out of range for n={}",
                self.n
            )));
        }
        Ok(self.induced_mask(self.vertex_mask() & !(1u64 << v)))
    }

    /// Induced subgraph on the listed vertices; vertex `i` of the result is `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(i, j);
                }
            }
        }
        g
    }

    /// Induced subgraph on a vertex mask, keeping the relative order of labels.
    pub fn induced_mask(&self, mask: u64) -> Graph {
        let vs: Vec<usize> = bits(mask & self.vertex_mask()).collect();
        self.induced(&vs)
    }

    /// Disjoint union; `other`'s vertices are shifted by `self.order()`.
    pub fn union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut g = Graph::empty(n);
        for (u, v) in self.edges() {
            g.set_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.set_edge(self.n + u, self.n + v);
        }
        g
    }

    /// Union plus every edge between the two operands.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.union(other);
        for u in 0..self.n {
            for v in 0..other.n {
                g.set_edge(u, self.n + v);
            }
        }
        g
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v]);
        }
        g
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.component_masks()
            .into_iter()
            .map(|m| bits(m).collect())
            .collect()
    }

    pub fn component_masks(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen >> s & 1 == 1 {
                continue;
            }
            let comp = self.reach(s, self.vertex_mask());
            seen |= comp;
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `s` inside `within`.
    pub(crate) fn reach(&self, s: usize, within: u64) -> u64 {
        let mut comp = 1u64 << s;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0u64;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !comp;
            comp |= next;
            frontier = next;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach(0, self.vertex_mask()) == self.vertex_mask()
    }

    /// Number of vertices with no neighbors.
    pub fn isolated_count(&self) -> usize {
        self.adj.iter().filter(|&&m| m == 0).count()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// True if `mask` induces a connected subgraph with no cycle.
    pub fn induces_tree(&self, mask: u64) -> bool {
        if mask == 0 {
            return false;
        }
        let k = mask.count_ones() as usize;
        let edges: usize = bits(mask)
            .map(|v| (self.adj[v] & mask).count_ones() as usize)
            .sum::<usize>()
            / 2;
        let s = mask.trailing_zeros() as usize;
        edges + 1 == k && self.reach(s, mask) == mask
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}, {:?})", self.n, self.edges())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&write_graph6(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_examples() {
        assert_eq!(Graph::complete(4).complement(), Graph::empty(4));
        let p4 = Graph::path(4);
        let pc = p4.complement();
        // P4 complement is the path 1-3-0-2
        assert_eq!(pc.size(), 3);
        assert_eq!(pc.relabel(&[1, 3, 0, 2]), p4);
        let c5 = Graph::cycle(5);
        // 0-2-4-1-3-0 in the complement
        assert_eq!(c5.complement().relabel(&[0, 3, 1, 4, 2]), c5);
    }

    #[test]
    fn delete_vertex_examples() {
        assert_eq!(
            Graph::complete(3).delete_vertex(1).unwrap(),
            Graph::complete(2)
        );
        assert_eq!(Graph::star(5).delete_vertex(0).unwrap(), Graph::empty(4));
        let p = Graph::cycle(4).delete_vertex(0).unwrap();
        assert_eq!(p, Graph::path(3));
        assert!(Graph::path(3).delete_vertex(3).is_err());
    }

    #[test]
    fn union_and_join() {
        let k1 = Graph::empty(1);
        assert_eq!(k1.union(&k1), Graph::empty(2));
        assert_eq!(k1.join(&k1), Graph::complete(2));
        let star = Graph::star(4);
        let j = k1.join(&star);
        assert_eq!(j.complement(), k1.complement().union(&star.complement()));
    }

    #[test]
    fn rejects_loops_and_range() {
        assert!(Graph::new(3, &[(0, 0)]).is_err());
        assert!(Graph::new(3, &[(0, 3)]).is_err());
        assert!(Graph::new(65, &[]).is_err());
    }

    #[test]
    fn components_and_connectivity() {
        let g = Graph::from_edges(5, &[(0, 1), (3, 4)]);
        assert_eq!(g.components(), vec![vec![0, 1], vec![2], vec![3, 4]]);
        assert!(!g.is_connected());
        assert!(Graph::empty(0).is_connected());
        assert_eq!(g.isolated_count(), 1);
    }
}
