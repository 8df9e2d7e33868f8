//! Fixed small patterns searched for as induced subgraphs.
//!
//! The vertex-level shapes of `L4Bar` and `Kite` were pinned down by exhaustive
//! search (see `tests/pattern_identification.rs`): `L4Bar` is the only unicyclic
//! graph of minimum order with an induced 4-cycle in which no diagonal pair has
//! degree 2 (a 4-cycle with pendants on two adjacent cycle vertices), and `Kite`
//! is the only 5-vertex book with triangle pages whose complement is a connected
//! tree (two triangles on a common edge, plus a pendant on a degree-2 vertex).
//! Dropping the triangle condition admits one more such book, the house `P5Bar`.

use serde::{Deserialize, Serialize};

use super::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Pattern {
    C4,
    L4Bar,
    Kite,
    Domino,
    P5Bar,
}

impl Pattern {
    pub const ALL: [Pattern; 5] = [
        Pattern::C4,
        Pattern::L4Bar,
        Pattern::Kite,
        Pattern::Domino,
        Pattern::P5Bar,
    ];

    /// Canonical labeled copy. For the book-shaped patterns the binding edge is `0-1`.
    pub fn graph(self) -> Graph {
        let (n, edges): (usize, &[(usize, usize)]) = match self {
            Pattern::C4 => (4, &[(0, 1), (1, 2), (2, 3), (3, 0)]),
            // square 0-1-2-3 with pendants 4 on 0 and 5 on 1
            Pattern::L4Bar => (6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 5)]),
            // triangles 0-1-2 and 0-1-3, pendant 4 on 2
            Pattern::Kite => (5, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 4)]),
            // squares 0-2-3-1 and 0-4-5-1
            Pattern::Domino => (6, &[(0, 1), (0, 2), (2, 3), (3, 1), (0, 4), (4, 5), (5, 1)]),
            // triangle 0-1-2 and square 0-3-4-1 (the house)
            Pattern::P5Bar => (5, &[(0, 1), (0, 2), (1, 2), (0, 3), (3, 4), (4, 1)]),
        };
        Graph::from_edges(n, edges)
    }

    /// Pattern vertices forming its 4-cycle, when it has one.
    pub fn square(self) -> Option<[usize; 4]> {
        match self {
            Pattern::C4 | Pattern::L4Bar => Some([0, 1, 2, 3]),
            Pattern::P5Bar => Some([0, 3, 4, 1]),
            Pattern::Domino => Some([0, 2, 3, 1]),
            Pattern::Kite => None,
        }
    }
}

/// Which patterns occur as induced subgraphs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternFlags {
    pub has_l4bar: bool,
    pub has_kite: bool,
    pub has_c4: bool,
    pub has_domino: bool,
    pub has_p5bar: bool,
}

pub fn pattern_census(g: &Graph) -> PatternFlags {
    PatternFlags {
        has_l4bar: contains_induced(g, Pattern::L4Bar),
        has_kite: contains_induced(g, Pattern::Kite),
        has_c4: contains_induced(g, Pattern::C4),
        has_domino: contains_induced(g, Pattern::Domino),
        has_p5bar: contains_induced(g, Pattern::P5Bar),
    }
}

pub fn contains_induced(g: &Graph, p: Pattern) -> bool {
    let mut found = false;
    embed(g, &p.graph(), &mut |_| {
        found = true;
        false
    });
    found
}

/// Every induced embedding of `p` in `g`; entry `i` of each map is the image of pattern vertex `i`.
pub fn induced_copies(g: &Graph, p: Pattern) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    embed(g, &p.graph(), &mut |m| {
        out.push(m.to_vec());
        true
    });
    out
}

/// Backtracking search for adjacency- and non-adjacency-preserving injections.
/// `visit` returns false to stop early.
fn embed(g: &Graph, p: &Graph, visit: &mut dyn FnMut(&[usize]) -> bool) {
    let k = p.order();
    if k > g.order() {
        return;
    }
    let mut map = Vec::with_capacity(k);
    extend(g, p, &mut map, 0u64, visit);
}

fn extend(
    g: &Graph,
    p: &Graph,
    map: &mut Vec<usize>,
    used: u64,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    let i = map.len();
    if i == p.order() {
        return visit(map);
    }
    for v in 0..g.order() {
        if used >> v & 1 == 1 || g.degree(v) < p.degree(i) {
            continue;
        }
        let ok = map
            .iter()
            .enumerate()
            .all(|(j, &w)| p.has_edge(i, j) == g.has_edge(v, w));
        if ok {
            map.push(v);
            let go_on = extend(g, p, map, used | 1u64 << v, visit);
            map.pop();
            if !go_on {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c4_only_has_c4() {
        let f = pattern_census(&Graph::cycle(4));
        assert_eq!(
            f,
            PatternFlags {
                has_c4: true,
                ..Default::default()
            }
        );
    }

    #[test]
    fn domino_implies_c4() {
        let f = pattern_census(&Pattern::Domino.graph());
        assert!(f.has_domino && f.has_c4);
        assert!(!f.has_l4bar && !f.has_kite && !f.has_p5bar);
    }

    #[test]
    fn l4bar_from_square_with_adjacent_pendants() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (2, 5)]);
        assert!(pattern_census(&g).has_l4bar);
        // pendants on opposite corners leave a diagonal degree-2 pair
        let h = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (2, 5)]);
        assert!(!pattern_census(&h).has_l4bar);
    }

    #[test]
    fn copies_are_counted_with_automorphisms() {
        // C4 has 8 automorphisms, so 8 embeddings into itself
        assert_eq!(induced_copies(&Graph::cycle(4), Pattern::C4).len(), 8);
        assert!(induced_copies(&Graph::complete(4), Pattern::C4).is_empty());
    }
}
