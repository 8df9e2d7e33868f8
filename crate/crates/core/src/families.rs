//! Recognition of the structured families that have closed-form ranks.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bits, pattern_census, BlockDecomposition, Graph, PatternFlags};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Empty,
    Complete,
    Star,
    Path,
    Tree,
    Cycle,
    Unicyclic,
    Necklace,
    Book,
    Other,
}

impl Kind {
    pub fn is_tree_like(self) -> bool {
        matches!(self, Kind::Star | Kind::Path | Kind::Tree)
    }

    /// Connected graphs in which no vertex lies on two cycles.
    pub fn is_necklace_like(self) -> bool {
        matches!(
            self,
            Kind::Star | Kind::Path | Kind::Tree | Kind::Cycle | Kind::Unicyclic | Kind::Necklace
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyClass {
    pub kind: Kind,
    /// Cycle blocks for necklaces, induced cycles for books, 0 otherwise.
    pub cycle_count: usize,
    pub binding_edge: Option<(usize, usize)>,
    pub flags: PatternFlags,
}

/// Most specific kind, checked in the order
/// empty, complete, star, path, tree, cycle, unicyclic, necklace, book.
pub fn classify(g: &Graph) -> FamilyClass {
    let (kind, cycle_count, binding_edge) = classify_kind(g);
    FamilyClass {
        kind,
        cycle_count,
        binding_edge,
        flags: pattern_census(g),
    }
}

/// [`classify`] without the pattern census.
pub fn classify_kind(g: &Graph) -> (Kind, usize, Option<(usize, usize)>) {
    let n = g.order();
    if n == 0 || (g.is_edgeless() && n > 1) {
        return (Kind::Empty, 0, None);
    }
    if g.is_complete() {
        return (Kind::Complete, usize::from(n == 3), None);
    }
    if !g.is_connected() {
        return (Kind::Other, 0, None);
    }
    let m = g.size();
    if m + 1 == n {
        let kind = if (0..n).any(|v| g.degree(v) + 1 == n) {
            Kind::Star
        } else if (0..n).all(|v| g.degree(v) <= 2) {
            Kind::Path
        } else {
            Kind::Tree
        };
        return (kind, 0, None);
    }
    if m == n {
        let kind = if (0..n).all(|v| g.degree(v) == 2) {
            Kind::Cycle
        } else {
            Kind::Unicyclic
        };
        return (kind, 1, None);
    }
    if let Some(cycles) = necklace_cycles(g) {
        return (Kind::Necklace, cycles.len(), None);
    }
    if let Some(book) = book_structure(g) {
        return (Kind::Book, book.pages.len(), Some(book.binding));
    }
    (Kind::Other, 0, None)
}

pub fn is_tree(g: &Graph) -> bool {
    g.order() >= 1 && g.size() + 1 == g.order() && g.is_connected()
}

pub fn is_star(g: &Graph) -> bool {
    let n = g.order();
    n >= 2 && is_tree(g) && (0..n).any(|v| g.degree(v) + 1 == n)
}

/// Cycles of a proper necklace in cyclic order, or `None` if `g` is not one.
///
/// A proper necklace is connected, has at least two vertices, every block is
/// an edge or an induced cycle, and no vertex lies on two cycle blocks.
pub fn necklace_cycles(g: &Graph) -> Option<Vec<Vec<usize>>> {
    if g.order() < 2 || !g.is_connected() {
        return None;
    }
    let blocks = BlockDecomposition::of(g).block_masks();
    let mut on_cycle = 0u64;
    let mut cycles = Vec::new();
    for b in blocks {
        let k = b.count_ones() as usize;
        if k <= 2 {
            continue;
        }
        let edges: usize = bits(b)
            .map(|v| (g.neighbor_mask(v) & b).count_ones() as usize)
            .sum::<usize>()
            / 2;
        if edges != k || on_cycle & b != 0 {
            return None;
        }
        on_cycle |= b;
        cycles.push(cycle_order(g, b));
    }
    Some(cycles)
}

/// Walks a cycle-shaped vertex set starting at its smallest vertex.
pub(crate) fn cycle_order(g: &Graph, mask: u64) -> Vec<usize> {
    let start = mask.trailing_zeros() as usize;
    let mut order = vec![start];
    let mut cur = start;
    while let Some(w) = bits(g.neighbor_mask(cur) & mask).find(|w| !order.contains(w)) {
        cur = w;
        order.push(w);
    }
    order
}

/// Structure of a book: binding edge `(a, b)` with `a < b`, and for each page the
/// internal path from a neighbor of `a` to a neighbor of `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BookStructure {
    pub binding: (usize, usize),
    pub pages: Vec<Vec<usize>>,
}

impl BookStructure {
    /// Page lengths as cycle lengths (internal vertices plus the two binding vertices).
    pub fn cycle_lengths(&self) -> Vec<usize> {
        self.pages.iter().map(|p| p.len() + 2).collect()
    }

    /// Vertices lying on some induced cycle.
    pub fn cycle_mask(&self) -> u64 {
        let (a, b) = self.binding;
        self.pages
            .iter()
            .flatten()
            .fold(1u64 << a | 1u64 << b, |m, &v| m | 1u64 << v)
    }
}

/// Recognizes a book: connected, at least two induced cycles, and one edge `e`
/// such that any two induced cycles meet in exactly `e` and its endpoints.
pub fn book_structure(g: &Graph) -> Option<BookStructure> {
    let n = g.order();
    if n < 4 || !g.is_connected() {
        return None;
    }
    let cyclomatic = g.size() + 1 - n;
    if cyclomatic < 2 {
        return None;
    }
    let blocks = BlockDecomposition::of(g).block_masks();
    let mut big = blocks.iter().filter(|b| b.count_ones() > 2);
    let core = *big.next()?;
    if big.next().is_some() {
        return None;
    }
    // chordless cycles span the cycle space, so a book has exactly `cyclomatic` of them
    let cycles = induced_cycles_within(g, core, cyclomatic)?;
    if cycles.len() < 2 {
        return None;
    }
    let masks: Vec<u64> = cycles
        .iter()
        .map(|c| c.iter().fold(0u64, |m, &v| m | 1u64 << v))
        .collect();
    let common = masks[0] & masks[1];
    if common.count_ones() != 2 {
        return None;
    }
    let mut it = bits(common);
    let (a, b) = (it.next()?, it.next()?);
    if !g.has_edge(a, b) {
        return None;
    }
    for i in 0..masks.len() {
        for j in i + 1..masks.len() {
            if masks[i] & masks[j] != common {
                return None;
            }
        }
    }
    let pages = cycles
        .iter()
        .map(|c| {
            // rotate so the cycle reads a, p1, ..., pk, b
            let ia = c
                .iter()
                .position(|&v| v == a)
                .expect("binding vertex on cycle");
            let k = c.len();
            let fwd: Vec<usize> = (0..k).map(|i| c[(ia + i) % k]).collect();
            let path: Vec<usize> = if fwd[k - 1] == b {
                fwd[1..k - 1].to_vec()
            } else {
                let mut r: Vec<usize> = fwd[2..].to_vec();
                r.reverse();
                r
            };
            path
        })
        .collect();
    Some(BookStructure {
        binding: (a, b),
        pages,
    })
}

/// All induced cycles, or `None` when there are more than `cap`.
pub fn induced_cycles(g: &Graph, cap: usize) -> Option<Vec<Vec<usize>>> {
    induced_cycles_within(g, g.vertex_mask(), cap)
}

fn induced_cycles_within(g: &Graph, within: u64, cap: usize) -> Option<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    for s in bits(within) {
        let allowed = within & !((1u64 << s) | ((1u64 << s) - 1));
        for p1 in bits(g.neighbor_mask(s) & allowed) {
            let mut path = vec![s, p1];
            if !chordless_walk(g, allowed, &mut path, &mut out, cap) {
                return None;
            }
        }
    }
    Some(out)
}

fn chordless_walk(
    g: &Graph,
    allowed: u64,
    path: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    cap: usize,
) -> bool {
    let s = path[0];
    let last = *path.last().expect("nonempty path");
    let inner = path[1..path.len() - 1]
        .iter()
        .fold(0u64, |m, &v| m | 1u64 << v);
    let on_path = path.iter().fold(0u64, |m, &v| m | 1u64 << v);
    for v in bits(g.neighbor_mask(last) & allowed & !on_path) {
        if g.neighbor_mask(v) & inner != 0 {
            continue;
        }
        if g.has_edge(v, s) {
            // each cycle is seen in both directions; keep the one with p1 < v
            if path[1] < v {
                let mut c = path.clone();
                c.push(v);
                out.push(c);
                if out.len() > cap {
                    return false;
                }
            }
            continue;
        }
        path.push(v);
        let ok = chordless_walk(g, allowed, path, out, cap);
        path.pop();
        if !ok {
            return false;
        }
    }
    true
}

/// Endpoints of a book's binding edge.
pub fn binding_vertices(g: &Graph) -> Result<(usize, usize)> {
    let (kind, _, edge) = classify_kind(g);
    match (kind, edge) {
        (Kind::Book, Some(e)) => Ok(e),
        _ => Err(Error::Classification {
            kind,
            message: "binding vertices are defined for books only".into(),
        }),
    }
}

/// Star `K_{1,n-1}` (center 0) plus the edge between leaves 1 and 2.
pub fn s_n_3(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::arg(format!("S_n^3 needs n >= 3, got {n}")));
    }
    let mut edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    edges.push((1, 2));
    Graph::new(n, &edges)
}

/// `m` copies of the cycle `C_t` glued along the edge `0-1`.
pub fn b_t_m(t: usize, m: usize) -> Result<Graph> {
    if t < 3 || m < 1 {
        return Err(Error::arg(format!(
            "B^t_m needs t >= 3 and m >= 1, got t={t}, m={m}"
        )));
    }
    let n = 2 + m * (t - 2);
    let mut edges = vec![(0, 1)];
    let mut next = 2;
    for _ in 0..m {
        let mut prev = 0;
        for _ in 0..t - 2 {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, 1));
    }
    Graph::new(n, &edges)
}

/// The `n`-sun: `C_n` on `0..n` with a pendant `n + i` on each cycle vertex `i`.
pub fn sun(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::arg(format!("a sun needs n >= 3, got {n}")));
    }
    let mut edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.extend((0..n).map(|i| (i, n + i)));
    Graph::new(2 * n, &edges)
}
