//! Rule engine for exact `mvr` and `mr+` with replayable derivations.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{classify_kind, is_star, necklace_cycles, Kind};
use crate::graph::{duplicate_pairs, parse_graph6, pattern_census, write_graph6, Graph};
use crate::oracle::independence_number;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    NullGraph,
    Complete,
    Edgeless,
    Union,
    Join,
    Duplicate,
    Tree,
    Unicyclic,
    Necklace,
    Book,
    TreeComplement,
    CycleComplement,
    UnicyclicComplement,
    NecklaceComplement,
    BookComplement,
    Bounds,
    IsolatedCorrection,
}

impl Rule {
    pub fn statement(self) -> &'static str {
        match self {
            Rule::NullGraph => "the null graph has mvr 0",
            Rule::Complete => "mvr(K_n) = 1",
            Rule::Edgeless => "mvr of n isolated vertices is n",
            Rule::Union => "mvr of a disjoint union is the sum over components",
            Rule::Join => "mvr of a join is the max over the parts",
            Rule::Duplicate => "deleting one of two duplicate vertices keeps mvr",
            Rule::Tree => "mvr(T) = n - 1 for a tree",
            Rule::Unicyclic => "mvr(U) = n - 2 for a unicyclic graph",
            Rule::Necklace => "mvr(N) = n - c - 1 for a necklace with c cycles",
            Rule::Book => "mvr(B) = n - 2 for a book",
            Rule::TreeComplement => "complement of a tree: 2 for a star, else 3",
            Rule::CycleComplement => "complement of C_n: 2 for n = 4, else 3",
            Rule::UnicyclicComplement => {
                "complement of a unicyclic graph: 4 with induced L4-bar, 2 for C4, else 3"
            }
            Rule::NecklaceComplement => {
                "complement of a necklace: 4 with induced L4-bar, 2 for C4 or a star, else 3"
            }
            Rule::BookComplement => "complement of a book: 4 with induced C4 or kite, else 3",
            Rule::Bounds => "independence number below, connected order bound above",
            Rule::IsolatedCorrection => "mr+ = mvr minus the number of isolated vertices",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Value {
    Exact(usize),
    Interval { lo: usize, hi: usize },
}

impl Value {
    pub fn exact(self) -> Option<usize> {
        match self {
            Value::Exact(v) => Some(v),
            Value::Interval { .. } => None,
        }
    }

    pub fn lo(self) -> usize {
        match self {
            Value::Exact(v) => v,
            Value::Interval { lo, .. } => lo,
        }
    }

    pub fn hi(self) -> usize {
        match self {
            Value::Exact(v) => v,
            Value::Interval { hi, .. } => hi,
        }
    }

    fn from_bounds(lo: usize, hi: usize) -> Value {
        if lo == hi {
            Value::Exact(lo)
        } else {
            Value::Interval { lo, hi }
        }
    }
}

impl std::fmt::Display for Value {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Value::Exact(v) => write!(f, "{v}"),
            Value::Interval { lo, hi } => write!(f, "[{lo}, {hi}]"),
        }
    }
}

/// One rule application; `graph` is the graph6 of the graph it fired on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Derivation {
    pub rule: Rule,
    pub graph: String,
    pub value: Value,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<Derivation>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MvrResult {
    pub value: Value,
    pub trace: Derivation,
}

impl MvrResult {
    pub fn exact(&self) -> Option<usize> {
        self.value.exact()
    }
}

/// Family formula for `mvr(g)` when `g` is a connected tree, unicyclic graph, necklace or book.
pub fn family_value(g: &Graph) -> Option<(Rule, usize)> {
    let n = g.order();
    let (kind, c, _) = classify_kind(g);
    match kind {
        Kind::Star | Kind::Path | Kind::Tree => Some((Rule::Tree, n - 1)),
        Kind::Cycle | Kind::Unicyclic => Some((Rule::Unicyclic, n - 2)),
        Kind::Necklace => Some((Rule::Necklace, n - c - 1)),
        Kind::Book => Some((Rule::Book, n - 2)),
        _ => None,
    }
}

/// Family formula for `mvr(complement g)` when `g` is a connected tree,
/// unicyclic graph, necklace or book.
pub fn complement_family_value(g: &Graph) -> Option<(Rule, usize)> {
    let (kind, _, _) = classify_kind(g);
    let is_c4 = || g.order() == 4 && g.size() == 4 && (0..4).all(|v| g.degree(v) == 2);
    match kind {
        Kind::Star => Some((Rule::TreeComplement, 2)),
        Kind::Path | Kind::Tree => Some((Rule::TreeComplement, 3)),
        Kind::Cycle => Some((Rule::CycleComplement, if g.order() == 4 { 2 } else { 3 })),
        Kind::Unicyclic | Kind::Necklace => {
            let rule = if kind == Kind::Unicyclic {
                Rule::UnicyclicComplement
            } else {
                Rule::NecklaceComplement
            };
            let v = if pattern_census(g).has_l4bar {
                4
            } else if is_c4() || is_star(g) {
                2
            } else {
                3
            };
            Some((rule, v))
        }
        Kind::Book => {
            let f = pattern_census(g);
            Some((
                Rule::BookComplement,
                if f.has_c4 || f.has_kite { 4 } else { 3 },
            ))
        }
        _ => None,
    }
}

/// Exact `mvr` when the rules cover `g`, otherwise a cheap interval.
pub fn mvr_exact(g: &Graph) -> MvrResult {
    let trace = derive(g);
    MvrResult {
        value: trace.value,
        trace,
    }
}

fn leaf(rule: Rule, g: &Graph, value: Value) -> Derivation {
    Derivation {
        rule,
        graph: write_graph6(g),
        value,
        children: Vec::new(),
    }
}

fn derive(g: &Graph) -> Derivation {
    let n = g.order();
    if n == 0 {
        return leaf(Rule::NullGraph, g, Value::Exact(0));
    }
    if g.is_complete() {
        return leaf(Rule::Complete, g, Value::Exact(1));
    }
    if g.is_edgeless() {
        return leaf(Rule::Edgeless, g, Value::Exact(n));
    }
    if !g.is_connected() {
        let children: Vec<Derivation> = g
            .components()
            .iter()
            .map(|c| derive(&g.induced(c)))
            .collect();
        let lo = children.iter().map(|d| d.value.lo()).sum();
        let hi = children.iter().map(|d| d.value.hi()).sum();
        return Derivation {
            rule: Rule::Union,
            graph: write_graph6(g),
            value: Value::from_bounds(lo, hi),
            children,
        };
    }
    let gc = g.complement();
    if !gc.is_connected() {
        let children: Vec<Derivation> = gc
            .components()
            .iter()
            .map(|c| derive(&g.induced(c)))
            .collect();
        let lo = children.iter().map(|d| d.value.lo()).max().unwrap_or(0);
        let hi = children.iter().map(|d| d.value.hi()).max().unwrap_or(0);
        return Derivation {
            rule: Rule::Join,
            graph: write_graph6(g),
            value: Value::from_bounds(lo, hi),
            children,
        };
    }
    if let Some((rule, v)) = family_value(g).or_else(|| complement_family_value(&gc)) {
        return leaf(rule, g, Value::Exact(v));
    }
    if let Some(&(_, v)) = duplicate_pairs(g).first() {
        let child = derive(&g.delete_vertex(v).expect("vertex in range"));
        return Derivation {
            rule: Rule::Duplicate,
            graph: write_graph6(g),
            value: child.value,
            children: vec![child],
        };
    }
    let (alpha, _) = independence_number(g);
    leaf(Rule::Bounds, g, Value::from_bounds(alpha, n - 1))
}

/// Re-derives every step of a trace from its recorded graphs and checks the values.
pub fn replay(d: &Derivation) -> Result<Value> {
    let g = parse_graph6(&d.graph)?;
    let bad = |why: &str| Error::invariant(format!("replay of {:?} on {}: {why}", d.rule, d.graph));
    let child_values = d.children.iter().map(replay).collect::<Result<Vec<_>>>()?;
    let child_graphs = d
        .children
        .iter()
        .map(|c| parse_graph6(&c.graph))
        .collect::<Result<Vec<_>>>()?;
    let n = g.order();
    let value = match d.rule {
        Rule::NullGraph if n == 0 => Value::Exact(0),
        Rule::Complete if n > 0 && g.is_complete() => Value::Exact(1),
        Rule::Edgeless if g.is_edgeless() => Value::Exact(n),
        Rule::Union | Rule::Join => {
            let parts = if d.rule == Rule::Union {
                g.components()
            } else {
                g.complement().components()
            };
            if parts.len() < 2 || parts.len() != child_graphs.len() {
                return Err(bad("parts do not match the children"));
            }
            for (p, c) in parts.iter().zip(&child_graphs) {
                if &g.induced(p) != c {
                    return Err(bad("child is not the induced part"));
                }
            }
            let (lo, hi) = if d.rule == Rule::Union {
                (
                    child_values.iter().map(|v| v.lo()).sum(),
                    child_values.iter().map(|v| v.hi()).sum(),
                )
            } else {
                (
                    child_values.iter().map(|v| v.lo()).max().unwrap_or(0),
                    child_values.iter().map(|v| v.hi()).max().unwrap_or(0),
                )
            };
            Value::from_bounds(lo, hi)
        }
        Rule::Duplicate => {
            let [child] = &child_graphs[..] else {
                return Err(bad("expected one child"));
            };
            let ok = duplicate_pairs(&g).iter().any(|&(u, v)| {
                g.delete_vertex(v).ok().as_ref() == Some(child)
                    || g.delete_vertex(u).ok().as_ref() == Some(child)
            });
            if !ok {
                return Err(bad("child is not a duplicate deletion"));
            }
            child_values[0]
        }
        Rule::Bounds => Value::from_bounds(independence_number(&g).0, n.saturating_sub(1)),
        Rule::IsolatedCorrection => {
            let [v] = &child_values[..] else {
                return Err(bad("expected one child"));
            };
            let r = g.isolated_count();
            Value::from_bounds(v.lo().saturating_sub(r), v.hi().saturating_sub(r))
        }
        rule => {
            let got = family_value(&g)
                .filter(|&(r, _)| r == rule)
                .or_else(|| complement_family_value(&g.complement()).filter(|&(r, _)| r == rule));
            match got {
                Some((_, v)) => Value::Exact(v),
                None => return Err(bad("rule does not apply")),
            }
        }
    };
    if value != d.value {
        return Err(bad(&format!("recorded {} but re-derived {value}", d.value)));
    }
    Ok(value)
}

/// `mr+(g) = mvr(g) - r` with `r` the number of isolated vertices.
pub fn mr_plus_exact(g: &Graph) -> MvrResult {
    let inner = derive(g);
    let r = g.isolated_count();
    let value = Value::from_bounds(inner.value.lo() - r, inner.value.hi() - r);
    MvrResult {
        value,
        trace: Derivation {
            rule: Rule::IsolatedCorrection,
            graph: write_graph6(g),
            value,
            children: vec![inner],
        },
    }
}

/// Vertex-disjoint induced trees covering a necklace.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeCover {
    pub count: usize,
    pub parts: Vec<Vec<usize>>,
}

/// Cover of size `c + 1` for a necklace with `c` cycles: in each cycle cut the two
/// edges at one vertex; the remaining forest has exactly `c + 1` components.
pub fn tree_cover_count(g: &Graph) -> Result<TreeCover> {
    let (kind, _, _) = classify_kind(g);
    let cycles = match kind {
        Kind::Star | Kind::Path | Kind::Tree | Kind::Cycle | Kind::Unicyclic | Kind::Necklace => {
            necklace_cycles(g)
        }
        Kind::Complete if g.order() == 3 => necklace_cycles(g),
        Kind::Complete if g.order() == 1 => Some(Vec::new()),
        _ => None,
    }
    .ok_or_else(|| Error::Classification {
        kind,
        message: "tree covers are computed for trees, unicyclic graphs and necklaces".into(),
    })?;
    let mut h = g.clone();
    for c in &cycles {
        let (s, r, t) = (c[1], c[0], c[2]);
        h = without_edge(&h, r, s);
        h = without_edge(&h, s, t);
    }
    let parts: Vec<Vec<usize>> = h.components();
    debug_assert!(parts
        .iter()
        .all(|p| g.induces_tree(p.iter().fold(0u64, |m, &v| m | 1u64 << v))));
    Ok(TreeCover {
        count: parts.len(),
        parts,
    })
}

fn without_edge(g: &Graph, a: usize, b: usize) -> Graph {
    let edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|&e| e != (a.min(b), a.max(b)))
        .collect();
    Graph::from_edges(g.order(), &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{b_t_m, s_n_3};
    use crate::graph::Pattern;

    fn mvr(g: &Graph) -> Option<usize> {
        mvr_exact(g).exact()
    }

    #[test]
    fn axioms_and_small_cases() {
        assert_eq!(mvr(&Graph::complete(5)), Some(1));
        assert_eq!(mvr(&Graph::empty(4)), Some(4));
        assert_eq!(mvr(&Graph::empty(0)), Some(0));
        assert_eq!(mvr(&Graph::cycle(4).complement()), Some(2));
        assert_eq!(mvr(&Graph::path(4).complement()), Some(3));
        assert_eq!(mvr(&Graph::path(4)), Some(3));
        assert_eq!(mvr(&Graph::cycle(5)), Some(3));
        assert_eq!(mvr(&Pattern::L4Bar.graph().complement()), Some(4));
    }

    #[test]
    fn necklace_of_two_triangles() {
        // triangles 0-1-2 and 5-6-7 joined through 3 and 4
        let g = Graph::from_edges(
            8,
            &[
                (0, 1),
                (1, 2),
                (0, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 7),
                (5, 7),
            ],
        );
        assert_eq!(mvr(&g), Some(5));
        let cover = tree_cover_count(&g).unwrap();
        assert_eq!(cover.count, 3);
        assert_eq!(mvr(&g), Some(8 - cover.count));
    }

    #[test]
    fn mr_plus_subtracts_isolated() {
        assert_eq!(mr_plus_exact(&Graph::complete(1)).exact(), Some(0));
        assert_eq!(mr_plus_exact(&Graph::complete(3)).exact(), Some(1));
        let g = Graph::empty(2).union(&Graph::complete(2));
        assert_eq!(mvr(&g), Some(3));
        assert_eq!(mr_plus_exact(&g).exact(), Some(1));
    }

    #[test]
    fn traces_replay() {
        let graphs = [
            Graph::path(6).union(&Graph::cycle(5)),
            Graph::cycle(7).complement(),
            b_t_m(4, 3).unwrap().complement(),
            s_n_3(6).unwrap().join(&Graph::complete(2)),
            Graph::complete(3).union(&Graph::empty(2)),
        ];
        for g in &graphs {
            let r = mvr_exact(g);
            assert_eq!(replay(&r.trace).unwrap(), r.value, "{g}");
            let m = mr_plus_exact(g);
            assert_eq!(replay(&m.trace).unwrap(), m.value);
        }
        let mut t = mvr_exact(&Graph::path(5)).trace;
        t.value = Value::Exact(3);
        assert!(replay(&t).is_err());
    }

    #[test]
    fn uncovered_gives_interval() {
        // Petersen graph
        let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend((0..5).map(|i| (i, i + 5)));
        edges.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
        let p = Graph::from_edges(10, &edges);
        let r = mvr_exact(&p);
        assert_eq!(r.value, Value::Interval { lo: 4, hi: 9 });
        assert_eq!(r.trace.rule, Rule::Bounds);
    }

    #[test]
    fn tree_cover_rejects_books() {
        assert!(tree_cover_count(&b_t_m(3, 2).unwrap()).is_err());
        assert_eq!(tree_cover_count(&Graph::cycle(5)).unwrap().count, 2);
        assert_eq!(tree_cover_count(&Graph::path(5)).unwrap().count, 1);
    }
}
