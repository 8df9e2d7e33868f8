//! Vector and complement criticality.
//!
//! A graph is vector critical when deleting any vertex lowers its rank, and
//! complement critical when deleting any vertex lowers rank(G) + rank(complement).
//! Single-vertex deletions suffice because both ranks are monotone on induced
//! subgraphs. Verdicts come from three places: the definitional deletion sweep,
//! the family characterizations (structure only, no rank computation), and the
//! decomposition rule for disconnected graphs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{book_structure, classify_kind, is_star, necklace_cycles, Kind};
use crate::graph::{bits, contains_induced, induced_copies, write_graph6, Graph, Pattern};
use crate::rank::{mr_plus_exact, mvr_exact};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Definitional,
    Structural,
    Disconnected,
}

/// Rank function the verdict refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Measure {
    Mvr,
    MrPlus,
}

/// What happens when one vertex is deleted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexOutcome {
    pub vertex: usize,
    /// Rank of `G - v`.
    pub rank: usize,
    /// Rank of the complement of `G - v`.
    pub complement_rank: usize,
    pub rank_decreased: bool,
    /// The sum of both ranks dropped.
    pub decreased: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalityReport {
    pub graph: String,
    pub measure: Measure,
    pub method: Method,
    pub vector_critical: bool,
    pub complement_critical: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complement_rank: Option<usize>,
    /// Filled by the deletion sweep only.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub per_vertex: Vec<VertexOutcome>,
    /// A vertex whose deletion does not lower the sum.
    pub witness: Option<usize>,
    /// A vertex whose deletion does not lower the rank.
    pub vector_witness: Option<usize>,
    /// Which conditions fired, in words.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub basis: Vec<String>,
}

impl CriticalityReport {
    fn verdicts(&self) -> (bool, bool) {
        (self.vector_critical, self.complement_critical)
    }
}

fn exact_rank(h: &Graph, measure: Measure) -> Result<usize> {
    let r = match measure {
        Measure::Mvr => mvr_exact(h),
        Measure::MrPlus => mr_plus_exact(h),
    };
    r.exact().ok_or_else(|| Error::Uncovered {
        graph6: write_graph6(h),
        message: format!("rank is only known to lie in {}", r.value),
    })
}

fn sweep(g: &Graph, measure: Measure) -> Result<CriticalityReport> {
    let rank = exact_rank(g, measure)?;
    let complement_rank = exact_rank(&g.complement(), measure)?;
    let mut per_vertex = Vec::with_capacity(g.order());
    for v in 0..g.order() {
        let h = g.delete_vertex(v)?;
        let r = exact_rank(&h, measure)?;
        let c = exact_rank(&h.complement(), measure)?;
        per_vertex.push(VertexOutcome {
            vertex: v,
            rank: r,
            complement_rank: c,
            rank_decreased: r < rank,
            decreased: r + c < rank + complement_rank,
        });
    }
    let witness = per_vertex.iter().find(|o| !o.decreased).map(|o| o.vertex);
    let vector_witness = per_vertex
        .iter()
        .find(|o| !o.rank_decreased)
        .map(|o| o.vertex);
    Ok(CriticalityReport {
        graph: write_graph6(g),
        measure,
        method: Method::Definitional,
        vector_critical: vector_witness.is_none(),
        complement_critical: witness.is_none(),
        rank: Some(rank),
        complement_rank: Some(complement_rank),
        per_vertex,
        witness,
        vector_witness,
        basis: Vec::new(),
    })
}

/// Definitional verdicts from the single-vertex deletion sweep with exact `mvr`.
pub fn check_criticality(g: &Graph) -> Result<CriticalityReport> {
    sweep(g, Measure::Mvr)
}

fn structural(g: &Graph, vector: bool, complement: bool, basis: Vec<String>) -> CriticalityReport {
    CriticalityReport {
        graph: write_graph6(g),
        measure: Measure::Mvr,
        method: Method::Structural,
        vector_critical: vector,
        complement_critical: complement,
        rank: None,
        complement_rank: None,
        per_vertex: Vec::new(),
        witness: None,
        vector_witness: None,
        basis,
    }
}

/// Verdicts read off the family characterizations for trees, unicyclic graphs,
/// necklaces and books. No rank is computed.
pub fn structural_criticality(g: &Graph) -> Result<CriticalityReport> {
    let n = g.order();
    let (kind, _, _) = classify_kind(g);
    match kind {
        Kind::Complete if n == 1 => Ok(structural(g, true, true, vec!["single vertex".into()])),
        Kind::Complete if n == 2 => Ok(star_report(g)),
        Kind::Star => Ok(star_report(g)),
        Kind::Path | Kind::Tree => Ok(structural(
            g,
            true,
            true,
            vec!["tree that is not a star".into()],
        )),
        Kind::Complete if n == 3 => necklace_report(g),
        Kind::Cycle | Kind::Unicyclic | Kind::Necklace => necklace_report(g),
        Kind::Book => book_report(g),
        _ => Err(Error::Classification {
            kind,
            message: "structural criticality covers trees, unicyclic graphs, necklaces and books"
                .into(),
        }),
    }
}

fn star_report(g: &Graph) -> CriticalityReport {
    let center = (0..g.order()).max_by_key(|&v| g.degree(v));
    let mut r = structural(g, false, true, vec!["star".into()]);
    r.vector_witness = center;
    r
}

/// Neighbors of degree at least two.
fn inner_neighbors(g: &Graph, v: usize) -> usize {
    g.neighbors(v).filter(|&u| g.degree(u) > 1).count()
}

/// The star on `n` vertices with one extra edge between two leaves.
fn is_s_n_3(g: &Graph) -> bool {
    let n = g.order();
    n >= 3 && g.size() == n && (0..n).any(|v| g.degree(v) + 1 == n)
}

/// Mask of an induced 4-cycle lying in every induced copy of the L4-bar pattern.
fn common_square(g: &Graph, copies: &[Vec<usize>]) -> Option<u64> {
    let inter = copies
        .iter()
        .map(|c| c.iter().fold(0u64, |m, &v| m | 1u64 << v))
        .fold(g.vertex_mask(), |a, b| a & b);
    let labels: Vec<usize> = bits(inter).collect();
    let squares = induced_copies(&g.induced_mask(inter), Pattern::C4);
    squares
        .first()
        .map(|sq| sq.iter().fold(0u64, |m, &i| m | 1u64 << labels[i]))
}

/// Non-isolated part of `h`.
fn core(h: &Graph) -> Graph {
    let mask = bits(h.vertex_mask())
        .filter(|&v| h.degree(v) > 0)
        .fold(0u64, |m, v| m | 1u64 << v);
    h.induced_mask(mask)
}

fn necklace_report(g: &Graph) -> Result<CriticalityReport> {
    let cycles = necklace_cycles(g)
        .ok_or_else(|| Error::invariant(format!("{g} classified as a necklace")))?;
    let on_cycle = cycles.iter().flatten().fold(0u64, |m, &v| m | 1u64 << v);
    let good = |v: usize| inner_neighbors(g, v) >= 3;
    let bad: Vec<usize> = bits(on_cycle).filter(|&v| !good(v)).collect();
    let vector = bad.is_empty();
    let mut basis = Vec::new();
    if vector {
        basis.push(
            "every cycle vertex has at least three neighbors of degree greater than 1".into(),
        );
    }

    let copies = induced_copies(g, Pattern::L4Bar);
    let square = if copies.is_empty() {
        None
    } else {
        common_square(g, &copies)
    };
    let l4 = square.is_some_and(|q| bits(on_cycle & !q).all(good));
    if l4 {
        basis.push(
            "every induced L4-bar sits on one 4-cycle and other cycle vertices are inner".into(),
        );
    }
    let s3 = is_s_n_3(g);
    if s3 {
        basis.push("star with one extra edge between leaves".into());
    }

    let mut r = structural(g, vector, vector || l4 || s3, basis);
    r.vector_witness = bad.first().copied();
    if !r.complement_critical {
        // complement level: 4 with L4-bar, 2 for the bare square, else 3
        let is_c4 = g.order() == 4 && cycles.len() == 1 && cycles[0].len() == 4;
        r.witness = bad.iter().copied().find(|&v| {
            let h = g.delete_vertex(v).expect("vertex in range");
            let drops = if !copies.is_empty() {
                !contains_induced(&h, Pattern::L4Bar)
            } else {
                let c = core(&h);
                c.order() == 0 || (!is_c4 && (is_star(&c) || c == Graph::cycle(4)))
            };
            !drops
        });
    }
    Ok(r)
}

fn book_report(g: &Graph) -> Result<CriticalityReport> {
    let book =
        book_structure(g).ok_or_else(|| Error::invariant(format!("{g} classified as a book")))?;
    let (a, b) = book.binding;
    let on_cycle = book.cycle_mask();
    let good = |x: usize| {
        g.neighbors(x)
            .any(|u| on_cycle >> u & 1 == 0 && g.degree(u) > 1)
    };
    let vector = good(a) && good(b);
    let mut basis = Vec::new();
    if vector {
        basis.push("each binding vertex has an off-cycle neighbor of degree greater than 1".into());
    }
    let four = contains_induced(g, Pattern::C4) || contains_induced(g, Pattern::Kite);
    if four {
        basis.push("induced C4 or kite".into());
    }
    let lengths = book.cycle_lengths();
    let triangles = lengths.iter().all(|&t| t == 3)
        && (0..g.order()).all(|v| v == a || v == b || g.has_edge(v, a) || g.has_edge(v, b));
    if triangles {
        basis.push("all pages are triangles and every vertex touches the binding edge".into());
    }
    if on_cycle == g.vertex_mask() && lengths.iter().all(|&t| t == lengths[0]) {
        basis.push(format!(
            "B^t_m with t = {}, m = {}",
            lengths[0],
            lengths.len()
        ));
    }

    let mut r = structural(g, vector, vector || four || triangles, basis);
    let bad: Vec<usize> = [a, b].into_iter().filter(|&x| !good(x)).collect();
    r.vector_witness = bad.first().copied();
    if !r.complement_critical {
        r.witness = bad.iter().copied().find(|&x| {
            let c = core(&g.delete_vertex(x).expect("vertex in range"));
            !(c.order() == 0 || is_star(&c))
        });
    }
    Ok(r)
}

/// Structural verdict where a family applies, otherwise the sweep.
fn decide(g: &Graph) -> Result<CriticalityReport> {
    structural_criticality(g).or_else(|_| check_criticality(g))
}

/// Verdicts for a disconnected graph from its components.
///
/// Write `G = G1 ∪ G2` with `G2` a component of largest complement rank. Deleting
/// a vertex of `G1` leaves the complement rank alone, so `G1` must be vector
/// critical. Deleting a vertex of `G2` lowers the sum when `G2` is vector
/// critical, or when `G2` is complement critical and the complement rank of `G1`
/// is strictly smaller.
pub fn disconnected_rule(g: &Graph) -> Result<CriticalityReport> {
    if g.order() < 2 || g.is_connected() {
        return Err(Error::arg(format!("{g} is connected")));
    }
    let comps = g.components();
    let mut parts = Vec::with_capacity(comps.len());
    for c in &comps {
        let h = g.induced(c);
        let report = decide(&h)?;
        let crank = exact_rank(&h.complement(), Measure::Mvr)?;
        parts.push((report, crank));
    }
    let top = parts.iter().map(|p| p.1).max().unwrap_or(0);
    let i2 = parts.iter().position(|p| p.1 == top).expect("nonempty");
    let tie = parts.iter().filter(|p| p.1 == top).count() > 1;
    let first_vc_fail = (0..parts.len()).find(|&i| i != i2 && !parts[i].0.vector_critical);
    let g1_vector = first_vc_fail.is_none();
    let (g2, _) = &parts[i2];
    let g2_ok = g2.vector_critical || (g2.complement_critical && !tie);

    let mut basis = vec![format!(
        "component {} has the largest complement rank {top}",
        i2
    )];
    if tie {
        basis.push("another component reaches the same complement rank".into());
    }
    basis.push(format!(
        "other components {} vector critical",
        if g1_vector { "are all" } else { "are not all" }
    ));
    basis.push(format!(
        "component {} is {}",
        i2,
        match (g2.vector_critical, g2.complement_critical) {
            (true, _) => "vector critical",
            (false, true) => "complement critical only",
            (false, false) => "not complement critical",
        }
    ));

    let lift = |i: usize, v: Option<usize>| v.map(|v| comps[i][v]);
    let vector_witness = (0..parts.len()).find_map(|i| lift(i, parts[i].0.vector_witness));
    let witness = if let Some(i) = first_vc_fail {
        lift(i, parts[i].0.vector_witness)
    } else if !g2_ok {
        if tie {
            lift(i2, g2.vector_witness)
        } else {
            lift(i2, g2.witness)
        }
    } else {
        None
    };
    Ok(CriticalityReport {
        graph: write_graph6(g),
        measure: Measure::Mvr,
        method: Method::Disconnected,
        vector_critical: parts.iter().all(|p| p.0.vector_critical),
        complement_critical: g1_vector && g2_ok,
        rank: None,
        complement_rank: Some(top),
        per_vertex: Vec::new(),
        witness,
        vector_witness,
        basis,
    })
}

/// Criticality with respect to `mr+`, by deletion sweep, cross-checked against the
/// implications from `mvr`-criticality and the degree-based family conditions.
pub fn msr_criticality(g: &Graph) -> Result<CriticalityReport> {
    let mut r = sweep(g, Measure::MrPlus)?;
    let disagree = |r: &CriticalityReport, claim: &str| Error::Disagreement {
        graph6: r.graph.clone(),
        message: format!("{claim} but the mr+ sweep says otherwise"),
    };
    let n = g.order();
    if n > 1 && g.is_connected() && g.complement().is_connected() {
        if let Ok(m) = check_criticality(g) {
            if m.vector_critical && !r.vector_critical {
                return Err(disagree(&r, "mvr vector critical"));
            }
            if m.complement_critical && !r.complement_critical {
                return Err(disagree(&r, "mvr complement critical"));
            }
            r.basis.push(format!(
                "mvr sweep: vector critical {}, complement critical {}",
                m.vector_critical, m.complement_critical
            ));
        }
    }
    let (kind, _, _) = classify_kind(g);
    match kind {
        Kind::Cycle | Kind::Unicyclic | Kind::Necklace => {
            let cycles = necklace_cycles(g).unwrap_or_default();
            let on_cycle = cycles.iter().flatten().fold(0u64, |m, &v| m | 1u64 << v);
            if bits(on_cycle).all(|v| g.degree(v) >= 3) {
                if !r.vector_critical {
                    return Err(disagree(&r, "every cycle vertex has degree at least 3"));
                }
                r.basis
                    .push("every cycle vertex has degree at least 3".into());
            }
            let copies = induced_copies(g, Pattern::L4Bar);
            if !copies.is_empty() {
                if let Some(q) = common_square(g, &copies) {
                    if bits(on_cycle & !q).all(|v| g.degree(v) >= 3) {
                        if !r.complement_critical {
                            return Err(disagree(
                                &r,
                                "single L4-bar square with degree-3 cycles elsewhere",
                            ));
                        }
                        r.basis.push("every induced L4-bar sits on one 4-cycle, other cycle vertices have degree at least 3".into());
                    }
                }
            }
        }
        Kind::Book => {
            if let Some(book) = book_structure(g) {
                let on_cycle = book.cycle_mask();
                let (a, b) = book.binding;
                if [a, b]
                    .iter()
                    .all(|&x| g.neighbors(x).any(|u| on_cycle >> u & 1 == 0))
                {
                    if !r.vector_critical {
                        return Err(disagree(
                            &r,
                            "each binding vertex has an off-cycle neighbor",
                        ));
                    }
                    r.basis
                        .push("each binding vertex has an off-cycle neighbor".into());
                }
            }
        }
        _ => {}
    }
    Ok(r)
}

/// All applicable methods side by side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalityAnalysis {
    pub definitional: Option<CriticalityReport>,
    pub structural: Option<CriticalityReport>,
    pub disconnected: Option<CriticalityReport>,
    /// True when at least two methods ran and all agree.
    pub agree: bool,
    pub vector_critical: bool,
    pub complement_critical: bool,
}

/// Runs every applicable method. Disagreement between methods is an error.
pub fn analyze_criticality(g: &Graph) -> Result<CriticalityAnalysis> {
    let definitional = check_criticality(g);
    let structural = structural_criticality(g).ok();
    let disconnected = if g.order() > 1 && !g.is_connected() {
        disconnected_rule(g).ok()
    } else {
        None
    };
    let mut present: Vec<&CriticalityReport> = Vec::new();
    if let Ok(d) = &definitional {
        present.push(d);
    }
    present.extend(structural.iter());
    present.extend(disconnected.iter());
    let Some(first) = present.first() else {
        return Err(definitional.expect_err("no method ran"));
    };
    let verdict = first.verdicts();
    if let Some(other) = present.iter().find(|r| r.verdicts() != verdict) {
        return Err(Error::Disagreement {
            graph6: write_graph6(g),
            message: format!(
                "{:?} says (vector, complement) = {:?}, {:?} says {:?}",
                first.method,
                verdict,
                other.method,
                other.verdicts()
            ),
        });
    }
    let agree = present.len() > 1;
    Ok(CriticalityAnalysis {
        definitional: definitional.ok(),
        structural,
        disconnected,
        agree,
        vector_critical: verdict.0,
        complement_critical: verdict.1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{b_t_m, s_n_3, sun};

    fn both(g: &Graph) -> (bool, bool) {
        let d = check_criticality(g).unwrap();
        let s = structural_criticality(g).unwrap();
        assert_eq!(d.verdicts(), s.verdicts(), "{g}");
        d.verdicts()
    }

    #[test]
    fn cycles() {
        assert_eq!(both(&Graph::cycle(3)), (false, true));
        for n in 4..=8 {
            let d = check_criticality(&Graph::cycle(n)).unwrap();
            assert!(!d.complement_critical, "C{n}");
            assert!(!both(&Graph::cycle(n)).1);
        }
    }

    #[test]
    fn trees() {
        assert_eq!(both(&Graph::path(4)), (true, true));
        let p4 = check_criticality(&Graph::path(4)).unwrap();
        assert!(p4.per_vertex.iter().all(|o| o.rank == 2));
        let star = structural_criticality(&Graph::star(7)).unwrap();
        assert_eq!(star.verdicts(), (false, true));
        assert_eq!(star.vector_witness, Some(0));
        assert_eq!(both(&Graph::star(7)), (false, true));
        assert_eq!(both(&Graph::empty(1)), (true, true));
    }

    #[test]
    fn unicyclic_and_books() {
        assert!(both(&s_n_3(8).unwrap()).1);
        assert!(both(&Pattern::L4Bar.graph()).1);
        assert!(!both(&b_t_m(5, 2).unwrap()).1);
        assert!(both(&b_t_m(4, 3).unwrap()).1);
        assert!(both(&b_t_m(3, 4).unwrap()).1);
        assert!(both(&Pattern::Kite.graph()).1);
    }

    #[test]
    fn witnesses_point_at_non_decreasing_vertices() {
        for g in [Graph::cycle(6), b_t_m(6, 2).unwrap()] {
            let d = check_criticality(&g).unwrap();
            let s = structural_criticality(&g).unwrap();
            let w = s.witness.expect("structural witness");
            assert!(!d.per_vertex[w].decreased, "{g}");
        }
    }

    #[test]
    fn disconnected_small_cases() {
        for g in [
            Graph::empty(2),
            Graph::empty(1).union(&Graph::complete(2)),
            Graph::path(4).union(&Graph::star(5)),
            Graph::path(4).union(&Graph::path(5)),
            Graph::cycle(5).union(&Graph::path(3)),
        ] {
            let d = check_criticality(&g).unwrap();
            let r = disconnected_rule(&g).unwrap();
            assert_eq!(d.verdicts(), r.verdicts(), "{g}");
        }
        // equal complement ranks with both sides vector critical still qualify
        assert!(
            disconnected_rule(&Graph::empty(2))
                .unwrap()
                .complement_critical
        );
        assert!(disconnected_rule(&Graph::path(4)).is_err());
    }

    #[test]
    fn suns() {
        for n in 3..=5 {
            let g = sun(n).unwrap();
            assert!(msr_criticality(&g).unwrap().vector_critical);
            assert!(!check_criticality(&g).unwrap().vector_critical);
        }
        let p4 = msr_criticality(&Graph::path(4)).unwrap();
        assert_eq!(
            p4.verdicts(),
            check_criticality(&Graph::path(4)).unwrap().verdicts()
        );
        let k13 = msr_criticality(&Graph::star(4)).unwrap();
        assert_eq!(k13.measure, Measure::MrPlus);
    }

    #[test]
    fn analysis_agrees_and_rejects_uncovered() {
        let a = analyze_criticality(&s_n_3(6).unwrap()).unwrap();
        assert!(a.agree && a.complement_critical);
        let petersen = Graph::from_edges(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
            ],
        );
        assert!(matches!(
            check_criticality(&petersen),
            Err(Error::Uncovered { .. })
        ));
        assert!(matches!(
            structural_criticality(&petersen),
            Err(Error::Classification { .. })
        ));
    }
}
