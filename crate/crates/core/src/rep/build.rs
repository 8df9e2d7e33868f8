//! Orchestration: pick the target dimension from the family formula and build a
//! certificate by peeling twins, then growing cycles and trees one step at a time.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::extend::Builder;
use super::lift::{lift_with, subdivide_four_cycles, Split, SubdivisionRecord};
use super::{base_representation, first_violation, Representation};
use crate::error::{Error, Result};
use crate::families::{book_structure, classify_kind, is_star, necklace_cycles, Kind};
use crate::graph::{
    induced_copies, parse_graph6, write_graph6, BlockDecomposition, Graph, Pattern,
};
use crate::rank::complement_family_value;
use crate::rational::{format_q, parse_q, qvec, Q};

/// One construction step; parameters are the enumeration indices that were chosen.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum Step {
    Fixed {
        vertex: usize,
        vector: Vec<String>,
    },
    Generic {
        vertex: usize,
        t: u64,
    },
    Pendant {
        vertex: usize,
        anchor: usize,
        t: u64,
    },
    Triangle {
        u: usize,
        v: usize,
        w: usize,
        s: u64,
        t: u64,
    },
    CloseEar {
        u: usize,
        v: usize,
        w: usize,
        t: u64,
    },
    Duplicate {
        vertex: usize,
        of: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftTrace {
    pub splits: Vec<Split>,
    pub x: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuildTrace {
    /// graph6 of the graph whose complement is represented.
    pub graph: String,
    /// graph6 of the graph the steps run on (the subdivided necklace when lifting).
    pub work_graph: String,
    pub dim: usize,
    pub steps: Vec<Step>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lift: Option<LiftTrace>,
}

enum Op {
    Seed(usize),
    Pendant(usize, usize),
    Triangle(usize, usize, usize),
    Ear(usize, usize, usize),
}

/// Exact representation of the complement of `g` in dimension `mvr(complement g)`.
pub fn build_complement_rep(g: &Graph) -> Result<(Representation, BuildTrace)> {
    let n = g.order();
    let (kind, _, _) = classify_kind(g);
    let covered =
        kind.is_necklace_like() || kind == Kind::Book || (kind == Kind::Complete && n <= 3);
    if !covered || n == 0 {
        return Err(Error::Classification {
            kind,
            message: "complement representations are built for trees, necklaces and books".into(),
        });
    }
    if n > 62 {
        return Err(Error::arg(format!(
            "order {n} exceeds the graph6 limit of 62"
        )));
    }
    let target = match kind {
        Kind::Complete => n,
        _ => complement_family_value(g).expect("covered family").1,
    };
    let (rep, trace) = match target {
        1 => direct(g, 1, |_| qvec(&[1]))?,
        2 if is_star(g) => {
            let center = (0..n).find(|&v| g.degree(v) + 1 == n).expect("star center");
            direct(g, 2, |v| {
                if v == center {
                    qvec(&[1, 0])
                } else {
                    qvec(&[0, 1])
                }
            })?
        }
        2 => {
            // C4: opposite corners share a vector
            let c = necklace_cycles(g)
                .and_then(|cs| cs.into_iter().next())
                .ok_or_else(|| Error::invariant("dimension 2 outside stars and C4"))?;
            let pos = |v: usize| c.iter().position(|&x| x == v).expect("on the cycle");
            direct(g, 2, |v| {
                if pos(v) % 2 == 0 {
                    qvec(&[1, 0])
                } else {
                    qvec(&[0, 1])
                }
            })?
        }
        3 => {
            let mut b = Builder::new(g, 3);
            build_three(&mut b)?;
            finish(g, g, b, None)?
        }
        4 if kind == Kind::Book => {
            let mut b = Builder::new(g, 4);
            build_book_four(&mut b)?;
            finish(g, g, b, None)?
        }
        4 => {
            let (np, record) = subdivide_four_cycles(g)?;
            if np.order() > 62 {
                return Err(Error::arg("subdivided necklace exceeds 62 vertices"));
            }
            let mut b = Builder::new(&np, 3);
            build_three(&mut b)?;
            let steps = std::mem::take(&mut b.steps);
            let base = b.finish()?;
            let (rep, xs) = lift_with(&base, &record, None)?;
            let trace = BuildTrace {
                graph: write_graph6(g),
                work_graph: write_graph6(&np),
                dim: 3,
                steps,
                lift: Some(LiftTrace {
                    splits: record.splits.clone(),
                    x: xs.iter().map(format_q).collect(),
                }),
            };
            (rep, trace)
        }
        d => return Err(Error::invariant(format!("unexpected target dimension {d}"))),
    };
    if rep.dim != target {
        return Err(Error::invariant(format!(
            "built dimension {} but expected {target}",
            rep.dim
        )));
    }
    if let Some(bad) = first_violation(&g.complement(), &rep.vectors) {
        return Err(Error::invariant(format!(
            "built representation of {g} invalid: {bad}"
        )));
    }
    Ok((rep, trace))
}

fn direct(
    g: &Graph,
    dim: usize,
    f: impl Fn(usize) -> Vec<Q>,
) -> Result<(Representation, BuildTrace)> {
    let mut b = Builder::new(g, dim);
    for v in 0..g.order() {
        b.fixed(v, f(v))?;
    }
    finish(g, g, b, None)
}

fn finish(
    g: &Graph,
    work: &Graph,
    mut b: Builder,
    lift: Option<LiftTrace>,
) -> Result<(Representation, BuildTrace)> {
    let steps = std::mem::take(&mut b.steps);
    let dim = b.dim;
    let rep = b.finish()?;
    Ok((
        rep,
        BuildTrace {
            graph: write_graph6(g),
            work_graph: write_graph6(work),
            dim,
            steps,
            lift,
        },
    ))
}

/// Keeps the smallest vertex of each class of non-adjacent vertices with equal
/// neighborhoods; returns the kept vertices and `(extra, kept twin)` pairs.
fn peel_twins(g: &Graph) -> (Vec<usize>, Vec<(usize, usize)>) {
    let mut kept = Vec::new();
    let mut extra = Vec::new();
    for v in 0..g.order() {
        match kept
            .iter()
            .find(|&&u| !g.has_edge(u, v) && g.neighbor_mask(u) == g.neighbor_mask(v))
        {
            Some(&u) => extra.push((v, u)),
            None => kept.push(v),
        }
    }
    (kept, extra)
}

fn run(b: &mut Builder, ops: &[Op]) -> Result<()> {
    for op in ops {
        match *op {
            Op::Seed(v) => b.generic(v)?,
            Op::Pendant(v, a) => b.pendant(v, a)?,
            Op::Triangle(u, v, w) => b.attach_triangle(u, v, w)?,
            Op::Ear(u, v, w) => {
                b.close_ear(u, v, w)?;
            }
        }
    }
    Ok(())
}

/// Dimension-3 construction of the twin-free core followed by twin copies.
fn build_three(b: &mut Builder) -> Result<()> {
    let g = b.g;
    let (kept, extra) = peel_twins(g);
    let h = g.induced(&kept);
    let ops = if book_structure(&h).is_some() {
        book_ops(&h)?
    } else if necklace_cycles(&h).is_some() || h.order() == 1 {
        necklace_ops(&h)?
    } else {
        return Err(Error::invariant(format!(
            "twin-free core of {g} is neither necklace nor book"
        )));
    };
    let mapped: Vec<Op> = ops
        .into_iter()
        .map(|op| match op {
            Op::Seed(v) => Op::Seed(kept[v]),
            Op::Pendant(v, a) => Op::Pendant(kept[v], kept[a]),
            Op::Triangle(u, v, w) => Op::Triangle(kept[u], kept[v], kept[w]),
            Op::Ear(u, v, w) => Op::Ear(kept[u], kept[v], kept[w]),
        })
        .collect();
    run(b, &mapped)?;
    for (v, of) in extra {
        b.duplicate(v, of)?;
    }
    Ok(())
}

/// Walks the block tree from vertex 0: bridges become pendants, triangles are
/// attached, longer cycles are grown as two pendant paths and closed by an ear.
fn necklace_ops(h: &Graph) -> Result<Vec<Op>> {
    let blocks = BlockDecomposition::of(h).blocks;
    let mut done = vec![false; blocks.len()];
    let mut ops = vec![Op::Seed(0)];
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for (i, block) in blocks.iter().enumerate() {
            if done[i] || !block.contains(&x) {
                continue;
            }
            done[i] = true;
            match block.len() {
                1 => {}
                2 => {
                    let y = if block[0] == x { block[1] } else { block[0] };
                    ops.push(Op::Pendant(y, x));
                    queue.push_back(y);
                }
                _ => {
                    let mask = block.iter().fold(0u64, |m, &v| m | 1u64 << v);
                    let a = walk_from(h, mask, x);
                    cycle_ops(&mut ops, x, &a[1..], None)?;
                    queue.extend(&a[1..]);
                }
            }
        }
    }
    Ok(ops)
}

/// Cycle `x, a[0], ..., a[k-2]` hanging at the placed vertex `x`. With `close`
/// the path `a` runs from a neighbor of `x` to a neighbor of the placed `close`.
fn cycle_ops(ops: &mut Vec<Op>, x: usize, a: &[usize], close: Option<usize>) -> Result<()> {
    let q = a.len();
    let end = close.unwrap_or(x);
    match (q, close) {
        (2, None) => ops.push(Op::Triangle(a[0], a[1], x)),
        (1, Some(_)) => return Err(Error::invariant("triangle pages are attached directly")),
        (2, Some(_)) | (3, None) => {
            return Err(Error::invariant(
                "four-cycles have no dimension-3 construction",
            ));
        }
        _ => {
            ops.push(Op::Pendant(a[0], x));
            ops.push(Op::Pendant(a[q - 1], end));
            for j in (2..q - 1).rev() {
                ops.push(Op::Pendant(a[j], a[j + 1]));
            }
            ops.push(Op::Ear(a[1], a[0], a[2]));
        }
    }
    Ok(())
}

fn walk_from(h: &Graph, mask: u64, x: usize) -> Vec<usize> {
    let mut order = vec![x];
    let mut cur = x;
    while let Some(w) = crate::graph::bits(h.neighbor_mask(cur) & mask).find(|w| !order.contains(w))
    {
        order.push(w);
        cur = w;
    }
    order
}

/// Binding vertices first, a triangle page if there is one, then each long page
/// as an ear, then the hanging trees.
fn book_ops(h: &Graph) -> Result<Vec<Op>> {
    let book = book_structure(h).expect("checked by caller");
    let (a, b) = book.binding;
    let mut pages = book.pages.clone();
    pages.sort_by_key(|p| p.len());
    let mut ops = vec![Op::Seed(a)];
    let mut rest = &pages[..];
    if pages[0].len() == 1 {
        ops.push(Op::Triangle(b, pages[0][0], a));
        rest = &pages[1..];
    } else {
        ops.push(Op::Pendant(b, a));
    }
    for p in rest {
        cycle_ops(&mut ops, a, p, Some(b))?;
    }
    let mut placed = book.cycle_mask();
    let mut queue: VecDeque<usize> = crate::graph::bits(placed).collect();
    while let Some(x) = queue.pop_front() {
        for y in h.neighbors(x) {
            if placed >> y & 1 == 0 {
                placed |= 1u64 << y;
                ops.push(Op::Pendant(y, x));
                queue.push_back(y);
            }
        }
    }
    Ok(ops)
}

/// Dimension-4 book: start from a stored base pattern, extend generically.
fn build_book_four(b: &mut Builder) -> Result<()> {
    let g = b.g;
    let (kept, extra) = peel_twins(g);
    let h = g.induced(&kept);
    let base = [
        Pattern::Kite,
        Pattern::Domino,
        Pattern::P5Bar,
        Pattern::L4Bar,
    ]
    .into_iter()
    .find_map(|p| induced_copies(&h, p).into_iter().next().map(|m| (p, m)));
    match base {
        Some((p, map)) => {
            let rep = base_representation(p);
            for (i, &v) in map.iter().enumerate() {
                b.fixed(kept[v], rep.vectors[i].clone())?;
            }
        }
        None => b.generic(kept[0])?,
    }
    loop {
        let next = kept
            .iter()
            .copied()
            .filter(|&v| !b.is_placed(v) && b.placed_neighbors(v) != 0)
            .min_by_key(|&v| (b.placed_neighbors(v).count_ones(), v));
        match next {
            Some(v) => b.generic(v)?,
            None => break,
        }
    }
    if let Some(&v) = kept.iter().find(|&&v| !b.is_placed(v)) {
        return Err(Error::invariant(format!(
            "vertex {v} unreachable from the base"
        )));
    }
    for (v, of) in extra {
        b.duplicate(v, of)?;
    }
    Ok(())
}

/// Rebuilds a representation from its trace without any parameter search.
pub fn replay(trace: &BuildTrace) -> Result<Representation> {
    let g = parse_graph6(&trace.graph)?;
    let work = parse_graph6(&trace.work_graph)?;
    let mut b = Builder::new(&work, trace.dim);
    for step in &trace.steps {
        b.apply(step)?;
    }
    let mut rep = b.finish()?;
    if let Some(lift) = &trace.lift {
        let record = SubdivisionRecord {
            original: g.clone(),
            splits: lift.splits.clone(),
        };
        if record.subdivided() != work {
            return Err(Error::arg("work graph is not the recorded subdivision"));
        }
        let xs = lift
            .x
            .iter()
            .map(|s| parse_q(s))
            .collect::<Result<Vec<_>>>()?;
        rep = lift_with(&rep, &record, Some(&xs))?.0;
    } else if work != g {
        return Err(Error::arg(
            "work graph differs from the graph without a lift",
        ));
    }
    if let Some(bad) = first_violation(&g.complement(), &rep.vectors) {
        return Err(Error::invariant(format!(
            "replayed representation invalid: {bad}"
        )));
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{b_t_m, s_n_3};
    use crate::rank::mvr_exact;

    fn check(g: &Graph) -> Representation {
        let (rep, trace) = build_complement_rep(g).unwrap_or_else(|e| panic!("{g}: {e}"));
        assert_eq!(Some(rep.dim), mvr_exact(&g.complement()).exact(), "{g}");
        assert_eq!(replay(&trace).unwrap(), rep, "{g}");
        rep
    }

    #[test]
    fn small_families() {
        for g in [
            Graph::complete(1),
            Graph::complete(2),
            Graph::complete(3),
            Graph::star(5),
            Graph::path(4),
            Graph::path(7),
            Graph::cycle(4),
            Graph::cycle(5),
            Graph::cycle(9),
            s_n_3(5).unwrap(),
        ] {
            check(&g);
        }
    }

    #[test]
    fn books() {
        assert_eq!(check(&b_t_m(3, 3).unwrap()).dim, 3);
        assert_eq!(check(&b_t_m(5, 3).unwrap()).dim, 3);
        assert_eq!(check(&b_t_m(4, 2).unwrap()).dim, 4);
        assert_eq!(check(&b_t_m(4, 3).unwrap()).dim, 4);
        assert_eq!(check(&Pattern::Kite.graph()).dim, 4);
        assert_eq!(check(&Pattern::P5Bar.graph()).dim, 4);
    }

    #[test]
    fn lifted_necklaces() {
        assert_eq!(check(&Pattern::L4Bar.graph()).dim, 4);
        // two L4-bar squares joined by the bridge 1-6
        let g = Graph::from_edges(
            12,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 0),
                (0, 4),
                (1, 5),
                (6, 7),
                (7, 8),
                (8, 9),
                (9, 6),
                (6, 10),
                (7, 11),
                (1, 6),
            ],
        );
        assert_eq!(check(&g).dim, 4);
    }

    #[test]
    fn rejects_other_graphs() {
        assert!(matches!(
            build_complement_rep(&Graph::complete(4)),
            Err(Error::Classification { .. })
        ));
        assert!(build_complement_rep(&Graph::empty(3)).is_err());
    }
}
