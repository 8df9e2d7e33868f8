//! Four-cycles of a necklace: subdivide one edge each, represent the result in
//! dimension 3, then restore the edges with a fourth coordinate.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{first_violation, Representation};
use crate::error::{Error, Result};
use crate::families::necklace_cycles;
use crate::graph::Graph;
use crate::rational::{dot, QVec, Q};

/// Edge `u-v` of a four-cycle replaced by the path `u-w-v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Split {
    pub u: usize,
    pub v: usize,
    pub w: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdivisionRecord {
    pub original: Graph,
    pub splits: Vec<Split>,
}

impl SubdivisionRecord {
    pub fn subdivided(&self) -> Graph {
        let n = self.original.order();
        let mut edges: Vec<(usize, usize)> = self
            .original
            .edges()
            .into_iter()
            .filter(|&(a, b)| {
                !self
                    .splits
                    .iter()
                    .any(|s| (a, b) == (s.u.min(s.v), s.u.max(s.v)))
            })
            .collect();
        for s in &self.splits {
            edges.push((s.u, s.w));
            edges.push((s.w, s.v));
        }
        Graph::from_edges(n + self.splits.len(), &edges)
    }
}

/// Splits, in every four-cycle of the necklace `g`, an edge away from the vertex
/// nearest vertex 0, so that split endpoints of different cycles are never adjacent.
pub fn subdivide_four_cycles(g: &Graph) -> Result<(Graph, SubdivisionRecord)> {
    let cycles = necklace_cycles(g).ok_or_else(|| Error::Classification {
        kind: crate::families::classify_kind(g).0,
        message: "four-cycle subdivision needs a necklace".into(),
    })?;
    let n = g.order();
    let mut dist = vec![usize::MAX; n];
    dist[0] = 0;
    let mut queue = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        for y in g.neighbors(x) {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    let mut splits = Vec::new();
    for c in cycles.iter().filter(|c| c.len() == 4) {
        let at = (0..4).min_by_key(|&i| dist[c[i]]).expect("four vertices");
        splits.push(Split {
            u: c[(at + 1) % 4],
            v: c[(at + 2) % 4],
            w: n + splits.len(),
        });
    }
    let record = SubdivisionRecord {
        original: g.clone(),
        splits,
    };
    Ok((record.subdivided(), record))
}

/// Lifts a 3-dimensional representation of the complement of the subdivided
/// necklace to a 4-dimensional one of the original complement.
pub fn lift_four_cycles(
    n_prime_rep: &Representation,
    record: &SubdivisionRecord,
) -> Result<Representation> {
    lift_with(n_prime_rep, record, None).map(|(r, _)| r)
}

/// With `chosen` the fourth coordinates `x_i` are taken as given instead of searched.
pub(crate) fn lift_with(
    base: &Representation,
    record: &SubdivisionRecord,
    chosen: Option<&[Q]>,
) -> Result<(Representation, Vec<Q>)> {
    let g = &record.original;
    let n = g.order();
    if base.order() != n + record.splits.len() {
        return Err(Error::arg(format!(
            "subdivided representation covers {} vertices, expected {}",
            base.order(),
            n + record.splits.len()
        )));
    }
    let mut vecs: Vec<QVec> = base.vectors[..n]
        .iter()
        .map(|v| {
            let mut w = v.clone();
            w.push(Q::zero());
            w
        })
        .collect();
    let mut xs = Vec::new();
    for (i, s) in record.splits.iter().enumerate() {
        let uv = dot(&base.vectors[s.u], &base.vectors[s.v]);
        if uv.is_zero() {
            return Err(Error::invariant(format!(
                "split endpoints {} and {} are orthogonal before lifting",
                s.u, s.v
            )));
        }
        let fits = |vecs: &[QVec], a: usize| {
            (0..n)
                .filter(|&b| b != a)
                .all(|b| dot(&vecs[a], &vecs[b]).is_zero() == g.has_edge(a, b))
        };
        let limit = 4 * n as i64 + 1;
        let candidates: Vec<Q> = match chosen {
            Some(c) => vec![c
                .get(i)
                .cloned()
                .ok_or_else(|| Error::arg("missing lift coordinate"))?],
            None => (1..=limit)
                .map(|x| Q::from_integer(BigInt::from(x)))
                .collect(),
        };
        let mut found = None;
        for x in candidates {
            let y = -&uv / &x;
            vecs[s.u][3] = x.clone();
            vecs[s.v][3] = y;
            if fits(&vecs, s.u) && fits(&vecs, s.v) {
                found = Some(x);
                break;
            }
        }
        let x = found.ok_or_else(|| {
            Error::invariant(format!("no fourth coordinate for split {}-{}", s.u, s.v))
        })?;
        xs.push(x);
    }
    if let Some(bad) = first_violation(&g.complement(), &vecs) {
        return Err(Error::invariant(format!(
            "lifted representation invalid: {bad}"
        )));
    }
    Ok((Representation::new(4, vecs)?, xs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Pattern;

    #[test]
    fn split_avoids_root_side() {
        // two squares joined by the bridge 2-4
        let g = Graph::from_edges(
            8,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 0),
                (2, 4),
                (4, 5),
                (5, 6),
                (6, 7),
                (7, 4),
            ],
        );
        let (np, rec) = subdivide_four_cycles(&g).unwrap();
        assert_eq!(np.order(), 10);
        assert_eq!(rec.splits.len(), 2);
        for s in &rec.splits {
            assert!(g.has_edge(s.u, s.v));
            assert!(!np.has_edge(s.u, s.v));
        }
        for a in &rec.splits {
            for b in &rec.splits {
                if a != b {
                    for p in [a.u, a.v] {
                        assert!(!g.has_edge(p, b.u) && !g.has_edge(p, b.v));
                    }
                }
            }
        }
        assert!(necklace_cycles(&np).unwrap().iter().all(|c| c.len() == 5));
    }

    #[test]
    fn l4bar_subdivides_to_unicyclic() {
        let (np, rec) = subdivide_four_cycles(&Pattern::L4Bar.graph()).unwrap();
        assert_eq!(rec.splits.len(), 1);
        assert_eq!(np.size(), np.order());
    }
}
