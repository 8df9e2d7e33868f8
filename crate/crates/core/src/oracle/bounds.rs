use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::numeric::{check_numeric, numeric_rep_search, NumericRep};
use super::{independence_number, OracleConfig};
use crate::graph::{bits, duplicate_pairs, write_graph6, Graph};
use crate::rank::{mvr_exact, Value};
use crate::rational::{dot, norm2, q, QVec, Q};
use crate::rep::{build_complement_rep, extend::greedy, verify_representation, Representation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LowerReason {
    /// An independent set needs mutually orthogonal vectors.
    Independence,
    /// Exact rank of an induced subgraph from the rule engine.
    InducedSubgraph,
    Components,
    JoinParts,
    Duplicate,
    Trivial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LowerBound {
    pub value: usize,
    pub reason: LowerReason,
    /// The independent set or induced subgraph behind the bound.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub vertices: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertClass {
    Exact,
    Numeric,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum UpperSource {
    Trivial,
    FamilyConstruction,
    Greedy,
    NumericSearch,
    Components,
    JoinParts,
    Duplicate,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "class", content = "representation", rename_all = "snake_case")]
pub enum Witness {
    Exact(Representation),
    Numeric(NumericRep),
}

impl Witness {
    pub fn dim(&self) -> usize {
        match self {
            Witness::Exact(r) => r.dim,
            Witness::Numeric(r) => r.dim,
        }
    }

    pub fn class(&self) -> CertClass {
        match self {
            Witness::Exact(_) => CertClass::Exact,
            Witness::Numeric(_) => CertClass::Numeric,
        }
    }

    fn floats(&self) -> Vec<Vec<f64>> {
        match self {
            Witness::Exact(r) => r.to_f64(),
            Witness::Numeric(r) => r.vectors.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct UpperBound {
    pub value: usize,
    pub class: CertClass,
    pub source: UpperSource,
    pub witness: Witness,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MvrBounds {
    pub graph: String,
    pub value: Value,
    pub lower: LowerBound,
    pub upper: UpperBound,
}

impl MvrBounds {
    pub fn lo(&self) -> usize {
        self.lower.value
    }

    pub fn hi(&self) -> usize {
        self.upper.value
    }
}

/// Certified interval for `mvr(g)`: `lo` from independence and exactly ranked
/// induced subgraphs, `hi` from the smallest dimension with a verified
/// representation, searched upward from `lo`.
pub fn mvr_bounds(g: &Graph, cfg: &OracleConfig) -> MvrBounds {
    let (lower, upper) = bounds(g, cfg);
    let value = if lower.value == upper.value {
        Value::Exact(lower.value)
    } else {
        Value::Interval {
            lo: lower.value,
            hi: upper.value,
        }
    };
    MvrBounds {
        graph: write_graph6(g),
        value,
        lower,
        upper,
    }
}

fn upper(source: UpperSource, witness: Witness) -> UpperBound {
    UpperBound {
        value: witness.dim(),
        class: witness.class(),
        source,
        witness,
    }
}

fn lower(value: usize, reason: LowerReason, vertices: Vec<usize>) -> LowerBound {
    LowerBound {
        value,
        reason,
        vertices,
    }
}

/// Accepts `w` only if it really represents `g`.
fn certify(g: &Graph, w: Witness, cfg: &OracleConfig) -> Option<Witness> {
    match w {
        Witness::Exact(r) => verify_representation(g, &r)
            .ok()
            .filter(|v| v.is_accepted())
            .map(|_| Witness::Exact(r)),
        Witness::Numeric(r) => check_numeric(g, &r.vectors, cfg).map(Witness::Numeric),
    }
}

fn unit(dim: usize, i: usize) -> QVec {
    (0..dim)
        .map(|k| if k == i { Q::one() } else { Q::zero() })
        .collect()
}

fn bounds(g: &Graph, cfg: &OracleConfig) -> (LowerBound, UpperBound) {
    let n = g.order();
    if n == 0 {
        let w = Witness::Exact(Representation::new(0, Vec::new()).expect("empty"));
        return (
            lower(0, LowerReason::Trivial, Vec::new()),
            upper(UpperSource::Trivial, w),
        );
    }
    if g.is_complete() {
        let w = Witness::Exact(Representation::new(1, vec![vec![Q::one()]; n]).expect("ones"));
        return (
            lower(1, LowerReason::Trivial, Vec::new()),
            upper(UpperSource::Trivial, w),
        );
    }
    if g.is_edgeless() {
        let w = Witness::Exact(
            Representation::new(n, (0..n).map(|i| unit(n, i)).collect()).expect("basis"),
        );
        return (
            lower(n, LowerReason::Independence, (0..n).collect()),
            upper(UpperSource::Trivial, w),
        );
    }
    if !g.is_connected() {
        if let Some(b) = compose(g, &g.components(), cfg, false) {
            return b;
        }
    }
    let gc = g.complement();
    if !gc.is_connected() {
        if let Some(b) = compose(g, &gc.components(), cfg, true) {
            return b;
        }
    }

    let mut lo = lower_bound(g);
    let mut best: Option<UpperBound> = build_complement_rep(&gc)
        .ok()
        .and_then(|(r, _)| certify(g, Witness::Exact(r), cfg))
        .map(|w| upper(UpperSource::FamilyConstruction, w));

    if best.is_none() {
        if let Some(&(u, v)) = duplicate_pairs(g).first() {
            let h = g.delete_vertex(v).expect("vertex in range");
            let (sub_lo, sub_hi) = bounds(&h, cfg);
            if sub_lo.value > lo.value {
                lo = lower(sub_lo.value, LowerReason::Duplicate, Vec::new());
            }
            let at = if u < v { u } else { u - 1 };
            let w = match sub_hi.witness {
                Witness::Exact(mut r) => {
                    let x = r.vectors[at].clone();
                    r.vectors.insert(v, x);
                    Witness::Exact(r)
                }
                Witness::Numeric(mut r) => {
                    let x = r.vectors[at].clone();
                    r.vectors.insert(v, x);
                    Witness::Numeric(r)
                }
            };
            best = certify(g, w, cfg).map(|w| upper(UpperSource::Duplicate, w));
        }
    }

    let ceiling = best.as_ref().map_or(n, |b| b.value.saturating_sub(1));
    let orders = [smallest_last(&gc), (0..n).collect::<Vec<_>>()];
    for d in lo.value.max(1)..=ceiling {
        let exact = orders.iter().find_map(|o| {
            greedy(&gc, d, o)
                .ok()
                .and_then(|r| certify(g, Witness::Exact(r), cfg))
        });
        if let Some(w) = exact {
            best = Some(upper(UpperSource::Greedy, w));
            break;
        }
        if let Some(r) = numeric_rep_search(g, d, cfg) {
            best = Some(upper(UpperSource::NumericSearch, Witness::Numeric(r)));
            break;
        }
    }
    let best = best.unwrap_or_else(|| {
        // every search failed up to n; spare dimensions leave room at every step
        let w = (n + 1..=2 * n + 2)
            .find_map(|d| {
                greedy(&gc, d, &orders[1])
                    .ok()
                    .and_then(|r| certify(g, Witness::Exact(r), cfg))
            })
            .expect("greedy with spare dimensions");
        upper(UpperSource::Greedy, w)
    });
    (lo, best)
}

/// Reverse of repeatedly removing a vertex of least remaining degree.
fn smallest_last(h: &Graph) -> Vec<usize> {
    let mut alive = h.vertex_mask();
    let mut removed = Vec::with_capacity(h.order());
    while alive != 0 {
        let v = bits(alive)
            .min_by_key(|&v| (h.neighbor_mask(v) & alive).count_ones())
            .expect("nonempty");
        removed.push(v);
        alive &= !(1u64 << v);
    }
    removed.reverse();
    removed
}

/// Largest exact rank among induced subgraphs (all of them for `n <= 10`,
/// otherwise the graph and its single deletions), at least the independence number.
fn lower_bound(g: &Graph) -> LowerBound {
    let n = g.order();
    let (alpha, set) = independence_number(g);
    let mut best = lower(alpha, LowerReason::Independence, set);
    let full = g.vertex_mask();
    let masks: Vec<u64> = if n <= 10 {
        (1..=full).collect()
    } else {
        std::iter::once(full)
            .chain((0..n).map(|v| full & !(1u64 << v)))
            .collect()
    };
    for mask in masks {
        if (mask.count_ones() as usize) <= best.value {
            continue;
        }
        if let Some(v) = mvr_exact(&g.induced_mask(mask)).exact() {
            if v > best.value {
                best = lower(v, LowerReason::InducedSubgraph, bits(mask).collect());
            }
        }
    }
    best
}

/// Bounds of a union (`join == false`) or join of the induced parts.
fn compose(
    g: &Graph,
    parts: &[Vec<usize>],
    cfg: &OracleConfig,
    join: bool,
) -> Option<(LowerBound, UpperBound)> {
    let sub: Vec<(LowerBound, UpperBound)> =
        parts.iter().map(|p| bounds(&g.induced(p), cfg)).collect();
    let lo = if join {
        sub.iter().map(|s| s.0.value).max().unwrap_or(0)
    } else {
        sub.iter().map(|s| s.0.value).sum()
    };
    let reason = if join {
        LowerReason::JoinParts
    } else {
        LowerReason::Components
    };
    let all_exact = sub.iter().all(|s| s.1.class == CertClass::Exact);
    let witness = if join {
        join_witness(g, parts, &sub, all_exact, cfg)?
    } else {
        sum_witness(g, parts, &sub, all_exact)
    };
    let w = certify(g, witness, cfg)?;
    let source = if join {
        UpperSource::JoinParts
    } else {
        UpperSource::Components
    };
    Some((lower(lo, reason, Vec::new()), upper(source, w)))
}

/// Direct sum: part `i` lives in its own block of coordinates.
fn sum_witness(
    g: &Graph,
    parts: &[Vec<usize>],
    sub: &[(LowerBound, UpperBound)],
    exact: bool,
) -> Witness {
    let total: usize = sub.iter().map(|s| s.1.value).sum();
    let n = g.order();
    let mut offset = 0;
    if exact {
        let mut out = vec![Vec::new(); n];
        for (p, s) in parts.iter().zip(sub) {
            let Witness::Exact(r) = &s.1.witness else {
                unreachable!()
            };
            for (i, &v) in p.iter().enumerate() {
                let mut x = vec![Q::zero(); total];
                for (k, c) in r.vectors[i].iter().enumerate() {
                    x[offset + k] = c.clone();
                }
                out[v] = x;
            }
            offset += r.dim;
        }
        Witness::Exact(Representation::new(total, out).expect("block lengths"))
    } else {
        let mut out = vec![Vec::new(); n];
        for (p, s) in parts.iter().zip(sub) {
            let f = s.1.witness.floats();
            for (i, &v) in p.iter().enumerate() {
                let mut x = vec![0.0; total];
                x[offset..offset + f[i].len()].copy_from_slice(&f[i]);
                out[v] = x;
            }
            offset += s.1.value;
        }
        numeric_witness(total, out)
    }
}

fn numeric_witness(dim: usize, vectors: Vec<Vec<f64>>) -> Witness {
    Witness::Numeric(NumericRep {
        dim,
        vectors,
        max_zero: 0.0,
        min_nonzero: 0.0,
        restart: 0,
    })
}

/// Reflection through the hyperplane orthogonal to `(1, t, t^2, ...)`.
fn reflect(x: &[Q], t: i64) -> QVec {
    let v: QVec = (0..x.len() as u32).map(|k| q(t.pow(k))).collect();
    let c = dot(x, &v) * q(2) / norm2(&v);
    x.iter().zip(&v).map(|(a, b)| a - &c * b).collect()
}

fn reflect_f(x: &[f64], t: i64) -> Vec<f64> {
    let v: Vec<f64> = (0..x.len() as i32).map(|k| (t as f64).powi(k)).collect();
    let c = 2.0 * x.iter().zip(&v).map(|(a, b)| a * b).sum::<f64>()
        / v.iter().map(|b| b * b).sum::<f64>();
    x.iter().zip(&v).map(|(a, b)| a - c * b).collect()
}

/// Join: pad every part to the largest dimension and reflect each later part so
/// that all cross inner products are nonzero (inner products within a part are
/// preserved by the reflection).
fn join_witness(
    g: &Graph,
    parts: &[Vec<usize>],
    sub: &[(LowerBound, UpperBound)],
    exact: bool,
    cfg: &OracleConfig,
) -> Option<Witness> {
    let dim = sub.iter().map(|s| s.1.value).max().unwrap_or(0);
    let n = g.order();
    if exact {
        let mut out: Vec<Option<QVec>> = vec![None; n];
        for (idx, (p, s)) in parts.iter().zip(sub).enumerate() {
            let Witness::Exact(r) = &s.1.witness else {
                unreachable!()
            };
            let padded = r.padded(dim).ok()?;
            let placed: Vec<QVec> = out.iter().flatten().cloned().collect();
            let chosen = (1..=64i64).find_map(|t| {
                let ys: Vec<QVec> = if idx == 0 {
                    padded.vectors.clone()
                } else {
                    padded.vectors.iter().map(|x| reflect(x, t)).collect()
                };
                ys.iter()
                    .all(|y| placed.iter().all(|z| !dot(y, z).is_zero()))
                    .then_some(ys)
            })?;
            for (i, &v) in p.iter().enumerate() {
                out[v] = Some(chosen[i].clone());
            }
        }
        let vectors = out.into_iter().collect::<Option<Vec<_>>>()?;
        Representation::new(dim, vectors).ok().map(Witness::Exact)
    } else {
        let mut out: Vec<Option<Vec<f64>>> = vec![None; n];
        for (idx, (p, s)) in parts.iter().zip(sub).enumerate() {
            let f: Vec<Vec<f64>> =
                s.1.witness
                    .floats()
                    .into_iter()
                    .map(|mut x| {
                        x.resize(dim, 0.0);
                        x
                    })
                    .collect();
            let placed: Vec<Vec<f64>> = out.iter().flatten().cloned().collect();
            let chosen = (1..=64i64).find_map(|t| {
                let ys: Vec<Vec<f64>> = if idx == 0 {
                    f.clone()
                } else {
                    f.iter().map(|x| reflect_f(x, t)).collect()
                };
                ys.iter()
                    .all(|y| {
                        placed.iter().all(|z| {
                            y.iter().zip(z).map(|(a, b)| a * b).sum::<f64>().abs()
                                > 10.0 * cfg.nonzero_floor
                        })
                    })
                    .then_some(ys)
            })?;
            for (i, &v) in p.iter().enumerate() {
                out[v] = Some(chosen[i].clone());
            }
        }
        let vectors = out.into_iter().collect::<Option<Vec<_>>>()?;
        Some(numeric_witness(dim, vectors))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> Graph {
        Graph::from_edges(
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
        )
    }

    #[test]
    fn spec_examples() {
        let cfg = OracleConfig::default();
        assert_eq!(mvr_bounds(&Graph::path(4), &cfg).value, Value::Exact(3));
        assert_eq!(mvr_bounds(&Graph::empty(5), &cfg).value, Value::Exact(5));
        assert_eq!(mvr_bounds(&Graph::complete(5), &cfg).value, Value::Exact(1));
        let quick = OracleConfig {
            restarts: 10,
            max_iterations: 2000,
            ..cfg
        };
        let p = mvr_bounds(&petersen(), &quick);
        // an induced 7-vertex tree beats the independence number 4
        assert_eq!(independence_number(&petersen()).0, 4);
        assert_eq!((p.lo(), p.lower.reason), (6, LowerReason::InducedSubgraph));
        assert!(p.lo() <= p.hi() && p.hi() <= 10);
    }

    #[test]
    fn unions_and_joins() {
        let cfg = OracleConfig::default();
        let u = Graph::path(4).union(&Graph::cycle(5));
        let b = mvr_bounds(&u, &cfg);
        assert_eq!(b.value, Value::Exact(6));
        assert_eq!(b.upper.class, CertClass::Exact);
        let j = Graph::path(4).join(&Graph::empty(3));
        assert_eq!(mvr_bounds(&j, &cfg).value, Value::Exact(3));
    }
}
