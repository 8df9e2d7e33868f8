//! One-vertex-at-a-time construction steps on a partially placed representation.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::build::Step;
use super::Representation;
use crate::error::{Error, Result};
use crate::graph::{bits, Graph};
use crate::rational::{
    axpy, cross, dot, format_q, is_zero, norm2, orthogonal_complement, parallel, parse_q,
    primitive, rank, scale, QVec, Q,
};

/// Parameter search statistics for one ear closing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EarReport {
    pub t: u64,
    pub tried: u64,
    pub constraints: u64,
}

/// Partial representation of the complement of `g`.
pub(crate) struct Builder<'g> {
    pub g: &'g Graph,
    pub dim: usize,
    pub vecs: Vec<Option<QVec>>,
    pub steps: Vec<Step>,
    /// Prefer new vectors outside the span of any two placed vectors when possible.
    pub general_position: bool,
}

fn qt(t: u64) -> Q {
    Q::from_integer(BigInt::from(t))
}

impl<'g> Builder<'g> {
    pub fn new(g: &'g Graph, dim: usize) -> Self {
        Builder {
            g,
            dim,
            vecs: vec![None; g.order()],
            steps: Vec::new(),
            general_position: true,
        }
    }

    pub fn placed_mask(&self) -> u64 {
        self.vecs
            .iter()
            .enumerate()
            .filter(|(_, v)| v.is_some())
            .fold(0u64, |m, (i, _)| m | 1u64 << i)
    }

    pub fn is_placed(&self, v: usize) -> bool {
        self.vecs[v].is_some()
    }

    fn vec(&self, v: usize) -> &QVec {
        self.vecs[v].as_ref().expect("placed vertex")
    }

    /// Placed `g`-neighbors of `v`.
    pub fn placed_neighbors(&self, v: usize) -> u64 {
        self.g.neighbor_mask(v) & self.placed_mask() & !(1u64 << v)
    }

    fn pair_ok(&self, a: usize, xa: &[Q], b: usize, xb: &[Q]) -> bool {
        dot(xa, xb).is_zero() == self.g.has_edge(a, b) && !parallel(xa, xb)
    }

    /// `x` at `v` is valid against every placed vertex outside `skip`.
    fn fits(&self, v: usize, x: &[Q], skip: u64) -> bool {
        !is_zero(x)
            && bits(self.placed_mask() & !skip & !(1u64 << v))
                .all(|p| self.pair_ok(v, x, p, self.vec(p)))
    }

    /// Placed pairs whose span a generic vector for `v` can avoid, i.e. pairs
    /// whose span does not contain the whole allowed subspace.
    fn avoidable_pairs(&self, v: usize, allowed: &[QVec]) -> Vec<(usize, usize)> {
        let others: Vec<usize> = bits(self.placed_mask() & !(1u64 << v)).collect();
        let mut out = Vec::new();
        for (i, &p) in others.iter().enumerate() {
            for &q in &others[i + 1..] {
                let mut span = vec![self.vec(p).clone(), self.vec(q).clone()];
                span.extend(allowed.iter().cloned());
                if rank(&span) > 2 {
                    out.push((p, q));
                }
            }
        }
        out
    }

    fn outside_spans(&self, x: &QVec, pairs: &[(usize, usize)]) -> bool {
        pairs
            .iter()
            .all(|&(p, q)| rank(&[x.clone(), self.vec(p).clone(), self.vec(q).clone()]) == 3)
    }

    fn complement_basis(&self, v: usize) -> Vec<QVec> {
        let cons: Vec<QVec> = bits(self.placed_neighbors(v))
            .map(|p| self.vec(p).clone())
            .collect();
        orthogonal_complement(&cons, self.dim)
    }

    /// Point `t` of the moment curve through the basis of the allowed subspace.
    pub fn generic_vector(&self, v: usize, t: u64) -> Option<QVec> {
        let basis = self.complement_basis(v);
        let mut acc = vec![Q::zero(); self.dim];
        let mut power = Q::one();
        for b in &basis {
            acc = axpy(&acc, &power, b);
            power *= qt(t);
        }
        (!basis.is_empty()).then(|| primitive(&acc))
    }

    fn search_generic(&self, v: usize) -> Option<u64> {
        let basis = self.complement_basis(v);
        let k = basis.len() as u64;
        if k == 0 {
            return None;
        }
        let others = (self.placed_mask() & !(1u64 << v)).count_ones() as u64;
        let pairs = if self.general_position && k > 1 {
            self.avoidable_pairs(v, &basis)
        } else {
            Vec::new()
        };
        let limit = (k - 1).max(1) * (2 * others + pairs.len() as u64) + 1;
        let mut fallback = None;
        for t in 1..=limit {
            let x = self.generic_vector(v, t)?;
            if !self.fits(v, &x, 0) {
                continue;
            }
            if self.outside_spans(&x, &pairs) {
                return Some(t);
            }
            fallback.get_or_insert(t);
        }
        fallback
    }

    pub fn set(&mut self, v: usize, x: QVec) {
        self.vecs[v] = Some(x);
    }

    pub fn fixed(&mut self, v: usize, x: QVec) -> Result<()> {
        if x.len() != self.dim {
            return Err(Error::invariant(format!(
                "fixed vector for {v} has wrong length"
            )));
        }
        self.steps.push(Step::Fixed {
            vertex: v,
            vector: x.iter().map(format_q).collect(),
        });
        self.set(v, x);
        Ok(())
    }

    /// Generic solution of the orthogonality system for `v`, re-placing a neighbor when stuck.
    pub fn generic(&mut self, v: usize) -> Result<()> {
        if let Some(t) = self.search_generic(v) {
            let x = self.generic_vector(v, t).expect("basis is nonempty");
            self.set(v, x);
            self.steps.push(Step::Generic { vertex: v, t });
            return Ok(());
        }
        let nbrs: Vec<usize> = bits(self.placed_neighbors(v)).collect();
        for &s in nbrs.iter().rev() {
            let old = self.vec(s).clone();
            self.vecs[s] = None;
            let k = self.complement_basis(s).len() as u64;
            let others = self.placed_mask().count_ones() as u64;
            let limit = k.saturating_sub(1).max(1) * (2 * others + 1) + 1;
            for ts in 1..=limit {
                let Some(xs) = self.generic_vector(s, ts) else {
                    break;
                };
                if parallel(&xs, &old) || !self.fits(s, &xs, 0) {
                    continue;
                }
                self.set(s, xs);
                if let Some(t) = self.search_generic(v) {
                    let x = self.generic_vector(v, t).expect("basis is nonempty");
                    self.set(v, x);
                    self.steps.push(Step::Generic { vertex: s, t: ts });
                    self.steps.push(Step::Generic { vertex: v, t });
                    return Ok(());
                }
                self.vecs[s] = None;
            }
            self.set(s, old);
        }
        Err(Error::invariant(format!(
            "no generic vector for vertex {v} in dimension {}",
            self.dim
        )))
    }

    pub fn pendant(&mut self, v: usize, anchor: usize) -> Result<()> {
        if self.placed_neighbors(v) != 1u64 << anchor {
            return Err(Error::arg(format!(
                "vertex {v} must have {anchor} as its only placed neighbor"
            )));
        }
        let t = self
            .search_generic(v)
            .ok_or_else(|| Error::invariant(format!("pendant search exhausted for vertex {v}")))?;
        let x = self.generic_vector(v, t).expect("basis is nonempty");
        self.set(v, x);
        self.steps.push(Step::Pendant {
            vertex: v,
            anchor,
            t,
        });
        Ok(())
    }

    pub fn duplicate(&mut self, v: usize, of: usize) -> Result<()> {
        let g = self.g;
        if g.has_edge(v, of) || g.neighbor_mask(v) != g.neighbor_mask(of) || !self.is_placed(of) {
            return Err(Error::arg(format!(
                "{v} and {of} are not duplicates in the represented complement"
            )));
        }
        self.set(v, self.vec(of).clone());
        self.steps.push(Step::Duplicate { vertex: v, of });
        Ok(())
    }

    fn ear_vectors(&self, v: usize, w: usize, y1: usize, y2: usize, t: u64) -> [QVec; 3] {
        let ut = axpy(self.vec(w), &qt(t), self.vec(v));
        let vt = cross(&ut, self.vec(y1));
        let wt = cross(&ut, self.vec(y2));
        [ut, vt, wt]
    }

    /// Adds `u` adjacent (in `g`) to the placed pendants `v` and `w`, replacing their vectors.
    pub fn close_ear(&mut self, u: usize, v: usize, w: usize) -> Result<EarReport> {
        if self.dim != 3 {
            return Err(Error::arg("ear closing works in dimension 3"));
        }
        let nv = self.placed_neighbors(v);
        let nw = self.placed_neighbors(w);
        if self.is_placed(u)
            || !self.is_placed(v)
            || !self.is_placed(w)
            || nv.count_ones() != 1
            || nw.count_ones() != 1
        {
            return Err(Error::arg(format!(
                "{v} and {w} must be placed pendants and {u} unplaced"
            )));
        }
        if nv == nw || self.g.has_edge(v, w) {
            return Err(Error::arg(format!("{v} and {w} share a neighbor")));
        }
        if self.placed_neighbors(u) != 1u64 << v | 1u64 << w {
            return Err(Error::arg(format!(
                "{u} must be adjacent to exactly {v} and {w}"
            )));
        }
        let (y1, y2) = (nv.trailing_zeros() as usize, nw.trailing_zeros() as usize);
        let skip = 1u64 << v | 1u64 << w;
        let others = (self.placed_mask() & !skip).count_ones() as u64;
        let constraints = others + 2 * (others - 1) + 1 + 3 * others + 3;
        let limit = 2 * constraints + 1;
        for t in 1..=limit {
            let [ut, vt, wt] = self.ear_vectors(v, w, y1, y2, t);
            let ok = self.fits(u, &ut, skip)
                && self.fits(v, &vt, skip)
                && self.fits(w, &wt, skip)
                && self.pair_ok(u, &ut, v, &vt)
                && self.pair_ok(u, &ut, w, &wt)
                && self.pair_ok(v, &vt, w, &wt);
            if ok {
                self.set(u, ut);
                self.set(v, vt);
                self.set(w, wt);
                self.steps.push(Step::CloseEar { u, v, w, t });
                return Ok(EarReport {
                    t,
                    tried: t,
                    constraints,
                });
            }
        }
        Err(Error::invariant(format!(
            "ear closing at {u} exhausted {limit} parameter values"
        )))
    }

    fn triangle_vectors(&self, w: usize, u0: &QVec, t: u64) -> (QVec, QVec) {
        let v0 = cross(u0, self.vec(w));
        let ut = axpy(u0, &qt(t), &v0);
        let vt = axpy(&scale(u0, &(qt(t) * norm2(&v0))), &-norm2(u0), &v0);
        (ut, vt)
    }

    /// Adds adjacent `u`, `v` whose only placed neighbor is `w`.
    pub fn attach_triangle(&mut self, u: usize, v: usize, w: usize) -> Result<()> {
        if self.dim != 3 {
            return Err(Error::arg("triangle attachment works in dimension 3"));
        }
        if !self.g.has_edge(u, v)
            || self.is_placed(u)
            || self.is_placed(v)
            || self.placed_neighbors(u) != 1u64 << w
            || self.placed_neighbors(v) != 1u64 << w
        {
            return Err(Error::arg(format!(
                "{u} and {v} must be adjacent with {w} as their only placed neighbor"
            )));
        }
        let others = (self.placed_mask() & !(1u64 << w)).count_ones() as u64;
        let s_limit = 2 * (others + 1) + 1;
        let t_limit = 2 * (4 * others + 1) + 1;
        for s in 1..=s_limit {
            let u0 = self.generic_vector(u, s).expect("plane orthogonal to w");
            if !self.fits(u, &u0, 0) {
                continue;
            }
            for t in 1..=t_limit {
                let (ut, vt) = self.triangle_vectors(w, &u0, t);
                if self.fits(u, &ut, 0) && self.fits(v, &vt, 0) && self.pair_ok(u, &ut, v, &vt) {
                    self.set(u, ut);
                    self.set(v, vt);
                    self.steps.push(Step::Triangle { u, v, w, s, t });
                    return Ok(());
                }
            }
        }
        Err(Error::invariant(format!(
            "triangle attachment at {w} exhausted its parameters"
        )))
    }

    /// Re-executes a recorded step without searching.
    pub fn apply(&mut self, step: &Step) -> Result<()> {
        match *step {
            Step::Fixed { vertex, ref vector } => {
                let x = vector
                    .iter()
                    .map(|s| parse_q(s))
                    .collect::<Result<QVec>>()?;
                self.fixed(vertex, x)?;
                self.steps.pop();
            }
            Step::Generic { vertex, t } | Step::Pendant { vertex, t, .. } => {
                self.vecs[vertex] = None;
                let x = self
                    .generic_vector(vertex, t)
                    .ok_or_else(|| Error::arg(format!("no free direction for vertex {vertex}")))?;
                self.set(vertex, x);
            }
            Step::Duplicate { vertex, of } => {
                let x = self.vecs[of]
                    .clone()
                    .ok_or_else(|| Error::arg(format!("vertex {of} not placed")))?;
                self.set(vertex, x);
            }
            Step::CloseEar { u, v, w, t } => {
                let y = |x: usize| {
                    let m = self.placed_neighbors(x);
                    (m.count_ones() == 1)
                        .then(|| m.trailing_zeros() as usize)
                        .ok_or_else(|| Error::arg(format!("vertex {x} is not a placed pendant")))
                };
                let (y1, y2) = (y(v)?, y(w)?);
                let [ut, vt, wt] = self.ear_vectors(v, w, y1, y2, t);
                self.set(u, ut);
                self.set(v, vt);
                self.set(w, wt);
            }
            Step::Triangle { u, v, w, s, t } => {
                let u0 = self
                    .generic_vector(u, s)
                    .ok_or_else(|| Error::arg(format!("no free direction for vertex {u}")))?;
                let (ut, vt) = self.triangle_vectors(w, &u0, t);
                self.set(u, ut);
                self.set(v, vt);
            }
        }
        Ok(())
    }

    pub fn finish(self) -> Result<Representation> {
        let dim = self.dim;
        let vectors = self
            .vecs
            .into_iter()
            .enumerate()
            .map(|(i, v)| v.ok_or_else(|| Error::invariant(format!("vertex {i} never placed"))))
            .collect::<Result<Vec<_>>>()?;
        Representation::new(dim, vectors)
    }

    /// Builder on `g` with every vertex except `removed` placed from `base`,
    /// where `base` is indexed densely over the kept vertices.
    fn from_deleted(g: &'g Graph, base: &Representation, removed: &[usize]) -> Result<Self> {
        let kept: Vec<usize> = (0..g.order()).filter(|v| !removed.contains(v)).collect();
        if kept.len() != base.order() {
            return Err(Error::arg(format!(
                "base representation covers {} vertices, expected {}",
                base.order(),
                kept.len()
            )));
        }
        let mut b = Builder::new(g, base.dim);
        for (i, &v) in kept.iter().enumerate() {
            b.set(v, base.vectors[i].clone());
        }
        Ok(b)
    }
}

/// Generic vectors placed one vertex at a time in `order`, giving a representation
/// of the complement of `g` in `dim` dimensions when every step succeeds.
pub(crate) fn greedy(g: &Graph, dim: usize, order: &[usize]) -> Result<Representation> {
    let mut b = Builder::new(g, dim);
    for &v in order {
        b.generic(v)?;
    }
    b.finish()
}

fn three_dim_independent(base: &Representation) -> Result<()> {
    if base.dim != 3 {
        return Err(Error::arg(format!(
            "expected a 3-dimensional base, got {}",
            base.dim
        )));
    }
    if let Some((i, j)) = base.dependent_pair() {
        return Err(Error::arg(format!(
            "base vectors {i} and {j} are dependent"
        )));
    }
    Ok(())
}

/// Adds the pendant vertex `v` of `g` to a representation of the complement of `g - v`.
pub fn extend_pendant(g: &Graph, base: &Representation, v: usize) -> Result<Representation> {
    check_vertex(g, v)?;
    if g.degree(v) != 1 {
        return Err(Error::arg(format!("vertex {v} is not a pendant")));
    }
    three_dim_independent(base)?;
    let mut b = Builder::from_deleted(g, base, &[v])?;
    let anchor = g.neighbors(v).next().expect("degree 1");
    b.pendant(v, anchor)?;
    b.finish()
}

/// Gives `new` the vector of `existing`; they must be non-adjacent with equal neighborhoods in `g`.
pub fn extend_duplicate(
    g: &Graph,
    base: &Representation,
    existing: usize,
    new: usize,
) -> Result<Representation> {
    check_vertex(g, existing)?;
    check_vertex(g, new)?;
    if existing == new {
        return Err(Error::arg("a vertex is not its own duplicate"));
    }
    let mut b = Builder::from_deleted(g, base, &[new])?;
    b.duplicate(new, existing)?;
    b.finish()
}

/// Adds the degree-2 vertex `u` of `g`, whose neighbors are pendants of `g - u`.
pub fn close_ear(
    g: &Graph,
    base: &Representation,
    u: usize,
) -> Result<(Representation, EarReport)> {
    check_vertex(g, u)?;
    let nb: Vec<usize> = g.neighbors(u).collect();
    let [v, w] = nb[..] else {
        return Err(Error::arg(format!(
            "vertex {u} has degree {}, expected 2",
            nb.len()
        )));
    };
    three_dim_independent(base)?;
    let mut b = Builder::from_deleted(g, base, &[u])?;
    let report = b.close_ear(u, v, w)?;
    Ok((b.finish()?, report))
}

/// Adds the adjacent pair `u`, `v` of `g` whose only other neighbor is a common vertex.
pub fn attach_triangle(
    g: &Graph,
    base: &Representation,
    u: usize,
    v: usize,
) -> Result<Representation> {
    check_vertex(g, u)?;
    check_vertex(g, v)?;
    let shared = g.neighbor_mask(u) & g.neighbor_mask(v);
    if g.degree(u) != 2 || g.degree(v) != 2 || shared.count_ones() != 1 {
        return Err(Error::arg(format!(
            "{u} and {v} must form a triangle hanging from one vertex"
        )));
    }
    three_dim_independent(base)?;
    let mut removed = [u, v];
    removed.sort_unstable();
    let mut b = Builder::from_deleted(g, base, &removed)?;
    b.attach_triangle(u, v, shared.trailing_zeros() as usize)?;
    b.finish()
}

fn check_vertex(g: &Graph, v: usize) -> Result<()> {
    if v >= g.order() {
        return Err(Error::arg(format!(
            "vertex {v} out of range for n = {}",
            g.order()
        )));
    }
    Ok(())
}
