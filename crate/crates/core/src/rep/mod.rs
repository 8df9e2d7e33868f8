//! Exact orthogonal representations of complements of sparse graphs.
//!
//! Throughout this module `g` is the sparse graph (tree, necklace, book) and the
//! representation is of its complement: `g`-adjacent vertices get orthogonal
//! vectors, `g`-non-adjacent vertices get non-orthogonal ones.

mod base;
mod build;
pub(crate) mod extend;
mod lift;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{dot, format_q, is_zero, parallel, parse_q, rank, QVec};

pub use base::base_representation;
pub use build::{build_complement_rep, replay, BuildTrace, Step};
pub use extend::{attach_triangle, close_ear, extend_duplicate, extend_pendant, EarReport};
pub use lift::{lift_four_cycles, subdivide_four_cycles, Split, SubdivisionRecord};

/// Vertex `i` gets `vectors[i]`, each of length `dim`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RepJson", into = "RepJson")]
pub struct Representation {
    pub dim: usize,
    pub vectors: Vec<QVec>,
}

#[derive(Serialize, Deserialize)]
struct RepJson {
    dim: usize,
    vectors: Vec<Vec<String>>,
}

impl From<Representation> for RepJson {
    fn from(r: Representation) -> Self {
        RepJson {
            dim: r.dim,
            vectors: r
                .vectors
                .iter()
                .map(|v| v.iter().map(format_q).collect())
                .collect(),
        }
    }
}

impl TryFrom<RepJson> for Representation {
    type Error = Error;

    fn try_from(j: RepJson) -> Result<Self> {
        let vectors = j
            .vectors
            .iter()
            .map(|v| v.iter().map(|s| parse_q(s)).collect::<Result<QVec>>())
            .collect::<Result<Vec<_>>>()?;
        Representation::new(j.dim, vectors)
    }
}

impl Representation {
    pub fn new(dim: usize, vectors: Vec<QVec>) -> Result<Self> {
        if let Some((i, v)) = vectors.iter().enumerate().find(|(_, v)| v.len() != dim) {
            return Err(Error::arg(format!(
                "vector {i} has length {}, expected {dim}",
                v.len()
            )));
        }
        Ok(Representation { dim, vectors })
    }

    pub fn order(&self) -> usize {
        self.vectors.len()
    }

    /// First pair of scalar-multiple vectors, if any.
    pub fn dependent_pair(&self) -> Option<(usize, usize)> {
        let n = self.vectors.len();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| parallel(&self.vectors[i], &self.vectors[j]))
    }

    pub fn is_pairwise_independent(&self) -> bool {
        self.dependent_pair().is_none()
    }

    /// Dimension of the span of all vectors.
    pub fn span_rank(&self) -> usize {
        rank(&self.vectors)
    }

    /// Same vectors padded with zeros to a larger ambient dimension.
    pub fn padded(&self, dim: usize) -> Result<Representation> {
        if dim < self.dim {
            return Err(Error::arg(format!(
                "cannot pad dimension {} down to {dim}",
                self.dim
            )));
        }
        let vectors = self
            .vectors
            .iter()
            .map(|v| {
                let mut w = v.clone();
                w.resize(dim, Zero::zero());
                w
            })
            .collect();
        Ok(Representation { dim, vectors })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("representation serializes")
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        self.vectors
            .iter()
            .map(|v| v.iter().map(crate::rational::to_f64).collect())
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum Violation {
    ZeroVector {
        vertex: usize,
    },
    /// Non-adjacent in the represented graph but the inner product is nonzero.
    NotOrthogonal {
        u: usize,
        v: usize,
    },
    /// Adjacent in the represented graph but the inner product is zero.
    Orthogonal {
        u: usize,
        v: usize,
    },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::ZeroVector { vertex } => write!(f, "vertex {vertex} has the zero vector"),
            Violation::NotOrthogonal { u, v } => {
                write!(f, "non-adjacent vertices {u} and {v} are not orthogonal")
            }
            Violation::Orthogonal { u, v } => {
                write!(f, "adjacent vertices {u} and {v} are orthogonal")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Accepted { dim: usize },
    Rejected { violation: Violation },
}

impl Verdict {
    pub fn is_accepted(&self) -> bool {
        matches!(self, Verdict::Accepted { .. })
    }
}

/// Checks `rep` as an orthogonal representation of `g` itself (not its complement).
pub fn verify_representation(g: &Graph, rep: &Representation) -> Result<Verdict> {
    if rep.order() != g.order() {
        return Err(Error::arg(format!(
            "representation covers {} vertices, graph has {}",
            rep.order(),
            g.order()
        )));
    }
    if let Some((i, _)) = rep
        .vectors
        .iter()
        .enumerate()
        .find(|(_, v)| v.len() != rep.dim)
    {
        return Err(Error::arg(format!(
            "vector {i} does not have length {}",
            rep.dim
        )));
    }
    Ok(match first_violation(g, &rep.vectors) {
        None => Verdict::Accepted { dim: rep.dim },
        Some(violation) => Verdict::Rejected { violation },
    })
}

pub(crate) fn first_violation(g: &Graph, vectors: &[QVec]) -> Option<Violation> {
    if let Some(vertex) = vectors.iter().position(|v| is_zero(v)) {
        return Some(Violation::ZeroVector { vertex });
    }
    let n = vectors.len();
    for u in 0..n {
        for v in u + 1..n {
            let zero = dot(&vectors[u], &vectors[v]).is_zero();
            match (g.has_edge(u, v), zero) {
                (false, false) => return Some(Violation::NotOrthogonal { u, v }),
                (true, true) => return Some(Violation::Orthogonal { u, v }),
                _ => {}
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qvec;

    fn rep(dim: usize, vs: &[&[i64]]) -> Representation {
        Representation::new(dim, vs.iter().map(|v| qvec(v)).collect()).unwrap()
    }

    #[test]
    fn small_verdicts() {
        let e2 = rep(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(
            verify_representation(&Graph::empty(2), &e2).unwrap(),
            Verdict::Accepted { dim: 2 }
        );
        assert_eq!(
            verify_representation(&Graph::complete(2), &e2).unwrap(),
            Verdict::Rejected {
                violation: Violation::Orthogonal { u: 0, v: 1 }
            }
        );
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]);
        let r = rep(2, &[&[1, 0], &[2, 0], &[0, 1], &[0, 2]]);
        assert!(verify_representation(&two_k2, &r).unwrap().is_accepted());
        // (1,1) against (0,1) across the two edges is not orthogonal
        let skewed = rep(2, &[&[1, 0], &[1, 1], &[0, 1], &[0, 2]]);
        assert_eq!(
            verify_representation(&two_k2, &skewed).unwrap(),
            Verdict::Rejected {
                violation: Violation::NotOrthogonal { u: 1, v: 2 }
            }
        );
        assert!(verify_representation(&two_k2, &e2).is_err());
    }

    #[test]
    fn zero_vector_rejected() {
        let r = rep(2, &[&[0, 0]]);
        assert_eq!(
            verify_representation(&Graph::empty(1), &r).unwrap(),
            Verdict::Rejected {
                violation: Violation::ZeroVector { vertex: 0 }
            }
        );
    }

    #[test]
    fn json_round_trip() {
        let r = Representation::new(
            2,
            vec![
                vec![parse_q("1/2").unwrap(), parse_q("-3").unwrap()],
                qvec(&[0, 1]),
            ],
        )
        .unwrap();
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(s, r#"{"dim":2,"vectors":[["1/2","-3/1"],["0/1","1/1"]]}"#);
        let back: Representation = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
        assert!(serde_json::from_str::<Representation>(r#"{"dim":3,"vectors":[["1"]]}"#).is_err());
    }
}
