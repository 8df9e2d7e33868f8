//! Floating-point search for orthogonal representations.
//!
//! Projected gradient on unit vectors: squared inner products of non-adjacent
//! pairs plus a shrinking log barrier that keeps adjacent pairs away from zero.
//! Near a solution a damped Gauss-Newton step drives the residual to machine
//! precision. Failure proves nothing.

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{seed_for, OracleConfig};
use crate::graph::{write_graph6, Graph};

/// A representation accepted under the configured tolerances.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NumericRep {
    pub dim: usize,
    pub vectors: Vec<Vec<f64>>,
    /// Largest |<x_u, x_v>| over non-adjacent pairs.
    pub max_zero: f64,
    /// Smallest |<x_u, x_v>| over adjacent pairs and |x_u|^2 over vertices.
    pub min_nonzero: f64,
    /// Restart that succeeded (0 for compositions).
    pub restart: usize,
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Re-measures `vectors` against `g`; `Some` when every tolerance holds.
pub fn check_numeric(g: &Graph, vectors: &[Vec<f64>], cfg: &OracleConfig) -> Option<NumericRep> {
    let n = g.order();
    if vectors.len() != n {
        return None;
    }
    let dim = vectors.first().map_or(0, Vec::len);
    if vectors
        .iter()
        .any(|v| v.len() != dim || v.iter().any(|x| !x.is_finite()))
    {
        return None;
    }
    let mut max_zero = 0f64;
    let mut min_nonzero = f64::INFINITY;
    for u in 0..n {
        min_nonzero = min_nonzero.min(dot(&vectors[u], &vectors[u]));
        for v in u + 1..n {
            let p = dot(&vectors[u], &vectors[v]).abs();
            if g.has_edge(u, v) {
                min_nonzero = min_nonzero.min(p);
            } else {
                max_zero = max_zero.max(p);
            }
        }
    }
    (max_zero < cfg.zero_tolerance && min_nonzero > cfg.nonzero_floor).then(|| NumericRep {
        dim,
        vectors: vectors.to_vec(),
        max_zero,
        min_nonzero,
        restart: 0,
    })
}

struct Problem<'a> {
    g: &'a Graph,
    n: usize,
    d: usize,
    zeros: Vec<(usize, usize)>,
    edges: Vec<(usize, usize)>,
}

impl Problem<'_> {
    fn row<'x>(&self, x: &'x [f64], u: usize) -> &'x [f64] {
        &x[u * self.d..(u + 1) * self.d]
    }

    fn normalize(&self, x: &mut [f64]) {
        for u in 0..self.n {
            let r = &mut x[u * self.d..(u + 1) * self.d];
            let s = dot(r, r).sqrt();
            if s > 0.0 {
                r.iter_mut().for_each(|a| *a /= s);
            }
        }
    }

    /// (zero-part, barrier-part) of the objective.
    fn parts(&self, x: &[f64]) -> (f64, f64) {
        let z = self
            .zeros
            .iter()
            .map(|&(u, v)| dot(self.row(x, u), self.row(x, v)).powi(2))
            .sum();
        let b = self
            .edges
            .iter()
            .map(|&(u, v)| -(dot(self.row(x, u), self.row(x, v)).powi(2) + 1e-300).ln())
            .sum();
        (z, b)
    }

    fn gradient(&self, x: &[f64], mu: f64) -> Vec<f64> {
        let d = self.d;
        let mut g = vec![0.0; x.len()];
        let mut add = |u: usize, v: usize, c: f64| {
            for k in 0..d {
                g[u * d + k] += c * x[v * d + k];
                g[v * d + k] += c * x[u * d + k];
            }
        };
        for &(u, v) in &self.zeros {
            let p = dot(self.row(x, u), self.row(x, v));
            add(u, v, 2.0 * p);
        }
        for &(u, v) in &self.edges {
            let p = dot(self.row(x, u), self.row(x, v));
            add(u, v, -2.0 * mu / (p + p.signum() * 1e-150));
        }
        g
    }

    /// Damped Gauss-Newton on the zero products and unit norms.
    fn polish(&self, x: &mut [f64]) {
        let (n, d) = (self.n, self.d);
        let m = self.zeros.len() + n;
        for _ in 0..30 {
            let mut r = DVector::zeros(m);
            let mut j = DMatrix::zeros(m, n * d);
            for (i, &(u, v)) in self.zeros.iter().enumerate() {
                r[i] = dot(self.row(x, u), self.row(x, v));
                for k in 0..d {
                    j[(i, u * d + k)] = x[v * d + k];
                    j[(i, v * d + k)] = x[u * d + k];
                }
            }
            for u in 0..n {
                let i = self.zeros.len() + u;
                r[i] = dot(self.row(x, u), self.row(x, u)) - 1.0;
                for k in 0..d {
                    j[(i, u * d + k)] = 2.0 * x[u * d + k];
                }
            }
            if r.amax() < 1e-15 {
                return;
            }
            let mut jjt = &j * j.transpose();
            for i in 0..m {
                jjt[(i, i)] += 1e-14;
            }
            let Some(y) = jjt.cholesky().map(|c| c.solve(&r)) else {
                return;
            };
            let step = j.transpose() * y;
            for (a, s) in x.iter_mut().zip(step.iter()) {
                *a -= s;
            }
        }
    }

    fn vectors(&self, x: &[f64]) -> Vec<Vec<f64>> {
        (0..self.n).map(|u| self.row(x, u).to_vec()).collect()
    }

    fn attempt(&self, rng: &mut ChaCha8Rng, cfg: &OracleConfig) -> Option<Vec<Vec<f64>>> {
        let mut x: Vec<f64> = (0..self.n * self.d)
            .map(|_| rng.gen_range(-1.0..1.0))
            .collect();
        self.normalize(&mut x);
        let mut mu = 1e-2;
        let mut eta = 0.05;
        let objective = |x: &[f64], mu: f64| {
            let (z, b) = self.parts(x);
            z + mu * b
        };
        let mut f = objective(&x, mu);
        let mut window = self.parts(&x).0;
        for it in 1..=cfg.max_iterations {
            let grad = self.gradient(&x, mu);
            let mut cand: Vec<f64> = x.iter().zip(&grad).map(|(a, g)| a - eta * g).collect();
            self.normalize(&mut cand);
            let fc = objective(&cand, mu);
            if fc < f {
                x = cand;
                f = fc;
                eta = (eta * 1.2).min(1.0);
            } else {
                eta *= 0.5;
                if eta < 1e-14 {
                    break;
                }
            }
            let z = self.parts(&x).0;
            if z < 1e-8 {
                let mut y = x.clone();
                self.polish(&mut y);
                if let Some(r) = check_numeric(self.g, &self.vectors(&y), cfg) {
                    return Some(r.vectors);
                }
            }
            if it % 100 == 0 {
                mu = (mu * 0.3).max(1e-12);
                f = objective(&x, mu);
                if z > 1e-8 && z > window * 0.999 {
                    break;
                }
                window = z;
            }
        }
        let mut y = x;
        self.polish(&mut y);
        check_numeric(self.g, &self.vectors(&y), cfg).map(|r| r.vectors)
    }
}

/// Searches for unit vectors in dimension `d` that represent `g`: orthogonal on
/// non-adjacent pairs and clearly non-orthogonal on adjacent ones.
pub fn numeric_rep_search(g: &Graph, d: usize, cfg: &OracleConfig) -> Option<NumericRep> {
    let n = g.order();
    if n == 0 {
        return check_numeric(g, &[], cfg);
    }
    if d == 0 {
        return None;
    }
    let edges = g.edges();
    let zeros = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !g.has_edge(u, v))
        .collect();
    let p = Problem {
        g,
        n,
        d,
        zeros,
        edges,
    };
    let mut rng =
        ChaCha8Rng::seed_from_u64(seed_for(cfg.rng_seed, &format!("{}/{d}", write_graph6(g))));
    for restart in 0..cfg.restarts {
        if let Some(vectors) = p.attempt(&mut rng, cfg) {
            let mut r = check_numeric(g, &vectors, cfg)?;
            r.restart = restart;
            return Some(r);
        }
    }
    None
}
