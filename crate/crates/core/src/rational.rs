//! Small exact linear algebra over `BigRational` for representation vectors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;
pub type QVec = Vec<Q>;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qvec(xs: &[i64]) -> QVec {
    xs.iter().map(|&x| q(x)).collect()
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

pub fn norm2(a: &[Q]) -> Q {
    dot(a, a)
}

pub fn cross(a: &[Q], b: &[Q]) -> QVec {
    assert!(
        a.len() == 3 && b.len() == 3,
        "cross product needs 3-vectors"
    );
    vec![
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

pub fn scale(a: &[Q], s: &Q) -> QVec {
    a.iter().map(|x| x * s).collect()
}

/// `a + s * b`
pub fn axpy(a: &[Q], s: &Q, b: &[Q]) -> QVec {
    a.iter().zip(b).map(|(x, y)| x + s * y).collect()
}

pub fn is_zero(a: &[Q]) -> bool {
    a.iter().all(Zero::is_zero)
}

/// True when `a` and `b` are linearly dependent.
pub fn parallel(a: &[Q], b: &[Q]) -> bool {
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            if &a[i] * &b[j] != &a[j] * &b[i] {
                return false;
            }
        }
    }
    true
}

/// Positive multiple of `a` with coprime integer entries (first nonzero entry kept positive).
pub fn primitive(a: &[Q]) -> QVec {
    if is_zero(a) {
        return a.to_vec();
    }
    let den = a.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let ints: Vec<BigInt> = a
        .iter()
        .map(|x| (x * Q::from_integer(den.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    let lead_neg = ints
        .iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.is_negative());
    let g = if lead_neg { -g } else { g };
    ints.into_iter().map(|x| Q::from_integer(x / &g)).collect()
}

/// Rank of a list of vectors.
pub fn rank(vectors: &[QVec]) -> usize {
    let mut rows: Vec<QVec> = vectors.to_vec();
    echelon(&mut rows).len()
}

/// Reduced row echelon form in place; returns pivot columns.
fn echelon(rows: &mut Vec<QVec>) -> Vec<usize> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        rows[r] = scale(&rows[r], &inv);
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = -rows[i][c].clone();
                rows[i] = axpy(&rows[i], &f, &rows[r]);
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Basis of the orthogonal complement of `span(constraints)` in `Q^dim`.
pub fn orthogonal_complement(constraints: &[QVec], dim: usize) -> Vec<QVec> {
    let mut rows: Vec<QVec> = constraints.to_vec();
    let pivots = echelon(&mut rows);
    let free: Vec<usize> = (0..dim).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); dim];
            v[f] = Q::one();
            for (row, &pc) in rows.iter().zip(&pivots) {
                v[pc] = -row[f].clone();
            }
            primitive(&v)
        })
        .collect()
}

/// `p/q` with `q >= 1`, always including the denominator.
pub fn format_q(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn parse_q(s: &str) -> Result<Q> {
    let bad = || Error::format(0, format!("not a rational number: {s:?}"));
    let s = s.trim();
    match s.split_once('/') {
        Some((p, d)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(p, d))
        }
        None => Ok(Q::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn to_f64(x: &Q) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cross_is_orthogonal() {
        let a = qvec(&[1, 2, 3]);
        let b = qvec(&[-4, 0, 7]);
        let c = cross(&a, &b);
        assert!(dot(&a, &c).is_zero() && dot(&b, &c).is_zero());
    }

    #[test]
    fn primitive_scaling() {
        let v = vec![
            Q::new(2.into(), 3.into()),
            Q::new((-4).into(), 9.into()),
            q(0),
        ];
        assert_eq!(primitive(&v), qvec(&[3, -2, 0]));
        assert_eq!(primitive(&qvec(&[0, -2, 4])), qvec(&[0, 1, -2]));
    }

    #[test]
    fn complement_basis() {
        let basis = orthogonal_complement(&[qvec(&[1, 1, 0, 0]), qvec(&[0, 1, 1, 0])], 4);
        assert_eq!(basis.len(), 2);
        for b in &basis {
            assert!(dot(b, &qvec(&[1, 1, 0, 0])).is_zero());
            assert!(dot(b, &qvec(&[0, 1, 1, 0])).is_zero());
        }
        assert_eq!(rank(&basis), 2);
        assert_eq!(rank(&[qvec(&[1, 2]), qvec(&[2, 4])]), 1);
    }

    #[test]
    fn rational_strings() {
        let x = parse_q("-6/4").unwrap();
        assert_eq!(format_q(&x), "-3/2");
        assert_eq!(format_q(&q(5)), "5/1");
        assert_eq!(parse_q("7").unwrap(), q(7));
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x").is_err());
    }
}
