//! Stored dimension-4 representations of the complements of the four small
//! obstruction patterns.

use super::Representation;
use crate::graph::Pattern;
use crate::rational::qvec;

// Produced by `generate` below and checked exactly by the tests.
const L4BAR: &[&[i64]] = &[
    &[1, 1, 1, 1],
    &[3, -1, -1, -1],
    &[7, 3, 6, 12],
    &[21, -9, -4, -8],
    &[7, -1, -2, -4],
    &[13, 3, 9, 27],
];
const KITE: &[&[i64]] = &[
    &[1, 1, 1, 1],
    &[3, -1, -1, -1],
    &[0, 2, -1, -1],
    &[0, 3, -1, -2],
    &[1, 6, 4, 8],
];
const DOMINO: &[&[i64]] = &[
    &[1, 1, 1, 1],
    &[3, -1, -1, -1],
    &[7, -1, -2, -4],
    &[7, 9, 4, 8],
    &[13, -1, -3, -9],
    &[9, 12, 5, 10],
];
const P5BAR: &[&[i64]] = &[
    &[1, 1, 1, 1],
    &[3, -1, -1, -1],
    &[0, 2, -1, -1],
    &[7, -1, -2, -4],
    &[7, 9, 4, 8],
];

/// Representation of the complement of `p.graph()`, indexed like the pattern.
///
/// Panics for `Pattern::C4`, whose complement needs only dimension 2.
pub fn base_representation(p: Pattern) -> Representation {
    let rows = match p {
        Pattern::L4Bar => L4BAR,
        Pattern::Kite => KITE,
        Pattern::Domino => DOMINO,
        Pattern::P5Bar => P5BAR,
        Pattern::C4 => panic!("C4 has no stored dimension-4 base"),
    };
    Representation::new(4, rows.iter().map(|r| qvec(r)).collect()).expect("length-4 rows")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::extend::Builder;
    use crate::rep::verify_representation;

    /// The derivation of the constants: generic extension in vertex order,
    /// preferring general position.
    fn generate(p: Pattern) -> Representation {
        let g = p.graph();
        let mut b = Builder::new(&g, 4);
        for v in 0..g.order() {
            b.generic(v).unwrap();
        }
        b.finish().unwrap()
    }

    #[test]
    fn constants_are_valid_and_reproducible() {
        for p in [
            Pattern::L4Bar,
            Pattern::Kite,
            Pattern::Domino,
            Pattern::P5Bar,
        ] {
            let r = base_representation(p);
            let verdict = verify_representation(&p.graph().complement(), &r).unwrap();
            assert!(verdict.is_accepted(), "{p:?}: {verdict:?}");
            assert!(r.is_pairwise_independent());
            assert_eq!(r, generate(p), "{p:?}");
        }
    }
}
