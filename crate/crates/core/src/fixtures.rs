//! Built-in example ideals in `K[x1,x2,x3,y1,y2,y3]` and `K[x1,x2,y1,y2]`.

use crate::combinatorics::{GeneralMonomialIdeal, MonomialPrime, RingSpec, SquarefreeIdeal, VarSet};

fn ring33() -> RingSpec {
    RingSpec::new(3, 3).expect("valid ring")
}

/// Parses `"x1x2y3"`-style squarefree monomials in the (3,3) ring.
fn support(word: &str) -> VarSet {
    let ring = ring33();
    let bytes = word.as_bytes();
    let mut set = VarSet::EMPTY;
    for pair in bytes.chunks(2) {
        let i = usize::from(pair[1] - b'0');
        set.insert(match pair[0] {
            b'x' => ring.x(i),
            b'y' => ring.y(i),
            other => panic!("bad variable letter {}", other as char),
        });
    }
    set
}

fn ideal(words: &[&str]) -> SquarefreeIdeal {
    SquarefreeIdeal::new(ring33(), words.iter().map(|w| support(w))).expect("fixture in ring")
}

fn primes(words: &[&str]) -> Vec<MonomialPrime> {
    words.iter().map(|w| MonomialPrime(support(w))).collect()
}

/// Stanley–Reisner ideal of the six-vertex triangulation of the real
/// projective plane.
pub fn rp2() -> SquarefreeIdeal {
    ideal(&[
        "x1x2x3", "x1x2y1", "x1x3y2", "x1y1y3", "x1y2y3", "x2x3y3", "x2y1y2", "x2y2y3", "x3y1y2", "x3y1y3",
    ])
}

/// Minimal primes of [`rp2`] in the numbering `p_1..p_10` used throughout
/// the docs and tests.
pub fn rp2_primes() -> Vec<MonomialPrime> {
    primes(&[
        "x3y1y3", "x1y1y3", "x2y1y2", "x3y1y2", "x1y2y3", "x2y2y3", "x2x3y3", "x1x2y1", "x1x3y2", "x1x2x3",
    ])
}

/// Stanley–Reisner ideal of the Möbius band.
pub fn moebius() -> SquarefreeIdeal {
    ideal(&["x1x3", "x1y2", "x2y3", "x2x3y1", "x3y1y2", "y1y2y3"])
}

/// Minimal primes of [`moebius`] in the numbering `p_1..p_6`.
pub fn moebius_primes() -> Vec<MonomialPrime> {
    primes(&["x2x3y2", "x1x2y2", "x1x2y1", "x1x3y3", "x1y1y3", "x3y2y3"])
}

/// `(x1^2, x1x2, y1^2, y1y2)` in `K[x1,x2,y1,y2]`: a tensor product of two
/// depth 0, dimension 1 modules.
pub fn depth_zero_product() -> GeneralMonomialIdeal {
    let ring = RingSpec::new(2, 2).expect("valid ring");
    GeneralMonomialIdeal::new(ring, vec![vec![2, 0, 0, 0], vec![1, 1, 0, 0], vec![0, 0, 2, 0], vec![0, 0, 1, 1]])
        .expect("fixture in ring")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::intersect_primes;

    #[test]
    fn rp2_primes_match_decomposition() {
        let mut expected = rp2_primes();
        expected.sort();
        assert_eq!(rp2().minimal_primes().unwrap(), expected);
        assert_eq!(intersect_primes(ring33(), &rp2_primes()), rp2());
    }

    #[test]
    fn moebius_primes_match_decomposition() {
        let mut expected = moebius_primes();
        expected.sort();
        assert_eq!(moebius().minimal_primes().unwrap(), expected);
        assert_eq!(moebius().generators().len(), 6);
    }

    #[test]
    fn dimensions() {
        assert_eq!(rp2().dim_of_quotient().unwrap(), 3);
        assert_eq!(moebius().dim_of_quotient().unwrap(), 3);
    }
}
