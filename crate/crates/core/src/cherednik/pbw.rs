//! Filtered dimension of `H_{t,c}` from anti-ordered words.

use std::collections::HashMap;

use crate::linalg::{EchelonBasis, SparseVec};
use crate::scalar::{binomial, factorial, Scalar};
use crate::symgroup::Permutation;

use super::element::{Cherednik, CherednikElement, PbwWord};
use super::verma::monomials_up_to;

/// Outcome of a filtered-dimension count at degree `<= d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PbwCount {
    pub m: usize,
    pub d: u32,
    /// `C(2m+d, d) · m!`.
    pub expected: usize,
    /// Rank of the normal forms of all words `y^β x^α w` of degree `<= d`.
    pub rank: usize,
}

impl PbwCount {
    pub fn holds(&self) -> bool {
        self.expected == self.rank
    }
}

/// Rank of the anti-ordered spanning set `y^β · x^α · w` at the given parameter values.
pub fn pbw_dimension_check(m: usize, d: u32, t: Scalar, c: Scalar) -> PbwCount {
    let alg = Cherednik::new(m, t, c);
    let expected = binomial((2 * m) as u64 + d as u64, d as u64) * factorial(m as u64);
    let mut index: HashMap<PbwWord, usize> = HashMap::new();
    let mut basis = EchelonBasis::new();
    let one = vec![0; m];
    let exps: Vec<(Vec<u32>, Vec<u32>)> = monomials_up_to(2 * m, d)
        .into_iter()
        .map(|e| (e[..m].to_vec(), e[m..].to_vec()))
        .collect();
    for (xe, ye) in &exps {
        let ypart = CherednikElement::word(
            PbwWord { x: one.clone(), w: Permutation::identity(m), y: ye.clone() },
            Scalar::from_int(1),
        );
        for w in Permutation::all(m) {
            let xw = CherednikElement::word(PbwWord { x: xe.clone(), w, y: one.clone() }, Scalar::from_int(1));
            let prod = alg.mul(&ypart, &xw);
            let mut v = SparseVec::new();
            for (word, coeff) in prod.terms().iter() {
                let n = index.len();
                let k = *index.entry(word.clone()).or_insert(n);
                v.insert(k, coeff.clone());
            }
            basis.insert(&v);
        }
    }
    PbwCount {
        m,
        d,
        expected: expected.to_i64().unwrap() as usize,
        rank: basis.rank(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let r = pbw_dimension_check(2, 2, Scalar::new(3, 2), Scalar::new(2, 5));
        assert_eq!(r.expected, 30);
        assert!(r.holds());
        let r = pbw_dimension_check(1, 3, Scalar::from_int(1), Scalar::from_int(1));
        assert_eq!(r.expected, 10);
        assert!(r.holds());
    }
}
