//! Permutations in one-line notation.

use std::fmt;

use crate::error::{AlgebraError, Result};

/// Permutation of `{0..m-1}` stored as `w[i] = w(i)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(m: usize) -> Self {
        Permutation((0..m).collect())
    }

    pub fn from_vec(v: Vec<usize>) -> Result<Self> {
        let m = v.len();
        let mut seen = vec![false; m];
        for &x in &v {
            if x >= m || seen[x] {
                return Err(AlgebraError::Invalid(format!("not a permutation: {v:?}")));
            }
            seen[x] = true;
        }
        Ok(Permutation(v))
    }

    /// From 1-based one-line notation.
    pub fn from_one_based(v: &[usize]) -> Result<Self> {
        Self::from_vec(v.iter().map(|&x| x.wrapping_sub(1)).collect())
    }

    /// Transposition of `i` and `j` (0-based).
    pub fn transposition(m: usize, i: usize, j: usize) -> Self {
        let mut v: Vec<usize> = (0..m).collect();
        v.swap(i, j);
        Permutation(v)
    }

    /// Adjacent transposition `s_i = (i, i+1)` (0-based).
    pub fn simple(m: usize, i: usize) -> Self {
        Self::transposition(m, i, i + 1)
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut v = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            v[x] = i;
        }
        Permutation(v)
    }

    pub fn length(&self) -> usize {
        let w = &self.0;
        let mut l = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    l += 1;
                }
            }
        }
        l
    }

    pub fn sign(&self) -> i64 {
        if self.length().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Reduced word `[i_1, ..., i_k]` with `self = s_{i_1} ... s_{i_k}` (0-based).
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut u = self.0.clone();
        let mut word = Vec::new();
        loop {
            let Some(i) = (0..u.len().saturating_sub(1)).find(|&i| u[i] > u[i + 1]) else {
                break;
            };
            u.swap(i, i + 1);
            word.push(i);
        }
        word.reverse();
        word
    }

    /// Factorization `self = t_1 ... t_k` into transpositions `(i, j)` with `i < j`.
    pub fn transposition_factors(&self) -> Vec<(usize, usize)> {
        let mut u = self.clone();
        let mut out = Vec::new();
        while let Some(i) = (0..u.size()).find(|&i| u.0[i] != i) {
            let j = u.0[i];
            out.push((i, j));
            u = Permutation::transposition(u.size(), i, j).compose(&u);
        }
        out
    }

    /// All permutations of size `m` in lexicographic order.
    pub fn all(m: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..m).collect();
        loop {
            out.push(Permutation(cur.clone()));
            let Some(i) = (0..m.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..m).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| (x + 1).to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_laws() {
        for w in Permutation::all(4) {
            assert!(w.compose(&w.inverse()).is_identity());
            let word = w.reduced_word();
            assert_eq!(word.len(), w.length());
            let rebuilt = word
                .iter()
                .fold(Permutation::identity(4), |acc, &i| acc.compose(&Permutation::simple(4, i)));
            assert_eq!(rebuilt, w);
            let rebuilt = w.transposition_factors().iter().fold(Permutation::identity(4), |acc, &(i, j)| {
                acc.compose(&Permutation::transposition(4, i, j))
            });
            assert_eq!(rebuilt, w);
        }
        assert_eq!(Permutation::all(4).len(), 24);
    }

    #[test]
    fn associativity() {
        let all = Permutation::all(3);
        for a in &all {
            for b in &all {
                for c in &all {
                    assert_eq!(a.compose(b).compose(c), a.compose(&b.compose(c)));
                }
            }
        }
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_vec(vec![0, 0]).is_err());
        assert!(Permutation::from_vec(vec![0, 2]).is_err());
    }
}
