//! Exact linear algebra over the rationals.

use std::collections::BTreeMap;

use num::{One, Zero};

use crate::scalar::Scalar;

/// Sparse vector indexed by basis position.
pub type SparseVec = BTreeMap<usize, Scalar>;

pub fn sparse_add_scaled(v: &mut SparseVec, w: &SparseVec, s: &Scalar) {
    if s.is_zero() {
        return;
    }
    for (k, c) in w {
        let e = v.entry(*k).or_insert_with(Scalar::zero);
        *e += &(c * s);
        if e.is_zero() {
            v.remove(k);
        }
    }
}

/// Incrementally maintained reduced row-echelon basis of a subspace.
///
/// Each stored row has a pivot (its smallest index) with coefficient 1, and
/// no stored row has a nonzero entry at another row's pivot.
#[derive(Clone, Debug, Default)]
pub struct EchelonBasis {
    rows: BTreeMap<usize, SparseVec>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Remainder of `v` modulo the subspace.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        for (p, row) in &self.rows {
            if let Some(c) = v.get(p).cloned() {
                sparse_add_scaled(&mut v, row, &-c);
            }
        }
        v
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Add `v`; returns false if it was already in the span.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let mut r = self.reduce(v);
        let Some((&p, lead)) = r.iter().next() else {
            return false;
        };
        let inv = lead.inv();
        for c in r.values_mut() {
            *c = &*c * &inv;
        }
        for row in self.rows.values_mut() {
            if let Some(c) = row.get(&p).cloned() {
                sparse_add_scaled(row, &r, &-c);
            }
        }
        r.retain(|_, c| !c.is_zero());
        self.rows.insert(p, r);
        true
    }
}

/// Rank of a list of sparse vectors.
pub fn rank(vs: &[SparseVec]) -> usize {
    let mut b = EchelonBasis::new();
    for v in vs {
        b.insert(v);
    }
    b.rank()
}

/// Dense matrix over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn diag(d: &[Scalar]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, v) in d.iter().enumerate() {
            m.set(i, i, v.clone());
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn mul(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows, "matrix shape mismatch");
        let mut out = Matrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] += &(a * b);
                }
            }
        }
        out
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).fold(Scalar::zero(), |acc, i| &acc + self.get(i, i))
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Matrix::identity(self.rows)
    }

    /// Column `c` as a sparse vector.
    pub fn column(&self, c: usize) -> SparseVec {
        let mut v = SparseVec::new();
        for r in 0..self.rows {
            let x = self.get(r, c);
            if !x.is_zero() {
                v.insert(r, x.clone());
            }
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(entries: &[(usize, i64)]) -> SparseVec {
        entries.iter().map(|&(k, v)| (k, Scalar::from_int(v))).collect()
    }

    #[test]
    fn echelon_rank_and_reduction() {
        let vs = vec![sv(&[(0, 1), (1, 2)]), sv(&[(0, 2), (1, 4)]), sv(&[(1, 1), (2, 1)])];
        assert_eq!(rank(&vs), 2);
        let mut b = EchelonBasis::new();
        for v in &vs {
            b.insert(v);
        }
        assert!(b.contains(&sv(&[(0, 1), (1, 3), (2, 1)])));
        assert!(!b.contains(&sv(&[(2, 1)])));
    }

    #[test]
    fn matrix_product() {
        let mut a = Matrix::zeros(2, 2);
        a.set(0, 1, Scalar::one());
        a.set(1, 0, Scalar::one());
        assert!(a.mul(&a).is_identity());
        assert_eq!(a.trace(), Scalar::zero());
    }
}
