//! Specht modules in Young's seminormal form and induced modules with a `y`-action.

use num::{One, Zero};

use super::partition::{Composition, Multipartition, Partition};
use super::perm::Permutation;
use crate::error::{AlgebraError, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// A representation of `S_m` given by matrices of the adjacent transpositions.
pub trait SymRep {
    fn degree(&self) -> usize;
    fn dim(&self) -> usize;
    /// Matrix of `s_i = (i, i+1)`, 0-based.
    fn s_matrix(&self, i: usize) -> &Matrix;

    fn matrix_of(&self, w: &Permutation) -> Result<Matrix> {
        if w.size() != self.degree() {
            return Err(AlgebraError::SizeMismatch(format!(
                "permutation of {} letters on a module for S_{}",
                w.size(),
                self.degree()
            )));
        }
        let mut acc = Matrix::identity(self.dim());
        for i in w.reduced_word() {
            acc = acc.mul(self.s_matrix(i));
        }
        Ok(acc)
    }
}

/// Trace of `w` on the module.
pub fn character(module: &dyn SymRep, w: &Permutation) -> Result<Scalar> {
    Ok(module.matrix_of(w)?.trace())
}

#[derive(Clone, Debug)]
pub struct SpechtModule {
    pub label: Partition,
    pub tableaux: Vec<Vec<usize>>,
    s: Vec<Matrix>,
}

impl SymRep for SpechtModule {
    fn degree(&self) -> usize {
        self.label.size()
    }
    fn dim(&self) -> usize {
        self.tableaux.len()
    }
    fn s_matrix(&self, i: usize) -> &Matrix {
        &self.s[i]
    }
}

/// Seminormal matrices for the Specht module of `lambda`.
pub fn specht_matrices(lambda: &Partition) -> Result<SpechtModule> {
    let m = lambda.size();
    if m == 0 {
        return Err(AlgebraError::Invalid("Specht module needs m >= 1".into()));
    }
    let tabs = lambda.standard_tableaux();
    let d = tabs.len();
    // column of each entry
    let cols: Vec<Vec<usize>> = tabs
        .iter()
        .map(|rows| {
            let mut filled = vec![0usize; lambda.len().max(1)];
            rows.iter()
                .map(|&r| {
                    let c = filled[r];
                    filled[r] += 1;
                    c
                })
                .collect()
        })
        .collect();
    let index_of = |rows: &Vec<usize>| tabs.iter().position(|t| t == rows);
    let mut s = Vec::with_capacity(m.saturating_sub(1));
    for i in 0..m.saturating_sub(1) {
        let mut mat = Matrix::zeros(d, d);
        for (k, rows) in tabs.iter().enumerate() {
            let content = |e: usize| cols[k][e] as i64 - rows[e] as i64;
            let rho = content(i + 1) - content(i);
            let diag = Scalar::new(1, rho);
            mat.set(k, k, diag.clone());
            if rho.abs() == 1 {
                continue;
            }
            let mut swapped = rows.clone();
            swapped.swap(i, i + 1);
            let k2 = index_of(&swapped).expect("swap of non-adjacent cells stays standard");
            let off = if rows[i] < rows[i + 1] {
                Scalar::one()
            } else {
                &Scalar::one() - &(&diag * &diag)
            };
            mat.set(k2, k, off);
        }
        s.push(mat);
    }
    Ok(SpechtModule {
        label: lambda.clone(),
        tableaux: tabs,
        s,
    })
}

/// `Ind` of `Sp(λ^1) ⊗ ... ⊗ Sp(λ^l)` from `S_ν` to `S_m`, with `y_i` acting diagonally.
#[derive(Clone, Debug)]
pub struct InducedModule {
    pub m: usize,
    pub nu: Composition,
    pub lambda: Multipartition,
    pub a: Vec<Scalar>,
    /// Minimal-length coset representatives of `S_m / S_ν`.
    pub cosets: Vec<Permutation>,
    factors: Vec<Option<SpechtModule>>,
    inner_dim: usize,
    s: Vec<Matrix>,
    y: Vec<Vec<Scalar>>,
}

impl SymRep for InducedModule {
    fn degree(&self) -> usize {
        self.m
    }
    fn dim(&self) -> usize {
        self.cosets.len() * self.inner_dim
    }
    fn s_matrix(&self, i: usize) -> &Matrix {
        &self.s[i]
    }
}

impl InducedModule {
    /// Eigenvalue of `y_i` (0-based) on basis vector `k`.
    pub fn y_eigenvalue(&self, i: usize, k: usize) -> &Scalar {
        &self.y[i][k]
    }

    pub fn y_matrix(&self, i: usize) -> Matrix {
        Matrix::diag(&self.y[i])
    }

    pub fn inner_dim(&self) -> usize {
        self.inner_dim
    }

    /// Basis index of `(coset, inner)`.
    pub fn index(&self, coset: usize, inner: usize) -> usize {
        coset * self.inner_dim + inner
    }

    fn block_matrix(&self, block: usize, local: &Permutation) -> Matrix {
        match &self.factors[block] {
            Some(sp) => sp.matrix_of(local).expect("sizes agree"),
            None => Matrix::identity(1),
        }
    }

    /// Matrix of `h ∈ S_ν` on the inner tensor product.
    fn inner_matrix(&self, h: &Permutation) -> Matrix {
        let offs = self.nu.offsets();
        let mut mats = Vec::new();
        for (b, &len) in self.nu.parts().iter().enumerate() {
            let o = offs[b];
            let local: Vec<usize> = (0..len).map(|p| h.apply(o + p) - o).collect();
            mats.push(self.block_matrix(b, &Permutation::from_vec(local).expect("block permutation")));
        }
        kron_all(&mats)
    }
}

fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let mut out = Matrix::zeros(a.rows * b.rows, a.cols * b.cols);
    for i in 0..a.rows {
        for j in 0..a.cols {
            let x = a.get(i, j);
            if x.is_zero() {
                continue;
            }
            for k in 0..b.rows {
                for l in 0..b.cols {
                    out.set(i * b.rows + k, j * b.cols + l, x * b.get(k, l));
                }
            }
        }
    }
    out
}

fn kron_all(ms: &[Matrix]) -> Matrix {
    ms.iter().fold(Matrix::identity(1), |acc, m| kron(&acc, m))
}

/// Minimal-length representatives of `S_m / S_ν`: permutations increasing on each block.
pub fn coset_representatives(nu: &Composition) -> Vec<Permutation> {
    let m = nu.size();
    let offs = nu.offsets();
    Permutation::all(m)
        .into_iter()
        .filter(|w| {
            nu.parts().iter().enumerate().all(|(b, &len)| {
                let o = offs[b];
                (o..o + len - 1).all(|p| w.apply(p) < w.apply(p + 1))
            })
        })
        .collect()
}

/// Coset representative of `g` and the factor `h ∈ S_ν` with `g = rep · h`.
pub fn coset_decompose(nu: &Composition, g: &Permutation) -> (Permutation, Permutation) {
    let offs = nu.offsets();
    let mut rep = g.as_slice().to_vec();
    for (b, &len) in nu.parts().iter().enumerate() {
        rep[offs[b]..offs[b] + len].sort_unstable();
    }
    let rep = Permutation::from_vec(rep).expect("sorted blocks");
    let h = rep.inverse().compose(g);
    (rep, h)
}

/// Checks that the stabilizer of `a` in `S_m` is exactly `S_ν`.
pub fn stabilizer_matches(nu: &Composition, a: &[Scalar]) -> bool {
    if nu.size() != a.len() {
        return false;
    }
    let blocks = nu.block_of();
    for i in 0..a.len() {
        for j in 0..a.len() {
            if (blocks[i] == blocks[j]) != (a[i] == a[j]) {
                return false;
            }
        }
    }
    true
}

pub fn induce_specht(nu: &Composition, lambda: &Multipartition, a: &[Scalar]) -> Result<InducedModule> {
    if lambda.size_type() != nu.parts() {
        return Err(AlgebraError::SizeMismatch(format!(
            "multipartition of size type {:?} for composition {:?}",
            lambda.size_type(),
            nu.parts()
        )));
    }
    if !stabilizer_matches(nu, a) {
        return Err(AlgebraError::StabilizerMismatch);
    }
    let m = nu.size();
    let factors: Vec<Option<SpechtModule>> = lambda
        .0
        .iter()
        .map(|p| if p.size() == 0 { Ok(None) } else { specht_matrices(p).map(Some) })
        .collect::<Result<_>>()?;
    let inner_dim = factors.iter().map(|f| f.as_ref().map_or(1, |s| s.dim())).product();
    let cosets = coset_representatives(nu);
    let mut module = InducedModule {
        m,
        nu: nu.clone(),
        lambda: lambda.clone(),
        a: a.to_vec(),
        cosets,
        factors,
        inner_dim,
        s: Vec::new(),
        y: Vec::new(),
    };
    let dim = module.dim();
    let mut s = Vec::new();
    for i in 0..m.saturating_sub(1) {
        let g = Permutation::simple(m, i);
        let mut mat = Matrix::zeros(dim, dim);
        for (ci, u) in module.cosets.iter().enumerate() {
            let (rep, h) = coset_decompose(nu, &g.compose(u));
            let cj = module.cosets.iter().position(|c| *c == rep).expect("coset representative");
            let inner = module.inner_matrix(&h);
            for p in 0..inner_dim {
                for q in 0..inner_dim {
                    let v = inner.get(p, q);
                    if !v.is_zero() {
                        mat.set(cj * inner_dim + p, ci * inner_dim + q, v.clone());
                    }
                }
            }
        }
        s.push(mat);
    }
    let mut y = vec![Vec::with_capacity(dim); m];
    for u in &module.cosets {
        let uinv = u.inverse();
        for _ in 0..inner_dim {
            for (i, yi) in y.iter_mut().enumerate() {
                yi.push(a[uinv.apply(i)].clone());
            }
        }
    }
    module.s = s;
    module.y = y;
    Ok(module)
}
