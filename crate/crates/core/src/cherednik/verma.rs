//! Generalized Verma modules `Δ_t(a, λ) = ℂ[x] ⊗ Sp_ν(a, λ)` truncated at a degree cap.

use num::Zero;

use crate::error::{AlgebraError, Result};
use crate::lincomb::LinComb;
use crate::scalar::{Coeff, Scalar};
use crate::symgroup::{InducedModule, Permutation, SymRep};

use super::element::{permute_exps, Cherednik, CherednikElement};

/// Basis key: `x`-exponents and an index into the inducing module.
pub type VermaKey = (Vec<u32>, usize);
pub type VermaVector<C> = LinComb<VermaKey, C>;

pub struct GenVerma<C: Coeff> {
    pub alg: Cherednik<C>,
    pub module: InducedModule,
    pub cap: u32,
}

pub const DEFAULT_CAP: u32 = 6;

fn monomials(m: usize, deg: u32) -> Vec<Vec<u32>> {
    fn rec(m: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == m - 1 {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for v in (0..=left).rev() {
            cur.push(v);
            rec(m, left - v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if m == 0 {
        if deg == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(m, deg, &mut Vec::new(), &mut out);
    out
}

/// All exponent vectors of total degree `<= cap`, graded then reverse lexicographic.
pub fn monomials_up_to(m: usize, cap: u32) -> Vec<Vec<u32>> {
    (0..=cap).flat_map(|d| monomials(m, d)).collect()
}

impl<C: Coeff> GenVerma<C> {
    pub fn new(alg: Cherednik<C>, module: InducedModule, cap: u32) -> Result<Self> {
        if alg.m != module.m {
            return Err(AlgebraError::SizeMismatch(format!(
                "algebra of rank {} and inducing module for S_{}",
                alg.m, module.m
            )));
        }
        Ok(GenVerma { alg, module, cap })
    }

    pub fn m(&self) -> usize {
        self.alg.m
    }

    /// Basis of the truncation, ordered by degree.
    pub fn basis(&self) -> Vec<VermaKey> {
        let d = self.module.dim();
        monomials_up_to(self.m(), self.cap)
            .into_iter()
            .flat_map(|e| (0..d).map(move |k| (e.clone(), k)))
            .collect()
    }

    /// `1 ⊗ e_k`.
    pub fn lowest(&self, k: usize) -> VermaVector<C> {
        LinComb::basis((vec![0; self.m()], k))
    }

    pub fn vector(&self, x: Vec<u32>, k: usize) -> VermaVector<C> {
        LinComb::basis((x, k))
    }

    fn group_action(&self, w: &Permutation, v: &VermaVector<C>) -> VermaVector<C> {
        if w.is_identity() {
            return v.clone();
        }
        let mat = self.module.matrix_of(w).expect("sizes agree");
        let mut out = LinComb::zero();
        for ((x, k), c) in v.iter() {
            let nx = permute_exps(w, x);
            for l in 0..self.module.dim() {
                let e = mat.get(l, *k);
                if !e.is_zero() {
                    out.add_term((nx.clone(), l), c.scale(e));
                }
            }
        }
        out
    }

    fn x_action(&self, a: &[u32], v: &VermaVector<C>) -> Result<VermaVector<C>> {
        let mut out = LinComb::zero();
        for ((x, k), c) in v.iter() {
            let nx: Vec<u32> = x.iter().zip(a).map(|(p, q)| p + q).collect();
            if nx.iter().sum::<u32>() > self.cap {
                return Err(AlgebraError::CapExceeded { cap: self.cap });
            }
            out.add_term((nx, *k), c.clone());
        }
        Ok(out)
    }

    /// `y_i` (0-based) via the PBW commutation `y_i x^a = Σ x^{a'} v' y^{b'}`.
    fn y_action(&self, i: usize, v: &VermaVector<C>) -> VermaVector<C> {
        let mut out = LinComb::zero();
        for ((x, k), c) in v.iter() {
            for (w, cw) in self.alg.y_times_x(i, x).iter() {
                let mut coeff = c.cmul(cw);
                if let Some(j) = w.y.iter().position(|&e| e > 0) {
                    coeff = coeff.scale(self.module.y_eigenvalue(j, *k));
                }
                if coeff.is_zero() {
                    continue;
                }
                let moved = self.group_action(&w.w, &LinComb::term((vec![0; self.m()], *k), coeff));
                for ((_, l), c2) in moved.iter() {
                    out.add_term((w.x.clone(), *l), c2.clone());
                }
            }
        }
        out
    }

    /// Action of an algebra element.
    pub fn apply(&self, h: &CherednikElement<C>, v: &VermaVector<C>) -> Result<VermaVector<C>> {
        let mut out = LinComb::zero();
        for (word, c) in h.terms().iter() {
            let mut cur = v.clone();
            for (i, &e) in word.y.iter().enumerate() {
                for _ in 0..e {
                    cur = self.y_action(i, &cur);
                }
            }
            cur = self.group_action(&word.w, &cur);
            cur = self.x_action(&word.x, &cur)?;
            out.add_scaled(&cur, c);
        }
        Ok(out)
    }
}

/// `Δ_t(0, triv)`: the polynomial representation.
pub fn polynomial_representation<C: Coeff>(alg: Cherednik<C>, cap: u32) -> Result<GenVerma<C>> {
    use crate::symgroup::{induce_specht, Composition, Multipartition, Partition};
    let m = alg.m;
    let module = induce_specht(
        &Composition::new(vec![m])?,
        &Multipartition(vec![Partition::new(vec![m])?]),
        &vec![Scalar::zero(); m],
    )?;
    GenVerma::new(alg, module, cap)
}
