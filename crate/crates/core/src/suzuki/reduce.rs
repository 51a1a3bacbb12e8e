//! Coinvariant reduction `ℂ[𝔥] ⊗ (V*)^{⊗n} ⊗ 𝕙_c → H_{0,1}` and the centre map `Θ`.

use crate::affine::{AffineElement, Mode, OpSpec, Word};
use crate::cherednik::{CherednikElement, PbwWord};
use crate::error::{AlgebraError, Result};
use crate::lincomb::LinComb;
use crate::scalar::Scalar;
use crate::symgroup::Permutation;

use super::hmodule::{is_peelable, letter_class, HElement, HModule, LetterClass};

/// Monomial exponents of `f`, tensor labels `v` (0-based), word `u` applied to `1_H`.
pub type TensorKey = (Vec<u32>, Vec<usize>, Word);

/// Formal sum of `f ⊗ v ⊗ u·1_H` representing a coinvariant class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorClass {
    pub m: usize,
    pub terms: LinComb<TensorKey, Scalar>,
}

impl TensorClass {
    pub fn zero(m: usize) -> Self {
        TensorClass { m, terms: LinComb::zero() }
    }

    /// `1 ⊗ e_id* ⊗ h`.
    pub fn identity_slot(h: &HElement) -> Self {
        let m = h.n;
        let v: Vec<usize> = (0..m).collect();
        let terms = h
            .terms()
            .iter()
            .map(|(w, c)| ((vec![0; m], v.clone(), w.clone()), c.clone()))
            .collect();
        TensorClass { m, terms }
    }

    pub fn add_term(&mut self, f: Vec<u32>, v: Vec<usize>, u: Word, c: Scalar) {
        self.terms.add_term((f, v, u), c);
    }
}

/// `f ⊗ v ⊗ Y[k]u′ ~ −Σ_i x_i^{−k} f ⊗ Y^{(i)} v ⊗ u′` with `e_rs e_p* = −δ_pr e_s*`.
fn peel(key: &TensorKey, c: &Scalar, out: &mut LinComb<TensorKey, Scalar>) {
    let (f, v, u) = key;
    let y: &Mode = &u[0];
    let k = (-y.j) as u32;
    let rest: Word = u[1..].to_vec();
    for (i, &vi) in v.iter().enumerate() {
        if vi != y.r {
            continue;
        }
        let mut nf = f.clone();
        nf[i] += k;
        let mut nv = v.clone();
        nv[i] = y.s;
        out.add_term((nf, nv, rest.clone()), c.clone());
    }
}

/// `Υ^{-1}` applied to the fully peeled terms.
fn upsilon_inverse(m: usize, done: &LinComb<TensorKey, Scalar>) -> Result<CherednikElement<Scalar>> {
    let mut out = LinComb::zero();
    for ((f, v, u), c) in done.iter() {
        let Ok(vperm) = Permutation::from_vec(v.clone()) else {
            continue;
        };
        let mut beta = vec![0u32; m];
        for a in u {
            if letter_class(a) != LetterClass::DiagonalOne {
                return Err(AlgebraError::Invalid(format!("unpeeled letter {a}")));
            }
            beta[a.r] += 1;
        }
        let sign: u32 = beta.iter().sum();
        let coeff = if sign.is_multiple_of(2) { c.clone() } else { -c };
        let word = PbwWord {
            x: f.clone(),
            w: vperm.inverse(),
            y: beta,
        };
        out.add_term(word, coeff);
    }
    Ok(CherednikElement::from_terms(m, out))
}

/// Reduce a coinvariant class over `𝕙_c` to an element of `H_{0,1}(S_n)`.
pub fn coinvariant_reduce(h: &HModule, cls: &TensorClass) -> Result<CherednikElement<Scalar>> {
    if cls.m != h.n {
        return Err(AlgebraError::SizeMismatch(format!("m = {} but n = {}", cls.m, h.n)));
    }
    let mut cur: LinComb<TensorKey, Scalar> = LinComb::zero();
    for ((f, v, u), c) in cls.terms.iter() {
        for (w, d) in h.h_normal_form(u).terms().iter() {
            cur.add_term((f.clone(), v.clone(), w.clone()), c * d);
        }
    }
    let bound = cur.keys().map(|k| k.2.len()).max().unwrap_or(0) + 1;
    let mut done = LinComb::zero();
    for _ in 0..=bound {
        if cur.is_zero() {
            return upsilon_inverse(h.n, &done);
        }
        let mut next = LinComb::zero();
        for (key, c) in cur.iter() {
            match key.2.first() {
                Some(a) if is_peelable(a) => peel(key, c, &mut next),
                _ => done.add_term(key.clone(), c.clone()),
            }
        }
        cur = next;
    }
    Err(AlgebraError::NonTerminating(bound))
}

/// `Θ(A)` for an operator already materialized modulo `Î_2`.
pub fn theta_of(h: &HModule, a: &AffineElement<Scalar>) -> Result<CherednikElement<Scalar>> {
    let he = h.apply(a);
    coinvariant_reduce(h, &TensorClass::identity_slot(&he))
}

/// `Θ(op)`: materialize at depth 2, act on `1_H`, reduce.
pub fn theta(h: &HModule, op: &OpSpec) -> Result<CherednikElement<Scalar>> {
    if let OpSpec::T(k, _) = op {
        if *k == 0 || *k > h.n {
            return Err(AlgebraError::Invalid(format!("T needs 1 <= k <= n, got k={k}")));
        }
    }
    let a = h.affine().materialize(op, 2)?;
    theta_of(h, &a)
}

/// `op · 1_H` in normal form.
pub fn op_on_vacuum(h: &HModule, op: &OpSpec) -> Result<HElement> {
    let a = h.affine().materialize(op, 2)?;
    Ok(h.apply(&a))
}
