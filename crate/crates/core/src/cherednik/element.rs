//! PBW normal form `x^α · w · y^β` in the rational Cherednik algebra of `S_m`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use num::{One, Zero};

use crate::error::{AlgebraError, Result};
use crate::lincomb::LinComb;
use crate::param::{ParamPoint, ParamScalar};
use crate::poly::{mono_string, render_sum, CommPoly, Mono};
use crate::scalar::{Coeff, Scalar};
use crate::symgroup::Permutation;

/// Basis word `x^α · w · y^β`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PbwWord {
    pub x: Vec<u32>,
    pub w: Permutation,
    pub y: Vec<u32>,
}

impl PbwWord {
    pub fn one(m: usize) -> Self {
        PbwWord {
            x: vec![0; m],
            w: Permutation::identity(m),
            y: vec![0; m],
        }
    }

    pub fn m(&self) -> usize {
        self.x.len()
    }

    pub fn x_degree(&self) -> u32 {
        self.x.iter().sum()
    }

    pub fn y_degree(&self) -> u32 {
        self.y.iter().sum()
    }

    pub fn degree(&self) -> u32 {
        self.x_degree() + self.y_degree()
    }

    fn render_key(&self) -> (std::cmp::Reverse<u32>, std::cmp::Reverse<Vec<u32>>, Permutation, std::cmp::Reverse<Vec<u32>>) {
        use std::cmp::Reverse;
        (Reverse(self.degree()), Reverse(self.x.clone()), self.w.clone(), Reverse(self.y.clone()))
    }
}

/// `out[w(k)] = e[k]`: the exponent record of `w · x^e · w^{-1}`.
pub fn permute_exps(w: &Permutation, e: &[u32]) -> Vec<u32> {
    let mut out = vec![0; e.len()];
    for (k, &v) in e.iter().enumerate() {
        out[w.apply(k)] = v;
    }
    out
}

fn add_exps(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(p, q)| p + q).collect()
}

pub fn render_perm(w: &Permutation) -> String {
    w.transposition_factors()
        .iter()
        .map(|(i, j)| format!("s({},{})", i + 1, j + 1))
        .collect::<Vec<_>>()
        .join("*")
}

pub fn render_word(word: &PbwWord) -> String {
    let m = word.m();
    let mut parts = Vec::new();
    let mut xe = Mono::one(m);
    xe.0[..m].copy_from_slice(&word.x);
    let xs = mono_string(&xe);
    if !xs.is_empty() {
        parts.push(xs);
    }
    let ws = render_perm(&word.w);
    if !ws.is_empty() {
        parts.push(ws);
    }
    let mut ye = Mono::one(m);
    ye.0[m..].copy_from_slice(&word.y);
    let ys = mono_string(&ye);
    if !ys.is_empty() {
        parts.push(ys);
    }
    parts.join("*")
}

/// Element of `H_{t,c}(S_m)` in PBW normal form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CherednikElement<C: Coeff> {
    m: usize,
    terms: LinComb<PbwWord, C>,
}

impl<C: Coeff> CherednikElement<C> {
    pub fn zero(m: usize) -> Self {
        CherednikElement {
            m,
            terms: LinComb::zero(),
        }
    }

    pub fn from_terms(m: usize, terms: LinComb<PbwWord, C>) -> Self {
        CherednikElement { m, terms }
    }

    pub fn scalar(m: usize, c: C) -> Self {
        Self::from_terms(m, LinComb::term(PbwWord::one(m), c))
    }

    pub fn one(m: usize) -> Self {
        Self::scalar(m, C::one())
    }

    pub fn word(word: PbwWord, c: C) -> Self {
        let m = word.m();
        Self::from_terms(m, LinComb::term(word, c))
    }

    pub fn group(w: &Permutation) -> Self {
        let m = w.size();
        let mut word = PbwWord::one(m);
        word.w = w.clone();
        Self::word(word, C::one())
    }

    /// Commutative polynomial `f(x, y)` read as `x^α y^β` words.
    pub fn from_poly(f: &CommPoly<C>) -> Self {
        let m = f.m();
        let mut terms = LinComb::zero();
        for (e, c) in f.terms().iter() {
            terms.add_term(
                PbwWord {
                    x: e.x().to_vec(),
                    w: Permutation::identity(m),
                    y: e.y().to_vec(),
                },
                c.clone(),
            );
        }
        Self::from_terms(m, terms)
    }

    /// Polynomial times a group element on the right: `f(x, y) · w` read as `x^α w y^β`.
    pub fn from_poly_perm(f: &CommPoly<C>, w: &Permutation) -> Self {
        let m = f.m();
        let mut terms = LinComb::zero();
        for (e, c) in f.terms().iter() {
            terms.add_term(
                PbwWord {
                    x: e.x().to_vec(),
                    w: w.clone(),
                    y: e.y().to_vec(),
                },
                c.clone(),
            );
        }
        Self::from_terms(m, terms)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn terms(&self) -> &LinComb<PbwWord, C> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn coeff(&self, w: &PbwWord) -> C {
        self.terms.get(w)
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.m, o.m, "Cherednik elements of different rank");
        Self::from_terms(self.m, self.terms.plus(&o.terms))
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!(self.m, o.m, "Cherednik elements of different rank");
        Self::from_terms(self.m, self.terms.minus(&o.terms))
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.m, self.terms.scaled(c))
    }

    pub fn neg(&self) -> Self {
        Self::from_terms(self.m, self.terms.neg())
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|w| w.degree()).max()
    }

    /// Terms of maximal total degree.
    pub fn top_degree_part(&self) -> Self {
        match self.degree() {
            None => self.clone(),
            Some(d) => Self::from_terms(self.m, self.terms.filter(|w| w.degree() == d)),
        }
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> CherednikElement<D> {
        CherednikElement {
            m: self.m,
            terms: self.terms.map_coeffs(f),
        }
    }

    pub fn to_param(&self) -> CherednikElement<ParamScalar> {
        self.map_coeffs(|c| c.to_param())
    }
}

impl CherednikElement<ParamScalar> {
    pub fn specialize(&self, pt: &ParamPoint) -> Self {
        self.map_coeffs(|c| c.specialize(pt))
    }

    /// Convert to rational coefficients; `None` if a parameter survives.
    pub fn to_scalar(&self) -> Option<CherednikElement<Scalar>> {
        Some(CherednikElement {
            m: self.m,
            terms: self.terms.try_map_coeffs(|c| c.as_constant())?,
        })
    }
}

impl<C: Coeff> fmt::Display for CherednikElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut items: Vec<_> = self.terms.iter().collect();
        items.sort_by_key(|(w, _)| w.render_key());
        let s = render_sum(items.into_iter().map(|(w, c)| (c.clone(), render_word(w))));
        write!(f, "{s}")
    }
}

impl<C: Coeff> fmt::Debug for CherednikElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Generator letters for [`Cherednik::normal_form`].
#[derive(Clone, Debug, PartialEq)]
pub enum Letter<C> {
    X(usize),
    Y(usize),
    /// Transposition `s_ij`, 1-based.
    S(usize, usize),
    Perm(Permutation),
    Scalar(C),
}

/// The algebra `H_{t,c}(S_m)` with fixed parameter values.
pub struct Cherednik<C: Coeff> {
    pub m: usize,
    pub t: C,
    pub c: C,
    memo: Mutex<HashMap<(usize, Vec<u32>), LinComb<PbwWord, C>>>,
}

impl<C: Coeff> Clone for Cherednik<C> {
    fn clone(&self) -> Self {
        Cherednik::new(self.m, self.t.clone(), self.c.clone())
    }
}

impl Cherednik<ParamScalar> {
    /// Fully symbolic `t` and `c`.
    pub fn symbolic(m: usize) -> Self {
        Cherednik::new(m, ParamScalar::t(), ParamScalar::c())
    }

    /// Symbolic `t`, `c = 1`.
    pub fn symbolic_t(m: usize) -> Self {
        Cherednik::new(m, ParamScalar::t(), ParamScalar::one())
    }
}

impl Cherednik<Scalar> {
    /// `t = 0, c = 1`.
    pub fn at_zero(m: usize) -> Self {
        Cherednik::new(m, Scalar::zero(), Scalar::one())
    }
}

impl<C: Coeff> Cherednik<C> {
    pub fn new(m: usize, t: C, c: C) -> Self {
        Cherednik {
            m,
            t,
            c,
            memo: Mutex::new(HashMap::new()),
        }
    }

    fn check(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.m {
            return Err(AlgebraError::IndexOutOfRange { index: i, max: self.m });
        }
        Ok(())
    }

    pub fn x(&self, i: usize) -> Result<CherednikElement<C>> {
        self.check(i)?;
        let mut w = PbwWord::one(self.m);
        w.x[i - 1] = 1;
        Ok(CherednikElement::word(w, C::one()))
    }

    pub fn y(&self, i: usize) -> Result<CherednikElement<C>> {
        self.check(i)?;
        let mut w = PbwWord::one(self.m);
        w.y[i - 1] = 1;
        Ok(CherednikElement::word(w, C::one()))
    }

    /// Transposition `s_ij`, 1-based.
    pub fn s(&self, i: usize, j: usize) -> Result<CherednikElement<C>> {
        self.check(i)?;
        self.check(j)?;
        if i == j {
            return Err(AlgebraError::Invalid(format!("s({i},{j}) is not a transposition")));
        }
        Ok(CherednikElement::group(&Permutation::transposition(self.m, i - 1, j - 1)))
    }

    /// Generators `x_i, y_i, s_{i,i+1}`.
    pub fn generators(&self) -> Vec<CherednikElement<C>> {
        let mut out = Vec::new();
        for i in 1..=self.m {
            out.push(self.x(i).unwrap());
            out.push(self.y(i).unwrap());
        }
        for i in 1..self.m {
            out.push(self.s(i, i + 1).unwrap());
        }
        out
    }

    /// `y_i · x^a` (0-based `i`) by letter-by-letter commutation.
    pub(crate) fn y_times_x(&self, i: usize, a: &[u32]) -> LinComb<PbwWord, C> {
        let key = (i, a.to_vec());
        if let Some(v) = self.memo.lock().unwrap().get(&key) {
            return v.clone();
        }
        let m = self.m;
        let out = match a.iter().position(|&e| e > 0) {
            None => {
                let mut w = PbwWord::one(m);
                w.y[i] = 1;
                LinComb::basis(w)
            }
            Some(j) => {
                let mut rest = a.to_vec();
                rest[j] -= 1;
                // x_j (y_i rest)
                let inner = self.y_times_x(i, &rest);
                let mut out = LinComb::zero();
                for (w, c) in inner.iter() {
                    let mut nw = w.clone();
                    nw.x[j] += 1;
                    out.add_term(nw, c.clone());
                }
                // [y_i, x_j] rest
                let push_s = |out: &mut LinComb<PbwWord, C>, k: usize, coeff: C| {
                    let s = Permutation::transposition(m, i, k);
                    out.add_term(
                        PbwWord {
                            x: permute_exps(&s, &rest),
                            w: s,
                            y: vec![0; m],
                        },
                        coeff,
                    );
                };
                if i != j {
                    push_s(&mut out, j, self.c.clone());
                } else {
                    out.add_term(
                        PbwWord {
                            x: rest.clone(),
                            w: Permutation::identity(m),
                            y: vec![0; m],
                        },
                        self.t.clone(),
                    );
                    for k in 0..m {
                        if k != i {
                            push_s(&mut out, k, self.c.cneg());
                        }
                    }
                }
                out
            }
        };
        self.memo.lock().unwrap().insert(key, out.clone());
        out
    }

    /// `y^β · x^γ` in normal form.
    fn y_power_times_x(&self, beta: &[u32], gamma: &[u32]) -> LinComb<PbwWord, C> {
        let m = self.m;
        let mut cur: LinComb<PbwWord, C> = LinComb::basis(PbwWord {
            x: gamma.to_vec(),
            w: Permutation::identity(m),
            y: vec![0; m],
        });
        for (i, &k) in beta.iter().enumerate() {
            for _ in 0..k {
                let mut next = LinComb::zero();
                for (word, c) in cur.iter() {
                    for (w2, c2) in self.y_times_x(i, &word.x).iter() {
                        // x^{a'} v' y^{b'} · v y^b
                        let vinv = word.w.inverse();
                        let nw = PbwWord {
                            x: w2.x.clone(),
                            w: w2.w.compose(&word.w),
                            y: add_exps(&permute_exps(&vinv, &w2.y), &word.y),
                        };
                        next.add_term(nw, c.cmul(c2));
                    }
                }
                cur = next;
            }
        }
        cur
    }

    fn mul_words(&self, a: &PbwWord, b: &PbwWord) -> LinComb<PbwWord, C> {
        let mid = self.y_power_times_x(&a.y, &b.x);
        let uinv = b.w.inverse();
        let mut out = LinComb::zero();
        for (w, c) in mid.iter() {
            let nw = PbwWord {
                x: add_exps(&a.x, &permute_exps(&a.w, &w.x)),
                w: a.w.compose(&w.w).compose(&b.w),
                y: add_exps(&permute_exps(&uinv, &w.y), &b.y),
            };
            out.add_term(nw, c.clone());
        }
        out
    }

    pub fn mul(&self, a: &CherednikElement<C>, b: &CherednikElement<C>) -> CherednikElement<C> {
        assert_eq!(a.m, self.m);
        assert_eq!(b.m, self.m);
        let mut out = LinComb::zero();
        for (wa, ca) in a.terms.iter() {
            for (wb, cb) in b.terms.iter() {
                let cab = ca.cmul(cb);
                out.add_scaled(&self.mul_words(wa, wb), &cab);
            }
        }
        CherednikElement::from_terms(self.m, out)
    }

    pub fn pow(&self, a: &CherednikElement<C>, e: u32) -> CherednikElement<C> {
        let mut acc = CherednikElement::one(self.m);
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    pub fn commutator(&self, a: &CherednikElement<C>, b: &CherednikElement<C>) -> CherednikElement<C> {
        self.mul(a, b).sub(&self.mul(b, a))
    }

    /// Normal form of a product of letters.
    pub fn normal_form(&self, word: &[Letter<C>]) -> Result<CherednikElement<C>> {
        let mut acc = CherednikElement::one(self.m);
        for l in word {
            let f = match l {
                Letter::X(i) => self.x(*i)?,
                Letter::Y(i) => self.y(*i)?,
                Letter::S(i, j) => self.s(*i, *j)?,
                Letter::Perm(w) => {
                    if w.size() != self.m {
                        return Err(AlgebraError::SizeMismatch(format!("permutation {w} in rank {}", self.m)));
                    }
                    CherednikElement::group(w)
                }
                Letter::Scalar(c) => CherednikElement::scalar(self.m, c.clone()),
            };
            acc = self.mul(&acc, &f);
        }
        Ok(acc)
    }

    /// True iff `z` commutes with every generator `x_i, y_i, s_{i,i+1}`.
    pub fn is_central(&self, z: &CherednikElement<C>) -> bool {
        self.generators().iter().all(|g| self.commutator(z, g).is_zero())
    }
}
