//! The cyclic module `𝕙_c = U(ĝ) ⊗_{U(𝔭)} ℂ` with `e_ii[0] ↦ 1` and `𝔦` acting by zero.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Mutex;

use num::Zero;

use crate::affine::{render_affine_word, Affine, AffineElement, LevelForm, Mode, Word};
use crate::error::Result;
use crate::lincomb::LinComb;
use crate::poly::render_sum;
use crate::scalar::Scalar;

/// Letter class in the normal order of `𝕙_c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum LetterClass {
    Negative,
    LowerZero,
    UpperZero,
    DiagonalOne,
    /// Acts on the cyclic vector by a scalar: `e_ii[0] ↦ 1`, everything else `↦ 0`.
    Parabolic,
}

pub fn letter_class(m: &Mode) -> LetterClass {
    match m.j {
        j if j < 0 => LetterClass::Negative,
        0 if m.r > m.s => LetterClass::LowerZero,
        0 if m.r < m.s => LetterClass::UpperZero,
        1 if m.r == m.s => LetterClass::DiagonalOne,
        _ => LetterClass::Parabolic,
    }
}

/// True for letters removable by the coinvariant relation (`j <= 0`, not parabolic).
pub fn is_peelable(m: &Mode) -> bool {
    matches!(
        letter_class(m),
        LetterClass::Negative | LetterClass::LowerZero | LetterClass::UpperZero
    )
}

/// Total order on the peelable letters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Negative modes, lower zero modes, upper zero modes.
    Standard,
    /// Pseudo-random order of the peelable letters determined by a seed.
    Shuffled(u64),
}

impl Strategy {
    fn key(self, m: &Mode) -> (u8, u64, i64, usize, usize) {
        let class = letter_class(m);
        match (self, class) {
            (_, LetterClass::DiagonalOne) => (3, 0, m.j, m.r, m.s),
            (_, LetterClass::Parabolic) => (4, 0, m.j, m.r, m.s),
            (Strategy::Standard, c) => (c as u8, 0, m.j, m.r, m.s),
            (Strategy::Shuffled(seed), _) => {
                let mut h = DefaultHasher::new();
                (seed, m).hash(&mut h);
                (0, h.finish(), m.j, m.r, m.s)
            }
        }
    }
}

/// Element of `𝕙_c` as a combination of normal words applied to `1_H`.
#[derive(Clone, PartialEq, Eq)]
pub struct HElement {
    pub n: usize,
    terms: LinComb<Word, Scalar>,
}

impl HElement {
    pub fn zero(n: usize) -> Self {
        HElement { n, terms: LinComb::zero() }
    }

    pub fn from_terms(n: usize, terms: LinComb<Word, Scalar>) -> Self {
        HElement { n, terms }
    }

    pub fn terms(&self) -> &LinComb<Word, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        HElement { n: self.n, terms: self.terms.plus(&o.terms) }
    }

    pub fn sub(&self, o: &Self) -> Self {
        HElement { n: self.n, terms: self.terms.minus(&o.terms) }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        HElement { n: self.n, terms: self.terms.scaled(c) }
    }

    /// Largest absolute height of a normal word; `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().map(|w| crate::affine::abs_height(w)).max()
    }
}

impl fmt::Display for HElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut items: Vec<_> = self.terms.iter().collect();
        items.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then_with(|| a.0.cmp(b.0)));
        let s = render_sum(items.into_iter().map(|(w, c)| {
            let body = render_affine_word(w);
            let body = if body.is_empty() { "1H".to_string() } else { format!("{body}*1H") };
            (c.clone(), body)
        }));
        write!(f, "{s}")
    }
}

impl fmt::Debug for HElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Normal-form engine for `𝕙_c`.
pub struct HModule {
    pub n: usize,
    pub strategy: Strategy,
    alg: Affine<Scalar>,
    memo: Mutex<HashMap<(Mode, Word), LinComb<Word, Scalar>>>,
}

impl HModule {
    pub fn new(n: usize) -> Result<Self> {
        Self::with_strategy(n, Strategy::Standard)
    }

    pub fn with_strategy(n: usize, strategy: Strategy) -> Result<Self> {
        Ok(HModule {
            n,
            strategy,
            alg: Affine::new(n, LevelForm::Critical)?,
            memo: Mutex::new(HashMap::new()),
        })
    }

    pub fn affine(&self) -> &Affine<Scalar> {
        &self.alg
    }

    /// `a · (w · 1_H)` in normal form.
    pub fn act(&self, a: &Mode, w: &[Mode]) -> LinComb<Word, Scalar> {
        let parabolic = letter_class(a) == LetterClass::Parabolic;
        if w.is_empty() {
            if !parabolic {
                return LinComb::basis(vec![*a]);
            }
            if a.j == 0 && a.r == a.s {
                return LinComb::basis(Vec::new());
            }
            return LinComb::zero();
        }
        let w0 = &w[0];
        if !parabolic && self.strategy.key(a) <= self.strategy.key(w0) {
            let mut nw = Vec::with_capacity(w.len() + 1);
            nw.push(*a);
            nw.extend_from_slice(w);
            return LinComb::basis(nw);
        }
        let key = (*a, w.to_vec());
        if let Some(v) = self.memo.lock().unwrap().get(&key) {
            return v.clone();
        }
        let rest = &w[1..];
        let mut out = LinComb::zero();
        for (u, c) in self.act(a, rest).iter() {
            out.add_scaled(&self.act(w0, u), c);
        }
        let (letters, central) = self.alg.bracket(a, w0);
        for (b, cb) in letters {
            out.add_scaled(&self.act(&b, rest), &cb);
        }
        if !central.is_zero() {
            out.add_term(rest.to_vec(), central);
        }
        self.memo.lock().unwrap().insert(key, out.clone());
        out
    }

    /// `u · v` for a word `u` (any order) and an element `v`.
    pub fn act_word(&self, u: &[Mode], v: &HElement) -> HElement {
        let mut cur = v.terms.clone();
        for a in u.iter().rev() {
            let mut next = LinComb::zero();
            for (w, c) in cur.iter() {
                next.add_scaled(&self.act(a, w), c);
            }
            cur = next;
        }
        HElement::from_terms(self.n, cur)
    }

    pub fn unit(&self) -> HElement {
        HElement::from_terms(self.n, LinComb::basis(Vec::new()))
    }

    /// Normal form of `word · 1_H`.
    pub fn h_normal_form(&self, word: &[Mode]) -> HElement {
        self.act_word(word, &self.unit())
    }

    /// `A · 1_H` for an element of the enveloping algebra.
    pub fn apply(&self, a: &AffineElement<Scalar>) -> HElement {
        let mut out = HElement::zero(self.n);
        for (w, c) in a.terms().iter() {
            out = out.add(&self.h_normal_form(w).scale(c));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let h = HModule::new(2).unwrap();
        assert_eq!(h.h_normal_form(&[Mode::new(0, 0, 0)]), h.unit());
        assert!(h.h_normal_form(&[Mode::new(0, 1, 1)]).is_zero());
        let e = h.h_normal_form(&[Mode::new(0, 0, 1), Mode::new(0, 0, -1)]);
        assert_eq!(e.to_string(), "E(1,1)[-1]*E(1,1)[1]*1H - 1H");
        assert!(h.h_normal_form(&[Mode::new(1, 0, 2)]).is_zero());
    }

    #[test]
    fn zero_modes_act_by_weight() {
        let h = HModule::new(2).unwrap();
        let e = h.h_normal_form(&[Mode::new(0, 0, 0), Mode::new(0, 1, -1)]);
        assert_eq!(e.to_string(), "2*E(1,2)[-1]*1H");
    }
}
