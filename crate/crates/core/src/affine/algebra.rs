//! Truncated enveloping algebra of affine gl_n: PBW normal ordering modulo `Î_T`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use crate::error::{AlgebraError, Result};
use crate::lincomb::LinComb;
use crate::param::{ParamPoint, ParamScalar};
use crate::poly::render_sum;
use crate::scalar::{Coeff, Scalar};

use super::mode::{negative_height, pairing_table, render_affine_word, LevelForm, Mode, Word};

/// Letter order used for normal forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Order {
    /// Exponent ascending, then row-major label.
    Standard,
    /// Lowering labels, then diagonal, then raising; exponent order inside each block.
    Ahc,
}

impl Order {
    fn key(self, m: &Mode) -> (u8, i64, usize, usize) {
        match self {
            Order::Standard => (0, m.j, m.r, m.s),
            Order::Ahc => {
                let block = match m.r.cmp(&m.s) {
                    std::cmp::Ordering::Greater => 0,
                    std::cmp::Ordering::Equal => 1,
                    std::cmp::Ordering::Less => 2,
                };
                (block, m.j, m.r, m.s)
            }
        }
    }
}

/// Element of the enveloping algebra, stored as ordered words.
#[derive(Clone, PartialEq, Eq)]
pub struct AffineElement<C: Coeff> {
    pub n: usize,
    terms: LinComb<Word, C>,
}

impl<C: Coeff> AffineElement<C> {
    pub fn zero(n: usize) -> Self {
        AffineElement { n, terms: LinComb::zero() }
    }

    pub fn one(n: usize) -> Self {
        Self::scalar(n, C::one())
    }

    pub fn scalar(n: usize, c: C) -> Self {
        AffineElement { n, terms: LinComb::term(Vec::new(), c) }
    }

    pub fn word(n: usize, w: Word, c: C) -> Self {
        AffineElement { n, terms: LinComb::term(w, c) }
    }

    pub fn from_terms(n: usize, terms: LinComb<Word, C>) -> Self {
        AffineElement { n, terms }
    }

    /// `id[j] = Σ_i e_ii[j]`.
    pub fn id_mode(n: usize, j: i64) -> Self {
        let mut terms = LinComb::zero();
        for i in 0..n {
            terms.add_term(vec![Mode::new(i, i, j)], C::one());
        }
        AffineElement { n, terms }
    }

    pub fn terms(&self) -> &LinComb<Word, C> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        AffineElement { n: self.n, terms: self.terms.plus(&o.terms) }
    }

    pub fn sub(&self, o: &Self) -> Self {
        AffineElement { n: self.n, terms: self.terms.minus(&o.terms) }
    }

    pub fn scale(&self, c: &C) -> Self {
        AffineElement { n: self.n, terms: self.terms.scaled(c) }
    }

    pub fn neg(&self) -> Self {
        AffineElement { n: self.n, terms: self.terms.neg() }
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> AffineElement<D> {
        AffineElement { n: self.n, terms: self.terms.map_coeffs(f) }
    }

    /// Drop words whose largest letter has exponent `>= depth` (standard order).
    pub fn truncate(&self, depth: i64) -> Self {
        AffineElement {
            n: self.n,
            terms: self.terms.filter(|w| w.last().is_none_or(|m| m.j < depth)),
        }
    }

    /// Largest total `|j|` of negative letters over the words.
    pub fn negative_height(&self) -> i64 {
        self.terms.keys().map(|w| negative_height(w)).max().unwrap_or(0)
    }

    /// Largest word length.
    pub fn pbw_length(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }

    pub fn abs_height(&self) -> i64 {
        self.terms.keys().map(|w| super::mode::abs_height(w)).max().unwrap_or(0)
    }

    /// Torus weight of each word is zero.
    pub fn is_torus_invariant(&self) -> bool {
        self.terms.keys().all(|w| {
            let mut wt = vec![0i64; self.n];
            for m in w {
                wt[m.r] += 1;
                wt[m.s] -= 1;
            }
            wt.iter().all(|&v| v == 0)
        })
    }

    /// All letters have negative exponent.
    pub fn is_vacuum(&self) -> bool {
        self.terms.keys().all(|w| w.iter().all(|m| m.j < 0))
    }
}

impl AffineElement<Scalar> {
    pub fn to_param(&self) -> AffineElement<ParamScalar> {
        self.map_coeffs(|c| ParamScalar::constant(c.clone()))
    }
}

impl AffineElement<ParamScalar> {
    pub fn specialize(&self, pt: &ParamPoint) -> Self {
        self.map_coeffs(|c| c.specialize(pt))
    }

    pub fn to_scalar(&self) -> Option<AffineElement<Scalar>> {
        Some(AffineElement { n: self.n, terms: self.terms.try_map_coeffs(|c| c.as_constant())? })
    }
}

impl<C: Coeff> fmt::Display for AffineElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut items: Vec<_> = self.terms.iter().collect();
        items.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then_with(|| a.0.cmp(b.0)));
        let s = render_sum(items.into_iter().map(|(w, c)| (c.clone(), render_affine_word(w))));
        write!(f, "{s}")
    }
}

impl<C: Coeff> fmt::Debug for AffineElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

type MemoKey = (Order, Option<i64>, Mode, Word);
pub(crate) type FieldKey = (Word, i64, i64);

/// `U(ĝl_n)` for a fixed level form, with memoized letter-times-word products.
pub struct Affine<C: Coeff> {
    pub n: usize,
    pub form: LevelForm,
    pair: Vec<C>,
    memo: Mutex<HashMap<MemoKey, LinComb<Word, C>>>,
    pub(crate) field_memo: Mutex<HashMap<FieldKey, LinComb<Word, C>>>,
}

impl<C: Coeff> Affine<C> {
    pub fn new(n: usize, form: LevelForm) -> Result<Self> {
        if n == 0 {
            return Err(AlgebraError::Invalid("gl_0 is not supported".into()));
        }
        let pair = pairing_table(n, &form)?;
        Ok(Affine {
            n,
            form,
            pair,
            memo: Mutex::new(HashMap::new()),
            field_memo: Mutex::new(HashMap::new()),
        })
    }

    fn pair(&self, a: &Mode, b: &Mode) -> &C {
        let n = self.n;
        &self.pair[((a.r * n + a.s) * n + b.r) * n + b.s]
    }

    /// `[a, b] = Σ letters + central scalar`.
    pub fn bracket(&self, a: &Mode, b: &Mode) -> (Vec<(Mode, C)>, C) {
        let j = a.j + b.j;
        let mut letters = Vec::new();
        if a.s == b.r {
            letters.push((Mode::new(a.r, b.s, j), C::one()));
        }
        if b.s == a.r {
            letters.push((Mode::new(b.r, a.s, j), C::one().cneg()));
        }
        if letters.len() == 2 && letters[0].0 == letters[1].0 {
            letters.clear();
        }
        let central = if j == 0 && a.j != 0 {
            self.pair(a, b).scale(&Scalar::from_int(a.j))
        } else {
            C::zero()
        };
        (letters, central)
    }

    /// `[a, b]` as an element.
    pub fn mode_commutator(&self, a: &Mode, b: &Mode) -> AffineElement<C> {
        let (letters, central) = self.bracket(a, b);
        let mut terms = LinComb::zero();
        for (m, c) in letters {
            terms.add_term(vec![m], c);
        }
        terms.add_term(Vec::new(), central);
        AffineElement::from_terms(self.n, terms)
    }

    fn killed(letter: &Mode, trunc: Option<i64>) -> bool {
        trunc.is_some_and(|t| letter.j >= t)
    }

    /// `a · w` for a normal word `w`, in normal form modulo `Î_trunc`.
    pub fn mul_letter(&self, a: &Mode, w: &[Mode], order: Order, trunc: Option<i64>) -> LinComb<Word, C> {
        if w.is_empty() {
            if order == Order::Standard && Self::killed(a, trunc) {
                return LinComb::zero();
            }
            return LinComb::basis(vec![*a]);
        }
        let w0 = &w[0];
        if order.key(a) <= order.key(w0) {
            let mut nw = Vec::with_capacity(w.len() + 1);
            nw.push(*a);
            nw.extend_from_slice(w);
            return LinComb::basis(nw);
        }
        let key = (order, trunc, *a, w.to_vec());
        if let Some(v) = self.memo.lock().unwrap().get(&key) {
            return v.clone();
        }
        let rest = &w[1..];
        let mut out = LinComb::zero();
        for (u, c) in self.mul_letter(a, rest, order, trunc).iter() {
            out.add_scaled(&self.mul_letter(w0, u, order, trunc), c);
        }
        let (letters, central) = self.bracket(a, w0);
        for (b, cb) in letters {
            out.add_scaled(&self.mul_letter(&b, rest, order, trunc), &cb);
        }
        if !central.is_zero() {
            out.add_term(rest.to_vec(), central);
        }
        self.memo.lock().unwrap().insert(key, out.clone());
        out
    }

    /// `u · v` for a word `u` and a combination `v` of normal words.
    pub fn mul_word(&self, u: &[Mode], v: &LinComb<Word, C>, order: Order, trunc: Option<i64>) -> LinComb<Word, C> {
        let mut cur = v.clone();
        for a in u.iter().rev() {
            let mut next = LinComb::zero();
            for (w, c) in cur.iter() {
                next.add_scaled(&self.mul_letter(a, w, order, trunc), c);
            }
            cur = next;
        }
        cur
    }

    /// Normal form of an arbitrary product of letters modulo `Î_trunc`.
    pub fn normal_order_mod(&self, word: &[Mode], trunc: Option<i64>) -> AffineElement<C> {
        let one = LinComb::basis(Vec::new());
        AffineElement::from_terms(self.n, self.mul_word(word, &one, Order::Standard, trunc))
    }

    /// Re-express in another letter order (no truncation).
    pub fn reorder(&self, a: &AffineElement<C>, order: Order) -> LinComb<Word, C> {
        let one = LinComb::basis(Vec::new());
        let mut out = LinComb::zero();
        for (w, c) in a.terms().iter() {
            out.add_scaled(&self.mul_word(w, &one, order, None), c);
        }
        out
    }

    /// `a · b` modulo `Î_trunc`. Exact when `a` is valid modulo `Î_{trunc + N}` with
    /// `N` the negative height of `b`.
    pub fn mul(&self, a: &AffineElement<C>, b: &AffineElement<C>, trunc: Option<i64>) -> AffineElement<C> {
        let bt = match trunc {
            Some(t) => b.truncate(t),
            None => b.clone(),
        };
        let mut out = LinComb::zero();
        for (u, c) in a.terms().iter() {
            out.add_scaled(&self.mul_word(u, bt.terms(), Order::Standard, trunc), c);
        }
        AffineElement::from_terms(self.n, out)
    }

    pub fn commutator(&self, a: &AffineElement<C>, b: &AffineElement<C>, trunc: Option<i64>) -> AffineElement<C> {
        self.mul(a, b, trunc).sub(&self.mul(b, a, trunc))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn crit(n: usize) -> Affine<Scalar> {
        Affine::new(n, LevelForm::Critical).unwrap()
    }

    #[test]
    fn commutator_examples() {
        let a = crit(2);
        let e = a.mode_commutator(&Mode::new(0, 1, -1), &Mode::new(1, 0, -1));
        assert_eq!(e.to_string(), "E(1,1)[-2] - E(2,2)[-2]");
        let e = a.mode_commutator(&Mode::new(0, 0, 1), &Mode::new(0, 0, -1));
        assert_eq!(e.to_string(), "-1");
        for j in -2..=2 {
            for k in -2..=2 {
                for x in 0..4 {
                    let x = Mode::new(x / 2, x % 2, k);
                    let mut total = AffineElement::zero(2);
                    for i in 0..2 {
                        total = total.add(&a.mode_commutator(&Mode::new(i, i, j), &x));
                    }
                    assert!(total.is_zero());
                }
            }
        }
    }

    #[test]
    fn normal_order_examples() {
        let a = crit(2);
        let e = a.normal_order_mod(&[Mode::new(0, 0, 1), Mode::new(0, 0, -1)], Some(2));
        assert_eq!(e.to_string(), "E(1,1)[-1]*E(1,1)[1] - 1");
        let e = a.normal_order_mod(&[Mode::new(0, 0, -1), Mode::new(0, 0, 2)], Some(2));
        assert!(e.is_zero());
        let e = a.normal_order_mod(&[Mode::new(0, 1, 0), Mode::new(1, 0, 0)], Some(1));
        assert_eq!(e.to_string(), "E(1,2)[0]*E(2,1)[0]");
        let e = a.normal_order_mod(&[Mode::new(1, 0, 0), Mode::new(0, 1, 0)], Some(1));
        assert_eq!(e.to_string(), "E(1,2)[0]*E(2,1)[0] - E(1,1)[0] + E(2,2)[0]");
        let e = a.normal_order_mod(&[Mode::new(0, 1, -1), Mode::new(1, 0, -1)], None);
        assert_eq!(e.to_string(), "E(1,2)[-1]*E(2,1)[-1]");
    }
}
