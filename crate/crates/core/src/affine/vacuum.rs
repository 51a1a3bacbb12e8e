//! Segal–Sugawara vectors in the vacuum module and the coefficients of their fields.

use std::fmt;
use std::str::FromStr;

use num::Zero;

use crate::error::{AlgebraError, Result};
use crate::lincomb::LinComb;
use crate::scalar::{binomial, rising_binomial, Coeff, Scalar};

use super::algebra::{Affine, AffineElement, Order};
use super::mode::{LevelForm, Mode, Word};

/// Coefficients of `Tr(E_τ^k)` by power of `τ` (index `q` holds the `τ^q` coefficient).
pub fn trace_power_coefficients(k: usize, n: usize) -> Result<Vec<AffineElement<Scalar>>> {
    if k == 0 || n == 0 {
        return Err(AlgebraError::Invalid(format!("trace power k={k}, n={n}")));
    }
    let alg = Affine::<Scalar>::new(n, LevelForm::Critical)?;
    let mut total: LinComb<(Word, u32), Scalar> = LinComb::zero();
    let mut idx = vec![0usize; k];
    loop {
        let mut state: LinComb<(Word, u32), Scalar> = LinComb::basis((Vec::new(), 0));
        for p in 0..k {
            let (a, b) = (idx[p], idx[(p + 1) % k]);
            let mut next = LinComb::zero();
            for ((w, q), c) in state.iter() {
                if a == b {
                    next.add_term((w.clone(), q + 1), c.clone());
                }
                // τ^q · e_ab[-1] = Σ_r C(q,r) r! e_ab[-1-r] τ^{q-r}
                for r in 0..=*q {
                    let coeff = &binomial(*q as u64, r as u64) * &crate::scalar::factorial(r as u64);
                    let letter = Mode::new(a, b, -1 - r as i64);
                    let prod = alg.mul_word(w, &LinComb::basis(vec![letter]), Order::Standard, None);
                    for (u, cu) in prod.iter() {
                        next.add_term((u.clone(), q - r), &(c * &coeff) * cu);
                    }
                }
            }
            state = next;
        }
        total.add_assign(&state);
        let mut p = 0;
        loop {
            if p == k {
                let mut out = vec![AffineElement::zero(n); k + 1];
                for ((w, q), c) in total.iter() {
                    out[*q as usize] = out[*q as usize].add(&AffineElement::word(n, w.clone(), c.clone()));
                }
                return Ok(out);
            }
            idx[p] += 1;
            if idx[p] < n {
                break;
            }
            idx[p] = 0;
            p += 1;
        }
    }
}

/// `T_k`: the `τ`-free coefficient of `Tr(E_τ^k)`; a Segal–Sugawara vector for `k <= n`.
pub fn ss_vector(k: usize, n: usize) -> Result<AffineElement<Scalar>> {
    if k == 0 {
        return Err(AlgebraError::Invalid("T_k needs k >= 1".into()));
    }
    Ok(trace_power_coefficients(k, n)?.swap_remove(0))
}

/// `P_k = Σ_i (e_ii[-1])^k`.
pub fn power_vector(k: usize, n: usize) -> AffineElement<Scalar> {
    let mut out = AffineElement::zero(n);
    for i in 0..n {
        out = out.add(&AffineElement::word(n, vec![Mode::new(i, i, -1); k], Scalar::from_int(1)));
    }
    out
}

/// `L = ½ Σ_{k,l} e_kl[-1] e_lk[-1]` in normal form.
pub fn quadratic_vector<C: Coeff>(alg: &Affine<C>) -> AffineElement<C> {
    let n = alg.n;
    let half = C::from_scalar(Scalar::new(1, 2));
    let mut out = AffineElement::zero(n);
    for k in 0..n {
        for l in 0..n {
            let w = [Mode::new(k, l, -1), Mode::new(l, k, -1)];
            out = out.add(&alg.normal_order_mod(&w, None).scale(&half));
        }
    }
    out
}

impl<C: Coeff> Affine<C> {
    /// Coefficient `A_l` of `z^l` in the field of `A`, modulo `Î_depth`.
    pub fn field_coefficient(&self, a: &AffineElement<C>, l: i64, depth: i64) -> Result<AffineElement<C>> {
        if !a.is_vacuum() {
            return Err(AlgebraError::Invalid("field coefficients need a vacuum vector".into()));
        }
        let mut out = LinComb::zero();
        for (w, c) in a.terms().iter() {
            out.add_scaled(&self.word_field(w, l, depth), c);
        }
        Ok(AffineElement::from_terms(self.n, out))
    }

    fn word_field(&self, w: &[Mode], l: i64, depth: i64) -> LinComb<Word, C> {
        if w.is_empty() {
            return if l == 0 { LinComb::basis(Vec::new()) } else { LinComb::zero() };
        }
        let a = w[0];
        let j1 = -a.j;
        if w.len() == 1 {
            let mode = -l - j1;
            let coeff = rising_binomial(l, j1);
            if mode >= depth || coeff.is_zero() {
                return LinComb::zero();
            }
            return LinComb::term(vec![Mode::new(a.r, a.s, mode)], C::from_scalar(coeff));
        }
        let key = (w.to_vec(), l, depth);
        if let Some(v) = self.field_memo.lock().unwrap().get(&key) {
            return v.clone();
        }
        let b = &w[1..];
        let kb: i64 = b.iter().map(|m| -m.j).sum();
        let ab = b.len() as i64;
        let mut out = LinComb::zero();
        // Σ_{r>=0} A_r B_{l-r}
        let rmax = l + kb + ab * (depth - 1).max(0);
        for r in 0..=rmax.max(-1) {
            let coeff = rising_binomial(r, j1);
            if coeff.is_zero() {
                continue;
            }
            let bs = self.word_field(b, l - r, depth);
            if bs.is_zero() {
                continue;
            }
            let letter = Mode::new(a.r, a.s, -r - j1);
            let mut part = LinComb::zero();
            for (u, cu) in bs.iter() {
                part.add_scaled(&self.mul_letter(&letter, u, Order::Standard, Some(depth)), cu);
            }
            out.add_scaled(&part, &C::from_scalar(coeff));
        }
        // Σ_{s<0} B_{l-s} A_s
        let mut s = -1;
        while -s - j1 < depth {
            let p = -s - j1;
            let coeff = rising_binomial(s, j1);
            if !coeff.is_zero() {
                let inner = depth + (-p).max(0);
                let br = self.word_field(b, l - s, inner);
                let tail = LinComb::basis(vec![Mode::new(a.r, a.s, p)]);
                let mut part = LinComb::zero();
                for (u, cu) in br.iter() {
                    part.add_scaled(&self.mul_word(u, &tail, Order::Standard, Some(depth)), cu);
                }
                out.add_scaled(&part, &C::from_scalar(coeff));
            }
            s -= 1;
        }
        self.field_memo.lock().unwrap().insert(key, out.clone());
        out
    }

    /// `^κL_r = ½ Σ_{k,l} (Σ_{i<=-1} e_kl[i] e_lk[r-i] + Σ_{i>=0} e_lk[r-i] e_kl[i])` modulo `Î_depth`.
    pub fn quadratic_l_op(&self, r: i64, depth: i64) -> AffineElement<C> {
        let n = self.n;
        let mut out = LinComb::zero();
        for k in 0..n {
            for l in 0..n {
                for i in (r - depth + 1)..=-1 {
                    let w = [Mode::new(k, l, i), Mode::new(l, k, r - i)];
                    out.add_assign(self.normal_order_mod(&w, Some(depth)).terms());
                }
                for i in 0..depth {
                    let w = [Mode::new(l, k, r - i), Mode::new(k, l, i)];
                    out.add_assign(self.normal_order_mod(&w, Some(depth)).terms());
                }
            }
        }
        AffineElement::from_terms(n, out).scale(&C::from_scalar(Scalar::new(1, 2)))
    }

    /// Materialize an operator modulo `Î_depth`.
    pub fn materialize(&self, op: &OpSpec, depth: i64) -> Result<AffineElement<C>> {
        match *op {
            OpSpec::T(k, l) => {
                let v = ss_vector(k, self.n)?.map_coeffs(|c| C::from_scalar(c.clone()));
                self.field_coefficient(&v, l, depth)
            }
            OpSpec::Id(r) => Ok(AffineElement::id_mode(self.n, r).truncate(depth)),
            OpSpec::L(r) => Ok(self.quadratic_l_op(r, depth)),
        }
    }
}

/// Named central operators: `T_{k,l}`, `id[r]`, `L_r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OpSpec {
    T(usize, i64),
    Id(i64),
    L(i64),
}

impl fmt::Display for OpSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OpSpec::T(k, l) => write!(f, "T({k},{l})"),
            OpSpec::Id(r) => write!(f, "id[{r}]"),
            OpSpec::L(r) => write!(f, "L[{r}]"),
        }
    }
}

impl FromStr for OpSpec {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || AlgebraError::Parse(format!("not an operator: {s:?}"));
        let int = |v: &str| v.parse::<i64>().map_err(|_| bad());
        if let Some(body) = t.strip_prefix("T(").and_then(|b| b.strip_suffix(')')) {
            let (k, l) = body.split_once(',').ok_or_else(bad)?;
            let k = k.parse::<usize>().map_err(|_| bad())?;
            return Ok(OpSpec::T(k, int(l)?));
        }
        if let Some(body) = t.strip_prefix("id[").and_then(|b| b.strip_suffix(']')) {
            return Ok(OpSpec::Id(int(body)?));
        }
        if let Some(body) = t.strip_prefix("L[").and_then(|b| b.strip_suffix(']')) {
            return Ok(OpSpec::L(int(body)?));
        }
        Err(bad())
    }
}
