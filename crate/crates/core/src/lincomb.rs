//! Sparse linear combinations keyed by an ordered basis.

use std::collections::BTreeMap;

use crate::scalar::Coeff;

/// Finite linear combination `Σ c_k · k`; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord, C> {
    terms: BTreeMap<K, C>,
}

impl<K: Ord, C> Default for LinComb<K, C> {
    fn default() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone, C: Coeff> LinComb<K, C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(k: K, c: C) -> Self {
        let mut out = Self::zero();
        out.add_term(k, c);
        out
    }

    pub fn basis(k: K) -> Self {
        Self::term(k, C::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &C)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn into_iter_terms(self) -> impl Iterator<Item = (K, C)> {
        self.terms.into_iter()
    }

    pub fn get(&self, k: &K) -> C {
        self.terms.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, k: K, c: C) {
        if c.is_zero() {
            return;
        }
        if let Some(v) = self.terms.get_mut(&k) {
            *v += &c;
            if v.is_zero() {
                self.terms.remove(&k);
            }
        } else {
            self.terms.insert(k, c);
        }
    }

    pub fn add_scaled(&mut self, other: &Self, s: &C) {
        if s.is_zero() {
            return;
        }
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c.cmul(s));
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &Self) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c.cneg());
        }
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.sub_assign(other);
        out
    }

    pub fn scaled(&self, s: &C) -> Self {
        let mut out = Self::zero();
        if s.is_zero() {
            return out;
        }
        for (k, c) in &self.terms {
            out.add_term(k.clone(), c.cmul(s));
        }
        out
    }

    pub fn neg(&self) -> Self {
        LinComb {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c.cneg())).collect(),
        }
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> LinComb<K, D> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_term(k.clone(), f(c));
        }
        out
    }

    pub fn try_map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> Option<D>) -> Option<LinComb<K, D>> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_term(k.clone(), f(c)?);
        }
        Some(out)
    }

    pub fn map_keys<L: Ord + Clone>(&self, f: impl Fn(&K) -> L) -> LinComb<L, C> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_term(f(k), c.clone());
        }
        out
    }

    pub fn filter(&self, f: impl Fn(&K) -> bool) -> Self {
        LinComb {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| f(k))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }
}

impl<K: Ord + Clone, C: Coeff> FromIterator<(K, C)> for LinComb<K, C> {
    fn from_iter<I: IntoIterator<Item = (K, C)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}
