//! Polynomials in the formal parameters `t`, `c` and `kappa`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num::{One, Zero};

use crate::scalar::{Coeff, Scalar};

/// Formal parameter index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Param {
    T = 0,
    C = 1,
    Kappa = 2,
}

impl Param {
    pub const ALL: [Param; 3] = [Param::T, Param::C, Param::Kappa];

    pub fn symbol(self) -> &'static str {
        match self {
            Param::T => "t",
            Param::C => "c",
            Param::Kappa => "kappa",
        }
    }
}

type PExp = [u32; 3];

/// Sparse polynomial in `t, c, kappa` with rational coefficients.
///
/// Monomials are ordered by total degree, then lexicographically, so the
/// printed form is deterministic.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ParamScalar {
    terms: BTreeMap<PExp, Scalar>,
}

/// Values substituted for the parameters; `None` keeps a parameter symbolic.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ParamPoint {
    pub t: Option<Scalar>,
    pub c: Option<Scalar>,
    pub kappa: Option<Scalar>,
}

impl ParamPoint {
    pub fn all(t: Scalar, c: Scalar, kappa: Scalar) -> Self {
        ParamPoint {
            t: Some(t),
            c: Some(c),
            kappa: Some(kappa),
        }
    }

    fn get(&self, i: usize) -> Option<&Scalar> {
        match i {
            0 => self.t.as_ref(),
            1 => self.c.as_ref(),
            _ => self.kappa.as_ref(),
        }
    }
}

impl ParamScalar {
    pub fn constant(s: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !s.is_zero() {
            terms.insert([0, 0, 0], s);
        }
        ParamScalar { terms }
    }

    pub fn var(p: Param) -> Self {
        let mut e = [0; 3];
        e[p as usize] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(e, Scalar::one());
        ParamScalar { terms }
    }

    pub fn t() -> Self {
        Self::var(Param::T)
    }

    pub fn c() -> Self {
        Self::var(Param::C)
    }

    pub fn kappa() -> Self {
        Self::var(Param::Kappa)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; 3], &Scalar)> {
        self.terms.iter()
    }

    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&[0, 0, 0]).cloned(),
            _ => None,
        }
    }

    pub fn degree_in(&self, p: Param) -> u32 {
        self.terms.keys().map(|e| e[p as usize]).max().unwrap_or(0)
    }

    fn add_term(&mut self, e: PExp, s: Scalar) {
        if s.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v += &s;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, s);
            }
        }
    }

    /// Substitute the given values; unset parameters stay symbolic.
    pub fn specialize(&self, pt: &ParamPoint) -> ParamScalar {
        let mut out = ParamScalar::zero();
        for (e, s) in &self.terms {
            let mut coeff = s.clone();
            let mut ne = *e;
            for i in 0..3 {
                if let Some(v) = pt.get(i) {
                    coeff = &coeff * &v.pow(e[i]);
                    ne[i] = 0;
                }
            }
            out.add_term(ne, coeff);
        }
        out
    }

    /// Evaluate at a full rational point.
    pub fn eval(&self, pt: &ParamPoint) -> Option<Scalar> {
        self.specialize(pt).as_constant()
    }

    /// Exact division by a parameter; `None` if some term is not divisible.
    pub fn div_by_var(&self, p: Param) -> Option<ParamScalar> {
        let mut out = ParamScalar::zero();
        for (e, s) in &self.terms {
            if e[p as usize] == 0 {
                return None;
            }
            let mut ne = *e;
            ne[p as usize] -= 1;
            out.add_term(ne, s.clone());
        }
        Some(out)
    }

    pub fn scale_by(&self, s: &Scalar) -> ParamScalar {
        let mut out = ParamScalar::zero();
        if s.is_zero() {
            return out;
        }
        for (e, v) in &self.terms {
            out.terms.insert(*e, v * s);
        }
        out
    }

    fn sorted_terms(&self) -> Vec<(&PExp, &Scalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            db.cmp(&da).then_with(|| b.0.cmp(a.0))
        });
        v
    }
}

fn monomial_string(e: &PExp) -> String {
    let mut parts = Vec::new();
    for p in Param::ALL {
        let k = e[p as usize];
        match k {
            0 => {}
            1 => parts.push(p.symbol().to_string()),
            _ => parts.push(format!("{}^{}", p.symbol(), k)),
        }
    }
    parts.join("*")
}

impl fmt::Display for ParamScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, s) in self.sorted_terms() {
            let neg = s.is_negative();
            let a = s.abs();
            let mono = monomial_string(e);
            let body = if mono.is_empty() {
                a.to_string()
            } else if a.is_one() {
                mono
            } else {
                format!("{a}*{mono}")
            };
            if first {
                if neg {
                    write!(f, "-{body}")?;
                } else {
                    write!(f, "{body}")?;
                }
                first = false;
            } else if neg {
                write!(f, " - {body}")?;
            } else {
                write!(f, " + {body}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ParamScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Zero for ParamScalar {
    fn zero() -> Self {
        ParamScalar::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for ParamScalar {
    fn one() -> Self {
        ParamScalar::constant(Scalar::one())
    }
}

impl<'a> Add<&'a ParamScalar> for &'a ParamScalar {
    type Output = ParamScalar;
    fn add(self, rhs: &'a ParamScalar) -> ParamScalar {
        let mut out = self.clone();
        for (e, s) in &rhs.terms {
            out.add_term(*e, s.clone());
        }
        out
    }
}

impl<'a> Sub<&'a ParamScalar> for &'a ParamScalar {
    type Output = ParamScalar;
    fn sub(self, rhs: &'a ParamScalar) -> ParamScalar {
        let mut out = self.clone();
        for (e, s) in &rhs.terms {
            out.add_term(*e, -s);
        }
        out
    }
}

impl<'a> Mul<&'a ParamScalar> for &'a ParamScalar {
    type Output = ParamScalar;
    fn mul(self, rhs: &'a ParamScalar) -> ParamScalar {
        let mut out = ParamScalar::zero();
        for (e1, s1) in &self.terms {
            for (e2, s2) in &rhs.terms {
                let e = [e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]];
                out.add_term(e, s1 * s2);
            }
        }
        out
    }
}

impl Neg for &ParamScalar {
    type Output = ParamScalar;
    fn neg(self) -> ParamScalar {
        ParamScalar {
            terms: self.terms.iter().map(|(e, s)| (*e, -s)).collect(),
        }
    }
}

impl Add for ParamScalar {
    type Output = ParamScalar;
    fn add(self, rhs: ParamScalar) -> ParamScalar {
        &self + &rhs
    }
}

impl Sub for ParamScalar {
    type Output = ParamScalar;
    fn sub(self, rhs: ParamScalar) -> ParamScalar {
        &self - &rhs
    }
}

impl Mul for ParamScalar {
    type Output = ParamScalar;
    fn mul(self, rhs: ParamScalar) -> ParamScalar {
        &self * &rhs
    }
}

impl Neg for ParamScalar {
    type Output = ParamScalar;
    fn neg(self) -> ParamScalar {
        -&self
    }
}

impl<'a> AddAssign<&'a ParamScalar> for ParamScalar {
    fn add_assign(&mut self, rhs: &'a ParamScalar) {
        for (e, s) in &rhs.terms {
            self.add_term(*e, s.clone());
        }
    }
}

impl From<Scalar> for ParamScalar {
    fn from(s: Scalar) -> Self {
        ParamScalar::constant(s)
    }
}

impl From<i64> for ParamScalar {
    fn from(v: i64) -> Self {
        ParamScalar::constant(Scalar::from_int(v))
    }
}

impl Coeff for ParamScalar {
    fn cadd(&self, o: &Self) -> Self {
        self + o
    }
    fn csub(&self, o: &Self) -> Self {
        self - o
    }
    fn cmul(&self, o: &Self) -> Self {
        self * o
    }
    fn cneg(&self) -> Self {
        -self
    }

    fn from_scalar(s: Scalar) -> Self {
        ParamScalar::constant(s)
    }

    fn try_from_param(p: &ParamScalar) -> Option<Self> {
        Some(p.clone())
    }

    fn to_param(&self) -> ParamScalar {
        self.clone()
    }

    fn scale(&self, s: &Scalar) -> Self {
        self.scale_by(s)
    }

    fn is_compound(&self) -> bool {
        self.terms.len() > 1
    }

    fn as_scalar(&self) -> Option<Scalar> {
        self.as_constant()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_order() {
        let t = ParamScalar::t();
        let c = ParamScalar::c();
        let p = &(&t * &c) + &(&t - &ParamScalar::from(3));
        assert_eq!(p.to_string(), "t*c + t - 3");
        assert_eq!((-&c).to_string(), "-c");
    }

    #[test]
    fn specialization_and_division() {
        let t = ParamScalar::t();
        let p = &(&t * &t) + &t.scale_by(&Scalar::from_int(2));
        let pt = ParamPoint {
            t: Some(Scalar::from_int(3)),
            ..Default::default()
        };
        assert_eq!(p.eval(&pt), Some(Scalar::from_int(15)));
        let q = p.div_by_var(Param::T).unwrap();
        assert_eq!(q.to_string(), "t + 2");
        assert!(q.div_by_var(Param::T).is_none());
    }
}
