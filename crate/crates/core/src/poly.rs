//! Commutative polynomials in `x_1..x_m, y_1..y_m`.

use std::fmt;

use num::Zero;

use crate::error::{AlgebraError, Result};
use crate::lincomb::LinComb;
use crate::param::{ParamPoint, ParamScalar};
use crate::scalar::{Coeff, Scalar};

/// Exponent record: `x` exponents followed by `y` exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mono(pub Vec<u32>);

impl Mono {
    pub fn one(m: usize) -> Self {
        Mono(vec![0; 2 * m])
    }

    pub fn m(&self) -> usize {
        self.0.len() / 2
    }

    pub fn x(&self) -> &[u32] {
        &self.0[..self.m()]
    }

    pub fn y(&self) -> &[u32] {
        &self.0[self.m()..]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, o: &Mono) -> Mono {
        Mono(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

/// Commutative polynomial with coefficients in `C`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CommPoly<C: Coeff> {
    m: usize,
    terms: LinComb<Mono, C>,
}

pub type ParamPoly = CommPoly<ParamScalar>;

impl<C: Coeff> CommPoly<C> {
    pub fn zero(m: usize) -> Self {
        CommPoly {
            m,
            terms: LinComb::zero(),
        }
    }

    pub fn constant(m: usize, c: C) -> Self {
        CommPoly {
            m,
            terms: LinComb::term(Mono::one(m), c),
        }
    }

    pub fn one(m: usize) -> Self {
        Self::constant(m, C::one())
    }

    pub fn from_terms(m: usize, terms: LinComb<Mono, C>) -> Self {
        CommPoly { m, terms }
    }

    pub fn monomial(m: usize, xe: &[u32], ye: &[u32], c: C) -> Self {
        let mut e = Vec::with_capacity(2 * m);
        e.extend_from_slice(xe);
        e.extend_from_slice(ye);
        assert_eq!(e.len(), 2 * m);
        CommPoly {
            m,
            terms: LinComb::term(Mono(e), c),
        }
    }

    /// `x_i`, 1-based.
    pub fn x(m: usize, i: usize) -> Result<Self> {
        check_index(i, m)?;
        let mut e = Mono::one(m);
        e.0[i - 1] = 1;
        Ok(CommPoly {
            m,
            terms: LinComb::basis(e),
        })
    }

    /// `y_i`, 1-based.
    pub fn y(m: usize, i: usize) -> Result<Self> {
        check_index(i, m)?;
        let mut e = Mono::one(m);
        e.0[m + i - 1] = 1;
        Ok(CommPoly {
            m,
            terms: LinComb::basis(e),
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn terms(&self) -> &LinComb<Mono, C> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn coeff(&self, e: &Mono) -> C {
        self.terms.get(e)
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.degree()).max()
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.same_vars(o)?;
        Ok(CommPoly {
            m: self.m,
            terms: self.terms.plus(&o.terms),
        })
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.same_vars(o)?;
        Ok(CommPoly {
            m: self.m,
            terms: self.terms.minus(&o.terms),
        })
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.same_vars(o)?;
        let mut out = LinComb::zero();
        for (e1, c1) in self.terms.iter() {
            for (e2, c2) in o.terms.iter() {
                out.add_term(e1.mul(e2), c1.cmul(c2));
            }
        }
        Ok(CommPoly { m: self.m, terms: out })
    }

    pub fn scale(&self, c: &C) -> Self {
        CommPoly {
            m: self.m,
            terms: self.terms.scaled(c),
        }
    }

    pub fn neg(&self) -> Self {
        CommPoly {
            m: self.m,
            terms: self.terms.neg(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.m);
        for _ in 0..e {
            acc = acc.mul(self).expect("same variables");
        }
        acc
    }

    /// Apply a permutation of the variable indices: `x_i -> x_{w(i)}`, `y_i -> y_{w(i)}`.
    /// `w` is 0-based one-line notation.
    pub fn permute(&self, w: &[usize]) -> Self {
        let m = self.m;
        let terms = self.terms.map_keys(|e| {
            let mut ne = vec![0; 2 * m];
            for i in 0..m {
                ne[w[i]] = e.0[i];
                ne[m + w[i]] = e.0[m + i];
            }
            Mono(ne)
        });
        CommPoly { m, terms }
    }

    /// Partial derivative in `x_i` (0-based).
    pub fn dx(&self, i: usize) -> Self {
        let mut out = LinComb::zero();
        for (e, c) in self.terms.iter() {
            let k = e.0[i];
            if k == 0 {
                continue;
            }
            let mut ne = e.clone();
            ne.0[i] -= 1;
            out.add_term(ne, c.scale(&Scalar::from_int(k as i64)));
        }
        CommPoly { m: self.m, terms: out }
    }

    /// Divided difference `(f - s_ij f)/(x_i - x_j)` for an `x`-only polynomial (0-based).
    pub fn divided_difference(&self, i: usize, j: usize) -> Self {
        // x_i^a x_j^b - x_j^a x_i^b = (x_i x_j)^min * (x_i^d - x_j^d) * sign
        let mut out = LinComb::zero();
        for (e, c) in self.terms.iter() {
            let a = e.0[i];
            let b = e.0[j];
            if a == b {
                continue;
            }
            let (lo, hi, sign) = if a > b { (b, a, 1i64) } else { (a, b, -1) };
            let d = hi - lo;
            // (x_i^d - x_j^d)/(x_i - x_j) = sum_{p+q=d-1} x_i^p x_j^q
            for p in 0..d {
                let q = d - 1 - p;
                let mut ne = e.clone();
                ne.0[i] = lo + p;
                ne.0[j] = lo + q;
                out.add_term(ne, c.scale(&Scalar::from_int(sign)));
            }
        }
        CommPoly { m: self.m, terms: out }
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> CommPoly<D> {
        CommPoly {
            m: self.m,
            terms: self.terms.map_coeffs(f),
        }
    }

    fn same_vars(&self, o: &Self) -> Result<()> {
        if self.m != o.m {
            return Err(AlgebraError::SizeMismatch(format!(
                "polynomials in {} and {} variable pairs",
                self.m, o.m
            )));
        }
        Ok(())
    }
}

impl CommPoly<ParamScalar> {
    pub fn specialize(&self, pt: &ParamPoint) -> Self {
        self.map_coeffs(|c| c.specialize(pt))
    }
}

fn check_index(i: usize, m: usize) -> Result<()> {
    if i == 0 || i > m {
        return Err(AlgebraError::IndexOutOfRange { index: i, max: m });
    }
    Ok(())
}

/// `p_{a,b} = Σ_i x_i^a y_i^b`.
pub fn power_sum<C: Coeff>(a: u32, b: u32, m: usize) -> CommPoly<C> {
    let mut out = LinComb::zero();
    for i in 0..m {
        let mut e = Mono::one(m);
        e.0[i] += a;
        e.0[m + i] += b;
        out.add_term(e, C::one());
    }
    CommPoly::from_terms(m, out)
}

/// Complete homogeneous `c_r(x_i, x_j)` (1-based indices); `c_{-1} = 0`.
pub fn complete_homogeneous<C: Coeff>(r: i64, i: usize, j: usize, m: usize) -> Result<CommPoly<C>> {
    if r < -1 {
        return Err(AlgebraError::Invalid(format!("c_r needs r >= -1, got {r}")));
    }
    check_index(i, m)?;
    check_index(j, m)?;
    let mut out = LinComb::zero();
    if r >= 0 {
        for a in 0..=r as u32 {
            let mut e = Mono::one(m);
            e.0[i - 1] += a;
            e.0[j - 1] += r as u32 - a;
            out.add_term(e, C::one());
        }
    }
    Ok(CommPoly::from_terms(m, out))
}

fn var_name(m: usize, idx: usize) -> String {
    if idx < m {
        format!("x{}", idx + 1)
    } else {
        format!("y{}", idx - m + 1)
    }
}

/// Render a monomial as `x1^2*y1`; empty for the unit.
pub fn mono_string(e: &Mono) -> String {
    let m = e.m();
    let mut parts = Vec::new();
    for (idx, &k) in e.0.iter().enumerate() {
        match k {
            0 => {}
            1 => parts.push(var_name(m, idx)),
            _ => parts.push(format!("{}^{}", var_name(m, idx), k)),
        }
    }
    parts.join("*")
}

/// Join `(coefficient, basis string)` pairs into `a + b - c` form.
pub fn render_sum<C: Coeff>(items: impl IntoIterator<Item = (C, String)>) -> String {
    let items: Vec<(C, String)> = items.into_iter().collect();
    let single = items.len() == 1;
    let mut out = String::new();
    for (c, basis) in items {
        let (neg, mag) = split_sign(&c);
        let body = if basis.is_empty() {
            if mag.is_compound() && !single {
                format!("({mag})")
            } else {
                mag.to_string()
            }
        } else if mag.is_one() {
            basis
        } else if mag.is_compound() {
            format!("({mag})*{basis}")
        } else {
            format!("{mag}*{basis}")
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
            out.push_str(&body);
        } else {
            out.push_str(if neg { " - " } else { " + " });
            out.push_str(&body);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn split_sign<C: Coeff>(c: &C) -> (bool, C) {
    if c.is_compound() {
        return (false, c.clone());
    }
    let printed = c.to_string();
    if printed.starts_with('-') {
        (true, c.cneg())
    } else {
        (false, c.clone())
    }
}

impl<C: Coeff> fmt::Display for CommPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut items: Vec<_> = self.terms.iter().collect();
        items.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then_with(|| b.0.cmp(a.0)));
        let s = render_sum(items.into_iter().map(|(e, c)| (c.clone(), mono_string(e))));
        write!(f, "{s}")
    }
}

impl<C: Coeff> fmt::Debug for CommPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<C: Coeff> Zero for CommPoly<C> {
    fn zero() -> Self {
        CommPoly::zero(0)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }
}

impl<C: Coeff> std::ops::Add for CommPoly<C> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        CommPoly::add(&self, &rhs).expect("same variables")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = CommPoly<Scalar>;

    #[test]
    fn difference_of_squares() {
        let x1 = P::x(2, 1).unwrap();
        let x2 = P::x(2, 2).unwrap();
        let p = x1.add(&x2).unwrap().mul(&x1.sub(&x2).unwrap()).unwrap();
        assert_eq!(p.to_string(), "x1^2 - x2^2");
        assert_eq!(p.add(&P::zero(2)).unwrap(), p);
    }

    #[test]
    fn parameter_bilinearity() {
        let x1 = ParamPoly::x(1, 1).unwrap().scale(&ParamScalar::t());
        let y1 = ParamPoly::y(1, 1).unwrap().scale(&ParamScalar::c());
        assert_eq!(x1.mul(&y1).unwrap().to_string(), "t*c*x1*y1");
    }

    #[test]
    fn mismatch_is_an_error() {
        assert!(P::x(2, 1).unwrap().add(&P::x(3, 1).unwrap()).is_err());
        assert!(P::x(2, 3).is_err());
    }

    #[test]
    fn power_sums() {
        assert_eq!(power_sum::<Scalar>(0, 0, 3).to_string(), "3");
        assert_eq!(power_sum::<Scalar>(2, 0, 2).to_string(), "x1^2 + x2^2");
        assert_eq!(power_sum::<Scalar>(1, 1, 2).to_string(), "x1*y1 + x2*y2");
    }

    #[test]
    fn complete_homogeneous_examples() {
        let c0 = complete_homogeneous::<Scalar>(0, 1, 2, 2).unwrap();
        assert_eq!(c0.to_string(), "1");
        let c2 = complete_homogeneous::<Scalar>(2, 1, 2, 2).unwrap();
        assert_eq!(c2.to_string(), "x1^2 + x1*x2 + x2^2");
        assert!(complete_homogeneous::<Scalar>(-1, 1, 2, 2).unwrap().is_zero());
        assert!(complete_homogeneous::<Scalar>(-2, 1, 2, 2).is_err());
    }

    #[test]
    fn divided_difference_matches_quotient() {
        let x1 = P::x(2, 1).unwrap();
        let x2 = P::x(2, 2).unwrap();
        let f = x1.pow(3).mul(&x2).unwrap();
        let dd = f.divided_difference(0, 1);
        // (x1^3 x2 - x2^3 x1)/(x1 - x2) = x1 x2 (x1 + x2)
        let diff = x1.sub(&x2).unwrap();
        assert_eq!(diff.mul(&dd).unwrap(), f.sub(&f.permute(&[1, 0])).unwrap());
    }
}
