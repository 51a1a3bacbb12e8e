//! Loop-algebra modes `e_rs[j]` of affine gl_n and the invariant pairings.

use std::fmt;

use crate::error::{AlgebraError, Result};
use crate::param::{Param, ParamScalar};
use crate::scalar::{Coeff, Scalar};

/// `e_{rs}[j]` with 0-based `r, s`; ordered by exponent, then row-major label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mode {
    pub j: i64,
    pub r: usize,
    pub s: usize,
}

pub type Word = Vec<Mode>;

impl Mode {
    pub fn new(r: usize, s: usize, j: i64) -> Self {
        Mode { j, r, s }
    }

    /// 1-based constructor with range check against `n`.
    pub fn checked(n: usize, r: usize, s: usize, j: i64) -> Result<Self> {
        for v in [r, s] {
            if v == 0 || v > n {
                return Err(AlgebraError::IndexOutOfRange { index: v, max: n });
            }
        }
        Ok(Mode::new(r - 1, s - 1, j))
    }

    pub fn is_diagonal(&self) -> bool {
        self.r == self.s
    }

    /// Torus weight `ε_r − ε_s` as an integer vector.
    pub fn weight(&self, n: usize) -> Vec<i64> {
        let mut w = vec![0; n];
        w[self.r] += 1;
        w[self.s] -= 1;
        w
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E({},{})[{}]", self.r + 1, self.s + 1, self.j)
    }
}

pub fn render_affine_word(w: &[Mode]) -> String {
    w.iter().map(|m| m.to_string()).collect::<Vec<_>>().join("*")
}

/// Sum of `|j|` over the letters.
pub fn abs_height(w: &[Mode]) -> i64 {
    w.iter().map(|m| m.j.abs()).sum()
}

pub fn pbw_length(w: &[Mode]) -> usize {
    w.len()
}

/// Sum of `|j|` over the negative letters.
pub fn negative_height(w: &[Mode]) -> i64 {
    w.iter().filter(|m| m.j < 0).map(|m| -m.j).sum()
}

/// Invariant form defining the central extension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LevelForm {
    /// `−n·tr(XY) + tr X·tr Y`.
    Critical,
    /// `κ·tr(XY)`.
    Generic(ParamScalar),
    /// `(t − n)·tr(XY) + tr X·tr Y`.
    Family,
}

impl LevelForm {
    /// Generic form with symbolic `kappa`.
    pub fn generic_symbolic() -> Self {
        LevelForm::Generic(ParamScalar::var(Param::Kappa))
    }

    /// Coefficients `(a, b)` with `⟨X,Y⟩ = a·tr(XY) + b·trX·trY`.
    pub fn coefficients(&self, n: usize) -> (ParamScalar, ParamScalar) {
        let nn = ParamScalar::from(n as i64);
        match self {
            LevelForm::Critical => (-&nn, ParamScalar::from(1)),
            LevelForm::Generic(k) => (k.clone(), ParamScalar::from(0)),
            LevelForm::Family => (&ParamScalar::t() - &nn, ParamScalar::from(1)),
        }
    }
}

/// `⟨X, Y⟩` for `gl_n` matrices given as dense rational entries.
pub fn pairing(x: &[Vec<Scalar>], y: &[Vec<Scalar>], form: &LevelForm) -> ParamScalar {
    let n = x.len();
    let mut trxy = Scalar::from_int(0);
    for i in 0..n {
        for k in 0..n {
            trxy += &(&x[i][k] * &y[k][i]);
        }
    }
    let trx = (0..n).fold(Scalar::from_int(0), |acc, i| &acc + &x[i][i]);
    let try_ = (0..n).fold(Scalar::from_int(0), |acc, i| &acc + &y[i][i]);
    let (a, b) = form.coefficients(n);
    &a.scale_by(&trxy) + &b.scale_by(&(&trx * &try_))
}

/// Elementary matrix `e_rs` (0-based) as dense entries.
pub fn elementary(n: usize, r: usize, s: usize) -> Vec<Vec<Scalar>> {
    let mut m = vec![vec![Scalar::from_int(0); n]; n];
    m[r][s] = Scalar::from_int(1);
    m
}

pub fn identity_matrix(n: usize) -> Vec<Vec<Scalar>> {
    (0..n)
        .map(|i| (0..n).map(|k| Scalar::from_int((i == k) as i64)).collect())
        .collect()
}

/// Pairing table `⟨e_ab, e_cd⟩` over a coefficient ring that can hold the form.
pub(crate) fn pairing_table<C: Coeff>(n: usize, form: &LevelForm) -> Result<Vec<C>> {
    let (a, b) = form.coefficients(n);
    let a = C::try_from_param(&a).ok_or_else(|| {
        AlgebraError::Invalid("level form needs symbolic coefficients".into())
    })?;
    let b = C::try_from_param(&b).ok_or_else(|| {
        AlgebraError::Invalid("level form needs symbolic coefficients".into())
    })?;
    let mut out = Vec::with_capacity(n * n * n * n);
    for p in 0..n {
        for q in 0..n {
            for r in 0..n {
                for s in 0..n {
                    let mut v = C::zero();
                    if q == r && p == s {
                        v = v.cadd(&a);
                    }
                    if p == q && r == s {
                        v = v.cadd(&b);
                    }
                    out.push(v);
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::param::ParamPoint;

    #[test]
    fn pairing_examples() {
        let n = 2;
        let id = identity_matrix(n);
        let e12 = elementary(n, 0, 1);
        let e11 = elementary(n, 0, 0);
        assert!(pairing(&id, &e12, &LevelForm::Critical).as_constant().unwrap() == Scalar::from_int(0));
        assert!(pairing(&id, &id, &LevelForm::Critical).as_constant().unwrap() == Scalar::from_int(0));
        assert_eq!(pairing(&e11, &e11, &LevelForm::Critical).to_string(), "-1");
        assert_eq!(pairing(&id, &id, &LevelForm::Family).to_string(), "2*t");
    }

    #[test]
    fn family_degenerates_to_critical() {
        let n = 3;
        let pt = ParamPoint {
            t: Some(Scalar::from_int(0)),
            ..Default::default()
        };
        for a in 0..n * n {
            for b in 0..n * n {
                let x = elementary(n, a / n, a % n);
                let y = elementary(n, b / n, b % n);
                assert_eq!(
                    pairing(&x, &y, &LevelForm::Family).specialize(&pt),
                    pairing(&x, &y, &LevelForm::Critical)
                );
            }
        }
    }

    #[test]
    fn heights() {
        let w = vec![Mode::new(0, 0, -2), Mode::new(0, 1, 1)];
        assert_eq!(abs_height(&w), 3);
        assert_eq!(pbw_length(&w), 2);
        assert_eq!(abs_height(&[]), 0);
        assert_eq!(Mode::new(0, 1, -1).to_string(), "E(1,2)[-1]");
    }
}
