//! Closed-form central elements attached to the Segal–Sugawara generators.

use num::{One, Zero};

use crate::error::{AlgebraError, Result};
use crate::poly::{complete_homogeneous, power_sum, CommPoly};
use crate::scalar::Scalar;
use crate::symgroup::Permutation;

use super::element::CherednikElement;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ThetaTag {
    /// `T_{1,l}`, index `l >= 0`.
    T1,
    /// `T_{2,l}`, index `l >= -2`.
    T2,
    /// `T_{k,-2k}`, uses `k`.
    TkMin,
    /// `id[r]`, index `r <= 0`.
    Id,
    /// `L_r`, index `r <= 1`.
    L,
}

impl std::str::FromStr for ThetaTag {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "T1" => ThetaTag::T1,
            "T2" => ThetaTag::T2,
            "Tk_min" => ThetaTag::TkMin,
            "id" => ThetaTag::Id,
            "L" => ThetaTag::L,
            _ => return Err(AlgebraError::Parse(format!("unknown tag {s:?}"))),
        })
    }
}

fn el(f: &CommPoly<Scalar>) -> CherednikElement<Scalar> {
    CherednikElement::from_poly(f)
}

fn x_power_sum(e: i64, n: usize) -> CherednikElement<Scalar> {
    el(&power_sum(e as u32, 0, n))
}

/// `Σ_{i<j} c_r(x_i, x_j) s_ij`.
fn transposition_sum(r: i64, n: usize) -> Result<CherednikElement<Scalar>> {
    let mut out = CherednikElement::zero(n);
    for i in 1..=n {
        for j in i + 1..=n {
            let f = complete_homogeneous::<Scalar>(r, i, j, n)?;
            let s = Permutation::transposition(n, i - 1, j - 1);
            out = out.add(&CherednikElement::from_poly_perm(&f, &s));
        }
    }
    Ok(out)
}

fn range_err(msg: String) -> AlgebraError {
    AlgebraError::Invalid(msg)
}

/// Right-hand sides of the centre formulas at `t = 0`, `c = 1`.
pub fn theta_closed_form(tag: ThetaTag, idx: i64, k: usize, n: usize) -> Result<CherednikElement<Scalar>> {
    if n == 0 {
        return Err(range_err("n must be positive".into()));
    }
    let ni = n as i64;
    match tag {
        ThetaTag::T1 => {
            if idx < 0 {
                return Err(range_err(format!("T1 needs l >= 0, got {idx}")));
            }
            Ok(x_power_sum(idx + 1, n))
        }
        ThetaTag::T2 => {
            let l = idx;
            if l < -2 {
                return Err(range_err(format!("T2 needs l >= -2, got {l}")));
            }
            let a = el(&power_sum((l + 3) as u32, 1, n)).scale(&Scalar::from_int(-2));
            let b = transposition_sum(l + 2, n)?.scale(&Scalar::from_int(2));
            let c = x_power_sum(l + 2, n).scale(&Scalar::from_int((ni + 1) * l + 3 * ni + 1));
            Ok(a.add(&b).add(&c))
        }
        ThetaTag::TkMin => {
            if k == 0 || k > n {
                return Err(range_err(format!("Tk_min needs 1 <= k <= n, got k={k}, n={n}")));
            }
            let sign = if k.is_multiple_of(2) { Scalar::one() } else { -Scalar::one() };
            Ok(el(&power_sum(0, k as u32, n)).scale(&sign))
        }
        ThetaTag::Id => {
            if idx > 0 {
                return Err(range_err(format!("id needs r <= 0, got {idx}")));
            }
            Ok(x_power_sum(-idx, n))
        }
        ThetaTag::L => {
            let r = idx;
            if r > 1 {
                return Err(range_err(format!("L needs r <= 1, got {r}")));
            }
            let a = el(&power_sum((1 - r) as u32, 1, n)).scale(&-Scalar::one());
            let b = transposition_sum(-r, n)?;
            let coef = Scalar::new(ni * (1 - r), 2);
            let c = if coef.is_zero() {
                CherednikElement::zero(n)
            } else {
                x_power_sum(-r, n).scale(&coef)
            };
            Ok(a.add(&b).add(&c))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(theta_closed_form(ThetaTag::T1, 0, 1, 2).unwrap().to_string(), "x1 + x2");
        assert_eq!(
            theta_closed_form(ThetaTag::T2, -2, 2, 2).unwrap().to_string(),
            "-2*x1*y1 - 2*x2*y2 + 2 + 2*s(1,2)"
        );
        assert_eq!(theta_closed_form(ThetaTag::TkMin, 0, 2, 2).unwrap().to_string(), "y1^2 + y2^2");
        assert_eq!(
            theta_closed_form(ThetaTag::L, 0, 0, 2).unwrap().to_string(),
            "-x1*y1 - x2*y2 + 2 + s(1,2)"
        );
        assert!(theta_closed_form(ThetaTag::T1, -1, 1, 2).is_err());
        assert!(theta_closed_form(ThetaTag::TkMin, 0, 3, 2).is_err());
        assert!(theta_closed_form(ThetaTag::L, 2, 0, 2).is_err());
    }
}
