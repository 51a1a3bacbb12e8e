//! Dunkl operators on the polynomial representation.

use crate::error::{AlgebraError, Result};
use crate::poly::CommPoly;
use crate::scalar::Coeff;

use super::element::Cherednik;

/// `D_i f = t ∂_i f + c Σ_{j≠i} (s_ij f − f)/(x_i − x_j)` for an `x`-only polynomial, 1-based `i`.
pub fn dunkl_apply<C: Coeff>(alg: &Cherednik<C>, i: usize, f: &CommPoly<C>) -> Result<CommPoly<C>> {
    let m = alg.m;
    if i == 0 || i > m {
        return Err(AlgebraError::IndexOutOfRange { index: i, max: m });
    }
    if f.m() != m {
        return Err(AlgebraError::SizeMismatch(format!("polynomial in {} variables, rank {m}", f.m())));
    }
    if f.terms().keys().any(|e| e.y().iter().any(|&v| v > 0)) {
        return Err(AlgebraError::Invalid("Dunkl operators act on polynomials in x only".into()));
    }
    let i0 = i - 1;
    let mut out = f.dx(i0).scale(&alg.t);
    for j in 0..m {
        if j != i0 {
            out = out.sub(&f.divided_difference(i0, j).scale(&alg.c))?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::param::ParamScalar;
    use crate::poly::ParamPoly;
    use num::One;

    #[test]
    fn examples() {
        let h = Cherednik::new(2, ParamScalar::t(), ParamScalar::one());
        let x1 = ParamPoly::x(2, 1).unwrap();
        let x2 = ParamPoly::x(2, 2).unwrap();
        assert_eq!(dunkl_apply(&h, 1, &x1).unwrap().to_string(), "t - 1");
        assert_eq!(dunkl_apply(&h, 1, &x2).unwrap().to_string(), "1");
        assert!(dunkl_apply(&h, 1, &ParamPoly::one(2)).unwrap().is_zero());
    }
}
