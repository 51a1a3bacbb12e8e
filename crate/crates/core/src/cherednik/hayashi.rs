//! Poisson bracket on the centre of `H_{0,1}` from the flat family in `t`.

use crate::error::{AlgebraError, Result};
use crate::param::{Param, ParamPoint};
use crate::scalar::Scalar;

use super::element::{Cherednik, CherednikElement};

/// `{z1, z2} = ([z̃1, z̃2] / t)|_{t=0}`, lifting each central element verbatim to symbolic `t`.
pub fn hayashi_bracket_h(
    z1: &CherednikElement<Scalar>,
    z2: &CherednikElement<Scalar>,
) -> Result<CherednikElement<Scalar>> {
    if z1.m() != z2.m() {
        return Err(AlgebraError::SizeMismatch(format!("ranks {} and {}", z1.m(), z2.m())));
    }
    let m = z1.m();
    let h0 = Cherednik::at_zero(m);
    for z in [z1, z2] {
        if !h0.is_central(z) {
            return Err(AlgebraError::NotCentral(z.to_string()));
        }
    }
    let ht = Cherednik::symbolic_t(m);
    let comm = ht.commutator(&z1.to_param(), &z2.to_param());
    let divided = comm
        .terms()
        .try_map_coeffs(|c| c.div_by_var(Param::T))
        .ok_or(AlgebraError::NotDivisible)?;
    let at_zero = CherednikElement::from_terms(m, divided).specialize(&ParamPoint {
        t: Some(Scalar::from_int(0)),
        ..Default::default()
    });
    at_zero
        .to_scalar()
        .ok_or_else(|| AlgebraError::Invalid("bracket retains a free parameter".into()))
}
