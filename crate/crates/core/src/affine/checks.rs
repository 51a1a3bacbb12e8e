//! Centrality, Harish-Chandra projection and Poisson bracket checks.

use crate::error::{AlgebraError, Result};
use crate::param::{Param, ParamPoint, ParamScalar};
use crate::scalar::{Coeff, Scalar};

use super::algebra::{Affine, AffineElement, Order};
use super::mode::{LevelForm, Mode};
use super::vacuum::{power_vector, ss_vector, OpSpec};

/// `[A, X]` modulo `Î_trunc`, with `A` materialized deep enough for the right factor.
pub fn operator_commutator<C: Coeff>(alg: &Affine<C>, op: &OpSpec, x: &Mode, trunc: i64) -> Result<AffineElement<C>> {
    if trunc < 1 {
        return Err(AlgebraError::Invalid(format!("truncation {trunc} must be positive")));
    }
    let depth = trunc + (-x.j).max(0);
    let a = alg.materialize(op, depth)?;
    let xe = AffineElement::word(alg.n, vec![*x], C::one());
    Ok(alg.mul(&a, &xe, Some(trunc)).sub(&alg.mul(&xe, &a, Some(trunc))))
}

/// True iff the operator commutes with `x` modulo `Î_trunc` at the critical level.
pub fn centrality_check(n: usize, op: &OpSpec, x: &Mode, trunc: i64) -> Result<bool> {
    let alg = Affine::<Scalar>::new(n, LevelForm::Critical)?;
    Ok(operator_commutator(&alg, op, x, trunc)?.is_zero())
}

/// Outcome of the commutator test under the symbolic-`κ` form.
#[derive(Clone, Debug)]
pub struct GenericLevelOutcome {
    pub commutator: AffineElement<ParamScalar>,
    /// Every coefficient vanishes at `κ = −n`.
    pub vanishes_at_critical: bool,
}

impl GenericLevelOutcome {
    /// Nonzero and divisible by `κ + n` coefficientwise.
    pub fn is_critical_multiple(&self) -> bool {
        !self.commutator.is_zero() && self.vanishes_at_critical
    }
}

pub fn generic_level_commutator(n: usize, op: &OpSpec, x: &Mode, trunc: i64) -> Result<GenericLevelOutcome> {
    let alg = Affine::<ParamScalar>::new(n, LevelForm::generic_symbolic())?;
    let commutator = operator_commutator(&alg, op, x, trunc)?;
    let pt = ParamPoint {
        kappa: Some(Scalar::from_int(-(n as i64))),
        ..Default::default()
    };
    let vanishes_at_critical = commutator.specialize(&pt).is_zero();
    Ok(GenericLevelOutcome { commutator, vanishes_at_critical })
}

/// Affine Harish-Chandra projection of a torus-invariant vacuum element.
pub fn ahc_project(alg: &Affine<Scalar>, a: &AffineElement<Scalar>) -> Result<AffineElement<Scalar>> {
    if !a.is_torus_invariant() {
        return Err(AlgebraError::NonzeroWeight);
    }
    let reordered = alg.reorder(a, Order::Ahc);
    Ok(AffineElement::from_terms(
        alg.n,
        reordered.filter(|w| w.iter().all(|m| m.is_diagonal())),
    ))
}

/// Data for `T_k = P_k + (terms killed by the projection) + (lower length)`.
#[derive(Clone, Debug)]
pub struct TkDecomposition {
    pub k: usize,
    pub n: usize,
    pub difference: AffineElement<Scalar>,
    pub invariant: bool,
    pub graded: bool,
    pub projection: AffineElement<Scalar>,
    pub projection_length: usize,
}

impl TkDecomposition {
    pub fn holds(&self) -> bool {
        self.invariant && self.graded && self.projection_length < self.k.max(1)
            || (self.k == 1 && self.difference.is_zero())
    }
}

pub fn tk_decomposition_check(k: usize, n: usize) -> Result<TkDecomposition> {
    if k == 0 || k > n {
        return Err(AlgebraError::Invalid(format!("needs 1 <= k <= n, got k={k}, n={n}")));
    }
    let alg = Affine::<Scalar>::new(n, LevelForm::Critical)?;
    let difference = ss_vector(k, n)?.sub(&power_vector(k, n));
    let invariant = difference.is_torus_invariant();
    let graded = difference
        .terms()
        .keys()
        .all(|w| w.iter().map(|m| m.j).sum::<i64>() == -(k as i64));
    let projection = ahc_project(&alg, &difference)?;
    let projection_length = projection.pbw_length();
    Ok(TkDecomposition { k, n, difference, invariant, graded, projection, projection_length })
}

/// Member of `span{id[r], L[r+1] : r <= 0}`.
pub fn in_heisenberg_virasoro(op: &OpSpec) -> bool {
    matches!(op, OpSpec::Id(r) if *r <= 0) || matches!(op, OpSpec::L(r) if *r <= 1)
}

/// `([ã, b̃] / t)|_{t=0}` modulo `Î_trunc` in the flat family.
pub fn hayashi_bracket_affine(n: usize, a: &OpSpec, b: &OpSpec, trunc: i64) -> Result<AffineElement<Scalar>> {
    for op in [a, b] {
        if matches!(op, OpSpec::T(..)) {
            return Err(AlgebraError::Invalid(format!("{op} is not an id or L operator")));
        }
    }
    if trunc < 1 {
        return Err(AlgebraError::Invalid(format!("truncation {trunc} must be positive")));
    }
    let alg = Affine::<ParamScalar>::new(n, LevelForm::Family)?;
    let at = alg.materialize(a, trunc)?;
    let bt = alg.materialize(b, trunc)?;
    let a_deep = alg.materialize(a, trunc + bt.negative_height())?;
    let b_deep = alg.materialize(b, trunc + at.negative_height())?;
    let comm = alg.mul(&a_deep, &bt, Some(trunc)).sub(&alg.mul(&b_deep, &at, Some(trunc)));
    let divided = comm
        .terms()
        .try_map_coeffs(|c| c.div_by_var(Param::T))
        .ok_or(AlgebraError::NotDivisible)?;
    let pt = ParamPoint {
        t: Some(Scalar::from_int(0)),
        ..Default::default()
    };
    AffineElement::from_terms(n, divided)
        .specialize(&pt)
        .to_scalar()
        .ok_or_else(|| AlgebraError::Invalid("bracket retains a free parameter".into()))
}
