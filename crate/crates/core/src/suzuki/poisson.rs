//! Compatibility of `Θ` with the Poisson brackets on both centres.

use crate::affine::{hayashi_bracket_affine, in_heisenberg_virasoro, OpSpec};
use crate::cherednik::hayashi_bracket_h;
use crate::error::{AlgebraError, Result};
use crate::report::Check;
use crate::scalar::Scalar;

use super::hmodule::HModule;
use super::reduce::{theta, theta_of};

/// Result of the Poisson suite: per-pair checks and the global sign, if some pair fixed it.
#[derive(Clone, Debug)]
pub struct PoissonOutcome {
    pub checks: Vec<Check>,
    pub epsilon: Option<i64>,
}

/// `Θ({a, b}) = ε {Θ(a), Θ(b)}` with one `ε ∈ {±1}` fixed by the first nonzero pair.
pub fn poisson_theta_check(h: &HModule, pairs: &[(OpSpec, OpSpec)]) -> Result<PoissonOutcome> {
    let n = h.n;
    let mut eps: Option<i64> = None;
    let mut checks = Vec::new();
    for (a, b) in pairs {
        for op in [a, b] {
            if !in_heisenberg_virasoro(op) {
                return Err(AlgebraError::Invalid(format!("{op} is outside span{{id[r], L_(r+1)}}")));
            }
        }
        let affine = hayashi_bracket_affine(n, a, b, 2)?;
        let lhs = theta_of(h, &affine)?;
        let rhs = hayashi_bracket_h(&theta(h, a)?, &theta(h, b)?)?;
        let name = format!("{{{a}, {b}}}");
        let anchor = "Poisson homomorphism";
        let check = match eps {
            None if lhs.is_zero() && rhs.is_zero() => Check::equal(name, anchor, &rhs, &lhs),
            None => {
                let e = [1i64, -1].into_iter().find(|&e| rhs.scale(&Scalar::from_int(e)) == lhs);
                eps = e;
                let expected = rhs.scale(&Scalar::from_int(e.unwrap_or(1)));
                Check::new(name, anchor, &expected, &lhs, e.is_some())
            }
            Some(e) => Check::equal(name, anchor, rhs.scale(&Scalar::from_int(e)), &lhs),
        };
        checks.push(check);
    }
    Ok(PoissonOutcome { checks, epsilon: eps })
}

/// Pairs from `{id[r], L_{r+1} : lo <= r <= 0}`, unordered and without repeats.
pub fn heisenberg_virasoro_pairs(lo: i64) -> Vec<(OpSpec, OpSpec)> {
    let mut ops = Vec::new();
    for r in lo..=0 {
        ops.push(OpSpec::Id(r));
        ops.push(OpSpec::L(r + 1));
    }
    let mut out = Vec::new();
    for i in 0..ops.len() {
        for j in i + 1..ops.len() {
            out.push((ops[i], ops[j]));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    #[test]
    fn single_sign() {
        let h = HModule::new(2).unwrap();
        let pairs = vec![
            (OpSpec::Id(0), OpSpec::Id(-1)),
            (OpSpec::L(1), OpSpec::Id(-1)),
            (OpSpec::L(0), OpSpec::L(1)),
            (OpSpec::Id(-1), OpSpec::Id(0)),
            (OpSpec::L(0), OpSpec::Id(-1)),
        ];
        let out = poisson_theta_check(&h, &pairs).unwrap();
        for c in &out.checks {
            assert_eq!(c.status, Status::Pass, "{c:?}");
        }
        assert_eq!(out.epsilon, Some(-1));
    }

    #[test]
    fn pair_enumeration() {
        assert_eq!(heisenberg_virasoro_pairs(-2).len(), 15);
    }
}
