//! Finite-dimensional quotients of generalized Verma modules at `t = 0`.

use std::collections::HashMap;

use num::Zero;

use crate::error::{AlgebraError, Result};
use crate::linalg::{EchelonBasis, Matrix, SparseVec};
use crate::scalar::Scalar;
use crate::symgroup::{Permutation, SymRep};

use super::element::{Cherednik, CherednikElement};
use super::verma::{GenVerma, VermaKey, VermaVector};

/// A finite-dimensional module given by matrices of the generators.
#[derive(Clone, Debug)]
pub struct QuotientModule {
    pub m: usize,
    pub dim: usize,
    /// Quotient dimension of the image of degree `<= e` for each `e` up to the cap.
    pub profile: Vec<usize>,
    pub x: Vec<Matrix>,
    pub y: Vec<Matrix>,
    s: Vec<Matrix>,
}

impl SymRep for QuotientModule {
    fn degree(&self) -> usize {
        self.m
    }
    fn dim(&self) -> usize {
        self.dim
    }
    fn s_matrix(&self, i: usize) -> &Matrix {
        &self.s[i]
    }
}

impl QuotientModule {
    /// Defining relations of `H_{0,1}(S_m)` on the matrices.
    pub fn satisfies_relations(&self) -> bool {
        let m = self.m;
        let sub = |a: &Matrix, b: &Matrix| {
            let mut out = a.clone();
            for (o, v) in out.data.iter_mut().zip(&b.data) {
                *o = &*o - v;
            }
            out
        };
        let comm = |a: &Matrix, b: &Matrix| sub(&a.mul(b), &b.mul(a));
        let tmat = |i: usize, j: usize| self.matrix_of(&Permutation::transposition(m, i, j)).unwrap();
        for i in 0..m {
            for j in 0..m {
                if !comm(&self.x[i], &self.x[j]).data.iter().all(|v| v.is_zero()) {
                    return false;
                }
                if !comm(&self.y[i], &self.y[j]).data.iter().all(|v| v.is_zero()) {
                    return false;
                }
                let lhs = comm(&self.y[i], &self.x[j]);
                let rhs = if i == j {
                    let mut acc = Matrix::zeros(self.dim, self.dim);
                    for k in (0..m).filter(|&k| k != i) {
                        acc = sub(&acc, &tmat(i, k));
                    }
                    acc
                } else {
                    tmat(i, j)
                };
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }
}

struct Indexer {
    index: HashMap<VermaKey, usize>,
}

impl Indexer {
    fn to_sparse(&self, v: &VermaVector<Scalar>) -> SparseVec {
        v.iter().map(|(k, c)| (self.index[k], c.clone())).collect()
    }
}

/// Quotient of `M` (at `t = 0`) by the relations `z_j = a_j` for the given central elements.
///
/// The relations are generated inside the degree truncation. The quotient
/// dimension is read off at the first degree where it stabilizes; a stable
/// value above `m!` or no stabilization within the cap is reported as degenerate.
pub fn simple_quotient(
    module: &GenVerma<Scalar>,
    central: &[(CherednikElement<Scalar>, Scalar)],
) -> Result<QuotientModule> {
    let alg: &Cherednik<Scalar> = &module.alg;
    let m = alg.m;
    for (z, _) in central {
        if !alg.is_central(z) {
            return Err(AlgebraError::NotCentral(z.to_string()));
        }
    }
    let basis = module.basis();
    let idx = Indexer {
        index: basis.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect(),
    };
    let mut rel = EchelonBasis::new();
    for key in &basis {
        let v = VermaVector::basis(key.clone());
        for (z, a) in central {
            let zv = match module.apply(z, &v) {
                Ok(zv) => zv,
                Err(AlgebraError::CapExceeded { .. }) => continue,
                Err(e) => return Err(e),
            };
            rel.insert(&idx.to_sparse(&zv.minus(&v.scaled(a))));
        }
    }
    let base = rel.rank();
    let cap = module.cap as usize;
    let mut profile = Vec::new();
    let mut span = rel.clone();
    let mut chosen: Vec<VermaKey> = Vec::new();
    for e in 0..=cap {
        for key in basis.iter().filter(|k| k.0.iter().sum::<u32>() as usize == e) {
            if span.insert(&idx.to_sparse(&VermaVector::basis(key.clone()))) {
                chosen.push(key.clone());
            }
        }
        profile.push(span.rank() - base);
    }
    let stable = (0..cap).find(|&e| profile[e] == profile[e + 1]);
    let Some(e0) = stable else {
        return Err(AlgebraError::Degenerate(format!(
            "quotient does not stabilize below degree cap {}",
            module.cap
        )));
    };
    let dim = profile[e0];
    let order = crate::scalar::factorial(m as u64).to_i64().unwrap_or(i64::MAX) as usize;
    if dim > order {
        return Err(AlgebraError::Degenerate(format!(
            "quotient dimension {dim} exceeds {order}; central character is not generic"
        )));
    }
    let qbasis: Vec<VermaKey> = chosen
        .into_iter()
        .filter(|k| (k.0.iter().sum::<u32>() as usize) <= e0)
        .collect();

    // Rows tagged with the quotient coordinate they represent.
    let n = basis.len();
    let mut coords = EchelonBasis::new();
    for (q, key) in qbasis.iter().enumerate() {
        let mut r = rel.reduce(&idx.to_sparse(&VermaVector::basis(key.clone())));
        r.insert(n + q, Scalar::from_int(1));
        coords.insert(&r);
    }
    let solve = |v: &VermaVector<Scalar>| -> Result<Vec<Scalar>> {
        let r = coords.reduce(&rel.reduce(&idx.to_sparse(v)));
        let mut out = vec![Scalar::zero(); dim];
        for (k, c) in r {
            if k < n {
                return Err(AlgebraError::Degenerate("quotient basis does not span".into()));
            }
            out[k - n] = -c;
        }
        Ok(out)
    };
    let matrix_of = |h: &CherednikElement<Scalar>| -> Result<Matrix> {
        let mut mat = Matrix::zeros(dim, dim);
        for (col, key) in qbasis.iter().enumerate() {
            let hv = module.apply(h, &VermaVector::basis(key.clone()))?;
            for (row, c) in solve(&hv)?.into_iter().enumerate() {
                mat.set(row, col, c);
            }
        }
        Ok(mat)
    };
    let x = (1..=m).map(|i| matrix_of(&alg.x(i)?)).collect::<Result<Vec<_>>>()?;
    let y = (1..=m).map(|i| matrix_of(&alg.y(i)?)).collect::<Result<Vec<_>>>()?;
    let s = (1..m).map(|i| matrix_of(&alg.s(i, i + 1)?)).collect::<Result<Vec<_>>>()?;
    Ok(QuotientModule {
        m,
        dim,
        profile,
        x,
        y,
        s,
    })
}

/// Central elements `Σ x_i` and `Σ x_i y_i - Σ_{i<j} s_ij` of `H_{0,1}(S_m)`.
pub fn default_central_elements(alg: &Cherednik<Scalar>) -> Result<Vec<CherednikElement<Scalar>>> {
    let m = alg.m;
    let mut p = CherednikElement::zero(m);
    let mut eu = CherednikElement::zero(m);
    for i in 1..=m {
        p = p.add(&alg.x(i)?);
        eu = eu.add(&alg.mul(&alg.x(i)?, &alg.y(i)?));
        for j in i + 1..=m {
            eu = eu.sub(&alg.s(i, j)?);
        }
    }
    Ok(vec![p, eu])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symgroup::{character, induce_specht, Composition, Multipartition, Partition};
    use num::One;

    fn example_module(cap: u32) -> GenVerma<Scalar> {
        let nu = Composition::new(vec![1, 1]).unwrap();
        let one = Partition::new(vec![1]).unwrap();
        let lam = Multipartition(vec![one.clone(), one]);
        let a = vec![Scalar::zero(), Scalar::one()];
        GenVerma::new(Cherednik::at_zero(2), induce_specht(&nu, &lam, &a).unwrap(), cap).unwrap()
    }

    #[test]
    fn generic_point_has_dimension_two() {
        let v = example_module(4);
        let zs = default_central_elements(&v.alg).unwrap();
        let vals = [Scalar::new(3, 7), Scalar::new(-5, 11)];
        let central: Vec<_> = zs.into_iter().zip(vals).collect();
        let q = simple_quotient(&v, &central).unwrap();
        assert_eq!(q.dim, 2);
        assert!(q.satisfies_relations());
        let s = Permutation::simple(2, 0);
        assert_eq!(character(&q, &s).unwrap(), Scalar::zero());
    }

    #[test]
    fn non_central_is_rejected() {
        let v = example_module(3);
        let x1 = v.alg.x(1).unwrap();
        assert!(simple_quotient(&v, &[(x1, Scalar::zero())]).is_err());
    }
}
