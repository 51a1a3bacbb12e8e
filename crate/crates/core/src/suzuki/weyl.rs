//! Suzuki images of Verma and Weyl modules on the finite tensor core.

use std::collections::BTreeMap;

use num::Zero;

use crate::error::{AlgebraError, Result};
use crate::linalg::{EchelonBasis, SparseVec};
use crate::scalar::Scalar;
use crate::symgroup::{
    character, enumerate_partitions, induce_specht, specht_matrices, stabilizer_matches, Composition,
    Multipartition, Partition, Permutation,
};

/// Finite data of a Suzuki image.
#[derive(Clone, Debug, PartialEq)]
pub struct SuzukiModuleReport {
    pub dim: usize,
    /// Character value per cycle type (types in increasing lexicographic order).
    pub character: Vec<(Vec<usize>, Scalar)>,
    /// Diagonal of `y_i` on the quotient basis, one row per `i`.
    pub y_eigenvalues: Vec<Vec<Scalar>>,
    /// Partition of `m` whose Specht character equals `character`.
    pub specht_match: Option<Partition>,
    /// Agreement with the induced module `Sp_ν(a, λ)` (Weyl images only).
    pub induced_match: Option<bool>,
}

/// `H_0(𝔟, (V*)^{⊗m} ⊗ ℂ_λ)` where `𝔟` is the torus plus upper-triangular `e_rs` with `block[r] = block[s]`.
struct Coinvariants {
    tensors: Vec<Vec<usize>>,
    index: BTreeMap<Vec<usize>, usize>,
    image: EchelonBasis,
    basis: Vec<usize>,
}

fn tensors_with_content(n: usize, m: usize, content: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m);
    let mut left = content.to_vec();
    fn go(n: usize, m: usize, left: &mut [usize], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for j in 0..n {
            if left[j] > 0 {
                left[j] -= 1;
                cur.push(j);
                go(n, m, left, cur, out);
                cur.pop();
                left[j] += 1;
            }
        }
    }
    if content.iter().sum::<usize>() == m {
        go(n, m, &mut left, &mut cur, &mut out);
    }
    out
}

impl Coinvariants {
    fn new(n: usize, m: usize, block: &[usize], weight: &[i64]) -> Self {
        let content: Option<Vec<usize>> = weight.iter().map(|&w| usize::try_from(w).ok()).collect();
        let tensors = content.map_or(Vec::new(), |c| tensors_with_content(n, m, &c));
        let index: BTreeMap<Vec<usize>, usize> = tensors.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        let mut image = EchelonBasis::new();
        if !tensors.is_empty() {
            let content: Vec<usize> = weight.iter().map(|&w| w as usize).collect();
            for r in 0..n {
                for s in r + 1..n {
                    if block[r] != block[s] || content[s] == 0 {
                        continue;
                    }
                    let mut src = content.clone();
                    src[r] += 1;
                    src[s] -= 1;
                    // e_rs e_p* = -δ_pr e_s*
                    for v in tensors_with_content(n, m, &src) {
                        let mut img = SparseVec::new();
                        for p in 0..m {
                            if v[p] == r {
                                let mut w = v.clone();
                                w[p] = s;
                                let e = img.entry(index[&w]).or_insert_with(Scalar::zero);
                                *e = &*e - &Scalar::from_int(1);
                            }
                        }
                        img.retain(|_, c| !c.is_zero());
                        image.insert(&img);
                    }
                }
            }
        }
        let pivots: Vec<usize> = image.pivots().collect();
        let basis = (0..tensors.len()).filter(|i| !pivots.contains(i)).collect();
        Coinvariants { tensors, index, image, basis }
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Trace of the slot permutation `(σ·v)_{σ(p)} = v_p` on the quotient.
    fn trace(&self, sigma: &Permutation) -> Scalar {
        let mut tr = Scalar::zero();
        for &q in &self.basis {
            let v = &self.tensors[q];
            let mut w = vec![0; v.len()];
            for (p, &x) in v.iter().enumerate() {
                w[sigma.apply(p)] = x;
            }
            let mut e = SparseVec::new();
            e.insert(self.index[&w], Scalar::from_int(1));
            let red = self.image.reduce(&e);
            tr += &red.get(&q).cloned().unwrap_or_else(Scalar::zero);
        }
        tr
    }

    fn character(&self, m: usize) -> Vec<(Vec<usize>, Scalar)> {
        class_representatives(m).into_iter().map(|(ty, w)| (ty, self.trace(&w))).collect()
    }
}

fn cycle_type(w: &Permutation) -> Vec<usize> {
    let m = w.size();
    let mut seen = vec![false; m];
    let mut out = Vec::new();
    for i in 0..m {
        if seen[i] {
            continue;
        }
        let mut len = 0;
        let mut j = i;
        while !seen[j] {
            seen[j] = true;
            j = w.apply(j);
            len += 1;
        }
        out.push(len);
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// One permutation per cycle type.
pub fn class_representatives(m: usize) -> Vec<(Vec<usize>, Permutation)> {
    let mut reps = BTreeMap::new();
    for w in Permutation::all(m) {
        reps.entry(cycle_type(&w)).or_insert(w);
    }
    reps.into_iter().collect()
}

fn specht_character(lambda: &Partition) -> Result<Vec<(Vec<usize>, Scalar)>> {
    let sp = specht_matrices(lambda)?;
    class_representatives(lambda.size())
        .into_iter()
        .map(|(ty, w)| Ok((ty, character(&sp, &w)?)))
        .collect()
}

fn match_specht(m: usize, chi: &[(Vec<usize>, Scalar)]) -> Result<Option<Partition>> {
    if chi.first().is_none_or(|(_, d)| d.is_zero()) {
        return Ok(None);
    }
    for p in enumerate_partitions(m, m) {
        let p = Partition::new(p.shape())?;
        if specht_character(&p)? == chi {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

/// `H_0(𝔟_+, (V*)^{⊗m} ⊗ ℂ_λ)` for an integral weight `λ` of `gl_n`; `y` acts by zero.
pub fn suzuki_on_verma(lambda: &[i64], m: usize) -> Result<SuzukiModuleReport> {
    let n = lambda.len();
    if n == 0 {
        return Err(AlgebraError::Invalid("empty weight".into()));
    }
    let co = Coinvariants::new(n, m, &vec![0; n], lambda);
    let dim = co.dim();
    let character = co.character(m);
    let specht_match = match_specht(m, &character)?;
    Ok(SuzukiModuleReport {
        dim,
        character,
        y_eigenvalues: vec![vec![Scalar::zero(); dim]; m],
        specht_match,
        induced_match: None,
    })
}

/// `H_0(𝔩_μ, (V*)^{⊗m} ⊗ L(a, λ))` with `L(λ)` replaced by its Borel presentation and
/// `y_i = Σ_k e_kk^{(i)} e_kk[1]` transported through `e_kk[1] ↦ -y`.
pub fn suzuki_on_weyl(mu: &Composition, a: &[Scalar], lambda: &Multipartition, m: usize) -> Result<SuzukiModuleReport> {
    let n = mu.size();
    if a.len() != n || lambda.0.len() != mu.parts().len() {
        return Err(AlgebraError::SizeMismatch(format!(
            "composition {:?} with a of length {} and {} partitions",
            mu.parts(),
            a.len(),
            lambda.0.len()
        )));
    }
    if !stabilizer_matches(mu, a) {
        return Err(AlgebraError::StabilizerMismatch);
    }
    let block = mu.block_of();
    let mut weight = Vec::with_capacity(n);
    let mut fits = true;
    for (p, &size) in lambda.0.iter().zip(mu.parts()) {
        let shape = p.shape();
        fits &= shape.len() <= size;
        for i in 0..size {
            weight.push(shape.get(i).copied().unwrap_or(0) as i64);
        }
    }
    if !fits {
        return Ok(SuzukiModuleReport {
            dim: 0,
            character: class_representatives(m).into_iter().map(|(t, _)| (t, Scalar::zero())).collect(),
            y_eigenvalues: vec![Vec::new(); m],
            specht_match: None,
            induced_match: None,
        });
    }
    let co = Coinvariants::new(n, m, &block, &weight);
    let dim = co.dim();
    let chi = co.character(m);
    // y_i e_v = a_{v_i} e_v: the two dual-action signs cancel.
    let y_eigenvalues: Vec<Vec<Scalar>> = (0..m)
        .map(|i| co.basis.iter().map(|&q| a[co.tensors[q][i]].clone()).collect())
        .collect();
    let induced_match = if lambda.size_type() == mu.parts() && m == n {
        let ind = induce_specht(mu, lambda, a)?;
        let mut ok = chi
            .iter()
            .zip(class_representatives(m))
            .all(|((_, x), (_, w))| character(&ind, &w).is_ok_and(|y| &y == x));
        for i in 0..m {
            let mut ours = y_eigenvalues[i].clone();
            let mut theirs: Vec<Scalar> = (0..ind.cosets.len() * ind.inner_dim()).map(|k| ind.y_eigenvalue(i, k).clone()).collect();
            ours.sort();
            theirs.sort();
            ok &= ours == theirs;
        }
        Some(ok)
    } else {
        None
    };
    let specht_match = match_specht(m, &chi)?;
    Ok(SuzukiModuleReport { dim, character: chi, y_eigenvalues, specht_match, induced_match })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chi(r: &SuzukiModuleReport) -> Vec<String> {
        r.character.iter().map(|(_, x)| x.to_string()).collect()
    }

    #[test]
    fn verma_examples() {
        let r = suzuki_on_verma(&[1, 1, 1], 3).unwrap();
        assert_eq!(r.dim, 1);
        assert_eq!(chi(&r), ["1", "-1", "1"]);
        assert_eq!(r.specht_match, Some(Partition::new(vec![1, 1, 1]).unwrap()));
        for n in [2, 3] {
            let mut lam = vec![2, 1];
            lam.resize(n, 0);
            let r = suzuki_on_verma(&lam, 3).unwrap();
            assert_eq!(r.dim, 2);
            assert_eq!(chi(&r), ["2", "0", "-1"]);
        }
        assert_eq!(suzuki_on_verma(&[1, 2], 3).unwrap().dim, 0);
        assert_eq!(suzuki_on_verma(&[3, -1], 2).unwrap().dim, 0);
    }

    fn mp(parts: &[&[usize]]) -> Multipartition {
        Multipartition(parts.iter().map(|p| Partition::new(p.to_vec()).unwrap()).collect())
    }

    #[test]
    fn weyl_examples() {
        let s = |v: i64| Scalar::from_int(v);
        let mu = Composition::new(vec![1, 1]).unwrap();
        let r = suzuki_on_weyl(&mu, &[s(0), s(1)], &mp(&[&[1], &[1]]), 2).unwrap();
        assert_eq!(r.dim, 2);
        assert_eq!(r.induced_match, Some(true));
        let mut y1 = r.y_eigenvalues[0].clone();
        y1.sort();
        assert_eq!(y1, vec![s(0), s(1)]);

        let mu = Composition::new(vec![2]).unwrap();
        let r = suzuki_on_weyl(&mu, &[s(0), s(0)], &mp(&[&[1, 1]]), 2).unwrap();
        assert_eq!(r.dim, 1);
        assert_eq!(chi(&r), ["1", "-1"]);
        assert_eq!(r.induced_match, Some(true));

        let mu = Composition::new(vec![1, 1]).unwrap();
        let r = suzuki_on_weyl(&mu, &[s(0), s(1)], &mp(&[&[2], &[1]]), 2).unwrap();
        assert_eq!(r.dim, 0);
        assert!(suzuki_on_weyl(&mu, &[s(0), s(0)], &mp(&[&[1], &[1]]), 2).is_err());
    }
}
