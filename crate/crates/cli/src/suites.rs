//! The verification suites exposed on the command line.

use std::collections::BTreeMap;


use suzuki_core::affine::{centrality_check, generic_level_commutator, hayashi_bracket_affine, Mode, OpSpec};
use suzuki_core::cherednik::{dunkl_apply, monomials_up_to, pbw_dimension_check, Cherednik};
use suzuki_core::poly::CommPoly;
use suzuki_core::report::Check;
use suzuki_core::suzuki::{
    class_representatives, coinvariant_reduce, confluence_check, estimate_check, estimate_monomials,
    heisenberg_virasoro_pairs, poisson_theta_check, suzuki_on_verma, suzuki_on_weyl, theta, verify_main_theorem,
    HModule, TensorClass,
};
use suzuki_core::symgroup::{
    character, enumerate_partitions, specht_matrices, Composition, Multipartition, Partition, Permutation, SymRep,
};
use suzuki_core::{AlgebraError, Param, ParamScalar, Scalar};

use crate::request::{ParamValue, Request};

pub type Params = BTreeMap<String, String>;

/// Generic numeric point used when the PBW suite is run with symbolic parameters.
fn numeric(v: &ParamValue, default: Scalar) -> Scalar {
    match v {
        ParamValue::Sym => default,
        ParamValue::Value(s) => s.clone(),
    }
}

fn symbolic(v: &ParamValue, p: Param) -> ParamScalar {
    match v {
        ParamValue::Sym => ParamScalar::var(p),
        ParamValue::Value(s) => ParamScalar::constant(s.clone()),
    }
}

fn show(v: &ParamValue) -> String {
    match v {
        ParamValue::Sym => "sym".into(),
        ParamValue::Value(s) => s.to_string(),
    }
}

fn params(pairs: &[(&str, String)]) -> Params {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn pbw(req: &Request) -> Result<(Params, Vec<Check>), AlgebraError> {
    let cap = req.degree_cap.unwrap_or(4);
    let t = numeric(&req.t, Scalar::new(2, 3));
    let c = numeric(&req.c, Scalar::new(-1, 5));
    let checks = (0..=cap)
        .map(|d| {
            let pc = pbw_dimension_check(req.m, d, t.clone(), c.clone());
            Check::new(format!("pbw m={} d={d}", req.m), "PBW basis count", pc.expected, pc.rank, pc.holds())
        })
        .collect();
    let p = params(&[("m", req.m.to_string()), ("degree-cap", cap.to_string()), ("t", t.to_string()), ("c", c.to_string())]);
    Ok((p, checks))
}

fn dunkl(req: &Request) -> Result<(Params, Vec<Check>), AlgebraError> {
    let m = req.m;
    let cap = req.degree_cap.unwrap_or(5);
    let alg = Cherednik::new(m, symbolic(&req.t, Param::T), symbolic(&req.c, Param::C));
    let mut checks = Vec::new();
    for i in 1..=m {
        for j in i + 1..=m {
            let mut bad = Vec::new();
            for e in monomials_up_to(m, cap) {
                let f = CommPoly::monomial(m, &e, &vec![0; m], ParamScalar::from(1));
                let a = dunkl_apply(&alg, i, &dunkl_apply(&alg, j, &f)?)?;
                let b = dunkl_apply(&alg, j, &dunkl_apply(&alg, i, &f)?)?;
                if !a.sub(&b)?.is_zero() {
                    bad.push(format!("{e:?}"));
                }
            }
            let got = if bad.is_empty() { "0".to_string() } else { bad.join(",") };
            checks.push(Check::new(format!("[D{i}, D{j}]"), "Dunkl operators commute", "0", got, bad.is_empty()));
        }
    }
    let p = params(&[("m", m.to_string()), ("degree-cap", cap.to_string()), ("t", show(&req.t)), ("c", show(&req.c))]);
    Ok((p, checks))
}

fn specht(req: &Request) -> Result<(Params, Vec<Check>), AlgebraError> {
    let m = req.m;
    let group = Permutation::all(m);
    let order = Scalar::from_int(group.len() as i64);
    let mut checks = Vec::new();
    let mut chars = Vec::new();
    for p in enumerate_partitions(m, m) {
        let shape = Partition::new(p.shape())?;
        let sp = specht_matrices(&shape)?;
        let name = format!("specht {shape}");
        checks.push(Check::equal(format!("{name} dim"), "dimension = #SYT", shape.count_standard_tableaux(), sp.dim()));
        let mut bad = Vec::new();
        for i in 0..m.saturating_sub(1) {
            let s = sp.s_matrix(i);
            if !s.mul(s).is_identity() {
                bad.push(format!("s{}^2", i + 1));
            }
            if i + 2 < m {
                let t = sp.s_matrix(i + 1);
                let l = s.mul(t).mul(s);
                if l != t.mul(s).mul(t) {
                    bad.push(format!("braid {}", i + 1));
                }
            }
        }
        let got = if bad.is_empty() { "all hold".to_string() } else { bad.join(",") };
        checks.push(Check::new(format!("{name} Coxeter"), "Coxeter relations", "all hold", got, bad.is_empty()));
        let chi: Vec<Scalar> = group.iter().map(|w| character(&sp, w)).collect::<Result<_, _>>()?;
        chars.push((shape, chi));
    }
    for (a, ca) in &chars {
        for (b, cb) in &chars {
            let ip = ca.iter().zip(cb).fold(Scalar::from_int(0), |acc, (x, y)| &acc + &(x * y)) * order.inv();
            let expected = if a == b { Scalar::from_int(1) } else { Scalar::from_int(0) };
            checks.push(Check::equal(format!("<chi{a}, chi{b}>"), "character orthonormality", expected, ip));
        }
    }
    Ok((params(&[("m", m.to_string())]), checks))
}

fn affine_centrality(req: &Request) -> Result<(Params, Vec<Check>), AlgebraError> {
    let n = req.n;
    let trunc = req.trunc.unwrap_or(3);
    let modes: Vec<Mode> = (0..n)
        .flat_map(|r| (0..n).flat_map(move |s| (-2..=2).map(move |j| Mode::new(r, s, j))))
        .collect();
    let mut checks = Vec::new();
    for k in 1..=n {
        let lo = -2 * k as i64;
        for l in lo - 2..=2 {
            let op = OpSpec::T(k, l);
            let mut bad = Vec::new();
            for x in &modes {
                if !centrality_check(n, &op, x, trunc)? {
                    bad.push(x.to_string());
                }
            }
            let ok = bad.is_empty();
            checks.push(Check::new(op.to_string(), "critical centrality", "central", bad.join(","), ok));
        }
    }
    if n >= 2 {
        let g = generic_level_commutator(n, &OpSpec::T(2, 0), &Mode::new(0, 1, 1), trunc)?;
        checks.push(Check::new(
            "generic T(2,0) vs E(1,2)[1]",
            "nonzero kappa+n multiple",
            "nonzero, vanishing at kappa = -n",
            &g.commutator,
            g.is_critical_multiple(),
        ));
    }
    Ok((params(&[("n", n.to_string()), ("trunc", trunc.to_string())]), checks))
}

fn appendix(req: &Request) -> Result<(Params, Vec<Check>), AlgebraError> {
    let n = req.n;
    let cap = req.degree_cap.unwrap_or(4);
    let h = HModule::new(n)?;
    let mut checks = Vec::new();
    for c in estimate_monomials(n, 3, cap as i64) {
        let k: i64 = c.iter().map(|m| -m.j).sum();
        let base = -(k + c.len() as i64);
        for l in base - 2..=base + 4 {
            checks.push(estimate_check(&h, &c, l)?);
        }
    }
    Ok((params(&[("n", n.to_string()), ("degree-cap", cap.to_string())]), checks))
}

fn main_theorem(req: &Request) -> Result<(Params, Vec<Check>), AlgebraError> {
    let n = req.n;
    let h = HModule::new(n)?;
    let ks: Vec<usize> = (1..=n).collect();
    let ls: Vec<i64> = (-2 * n as i64 - 4..=4).collect();
    let checks = verify_main_theorem(&h, &ks, &ls)?;
    Ok((params(&[("n", n.to_string()), ("l", format!("{}..={}", ls[0], ls[ls.len() - 1]))]), checks))
}

/// Integer weights of length `n`, entries `>= -1`, summing to `m`.
fn weights(n: usize, m: i64) -> Vec<Vec<i64>> {
    fn go(n: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() + 1 == n {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for x in -1..=left + 1 {
            cur.push(x);
            go(n, left - x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, m, &mut Vec::new(), &mut out);
    out
}

fn verma_weyl(req: &Request) -> Result<(Params, Vec<Check>), AlgebraError> {
    let (n, m) = (req.n, req.m);
    let mut checks = Vec::new();
    for lam in weights(n, m as i64) {
        let r = suzuki_on_verma(&lam, m)?;
        let name = format!("verma {lam:?}");
        let is_partition = lam.iter().all(|&x| x >= 0) && lam.windows(2).all(|w| w[0] >= w[1]);
        if !is_partition {
            checks.push(Check::equal(name, "vanishing off partitions", 0, r.dim));
            continue;
        }
        let p = Partition::new(lam.iter().filter(|&&x| x > 0).map(|&x| x as usize).collect())?;
        let sp = specht_matrices(&p)?;
        let expected: Vec<Scalar> =
            class_representatives(m).iter().map(|(_, w)| character(&sp, w)).collect::<Result<_, _>>()?;
        let got: Vec<Scalar> = r.character.iter().map(|(_, x)| x.clone()).collect();
        let ok = r.dim == p.count_standard_tableaux() && got == expected && r.specht_match.as_ref() == Some(&p);
        let fmt = |v: &[Scalar]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        checks.push(Check::new(
            name,
            "dim = #SYT, Specht character",
            format!("dim {} chi [{}]", p.count_standard_tableaux(), fmt(&expected)),
            format!("dim {} chi [{}]", r.dim, fmt(&got)),
            ok,
        ));
    }
    if n == 2 && m == 2 {
        let s = Scalar::from_int;
        let mp = |ps: &[&[usize]]| -> Result<Multipartition, AlgebraError> {
            Ok(Multipartition(ps.iter().map(|p| Partition::new(p.to_vec())).collect::<Result<_, _>>()?))
        };
        let r = suzuki_on_weyl(&Composition::new(vec![1, 1])?, &[s(0), s(1)], &mp(&[&[1], &[1]])?, 2)?;
        let mut ys: Vec<String> = r.y_eigenvalues[0].iter().map(|x| x.to_string()).collect();
        ys.sort();
        let ok = r.dim == 2 && r.induced_match == Some(true);
        checks.push(Check::new(
            "weyl mu=(1,1) a=(0,1)",
            "y-eigenvalues a_i",
            "dim 2 y1 {0,1}",
            format!("dim {} y1 {{{}}}", r.dim, ys.join(",")),
            ok && ys == ["0", "1"],
        ));
        let r = suzuki_on_weyl(&Composition::new(vec![2])?, &[s(0), s(0)], &mp(&[&[1, 1]])?, 2)?;
        let sign = Partition::new(vec![1, 1])?;
        let ok = r.dim == 1 && r.specht_match == Some(sign) && r.y_eigenvalues.iter().flatten().all(|x| *x == Scalar::from_int(0));
        checks.push(Check::new("weyl mu=(2) a=0", "sign, y = 0", "dim 1 sign", format!("dim {}", r.dim), ok));
    }
    Ok((params(&[("n", n.to_string()), ("m", m.to_string())]), checks))
}

fn poisson(req: &Request) -> Result<(Params, Vec<Check>), AlgebraError> {
    let n = req.n;
    let h = HModule::new(n)?;
    let out = poisson_theta_check(&h, &heisenberg_virasoro_pairs(-2))?;
    let mut checks = out.checks;
    let eps = out.epsilon.map_or("none".to_string(), |e| e.to_string());
    checks.push(Check::new("global sign", "single epsilon", "+1 or -1", &eps, out.epsilon.is_some()));
    for a in 1..=2i64 {
        let b = hayashi_bracket_affine(n, &OpSpec::Id(a), &OpSpec::Id(-a), 2)?;
        checks.push(Check::equal(format!("{{id[{a}], id[{}]}}", -a), "Heisenberg a*n", a * n as i64, b));
    }
    Ok((params(&[("n", n.to_string())]), checks))
}

fn regular_module(req: &Request) -> Result<(Params, Vec<Check>), AlgebraError> {
    let n = req.n;
    let h = HModule::new(n)?;
    let mut checks = Vec::new();
    let unit = coinvariant_reduce(&h, &TensorClass::identity_slot(&h.unit()))?;
    checks.push(Check::equal("unit", "unit maps to 1", "1", unit));
    let xs: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    checks.push(Check::equal("id[-1]", "id[r] maps to sum x_i^-r", xs.join(" + "), theta(&h, &OpSpec::Id(-1))?));
    let e11 = h.h_normal_form(&[Mode::new(0, 0, 1)]);
    let y = coinvariant_reduce(&h, &TensorClass::identity_slot(&e11))?;
    checks.push(Check::equal("E(1,1)[1]", "e_ii[1] maps to -y_i", "-y1", y));
    let seeds: Vec<u64> = (0..20).collect();
    for k in 1..=n {
        let lo = -2 * k as i64;
        for l in lo..=0 {
            checks.push(confluence_check(n, &OpSpec::T(k, l), &seeds)?);
        }
    }
    Ok((params(&[("n", n.to_string())]), checks))
}

/// Run a named suite; the name must be one of [`crate::request::SUITES`].
pub fn run_suite(name: &str, req: &Request) -> Result<(Params, Vec<Check>), AlgebraError> {
    match name {
        "pbw" => pbw(req),
        "dunkl" => dunkl(req),
        "specht" => specht(req),
        "affine-centrality" => affine_centrality(req),
        "appendix" => appendix(req),
        "main-theorem" => main_theorem(req),
        "verma-weyl" => verma_weyl(req),
        "poisson" => poisson(req),
        "regular-module" => regular_module(req),
        other => Err(AlgebraError::Invalid(format!("unknown suite {other:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_enumeration() {
        assert_eq!(weights(1, 2), vec![vec![2]]);
        let w = weights(2, 1);
        assert!(w.contains(&vec![1, 0]) && w.contains(&vec![-1, 2]));
        assert!(w.iter().all(|v| v.iter().sum::<i64>() == 1));
    }
}
