//! Acceptance suite: one line per criterion, nonzero exit if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num::{One, Zero};

use suzuki_core::affine::{centrality_check, generic_level_commutator, hayashi_bracket_affine, Mode, OpSpec};
use suzuki_core::cherednik::{
    default_central_elements, dunkl_apply, pbw_dimension_check, simple_quotient, Cherednik,
    GenVerma,
};
use suzuki_core::poly::CommPoly;
use suzuki_core::report::{all_pass, Check};
use suzuki_core::suzuki::{
    coinvariant_reduce, estimate_check, estimate_monomials, heisenberg_virasoro_pairs, main_theorem_cell,
    poisson_theta_check, suzuki_on_verma, suzuki_on_weyl, symbol_cell, theta, tk_hat_check, HModule, TensorClass,
};
use suzuki_core::symgroup::{
    character, induce_specht, specht_matrices, Composition, Multipartition, Partition, Permutation,
};
use suzuki_core::{ParamScalar, Scalar};

/// Wall-clock budgets.
const CELL_BUDGET_T1: Duration = Duration::from_secs(5);
const CELL_BUDGET_T2: Duration = Duration::from_secs(30);
const TOTAL_BUDGET_LOWEST: Duration = Duration::from_secs(120);
const TOTAL_BUDGET_ESTIMATES: Duration = Duration::from_secs(300);

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(checks: &[Check], extra_ok: bool, note: &str) -> Outcome {
    let failed: Vec<&Check> = checks.iter().filter(|c| c.failed()).collect();
    let mut detail = format!("{} checks, {} failed", checks.len(), failed.len());
    if let Some(c) = failed.first() {
        detail.push_str(&format!("; first failure {}: expected {} got {}", c.name, c.expected, c.got));
    }
    if !note.is_empty() {
        detail.push_str("; ");
        detail.push_str(note);
    }
    Outcome { ok: all_pass(checks) && extra_ok, detail }
}

fn timed_cell(h: &HModule, k: usize, l: i64, budget: Duration) -> (Check, bool) {
    let t = Instant::now();
    let c = main_theorem_cell(h, k, l).expect("cell computes");
    (c, t.elapsed() <= budget)
}

fn c1_first_order() -> Outcome {
    let mut checks = Vec::new();
    let mut fast = true;
    for n in [2, 3] {
        let h = HModule::new(n).unwrap();
        for l in 0..=4 {
            let (c, ok) = timed_cell(&h, 1, l, CELL_BUDGET_T1);
            fast &= ok;
            checks.push(c);
        }
    }
    outcome(&checks, fast, if fast { "" } else { "cell over budget" })
}

fn c2_second_order() -> Outcome {
    let mut checks = Vec::new();
    let mut fast = true;
    for n in [2, 3] {
        let h = HModule::new(n).unwrap();
        for l in -2..=2 {
            let (c, ok) = timed_cell(&h, 2, l, CELL_BUDGET_T2);
            fast &= ok;
            checks.push(c);
        }
    }
    let h = HModule::new(2).unwrap();
    let sample = theta(&h, &OpSpec::T(2, -2)).unwrap().to_string();
    checks.push(Check::equal("sample n=2 l=-2", "(iii)", "-2*x1*y1 - 2*x2*y2 + 2 + 2*s(1,2)", sample));
    outcome(&checks, fast, if fast { "" } else { "cell over budget" })
}

fn c3_vanishing_and_lowest() -> Outcome {
    let start = Instant::now();
    let mut checks = Vec::new();
    for n in 1..=3 {
        let h = HModule::new(n).unwrap();
        for k in 1..=n {
            let lo = -2 * k as i64;
            for l in lo - 4..=lo {
                checks.push(main_theorem_cell(&h, k, l).unwrap());
            }
        }
    }
    let fast = start.elapsed() <= TOTAL_BUDGET_LOWEST;
    outcome(&checks, fast, if fast { "" } else { "over total budget" })
}

fn c4_symbols() -> Outcome {
    let mut checks = Vec::new();
    for n in 1..=3 {
        let h = HModule::new(n).unwrap();
        for k in 1..=n {
            for b in 0..=1 {
                let mut c = symbol_cell(&h, k, b).unwrap();
                c.name = format!("n={n} {}", c.name);
                checks.push(c);
            }
        }
    }
    outcome(&checks, true, "")
}

fn c5_tk_hat() -> Outcome {
    let mut checks = Vec::new();
    for n in 1..=3 {
        let h = HModule::new(n).unwrap();
        for k in 1..=n {
            let lo = -2 * k as i64;
            for l in lo - 2..=lo + 4 {
                let mut c = tk_hat_check(&h, k, l).unwrap();
                c.name = format!("n={n} {}", c.name);
                checks.push(c);
            }
        }
    }
    outcome(&checks, true, "")
}

fn c6_estimates() -> Outcome {
    let start = Instant::now();
    let mut checks = Vec::new();
    for n in 1..=2 {
        let h = HModule::new(n).unwrap();
        for c in estimate_monomials(n, 3, 4) {
            let k: i64 = c.iter().map(|m| -m.j).sum();
            let base = -(k + c.len() as i64);
            for l in base - 2..=base + 4 {
                checks.push(estimate_check(&h, &c, l).unwrap());
            }
        }
    }
    let fast = start.elapsed() <= TOTAL_BUDGET_ESTIMATES;
    outcome(&checks, fast, if fast { "" } else { "over total budget" })
}

fn c7_centrality() -> Outcome {
    let trunc = 3;
    let mut checks = Vec::new();
    for n in 1..=3usize {
        let mut modes = Vec::new();
        for r in 0..n {
            for s in 0..n {
                for j in -2..=2 {
                    modes.push(Mode::new(r, s, j));
                }
            }
        }
        for k in 1..=n {
            let lo = -2 * k as i64;
            for l in lo - 2..=2 {
                let op = OpSpec::T(k, l);
                let bad: Vec<String> = modes
                    .iter()
                    .filter(|x| !centrality_check(n, &op, x, trunc).unwrap())
                    .map(|x| x.to_string())
                    .collect();
                let ok = bad.is_empty();
                checks.push(Check::new(format!("n={n} {op}"), "critical centrality", "central", bad.join(","), ok));
            }
        }
    }
    let generic = generic_level_commutator(2, &OpSpec::T(2, 0), &Mode::new(0, 1, 1), trunc).unwrap();
    let witnessed = generic.is_critical_multiple();
    checks.push(Check::new(
        "generic kappa T2,0 vs E(1,2)[1]",
        "nonzero kappa+n multiple",
        "nonzero, vanishing at kappa = -n",
        &generic.commutator,
        witnessed,
    ));
    outcome(&checks, true, "")
}

fn c8_cherednik_kernel() -> Outcome {
    let mut checks = Vec::new();
    for m in 1..=3 {
        for d in 0..=4 {
            let pc = pbw_dimension_check(m, d, Scalar::new(2, 3), Scalar::new(-1, 5));
            checks.push(Check::new(format!("pbw m={m} d={d}"), "PBW basis count", pc.expected, pc.rank, pc.holds()));
        }
    }
    let pc = pbw_dimension_check(2, 2, Scalar::one(), Scalar::one());
    checks.push(Check::equal("pbw m=2 d=2", "15 * 2!", 30, pc.rank));
    for m in 2..=4 {
        let alg = Cherednik::new(m, ParamScalar::t(), ParamScalar::c());
        let mut bad = 0usize;
        let mut total = 0usize;
        for e in suzuki_core::cherednik::monomials_up_to(m, 5) {
            let f = CommPoly::monomial(m, &e, &vec![0; m], ParamScalar::one());
            for i in 1..=m {
                for j in i + 1..=m {
                    let a = dunkl_apply(&alg, i, &dunkl_apply(&alg, j, &f).unwrap()).unwrap();
                    let b = dunkl_apply(&alg, j, &dunkl_apply(&alg, i, &f).unwrap()).unwrap();
                    total += 1;
                    if !a.sub(&b).unwrap().is_zero() {
                        bad += 1;
                    }
                }
            }
        }
        checks.push(Check::new(format!("dunkl m={m}"), "[D_i, D_j] = 0", 0, bad, bad == 0 && total > 0));
    }
    outcome(&checks, true, "")
}

fn c9_regular_module() -> Outcome {
    let mut checks = Vec::new();
    for n in 1..=3 {
        let h = HModule::new(n).unwrap();
        let unit = coinvariant_reduce(&h, &TensorClass::identity_slot(&h.unit())).unwrap();
        checks.push(Check::equal(format!("n={n} unit"), "unit maps to 1", "1", unit));
        let id = theta(&h, &OpSpec::Id(-1)).unwrap();
        let xs: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        checks.push(Check::equal(format!("n={n} id[-1]"), "id[r] maps to sum x_i^-r", xs.join(" + "), id));
        let e11 = h.h_normal_form(&[Mode::new(0, 0, 1)]);
        let y = coinvariant_reduce(&h, &TensorClass::identity_slot(&e11)).unwrap();
        checks.push(Check::equal(format!("n={n} e11[1]"), "e_ii[1] maps to -y_i", "-y1", y));
    }
    outcome(&checks, true, "")
}

fn syt(shape: &[usize]) -> usize {
    Partition::new(shape.to_vec()).unwrap().count_standard_tableaux()
}

fn weights(n: usize, m: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
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
    go(n, m, &mut Vec::new(), &mut out);
    out
}

fn c10_verma_weyl() -> Outcome {
    let mut checks = Vec::new();
    for n in 1..=3usize {
        for m in 1..=4usize {
            for lam in weights(n, m as i64) {
                let r = suzuki_on_verma(&lam, m).unwrap();
                let is_partition = lam.iter().all(|&x| x >= 0) && lam.windows(2).all(|w| w[0] >= w[1]);
                let name = format!("verma n={n} m={m} {lam:?}");
                if is_partition {
                    let shape: Vec<usize> = lam.iter().filter(|&&x| x > 0).map(|&x| x as usize).collect();
                    let p = Partition::new(shape.clone()).unwrap();
                    let sp = specht_matrices(&p).unwrap();
                    let chi_ok = r
                        .character
                        .iter()
                        .zip(suzuki_core::suzuki::class_representatives(m))
                        .all(|((_, x), (_, w))| &character(&sp, &w).unwrap() == x);
                    let ok = r.dim == syt(&shape) && chi_ok && r.specht_match.as_ref() == Some(&p);
                    checks.push(Check::new(name, "dim = #SYT, Specht character", syt(&shape), r.dim, ok));
                } else {
                    checks.push(Check::equal(name, "vanishing off partitions", 0, r.dim));
                }
            }
        }
    }
    let s = Scalar::from_int;
    let mp = |ps: &[&[usize]]| Multipartition(ps.iter().map(|p| Partition::new(p.to_vec()).unwrap()).collect());
    let mu = Composition::new(vec![1, 1]).unwrap();
    let r = suzuki_on_weyl(&mu, &[s(0), s(1)], &mp(&[&[1], &[1]]), 2).unwrap();
    let mut y1 = r.y_eigenvalues[0].clone();
    y1.sort();
    let ok = r.dim == 2 && r.induced_match == Some(true) && y1 == vec![s(0), s(1)];
    checks.push(Check::new("weyl (1,1) a=(0,1)", "y-eigenvalues a_i", "dim 2, y {0,1}", format!("dim {}, y {y1:?}", r.dim), ok));
    let mu = Composition::new(vec![2]).unwrap();
    let r = suzuki_on_weyl(&mu, &[s(0), s(0)], &mp(&[&[1, 1]]), 2).unwrap();
    let sign = Partition::new(vec![1, 1]).unwrap();
    let ok = r.dim == 1 && r.specht_match == Some(sign) && r.y_eigenvalues.iter().all(|v| v.iter().all(|x| x.is_zero()));
    checks.push(Check::new("weyl (2) a=0", "sign, y = 0", "dim 1 sign", format!("dim {}", r.dim), ok));
    let mu = Composition::new(vec![1, 1]).unwrap();
    let r = suzuki_on_weyl(&mu, &[s(0), s(1)], &mp(&[&[2], &[1]]), 2).unwrap();
    checks.push(Check::equal("weyl wrong size type", "vanishing", 0, r.dim));
    outcome(&checks, true, "")
}

fn c11_poisson() -> Outcome {
    let n = 2;
    let h = HModule::new(n).unwrap();
    let pairs = heisenberg_virasoro_pairs(-2);
    let out = poisson_theta_check(&h, &pairs).unwrap();
    let mut checks = out.checks.clone();
    let nontrivial = checks.iter().filter(|c| c.expected != "0").count();
    for a in 1..=2i64 {
        let b = hayashi_bracket_affine(n, &OpSpec::Id(a), &OpSpec::Id(-a), 2).unwrap();
        checks.push(Check::equal(format!("{{id[{a}], id[{}]}}", -a), "Heisenberg a*n", a * n as i64, b));
    }
    let note = format!("epsilon {:?}, {nontrivial} nonzero pairs", out.epsilon);
    outcome(&checks, out.epsilon.is_some() && pairs.len() >= 5, &note)
}

fn c12_simple_quotient() -> Outcome {
    let m = 2;
    let nu = Composition::new(vec![1, 1]).unwrap();
    let one = Partition::new(vec![1]).unwrap();
    let lam = Multipartition(vec![one.clone(), one]);
    let module = induce_specht(&nu, &lam, &[Scalar::zero(), Scalar::one()]).unwrap();
    let v = GenVerma::new(Cherednik::at_zero(m), module, 4).unwrap();
    let zs = default_central_elements(&v.alg).unwrap();
    let vals = [Scalar::new(3, 7), Scalar::new(-5, 11)];
    let q = simple_quotient(&v, &zs.into_iter().zip(vals).collect::<Vec<_>>()).unwrap();
    let mut checks = vec![Check::equal("dimension", "m!", 2, q.dim)];
    for w in Permutation::all(m) {
        let expected = if w.is_identity() { 2 } else { 0 };
        checks.push(Check::equal(format!("character {w:?}"), "regular character", expected, character(&q, &w).unwrap()));
    }
    outcome(&checks, q.satisfies_relations(), "")
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("1 main theorem (ii)", c1_first_order),
        ("2 main theorem (iii)", c2_second_order),
        ("3 main theorem (i),(iv)", c3_vanishing_and_lowest),
        ("4 main theorem (v) symbols", c4_symbols),
        ("5 T-hat normal forms", c5_tk_hat),
        ("6 appendix estimates", c6_estimates),
        ("7 affine centrality", c7_centrality),
        ("8 Cherednik kernel", c8_cherednik_kernel),
        ("9 regular module", c9_regular_module),
        ("10 Verma/Weyl", c10_verma_weyl),
        ("11 Poisson", c11_poisson),
        ("12 simple quotient", c12_simple_quotient),
    ];
    let mut failures = 0;
    for (name, f) in criteria {
        let t = Instant::now();
        let o = f();
        let status = if o.ok { "PASS" } else { "FAIL" };
        if !o.ok {
            failures += 1;
        }
        println!("criterion {name}: {status} ({}) [{} ms]", o.detail, t.elapsed().as_millis());
    }
    println!("acceptance: {} of 12 criteria passed", 12 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
