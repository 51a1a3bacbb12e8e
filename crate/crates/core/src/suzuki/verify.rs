//! Verification suites for `Θ`: generator formulas, `T̂_{k,l}` normal forms, appendix estimates.

use num::One;
use rayon::prelude::*;

use crate::affine::{AffineElement, Mode, OpSpec, Word};
use crate::cherednik::{theta_closed_form, Cherednik, CherednikElement, ThetaTag};
use crate::error::Result;
use crate::poly::power_sum;
use crate::report::Check;
use crate::scalar::Scalar;

use super::hmodule::{HElement, HModule, Strategy};
use super::reduce::{op_on_vacuum, theta, theta_of};

fn p(a: u32, b: u32, n: usize) -> CherednikElement<Scalar> {
    CherednikElement::from_poly(&power_sum(a, b, n))
}

fn signed(e: usize) -> Scalar {
    if e.is_multiple_of(2) {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}

/// Which statement of the generator theorem covers `T_{k,l}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cell {
    Vanishing,
    FirstOrder,
    SecondOrder,
    Lowest,
    Symbol(i64),
    Uncovered,
}

pub fn classify(k: usize, l: i64) -> Cell {
    let lo = -2 * k as i64;
    if l < lo {
        Cell::Vanishing
    } else if k == 1 && l >= 0 {
        Cell::FirstOrder
    } else if k == 2 && l >= -2 {
        Cell::SecondOrder
    } else if l == lo {
        Cell::Lowest
    } else if l >= lo + 2 {
        Cell::Symbol(l - lo - 2)
    } else {
        Cell::Uncovered
    }
}

/// One cell of the generator theorem; every image must also be central at `t = 0`.
pub fn main_theorem_cell(h: &HModule, k: usize, l: i64) -> Result<Check> {
    let n = h.n;
    let z = theta(h, &OpSpec::T(k, l))?;
    let central = Cherednik::at_zero(n).is_central(&z);
    let name = format!("T{k},{l}");
    let (anchor, expected, got) = match classify(k, l) {
        Cell::Vanishing => ("(i) vanishing below -2k", CherednikElement::zero(n), z.clone()),
        Cell::FirstOrder => ("(ii) p_{l+1,0}", theta_closed_form(ThetaTag::T1, l, 1, n)?, z.clone()),
        Cell::SecondOrder => ("(iii) quadratic generator", theta_closed_form(ThetaTag::T2, l, 2, n)?, z.clone()),
        Cell::Lowest => ("(iv) (-1)^k p_{0,k}", theta_closed_form(ThetaTag::TkMin, l, k, n)?, z.clone()),
        Cell::Symbol(b) => ("(v) symbol (-1)^{k-1} k p_{b+1,k-1}", expected_symbol(k, b, n), z.top_degree_part()),
        Cell::Uncovered => {
            return Ok(Check::new(name, "centrality of the image", "a central element", &z, central));
        }
    };
    let ok = expected == got && central;
    Ok(Check::new(name, anchor, &expected, &got, ok))
}

fn expected_symbol(k: usize, b: i64, n: usize) -> CherednikElement<Scalar> {
    p(b as u32 + 1, k as u32 - 1, n).scale(&(signed(k - 1) * Scalar::from_int(k as i64)))
}

/// Top PBW-degree part of `Θ(T_{k,-2k+2+b})` against `(-1)^{k-1} k p_{b+1,k-1}`.
pub fn symbol_cell(h: &HModule, k: usize, b: i64) -> Result<Check> {
    let l = -2 * k as i64 + 2 + b;
    let z = theta(h, &OpSpec::T(k, l))?;
    Ok(Check::equal(
        format!("sigma T{k},{l}"),
        "(v) symbol (-1)^{k-1} k p_{b+1,k-1}",
        expected_symbol(k, b, h.n),
        z.top_degree_part(),
    ))
}

/// Cells `(k, l)` over the given ranges with `k <= n`.
pub fn verify_main_theorem(h: &HModule, ks: &[usize], ls: &[i64]) -> Result<Vec<Check>> {
    let cells: Vec<(usize, i64)> = ks
        .iter()
        .filter(|&&k| k >= 1 && k <= h.n)
        .flat_map(|&k| ls.iter().map(move |&l| (k, l)))
        .collect();
    cells.par_iter().map(|&(k, l)| main_theorem_cell(h, k, l)).collect()
}

fn diag_word(i: usize, j: i64, times: usize) -> Word {
    vec![Mode::new(i, i, j); times]
}

/// `T̂_{k,l} = T_{k,l}·1_H` against the normal-form predictions.
pub fn tk_hat_check(h: &HModule, k: usize, l: i64) -> Result<Check> {
    let n = h.n;
    let hat = op_on_vacuum(h, &OpSpec::T(k, l))?;
    let lo = -2 * k as i64;
    let name = format!("That{k},{l}");
    if l < lo {
        return Ok(Check::equal(name, "vanishing below -2k", HElement::zero(n), hat));
    }
    if l == lo {
        let mut exp = HElement::zero(n);
        for i in 0..n {
            exp = exp.add(&h.h_normal_form(&diag_word(i, 1, k)));
        }
        return Ok(Check::equal(name, "lowest coefficient is P_{k,-2k}", exp, hat));
    }
    if l == lo + 1 {
        return Ok(Check::skipped(name, "no statement at l = -2k+1", ""));
    }
    let b = l - lo - 2;
    let mut lead = HElement::zero(n);
    for i in 0..n {
        let mut w = vec![Mode::new(i, i, -b - 1)];
        w.extend(diag_word(i, 1, k - 1));
        lead = lead.add(&h.h_normal_form(&w));
    }
    let lead = lead.scale(&Scalar::from_int(k as i64));
    let rest = hat.sub(&lead);
    let bound = k as i64 + b - 1;
    let deg = rest.degree();
    let ok = deg.is_none_or(|d| d <= bound);
    let got = deg.map_or("remainder 0".to_string(), |d| format!("remainder height {d}"));
    Ok(Check::new(name, "symbol k Σ e_ii[-b-1] e_ii[1]^{k-1}", format!("height <= {bound}"), got, ok))
}

/// `C_l·1_H` for a monomial `C = X_1[-j_1]⋯X_a[-j_a]` against the appendix degree bounds.
pub fn estimate_check(h: &HModule, c: &[Mode], l: i64) -> Result<Check> {
    let n = h.n;
    let alg = h.affine();
    let k: i64 = c.iter().map(|m| -m.j).sum();
    let a = c.len() as i64;
    let vec = alg.normal_order_mod(c, Some(0));
    let op: AffineElement<Scalar> = alg.field_coefficient(&vec, l, 2)?;
    let hat = h.apply(&op);
    let deg = hat.degree();
    let base = -(k + a);
    let (bound, rule) = if l < base {
        (None, "vanishing below -(k+a)")
    } else if l == base {
        (Some(a), "degree <= a")
    } else if l == base + 1 {
        (Some(a - 1), "degree <= a-1")
    } else {
        (Some(a + l - base - 2), "degree <= a+p")
    };
    let ok = match (bound, deg) {
        (_, None) => true,
        (None, Some(_)) => false,
        (Some(b), Some(d)) => d <= b,
    };
    let expected = bound.map_or("0".to_string(), |b| format!("height <= {b}"));
    let got = deg.map_or("0".to_string(), |d| format!("height {d}"));
    let name = format!("{}_{l} (n={n})", crate::affine::render_affine_word(c));
    Ok(Check::new(name, rule, expected, got, ok))
}

/// Monomials `X_1[-j_1]⋯X_a[-j_a]` in PBW order with `1 <= a <= max_a`, `Σ j_i <= max_k`.
pub fn estimate_monomials(n: usize, max_a: usize, max_k: i64) -> Vec<Word> {
    let mut letters = Vec::new();
    for j in 1..=max_k {
        for r in 0..n {
            for s in 0..n {
                letters.push(Mode::new(r, s, -j));
            }
        }
    }
    letters.sort();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(letters: &[Mode], start: usize, left_a: usize, left_k: i64, cur: &mut Word, out: &mut Vec<Word>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if left_a == 0 {
            return;
        }
        for i in start..letters.len() {
            let j = -letters[i].j;
            if j > left_k {
                continue;
            }
            cur.push(letters[i]);
            go(letters, i, left_a - 1, left_k - j, cur, out);
            cur.pop();
        }
    }
    go(&letters, 0, max_a, max_k, &mut cur, &mut out);
    out
}

/// `Θ(T_{2,l}) = 2Θ(L_{-l-2}) + (l+1)Θ(id[-l-2])`.
pub fn two_route_t2(h: &HModule, l: i64) -> Result<Check> {
    let direct = theta(h, &OpSpec::T(2, l))?;
    let r = -l - 2;
    let via = theta(h, &OpSpec::L(r))?
        .scale(&Scalar::from_int(2))
        .add(&theta(h, &OpSpec::Id(r))?.scale(&Scalar::from_int(l + 1)));
    Ok(Check::equal(format!("T2,{l} two routes"), "T_2 = 2L + id[-2]", via, direct))
}

/// `Θ(op)` is unchanged under randomized peeling strategies.
pub fn confluence_check(n: usize, op: &OpSpec, seeds: &[u64]) -> Result<Check> {
    let base = theta(&HModule::new(n)?, op)?;
    let mut bad = Vec::new();
    for &s in seeds {
        let h = HModule::with_strategy(n, Strategy::Shuffled(s))?;
        let a = h.affine().materialize(op, 2)?;
        if theta_of(&h, &a)? != base {
            bad.push(s);
        }
    }
    let got = if bad.is_empty() { base.to_string() } else { format!("differs for seeds {bad:?}") };
    let ok = bad.is_empty();
    Ok(Check::new(format!("confluence {op}"), "representative independence", &base, got, ok))
}
