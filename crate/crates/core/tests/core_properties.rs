use proptest::prelude::*;

use suzuki_core::poly::{complete_homogeneous, power_sum, ParamPoly};
use suzuki_core::symgroup::Permutation;
use suzuki_core::{CommPoly, Param, ParamPoint, ParamScalar, Scalar};

fn param_poly() -> impl Strategy<Value = ParamScalar> {
    prop::collection::vec(((0u32..3, 0u32..3, 0u32..3), -5i64..=5), 0..5).prop_map(|terms| {
        let mut out = ParamScalar::from(0);
        for ((a, b, c), k) in terms {
            let mut mono = ParamScalar::from(k);
            for (p, e) in [(Param::T, a), (Param::C, b), (Param::Kappa, c)] {
                for _ in 0..e {
                    mono = &mono * &ParamScalar::var(p);
                }
            }
            out += &mono;
        }
        out
    })
}

fn rational() -> impl Strategy<Value = Scalar> {
    (-7i64..=7, 1i64..=5).prop_map(|(n, d)| Scalar::new(n, d))
}

proptest! {
    #[test]
    fn specialization_is_a_homomorphism(a in param_poly(), b in param_poly(), t in rational(), c in rational(), k in rational()) {
        let pt = ParamPoint::all(t, c, k);
        let (sa, sb) = (a.specialize(&pt), b.specialize(&pt));
        prop_assert_eq!((&a * &b).specialize(&pt), &sa * &sb);
        prop_assert_eq!((&a + &b).specialize(&pt), &sa + &sb);
        prop_assert_eq!((&a - &b).specialize(&pt), &sa - &sb);
    }

    #[test]
    fn partial_specialization_composes(a in param_poly(), t in rational(), c in rational()) {
        let only_t = ParamPoint { t: Some(t.clone()), ..Default::default() };
        let full = ParamPoint { t: Some(t), c: Some(c), kappa: None };
        prop_assert_eq!(a.specialize(&only_t).specialize(&full), a.specialize(&full));
    }
}

#[test]
fn power_sums_are_symmetric() {
    for m in 1..=4 {
        for a in 0..=4 {
            for b in 0..=2 {
                let p: CommPoly<Scalar> = power_sum(a, b, m);
                for w in Permutation::all(m) {
                    assert_eq!(p.permute(w.as_slice()), p, "p_{a},{b} under {w:?}");
                }
            }
        }
    }
}

#[test]
fn complete_homogeneous_telescopes() {
    let m = 3;
    for r in 0..=6i64 {
        for i in 1..=m {
            for j in i + 1..=m {
                let xi: ParamPoly = CommPoly::x(m, i).unwrap();
                let xj: ParamPoly = CommPoly::x(m, j).unwrap();
                let c = complete_homogeneous::<ParamScalar>(r, i, j, m).unwrap();
                let lhs = xi.sub(&xj).unwrap().mul(&c).unwrap();
                let rhs = xi.pow(r as u32 + 1).sub(&xj.pow(r as u32 + 1)).unwrap();
                assert_eq!(lhs, rhs, "r={r} i={i} j={j}");
            }
        }
    }
}
