use proptest::prelude::*;

use suzuki_core::affine::{
    ahc_project, ss_vector, Affine, AffineElement, LevelForm, Mode, OpSpec, Word,
};
use suzuki_core::{ParamScalar, Scalar};

fn mode(n: usize) -> impl Strategy<Value = Mode> {
    (0..n, 0..n, -3i64..=3).prop_map(|(r, s, j)| Mode::new(r, s, j))
}

fn form() -> impl Strategy<Value = LevelForm> {
    prop_oneof![Just(LevelForm::Critical), Just(LevelForm::generic_symbolic()), Just(LevelForm::Family)]
}

fn letter_elem(alg: &Affine<ParamScalar>, m: &Mode) -> AffineElement<ParamScalar> {
    AffineElement::word(alg.n, vec![*m], ParamScalar::from(1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn jacobi_with_central_terms(
        (n, a, b, c) in (1usize..=3).prop_flat_map(|n| (Just(n), mode(n), mode(n), mode(n))),
        f in form(),
    ) {
        let alg = Affine::<ParamScalar>::new(n, f).unwrap();
        let (ea, eb, ec) = (letter_elem(&alg, &a), letter_elem(&alg, &b), letter_elem(&alg, &c));
        let ab = alg.mode_commutator(&a, &b);
        let bc = alg.mode_commutator(&b, &c);
        let ca = alg.mode_commutator(&c, &a);
        let jac = alg
            .commutator(&ab, &ec, None)
            .add(&alg.commutator(&bc, &ea, None))
            .add(&alg.commutator(&ca, &eb, None));
        prop_assert!(jac.is_zero(), "{}", jac);
    }

    #[test]
    fn identity_modes_are_central_at_critical_level(
        (n, w) in (1usize..=3).prop_flat_map(|n| (Just(n), prop::collection::vec(mode(n), 0..=3))),
        a in -3i64..=3,
    ) {
        let alg = Affine::<Scalar>::new(n, LevelForm::Critical).unwrap();
        let id = AffineElement::id_mode(n, a);
        let x = alg.normal_order_mod(&w, None);
        prop_assert!(alg.commutator(&id, &x, None).is_zero());
    }

    #[test]
    fn ahc_projection_is_multiplicative(
        (n, p, q) in (2usize..=3).prop_flat_map(|n| (Just(n), balanced(n), balanced(n))),
    ) {
        let alg = Affine::<Scalar>::new(n, LevelForm::Critical).unwrap();
        let a = alg.normal_order_mod(&p, None);
        let b = alg.normal_order_mod(&q, None);
        let ab = alg.mul(&a, &b, None);
        let lhs = ahc_project(&alg, &ab).unwrap();
        let rhs = alg.mul(&ahc_project(&alg, &a).unwrap(), &ahc_project(&alg, &b).unwrap(), None);
        prop_assert_eq!(lhs, rhs);
    }
}

/// Words of zero torus weight: pairs `e_rs[i] e_sr[j]` in random order.
fn balanced(n: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..n, 0..n, -2i64..=2, -2i64..=2, any::<bool>()), 1..=2).prop_map(|pairs| {
        let mut w = Vec::new();
        for (r, s, i, j, flip) in pairs {
            let (x, y) = (Mode::new(r, s, i), Mode::new(s, r, j));
            if flip {
                w.extend([y, x]);
            } else {
                w.extend([x, y]);
            }
        }
        w
    })
}

#[test]
fn quadratic_operator_two_routes() {
    for n in 1..=3 {
        let alg = Affine::<Scalar>::new(n, LevelForm::Critical).unwrap();
        let t2 = ss_vector(2, n).unwrap();
        let id2 = AffineElement::id_mode(n, -2);
        for l in -5..=2 {
            for depth in [2, 3] {
                let lhs = alg.field_coefficient(&t2, l, depth).unwrap();
                let rhs = alg
                    .quadratic_l_op(-l - 2, depth)
                    .scale(&Scalar::from_int(2))
                    .add(&alg.field_coefficient(&id2, l, depth).unwrap());
                assert_eq!(lhs, rhs, "n={n} l={l} depth={depth}");
                assert_eq!(alg.materialize(&OpSpec::T(2, l), depth).unwrap(), lhs);
            }
        }
    }
}

#[test]
fn family_form_degenerates_to_critical() {
    use suzuki_core::ParamPoint;
    let at0 = ParamPoint { t: Some(Scalar::from_int(0)), ..Default::default() };
    for n in 1..=3 {
        let fam = Affine::<ParamScalar>::new(n, LevelForm::Family).unwrap();
        let crit = Affine::<Scalar>::new(n, LevelForm::Critical).unwrap();
        for r in 0..n {
            for s in 0..n {
                for u in 0..n {
                    for v in 0..n {
                        for i in -2..=2 {
                            let (a, b) = (Mode::new(r, s, i), Mode::new(u, v, -i));
                            let lhs = fam.mode_commutator(&a, &b).specialize(&at0).to_scalar().unwrap();
                            assert_eq!(lhs, crit.mode_commutator(&a, &b));
                        }
                    }
                }
            }
        }
    }
}
