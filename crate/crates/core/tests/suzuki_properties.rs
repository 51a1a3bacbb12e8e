use suzuki_core::affine::OpSpec;
use suzuki_core::report::Status;
use suzuki_core::suzuki::{
    confluence_check, estimate_check, estimate_monomials, suzuki_on_verma, two_route_t2, verify_main_theorem, HModule,
};
use suzuki_core::symgroup::Partition;

fn grid_ops(n: usize) -> Vec<OpSpec> {
    let mut ops = Vec::new();
    for k in 1..=n {
        let lo = -2 * k as i64;
        for l in lo - 2..=2 {
            ops.push(OpSpec::T(k, l));
        }
    }
    ops
}

#[test]
fn reduction_is_confluent_under_random_strategies() {
    let seeds: Vec<u64> = (0..20).map(|i| 0x9e37_79b9 ^ (i * 7919)).collect();
    for n in 2..=3 {
        for op in grid_ops(n) {
            let c = confluence_check(n, &op, &seeds).unwrap();
            assert_eq!(c.status, Status::Pass, "{c:?}");
        }
    }
}

#[test]
fn main_theorem_grid_with_central_images() {
    for n in 1..=3 {
        let h = HModule::new(n).unwrap();
        let ks: Vec<usize> = (1..=n).collect();
        let ls: Vec<i64> = (-2 * n as i64 - 4..=4).collect();
        for c in verify_main_theorem(&h, &ks, &ls).unwrap() {
            assert_ne!(c.status, Status::Fail, "n={n} {c:?}");
        }
    }
}

#[test]
fn second_order_two_routes() {
    for n in 2..=3 {
        let h = HModule::new(n).unwrap();
        for l in -4..=2 {
            let c = two_route_t2(&h, l).unwrap();
            assert_eq!(c.status, Status::Pass, "n={n} {c:?}");
        }
    }
}

#[test]
fn verma_dimension_counts_tableaux() {
    for n in 1..=3usize {
        for m in 1..=4usize {
            let mut lam = vec![0i64; n];
            loop {
                if lam.iter().sum::<i64>() == m as i64 {
                    let dim = suzuki_on_verma(&lam, m).unwrap().dim;
                    let expected = match Partition::from_weight(&lam) {
                        Ok(p) => Partition::new(p.shape()).unwrap().count_standard_tableaux(),
                        Err(_) => 0,
                    };
                    assert_eq!(dim, expected, "lambda={lam:?} m={m}");
                }
                let mut i = 0;
                while i < n && lam[i] == m as i64 {
                    lam[i] = 0;
                    i += 1;
                }
                if i == n {
                    break;
                }
                lam[i] += 1;
            }
        }
    }
}

#[test]
fn appendix_estimates_small() {
    let h = HModule::new(2).unwrap();
    for c in estimate_monomials(2, 2, 3) {
        let k: i64 = c.iter().map(|m| -m.j).sum();
        let base = -(k + c.len() as i64);
        for l in base - 1..=base + 3 {
            let chk = estimate_check(&h, &c, l).unwrap();
            assert_eq!(chk.status, Status::Pass, "{chk:?}");
        }
    }
}
