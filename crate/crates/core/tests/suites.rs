use towerlab::arith::{Rat, RationalFunction, RingContext, Scalar};
use towerlab::report::Check;
use towerlab::tower::{Algebra, TowerKind};
use towerlab::verify;

fn failures(checks: &[Check]) -> Vec<String> {
    checks
        .iter()
        .filter(|c| !c.pass)
        .map(|c| format!("{} {:?} {}", c.name, c.vertex, c.witness))
        .collect()
}

fn run_all<K: Scalar>(kind: TowerKind, n: usize, ctx: &RingContext) -> Vec<String> {
    let alg = Algebra::<K>::new(kind, n, ctx).unwrap();
    let mut checks = verify::dimension_checks(&alg);
    checks.extend(verify::relation_checks(&alg).unwrap());
    checks.extend(verify::framework_checks::<K>(kind, n, ctx).unwrap());
    checks.extend(verify::jm_checks::<K>(kind, n, ctx).unwrap());
    checks.extend(verify::module_checks(&alg).unwrap());
    checks.extend(verify::gz_checks(&alg).unwrap());
    checks.extend(verify::branching_checks::<K>(kind, n, ctx).unwrap());
    if kind == TowerKind::TemperleyLieb {
        checks.extend(verify::bridge_checks::<K>(n, ctx).unwrap());
    }
    assert!(checks.len() > 10);
    failures(&checks)
}

#[test]
fn symbolic_small_ranks_pass_everything() {
    for kind in TowerKind::ALL {
        for n in 1..=3 {
            let ctx = RingContext::symbolic(kind.variables()).unwrap();
            let f = run_all::<RationalFunction>(kind, n, &ctx);
            assert!(f.is_empty(), "{kind} n={n}: {f:#?}");
        }
    }
}

#[test]
fn specialized_rank_four_passes_everything() {
    for (kind, vals) in [
        (TowerKind::Brauer, vec![(7, 3)]),
        (TowerKind::TemperleyLieb, vec![(5, 3)]),
        (TowerKind::Hecke, vec![(2, 1)]),
        (TowerKind::Symmetric, vec![]),
        (TowerKind::Bmw, vec![(5, 3), (7, 2)]),
    ] {
        let values = vals.iter().map(|&(a, b)| num_rational::BigRational::new(a.into(), b.into())).collect();
        let ctx = RingContext::specialized(kind.variables(), values).unwrap();
        let f = run_all::<Rat>(kind, 4, &ctx);
        assert!(f.is_empty(), "{kind} n=4: {f:#?}");
    }
}
