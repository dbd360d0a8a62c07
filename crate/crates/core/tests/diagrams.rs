use proptest::prelude::*;

use towerlab::diagrams::BrauerDiagram;
use towerlab::perm::Perm;

fn compose3(a: &BrauerDiagram, b: &BrauerDiagram, c: &BrauerDiagram) -> [(BrauerDiagram, usize); 2] {
    let (ab, r1) = a.compose(b).unwrap();
    let (left, r2) = ab.compose(c).unwrap();
    let (bc, r3) = b.compose(c).unwrap();
    let (right, r4) = a.compose(&bc).unwrap();
    [(left, r1 + r2), (right, r3 + r4)]
}

#[test]
fn associativity_is_exhaustive_at_small_rank() {
    for n in 2..=3 {
        let all = BrauerDiagram::enumerate(n);
        for a in &all {
            for b in &all {
                for c in &all {
                    let [l, r] = compose3(a, b, c);
                    assert_eq!(l, r, "{a} {b} {c}");
                }
            }
        }
    }
}

#[test]
fn enumeration_counts() {
    let double_factorial = [1, 1, 3, 15, 105, 945];
    let catalan = [1, 1, 2, 5, 14, 42, 132];
    for n in 1..=5 {
        assert_eq!(BrauerDiagram::enumerate(n).len(), double_factorial[n]);
    }
    for n in 1..=6 {
        let planar = BrauerDiagram::enumerate_planar(n);
        assert_eq!(planar.len(), catalan[n]);
        assert!(planar.iter().all(BrauerDiagram::is_planar));
    }
}

#[test]
fn planar_diagrams_are_closed_under_composition() {
    let planar = BrauerDiagram::enumerate_planar(4);
    for a in &planar {
        for b in &planar {
            assert!(a.compose(b).unwrap().0.is_planar());
        }
    }
}

#[test]
fn permutation_diagrams_compose_as_permutations() {
    let perms = Perm::all(4);
    for v in &perms {
        for w in &perms {
            let (d, loops) = BrauerDiagram::from_perm(v).compose(&BrauerDiagram::from_perm(w)).unwrap();
            assert_eq!(loops, 0);
            assert_eq!(d, BrauerDiagram::from_perm(&v.compose(w)));
            assert_eq!(d.to_perm(), Some(v.compose(w)));
        }
    }
}

#[test]
fn flip_reverses_products() {
    let all = BrauerDiagram::enumerate(3);
    for a in &all {
        assert_eq!(a.flip().flip(), *a);
        for b in &all {
            let (ab, r) = a.compose(b).unwrap();
            assert_eq!((ab.flip(), r), b.flip().compose(&a.flip()).unwrap());
        }
    }
}

fn diagram(n: usize) -> impl Strategy<Value = BrauerDiagram> {
    let all = BrauerDiagram::enumerate(n);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn associativity_with_additive_loops_rank_four(a in diagram(4), b in diagram(4), c in diagram(4)) {
        let [l, r] = compose3(&a, &b, &c);
        prop_assert_eq!(l, r);
    }

    #[test]
    fn associativity_with_additive_loops_rank_five(a in diagram(5), b in diagram(5), c in diagram(5)) {
        let [l, r] = compose3(&a, &b, &c);
        prop_assert_eq!(l, r);
    }

    #[test]
    fn inclusion_is_multiplicative(a in diagram(3), b in diagram(3)) {
        let (ab, r) = a.compose(&b).unwrap();
        prop_assert_eq!(a.include(5).compose(&b.include(5)).unwrap(), (ab.include(5), r));
    }
}
