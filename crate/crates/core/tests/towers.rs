use proptest::prelude::*;

use towerlab::arith::{Rat, RationalFunction as RF, RingContext, Scalar};
use towerlab::linalg::{sv_axpy, sv_scale};
use towerlab::tower::{dimension, Algebra, Element, Letter, TowerKind};

use Letter::{E, S};

fn sym_alg(kind: TowerKind, n: usize) -> Algebra<RF> {
    Algebra::new(kind, n, &RingContext::symbolic(kind.variables()).unwrap()).unwrap()
}

fn spec_alg(kind: TowerKind, n: usize) -> Algebra<Rat> {
    let r = |a: i64, b: i64| num_rational::BigRational::new(a.into(), b.into());
    let vals = match kind {
        TowerKind::Brauer => vec![r(7, 3)],
        TowerKind::TemperleyLieb => vec![r(5, 3)],
        TowerKind::Hecke => vec![r(2, 1)],
        TowerKind::Bmw => vec![r(5, 3), r(7, 2)],
        TowerKind::Symmetric => vec![],
    };
    Algebra::new(kind, n, &RingContext::specialized(kind.variables(), vals).unwrap()).unwrap()
}

fn w<K: Scalar>(a: &Algebra<K>, letters: &[Letter]) -> Element<K> {
    a.word(letters).unwrap()
}

#[test]
fn multiplication_examples() {
    let b = sym_alg(TowerKind::Brauer, 2);
    let e1 = w(&b, &[E(0)]);
    assert_eq!(b.mul(&e1, &e1), sv_scale(&e1, &b.params().delta));

    let h = sym_alg(TowerKind::Hecke, 2);
    let q = h.params().hecke_q.clone();
    let t1 = w(&h, &[S(0)]);
    let expected = sv_axpy(&sv_scale(&t1, &q.sub(&RF::one())), &q, &h.one());
    assert_eq!(h.mul(&t1, &t1), expected);

    let tl = sym_alg(TowerKind::TemperleyLieb, 3);
    assert_eq!(w(&tl, &[E(0), E(1), E(0)]), w(&tl, &[E(0)]));
}

#[test]
fn involution_examples() {
    let h = sym_alg(TowerKind::Hecke, 3);
    assert_eq!(h.involve(&w(&h, &[S(0), S(1)])), w(&h, &[S(1), S(0)]));

    let m = sym_alg(TowerKind::Bmw, 3);
    assert_eq!(m.involve(&w(&m, &[E(0), S(1)])), w(&m, &[S(1), E(0)]));
}

#[test]
fn inclusion_examples() {
    let small = sym_alg(TowerKind::Brauer, 2);
    let big = sym_alg(TowerKind::Brauer, 3);
    assert_eq!(big.include_from(&small, &w(&small, &[E(0)])).unwrap(), w(&big, &[E(0)]));
    assert_eq!(big.include_from(&small, &small.one()).unwrap(), big.one());
    assert!(small.include_from(&big, &big.one()).is_err());
}

#[test]
fn quotient_map_examples() {
    let b = sym_alg(TowerKind::Brauer, 3);
    let sym = b.quotient_algebra().unwrap().unwrap();
    assert!(b.quotient_map(Some(&sym), &w(&b, &[E(1)])).is_empty());
    assert_eq!(b.quotient_map(Some(&sym), &w(&b, &[S(0)])), w(&sym, &[S(0)]));

    let m = sym_alg(TowerKind::Bmw, 3);
    let hecke = m.quotient_algebra().unwrap().unwrap();
    let qg = sv_scale(&w(&m, &[S(0)]), &m.params().q);
    assert_eq!(m.quotient_map(Some(&hecke), &qg), w(&hecke, &[S(0)]));
    assert!(m.quotient_map(Some(&hecke), &w(&m, &[E(1)])).is_empty());

    let tl = sym_alg(TowerKind::TemperleyLieb, 3);
    assert!(tl.quotient_map(None, &w(&tl, &[E(1)])).is_empty());
    assert_eq!(tl.quotient_map(None, &tl.one()), vec![(0, RF::one())]);
}

#[test]
fn quotient_map_is_multiplicative_for_bmw() {
    let m = sym_alg(TowerKind::Bmw, 3);
    let hecke = m.quotient_algebra().unwrap().unwrap();
    for a in 0..m.dim() {
        for l in m.generators() {
            let x = m.basis_element(a);
            let lhs = m.quotient_map(Some(&hecke), &m.left_mul_letter(l, &x));
            let g = m.quotient_map(Some(&hecke), &m.letter(l).unwrap());
            let rhs = hecke.mul(&g, &m.quotient_map(Some(&hecke), &x));
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn dimension_examples() {
    assert_eq!(dimension(TowerKind::Brauer, 3), 15);
    assert_eq!(dimension(TowerKind::TemperleyLieb, 4), 14);
    assert_eq!(dimension(TowerKind::Bmw, 3), 15);
    assert_eq!(sym_alg(TowerKind::Bmw, 3).dim(), 15);
    assert_eq!(sym_alg(TowerKind::Hecke, 4).dim(), 24);
}

#[test]
fn regular_representation_examples() {
    let b = sym_alg(TowerKind::Brauer, 2);
    assert!(b.left_mult_matrix(&b.one()).is_identity());
    assert_eq!(b.left_mult_matrix(&w(&b, &[E(0)])).rank(), 1);
}

#[test]
fn element_json_shape() {
    let b = sym_alg(TowerKind::Brauer, 2);
    let v = b.to_json(&b.mul(&w(&b, &[E(0)]), &w(&b, &[E(0)])));
    assert_eq!(v["tower"], "brauer");
    assert_eq!(v["n"], 2);
    assert_eq!(v["terms"][0]["label"], "[(t1,t2),(b1,b2)]");
    assert_eq!(v["terms"][0]["coeff"], "delta");
}

#[test]
fn associativity_on_generator_triples() {
    for kind in TowerKind::ALL {
        let a = sym_alg(kind, 3);
        let gens: Vec<Element<RF>> = a.generators().iter().map(|&l| a.letter(l).unwrap()).collect();
        for x in &gens {
            for y in &gens {
                for z in &gens {
                    assert_eq!(a.mul(&a.mul(x, y), z), a.mul(x, &a.mul(y, z)), "{kind}");
                }
            }
        }
    }
}

fn element(dim: usize) -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec((0..dim, -3i64..4), 1..4)
}

fn realize<K: Scalar>(terms: &[(usize, i64)]) -> Element<K> {
    terms.iter().fold(Vec::new(), |acc, &(i, c)| sv_axpy(&acc, &K::from_int(c), &vec![(i, K::one())]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn associativity_on_random_triples(k in 0usize..5, a in element(15), b in element(15), c in element(15)) {
        let kind = TowerKind::ALL[k];
        let alg = spec_alg(kind, 3);
        let d = alg.dim();
        let pick = |t: &[(usize, i64)]| realize::<Rat>(&t.iter().map(|&(i, c)| (i % d, c)).collect::<Vec<_>>());
        let (x, y, z) = (pick(&a), pick(&b), pick(&c));
        prop_assert_eq!(alg.mul(&alg.mul(&x, &y), &z), alg.mul(&x, &alg.mul(&y, &z)));
    }

    #[test]
    fn multiply_commutes_with_include(k in 0usize..5, a in element(15), b in element(15)) {
        let kind = TowerKind::ALL[k];
        let small = spec_alg(kind, 3);
        let big = spec_alg(kind, 4);
        let d = small.dim();
        let pick = |t: &[(usize, i64)]| realize::<Rat>(&t.iter().map(|&(i, c)| (i % d, c)).collect::<Vec<_>>());
        let (x, y) = (pick(&a), pick(&b));
        let inc = |v: &Element<Rat>| big.include_from(&small, v).unwrap();
        prop_assert_eq!(inc(&small.mul(&x, &y)), big.mul(&inc(&x), &inc(&y)));
    }

    #[test]
    fn left_mult_matrix_is_a_homomorphism(k in 0usize..5, a in element(15), b in element(15)) {
        let kind = TowerKind::ALL[k];
        let alg = spec_alg(kind, 3);
        let d = alg.dim();
        let pick = |t: &[(usize, i64)]| realize::<Rat>(&t.iter().map(|&(i, c)| (i % d, c)).collect::<Vec<_>>());
        let (x, y) = (pick(&a), pick(&b));
        let lhs = alg.left_mult_matrix(&alg.mul(&x, &y));
        prop_assert_eq!(lhs, alg.left_mult_matrix(&x).mul(&alg.left_mult_matrix(&y)));
    }
}
