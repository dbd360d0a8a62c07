use num_rational::BigRational;
use proptest::prelude::*;

use towerlab::arith::{Rat, RationalFunction as RF, RingContext, Scalar};
use towerlab::diagrams::BrauerDiagram;
use towerlab::linalg::{sv_axpy, sv_scale};
use towerlab::skein::{Over, RawTangle, SkeinEngine, Slice, Strategy as Pick};
use towerlab::tower::{Algebra, Letter, TowerKind};

use Letter::{E, S};

fn bmw(n: usize) -> Algebra<RF> {
    Algebra::new(TowerKind::Bmw, n, &RingContext::symbolic(&["rho", "q"]).unwrap()).unwrap()
}

fn engine(n: usize, pick: Pick) -> (SkeinEngine<Rat>, Vec<BrauerDiagram>) {
    let basis = BrauerDiagram::enumerate(n);
    let rho = Rat(BigRational::new(5.into(), 3.into()));
    let q = Rat(BigRational::new(7.into(), 2.into()));
    (SkeinEngine::new(&basis, n, &rho, &q, pick).unwrap(), basis)
}

#[test]
fn skein_product_examples() {
    let a = bmw(3);
    let p = a.params();
    let z = p.q.sub(&p.q.inv().unwrap());
    let rho_inv = p.rho.inv().unwrap();
    let g = a.letter(S(0)).unwrap();
    let e = a.letter(E(0)).unwrap();
    let expected = sv_axpy(&sv_axpy(&a.one(), &z, &g), &z.mul(&rho_inv).neg(), &e);
    assert_eq!(a.mul(&g, &g), expected);
    assert_eq!(a.mul(&g, &e), sv_scale(&e, &rho_inv));
    assert_eq!(a.word(&[E(0), S(1), E(0)]).unwrap(), sv_scale(&e, &p.rho));
}

#[test]
fn free_loops_curls_and_plain_tangles() {
    let (eng, basis) = engine(2, Pick::First);
    let id = basis.iter().position(|d| *d == BrauerDiagram::identity(2)).unwrap();
    let loop_beside = RawTangle::new(2, vec![], 1).unwrap();
    assert_eq!(eng.reduce_tangle(&loop_beside).unwrap(), vec![(id, eng.delta().clone())]);

    // A kink on strand 1 made from a cup, one crossing and a cap.
    let curl = |o| RawTangle::new(2, vec![Slice::Cup(1), Slice::Cross(0, o), Slice::Cap(1)], 0).unwrap();
    let a = eng.reduce_tangle(&curl(Over::SeNw)).unwrap();
    let b = eng.reduce_tangle(&curl(Over::SwNe)).unwrap();
    assert_eq!(a.len(), 1);
    assert_eq!(a[0].0, id);
    assert_eq!(b[0].0, id);
    let rho = Rat(BigRational::new(5.into(), 3.into()));
    let mut pair = [a[0].1.clone(), b[0].1.clone()];
    pair.sort_by_key(|r| r.0.clone());
    let mut want = [rho.clone(), rho.inv().unwrap()];
    want.sort_by_key(|r| r.0.clone());
    assert_eq!(pair, want);

    let e1 = basis.iter().position(|d| *d == BrauerDiagram::e(2, 0)).unwrap();
    let plain = RawTangle::new(2, vec![Slice::Cap(0), Slice::Cup(0)], 0).unwrap();
    assert_eq!(plain.crossings(), 0);
    assert_eq!(eng.reduce_tangle(&plain).unwrap(), vec![(e1, Rat::one())]);
}

#[derive(Clone, Debug)]
enum Piece {
    Cross(u8, bool),
    Hook(u8, u8),
    Bubble(u8, Vec<(u8, bool)>, u8),
}

fn over(b: bool) -> Over {
    if b {
        Over::SeNw
    } else {
        Over::SwNe
    }
}

fn flatten(pieces: &[Piece]) -> Vec<Slice> {
    let mut out = Vec::new();
    for p in pieces {
        match p {
            Piece::Cross(i, b) => out.push(Slice::Cross(*i, over(*b))),
            Piece::Hook(i, j) => out.extend([Slice::Cap(*i), Slice::Cup(*j)]),
            Piece::Bubble(i, inner, j) => {
                out.push(Slice::Cup(*i));
                out.extend(inner.iter().map(|&(k, b)| Slice::Cross(k, over(b))));
                out.push(Slice::Cap(*j));
            }
        }
    }
    out
}

fn piece(n: u8) -> impl Strategy<Value = Piece> {
    prop_oneof![
        (0..n - 1, any::<bool>()).prop_map(|(i, b)| Piece::Cross(i, b)),
        (0..n - 1, 0..n - 1).prop_map(|(i, j)| Piece::Hook(i, j)),
        (0..=n, prop::collection::vec((0..n + 1, any::<bool>()), 0..3), 0..n + 1)
            .prop_map(|(i, inner, j)| Piece::Bubble(i, inner, j)),
    ]
}

fn raw_tangle() -> impl Strategy<Value = RawTangle> {
    (2u8..=3)
        .prop_flat_map(|n| (Just(n), prop::collection::vec(piece(n), 1..6), 0usize..2))
        .prop_filter_map("slices must fit", |(n, pieces, loops)| RawTangle::new(n as usize, flatten(&pieces), loops).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rewriting_order_does_not_matter(t in raw_tangle(), seed in any::<u64>()) {
        let (first, _) = engine(t.n, Pick::First);
        let (last, _) = engine(t.n, Pick::Last);
        let (seeded, _) = engine(t.n, Pick::Seeded(seed));
        let a = first.reduce_tangle(&t).unwrap();
        prop_assert_eq!(&a, &last.reduce_tangle(&t).unwrap());
        prop_assert_eq!(&a, &seeded.reduce_tangle(&t).unwrap());
    }
}
