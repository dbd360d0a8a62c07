use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use towerlab::arith::poly::Exponents;
use towerlab::arith::{poly_gcd, MultiPoly, RationalFunction as RF, RingContext};
use towerlab::Error;

fn r(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

fn x(i: usize) -> RF {
    RF::var(i)
}

fn c(v: i64) -> RF {
    RF::from_int(v)
}

fn names(vs: &[&str]) -> Vec<String> {
    vs.iter().map(|s| s.to_string()).collect()
}

#[test]
fn field_operations_normalize() {
    let d = x(0);
    let d2m1 = d.mul(&d).sub(&c(1));
    assert_eq!(d2m1.div(&d.sub(&c(1))).unwrap(), d.add(&c(1)));

    let sum = c(1).div(&d.sub(&c(1))).unwrap().add(&c(1).div(&d.add(&c(1))).unwrap());
    assert_eq!(sum, c(2).mul(&d).div(&d2m1).unwrap());
    assert_eq!(sum.render(&names(&["delta"])), "(2*delta)/(delta^2 - 1)");

    let q = x(0);
    let z = q.sub(&q.inv().unwrap());
    assert_eq!(z.mul(&q), q.mul(&q).sub(&c(1)));
    assert_eq!(c(1).div(&RF::zero()), Err(Error::DivisionByZero));
}

#[test]
fn gcd_examples() {
    let x0 = MultiPoly::var(0);
    let one = MultiPoly::one();
    let a = x0.mul(&x0).sub(&one);
    let b = x0.mul(&x0).add(&x0.scale(&r(2, 1))).add(&one);
    assert_eq!(poly_gcd(&a, &b), x0.add(&one));

    let p = x0.scale(&r(-3, 1)).add(&one);
    assert_eq!(poly_gcd(&p, &MultiPoly::zero()), p.monic());
    assert_eq!(poly_gcd(&MultiPoly::from_int(3), &MultiPoly::from_int(6)), one);
}

#[test]
fn specialization_examples() {
    let ctx = RingContext::specialized(&["q"], vec![r(2, 1)]).unwrap();
    let q = x(0);
    assert_eq!(ctx.specialize(&q.sub(&q.inv().unwrap())).unwrap(), r(3, 2));

    let ctx = RingContext::specialized(&["delta"], vec![r(1, 1)]).unwrap();
    let bad = c(1).div(&x(0).sub(&c(1))).unwrap();
    match ctx.specialize(&bad) {
        Err(Error::GenericityViolation(msg)) => assert!(msg.contains("delta=1"), "{msg}"),
        other => panic!("expected a genericity violation, got {other:?}"),
    }

    let ctx = RingContext::specialized(&["delta"], vec![r(7, 3)]).unwrap();
    assert_eq!(ctx.specialize(&x(0).mul(&x(0))).unwrap(), r(49, 9));
}

#[test]
fn contexts_reject_bad_variable_lists() {
    assert!(RingContext::symbolic(&["q", "q"]).is_err());
    assert!(RingContext::specialized(&["q"], vec![r(0, 1)]).is_err());
    assert!(RingContext::specialized(&["rho", "q"], vec![r(1, 2)]).is_err());
}

fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(((0u32..3, 0u32..3), -4i64..5), 0..4).prop_map(|terms| {
        MultiPoly::from_terms(terms.into_iter().map(|((a, b), k)| -> (Exponents, BigRational) { ([a, b, 0], r(k, 1)) }).collect())
    })
}

fn nonzero_poly() -> impl Strategy<Value = MultiPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfunc() -> impl Strategy<Value = RF> {
    (poly(), nonzero_poly()).prop_map(|(n, d)| RF::new(n, d).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn product_then_quotient_is_the_same_normal_form(p in ratfunc(), q in ratfunc()) {
        prop_assume!(!q.is_zero());
        prop_assert_eq!(p.mul(&q).div(&q).unwrap(), p);
    }

    #[test]
    fn gcd_divides_both_arguments(a in poly(), b in poly()) {
        let g = poly_gcd(&a, &b);
        if g.is_zero() {
            prop_assert!(a.is_zero() && b.is_zero());
        } else {
            prop_assert!(a.div_exact(&g).is_some());
            prop_assert!(b.div_exact(&g).is_some());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn specialization_is_a_ring_homomorphism(a in ratfunc(), b in ratfunc()) {
        let ctx = RingContext::specialized(&["x", "y"], vec![r(13, 7), r(-5, 11)]).unwrap();
        let (Ok(sa), Ok(sb)) = (ctx.specialize(&a), ctx.specialize(&b)) else {
            return Err(TestCaseError::reject("pole at the sample point"));
        };
        prop_assert_eq!(ctx.specialize(&a.add(&b)).unwrap(), &sa + &sb);
        prop_assert_eq!(ctx.specialize(&a.mul(&b)).unwrap(), &sa * &sb);
        prop_assert_eq!(ctx.specialize(&a.sub(&b)).unwrap(), &sa - &sb);
    }
}
