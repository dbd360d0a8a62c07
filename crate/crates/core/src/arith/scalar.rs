//! The coefficient interface shared by symbolic and specialized computations.

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::context::RingContext;
use super::poly::render_rational;
use super::ratfunc::RationalFunction;
use crate::error::{Error, Result};

pub trait Scalar: Clone + PartialEq + Eq + Hash + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(c: BigRational) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self>;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    /// The value of parameter `index` of `ctx` in this coefficient domain.
    fn parameter(ctx: &RingContext, index: usize) -> Self;
    fn render(&self, ctx: &RingContext) -> String;
    /// Rough size, used to prefer simple pivots.
    fn weight(&self) -> usize;
    /// The value at a fixed, arbitrary-looking parameter point, if defined.
    /// Ranks at the probe point are lower bounds for generic ranks.
    fn probe(&self) -> Option<BigRational>;

    fn from_int(v: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(v)))
    }

    fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    fn pow_i(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut out = Self::one();
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        Ok(out)
    }
}

impl Scalar for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn one() -> Self {
        RationalFunction::one()
    }
    fn from_rational(c: BigRational) -> Self {
        RationalFunction::from_rational(c)
    }
    fn add(&self, other: &Self) -> Self {
        RationalFunction::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        RationalFunction::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        RationalFunction::mul(self, other)
    }
    fn neg(&self) -> Self {
        RationalFunction::neg(self)
    }
    fn inv(&self) -> Result<Self> {
        RationalFunction::inv(self)
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn is_one(&self) -> bool {
        RationalFunction::is_one(self)
    }
    fn parameter(_ctx: &RingContext, index: usize) -> Self {
        RationalFunction::var(index)
    }
    fn render(&self, ctx: &RingContext) -> String {
        RationalFunction::render(self, ctx.vars())
    }
    fn weight(&self) -> usize {
        RationalFunction::weight(self)
    }
    fn probe(&self) -> Option<BigRational> {
        let point: Vec<BigRational> =
            [(1013, 37), (571, 29), (307, 17)].iter().map(|&(a, b)| BigRational::new(a.into(), b.into())).collect();
        self.eval(&point).ok()
    }
    fn pow_i(&self, e: i64) -> Result<Self> {
        RationalFunction::pow_i(self, e)
    }
}

/// A rational number standing in for a specialized parameter value.
///
/// Inverting zero reports a genericity violation: in specialized runs every
/// division is by a quantity that is nonzero for generic parameters.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Rat(pub BigRational);

impl Scalar for Rat {
    fn zero() -> Self {
        Rat(BigRational::zero())
    }
    fn one() -> Self {
        Rat(BigRational::one())
    }
    fn from_rational(c: BigRational) -> Self {
        Rat(c)
    }
    fn add(&self, other: &Self) -> Self {
        Rat(&self.0 + &other.0)
    }
    fn sub(&self, other: &Self) -> Self {
        Rat(&self.0 - &other.0)
    }
    fn mul(&self, other: &Self) -> Self {
        Rat(&self.0 * &other.0)
    }
    fn neg(&self) -> Self {
        Rat(-&self.0)
    }
    fn inv(&self) -> Result<Self> {
        if self.0.is_zero() {
            Err(Error::GenericityViolation("division by zero under specialization".into()))
        } else {
            Ok(Rat(self.0.recip()))
        }
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn is_one(&self) -> bool {
        self.0.is_one()
    }
    fn parameter(ctx: &RingContext, index: usize) -> Self {
        let vals = ctx.values().expect("specialized scalars need a specialized context");
        Rat(vals[index].clone())
    }
    fn render(&self, _ctx: &RingContext) -> String {
        render_rational(&self.0)
    }
    fn weight(&self) -> usize {
        (self.0.numer().bits() + self.0.denom().bits()) as usize
    }
    fn probe(&self) -> Option<BigRational> {
        Some(self.0.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rat_inverse_of_zero_is_genericity_violation() {
        assert!(matches!(Rat::zero().inv(), Err(Error::GenericityViolation(_))));
        assert_eq!(Rat::from_int(4).inv().unwrap().mul(&Rat::from_int(4)), Rat::one());
    }

    #[test]
    fn negative_powers() {
        let q = RationalFunction::var(0);
        let ctx = RingContext::symbolic(&["q"]).unwrap();
        assert_eq!(Scalar::render(&q.pow_i(-2).unwrap(), &ctx), "1/q^2");
    }
}
