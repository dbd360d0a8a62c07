//! Elements of the fraction field Q(x_1, ..., x_k).

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::gcd::poly_gcd;
use super::poly::MultiPoly;
use crate::error::Error;

/// A reduced quotient of polynomials.
///
/// The denominator is monic under graded-lexicographic order (so it is 1 when
/// constant) and shares no nonconstant factor with the numerator; equality is
/// therefore structural.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalFunction {
    num: MultiPoly,
    den: MultiPoly,
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl RationalFunction {
    pub fn zero() -> Self {
        Self { num: MultiPoly::zero(), den: MultiPoly::one() }
    }

    pub fn one() -> Self {
        Self { num: MultiPoly::one(), den: MultiPoly::one() }
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        Self { num: p, den: MultiPoly::one() }
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::from_poly(MultiPoly::constant(c))
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_poly(MultiPoly::from_int(v))
    }

    pub fn var(index: usize) -> Self {
        Self::from_poly(MultiPoly::var(index))
    }

    /// Builds `num / den` in normal form.
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = poly_gcd(&num, &den);
        if g.is_one() {
            Ok(Self::with_monic_den(num, den))
        } else {
            let n = num.div_exact(&g).expect("gcd divides numerator");
            let d = den.div_exact(&g).expect("gcd divides denominator");
            Ok(Self::with_monic_den(n, d))
        }
    }

    fn with_monic_den(num: MultiPoly, den: MultiPoly) -> Self {
        let lead = den.leading_coeff().expect("nonzero denominator").clone();
        if lead.is_one() {
            Self { num, den }
        } else {
            let inv = lead.recip();
            Self { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn numer(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denom(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn neg(&self) -> Self {
        Self { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let t = self.num.add(&other.num);
            if self.den.is_one() {
                return Self::from_poly(t);
            }
            return Self::new(t, self.den.clone()).expect("nonzero denominator");
        }
        // Henrici: only the gcd of the denominators can cancel.
        let g = poly_gcd(&self.den, &other.den);
        if g.is_one() {
            let t = self.num.mul(&other.den).add(&other.num.mul(&self.den));
            if t.is_zero() {
                return Self::zero();
            }
            return Self::with_monic_den(t, self.den.mul(&other.den));
        }
        let b1 = self.den.div_exact(&g).expect("gcd divides");
        let d1 = other.den.div_exact(&g).expect("gcd divides");
        let t = self.num.mul(&d1).add(&other.num.mul(&b1));
        if t.is_zero() {
            return Self::zero();
        }
        let den = b1.mul(&other.den);
        let g2 = poly_gcd(&t, &g);
        if g2.is_one() {
            Self::with_monic_den(t, den)
        } else {
            Self::with_monic_den(
                t.div_exact(&g2).expect("gcd divides"),
                den.div_exact(&g2).expect("gcd divides"),
            )
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(self.num.mul(&other.num));
        }
        if let Some(c) = self.as_constant() {
            return Self { num: other.num.scale(&c), den: other.den.clone() };
        }
        if let Some(c) = other.as_constant() {
            return Self { num: self.num.scale(&c), den: self.den.clone() };
        }
        let g1 = poly_gcd(&self.num, &other.den);
        let g2 = poly_gcd(&other.num, &self.den);
        let (a, d) = if g1.is_one() {
            (self.num.clone(), other.den.clone())
        } else {
            (self.num.div_exact(&g1).unwrap(), other.den.div_exact(&g1).unwrap())
        };
        let (c, b) = if g2.is_one() {
            (other.num.clone(), self.den.clone())
        } else {
            (other.num.div_exact(&g2).unwrap(), self.den.div_exact(&g2).unwrap())
        };
        Self::with_monic_den(a.mul(&c), b.mul(&d))
    }

    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::with_monic_den(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self, Error> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow_i(&self, e: i64) -> Result<Self, Error> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs() as u32;
        Ok(Self { num: base.num.pow(k), den: base.den.pow(k) })
    }

    /// Evaluates at rational values; fails when the denominator vanishes.
    pub fn eval(&self, values: &[BigRational]) -> Result<BigRational, Error> {
        let d = self.den.eval(values);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(values) / d)
    }

    pub fn weight(&self) -> usize {
        self.num.weight() + self.den.weight()
    }

    /// Canonical text form, e.g. `(2*delta)/(delta^2 - 1)`.
    pub fn render(&self, vars: &[String]) -> String {
        if self.den.is_one() {
            return self.num.render(vars);
        }
        let n = self.num.render(vars);
        let d = self.den.render(vars);
        // A bare name or power needs no parentheses; a product does on the
        // right of the slash.
        let simple = |s: &str, p: &MultiPoly, den: bool| {
            p.is_monomial() && p.leading_coeff().is_some_and(|c| c.is_one()) && !(den && s.contains('*'))
        };
        let wrap = |s: String, p: &MultiPoly, den: bool| if simple(&s, p, den) { s } else { format!("({s})") };
        format!("{}/{}", wrap(n, &self.num, false), wrap(d, &self.den, true))
    }
}
