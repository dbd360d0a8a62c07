//! Sparse multivariate polynomials with rational coefficients.
//!
//! Terms are kept sorted by descending graded-lexicographic order of their
//! exponent vectors, with no zero coefficients stored. Exponent vectors have a
//! fixed width of [`MAX_VARS`]; unused trailing slots are zero.

use std::cmp::Ordering;
use std::fmt::Write;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub const MAX_VARS: usize = 3;

pub type Exponents = [u32; MAX_VARS];

const ZERO_EXP: Exponents = [0; MAX_VARS];

pub fn grlex_cmp(a: &Exponents, b: &Exponents) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

fn divides(a: &Exponents, b: &Exponents) -> bool {
    a.iter().zip(b.iter()).all(|(x, y)| x <= y)
}

fn exp_sub(a: &Exponents, b: &Exponents) -> Exponents {
    let mut out = ZERO_EXP;
    for i in 0..MAX_VARS {
        out[i] = a[i] - b[i];
    }
    out
}

fn exp_add(a: &Exponents, b: &Exponents) -> Exponents {
    let mut out = ZERO_EXP;
    for i in 0..MAX_VARS {
        out[i] = a[i] + b[i];
    }
    out
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct MultiPoly {
    terms: Vec<(Exponents, BigRational)>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![(ZERO_EXP, c)] }
        }
    }

    pub fn from_int(v: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(v)))
    }

    /// The polynomial consisting of the single variable `index`.
    pub fn var(index: usize) -> Self {
        assert!(index < MAX_VARS, "variable index {index} out of range");
        let mut e = ZERO_EXP;
        e[index] = 1;
        Self { terms: vec![(e, BigRational::one())] }
    }

    pub fn monomial(exps: Exponents, c: BigRational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![(exps, c)] }
        }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms(mut terms: Vec<(Exponents, BigRational)>) -> Self {
        terms.sort_by(|a, b| grlex_cmp(&b.0, &a.0));
        let mut out: Vec<(Exponents, BigRational)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == e => last.1 += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Self { terms: out }
    }

    pub fn terms(&self) -> &[(Exponents, BigRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == ZERO_EXP)
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == ZERO_EXP && self.terms[0].1.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Constant term value, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.terms.is_empty() {
            Some(BigRational::zero())
        } else if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn leading_exps(&self) -> Option<&Exponents> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(e, _)| e.iter().sum::<u32>()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|(e, _)| e[var]).max().unwrap_or(0)
    }

    pub fn contains_var(&self, var: usize) -> bool {
        self.terms.iter().any(|(e, _)| e[var] > 0)
    }

    /// Componentwise minimum of the exponent vectors.
    pub fn min_exponents(&self) -> Exponents {
        let mut m = match self.terms.first() {
            Some(t) => t.0,
            None => return ZERO_EXP,
        };
        for (e, _) in &self.terms[1..] {
            for i in 0..MAX_VARS {
                m[i] = m[i].min(e[i]);
            }
        }
        m
    }

    pub fn neg(&self) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect() }
    }

    pub fn mul_monomial(&self, exps: &Exponents, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        // Multiplying by a monomial preserves the grlex order of terms.
        Self { terms: self.terms.iter().map(|(e, k)| (exp_add(e, exps), k * c)).collect() }
    }

    /// Exact division by a monomial `x^exps`; the caller guarantees divisibility.
    pub fn div_monomial(&self, exps: &Exponents) -> Self {
        Self { terms: self.terms.iter().map(|(e, k)| (exp_sub(e, exps), k.clone())).collect() }
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() && j < b.len() {
            match grlex_cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate_other { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate_other { -&t.1 } else { t.1.clone() };
            out.push((t.0, c));
        }
        Self { terms: out }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if other.terms.len() == 1 {
            return self.mul_monomial(&other.terms[0].0, &other.terms[0].1);
        }
        if self.terms.len() == 1 {
            return other.mul_monomial(&self.terms[0].0, &self.terms[0].1);
        }
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                raw.push((exp_add(ea, eb), ca * cb));
            }
        }
        Self::from_terms(raw)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert!(!divisor.is_zero(), "division of polynomials by zero");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if divisor.terms.len() == 1 {
            let (de, dc) = &divisor.terms[0];
            if !self.terms.iter().all(|(e, _)| divides(de, e)) {
                return None;
            }
            let inv = dc.recip();
            return Some(Self {
                terms: self.terms.iter().map(|(e, c)| (exp_sub(e, de), c * &inv)).collect(),
            });
        }
        let (lead_e, lead_c) = divisor.terms[0].clone();
        let lead_inv = lead_c.recip();
        let mut rem = self.clone();
        let mut quotient = Vec::new();
        while let Some((re, rc)) = rem.terms.first().cloned() {
            if !divides(&lead_e, &re) {
                return None;
            }
            let qe = exp_sub(&re, &lead_e);
            let qc = rc * &lead_inv;
            rem = rem.sub(&divisor.mul_monomial(&qe, &qc));
            quotient.push((qe, qc));
        }
        Some(Self::from_terms(quotient))
    }

    /// Scales so that the leading coefficient is one (zero stays zero).
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => Self::zero(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.recip()),
        }
    }

    /// Splits into coefficients with respect to `var`: index `d` holds the
    /// coefficient of `var^d`, a polynomial free of `var`.
    pub fn coeffs_in(&self, var: usize) -> Vec<MultiPoly> {
        let deg = self.degree_in(var) as usize;
        let mut buckets: Vec<Vec<(Exponents, BigRational)>> = vec![Vec::new(); deg + 1];
        for (e, c) in &self.terms {
            let mut rest = *e;
            let d = rest[var] as usize;
            rest[var] = 0;
            buckets[d].push((rest, c.clone()));
        }
        buckets.into_iter().map(MultiPoly::from_terms).collect()
    }

    pub fn from_coeffs_in(var: usize, coeffs: &[MultiPoly]) -> Self {
        let mut raw = Vec::new();
        for (d, c) in coeffs.iter().enumerate() {
            for (e, k) in &c.terms {
                let mut e2 = *e;
                e2[var] += d as u32;
                raw.push((e2, k.clone()));
            }
        }
        Self::from_terms(raw)
    }

    pub fn eval(&self, values: &[BigRational]) -> BigRational {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &p) in e.iter().enumerate() {
                if p > 0 {
                    let v = values.get(i).cloned().unwrap_or_else(BigRational::zero);
                    term *= num_traits::pow(v, p as usize);
                }
            }
            acc += term;
        }
        acc
    }

    /// Rough size measure used for pivot selection.
    pub fn weight(&self) -> usize {
        self.terms.len() * (1 + self.total_degree() as usize)
    }

    pub fn render(&self, vars: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else if negative {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mono = render_monomial(e, vars);
            if mono.is_empty() {
                write!(out, "{}", render_rational(&abs)).unwrap();
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                write!(out, "{}*{}", render_rational(&abs), mono).unwrap();
            }
        }
        out
    }
}

pub(crate) fn render_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn render_monomial(e: &Exponents, vars: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &p) in e.iter().enumerate() {
        if p == 0 {
            continue;
        }
        let name = vars.get(i).cloned().unwrap_or_else(|| format!("x{i}"));
        if p == 1 {
            parts.push(name);
        } else {
            parts.push(format!("{name}^{p}"));
        }
    }
    parts.join("*")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> MultiPoly {
        MultiPoly::var(0)
    }
    fn y() -> MultiPoly {
        MultiPoly::var(1)
    }

    #[test]
    fn arithmetic_basics() {
        let p = x().add(&MultiPoly::one());
        let q = x().sub(&MultiPoly::one());
        assert_eq!(p.mul(&q), x().pow(2).sub(&MultiPoly::one()));
        assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn exact_division() {
        let p = x().add(&y());
        let q = x().sub(&y());
        let prod = p.mul(&q);
        assert_eq!(prod.div_exact(&p), Some(q.clone()));
        assert_eq!(prod.div_exact(&x()), None);
    }

    #[test]
    fn coefficient_split_roundtrip() {
        let p = x().pow(2).mul(&y()).add(&y().pow(3)).add(&x());
        let cs = p.coeffs_in(0);
        assert_eq!(cs.len(), 3);
        assert_eq!(MultiPoly::from_coeffs_in(0, &cs), p);
    }

    #[test]
    fn render_form() {
        let vars = vec!["delta".to_string()];
        let p = x().pow(2).sub(&MultiPoly::one());
        assert_eq!(p.render(&vars), "delta^2 - 1");
        assert_eq!(x().scale(&BigRational::from_integer(2.into())).render(&vars), "2*delta");
    }
}
