//! Greatest common divisors of multivariate polynomials over Q.
//!
//! Univariate inputs use the monic Euclidean algorithm. Otherwise the
//! computation is recursive in a main variable: contents are split off and the
//! primitive parts go through the subresultant pseudo-remainder sequence.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{MultiPoly, MAX_VARS};

/// Greatest common divisor, normalized to leading coefficient one.
///
/// `gcd(a, 0)` is `a` made monic, and the gcd of two nonzero constants is 1.
pub fn poly_gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one();
    }
    if a.is_monomial() || b.is_monomial() {
        return monomial_gcd(a, b);
    }
    let ma = a.min_exponents();
    let mb = b.min_exponents();
    let mut common = [0u32; MAX_VARS];
    for i in 0..MAX_VARS {
        common[i] = ma[i].min(mb[i]);
    }
    let a1 = a.div_monomial(&ma);
    let b1 = b.div_monomial(&mb);
    let g = gcd_rec(&a1, &b1);
    g.mul_monomial(&common, &BigRational::one()).monic()
}

/// When one side is a monomial, any common divisor is a monomial too.
fn monomial_gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    let ma = a.min_exponents();
    let mb = b.min_exponents();
    let mut common = [0u32; MAX_VARS];
    for i in 0..MAX_VARS {
        common[i] = ma[i].min(mb[i]);
    }
    MultiPoly::monomial(common, BigRational::one())
}

fn used_vars(p: &MultiPoly) -> Vec<usize> {
    (0..MAX_VARS).filter(|&v| p.contains_var(v)).collect()
}

fn gcd_rec(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one();
    }
    let va = used_vars(a);
    let vb = used_vars(b);
    let mut all: Vec<usize> = va.iter().chain(vb.iter()).copied().collect();
    all.sort_unstable();
    all.dedup();
    if all.len() == 1 {
        return euclid_univariate(a, b, all[0]);
    }
    // A variable present in only one argument cannot occur in the gcd.
    if let Some(&v) = va.iter().find(|v| !vb.contains(v)) {
        return gcd_with_coeffs(b, a, v);
    }
    if let Some(&v) = vb.iter().find(|v| !va.contains(v)) {
        return gcd_with_coeffs(a, b, v);
    }
    let v = *all.last().expect("nonconstant polynomials use a variable");
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let cont = gcd_rec(&ca, &cb);
    let prim = subresultant_gcd(&pa, &pb, v);
    cont.mul(&prim).monic()
}

/// gcd of `p` with every coefficient of `q` viewed as a polynomial in `v`.
fn gcd_with_coeffs(p: &MultiPoly, q: &MultiPoly, v: usize) -> MultiPoly {
    let mut g = p.clone();
    for c in q.coeffs_in(v) {
        if c.is_zero() {
            continue;
        }
        g = gcd_rec(&g, &c);
        if g.is_constant() {
            return MultiPoly::one();
        }
    }
    g.monic()
}

/// Content with respect to `v`: the gcd of the coefficients in the other variables.
fn content_in(p: &MultiPoly, v: usize) -> MultiPoly {
    let mut g = MultiPoly::zero();
    for c in p.coeffs_in(v) {
        if c.is_zero() {
            continue;
        }
        g = if g.is_zero() { c.monic() } else { gcd_rec(&g, &c) };
        if g.is_constant() {
            return MultiPoly::one();
        }
    }
    g
}

fn euclid_univariate(a: &MultiPoly, b: &MultiPoly, v: usize) -> MultiPoly {
    let mut x = a.coeffs_in(v).iter().map(const_of).collect::<Vec<_>>();
    let mut y = b.coeffs_in(v).iter().map(const_of).collect::<Vec<_>>();
    trim(&mut x);
    trim(&mut y);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = uni_rem(&x, &y);
        x = y;
        y = r;
    }
    let lead = x.last().cloned().unwrap_or_else(BigRational::one);
    let coeffs: Vec<MultiPoly> = x.iter().map(|c| MultiPoly::constant(c / &lead)).collect();
    MultiPoly::from_coeffs_in(v, &coeffs)
}

fn const_of(p: &MultiPoly) -> BigRational {
    p.as_constant().expect("univariate coefficient is constant")
}

fn trim(p: &mut Vec<BigRational>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn uni_rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead_inv = b[db].recip();
    while r.len() > db {
        let top = r.len() - 1;
        let f = &r[top] * &lead_inv;
        if !f.is_zero() {
            let shift = top - db;
            for (i, c) in b.iter().enumerate() {
                r[shift + i] -= &f * c;
            }
        }
        r.pop();
        trim(&mut r);
    }
    r
}

type UPoly = Vec<MultiPoly>;

fn udeg(p: &UPoly) -> usize {
    p.len() - 1
}

fn utrim(p: &mut UPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Pseudo-remainder of `a` by `b` in the main variable.
fn prem(a: &UPoly, b: &UPoly) -> UPoly {
    let db = udeg(b);
    let lb = &b[db];
    let mut r = a.clone();
    let mut steps = (udeg(a) + 1).saturating_sub(db);
    while !r.is_empty() && r.len() > db {
        let top = r.len() - 1;
        let lr = r[top].clone();
        let shift = top - db;
        for c in r.iter_mut() {
            *c = c.mul(lb);
        }
        for (i, c) in b.iter().enumerate() {
            r[shift + i] = r[shift + i].sub(&c.mul(&lr));
        }
        r.pop();
        utrim(&mut r);
        steps -= 1;
    }
    if steps > 0 {
        let f = lb.pow(steps as u32);
        for c in r.iter_mut() {
            *c = c.mul(&f);
        }
    }
    r
}

fn subresultant_gcd(a: &MultiPoly, b: &MultiPoly, v: usize) -> MultiPoly {
    let mut x: UPoly = a.coeffs_in(v);
    let mut y: UPoly = b.coeffs_in(v);
    utrim(&mut x);
    utrim(&mut y);
    if udeg(&x) < udeg(&y) {
        std::mem::swap(&mut x, &mut y);
    }
    let mut g = MultiPoly::one();
    let mut h = MultiPoly::one();
    loop {
        let d = udeg(&x) - udeg(&y);
        let r = prem(&x, &y);
        if r.is_empty() {
            break;
        }
        if r.len() == 1 {
            return MultiPoly::one();
        }
        let divisor = g.mul(&h.pow(d as u32));
        x = y;
        y = r.iter().map(|c| c.div_exact(&divisor).expect("subresultant division is exact")).collect();
        g = x[udeg(&x)].clone();
        h = if d == 0 {
            h
        } else {
            g.pow(d as u32).div_exact(&h.pow(d as u32 - 1)).expect("subresultant division is exact")
        };
    }
    let prim = MultiPoly::from_coeffs_in(v, &y);
    let c = content_in(&prim, v);
    prim.div_exact(&c).expect("content divides").monic()
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
    fn c(v: i64) -> MultiPoly {
        MultiPoly::from_int(v)
    }

    #[test]
    fn univariate_examples() {
        let a = x().pow(2).sub(&c(1));
        let b = x().pow(2).add(&x().scale(&BigRational::from_integer(2.into()))).add(&c(1));
        assert_eq!(poly_gcd(&a, &b), x().add(&c(1)));
        assert_eq!(poly_gcd(&c(3), &c(6)), MultiPoly::one());
        let p = x().scale(&BigRational::from_integer(3.into())).add(&c(6));
        assert_eq!(poly_gcd(&p, &MultiPoly::zero()), x().add(&c(2)));
    }

    #[test]
    fn bivariate_common_factor() {
        let f = x().add(&y()).add(&c(1));
        let a = f.mul(&x().sub(&y()));
        let b = f.mul(&x().mul(&y()).add(&c(3)));
        assert_eq!(poly_gcd(&a, &b), f.monic());
    }

    #[test]
    fn monomial_content() {
        let a = x().pow(2).mul(&y()).mul(&x().add(&c(1)));
        let b = x().mul(&y().pow(3)).mul(&x().add(&c(1))).mul(&y().add(&c(2)));
        let expected = x().mul(&y()).mul(&x().add(&c(1)));
        assert_eq!(poly_gcd(&a, &b), expected.monic());
    }

    #[test]
    fn variable_in_one_argument() {
        let a = x().add(&c(1)).mul(&y().add(&c(5)));
        let b = x().pow(2).sub(&c(1));
        assert_eq!(poly_gcd(&a, &b), x().add(&c(1)));
    }
}
