//! Jucys-Murphy families, built by their recursions either as algebra
//! elements or directly as matrices of a representation.

use std::collections::HashMap;

use crate::arith::Scalar;
use crate::error::Result;
use crate::linalg::{sv_axpy, sv_scale, Matrix};
use crate::tower::{Algebra, Element, Letter, TowerKind, TowerParams};

/// One factor of a recursion term: a generator or the previous L.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Factor {
    Gen(Letter),
    Prev,
}

pub type Term<K> = (K, Vec<Factor>);

/// L_1: one for multiplicative families, zero for additive ones.
pub fn initial<K: Scalar>(kind: TowerKind) -> K {
    if kind.is_multiplicative() {
        K::one()
    } else {
        K::zero()
    }
}

/// Terms expressing L_{j+1} through L_j, j >= 1.
pub fn step_terms<K: Scalar>(kind: TowerKind, p: &TowerParams<K>, j: usize) -> Result<Vec<Term<K>>> {
    use Factor::{Gen, Prev};
    let s = Gen(Letter::S(j - 1));
    let e = Gen(Letter::E(j - 1));
    let one = K::one();
    Ok(match kind {
        TowerKind::Hecke => vec![(p.hecke_q.inv()?, vec![s, Prev, s])],
        TowerKind::Bmw => vec![(one, vec![s, Prev, s])],
        TowerKind::Symmetric => vec![(one.clone(), vec![s, Prev, s]), (one, vec![s])],
        TowerKind::Brauer => {
            vec![(one.clone(), vec![s, Prev, s]), (one.clone(), vec![s]), (one.neg(), vec![e])]
        }
        TowerKind::TemperleyLieb => {
            // The Hecke recursion pushed through T = q^{1/2} e - 1.
            let qi = p.hecke_q.inv()?;
            let mixed = qi.mul(&p.qhalf).neg();
            vec![(one, vec![e, Prev, e]), (mixed.clone(), vec![e, Prev]), (mixed, vec![Prev, e]), (qi, vec![Prev])]
        }
    })
}

/// gamma_j with L_j L_{j+1} e_j = gamma_j e_j (or the additive analogue).
pub fn gamma<K: Scalar>(kind: TowerKind, p: &TowerParams<K>, j: usize) -> Result<Option<K>> {
    Ok(match kind {
        TowerKind::Brauer => Some(K::one().sub(&p.delta)),
        TowerKind::Bmw => Some(p.rho.pow_i(-2)?),
        TowerKind::TemperleyLieb => Some(p.hecke_q.pow_i(2 - j as i64)?),
        _ => None,
    })
}

fn split(factors: &[Factor]) -> (Vec<Letter>, bool, Vec<Letter>) {
    let mut left = Vec::new();
    let mut right = Vec::new();
    let mut seen = false;
    for f in factors {
        match f {
            Factor::Prev => seen = true,
            Factor::Gen(l) if seen => right.push(*l),
            Factor::Gen(l) => left.push(*l),
        }
    }
    (left, seen, right)
}

/// L_1, .., L_n of `alg` as elements.
pub fn jm_elements<K: Scalar>(alg: &Algebra<K>) -> Result<Vec<Element<K>>> {
    let kind = alg.kind();
    let mut out = vec![alg.scalar(&initial::<K>(kind))];
    for j in 1..alg.n() {
        let prev = out.last().unwrap().clone();
        let mut next = Vec::new();
        for (c, factors) in step_terms(kind, alg.params(), j)? {
            let (left, has_prev, right) = split(&factors);
            let mid = if has_prev { prev.clone() } else { alg.one() };
            let v = alg.right_mul_word(&alg.left_mul_word(&left, &mid), &right);
            next = sv_axpy(&next, &c, &v);
        }
        out.push(next);
    }
    Ok(out)
}

/// L_1, .., L_n evaluated in a representation given by generator matrices.
pub fn jm_matrices<K: Scalar>(
    kind: TowerKind,
    p: &TowerParams<K>,
    n: usize,
    gens: &HashMap<Letter, Matrix<K>>,
    dim: usize,
) -> Result<Vec<Matrix<K>>> {
    let mut out = vec![Matrix::scalar(dim, &initial::<K>(kind))];
    let word = |ls: &[Letter]| -> Matrix<K> {
        ls.iter().fold(Matrix::identity(dim), |acc, l| acc.mul(&gens[l]))
    };
    for j in 1..n {
        let prev = out.last().unwrap().clone();
        let mut next = Matrix::zeros(dim, dim);
        for (c, factors) in step_terms(kind, p, j)? {
            let (left, has_prev, right) = split(&factors);
            let mut m = word(&left);
            if has_prev {
                m = m.mul(&prev);
            }
            m = m.mul(&word(&right));
            next = next.add(&m.scale(&c));
        }
        out.push(next);
    }
    Ok(out)
}

/// The quotient-tower family L_j^{(0)} in the coordinates used by
/// [`Algebra::quotient_map`].
pub fn quotient_jm<K: Scalar>(alg: &Algebra<K>, quotient: Option<&Algebra<K>>) -> Result<Vec<Element<K>>> {
    match alg.kind() {
        TowerKind::Symmetric | TowerKind::Hecke => jm_elements(alg),
        TowerKind::Brauer | TowerKind::Bmw => jm_elements(quotient.expect("quotient algebra")),
        TowerKind::TemperleyLieb => {
            let qi = alg.params().hecke_q.inv()?;
            let mut out = Vec::new();
            let mut c = K::one();
            for _ in 0..alg.n() {
                out.push(vec![(0, c.clone())]);
                c = c.mul(&qi);
            }
            Ok(out)
        }
    }
}

/// Product (multiplicative) or sum (additive) of all JM elements.
pub fn central_element<K: Scalar>(alg: &Algebra<K>, ls: &[Element<K>]) -> Element<K> {
    if alg.kind().is_multiplicative() {
        ls.iter().fold(alg.one(), |acc, l| alg.mul(&acc, l))
    } else {
        ls.iter().fold(Vec::new(), |acc, l| sv_axpy(&acc, &K::one(), l))
    }
}

/// Matrix version of [`central_element`].
pub fn central_matrix<K: Scalar>(kind: TowerKind, ls: &[Matrix<K>], dim: usize) -> Matrix<K> {
    if kind.is_multiplicative() {
        ls.iter().fold(Matrix::identity(dim), |acc, l| acc.mul(l))
    } else {
        ls.iter().fold(Matrix::zeros(dim, dim), |acc, l| acc.add(l))
    }
}

/// `gamma * e` with e = e_j (1-based j), used by the gamma relation checks.
pub fn gamma_target<K: Scalar>(alg: &Algebra<K>, j: usize, gamma: &K) -> Result<Element<K>> {
    Ok(sv_scale(&alg.letter(Letter::E(j - 1))?, gamma))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{RationalFunction, RingContext};

    type RF = RationalFunction;

    fn alg(kind: TowerKind, n: usize) -> Algebra<RF> {
        let ctx = RingContext::symbolic(kind.variables()).unwrap();
        Algebra::new(kind, n, &ctx).unwrap()
    }

    #[test]
    fn small_jm_elements() {
        let b = alg(TowerKind::Brauer, 2);
        let l = jm_elements(&b).unwrap();
        let s = b.letter(Letter::S(0)).unwrap();
        let e = b.letter(Letter::E(0)).unwrap();
        assert_eq!(l[1], sv_axpy(&s, &RF::from_int(-1), &e));

        let h = alg(TowerKind::Hecke, 2);
        let l = jm_elements(&h).unwrap();
        let q = h.params().hecke_q.clone();
        let t = h.letter(Letter::S(0)).unwrap();
        let expected = sv_axpy(&h.one(), &RF::one().sub(&q.inv().unwrap()), &t);
        assert_eq!(l[1], expected);

        let m = alg(TowerKind::Bmw, 2);
        let l = jm_elements(&m).unwrap();
        let g = m.letter(Letter::S(0)).unwrap();
        assert_eq!(l[1], m.mul(&g, &g));
    }

    #[test]
    fn tl_gamma_at_first_index() {
        let tl = alg(TowerKind::TemperleyLieb, 2);
        let l = jm_elements(&tl).unwrap();
        let prod = tl.mul(&l[0], &l[1]);
        let lhs = tl.right_mul_letter(&prod, Letter::E(0));
        let g = gamma(TowerKind::TemperleyLieb, tl.params(), 1).unwrap().unwrap();
        assert_eq!(lhs, gamma_target(&tl, 1, &g).unwrap());
    }
}
