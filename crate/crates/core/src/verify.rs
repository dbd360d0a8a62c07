//! Machine checks: dimensions, defining relations, framework axioms, JM
//! families, central scalars, spectra, triangularity, Gelfand-Zeitlin
//! idempotents, branching and the Temperley-Lieb/Hecke bridge.

use std::cmp::Ordering;

use rayon::prelude::*;

use crate::arith::{RingContext, Scalar};
use crate::branching::{all_paths, beta, kappa_vector, paths, revlex_cmp, vertices, Lattice, Partition, Path, Vertex};
use crate::cellmod::{
    all_modules, central_idempotents, closure, intertwiner, murphy_element, CellModule,
};
use crate::error::{Error, Result};
use crate::jm::{central_matrix, gamma, jm_elements, quotient_jm};
use crate::linalg::{sv_axpy, sv_from_dense, sv_scale, sv_sub, Matrix};
use crate::report::{timed, Check};
use crate::tower::{Algebra, Element, Letter, TowerKind, TowerParams};

const WITNESS_LIMIT: usize = 240;

fn clip(s: String) -> String {
    if s.chars().count() <= WITNESS_LIMIT {
        s
    } else {
        let mut t: String = s.chars().take(WITNESS_LIMIT).collect();
        t.push_str("...");
        t
    }
}

fn elem_witness<K: Scalar>(alg: &Algebra<K>, lhs: &Element<K>, rhs: &Element<K>) -> String {
    clip(format!("difference {}", alg.render(&sv_sub(lhs, rhs))))
}

fn mat_witness<K: Scalar>(ctx: &RingContext, m: &Matrix<K>) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| m.row(i).iter().map(|c| c.render(ctx)).collect::<Vec<_>>().join(", "))
        .collect();
    clip(format!("[{}]", rows.join("; ")))
}

/// Closed-form dimension of A_n.
pub fn expected_dim(kind: TowerKind, n: usize) -> usize {
    let fact = |m: usize| (1..=m).product::<usize>();
    match kind {
        TowerKind::Brauer | TowerKind::Bmw => (1..=n).map(|i| 2 * i - 1).product(),
        TowerKind::TemperleyLieb => fact(2 * n) / fact(n) / fact(n + 1),
        TowerKind::Symmetric | TowerKind::Hecke => fact(n),
    }
}

/// The algebras A_1, .., A_n of one tower.
pub fn tower_algebras<K: Scalar>(kind: TowerKind, n: usize, ctx: &RingContext) -> Result<Vec<Algebra<K>>> {
    (1..=n).map(|m| Algebra::new(kind, m, ctx)).collect()
}

pub fn dimension_checks<K: Scalar>(alg: &Algebra<K>) -> Vec<Check> {
    let want = expected_dim(alg.kind(), alg.n());
    let got = alg.dim();
    let span = closure(alg, &[alg.one()], false, &|x| x.clone()).len();
    vec![
        Check::expect("dimension", None, got == want, || format!("basis has {got} elements, closed form {want}")),
        Check::expect("span of generator words", None, span == want, || {
            format!("products of generators span {span}, expected {want}")
        }),
    ]
}

/// A linear combination of words.
pub type Side<K> = Vec<(K, Vec<Letter>)>;

pub struct Relation<K> {
    pub name: String,
    pub lhs: Side<K>,
    pub rhs: Side<K>,
}

fn rel<K: Scalar>(name: String, lhs: Side<K>, rhs: Side<K>) -> Relation<K> {
    Relation { name, lhs, rhs }
}

fn w<K: Scalar>(letters: &[Letter]) -> Side<K> {
    vec![(K::one(), letters.to_vec())]
}

fn cw<K: Scalar>(c: K, letters: &[Letter]) -> Side<K> {
    vec![(c, letters.to_vec())]
}

/// The defining relations of A_n, one entry per index instance.
pub fn relations<K: Scalar>(kind: TowerKind, p: &TowerParams<K>, n: usize) -> Result<Vec<Relation<K>>> {
    use Letter::{SInv, E, S};
    let mut out = Vec::new();
    let m = n.saturating_sub(1);
    let has_s = kind != TowerKind::TemperleyLieb;
    let has_e = kind.has_e();
    let z = p.q.sub(&p.q.inv()?);
    let rho_inv = p.rho.inv()?;
    for i in 0..m {
        let t = i + 1;
        match kind {
            TowerKind::Bmw => {
                out.push(rel(format!("inverse g{t}g{t}^-1"), w(&[S(i), SInv(i)]), w(&[])));
                out.push(rel(format!("inverse g{t}^-1g{t}"), w(&[SInv(i), S(i)]), w(&[])));
                out.push(rel(
                    format!("skein g{t}-g{t}^-1"),
                    vec![(K::one(), vec![S(i)]), (K::one().neg(), vec![SInv(i)])],
                    vec![(z.clone(), vec![]), (z.neg(), vec![E(i)])],
                ));
            }
            TowerKind::Brauer | TowerKind::Symmetric => {
                out.push(rel(format!("involutive s{t}^2"), w(&[S(i), S(i)]), w(&[])));
            }
            TowerKind::Hecke => {
                let q = p.hecke_q.clone();
                out.push(rel(
                    format!("quadratic T{t}^2"),
                    w(&[S(i), S(i)]),
                    vec![(q.sub(&K::one()), vec![S(i)]), (q, vec![])],
                ));
                out.push(rel(format!("inverse T{t}T{t}^-1"), w(&[S(i), SInv(i)]), w(&[])));
            }
            TowerKind::TemperleyLieb => {}
        }
        if has_e {
            out.push(rel(format!("essential e{t}^2"), w(&[E(i), E(i)]), cw(p.delta.clone(), &[E(i)])));
        }
        if kind == TowerKind::Bmw || kind == TowerKind::Brauer {
            let r = if kind == TowerKind::Bmw { rho_inv.clone() } else { K::one() };
            out.push(rel(format!("untwist g{t}e{t}"), w(&[S(i), E(i)]), cw(r.clone(), &[E(i)])));
            out.push(rel(format!("untwist e{t}g{t}"), w(&[E(i), S(i)]), cw(r, &[E(i)])));
        }
        for j in 0..m {
            let u = j + 1;
            let adjacent = i.abs_diff(j) == 1;
            if adjacent {
                if has_e {
                    out.push(rel(format!("tangle e{t}e{u}e{t}"), w(&[E(i), E(j), E(i)]), w(&[E(i)])));
                }
                if has_e && has_s {
                    out.push(rel(format!("tangle g{t}g{u}e{t}"), w(&[S(i), S(j), E(i)]), w(&[E(j), E(i)])));
                    out.push(rel(format!("tangle e{t}g{u}g{t}"), w(&[E(i), S(j), S(i)]), w(&[E(i), E(j)])));
                    let r = if kind == TowerKind::Bmw { p.rho.clone() } else { K::one() };
                    out.push(rel(format!("untwist e{t}g{u}e{t}"), w(&[E(i), S(j), E(i)]), cw(r, &[E(i)])));
                }
                if has_s && j == i + 1 {
                    out.push(rel(format!("braid {t},{u}"), w(&[S(i), S(j), S(i)]), w(&[S(j), S(i), S(j)])));
                }
            }
            if j >= i + 2 {
                if has_s {
                    out.push(rel(format!("commute g{t}g{u}"), w(&[S(i), S(j)]), w(&[S(j), S(i)])));
                }
                if has_e {
                    out.push(rel(format!("commute e{t}e{u}"), w(&[E(i), E(j)]), w(&[E(j), E(i)])));
                }
                if has_e && has_s {
                    out.push(rel(format!("commute g{t}e{u}"), w(&[S(i), E(j)]), w(&[E(j), S(i)])));
                    out.push(rel(format!("commute g{u}e{t}"), w(&[S(j), E(i)]), w(&[E(i), S(j)])));
                }
            }
        }
    }
    Ok(out)
}

fn eval_side<K: Scalar>(alg: &Algebra<K>, side: &Side<K>) -> Result<Element<K>> {
    let mut out = Vec::new();
    for (c, word) in side {
        out = sv_axpy(&out, c, &alg.word(word)?);
    }
    Ok(out)
}

fn eval_side_matrix<K: Scalar>(m: &CellModule<K>, side: &Side<K>) -> Matrix<K> {
    side.iter().fold(Matrix::zeros(m.dim(), m.dim()), |acc, (c, word)| acc.add(&m.action_of_word(word).scale(c)))
}

pub fn relation_checks<K: Scalar>(alg: &Algebra<K>) -> Result<Vec<Check>> {
    relations(alg.kind(), alg.params(), alg.n())?
        .into_iter()
        .map(|r| {
            let (l, rr) = (eval_side(alg, &r.lhs)?, eval_side(alg, &r.rhs)?);
            Ok(Check::expect(r.name, None, l == rr, || elem_witness(alg, &l, &rr)))
        })
        .collect()
}

pub fn involution_checks<K: Scalar>(alg: &Algebra<K>) -> Vec<Check> {
    let mut anti = true;
    let mut square = true;
    let mut witness = String::new();
    for b in 0..alg.dim() {
        let x = alg.basis_element(b);
        let ix = alg.involve(&x);
        if alg.involve(&ix) != x {
            square = false;
        }
        for &g in &alg.generators() {
            let lhs = alg.involve(&alg.right_mul_letter(&x, g));
            let rhs = alg.left_mul_letter(g, &ix);
            if lhs != rhs && anti {
                anti = false;
                witness = format!("i({} {}) != {} i(..)", alg.basis()[b], g.name(alg.kind()), g.name(alg.kind()));
            }
        }
    }
    let fixed = alg.generators().iter().all(|&g| {
        let x = alg.letter(g).expect("generator");
        alg.involve(&x) == x
    });
    vec![
        Check::new("involution anti-multiplicative", None, anti, witness),
        Check::expect("involution squares to identity", None, square, || "i(i(b)) != b".into()),
        Check::expect("involution fixes generators", None, fixed, || "some generator moved".into()),
    ]
}

/// Basis labels with at most t through strands span a two-sided ideal.
pub fn through_strand_ideal_check<K: Scalar>(alg: &Algebra<K>) -> Check {
    let ts = |i: usize| alg.basis()[i].diagram().map(|d| d.through_strands()).unwrap_or(alg.n());
    for b in 0..alg.dim() {
        let x = alg.basis_element(b);
        for &g in &alg.generators() {
            for y in [alg.left_mul_letter(g, &x), alg.right_mul_letter(&x, g)] {
                if let Some((j, _)) = y.iter().find(|(j, _)| ts(*j) > ts(b)) {
                    return Check::new(
                        "through-strand ideals",
                        None,
                        false,
                        format!("{} times {} meets {}", alg.basis()[b], g.name(alg.kind()), alg.basis()[*j]),
                    );
                }
            }
        }
    }
    Check::new("through-strand ideals", None, true, "")
}

fn rank_of<K: Scalar>(vs: &[Element<K>], dim: usize) -> usize {
    if vs.is_empty() {
        return 0;
    }
    let cols: Vec<Vec<K>> = vs.iter().map(|v| crate::linalg::sv_to_dense(v, dim)).collect();
    Matrix::from_cols(dim, &cols).rank_fast()
}

/// Framework axioms for a tower with essential idempotents, at every index
/// whose algebras have rank at most n.
pub fn framework_checks<K: Scalar>(kind: TowerKind, n: usize, ctx: &RingContext) -> Result<Vec<Check>> {
    let algs = tower_algebras::<K>(kind, n, ctx)?;
    let top = &algs[n - 1];
    let mut checks = involution_checks(top);
    checks.push(Check::expect("A1 is the rank-one quotient algebra", None, algs[0].dim() == 1, || {
        format!("dim A1 = {}", algs[0].dim())
    }));
    if kind.has_e() {
        checks.push(through_strand_ideal_check(top));
    }
    for a in &algs {
        let mods = all_modules(a)?;
        let rank = crate::cellmod::representation_matrix(a, &mods)?.rank_fast();
        checks.push(Check::expect(format!("semisimple: faithful cell modules A{}", a.n()), None, rank == a.dim(), || {
            format!("representation rank {rank} < {}", a.dim())
        }));
    }
    if !kind.has_e() {
        return Ok(checks);
    }
    for m in 2..=n {
        checks.extend(axiom_quotient(&algs[m - 1])?);
    }
    for m in 1..n {
        let big = &algs[m];
        let e = big.letter(Letter::E(m - 1))?;
        let mid = &algs[m - 1];
        let incl = |src: &Algebra<K>, b: usize| big.include_from(src, &src.basis_element(b)).expect("include");
        // e_m commutes with A_{m-1} and e_m A_m e_m lies in A_{m-1} e_m.
        let commute = if m >= 2 {
            algs[m - 2].generators().iter().all(|&g| {
                big.right_mul_letter(&e, g) == big.left_mul_letter(g, &e)
            })
        } else {
            true
        };
        let low: Vec<Element<K>> = if m >= 2 {
            (0..algs[m - 2].dim()).map(|b| big.mul(&incl(&algs[m - 2], b), &e)).collect()
        } else {
            vec![e.clone()]
        };
        let base = rank_of(&low, big.dim());
        let mut sandwich_ok = true;
        for b in 0..mid.dim() {
            let x = big.mul(&big.mul(&e, &incl(mid, b)), &e);
            let mut vs = low.clone();
            vs.push(x);
            if rank_of(&vs, big.dim()) != base {
                sandwich_ok = false;
                break;
            }
        }
        checks.push(Check::expect(format!("e{m} commutes with A{}", m - 1), None, commute, || {
            "commutator with a generator is nonzero".into()
        }));
        checks.push(Check::expect(format!("e{m} A{m} e{m} in A{} e{m}", m - 1), None, sandwich_ok, || {
            "a sandwich escapes the span".into()
        }));
        let upper: Vec<Element<K>> =
            (0..big.dim()).map(|b| big.right_mul_letter(&big.basis_element(b), Letter::E(m - 1))).collect();
        let lower: Vec<Element<K>> = (0..mid.dim()).map(|b| big.mul(&incl(mid, b), &e)).collect();
        let (ru, rl) = (rank_of(&upper, big.dim()), rank_of(&lower, big.dim()));
        checks.push(Check::expect(format!("A{} e{m} = A{m} e{m}", m + 1), None, ru == rl, || {
            format!("ranks {ru} and {rl}")
        }));
        checks.push(Check::expect(format!("x -> x e{m} injective on A{m}"), None, rl == mid.dim(), || {
            format!("rank {rl} < dim {}", mid.dim())
        }));
        if m >= 2 {
            let ideal = closure(big, std::slice::from_ref(&e), true, &|x| x.clone());
            let target = big.letter(Letter::E(m - 2))?;
            let r0 = rank_of(&ideal, big.dim());
            let mut with = ideal.clone();
            with.push(target);
            let inside = rank_of(&with, big.dim()) == r0;
            checks.push(Check::expect(format!("e{} in A{} e{m} A{}", m - 1, m + 1, m + 1), None, inside, || {
                "not in the ideal".into()
            }));
        }
    }
    Ok(checks)
}

/// e_{m-1} is fixed by the involution and A_m / A_m e_{m-1} A_m is the
/// quotient tower algebra, as algebras with involution.
fn axiom_quotient<K: Scalar>(a: &Algebra<K>) -> Result<Vec<Check>> {
    let m = a.n();
    let e = a.letter(Letter::E(m - 2))?;
    let quot = a.quotient_algebra()?;
    let qdim = quot.as_ref().map(|q| q.dim()).unwrap_or(1);
    let ideal = closure(a, std::slice::from_ref(&e), true, &|x| x.clone());
    let images: Vec<Element<K>> = (0..a.dim()).map(|b| a.quotient_map(quot.as_ref(), &a.basis_element(b))).collect();
    let pi_rank = rank_of(&images, qdim);
    let killed = ideal.iter().all(|x| a.quotient_map(quot.as_ref(), x).is_empty());
    let pi_mul = |x: &Element<K>, y: &Element<K>| -> Element<K> {
        match &quot {
            Some(q) => q.mul(x, y),
            None => match (x.first(), y.first()) {
                (Some((_, c)), Some((_, d))) => vec![(0, c.mul(d))],
                _ => Vec::new(),
            },
        }
    };
    let mut hom = true;
    let mut inv = true;
    for b in 0..a.dim() {
        let x = a.basis_element(b);
        for &g in &a.generators() {
            let lhs = a.quotient_map(quot.as_ref(), &a.left_mul_letter(g, &x));
            let rhs = pi_mul(&a.quotient_map(quot.as_ref(), &a.letter(g)?), &images[b]);
            hom &= lhs == rhs;
        }
        let lhs = a.quotient_map(quot.as_ref(), &a.involve(&x));
        let rhs = match &quot {
            Some(q) => q.involve(&images[b]),
            None => images[b].clone(),
        };
        inv &= lhs == rhs;
    }
    Ok(vec![
        Check::expect(format!("i(e{}) = e{}", m - 1, m - 1), None, a.involve(&e) == e, || "moved".into()),
        Check::expect(format!("A{m} e{} A{m} is the kernel of the quotient map", m - 1), None, killed && ideal.len() + pi_rank == a.dim(), || {
            format!("ideal dim {}, quotient rank {pi_rank}, algebra dim {}", ideal.len(), a.dim())
        }),
        Check::expect(format!("quotient of A{m} has dimension dim Q{m}"), None, pi_rank == qdim, || {
            format!("rank {pi_rank} vs {qdim}")
        }),
        Check::expect(format!("quotient map on A{m} is multiplicative"), None, hom, || "pi(gx) != pi(g)pi(x)".into()),
        Check::expect(format!("quotient map on A{m} respects the involution"), None, inv, || "pi(i(x)) != i(pi(x))".into()),
    ])
}

/// JM family axioms: commutation, involution invariance, quotient
/// compatibility and the gamma relations.
pub fn jm_checks<K: Scalar>(kind: TowerKind, n: usize, ctx: &RingContext) -> Result<Vec<Check>> {
    let algs = tower_algebras::<K>(kind, n, ctx)?;
    let top = &algs[n - 1];
    let ls = jm_elements(top)?;
    let mut checks = Vec::new();
    let mut comm = true;
    let mut witness = String::new();
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (top.mul(&ls[i], &ls[j]), top.mul(&ls[j], &ls[i]));
            if a != b && comm {
                comm = false;
                witness = format!("L{} L{}: {}", i + 1, j + 1, elem_witness(top, &a, &b));
            }
        }
    }
    checks.push(Check::new("JM elements commute", None, comm, witness));
    for (j, l) in ls.iter().enumerate() {
        let ok = top.involve(l) == *l;
        checks.push(Check::expect(format!("L{} invariant under the involution", j + 1), None, ok, || {
            elem_witness(top, &top.involve(l), l)
        }));
    }
    for m in 1..=n {
        let a = &algs[m - 1];
        let lm = jm_elements(a)?.pop().unwrap();
        let bad = a.generators().into_iter().filter(|g| g.index() + 2 < m).find(|&g| {
            a.left_mul_letter(g, &lm) != a.right_mul_letter(&lm, g)
        });
        checks.push(Check::expect(format!("L{m} commutes with A{}", m - 1), None, bad.is_none(), || {
            format!("fails for {}", bad.unwrap().name(kind))
        }));
        let quot = a.quotient_algebra()?;
        let target = quotient_jm(a, quot.as_ref())?.pop().unwrap();
        let image = a.quotient_map(quot.as_ref(), &lm);
        checks.push(Check::expect(format!("quotient of L{m} is the quotient JM element"), None, image == target, || {
            clip(format!("{image:?} vs {target:?}"))
        }));
    }
    for j in 1..n {
        let a = &algs[j];
        let Some(g) = gamma(kind, a.params(), j)? else { continue };
        let ls = jm_elements(a)?;
        let pair = if kind.is_multiplicative() {
            a.mul(&ls[j - 1], &ls[j])
        } else {
            sv_axpy(&ls[j - 1], &K::one(), &ls[j])
        };
        let e = Letter::E(j - 1);
        let target = sv_scale(&a.letter(e)?, &g);
        let right = a.right_mul_letter(&pair, e);
        let left = a.left_mul_letter(e, &pair);
        let ok = right == target && left == target;
        let op = if kind.is_multiplicative() { "L{j}L{k}" } else { "(L{j}+L{k})" };
        let name = op.replace("{j}", &j.to_string()).replace("{k}", &(j + 1).to_string());
        checks.push(Check::expect(format!("gamma relation {name} e{j} = {}", g.render(ctx)), None, ok, || {
            elem_witness(a, &right, &target)
        }));
    }
    Ok(checks)
}

fn vertex_label(v: &Vertex) -> Option<String> {
    Some(v.to_string())
}

fn is_scalar_matrix<K: Scalar>(m: &Matrix<K>, c: &K) -> bool {
    *m == Matrix::scalar(m.rows(), c)
}

/// Central scalars, spectra, triangularity and module relations for every
/// cell module of A_n.
pub fn module_checks<K: Scalar>(alg: &Algebra<K>) -> Result<Vec<Check>> {
    let vs = vertices(Lattice::of(alg.kind()), alg.n());
    let rels = relations(alg.kind(), alg.params(), alg.n())?;
    let per_vertex: Vec<Result<Vec<Check>>> =
        vs.par_iter().map(|v| timed(|| vertex_checks(alg, v, &rels))).collect();
    let mut out = Vec::new();
    for r in per_vertex {
        out.extend(r?);
    }
    Ok(out)
}

fn vertex_checks<K: Scalar>(alg: &Algebra<K>, v: &Vertex, rels: &[Relation<K>]) -> Result<Vec<Check>> {
    let kind = alg.kind();
    let ctx = alg.ctx();
    let vl = vertex_label(v);
    let module = CellModule::build(alg, v)?;
    let ps = paths(v);
    let d = module.dim();
    let mut checks = vec![Check::expect("cell module dimension", vl.clone(), d == ps.len(), || {
        format!("dimension {d}, {} paths", ps.len())
    })];
    if d != ps.len() {
        return Ok(checks);
    }
    let bad_rel = rels.iter().find(|r| eval_side_matrix(&module, &r.lhs) != eval_side_matrix(&module, &r.rhs));
    checks.push(Check::expect("module satisfies defining relations", vl.clone(), bad_rel.is_none(), || {
        bad_rel.unwrap().name.clone()
    }));
    let ls = module.jm(alg)?;
    let b = beta(kind, alg.params(), v)?;
    let central = central_matrix(kind, &ls, d);
    checks.push(Check::expect(format!("central scalar {}", b.render(ctx)), vl.clone(), is_scalar_matrix(&central, &b), || {
        mat_witness(ctx, &central)
    }));
    let kappas: Vec<Vec<K>> = ps.iter().map(|t| kappa_vector(kind, alg.params(), t)).collect::<Result<_>>()?;
    for (j, l) in ls.iter().enumerate() {
        let roots: Vec<K> = kappas.iter().map(|k| k[j].clone()).collect();
        let ok = crate::linalg::roots_match(&l.charpoly(), &roots);
        checks.push(Check::expect(format!("spectrum of L{}", j + 1), vl.clone(), ok, || {
            let rs: Vec<String> = roots.iter().map(|r| r.render(ctx)).collect();
            clip(format!("characteristic polynomial does not split as {{{}}}", rs.join(", ")))
        }));
    }
    match module.path_basis(alg) {
        Err(e) => checks.push(Check::new("path basis", vl.clone(), false, e.to_string())),
        Ok(pb) => {
            for (j, l) in pb.jm.iter().enumerate() {
                let mut ok = true;
                let mut witness = String::new();
                for s in 0..d {
                    for t in 0..d {
                        let x = l.get(s, t);
                        let fine = if s == t {
                            *x == kappas[t][j]
                        } else {
                            x.is_zero() || revlex_cmp(&ps[s].steps, &ps[t].steps) == Ordering::Greater
                        };
                        if !fine && ok {
                            ok = false;
                            witness = clip(format!("entry ({s},{t}) = {}", x.render(ctx)));
                        }
                    }
                }
                checks.push(Check::new(format!("L{} triangular with diagonal kappa", j + 1), vl.clone(), ok, witness));
            }
            // Generators of A_k act block-triangularly for the tails t[k..n].
            let mut ok = true;
            let mut witness = String::new();
            for k in 1..alg.n() {
                for g in alg.generators().into_iter().filter(|g| g.index() + 1 < k) {
                    let m = &pb.actions[&g];
                    for s in 0..d {
                        for t in 0..d {
                            let c = revlex_cmp(ps[s].tail(k), ps[t].tail(k));
                            if !m.get(s, t).is_zero() && c == Ordering::Less && ok {
                                ok = false;
                                witness = format!("{} at ({s},{t}) for tails from level {k}", g.name(kind));
                            }
                        }
                    }
                }
            }
            checks.push(Check::new("subalgebras act triangularly on path tails", vl.clone(), ok, witness));
        }
    }
    Ok(checks)
}

type Blocks<K> = Vec<Matrix<K>>;

fn blocks_mul<K: Scalar>(a: &Blocks<K>, b: &Blocks<K>) -> Blocks<K> {
    a.iter().zip(b).map(|(x, y)| x.mul(y)).collect()
}

fn blocks_add<K: Scalar>(a: &Blocks<K>, b: &Blocks<K>) -> Blocks<K> {
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

fn blocks_scalar<K: Scalar>(dims: &[usize], c: &K) -> Blocks<K> {
    dims.iter().map(|&d| Matrix::scalar(d, c)).collect()
}

fn blocks_zero<K: Scalar>(b: &Blocks<K>) -> bool {
    b.iter().all(|m| m.is_zero())
}

fn distinct<K: Scalar>(xs: impl IntoIterator<Item = K>) -> Vec<K> {
    let mut out: Vec<K> = Vec::new();
    for x in xs {
        if !out.contains(&x) {
            out.push(x);
        }
    }
    out
}

/// Gelfand-Zeitlin idempotents in the faithful representation ⊕ Δ^v at
/// level n, built by interpolation in the JM elements.
pub struct GzFamily<K> {
    pub paths: Vec<Vec<Path>>,
    /// `idempotents[k][i]` belongs to `paths[k][i]`, a path of length k.
    pub idempotents: Vec<Vec<Blocks<K>>>,
}

pub fn gz_family<K: Scalar>(alg: &Algebra<K>, modules: &[CellModule<K>]) -> Result<GzFamily<K>> {
    let kind = alg.kind();
    let n = alg.n();
    let dims: Vec<usize> = modules.iter().map(|m| m.dim()).collect();
    let jm: Vec<Blocks<K>> = {
        let per: Vec<Vec<Matrix<K>>> = modules.iter().map(|m| m.jm(alg)).collect::<Result<_>>()?;
        (0..n).map(|j| per.iter().map(|ls| ls[j].clone()).collect()).collect()
    };
    let lattice = Lattice::of(kind);
    let mut all = vec![vec![Path { steps: vec![Vertex::root(lattice)] }]];
    let mut idempotents = vec![vec![blocks_scalar(&dims, &K::one())]];
    let mut spectra: Vec<Vec<K>> = Vec::new();
    for k in 1..=n {
        let ps = all_paths(lattice, k);
        let kv: Vec<Vec<K>> = ps.iter().map(|t| kappa_vector(kind, alg.params(), t)).collect::<Result<_>>()?;
        spectra.push(distinct(kv.iter().map(|v| v[k - 1].clone())));
        let mut fs = Vec::with_capacity(ps.len());
        for (t, kappa) in ps.iter().zip(&kv) {
            // F_t = F_{t[0,k-1]} * prod over other eigenvalues c of (L_k - c)/(kappa - c).
            let parent = all[k - 1].iter().position(|s| *s == t.prefix(k - 1)).expect("prefix is a path");
            let mut f = idempotents[k - 1][parent].clone();
            let own = &kappa[k - 1];
            for c in &spectra[k - 1] {
                if c == own {
                    continue;
                }
                let denom = own.sub(c).inv()?;
                let factor: Blocks<K> = jm[k - 1]
                    .iter()
                    .map(|l| l.sub(&Matrix::scalar(l.rows(), c)).scale(&denom))
                    .collect();
                f = blocks_mul(&f, &factor);
            }
            fs.push(f);
        }
        all.push(ps);
        idempotents.push(fs);
    }
    Ok(GzFamily { paths: all, idempotents })
}

pub fn gz_checks<K: Scalar>(alg: &Algebra<K>) -> Result<Vec<Check>> {
    let kind = alg.kind();
    let n = alg.n();
    let modules = all_modules(alg)?;
    let dims: Vec<usize> = modules.iter().map(|m| m.dim()).collect();
    let mut checks = Vec::new();

    let mut separated = true;
    let mut witness = String::new();
    for k in 1..=n {
        let ps = all_paths(Lattice::of(kind), k);
        let kv: Vec<Vec<K>> = ps.iter().map(|t| kappa_vector(kind, alg.params(), t)).collect::<Result<_>>()?;
        for i in 0..ps.len() {
            for j in i + 1..ps.len() {
                if kv[i] == kv[j] && separated {
                    separated = false;
                    witness = format!("{} and {} share eigenvalues", ps[i], ps[j]);
                }
            }
        }
    }
    checks.push(Check::new("separation", None, separated, witness));
    if !separated {
        return Ok(checks);
    }
    let rank = crate::cellmod::representation_matrix(alg, &modules)?.rank_fast();
    checks.push(Check::expect("cell modules are jointly faithful", None, rank == alg.dim(), || {
        format!("rank {rank} < {}", alg.dim())
    }));

    let fam = gz_family(alg, &modules)?;
    let top = &fam.idempotents[n];
    let top_paths = &fam.paths[n];
    let idem = top.iter().all(|f| blocks_mul(f, f) == *f);
    checks.push(Check::expect("GZ idempotents are idempotent", None, idem, || "F^2 != F".into()));
    let mut orth = true;
    for i in 0..top.len() {
        for j in 0..top.len() {
            if i != j && !blocks_zero(&blocks_mul(&top[i], &top[j])) {
                orth = false;
            }
        }
    }
    checks.push(Check::expect("GZ idempotents are orthogonal", None, orth, || "F_s F_t != 0".into()));
    let sum = top.iter().fold(blocks_scalar(&dims, &K::zero()), |acc, f| blocks_add(&acc, f));
    checks.push(Check::expect("GZ idempotents sum to one", None, sum == blocks_scalar(&dims, &K::one()), || {
        "sum differs from the identity".into()
    }));
    let mut prefix = true;
    let mut witness = String::new();
    for k in 1..n {
        for (s, fs) in fam.paths[k].iter().zip(&fam.idempotents[k]) {
            for (t, ft) in top_paths.iter().zip(top) {
                let prod = blocks_mul(fs, ft);
                let want_t = t.prefix(k) == *s;
                let ok = if want_t { prod == *ft } else { blocks_zero(&prod) };
                if !ok && prefix {
                    prefix = false;
                    witness = format!("F_{s} F_{t}");
                }
            }
        }
    }
    checks.push(Check::new("F_s F_t = F_t exactly when s is a prefix of t", None, prefix, witness));
    for (i, m) in modules.iter().enumerate() {
        let z = top_paths
            .iter()
            .zip(top)
            .filter(|(t, _)| t.end() == m.vertex())
            .fold(blocks_scalar(&dims, &K::zero()), |acc, (_, f)| blocks_add(&acc, f));
        let target: Blocks<K> = dims
            .iter()
            .enumerate()
            .map(|(j, &d)| if j == i { Matrix::identity(d) } else { Matrix::zeros(d, d) })
            .collect();
        checks.push(Check::expect("sum of F_t over paths to the vertex is its central idempotent", vertex_label(m.vertex()), z == target, || {
            "block image differs from the block identity".into()
        }));
    }
    let jm: Vec<Vec<Matrix<K>>> = modules.iter().map(|m| m.jm(alg)).collect::<Result<_>>()?;
    let mut eig = true;
    for (t, f) in top_paths.iter().zip(top) {
        let kv = kappa_vector(kind, alg.params(), t)?;
        for j in 0..n {
            let l: Blocks<K> = jm.iter().map(|ls| ls[j].clone()).collect();
            let lhs = blocks_mul(&l, f);
            let rhs: Blocks<K> = f.iter().map(|m| m.scale(&kv[j])).collect();
            eig &= lhs == rhs;
        }
    }
    checks.push(Check::expect("L_j F_t = kappa(j,t) F_t", None, eig, || "eigen relation fails".into()));
    // Dimension of the unital algebra generated by the JM elements.
    let flat = |b: &Blocks<K>| -> Element<K> {
        sv_from_dense(&b.iter().flat_map(|m| m.data().iter().cloned()).collect::<Vec<_>>())
    };
    let mut ech = crate::linalg::Echelon::new();
    let one = blocks_scalar(&dims, &K::one());
    ech.insert(&flat(&one), Vec::new());
    let mut queue = vec![one];
    while let Some(x) = queue.pop() {
        for j in 0..n {
            let l: Blocks<K> = jm.iter().map(|ls| ls[j].clone()).collect();
            let y = blocks_mul(&x, &l);
            if ech.insert(&flat(&y), Vec::new()) {
                queue.push(y);
            }
        }
    }
    let want = top_paths.len();
    checks.push(Check::expect("JM elements generate an algebra of dimension #paths", None, ech.rank() == want, || {
        format!("dimension {} vs {want} paths", ech.rank())
    }));
    Ok(checks)
}

/// Restriction of each level-n cell module to A_{n-1}: multiplicities from
/// central idempotents of A_{n-1} agree with branching edges, and each
/// isotypic piece is isomorphic to the expected cell module.
pub fn branching_checks<K: Scalar>(kind: TowerKind, n: usize, ctx: &RingContext) -> Result<Vec<Check>> {
    if n < 2 {
        return Ok(vec![Check::new("restriction to rank zero", None, true, "")]);
    }
    let big = Algebra::<K>::new(kind, n, ctx)?;
    let small = Algebra::<K>::new(kind, n - 1, ctx)?;
    let big_mods = all_modules(&big)?;
    let small_mods = all_modules(&small)?;
    let zs = central_idempotents(&small, &small_mods)?;
    let letters: Vec<Letter> = small.letters().to_vec();
    let mut checks = Vec::new();
    for m in &big_mods {
        let v = m.vertex();
        let edges: Vec<Vertex> = small_mods.iter().map(|s| s.vertex().clone()).filter(|u| u.edges().contains(v)).collect();
        let mut total = 0;
        let mut ok = true;
        let mut found = Vec::new();
        let mut witness = String::new();
        for (s, z) in small_mods.iter().zip(&zs) {
            let zb = big.include_from(&small, z)?;
            let zm = m.action_of_element(&big, &zb)?;
            let r = zm.rank();
            let expected = usize::from(edges.contains(s.vertex()));
            if r % s.dim() != 0 || r / s.dim() != expected {
                ok = false;
                witness = format!("{} occurs with rank {r}", s.vertex());
                continue;
            }
            total += r;
            if r == 0 {
                continue;
            }
            found.push(s.vertex().to_string());
            // The image of z is a submodule isomorphic to the small cell module.
            let basis = zm.sub(&Matrix::identity(m.dim())).kernel();
            let b = Matrix::from_cols(m.dim(), &basis);
            // The identity is listed so that A_1, which has no generators,
            // still compares dimensions.
            let restricted: Vec<Matrix<K>> = std::iter::once(Matrix::identity(b.cols()))
                .chain(letters.iter().map(|l| b.solve(&m.action(*l).mul(&b)).expect("image of a central idempotent is invariant")))
                .collect();
            let small_actions: Vec<Matrix<K>> =
                std::iter::once(Matrix::identity(s.dim())).chain(letters.iter().map(|l| s.action(*l).clone())).collect();
            if intertwiner(&small_actions, &restricted).is_none() {
                ok = false;
                witness = format!("piece at {} is not isomorphic to its cell module", s.vertex());
            }
        }
        ok &= total == m.dim();
        let w = if ok { format!("subquotients {}", found.join(" > ")) } else { witness };
        checks.push(Check::new("restriction matches branching edges", vertex_label(v), ok, w));
    }
    Ok(checks)
}

/// The Temperley-Lieb quotient of the Hecke algebra at Q = qhalf^2 via
/// T_j -> qhalf e_j - 1.
pub fn bridge_checks<K: Scalar>(n: usize, ctx: &RingContext) -> Result<Vec<Check>> {
    let tl = Algebra::<K>::new(TowerKind::TemperleyLieb, n, ctx)?;
    let p = tl.params().clone();
    let hp = TowerParams { hecke_q: p.hecke_q.clone(), q: p.hecke_q.clone(), ..p.clone() };
    let hecke = Algebra::<K>::with_params(TowerKind::Hecke, n, ctx, hp)?;
    let phi_letter = |i: usize| -> Element<K> {
        sv_axpy(&sv_scale(&tl.letter(Letter::E(i)).unwrap(), &p.qhalf), &K::one().neg(), &tl.one())
    };
    let phi_basis: Vec<Element<K>> = (0..hecke.dim())
        .map(|b| {
            let (c, word) = hecke.basis_word(b);
            let x = word.iter().fold(tl.one(), |acc, l| tl.mul(&acc, &phi_letter(l.index())));
            sv_scale(&x, c)
        })
        .collect();
    let phi = |x: &Element<K>| -> Element<K> {
        x.iter().fold(Vec::new(), |acc, (b, c)| sv_axpy(&acc, c, &phi_basis[*b]))
    };
    let mut checks = Vec::new();

    let mut hom = true;
    for b in 0..hecke.dim() {
        for i in 0..n.saturating_sub(1) {
            let lhs = phi(&hecke.right_mul_letter(&hecke.basis_element(b), Letter::S(i)));
            let rhs = tl.mul(&phi_basis[b], &phi_letter(i));
            hom &= lhs == rhs;
        }
    }
    checks.push(Check::expect("phi is an algebra homomorphism", None, hom, || "phi(T_w T_i) != phi(T_w) phi(T_i)".into()));
    let rels = relations(TowerKind::Hecke, hecke.params(), n)?;
    let bad = rels
        .iter()
        .filter(|r| !r.name.starts_with("inverse"))
        .find(|r| phi(&eval_side(&hecke, &r.lhs).unwrap()) != phi(&eval_side(&hecke, &r.rhs).unwrap()));
    checks.push(Check::expect("phi preserves the Hecke relations", None, bad.is_none(), || bad.unwrap().name.clone()));
    let xis: Vec<Element<K>> = (0..n.saturating_sub(2))
        .map(|i| {
            let words: [&[Letter]; 6] = [
                &[Letter::S(i), Letter::S(i + 1), Letter::S(i)],
                &[Letter::S(i), Letter::S(i + 1)],
                &[Letter::S(i + 1), Letter::S(i)],
                &[Letter::S(i)],
                &[Letter::S(i + 1)],
                &[],
            ];
            words.iter().fold(Vec::new(), |acc, wd| sv_axpy(&acc, &K::one(), &hecke.word(wd).unwrap()))
        })
        .collect();
    if n >= 3 {
        let zero = xis.iter().all(|x| phi(x).is_empty());
        checks.push(Check::expect("phi(xi) = 0", None, zero, || "nonzero image".into()));
        let ideal = closure(&hecke, &xis, true, &|x| x.clone());
        let catalan = expected_dim(TowerKind::TemperleyLieb, n);
        checks.push(Check::expect("xi generates a kernel of codimension Catalan(n)", None, ideal.len() + catalan == hecke.dim(), || {
            format!("ideal dimension {}", ideal.len())
        }));
    }
    let image_rank = rank_of(&phi_basis, tl.dim());
    checks.push(Check::expect("rank of phi equals Catalan(n)", None, image_rank == tl.dim(), || {
        format!("rank {image_rank} vs {}", tl.dim())
    }));

    for k in (0..=n).rev().filter(|k| (n - k).is_multiple_of(2)) {
        let a = (n - k) / 2;
        let v = Vertex::tl(k, n)?;
        let shape = Partition::two_column(k, n);
        let m = murphy_element(&hecke, &shape);
        let evens: Vec<Letter> = (0..a).map(|i| Letter::E(2 * i)).collect();
        let chain = tl.word(&evens)?;
        let expected = sv_scale(&chain, &p.qhalf.pow_i(a as i64)?);
        let got = phi(&m);
        checks.push(Check::expect(
            if a == 0 { "phi(m_lambda) = 1".to_string() } else { format!("phi(m_lambda) = qhalf^{a} e1 e3 ..") },
            vertex_label(&v),
            got == expected,
            || elem_witness(&tl, &got, &expected),
        ));
        // The ideal generated by phi(m_lambda) is the span of diagrams with at
        // most k through strands.
        let ideal = closure(&tl, std::slice::from_ref(&got), true, &|x| x.clone());
        let span = tl.basis().iter().filter(|l| l.diagram().unwrap().through_strands() <= k).count();
        let inside = ideal.iter().all(|x| x.iter().all(|(i, _)| tl.basis()[*i].diagram().unwrap().through_strands() <= k));
        checks.push(Check::expect("ideal of phi(m_lambda) equals the through-strand ideal", vertex_label(&v), inside && ideal.len() == span, || {
            format!("ideal dimension {} vs {span}", ideal.len())
        }));
        let ours = CellModule::build(&tl, &v)?;
        let theirs = CellModule::from_generator(&tl, &v, &got)?;
        let gens = tl.generators();
        let a_m: Vec<Matrix<K>> = gens.iter().map(|l| theirs.action(*l).clone()).collect();
        let b_m: Vec<Matrix<K>> = gens.iter().map(|l| ours.action(*l).clone()).collect();
        let iso = ours.dim() == theirs.dim() && (gens.is_empty() || intertwiner(&a_m, &b_m).is_some());
        checks.push(Check::expect("cell module from phi(m_lambda) is isomorphic to the e-chain module", vertex_label(&v), iso, || {
            format!("dimensions {} and {}", theirs.dim(), ours.dim())
        }));
    }
    // Ratio of central scalars on (k, n) and (k, n-2), read off the modules.
    let lower = if n >= 3 { Some(Algebra::<K>::new(TowerKind::TemperleyLieb, n - 2, ctx)?) } else { None };
    if let Some(lower) = lower {
        let ratio_target = p.hecke_q.pow_i(3 - n as i64)?;
        for k in (0..=n - 2).rev().filter(|k| (n - k).is_multiple_of(2)) {
            let scalar = |a: &Algebra<K>, v: &Vertex| -> Result<K> {
                let m = CellModule::build(a, v)?;
                let c = central_matrix(TowerKind::TemperleyLieb, &m.jm(a)?, m.dim());
                Ok(c.get(0, 0).clone())
            };
            let hi = scalar(&tl, &Vertex::tl(k, n)?)?;
            let lo = scalar(&lower, &Vertex::tl(k, n - 2)?)?;
            let ratio = hi.div(&lo)?;
            let formula = beta(TowerKind::TemperleyLieb, &p, &Vertex::tl(k, n)?)?
                .div(&beta(TowerKind::TemperleyLieb, &p, &Vertex::tl(k, n - 2)?)?)?;
            checks.push(Check::expect(
                format!("alpha ratio q^{}", 3 - n as i64),
                Some(format!("({k},{n})/({k},{})", n - 2)),
                ratio == ratio_target && formula == ratio_target,
                || format!("observed {}", ratio.render(ctx)),
            ));
        }
    }
    Ok(checks)
}

/// Fails with a usage error for n = 0.
pub fn require_rank(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::Usage("n must be at least 1".into()))
    } else {
        Ok(())
    }
}
