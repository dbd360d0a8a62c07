//! The five towers as concrete algebras with distinguished bases.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use serde_json::json;

use crate::arith::{RingContext, Scalar};
use crate::diagrams::BrauerDiagram;
use crate::error::{Error, Result};
use crate::linalg::{sv_axpy, sv_from_pairs, sv_scale, Matrix, SparseVec};
use crate::perm::Perm;
use crate::skein::{normal_form_word, Over, SkeinEngine, Slice, Strategy};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum TowerKind {
    TemperleyLieb,
    Brauer,
    Symmetric,
    Hecke,
    Bmw,
}

impl TowerKind {
    pub const ALL: [TowerKind; 5] =
        [TowerKind::TemperleyLieb, TowerKind::Brauer, TowerKind::Symmetric, TowerKind::Hecke, TowerKind::Bmw];

    pub fn name(self) -> &'static str {
        match self {
            TowerKind::TemperleyLieb => "tl",
            TowerKind::Brauer => "brauer",
            TowerKind::Symmetric => "sym",
            TowerKind::Hecke => "hecke",
            TowerKind::Bmw => "bmw",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_lowercase().as_str() {
            "tl" | "temperley-lieb" => Some(TowerKind::TemperleyLieb),
            "brauer" => Some(TowerKind::Brauer),
            "sym" | "symmetric" => Some(TowerKind::Symmetric),
            "hecke" => Some(TowerKind::Hecke),
            "bmw" => Some(TowerKind::Bmw),
            _ => None,
        }
    }

    /// Parameter names of the generic ground ring.
    pub fn variables(self) -> &'static [&'static str] {
        match self {
            TowerKind::TemperleyLieb => &["qhalf"],
            TowerKind::Brauer => &["delta"],
            TowerKind::Symmetric => &[],
            TowerKind::Hecke => &["q"],
            TowerKind::Bmw => &["rho", "q"],
        }
    }

    /// Whether the JM family is multiplicative (products) or additive (sums).
    pub fn is_multiplicative(self) -> bool {
        matches!(self, TowerKind::TemperleyLieb | TowerKind::Hecke | TowerKind::Bmw)
    }

    /// Whether the tower has the essential idempotents e_i.
    pub fn has_e(self) -> bool {
        matches!(self, TowerKind::TemperleyLieb | TowerKind::Brauer | TowerKind::Bmw)
    }

}

impl fmt::Display for TowerKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A generator with 0-based index: `E(i)` is e_{i+1}, `S(i)` is s_{i+1}
/// (respectively T_{i+1}, g_{i+1}), `SInv(i)` its inverse.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Letter {
    E(usize),
    S(usize),
    SInv(usize),
}

impl Letter {
    pub fn index(self) -> usize {
        match self {
            Letter::E(i) | Letter::S(i) | Letter::SInv(i) => i,
        }
    }

    pub fn name(self, kind: TowerKind) -> String {
        let s = match kind {
            TowerKind::Hecke => "T",
            TowerKind::Bmw => "g",
            _ => "s",
        };
        match self {
            Letter::E(i) => format!("e{}", i + 1),
            Letter::S(i) => format!("{s}{}", i + 1),
            Letter::SInv(i) => format!("{s}{}^-1", i + 1),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Label {
    Diagram(BrauerDiagram),
    Perm(Perm),
}

impl Label {
    pub fn include(&self, m: usize) -> Label {
        match self {
            Label::Diagram(d) => Label::Diagram(d.include(m)),
            Label::Perm(p) => Label::Perm(p.extend(m)),
        }
    }

    pub fn diagram(&self) -> Option<&BrauerDiagram> {
        match self {
            Label::Diagram(d) => Some(d),
            Label::Perm(_) => None,
        }
    }

    pub fn perm(&self) -> Option<&Perm> {
        match self {
            Label::Perm(p) => Some(p),
            Label::Diagram(_) => None,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Diagram(d) => write!(f, "{d}"),
            Label::Perm(p) => write!(f, "{p}"),
        }
    }
}

/// Scalars attached to a tower. Entries a tower does not use are one.
#[derive(Clone, Debug)]
pub struct TowerParams<K> {
    pub delta: K,
    /// The Hecke parameter: (T - Q)(T + 1) = 0.
    pub hecke_q: K,
    pub qhalf: K,
    pub rho: K,
    pub q: K,
}

impl<K: Scalar> TowerParams<K> {
    pub fn from_context(kind: TowerKind, ctx: &RingContext) -> Result<Self> {
        let want = kind.variables();
        if ctx.vars().len() != want.len() || ctx.vars().iter().zip(want).any(|(a, b)| a != b) {
            return Err(Error::InvalidContext(format!(
                "tower {} needs variables {:?}, got {:?}",
                kind,
                want,
                ctx.vars()
            )));
        }
        let one = K::one();
        let mut p = Self { delta: one.clone(), hecke_q: one.clone(), qhalf: one.clone(), rho: one.clone(), q: one };
        match kind {
            TowerKind::TemperleyLieb => {
                let x = K::parameter(ctx, 0);
                p.delta = x.add(&x.inv()?);
                p.hecke_q = x.mul(&x);
                p.qhalf = x;
            }
            TowerKind::Brauer => p.delta = K::parameter(ctx, 0),
            TowerKind::Symmetric => {}
            TowerKind::Hecke => {
                p.hecke_q = K::parameter(ctx, 0);
                p.q = p.hecke_q.clone();
            }
            TowerKind::Bmw => {
                let rho = K::parameter(ctx, 0);
                let q = K::parameter(ctx, 1);
                let q_inv = q.inv()?;
                let denom = q_inv.sub(&q);
                if denom.is_zero() {
                    return Err(Error::GenericityViolation(format!(
                        "q^-1 - q vanishes at {}",
                        ctx.assignment()
                    )));
                }
                p.delta = rho.inv()?.sub(&rho).div(&denom)?.add(&K::one());
                p.hecke_q = q.mul(&q);
                p.rho = rho;
                p.q = q;
            }
        }
        Ok(p)
    }
}

pub type Element<K> = SparseVec<K>;

type Table<K> = Vec<OnceLock<SparseVec<K>>>;

pub struct Algebra<K: Scalar> {
    kind: TowerKind,
    n: usize,
    ctx: RingContext,
    params: TowerParams<K>,
    basis: Vec<Label>,
    index: HashMap<Label, usize>,
    identity: usize,
    letters: Vec<Letter>,
    left: HashMap<Letter, Table<K>>,
    right: HashMap<Letter, Table<K>>,
    words: Vec<(K, Vec<Letter>)>,
    involution: Table<K>,
    skein: Option<SkeinEngine<K>>,
}

fn basis_for(kind: TowerKind, n: usize) -> Vec<Label> {
    match kind {
        TowerKind::Symmetric | TowerKind::Hecke => {
            let mut perms = Perm::all(n);
            perms.sort_by_key(|p| (p.length(), p.clone()));
            perms.into_iter().map(Label::Perm).collect()
        }
        _ => {
            let mut ds = if kind == TowerKind::TemperleyLieb {
                BrauerDiagram::enumerate_planar(n)
            } else {
                BrauerDiagram::enumerate(n)
            };
            ds.sort_by_key(|d| (d.through_strands(), d.clone()));
            ds.into_iter().map(Label::Diagram).collect()
        }
    }
}

/// Number of basis elements; no algebra is built.
pub fn dimension(kind: TowerKind, n: usize) -> usize {
    basis_for(kind, n).len()
}

impl<K: Scalar> Algebra<K> {
    /// The tower algebra of rank `n` over the parameters of `ctx`.
    pub fn new(kind: TowerKind, n: usize, ctx: &RingContext) -> Result<Self> {
        let params = TowerParams::from_context(kind, ctx)?;
        Self::with_params(kind, n, ctx, params)
    }

    /// Builds a tower algebra with explicitly chosen scalars, e.g. the Hecke
    /// algebra with parameter q^2 inside a BMW context.
    pub fn with_params(kind: TowerKind, n: usize, ctx: &RingContext, params: TowerParams<K>) -> Result<Self> {
        let basis = basis_for(kind, n);
        let index: HashMap<Label, usize> = basis.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
        let id_label = match kind {
            TowerKind::Symmetric | TowerKind::Hecke => Label::Perm(Perm::identity(n)),
            _ => Label::Diagram(BrauerDiagram::identity(n)),
        };
        let identity = index[&id_label];
        let mut letters = Vec::new();
        for i in 0..n.saturating_sub(1) {
            match kind {
                TowerKind::TemperleyLieb => letters.push(Letter::E(i)),
                TowerKind::Brauer => letters.extend([Letter::S(i), Letter::E(i)]),
                TowerKind::Symmetric => letters.push(Letter::S(i)),
                TowerKind::Hecke => letters.extend([Letter::S(i), Letter::SInv(i)]),
                TowerKind::Bmw => letters.extend([Letter::S(i), Letter::SInv(i), Letter::E(i)]),
            }
        }
        let fresh = |len: usize| -> Table<K> { (0..len).map(|_| OnceLock::new()).collect() };
        let left = letters.iter().map(|l| (*l, fresh(basis.len()))).collect();
        let right = letters.iter().map(|l| (*l, fresh(basis.len()))).collect();
        let skein = if kind == TowerKind::Bmw {
            let diagrams: Vec<BrauerDiagram> = basis.iter().map(|l| l.diagram().unwrap().clone()).collect();
            Some(SkeinEngine::new(&diagrams, n, &params.rho, &params.q, Strategy::First)?)
        } else {
            None
        };
        let mut alg = Self {
            kind,
            n,
            ctx: ctx.clone(),
            params,
            involution: fresh(basis.len()),
            basis,
            index,
            identity,
            letters,
            left,
            right,
            words: Vec::new(),
            skein,
        };
        alg.words = alg.compute_words();
        Ok(alg)
    }

    pub fn kind(&self) -> TowerKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ctx(&self) -> &RingContext {
        &self.ctx
    }

    pub fn params(&self) -> &TowerParams<K> {
        &self.params
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Label] {
        &self.basis
    }

    pub fn index_of(&self, label: &Label) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn skein(&self) -> Option<&SkeinEngine<K>> {
        self.skein.as_ref()
    }

    /// Every letter with a multiplication table, inverses included.
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Generators of A_n (without inverses).
    pub fn generators(&self) -> Vec<Letter> {
        self.generators_of_level(self.n)
    }

    /// Generators of the subalgebra A_m, m <= n.
    pub fn generators_of_level(&self, m: usize) -> Vec<Letter> {
        self.letters
            .iter()
            .copied()
            .filter(|l| !matches!(l, Letter::SInv(_)) && l.index() + 1 < m)
            .collect()
    }

    fn check_letter(&self, l: Letter) -> Result<()> {
        if self.left.contains_key(&l) {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: l.index() + 1, n: self.n })
        }
    }

    pub fn one(&self) -> Element<K> {
        vec![(self.identity, K::one())]
    }

    pub fn zero(&self) -> Element<K> {
        Vec::new()
    }

    pub fn basis_element(&self, idx: usize) -> Element<K> {
        vec![(idx, K::one())]
    }

    pub fn letter(&self, l: Letter) -> Result<Element<K>> {
        self.check_letter(l)?;
        Ok(self.left_letter_basis(l, self.identity).clone())
    }

    pub fn scalar(&self, c: &K) -> Element<K> {
        sv_scale(&self.one(), c)
    }

    fn letter_diagram(&self, l: Letter) -> BrauerDiagram {
        match l {
            Letter::E(i) => BrauerDiagram::e(self.n, i),
            Letter::S(i) | Letter::SInv(i) => BrauerDiagram::s(self.n, i),
        }
    }

    fn letter_slices(l: Letter) -> Vec<Slice> {
        match l {
            Letter::E(i) => vec![Slice::Cap(i as u8), Slice::Cup(i as u8)],
            Letter::S(i) => vec![Slice::Cross(i as u8, Over::SeNw)],
            Letter::SInv(i) => vec![Slice::Cross(i as u8, Over::SwNe)],
        }
    }

    fn diagram_product(&self, a: &BrauerDiagram, b: &BrauerDiagram) -> Element<K> {
        let (c, r) = a.compose_unchecked(b);
        let idx = self.index[&Label::Diagram(c)];
        let coeff = self.params.delta.pow_i(r as i64).expect("delta power");
        vec![(idx, coeff)]
    }

    fn hecke_inverse(&self, t: Element<K>, base: usize) -> Element<K> {
        // T^{-1} = Q^{-1} T - (1 - Q^{-1}).
        let qi = self.params.hecke_q.inv().expect("Hecke parameter is invertible");
        let v = sv_scale(&t, &qi);
        sv_axpy(&v, &qi.sub(&K::one()), &vec![(base, K::one())])
    }

    fn compute_left(&self, l: Letter, idx: usize) -> SparseVec<K> {
        match (&self.basis[idx], self.kind) {
            (Label::Diagram(d), TowerKind::Bmw) => {
                let mut w = Self::letter_slices(l);
                w.extend(normal_form_word(d));
                self.skein.as_ref().unwrap().reduce(&w).expect("skein rewriting")
            }
            (Label::Diagram(d), _) => self.diagram_product(&self.letter_diagram(l), d),
            (Label::Perm(w), TowerKind::Symmetric) => {
                vec![(self.index[&Label::Perm(w.mul_simple_left(l.index()))], K::one())]
            }
            (Label::Perm(w), _) => {
                let i = l.index();
                let sw = self.index[&Label::Perm(w.mul_simple_left(i))];
                let winv = w.inverse();
                let t = if winv.apply(i) < winv.apply(i + 1) {
                    vec![(sw, K::one())]
                } else {
                    let q = &self.params.hecke_q;
                    sv_from_pairs([(sw, q.clone()), (idx, q.sub(&K::one()))])
                };
                match l {
                    Letter::SInv(_) => self.hecke_inverse(t, idx),
                    _ => t,
                }
            }
        }
    }

    fn compute_right(&self, idx: usize, l: Letter) -> SparseVec<K> {
        match (&self.basis[idx], self.kind) {
            (Label::Diagram(d), TowerKind::Bmw) => {
                let mut w = normal_form_word(d);
                w.extend(Self::letter_slices(l));
                self.skein.as_ref().unwrap().reduce(&w).expect("skein rewriting")
            }
            (Label::Diagram(d), _) => self.diagram_product(d, &self.letter_diagram(l)),
            (Label::Perm(w), TowerKind::Symmetric) => {
                vec![(self.index[&Label::Perm(w.mul_simple_right(l.index()))], K::one())]
            }
            (Label::Perm(w), _) => {
                let i = l.index();
                let ws = self.index[&Label::Perm(w.mul_simple_right(i))];
                let t = if w.apply(i) < w.apply(i + 1) {
                    vec![(ws, K::one())]
                } else {
                    let q = &self.params.hecke_q;
                    sv_from_pairs([(ws, q.clone()), (idx, q.sub(&K::one()))])
                };
                match l {
                    Letter::SInv(_) => self.hecke_inverse(t, idx),
                    _ => t,
                }
            }
        }
    }

    fn left_letter_basis(&self, l: Letter, idx: usize) -> &SparseVec<K> {
        self.left[&l][idx].get_or_init(|| self.compute_left(l, idx))
    }

    fn right_letter_basis(&self, idx: usize, l: Letter) -> &SparseVec<K> {
        self.right[&l][idx].get_or_init(|| self.compute_right(idx, l))
    }

    /// `l * x`.
    pub fn left_mul_letter(&self, l: Letter, x: &Element<K>) -> Element<K> {
        let mut out = Vec::new();
        for (i, c) in x {
            out = sv_axpy(&out, c, self.left_letter_basis(l, *i));
        }
        out
    }

    /// `x * l`.
    pub fn right_mul_letter(&self, x: &Element<K>, l: Letter) -> Element<K> {
        let mut out = Vec::new();
        for (i, c) in x {
            out = sv_axpy(&out, c, self.right_letter_basis(*i, l));
        }
        out
    }

    /// The product of a word of generators.
    pub fn word(&self, letters: &[Letter]) -> Result<Element<K>> {
        for l in letters {
            self.check_letter(*l)?;
        }
        let mut x = self.one();
        for l in letters {
            x = self.right_mul_letter(&x, *l);
        }
        Ok(x)
    }

    /// `x * (letters product)`.
    pub fn right_mul_word(&self, x: &Element<K>, letters: &[Letter]) -> Element<K> {
        let mut y = x.clone();
        for l in letters {
            y = self.right_mul_letter(&y, *l);
        }
        y
    }

    /// `(letters product) * x`.
    pub fn left_mul_word(&self, letters: &[Letter], x: &Element<K>) -> Element<K> {
        let mut y = x.clone();
        for l in letters.iter().rev() {
            y = self.left_mul_letter(*l, &y);
        }
        y
    }

    /// Basis element `idx` equals `coeff` times the product of `word`.
    pub fn basis_word(&self, idx: usize) -> &(K, Vec<Letter>) {
        &self.words[idx]
    }

    fn compute_words(&self) -> Vec<(K, Vec<Letter>)> {
        match self.kind {
            TowerKind::Symmetric | TowerKind::Hecke => self
                .basis
                .iter()
                .map(|l| (K::one(), l.perm().unwrap().reduced_word().into_iter().map(Letter::S).collect()))
                .collect(),
            TowerKind::Bmw => self
                .basis
                .iter()
                .map(|l| {
                    let slices = normal_form_word(l.diagram().unwrap());
                    let mut word = Vec::new();
                    let mut k = 0;
                    while k < slices.len() {
                        match slices[k] {
                            Slice::Cross(i, Over::SeNw) => word.push(Letter::S(i as usize)),
                            Slice::Cross(i, Over::SwNe) => word.push(Letter::SInv(i as usize)),
                            Slice::Cap(i) => {
                                debug_assert_eq!(slices[k + 1], Slice::Cup(i));
                                word.push(Letter::E(i as usize));
                                k += 1;
                            }
                            Slice::Cup(_) => unreachable!("basis words pair caps with cups"),
                        }
                        k += 1;
                    }
                    (K::one(), word)
                })
                .collect(),
            _ => {
                // Breadth-first search for loop-free words.
                let mut words: Vec<Option<Vec<Letter>>> = vec![None; self.basis.len()];
                words[self.identity] = Some(Vec::new());
                let mut queue = VecDeque::from([self.identity]);
                let gens: Vec<Letter> = self.generators();
                while let Some(i) = queue.pop_front() {
                    let d = self.basis[i].diagram().unwrap().clone();
                    for &l in &gens {
                        let (c, r) = d.compose_unchecked(&self.letter_diagram(l));
                        if r != 0 {
                            continue;
                        }
                        let j = self.index[&Label::Diagram(c)];
                        if words[j].is_none() {
                            let mut w = words[i].clone().unwrap();
                            w.push(l);
                            words[j] = Some(w);
                            queue.push_back(j);
                        }
                    }
                }
                words
                    .into_iter()
                    .map(|w| (K::one(), w.expect("diagram algebras are generated by e_i and s_i")))
                    .collect()
            }
        }
    }

    pub fn mul(&self, a: &Element<K>, b: &Element<K>) -> Element<K> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        match self.kind {
            TowerKind::Brauer | TowerKind::TemperleyLieb | TowerKind::Symmetric => {
                let mut pairs = Vec::with_capacity(a.len() * b.len());
                for (i, x) in a {
                    for (j, y) in b {
                        let xy = x.mul(y);
                        match (&self.basis[*i], &self.basis[*j]) {
                            (Label::Diagram(da), Label::Diagram(db)) => {
                                for (k, c) in self.diagram_product(da, db) {
                                    pairs.push((k, c.mul(&xy)));
                                }
                            }
                            (Label::Perm(pa), Label::Perm(pb)) => {
                                pairs.push((self.index[&Label::Perm(pa.compose(pb))], xy));
                            }
                            _ => unreachable!("labels of one algebra share a kind"),
                        }
                    }
                }
                sv_from_pairs(pairs)
            }
            TowerKind::Hecke | TowerKind::Bmw => {
                let mut out = Vec::new();
                for (j, y) in b {
                    let (c, word) = &self.words[*j];
                    let t = self.right_mul_word(a, word);
                    out = sv_axpy(&out, &y.mul(c), &t);
                }
                out
            }
        }
    }

    fn involve_basis(&self, idx: usize) -> &SparseVec<K> {
        self.involution[idx].get_or_init(|| match &self.basis[idx] {
            Label::Diagram(d) if self.kind != TowerKind::Bmw => {
                vec![(self.index[&Label::Diagram(d.flip())], K::one())]
            }
            Label::Perm(p) => vec![(self.index[&Label::Perm(p.inverse())], K::one())],
            Label::Diagram(_) => {
                let (c, word) = &self.words[idx];
                let rev: Vec<Letter> = word.iter().rev().copied().collect();
                sv_scale(&self.word(&rev).expect("valid word"), c)
            }
        })
    }

    /// The algebra involution: an anti-automorphism fixing the generators.
    pub fn involve(&self, x: &Element<K>) -> Element<K> {
        let mut out = Vec::new();
        for (i, c) in x {
            out = sv_axpy(&out, c, self.involve_basis(*i));
        }
        out
    }

    /// Image of `x`, an element of `source` (rank <= n), under the tower inclusion.
    pub fn include_from(&self, source: &Algebra<K>, x: &Element<K>) -> Result<Element<K>> {
        if source.kind != self.kind {
            return Err(Error::TowerMismatch);
        }
        if source.n > self.n {
            return Err(Error::RankMismatch { left: source.n, right: self.n });
        }
        Ok(sv_from_pairs(
            x.iter().map(|(i, c)| (self.index[&source.basis[*i].include(self.n)], c.clone())),
        ))
    }

    /// Matrix of y -> a*y in the distinguished basis.
    pub fn left_mult_matrix(&self, a: &Element<K>) -> Matrix<K> {
        let cols: Vec<SparseVec<K>> = (0..self.dim()).map(|j| self.mul(a, &self.basis_element(j))).collect();
        Matrix::from_sparse_cols(self.dim(), &cols)
    }

    pub fn render(&self, x: &Element<K>) -> String {
        if x.is_empty() {
            return "0".into();
        }
        x.iter()
            .map(|(i, c)| format!("({})*{}", c.render(&self.ctx), self.basis[*i]))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    pub fn to_json(&self, x: &Element<K>) -> serde_json::Value {
        let terms: Vec<_> = x
            .iter()
            .map(|(i, c)| json!({"label": self.basis[*i].to_string(), "coeff": c.render(&self.ctx)}))
            .collect();
        json!({"tower": self.kind.name(), "n": self.n, "terms": terms})
    }

    /// The quotient tower algebra Q_n, when it is not the ground ring:
    /// the symmetric group for Brauer, the Hecke algebra at q^2 for BMW.
    pub fn quotient_algebra(&self) -> Result<Option<Algebra<K>>> {
        match self.kind {
            TowerKind::Brauer => {
                let ctx = self.ctx.clone();
                let p = TowerParams { delta: K::one(), hecke_q: K::one(), qhalf: K::one(), rho: K::one(), q: K::one() };
                Ok(Some(Algebra::with_params(TowerKind::Symmetric, self.n, &ctx, p)?))
            }
            TowerKind::Bmw => {
                let p = TowerParams {
                    delta: K::one(),
                    hecke_q: self.params.hecke_q.clone(),
                    qhalf: K::one(),
                    rho: K::one(),
                    q: self.params.q.clone(),
                };
                Ok(Some(Algebra::with_params(TowerKind::Hecke, self.n, &self.ctx, p)?))
            }
            _ => Ok(None),
        }
    }

    /// The quotient map A_n -> Q_n. Coordinates refer to `quotient`'s basis;
    /// for Temperley-Lieb the target is the ground ring, returned as a
    /// one-coordinate vector. Sym and Hecke are their own quotients.
    pub fn quotient_map(&self, quotient: Option<&Algebra<K>>, x: &Element<K>) -> Element<K> {
        match self.kind {
            TowerKind::Symmetric | TowerKind::Hecke => x.clone(),
            TowerKind::TemperleyLieb => {
                let c = x.iter().find(|(i, _)| *i == self.identity).map(|t| t.1.clone());
                c.map(|c| vec![(0, c)]).unwrap_or_default()
            }
            TowerKind::Brauer => {
                let quot = quotient.expect("Brauer quotient is the symmetric group");
                sv_from_pairs(x.iter().filter_map(|(i, c)| {
                    let d = self.basis[*i].diagram().unwrap();
                    d.to_perm().map(|p| (quot.index[&Label::Perm(p)], c.clone()))
                }))
            }
            TowerKind::Bmw => {
                let quot = quotient.expect("BMW quotient is a Hecke algebra");
                let q_inv = self.params.q.inv().expect("q invertible");
                let mut out = Vec::new();
                for (i, c) in x {
                    let (w0, word) = &self.words[*i];
                    if word.iter().any(|l| matches!(l, Letter::E(_))) {
                        continue;
                    }
                    // g -> q^{-1} T and g^{-1} -> q^{-1} T + (q^{-1} - q).
                    let mut img = quot.one();
                    for l in word {
                        let t = quot.right_mul_letter(&img, Letter::S(l.index()));
                        img = match l {
                            Letter::S(_) => sv_scale(&t, &q_inv),
                            _ => sv_axpy(&sv_scale(&t, &q_inv), &q_inv.sub(&self.params.q), &img),
                        };
                    }
                    out = sv_axpy(&out, &c.mul(w0), &img);
                }
                out
            }
        }
    }
}
