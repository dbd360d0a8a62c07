//! Cell modules realized inside the algebras, path bases, and central
//! idempotents.

use std::collections::{BTreeSet, HashMap, VecDeque};

use serde_json::json;

use crate::arith::Scalar;
use crate::branching::{kappa_vector, paths, Partition, Path, Vertex};
use crate::error::{Error, Result};
use crate::jm::jm_matrices;
use crate::linalg::{sv_axpy, sv_from_dense, sv_to_dense, Echelon, Matrix};
use crate::perm::Perm;
use crate::tower::{Algebra, Element, Label, Letter, TowerKind, TowerParams};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Built from a Murphy generator in a Hecke or symmetric group algebra.
    Murphy,
    /// k = n: a quotient-tower module pulled back along the quotient map.
    Inflated,
    /// k < n: generated through a chain of essential idempotents.
    Induced,
}

/// Drops the coordinates of basis labels with fewer than `k` through strands,
/// i.e. works modulo the ideal they span.
fn project<K: Scalar>(alg: &Algebra<K>, x: &Element<K>, k: usize) -> Element<K> {
    if !alg.kind().has_e() || k == 0 {
        return x.clone();
    }
    x.iter()
        .filter(|(i, _)| alg.basis()[*i].diagram().is_some_and(|d| d.through_strands() >= k))
        .cloned()
        .collect()
}

/// Closure of `seeds` under left and (when `two_sided`) right multiplication
/// by generators, after applying `proj`. Returns a basis of the span.
pub fn closure<K: Scalar>(
    alg: &Algebra<K>,
    seeds: &[Element<K>],
    two_sided: bool,
    proj: &dyn Fn(&Element<K>) -> Element<K>,
) -> Vec<Element<K>> {
    let mut ech = Echelon::new();
    let mut basis = Vec::new();
    let mut queue = VecDeque::new();
    for s in seeds {
        let v = proj(s);
        if ech.insert(&v, Vec::new()) {
            basis.push(v.clone());
            queue.push_back(v);
        }
    }
    let gens = alg.generators();
    while let Some(v) = queue.pop_front() {
        for &g in &gens {
            let mut images = vec![alg.left_mul_letter(g, &v)];
            if two_sided {
                images.push(alg.right_mul_letter(&v, g));
            }
            for w in images {
                let w = proj(&w);
                if ech.insert(&w, Vec::new()) {
                    basis.push(w.clone());
                    queue.push_back(w);
                }
            }
        }
    }
    basis
}

/// The quotient-tower algebra Q_k realized with this tower's scalars, or
/// None for Temperley-Lieb where Q_k is the ground ring.
pub fn quotient_rank_algebra<K: Scalar>(alg: &Algebra<K>, k: usize) -> Result<Option<Algebra<K>>> {
    let p = alg.params();
    let ones = || TowerParams { delta: K::one(), hecke_q: K::one(), qhalf: K::one(), rho: K::one(), q: K::one() };
    let (kind, params) = match alg.kind() {
        TowerKind::TemperleyLieb => return Ok(None),
        TowerKind::Symmetric | TowerKind::Brauer => (TowerKind::Symmetric, ones()),
        TowerKind::Hecke | TowerKind::Bmw => {
            (TowerKind::Hecke, TowerParams { hecke_q: p.hecke_q.clone(), q: p.q.clone(), ..ones() })
        }
    };
    Ok(Some(Algebra::with_params(kind, k, alg.ctx(), params)?))
}

/// m_lambda: the sum of T_w over the row stabilizer of lambda.
pub fn murphy_element<K: Scalar>(q: &Algebra<K>, lambda: &Partition) -> Element<K> {
    let gens = lambda.row_generators();
    let mut seen = BTreeSet::from([Perm::identity(q.n())]);
    let mut queue = VecDeque::from([Perm::identity(q.n())]);
    while let Some(w) = queue.pop_front() {
        for &i in &gens {
            let v = w.mul_simple_right(i);
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    let mut out: Vec<(usize, K)> =
        seen.into_iter().map(|w| (q.index_of(&Label::Perm(w)).unwrap(), K::one())).collect();
    out.sort_by_key(|t| t.0);
    out
}

/// Lifts an element of Q_k into A_n along T_i -> c g_i (c = q for BMW, 1
/// otherwise); a homomorphism modulo the ideal of fewer through strands.
pub fn lift<K: Scalar>(alg: &Algebra<K>, q: &Algebra<K>, y: &Element<K>) -> Result<Element<K>> {
    let c = if alg.kind() == TowerKind::Bmw { alg.params().q.clone() } else { K::one() };
    let mut out = Vec::new();
    for (i, coeff) in y {
        let (w0, word) = q.basis_word(*i);
        let scale = coeff.mul(w0).mul(&c.pow_i(word.len() as i64)?);
        out = sv_axpy(&out, &scale, &alg.word(word)?);
    }
    Ok(out)
}

/// The e-chain e_{n-1} e_{n-3} .. e_{k+1} as 0-based letters.
pub fn e_chain(n: usize, k: usize) -> Vec<Letter> {
    (k..n.saturating_sub(1)).rev().step_by(2).map(Letter::E).collect()
}

pub struct CellModule<K: Scalar> {
    vertex: Vertex,
    provenance: Provenance,
    reps: Vec<Element<K>>,
    echelon: Echelon<K>,
    cutoff: usize,
    actions: HashMap<Letter, Matrix<K>>,
}

impl<K: Scalar> CellModule<K> {
    /// Builds the cell module at `v` as (A_n g + Ă)/Ă.
    pub fn build(alg: &Algebra<K>, v: &Vertex) -> Result<Self> {
        let n = alg.n();
        if v.n != n || v.lattice != crate::branching::Lattice::of(alg.kind()) {
            return Err(Error::InvalidVertex(format!("{v} for {} at rank {n}", alg.kind())));
        }
        let k = v.k();
        let cutoff = if alg.kind().has_e() { k } else { 0 };
        let proj = |x: &Element<K>| project(alg, x, cutoff);
        let chain = e_chain(n, k);

        // The quotient-tower part: m_lambda and the ideal of greater shapes.
        let (m_lift, greater) = match quotient_rank_algebra(alg, k)? {
            None => (alg.one(), Vec::new()),
            Some(q) => {
                let seeds: Vec<Element<K>> = Partition::all(k)
                    .iter()
                    .filter(|mu| mu.parts() > v.lambda.parts())
                    .map(|mu| murphy_element(&q, mu))
                    .collect();
                let ideal = closure(&q, &seeds, true, &|x| x.clone());
                let m = lift(alg, &q, &murphy_element(&q, &v.lambda))?;
                let greater = ideal.iter().map(|y| lift(alg, &q, y)).collect::<Result<Vec<_>>>()?;
                (m, greater)
            }
        };
        let e = alg.word(&chain)?;
        let g = proj(&alg.mul(&e, &m_lift));
        let s_seeds: Vec<Element<K>> = greater.iter().map(|y| alg.mul(&e, y)).collect();
        let s_basis = closure(alg, &s_seeds, false, &proj);

        let provenance = match alg.kind() {
            TowerKind::Symmetric | TowerKind::Hecke => Provenance::Murphy,
            _ if k == n => Provenance::Inflated,
            _ => Provenance::Induced,
        };
        Self::assemble(alg, v, g, &s_basis, cutoff, provenance)
    }

    /// The cyclic module A_n g modulo the ideal of fewer than k through
    /// strands, for an arbitrary generator `g`.
    pub fn from_generator(alg: &Algebra<K>, v: &Vertex, g: &Element<K>) -> Result<Self> {
        let cutoff = if alg.kind().has_e() { v.k() } else { 0 };
        Self::assemble(alg, v, project(alg, g, cutoff), &[], cutoff, Provenance::Induced)
    }

    fn assemble(
        alg: &Algebra<K>,
        v: &Vertex,
        g: Element<K>,
        s_basis: &[Element<K>],
        cutoff: usize,
        provenance: Provenance,
    ) -> Result<Self> {
        let proj = |x: &Element<K>| project(alg, x, cutoff);
        let mut echelon = Echelon::new();
        for s in s_basis {
            echelon.insert(s, Vec::new());
        }
        let mut reps: Vec<Element<K>> = Vec::new();
        let add = |x: Element<K>, echelon: &mut Echelon<K>, reps: &mut Vec<Element<K>>| {
            let tag = vec![(reps.len(), K::one())];
            if echelon.insert(&x, tag) {
                reps.push(x);
            }
        };
        add(g, &mut echelon, &mut reps);
        if reps.is_empty() {
            return Err(Error::InvalidVertex(format!("cyclic generator vanishes at {v}")));
        }
        let gens = alg.generators();
        let mut i = 0;
        while i < reps.len() {
            for &l in &gens {
                let y = proj(&alg.left_mul_letter(l, &reps[i]));
                add(y, &mut echelon, &mut reps);
            }
            i += 1;
        }
        let mut module =
            Self { vertex: v.clone(), provenance, reps, echelon, cutoff, actions: HashMap::new() };
        for &l in alg.letters() {
            let m = module.action_of_letter(alg, l)?;
            module.actions.insert(l, m);
        }
        Ok(module)
    }

    pub fn vertex(&self) -> &Vertex {
        &self.vertex
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn actions(&self) -> &HashMap<Letter, Matrix<K>> {
        &self.actions
    }

    pub fn action(&self, l: Letter) -> &Matrix<K> {
        &self.actions[&l]
    }

    /// Coordinates of `x` (an element of the ambient module span) in the
    /// module basis.
    fn coordinates(&self, alg: &Algebra<K>, x: &Element<K>) -> Result<Vec<K>> {
        let red = self.echelon.reduce(&project(alg, x, self.cutoff));
        if !red.residual.is_empty() {
            return Err(Error::SingularSystem(format!("vector outside the cell module at {}", self.vertex)));
        }
        Ok(sv_to_dense(&red.used, self.dim()))
    }

    fn action_of_letter(&self, alg: &Algebra<K>, l: Letter) -> Result<Matrix<K>> {
        let cols: Vec<Vec<K>> = self
            .reps
            .iter()
            .map(|r| self.coordinates(alg, &alg.left_mul_letter(l, r)))
            .collect::<Result<_>>()?;
        Ok(Matrix::from_cols(self.dim(), &cols))
    }

    /// Matrix of an arbitrary algebra element.
    pub fn action_of_element(&self, alg: &Algebra<K>, x: &Element<K>) -> Result<Matrix<K>> {
        let cols: Vec<Vec<K>> =
            self.reps.iter().map(|r| self.coordinates(alg, &alg.mul(x, r))).collect::<Result<_>>()?;
        Ok(Matrix::from_cols(self.dim(), &cols))
    }

    /// Matrix of a word in the generators.
    pub fn action_of_word(&self, word: &[Letter]) -> Matrix<K> {
        word.iter().fold(Matrix::identity(self.dim()), |acc, l| acc.mul(&self.actions[l]))
    }

    /// JM matrices L_1..L_n in the module basis.
    pub fn jm(&self, alg: &Algebra<K>) -> Result<Vec<Matrix<K>>> {
        jm_matrices(alg.kind(), alg.params(), alg.n(), &self.actions, self.dim())
    }

    /// Rebuilds the module in a basis indexed by paths: the vector for t is
    /// a joint eigenvector of the JM elements with eigenvalues kappa(j, t).
    pub fn path_basis(&self, alg: &Algebra<K>) -> Result<PathBasis<K>> {
        let ps = paths(&self.vertex);
        let d = self.dim();
        if ps.len() != d {
            return Err(Error::SingularSystem(format!(
                "{} paths but dimension {d} at {}",
                ps.len(),
                self.vertex
            )));
        }
        let jm = self.jm(alg)?;
        let mut cols = Vec::with_capacity(d);
        for t in &ps {
            let kappa = kappa_vector(alg.kind(), alg.params(), t)?;
            let mut rows = Vec::with_capacity(d * jm.len());
            for (l, c) in jm.iter().zip(&kappa) {
                let shifted = l.sub(&Matrix::scalar(d, c));
                for i in 0..d {
                    rows.push(shifted.row(i));
                }
            }
            let ker = Matrix::from_rows(rows).kernel();
            if ker.len() != 1 {
                return Err(Error::SeparationFailure(format!(
                    "joint eigenspace for path {t} has dimension {}",
                    ker.len()
                )));
            }
            cols.push(ker.into_iter().next().unwrap());
        }
        let change = Matrix::from_cols(d, &cols);
        let inverse = change
            .inverse()
            .ok_or_else(|| Error::SingularSystem(format!("path vectors are dependent at {}", self.vertex)))?;
        let conj = |m: &Matrix<K>| inverse.mul(m).mul(&change);
        let actions = self.actions.iter().map(|(l, m)| (*l, conj(m))).collect();
        let jm = jm.iter().map(conj).collect();
        Ok(PathBasis { paths: ps, change, actions, jm })
    }

    pub fn to_json(&self, alg: &Algebra<K>) -> serde_json::Value {
        let mut letters: Vec<&Letter> = self.actions.keys().collect();
        letters.sort();
        let matrices: serde_json::Map<String, serde_json::Value> = letters
            .into_iter()
            .map(|l| (l.name(alg.kind()), matrix_json(&self.actions[l], alg)))
            .collect();
        json!({
            "vertex": self.vertex.to_json(),
            "dim": self.dim(),
            "basis": paths(&self.vertex).iter().map(Path::to_json).collect::<Vec<_>>(),
            "matrices": matrices,
        })
    }
}

pub fn matrix_json<K: Scalar>(m: &Matrix<K>, alg: &Algebra<K>) -> serde_json::Value {
    let rows: Vec<Vec<String>> =
        (0..m.rows()).map(|i| m.row(i).iter().map(|c| c.render(alg.ctx())).collect()).collect();
    json!(rows)
}

/// A cell module in its path basis.
pub struct PathBasis<K> {
    pub paths: Vec<Path>,
    /// Columns are the path vectors in the original module basis.
    pub change: Matrix<K>,
    pub actions: HashMap<Letter, Matrix<K>>,
    pub jm: Vec<Matrix<K>>,
}

/// All cell modules at level n, in vertex order.
pub fn all_modules<K: Scalar>(alg: &Algebra<K>) -> Result<Vec<CellModule<K>>> {
    use rayon::prelude::*;
    let vs = crate::branching::vertices(crate::branching::Lattice::of(alg.kind()), alg.n());
    vs.par_iter().map(|v| CellModule::build(alg, v)).collect()
}

/// The representation map A_n -> ⊕ End(Δ^v) as a matrix: column b holds the
/// flattened action matrices of basis element b.
pub fn representation_matrix<K: Scalar>(alg: &Algebra<K>, modules: &[CellModule<K>]) -> Result<Matrix<K>> {
    let rows: usize = modules.iter().map(|m| m.dim() * m.dim()).sum();
    let mut cols = Vec::with_capacity(alg.dim());
    for b in 0..alg.dim() {
        let x = alg.basis_element(b);
        let mut col = Vec::with_capacity(rows);
        for m in modules {
            col.extend(m.action_of_element(alg, &x)?.data().iter().cloned());
        }
        cols.push(col);
    }
    Ok(Matrix::from_cols(rows, &cols))
}

/// Flattened block-diagonal target: identity on module `which`, zero elsewhere.
pub fn block_indicator<K: Scalar>(modules: &[CellModule<K>], which: usize) -> Vec<K> {
    let mut out = Vec::new();
    for (i, m) in modules.iter().enumerate() {
        let block = if i == which { Matrix::identity(m.dim()) } else { Matrix::zeros(m.dim(), m.dim()) };
        out.extend(block.data().iter().cloned());
    }
    out
}

/// Minimal central idempotents z_v, one per module, solved from the
/// representation map.
pub fn central_idempotents<K: Scalar>(alg: &Algebra<K>, modules: &[CellModule<K>]) -> Result<Vec<Element<K>>> {
    let rep = representation_matrix(alg, modules)?;
    let targets: Vec<Vec<K>> = (0..modules.len()).map(|i| block_indicator(modules, i)).collect();
    let rhs = Matrix::from_cols(rep.rows(), &targets);
    let sol = rep
        .solve(&rhs)
        .ok_or_else(|| Error::SingularSystem(format!("representation map of {} at rank {} is not onto", alg.kind(), alg.n())))?;
    Ok((0..modules.len()).map(|j| sv_from_dense(&sol.col(j))).collect())
}

/// An invertible P with P a_i = b_i P for all i, if one exists.
pub fn intertwiner<K: Scalar>(a: &[Matrix<K>], b: &[Matrix<K>]) -> Option<Matrix<K>> {
    let d = a.first()?.rows();
    if b.iter().any(|m| m.rows() != d) {
        return None;
    }
    let mut rows = Vec::new();
    for (ma, mb) in a.iter().zip(b) {
        for i in 0..d {
            for j in 0..d {
                let mut row = vec![K::zero(); d * d];
                for k in 0..d {
                    let x = row[i * d + k].add(ma.get(k, j));
                    row[i * d + k] = x;
                    let y = row[k * d + j].sub(mb.get(i, k));
                    row[k * d + j] = y;
                }
                rows.push(row);
            }
        }
    }
    let ker = Matrix::from_rows(rows).kernel();
    let cands = ker.iter().cloned().chain(std::iter::once(
        ker.iter().fold(vec![K::zero(); d * d], |acc, v| acc.iter().zip(v).map(|(x, y)| x.add(y)).collect()),
    ));
    for v in cands {
        let p = Matrix::from_rows((0..d).map(|i| v[i * d..(i + 1) * d].to_vec()).collect());
        if p.rank() == d {
            return Some(p);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{RationalFunction, RingContext};
    use crate::branching::{vertices, Lattice};
    use crate::linalg::sv_scale;

    type RF = RationalFunction;

    fn alg(kind: TowerKind, n: usize) -> Algebra<RF> {
        let ctx = RingContext::symbolic(kind.variables()).unwrap();
        Algebra::new(kind, n, &ctx).unwrap()
    }

    fn vertex(kind: TowerKind, parts: &[u8], n: usize) -> Vertex {
        Vertex::new(Lattice::of(kind), Partition::new(parts.to_vec()).unwrap(), n).unwrap()
    }

    #[test]
    fn dimensions_match_path_counts() {
        for kind in TowerKind::ALL {
            for n in 1..=3 {
                let a = alg(kind, n);
                for v in vertices(Lattice::of(kind), n) {
                    let m = CellModule::build(&a, &v).unwrap();
                    assert_eq!(m.dim(), paths(&v).len(), "{kind} {v}");
                }
            }
        }
    }

    #[test]
    fn hecke_one_dimensional_modules() {
        let h = alg(TowerKind::Hecke, 3);
        let q = h.params().hecke_q.clone();
        let triv = CellModule::build(&h, &vertex(TowerKind::Hecke, &[3], 3)).unwrap();
        assert_eq!(triv.action(Letter::S(1)), &Matrix::scalar(1, &q));
        let sign = CellModule::build(&h, &vertex(TowerKind::Hecke, &[1, 1, 1], 3)).unwrap();
        assert_eq!(sign.action(Letter::S(0)), &Matrix::scalar(1, &RF::from_int(-1)));
    }

    #[test]
    fn tl_empty_vertex_at_two() {
        let tl = alg(TowerKind::TemperleyLieb, 2);
        let m = CellModule::build(&tl, &Vertex::tl(0, 2).unwrap()).unwrap();
        assert_eq!(m.action(Letter::E(0)), &Matrix::scalar(1, &tl.params().delta));
    }

    #[test]
    fn sym_central_idempotent_at_two() {
        let s = alg(TowerKind::Symmetric, 2);
        let mods = all_modules(&s).unwrap();
        let z = central_idempotents(&s, &mods).unwrap();
        let half = RF::from_rational(num_rational::BigRational::new(1.into(), 2.into()));
        let expected = sv_scale(&sv_axpy(&s.one(), &RF::one(), &s.letter(Letter::S(0)).unwrap()), &half);
        assert_eq!(mods[0].vertex().lambda.parts(), &[2]);
        assert_eq!(z[0], expected);
    }

    #[test]
    fn path_basis_diagonalizes_jm() {
        let b = alg(TowerKind::Brauer, 3);
        let m = CellModule::build(&b, &vertex(TowerKind::Brauer, &[1], 3)).unwrap();
        let pb = m.path_basis(&b).unwrap();
        assert_eq!(pb.paths.len(), 3);
        for l in &pb.jm {
            for i in 0..3 {
                for j in 0..3 {
                    assert!(i == j || l.get(i, j).is_zero());
                }
            }
        }
    }
}
