//! Exact linear algebra over a [`Scalar`] field: sparse vectors, incremental
//! echelon forms, and small dense matrices.

use std::collections::BTreeMap;

use crate::arith::{Rat, Scalar};

/// Sparse vector: strictly increasing indices, no stored zeros.
pub type SparseVec<K> = Vec<(usize, K)>;

pub fn sv_axpy<K: Scalar>(a: &SparseVec<K>, c: &K, b: &SparseVec<K>) -> SparseVec<K> {
    if c.is_zero() || b.is_empty() {
        return a.clone();
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i].0 < b[j].0 {
            out.push(a[i].clone());
            i += 1;
        } else if a[i].0 > b[j].0 {
            out.push((b[j].0, c.mul(&b[j].1)));
            j += 1;
        } else {
            let v = a[i].1.add(&c.mul(&b[j].1));
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out.extend(a[i..].iter().cloned());
    out.extend(b[j..].iter().map(|(k, v)| (*k, c.mul(v))));
    out
}

pub fn sv_add<K: Scalar>(a: &SparseVec<K>, b: &SparseVec<K>) -> SparseVec<K> {
    sv_axpy(a, &K::one(), b)
}

pub fn sv_sub<K: Scalar>(a: &SparseVec<K>, b: &SparseVec<K>) -> SparseVec<K> {
    sv_axpy(a, &K::one().neg(), b)
}

pub fn sv_scale<K: Scalar>(a: &SparseVec<K>, c: &K) -> SparseVec<K> {
    if c.is_zero() {
        return Vec::new();
    }
    if c.is_one() {
        return a.clone();
    }
    a.iter().map(|(k, v)| (*k, v.mul(c))).collect()
}

/// Collects arbitrary (index, value) pairs, summing duplicates.
pub fn sv_from_pairs<K: Scalar>(pairs: impl IntoIterator<Item = (usize, K)>) -> SparseVec<K> {
    let mut map: BTreeMap<usize, K> = BTreeMap::new();
    for (k, v) in pairs {
        match map.get_mut(&k) {
            Some(e) => *e = e.add(&v),
            None => {
                map.insert(k, v);
            }
        }
    }
    map.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

pub fn sv_get<K: Scalar>(a: &SparseVec<K>, index: usize) -> K {
    match a.binary_search_by_key(&index, |t| t.0) {
        Ok(p) => a[p].1.clone(),
        Err(_) => K::zero(),
    }
}

pub fn sv_to_dense<K: Scalar>(a: &SparseVec<K>, dim: usize) -> Vec<K> {
    let mut out = vec![K::zero(); dim];
    for (k, v) in a {
        out[*k] = v.clone();
    }
    out
}

pub fn sv_from_dense<K: Scalar>(a: &[K]) -> SparseVec<K> {
    a.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(k, v)| (k, v.clone())).collect()
}

#[derive(Clone, Debug)]
struct Row<K> {
    vec: SparseVec<K>,
    tag: SparseVec<K>,
}

/// Incrementally built semi-echelon basis of a subspace.
///
/// Every stored row has its smallest index as pivot with coefficient one.
/// Each row carries a tag: the combination of inserted tags it represents,
/// which lets callers express reduced vectors in terms of earlier inputs.
#[derive(Clone, Debug, Default)]
pub struct Echelon<K> {
    rows: BTreeMap<usize, Row<K>>,
}

/// Outcome of reducing a vector against an [`Echelon`].
pub struct Reduction<K> {
    pub residual: SparseVec<K>,
    /// Combination of row tags that was subtracted.
    pub used: SparseVec<K>,
}

impl<K: Scalar> Echelon<K> {
    pub fn new() -> Self {
        Self { rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn reduce(&self, v: &SparseVec<K>) -> Reduction<K> {
        let mut work: BTreeMap<usize, K> = v.iter().cloned().collect();
        let mut used: SparseVec<K> = Vec::new();
        let mut pos = 0usize;
        loop {
            let next = work.range(pos..).map(|(k, _)| *k).find(|k| self.rows.contains_key(k));
            let Some(p) = next else { break };
            let c = work.remove(&p).expect("present");
            let row = &self.rows[&p];
            for (k, val) in &row.vec[1..] {
                let delta = c.mul(val);
                match work.get_mut(k) {
                    Some(e) => {
                        let nv = e.sub(&delta);
                        if nv.is_zero() {
                            work.remove(k);
                        } else {
                            *e = nv;
                        }
                    }
                    None => {
                        work.insert(*k, delta.neg());
                    }
                }
            }
            if !row.tag.is_empty() {
                used = sv_axpy(&used, &c, &row.tag);
            }
            pos = p + 1;
        }
        Reduction { residual: work.into_iter().collect(), used }
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v).residual.is_empty()
    }

    /// Inserts `v` (carrying `tag`); returns false when `v` was dependent.
    pub fn insert(&mut self, v: &SparseVec<K>, tag: SparseVec<K>) -> bool {
        let red = self.reduce(v);
        self.insert_reduced(red, tag)
    }

    /// Inserts an already computed reduction of a vector with tag `tag`.
    pub fn insert_reduced(&mut self, red: Reduction<K>, tag: SparseVec<K>) -> bool {
        if red.residual.is_empty() {
            return false;
        }
        let full_tag = sv_sub(&tag, &red.used);
        let (p, lead) = red.residual[0].clone();
        let inv = lead.inv().expect("pivot is nonzero");
        let row = Row { vec: sv_scale(&red.residual, &inv), tag: sv_scale(&full_tag, &inv) };
        self.rows.insert(p, row);
        true
    }
}

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<K> {
    rows: usize,
    cols: usize,
    data: Vec<K>,
}

impl<K: Scalar> Matrix<K> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![K::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = K::one();
        }
        m
    }

    pub fn scalar(n: usize, c: &K) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = c.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<K>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix rows");
            data.extend(row);
        }
        Self { rows: r, cols: c, data }
    }

    pub fn from_cols(rows: usize, cols: &[Vec<K>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                m.data[i * cols.len() + j] = v.clone();
            }
        }
        m
    }

    pub fn from_sparse_cols(rows: usize, cols: &[SparseVec<K>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            for (i, v) in col {
                m.data[i * cols.len() + j] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &K {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: K) {
        self.data[i * self.cols + j] = v;
    }

    pub fn col(&self, j: usize) -> Vec<K> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row(&self, i: usize) -> Vec<K> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn data(&self) -> &[K] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = self.get(i, j);
                    if i == j {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    out.data[idx] = out.data[idx].add(&a.mul(b));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[K]) -> Vec<K> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = K::zero();
                for (j, x) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !a.is_zero() && !x.is_zero() {
                        acc = acc.add(&a.mul(x));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn scale(&self, c: &K) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a.mul(c)).collect() }
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        out
    }

    /// Reduced row echelon form; returns the pivot columns.
    fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let best = (r..self.rows)
                .filter(|&i| !self.get(i, c).is_zero())
                .min_by_key(|&i| self.get(i, c).weight());
            let Some(p) = best else { continue };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = self.get(r, c).inv().expect("pivot is nonzero");
            for j in c..self.cols {
                let v = self.get(r, j).mul(&inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = self.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..self.cols {
                    let rv = self.get(r, j);
                    if rv.is_zero() {
                        continue;
                    }
                    let v = self.get(i, j).sub(&f.mul(rv));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref_in_place().len()
    }

    /// Exact rank, shortcut by the probe-point specialization when that
    /// already has full rank.
    pub fn rank_fast(&self) -> usize {
        let full = self.rows.min(self.cols);
        let probe: Option<Vec<Rat>> = self.data.iter().map(|x| x.probe().map(Rat)).collect();
        if let Some(data) = probe {
            let m = Matrix { rows: self.rows, cols: self.cols, data };
            if m.rank() == full {
                return full;
            }
        }
        self.rank()
    }

    /// Basis of the null space {x : self x = 0}.
    pub fn kernel(&self) -> Vec<Vec<K>> {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![K::zero(); self.cols];
                x[f] = K::one();
                for (r, &pc) in pivots.iter().enumerate() {
                    x[pc] = m.get(r, f).neg();
                }
                x
            })
            .collect()
    }

    /// Some solution X of self * X = rhs, or None when inconsistent.
    pub fn solve(&self, rhs: &Self) -> Option<Self> {
        assert_eq!(self.rows, rhs.rows);
        let mut aug = Self::zeros(self.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            for j in 0..rhs.cols {
                aug.set(i, self.cols + j, rhs.get(i, j).clone());
            }
        }
        let pivots = aug.rref_in_place();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Self::zeros(self.cols, rhs.cols);
        for (r, &pc) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(pc, j, aug.get(r, self.cols + j).clone());
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols || self.rank() != self.rows {
            return None;
        }
        self.solve(&Self::identity(self.rows))
    }

    /// Coefficients c_0..c_n of det(t I - self), lowest degree first
    /// (Berkowitz algorithm, division free).
    pub fn charpoly(&self) -> Vec<K> {
        assert_eq!(self.rows, self.cols, "characteristic polynomial of a non-square matrix");
        let n = self.rows;
        // Polynomials here are stored highest degree first during the recursion.
        let mut poly: Vec<K> = vec![K::one()];
        for k in 0..n {
            // Leading principal block of size k+1: a = entry (k,k), R = row k cols <k,
            // C = col k rows <k, A = block <k.
            let a = self.get(k, k).clone();
            let mut toeplitz_col = Vec::with_capacity(k + 2);
            toeplitz_col.push(K::one());
            toeplitz_col.push(a.neg());
            if k > 0 {
                let mut v: Vec<K> = (0..k).map(|i| self.get(i, k).clone()).collect();
                for _ in 0..k {
                    let rv: K = (0..k)
                        .fold(K::zero(), |acc, j| acc.add(&self.get(k, j).mul(&v[j])));
                    toeplitz_col.push(rv.neg());
                    v = (0..k)
                        .map(|i| (0..k).fold(K::zero(), |acc, j| acc.add(&self.get(i, j).mul(&v[j]))))
                        .collect();
                }
            }
            // new_poly = T * poly, T lower-triangular Toeplitz of size (k+2) x (k+1).
            let mut next = vec![K::zero(); k + 2];
            for (i, slot) in next.iter_mut().enumerate() {
                let mut acc = K::zero();
                for (j, p) in poly.iter().enumerate() {
                    if i >= j {
                        let t = &toeplitz_col[i - j];
                        if !t.is_zero() && !p.is_zero() {
                            acc = acc.add(&t.mul(p));
                        }
                    }
                }
                *slot = acc;
            }
            poly = next;
        }
        poly.reverse();
        poly
    }
}

/// Divides a polynomial (lowest degree first) by (t - root) repeatedly for each
/// predicted root; true iff every division is exact and the quotient is 1.
pub fn roots_match<K: Scalar>(poly: &[K], roots: &[K]) -> bool {
    let mut p = poly.to_vec();
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    if p.len() != roots.len() + 1 || !p.last().is_some_and(|c| c.is_one()) {
        return false;
    }
    for r in roots {
        // Synthetic division, highest degree first.
        let deg = p.len() - 1;
        let mut q = vec![K::zero(); deg];
        let mut carry = K::zero();
        for i in (0..=deg).rev() {
            let v = p[i].add(&carry.mul(r));
            if i == 0 {
                if !v.is_zero() {
                    return false;
                }
            } else {
                q[i - 1] = v.clone();
                carry = v;
            }
        }
        p = q;
    }
    p.len() == 1 && p[0].is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rat;

    fn r(v: i64) -> Rat {
        Rat::from_int(v)
    }

    fn m(rows: &[&[i64]]) -> Matrix<Rat> {
        Matrix::from_rows(rows.iter().map(|row| row.iter().map(|&v| r(v)).collect()).collect())
    }

    #[test]
    fn echelon_tags_express_dependencies() {
        let mut e = Echelon::<Rat>::new();
        let a = vec![(0, r(1)), (2, r(1))];
        let b = vec![(1, r(1)), (2, r(2))];
        assert!(e.insert(&a, vec![(0, r(1))]));
        assert!(e.insert(&b, vec![(1, r(1))]));
        let c = vec![(0, r(2)), (1, r(3)), (2, r(8))];
        let red = e.reduce(&c);
        assert!(red.residual.is_empty());
        assert_eq!(red.used, vec![(0, r(2)), (1, r(3))]);
    }

    #[test]
    fn rank_kernel_solve() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let k = a.kernel();
        assert_eq!(k.len(), 1);
        assert!(a.mul_vec(&k[0]).iter().all(|v| v.is_zero()));
        let b = m(&[&[2, 1], &[1, 1]]);
        let inv = b.inverse().unwrap();
        assert!(b.mul(&inv).is_identity());
    }

    #[test]
    fn charpoly_and_roots() {
        let a = m(&[&[2, 1, 0], &[0, 3, 4], &[0, 0, 5]]);
        let cp = a.charpoly();
        assert!(roots_match(&cp, &[r(5), r(2), r(3)]));
        assert!(!roots_match(&cp, &[r(5), r(2), r(2)]));
        let b = m(&[&[0, 1], &[1, 0]]);
        assert!(roots_match(&b.charpoly(), &[r(1), r(-1)]));
    }
}
