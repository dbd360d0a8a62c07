//! Branching diagrams: Young's lattice, its reflection lattice, and the
//! two-column lattice of the Temperley-Lieb tower. Paths double as standard
//! and up-down tableaux.

use std::cmp::Ordering;
use std::fmt;

use serde_json::json;

use crate::arith::Scalar;
use crate::error::{Error, Result};
use crate::tower::{TowerKind, TowerParams};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Partition(Vec<u8>);

impl Partition {
    pub fn new(mut parts: Vec<u8>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidVertex(format!("{parts:?} is not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u8] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// Contents column - row of every box, row by row.
    pub fn contents(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.size());
        for (r, &len) in self.0.iter().enumerate() {
            for c in 0..len as i64 {
                out.push(c - r as i64);
            }
        }
        out
    }

    pub fn content_sum(&self) -> i64 {
        self.contents().iter().sum()
    }

    /// Rows where a box can be added, with the content of the new box.
    pub fn addable(&self) -> Vec<(usize, i64)> {
        let mut out = Vec::new();
        for r in 0..=self.0.len() {
            let len = self.0.get(r).copied().unwrap_or(0);
            if r == 0 || self.0[r - 1] > len {
                out.push((r, len as i64 - r as i64));
            }
        }
        out
    }

    /// Rows whose last box can be removed, with that box's content.
    pub fn removable(&self) -> Vec<(usize, i64)> {
        let mut out = Vec::new();
        for (r, &len) in self.0.iter().enumerate() {
            let next = self.0.get(r + 1).copied().unwrap_or(0);
            if len > next {
                out.push((r, len as i64 - 1 - r as i64));
            }
        }
        out
    }

    pub fn add_box(&self, row: usize) -> Self {
        let mut p = self.0.clone();
        if row == p.len() {
            p.push(1);
        } else {
            p[row] += 1;
        }
        Partition(p)
    }

    pub fn remove_box(&self, row: usize) -> Self {
        let mut p = self.0.clone();
        p[row] -= 1;
        if p[row] == 0 {
            p.pop();
        }
        Partition(p)
    }

    /// Dominance order on partitions of the same size.
    pub fn dominates(&self, other: &Self) -> bool {
        let (mut a, mut b) = (0usize, 0usize);
        for i in 0..self.0.len().max(other.0.len()) {
            a += self.0.get(i).copied().unwrap_or(0) as usize;
            b += other.0.get(i).copied().unwrap_or(0) as usize;
            if a < b {
                return false;
            }
        }
        true
    }

    /// All partitions of `n`, lexicographically decreasing.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rem: usize, max: usize, cur: &mut Vec<u8>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p as u8);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// The row stabilizer generators s_i (0-based) of the row-reading tableau.
    pub fn row_generators(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut start = 0;
        for &len in &self.0 {
            for i in 0..len.saturating_sub(1) as usize {
                out.push(start + i);
            }
            start += len as usize;
        }
        out
    }

    /// The two-column shape (2^{(n-k)/2}, 1^k).
    pub fn two_column(k: usize, n: usize) -> Self {
        let mut p = vec![2u8; (n - k) / 2];
        p.extend(std::iter::repeat_n(1u8, k));
        Partition(p)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("∅");
        }
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Lattice {
    Young,
    Reflection,
    /// The Temperley-Lieb lattice; vertex (k, n) has shape lambda(k, n).
    TwoColumn,
}

impl Lattice {
    pub fn of(kind: TowerKind) -> Self {
        match kind {
            TowerKind::Symmetric | TowerKind::Hecke => Lattice::Young,
            TowerKind::Brauer | TowerKind::Bmw => Lattice::Reflection,
            TowerKind::TemperleyLieb => Lattice::TwoColumn,
        }
    }
}

/// A vertex of a branching diagram. For the two-column lattice `lambda` is the
/// single-column shape (1^k) that records k, and [`Vertex::shape`] gives
/// lambda(k, n).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Vertex {
    pub lambda: Partition,
    pub n: usize,
    pub lattice: Lattice,
}

impl Vertex {
    pub fn new(lattice: Lattice, lambda: Partition, n: usize) -> Result<Self> {
        let k = lambda.size();
        let ok = match lattice {
            Lattice::Young => k == n,
            Lattice::Reflection => k <= n && (n - k).is_multiple_of(2),
            Lattice::TwoColumn => k <= n && (n - k).is_multiple_of(2) && lambda.parts().iter().all(|&p| p == 1),
        };
        if !ok {
            return Err(Error::InvalidVertex(format!("{lambda} at level {n}")));
        }
        Ok(Self { lambda, n, lattice })
    }

    pub fn tl(k: usize, n: usize) -> Result<Self> {
        Self::new(Lattice::TwoColumn, Partition(vec![1; k]), n)
    }

    pub fn root(lattice: Lattice) -> Self {
        Self { lambda: Partition::empty(), n: 0, lattice }
    }

    /// Size of the quotient-tower label.
    pub fn k(&self) -> usize {
        self.lambda.size()
    }

    /// The Young diagram attached to the vertex.
    pub fn shape(&self) -> Partition {
        match self.lattice {
            Lattice::TwoColumn => Partition::two_column(self.k(), self.n),
            _ => self.lambda.clone(),
        }
    }

    /// Vertices at level n+1 joined to this one.
    pub fn edges(&self) -> Vec<Vertex> {
        let mut out = Vec::new();
        let n = self.n + 1;
        match self.lattice {
            Lattice::Young | Lattice::Reflection => {
                for (r, _) in self.lambda.addable() {
                    out.push(Vertex { lambda: self.lambda.add_box(r), n, lattice: self.lattice });
                }
                if self.lattice == Lattice::Reflection {
                    for (r, _) in self.lambda.removable() {
                        out.push(Vertex { lambda: self.lambda.remove_box(r), n, lattice: self.lattice });
                    }
                }
            }
            Lattice::TwoColumn => {
                let k = self.k();
                out.push(Vertex { lambda: Partition(vec![1; k + 1]), n, lattice: self.lattice });
                if k > 0 {
                    out.push(Vertex { lambda: Partition(vec![1; k - 1]), n, lattice: self.lattice });
                }
            }
        }
        out.sort_by(|a, b| b.total_cmp(a));
        out
    }

    /// The partial order of the cell datum: smaller k is greater, equal k
    /// compares by dominance. None when incomparable.
    pub fn partial_cmp_cell(&self, other: &Self) -> Option<Ordering> {
        if self == other {
            return Some(Ordering::Equal);
        }
        if self.k() != other.k() {
            return Some(other.k().cmp(&self.k()));
        }
        if self.lambda.dominates(&other.lambda) {
            Some(Ordering::Greater)
        } else if other.lambda.dominates(&self.lambda) {
            Some(Ordering::Less)
        } else {
            None
        }
    }

    /// A linear extension of [`Vertex::partial_cmp_cell`]: ties between
    /// incomparable shapes go to the lexicographically larger partition.
    pub fn total_cmp(&self, other: &Self) -> Ordering {
        other.k().cmp(&self.k()).then_with(|| self.lambda.0.cmp(&other.lambda.0))
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self.lattice {
            Lattice::TwoColumn => json!({"k": self.k(), "n": self.n, "lambda": self.shape().0}),
            _ => json!({"lambda": self.lambda.0, "n": self.n}),
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.lattice {
            Lattice::TwoColumn => write!(f, "({},{})", self.k(), self.n),
            _ => write!(f, "({},{})", self.lambda, self.n),
        }
    }
}

/// All vertices at level `n`, greatest first.
pub fn vertices(lattice: Lattice, n: usize) -> Vec<Vertex> {
    let mut out = Vec::new();
    let ks: Vec<usize> = match lattice {
        Lattice::Young => vec![n],
        _ => (0..=n).filter(|k| (n - k).is_multiple_of(2)).collect(),
    };
    for k in ks {
        if lattice == Lattice::TwoColumn {
            out.push(Vertex { lambda: Partition(vec![1; k]), n, lattice });
        } else {
            for p in Partition::all(k) {
                out.push(Vertex { lambda: p, n, lattice });
            }
        }
    }
    out.sort_by(|a, b| b.total_cmp(a));
    out
}

/// A path from the root; `steps[i]` is the vertex at level i.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Path {
    pub steps: Vec<Vertex>,
}

impl Path {
    pub fn len(&self) -> usize {
        self.steps.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn end(&self) -> &Vertex {
        self.steps.last().expect("paths start at the root")
    }

    pub fn prefix(&self, k: usize) -> Path {
        Path { steps: self.steps[..=k].to_vec() }
    }

    /// Vertices at levels k..=n.
    pub fn tail(&self, k: usize) -> &[Vertex] {
        &self.steps[k..]
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.steps.iter().map(Vertex::to_json).collect())
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.steps[1..]
            .iter()
            .map(|v| match v.lattice {
                Lattice::TwoColumn => v.k().to_string(),
                _ => v.lambda.to_string(),
            })
            .collect();
        write!(f, "{}", parts.join(" > "))
    }
}

/// Reverse lexicographic comparison of vertex sequences of equal length.
pub fn revlex_cmp(a: &[Vertex], b: &[Vertex]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        let c = x.total_cmp(y);
        if c != Ordering::Equal {
            return c;
        }
    }
    Ordering::Equal
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PathOrder {
    Dominance,
    Revlex,
}

/// Compares two paths; None means incomparable (dominance only).
pub fn compare(s: &Path, t: &Path, order: PathOrder) -> Result<Option<Ordering>> {
    if s.steps.len() != t.steps.len() {
        return Err(Error::LengthMismatch);
    }
    Ok(match order {
        PathOrder::Revlex => Some(revlex_cmp(&s.steps, &t.steps)),
        PathOrder::Dominance => {
            let mut acc = Ordering::Equal;
            for (x, y) in s.steps.iter().zip(&t.steps) {
                match x.partial_cmp_cell(y) {
                    None => return Ok(None),
                    Some(Ordering::Equal) => {}
                    Some(c) if acc == Ordering::Equal => acc = c,
                    Some(c) if c != acc => return Ok(None),
                    Some(_) => {}
                }
            }
            Some(acc)
        }
    })
}

/// All paths from the root to `target`, sorted descending in revlex order.
pub fn paths(target: &Vertex) -> Vec<Path> {
    let mut out = Vec::new();
    let mut cur = vec![Vertex::root(target.lattice)];
    fn rec(cur: &mut Vec<Vertex>, target: &Vertex, out: &mut Vec<Path>) {
        let v = cur.last().unwrap().clone();
        if v.n == target.n {
            if v == *target {
                out.push(Path { steps: cur.clone() });
            }
            return;
        }
        // Prune vertices that cannot reach the target.
        let remaining = target.n - v.n;
        let gap = (v.k() as i64 - target.k() as i64).unsigned_abs() as usize;
        if gap > remaining {
            return;
        }
        for w in v.edges() {
            cur.push(w);
            rec(cur, target, out);
            cur.pop();
        }
    }
    rec(&mut cur, target, &mut out);
    out.sort_by(|a, b| revlex_cmp(&b.steps, &a.steps));
    out
}

/// All paths of length `n`, grouped by endpoint in vertex order.
pub fn all_paths(lattice: Lattice, n: usize) -> Vec<Path> {
    vertices(lattice, n).iter().flat_map(paths).collect()
}

/// The central scalar beta(v): product (or sum) of the JM elements on the
/// cell module at v.
pub fn beta<K: Scalar>(kind: TowerKind, p: &TowerParams<K>, v: &Vertex) -> Result<K> {
    let k = v.k() as i64;
    let n = v.n as i64;
    let c = v.lambda.content_sum();
    Ok(match kind {
        TowerKind::Symmetric => K::from_int(c),
        TowerKind::Hecke => p.hecke_q.pow_i(c)?,
        TowerKind::Brauer => {
            let gamma = K::one().sub(&p.delta);
            gamma.mul(&K::from_int((n - k) / 2)).add(&K::from_int(c))
        }
        TowerKind::Bmw => p.rho.pow_i(-(n - k))?.mul(&p.hecke_q.pow_i(c)?),
        TowerKind::TemperleyLieb => p.hecke_q.pow_i(v.shape().content_sum())?,
    })
}

/// Eigenvalue of L_j on the path basis vector for an edge `from -> to`
/// (levels j-1 and j).
pub fn step_scalar<K: Scalar>(kind: TowerKind, p: &TowerParams<K>, from: &Vertex, to: &Vertex) -> Result<K> {
    if kind == TowerKind::TemperleyLieb {
        return beta(kind, p, to)?.div(&beta(kind, p, from)?);
    }
    let added = to.k() > from.k();
    let (small, big) = if added { (&from.lambda, &to.lambda) } else { (&to.lambda, &from.lambda) };
    let row = (0..big.parts().len())
        .find(|&r| big.parts()[r] != small.parts().get(r).copied().unwrap_or(0))
        .ok_or_else(|| Error::InvalidVertex(format!("{from} -> {to} is not an edge")))?;
    let c = big.parts()[row] as i64 - 1 - row as i64;
    Ok(match (kind, added) {
        (TowerKind::Symmetric, _) => K::from_int(c),
        (TowerKind::Hecke, _) => p.hecke_q.pow_i(c)?,
        (TowerKind::Brauer, true) => K::from_int(c),
        (TowerKind::Brauer, false) => K::one().sub(&p.delta).sub(&K::from_int(c)),
        (TowerKind::Bmw, true) => p.hecke_q.pow_i(c)?,
        (TowerKind::Bmw, false) => p.rho.pow_i(-2)?.mul(&p.hecke_q.pow_i(-c)?),
        (TowerKind::TemperleyLieb, _) => unreachable!(),
    })
}

/// The vector (kappa(1,t), .., kappa(n,t)).
pub fn kappa_vector<K: Scalar>(kind: TowerKind, p: &TowerParams<K>, t: &Path) -> Result<Vec<K>> {
    t.steps.windows(2).map(|w| step_scalar(kind, p, &w[0], &w[1])).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[u8]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn edge_examples() {
        let v = Vertex::new(Lattice::Reflection, part(&[1]), 1).unwrap();
        let e: Vec<String> = v.edges().iter().map(|w| w.to_string()).collect();
        assert_eq!(e, ["(∅,2)", "((2),2)", "((1,1),2)"]);
        let root = Vertex::root(Lattice::Young);
        assert_eq!(root.edges().len(), 1);
        let empty2 = Vertex::new(Lattice::Reflection, Partition::empty(), 2).unwrap();
        assert_eq!(empty2.edges(), vec![Vertex::new(Lattice::Reflection, part(&[1]), 3).unwrap()]);
    }

    #[test]
    fn path_counts() {
        let v = Vertex::new(Lattice::Reflection, part(&[1]), 3).unwrap();
        assert_eq!(paths(&v).len(), 3);
        let v = Vertex::new(Lattice::Reflection, Partition::empty(), 4).unwrap();
        assert_eq!(paths(&v).len(), 3);
        let v = Vertex::new(Lattice::Young, part(&[2, 1]), 3).unwrap();
        let ps = paths(&v);
        assert_eq!(ps.len(), 2);
        // The row-reading tableau passes through (2) and comes first.
        assert_eq!(ps[0].steps[2].lambda, part(&[2]));
    }

    #[test]
    fn squares_of_path_counts_give_dimensions() {
        let fact = |n: usize| (1..=n).product::<usize>();
        let dfact = |n: usize| (1..=n).map(|i| 2 * i - 1).product::<usize>();
        let catalan = |n: usize| fact(2 * n) / fact(n) / fact(n + 1);
        for n in 1..=5 {
            let sq = |l: Lattice| vertices(l, n).iter().map(|v| paths(v).len().pow(2)).sum::<usize>();
            assert_eq!(sq(Lattice::Young), fact(n));
            assert_eq!(sq(Lattice::Reflection), dfact(n));
            assert_eq!(sq(Lattice::TwoColumn), catalan(n));
        }
    }

    #[test]
    fn contents_and_orders() {
        assert_eq!(part(&[2, 1]).contents(), vec![0, 1, -1]);
        assert!(part(&[3]).dominates(&part(&[2, 1])));
        assert!(!part(&[3, 1, 1, 1]).dominates(&part(&[2, 2, 2])));
        assert!(!part(&[2, 2, 2]).dominates(&part(&[3, 1, 1, 1])));
    }
}
