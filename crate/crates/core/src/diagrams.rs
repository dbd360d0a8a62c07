//! (n,n) Brauer diagrams: perfect matchings of 2n boundary points.
//!
//! Point `i < n` is top vertex i+1 and point `n + i` is bottom vertex i+1, so
//! the fixed boundary order is top1 < ... < topn < bot1 < ... < botn.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Perm;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct BrauerDiagram {
    n: usize,
    partner: Vec<u8>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorKind {
    E,
    S,
    Id,
}

impl BrauerDiagram {
    pub fn identity(n: usize) -> Self {
        let mut partner = vec![0u8; 2 * n];
        for i in 0..n {
            partner[i] = (n + i) as u8;
            partner[n + i] = i as u8;
        }
        Self { n, partner }
    }

    /// Builds a diagram from its pairs, validating the perfect matching.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut partner = vec![u8::MAX; 2 * n];
        for &(a, b) in pairs {
            if a >= 2 * n || b >= 2 * n || a == b {
                return Err(Error::InvalidDiagram(format!("bad pair ({a},{b}) for rank {n}")));
            }
            if partner[a] != u8::MAX || partner[b] != u8::MAX {
                return Err(Error::InvalidDiagram(format!("point used twice in ({a},{b})")));
            }
            partner[a] = b as u8;
            partner[b] = a as u8;
        }
        if partner.contains(&u8::MAX) {
            return Err(Error::InvalidDiagram("matching is not perfect".into()));
        }
        Ok(Self { n, partner })
    }

    pub(crate) fn from_partner(n: usize, partner: Vec<u8>) -> Self {
        debug_assert_eq!(partner.len(), 2 * n);
        Self { n, partner }
    }

    /// `e_i` (0-based `i`) joins top i, i+1 and bottom i, i+1.
    pub fn e(n: usize, i: usize) -> Self {
        let mut d = Self::identity(n);
        d.partner[i] = (i + 1) as u8;
        d.partner[i + 1] = i as u8;
        d.partner[n + i] = (n + i + 1) as u8;
        d.partner[n + i + 1] = (n + i) as u8;
        d
    }

    /// `s_i` (0-based `i`) crosses strands i and i+1.
    pub fn s(n: usize, i: usize) -> Self {
        Self::from_perm(&Perm::simple(n, i))
    }

    /// Generator with 1-based index `j`, as in the usual notation e_j, s_j.
    pub fn generator(kind: GeneratorKind, j: usize, n: usize) -> Result<Self> {
        match kind {
            GeneratorKind::Id => Ok(Self::identity(n)),
            _ if j == 0 || j >= n => Err(Error::IndexOutOfRange { index: j, n }),
            GeneratorKind::E => Ok(Self::e(n, j - 1)),
            GeneratorKind::S => Ok(Self::s(n, j - 1)),
        }
    }

    /// Permutation diagram: top i joined to bottom w(i).
    pub fn from_perm(w: &Perm) -> Self {
        let n = w.len();
        let mut partner = vec![0u8; 2 * n];
        for i in 0..n {
            let b = n + w.apply(i);
            partner[i] = b as u8;
            partner[b] = i as u8;
        }
        Self { n, partner }
    }

    pub fn to_perm(&self) -> Option<Perm> {
        let n = self.n;
        let images: Option<Vec<u8>> = (0..n)
            .map(|i| {
                let p = self.partner[i] as usize;
                (p >= n).then(|| (p - n) as u8)
            })
            .collect();
        images.and_then(Perm::from_images)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partner(&self, p: usize) -> usize {
        self.partner[p] as usize
    }

    pub fn partners(&self) -> &[u8] {
        &self.partner
    }

    pub fn through_strands(&self) -> usize {
        (0..self.n).filter(|&i| self.partner[i] as usize >= self.n).count()
    }

    /// Pairs with the smaller point first, sorted.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..2 * self.n)
            .filter_map(|p| {
                let q = self.partner[p] as usize;
                (p < q).then_some((p, q))
            })
            .collect()
    }

    /// Stacks `b` over `self`; the result has `b`'s top and `self`'s bottom.
    /// Returns the diagram and the number of closed loops removed.
    pub fn compose(&self, b: &Self) -> Result<(Self, usize)> {
        if self.n != b.n {
            return Err(Error::RankMismatch { left: self.n, right: b.n });
        }
        Ok(self.compose_unchecked(b))
    }

    pub(crate) fn compose_unchecked(&self, b: &Self) -> (Self, usize) {
        let n = self.n;
        // Middle point m is top m of `self` glued to bottom m of `b`. Result
        // points keep their numbering: tops come from `b`, bottoms from `self`.
        let mut middle_seen = vec![false; n];
        let mut result = vec![u8::MAX; 2 * n];
        let walk = |start: usize, middle_seen: &mut [bool]| -> usize {
            let (mut p, mut in_b) = if start < n { (start, true) } else { (start, false) };
            loop {
                if in_b {
                    let q = b.partner[p] as usize;
                    if q < n {
                        return q;
                    }
                    middle_seen[q - n] = true;
                    p = q - n;
                    in_b = false;
                } else {
                    let q = self.partner[p] as usize;
                    if q >= n {
                        return q;
                    }
                    middle_seen[q] = true;
                    p = n + q;
                    in_b = true;
                }
            }
        };
        for start in 0..2 * n {
            if result[start] != u8::MAX {
                continue;
            }
            let end = walk(start, &mut middle_seen);
            result[start] = end as u8;
            result[end] = start as u8;
        }
        let mut loops = 0;
        for m in 0..n {
            if middle_seen[m] {
                continue;
            }
            loops += 1;
            let mut p = m;
            loop {
                middle_seen[p] = true;
                let q = self.partner[p] as usize;
                middle_seen[q] = true;
                let r = b.partner[n + q] as usize - n;
                if r == m {
                    break;
                }
                p = r;
            }
        }
        (Self { n, partner: result }, loops)
    }

    /// True iff no two pairs interleave around the boundary (top read left to
    /// right, then bottom read right to left).
    pub fn is_planar(&self) -> bool {
        let n = self.n;
        let pos = |p: usize| if p < n { p } else { 2 * n - 1 - (p - n) };
        let arcs: Vec<(usize, usize)> = self
            .pairs()
            .into_iter()
            .map(|(a, b)| {
                let (x, y) = (pos(a), pos(b));
                (x.min(y), x.max(y))
            })
            .collect();
        for (i, &(a, b)) in arcs.iter().enumerate() {
            for &(c, d) in &arcs[i + 1..] {
                if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                    return false;
                }
            }
        }
        true
    }

    /// Reflection in the horizontal axis: top i and bottom i swap.
    pub fn flip(&self) -> Self {
        let n = self.n;
        let sw = |p: usize| if p < n { p + n } else { p - n };
        let mut partner = vec![0u8; 2 * n];
        for p in 0..2 * n {
            partner[sw(p)] = sw(self.partner[p] as usize) as u8;
        }
        Self { n, partner }
    }

    /// Appends vertical strands up to rank `m`.
    pub fn include(&self, m: usize) -> Self {
        assert!(m >= self.n, "cannot include into a smaller rank");
        let n = self.n;
        let map = |p: usize| if p < n { p } else { m + (p - n) };
        let mut partner = vec![0u8; 2 * m];
        for p in 0..2 * n {
            partner[map(p)] = map(self.partner[p] as usize) as u8;
        }
        for i in n..m {
            partner[i] = (m + i) as u8;
            partner[m + i] = i as u8;
        }
        Self { n: m, partner }
    }

    /// All diagrams of rank `n`, sorted.
    pub fn enumerate(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut partner = vec![u8::MAX; 2 * n];
        fn rec(n: usize, partner: &mut Vec<u8>, out: &mut Vec<BrauerDiagram>) {
            let Some(first) = partner.iter().position(|&p| p == u8::MAX) else {
                out.push(BrauerDiagram { n, partner: partner.clone() });
                return;
            };
            for other in first + 1..2 * n {
                if partner[other] == u8::MAX {
                    partner[first] = other as u8;
                    partner[other] = first as u8;
                    rec(n, partner, out);
                    partner[first] = u8::MAX;
                    partner[other] = u8::MAX;
                }
            }
        }
        rec(n, &mut partner, &mut out);
        out.sort();
        out
    }

    pub fn enumerate_planar(n: usize) -> Vec<Self> {
        Self::enumerate(n).into_iter().filter(|d| d.is_planar()).collect()
    }

    fn point_name(&self, p: usize) -> String {
        if p < self.n {
            format!("t{}", p + 1)
        } else {
            format!("b{}", p - self.n + 1)
        }
    }
}

impl fmt::Display for BrauerDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .pairs()
            .into_iter()
            .map(|(a, b)| format!("({},{})", self.point_name(a), self.point_name(b)))
            .collect();
        write!(f, "[{}]", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(n: usize, pairs: &[(usize, usize)]) -> BrauerDiagram {
        BrauerDiagram::from_pairs(n, pairs).unwrap()
    }

    #[test]
    fn composition_examples() {
        let e1 = BrauerDiagram::e(2, 0);
        assert_eq!(e1.compose(&e1).unwrap(), (e1.clone(), 1));
        let s1 = BrauerDiagram::s(2, 0);
        assert_eq!(s1.compose(&s1).unwrap(), (BrauerDiagram::identity(2), 0));
        let (c, r) = BrauerDiagram::e(3, 0).compose(&BrauerDiagram::e(3, 1)).unwrap();
        assert_eq!(c, d(3, &[(1, 2), (0, 5), (3, 4)]));
        assert_eq!(r, 0);
        assert!(c.is_planar());
        assert!(e1.compose(&BrauerDiagram::identity(3)).is_err());
    }

    #[test]
    fn generators_and_text_form() {
        let e = BrauerDiagram::generator(GeneratorKind::E, 1, 2).unwrap();
        assert_eq!(e.to_string(), "[(t1,t2),(b1,b2)]");
        let s = BrauerDiagram::generator(GeneratorKind::S, 2, 3).unwrap();
        assert_eq!(s.to_string(), "[(t1,b1),(t2,b3),(t3,b2)]");
        assert!(BrauerDiagram::generator(GeneratorKind::E, 3, 3).is_err());
        assert_eq!(s.flip(), s);
        assert_eq!(e.flip(), e);
    }

    #[test]
    fn planarity() {
        assert!(BrauerDiagram::e(2, 0).is_planar());
        assert!(!BrauerDiagram::s(2, 0).is_planar());
    }

    #[test]
    fn counts() {
        let double_factorial = [1, 1, 3, 15, 105, 945];
        let catalan = [1, 1, 2, 5, 14, 42, 132];
        for n in 0..=5 {
            assert_eq!(BrauerDiagram::enumerate(n).len(), double_factorial[n]);
        }
        for n in 0..=6 {
            assert_eq!(BrauerDiagram::enumerate_planar(n).len(), catalan[n]);
        }
    }

    #[test]
    fn exhaustive_associativity_and_flip() {
        for n in 2..=3 {
            let all = BrauerDiagram::enumerate(n);
            for a in &all {
                for b in &all {
                    let (ab, r1) = a.compose(b).unwrap();
                    let (ba_flip, r2) = b.flip().compose(&a.flip()).unwrap();
                    assert_eq!(ab.flip(), ba_flip);
                    assert_eq!(r1, r2);
                    for c in &all {
                        let (abc, r3) = ab.compose(c).unwrap();
                        let (bc, r4) = b.compose(c).unwrap();
                        let (abc2, r5) = a.compose(&bc).unwrap();
                        assert_eq!(abc, abc2);
                        assert_eq!(r1 + r3, r4 + r5);
                    }
                }
            }
        }
    }

    #[test]
    fn permutation_diagrams_compose_as_permutations() {
        for a in Perm::all(4) {
            for b in Perm::all(4) {
                let (c, r) = BrauerDiagram::from_perm(&a).compose(&BrauerDiagram::from_perm(&b)).unwrap();
                assert_eq!(r, 0);
                assert_eq!(c.to_perm().unwrap(), a.compose(&b));
            }
        }
    }

    #[test]
    fn include_appends_strands() {
        let e = BrauerDiagram::e(2, 0);
        assert_eq!(e.include(3), BrauerDiagram::e(3, 0));
        assert_eq!(BrauerDiagram::identity(2).include(4), BrauerDiagram::identity(4));
    }
}
