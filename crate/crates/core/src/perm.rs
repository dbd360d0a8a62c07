//! Permutations of {0, .., n-1} stored as image lists.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u8).collect())
    }

    pub fn from_images(images: Vec<u8>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            let i = i as usize;
            if i >= images.len() || seen[i] {
                return None;
            }
            seen[i] = true;
        }
        Some(Perm(images))
    }

    /// The simple transposition swapping `i` and `i + 1`.
    pub fn simple(n: usize, i: usize) -> Self {
        let mut p = Self::identity(n);
        p.0.swap(i, i + 1);
        p
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Self) -> Self {
        Perm(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut out = vec![0u8; self.0.len()];
        for (i, &w) in self.0.iter().enumerate() {
            out[w as usize] = i as u8;
        }
        Perm(out)
    }

    /// `self ∘ s_i`, i.e. swap the images of `i` and `i + 1`.
    pub fn mul_simple_right(&self, i: usize) -> Self {
        let mut p = self.clone();
        p.0.swap(i, i + 1);
        p
    }

    /// `s_i ∘ self`, i.e. swap the values `i` and `i + 1`.
    pub fn mul_simple_left(&self, i: usize) -> Self {
        Perm(
            self.0
                .iter()
                .map(|&v| {
                    if v as usize == i {
                        (i + 1) as u8
                    } else if v as usize == i + 1 {
                        i as u8
                    } else {
                        v
                    }
                })
                .collect(),
        )
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let mut c = 0;
        for i in 0..self.0.len() {
            for j in i + 1..self.0.len() {
                if self.0[i] > self.0[j] {
                    c += 1;
                }
            }
        }
        c
    }

    /// A reduced word: `self = s_{w[0]} ∘ s_{w[1]} ∘ ...`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::new();
        let mut p = self.clone();
        while let Some(i) = (0..p.0.len().saturating_sub(1)).find(|&i| p.0[i] > p.0[i + 1]) {
            word.push(i);
            p = p.mul_simple_right(i);
        }
        word.reverse();
        word
    }

    /// Extends by fixed points to size `m`.
    pub fn extend(&self, m: usize) -> Self {
        let mut v = self.0.clone();
        for i in self.0.len()..m {
            v.push(i as u8);
        }
        Perm(v)
    }

    /// All permutations of size `n` in lexicographic order of image lists.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = Vec::with_capacity(n);
        let mut used = vec![false; n];
        fn rec(n: usize, cur: &mut Vec<u8>, used: &mut [bool], out: &mut Vec<Perm>) {
            if cur.len() == n {
                out.push(Perm(cur.clone()));
                return;
            }
            for v in 0..n {
                if !used[v] {
                    used[v] = true;
                    cur.push(v as u8);
                    rec(n, cur, used, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        rec(n, &mut cur, &mut used, &mut out);
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| (v + 1).to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}
