//! BMW multiplication by Kauffman skein rewriting.
//!
//! A tangle is stored as a word of horizontal slices read bottom to top: a
//! crossing of the strands at positions i and i+1, a cap joining positions i
//! and i+1 (width shrinks by two), or a cup creating them (width grows by two).
//! The basis tangle of a Brauer diagram is a fixed descending lift of a
//! canonical shadow; rewriting switches and smooths crossings until every
//! term is descending, and descending tangles evaluate to a basis tangle
//! times loop and twist factors.

use std::collections::HashMap;
use std::sync::RwLock;

use crate::arith::Scalar;
use crate::diagrams::BrauerDiagram;
use crate::error::{Error, Result};
use crate::linalg::{sv_axpy, sv_scale, SparseVec};

/// Which strand of a crossing passes over.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Over {
    /// The strand running from bottom-right to top-left is on top; this is `g_i`.
    SeNw,
    /// The strand running from bottom-left to top-right is on top; this is `g_i^{-1}`.
    SwNe,
}

impl Over {
    fn switched(self) -> Self {
        match self {
            Over::SeNw => Over::SwNe,
            Over::SwNe => Over::SeNw,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Slice {
    Cross(u8, Over),
    Cap(u8),
    Cup(u8),
}

/// A tangle diagram on `n` bottom and `n` top points plus free loops.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RawTangle {
    pub n: usize,
    pub slices: Vec<Slice>,
    pub free_loops: usize,
}

impl RawTangle {
    pub fn new(n: usize, slices: Vec<Slice>, free_loops: usize) -> Result<Self> {
        check_widths(n, &slices)?;
        Ok(Self { n, slices, free_loops })
    }

    pub fn crossings(&self) -> usize {
        self.slices.iter().filter(|s| matches!(s, Slice::Cross(..))).count()
    }
}

fn check_widths(n: usize, slices: &[Slice]) -> Result<()> {
    let mut w = n;
    for s in slices {
        match *s {
            Slice::Cross(i, _) if (i as usize) + 1 < w => {}
            Slice::Cap(i) if (i as usize) + 1 < w => w -= 2,
            Slice::Cup(i) if (i as usize) <= w => w += 2,
            _ => return Err(Error::InvalidDiagram(format!("slice {s:?} does not fit width {w}"))),
        }
    }
    if w != n {
        return Err(Error::InvalidDiagram(format!("tangle ends with width {w}, expected {n}")));
    }
    Ok(())
}

/// Choice of the crossing to resolve when several are out of order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    First,
    Last,
    Seeded(u64),
}

const DOWN: usize = 0;
const UP: usize = 1;

#[derive(Clone, Copy, Debug)]
struct HalfLink {
    node: usize,
    slot: usize,
    /// Crossing slice and piece (0: SW-NE strand, 1: SE-NW strand).
    crossing: Option<(usize, u8)>,
}

struct Geometry {
    levels: Vec<usize>,
    offsets: Vec<usize>,
    links: Vec<[Option<HalfLink>; 2]>,
}

impl Geometry {
    fn build(n: usize, slices: &[Slice]) -> Self {
        let mut levels = vec![n];
        for s in slices {
            let w = *levels.last().unwrap();
            levels.push(match s {
                Slice::Cross(..) => w,
                Slice::Cap(_) => w - 2,
                Slice::Cup(_) => w + 2,
            });
        }
        let mut offsets = Vec::with_capacity(levels.len());
        let mut total = 0;
        for &w in &levels {
            offsets.push(total);
            total += w;
        }
        let mut links: Vec<[Option<HalfLink>; 2]> = vec![[None, None]; total];
        let id = |lvl: usize, pos: usize| offsets[lvl] + pos;
        let mut join = |a: usize, sa: usize, b: usize, sb: usize, c: Option<(usize, u8)>| {
            links[a][sa] = Some(HalfLink { node: b, slot: sb, crossing: c });
            links[b][sb] = Some(HalfLink { node: a, slot: sa, crossing: c });
        };
        for (s, slice) in slices.iter().enumerate() {
            let w = levels[s];
            match *slice {
                Slice::Cross(i, _) => {
                    let i = i as usize;
                    for j in 0..w {
                        if j == i {
                            join(id(s, i), UP, id(s + 1, i + 1), DOWN, Some((s, 0)));
                        } else if j == i + 1 {
                            join(id(s, i + 1), UP, id(s + 1, i), DOWN, Some((s, 1)));
                        } else {
                            join(id(s, j), UP, id(s + 1, j), DOWN, None);
                        }
                    }
                }
                Slice::Cap(i) => {
                    let i = i as usize;
                    for j in 0..w {
                        if j < i {
                            join(id(s, j), UP, id(s + 1, j), DOWN, None);
                        } else if j == i {
                            join(id(s, i), UP, id(s, i + 1), UP, None);
                        } else if j > i + 1 {
                            join(id(s, j), UP, id(s + 1, j - 2), DOWN, None);
                        }
                    }
                }
                Slice::Cup(i) => {
                    let i = i as usize;
                    for j in 0..w {
                        if j < i {
                            join(id(s, j), UP, id(s + 1, j), DOWN, None);
                        } else {
                            join(id(s, j), UP, id(s + 1, j + 2), DOWN, None);
                        }
                    }
                    join(id(s + 1, i), DOWN, id(s + 1, i + 1), DOWN, None);
                }
            }
        }
        Self { levels, offsets, links }
    }
}

#[derive(Clone, Copy, Debug)]
struct Visit {
    piece: u8,
    up: bool,
    component: usize,
}

/// Result of walking every component of a tangle in the canonical order.
struct Traversal {
    diagram: BrauerDiagram,
    closed_loops: usize,
    /// Crossing slice indices in order of their first visit.
    order: Vec<usize>,
    visits: HashMap<usize, (Visit, Visit)>,
}

fn exit_half_edge(v: &Visit) -> u8 {
    match (v.piece, v.up) {
        (0, true) => 0,
        (1, true) => 1,
        (0, false) => 2,
        _ => 3,
    }
}

fn over_piece(o: Over) -> u8 {
    match o {
        Over::SeNw => 1,
        Over::SwNe => 0,
    }
}

fn traverse(n: usize, slices: &[Slice]) -> Traversal {
    if slices.is_empty() {
        return Traversal {
            diagram: BrauerDiagram::identity(n),
            closed_loops: 0,
            order: Vec::new(),
            visits: HashMap::new(),
        };
    }
    let geo = Geometry::build(n, slices);
    let top_level = geo.levels.len() - 1;
    let total = geo.links.len();
    let mut visited = vec![false; total];
    let mut partner = vec![0u8; 2 * n];
    let mut order = Vec::new();
    let mut first: HashMap<usize, Visit> = HashMap::new();
    let mut visits: HashMap<usize, (Visit, Visit)> = HashMap::new();
    let boundary_node = |key: usize| {
        if key < n {
            geo.offsets[top_level] + key
        } else {
            key - n
        }
    };
    let node_key = |node: usize| -> Option<usize> {
        if node < n {
            Some(n + node)
        } else if node >= geo.offsets[top_level] {
            Some(node - geo.offsets[top_level])
        } else {
            None
        }
    };
    let mut record = |link: &HalfLink, from_slot: usize, component: usize, order: &mut Vec<usize>| {
        if let Some((s, piece)) = link.crossing {
            let v = Visit { piece, up: from_slot == UP, component };
            match first.get(&s) {
                None => {
                    first.insert(s, v);
                    order.push(s);
                }
                Some(f) => {
                    visits.insert(s, (*f, v));
                }
            }
        }
    };
    let mut component = 0;
    for key in 0..2 * n {
        let start = boundary_node(key);
        if visited[start] {
            continue;
        }
        visited[start] = true;
        // Boundary nodes have a single link.
        let mut slot = if key < n { DOWN } else { UP };
        let mut node = start;
        loop {
            let link = geo.links[node][slot].expect("interior links exist");
            record(&link, slot, component, &mut order);
            node = link.node;
            visited[node] = true;
            let other = 1 - link.slot;
            if geo.links[node][other].is_none() {
                break;
            }
            slot = other;
        }
        let end = node_key(node).expect("arcs end on the boundary");
        partner[key] = end as u8;
        partner[end] = key as u8;
        component += 1;
    }
    let mut closed_loops = 0;
    for start in 0..total {
        if visited[start] {
            continue;
        }
        closed_loops += 1;
        visited[start] = true;
        let mut node = start;
        let mut slot = UP;
        loop {
            let link = geo.links[node][slot].expect("loop nodes have two links");
            record(&link, slot, component, &mut order);
            node = link.node;
            if node == start {
                break;
            }
            visited[node] = true;
            slot = 1 - link.slot;
        }
        component += 1;
    }
    Traversal { diagram: BrauerDiagram::from_partner(n, partner), closed_loops, order, visits }
}

/// The canonical shadow of a diagram: sort the bottom points so that bottom
/// pairs become adjacent (pairs ordered by smaller endpoint, through strands
/// after them in bottom order), apply the block e_1 e_3 ..., then sort into
/// the top positions. Crossing types are placeholders.
fn shadow(d: &BrauerDiagram) -> Vec<Slice> {
    let n = d.n();
    let mut slices = Vec::new();
    let bottom_pairs: Vec<(usize, usize)> = d
        .pairs()
        .into_iter()
        .filter(|&(a, b)| a >= n && b >= n)
        .map(|(a, b)| (a - n, b - n))
        .collect();
    let top_pairs: Vec<(usize, usize)> =
        d.pairs().into_iter().filter(|&(a, b)| a < n && b < n).collect();
    let through: Vec<usize> = (0..n).filter(|&b| d.partner(n + b) < n).collect();
    let mut target: Vec<usize> = Vec::with_capacity(n);
    for &(a, b) in &bottom_pairs {
        target.push(a);
        target.push(b);
    }
    target.extend(&through);
    let mut cur: Vec<usize> = (0..n).collect();
    for t in 0..n {
        let mut p = cur.iter().position(|&x| x == target[t]).unwrap();
        while p > t {
            cur.swap(p - 1, p);
            slices.push(Slice::Cross((p - 1) as u8, Over::SeNw));
            p -= 1;
        }
    }
    let m = bottom_pairs.len();
    debug_assert_eq!(m, top_pairs.len());
    for p in 0..m {
        slices.push(Slice::Cap((2 * p) as u8));
        slices.push(Slice::Cup((2 * p) as u8));
    }
    let mut middle: Vec<usize> = Vec::with_capacity(n);
    for &(a, b) in &top_pairs {
        middle.push(a);
        middle.push(b);
    }
    middle.extend(through.iter().map(|&b| d.partner(n + b)));
    // Bubble sort the top labels into increasing order.
    for i in 0..n {
        for j in (i + 1..n).rev() {
            if middle[j - 1] > middle[j] {
                middle.swap(j - 1, j);
                slices.push(Slice::Cross((j - 1) as u8, Over::SeNw));
            }
        }
    }
    slices
}

/// The basis tangle of `d`: its shadow with every crossing made descending.
pub fn normal_form_word(d: &BrauerDiagram) -> Vec<Slice> {
    let mut slices = shadow(d);
    let tr = traverse(d.n(), &slices);
    for (s, (f, _)) in &tr.visits {
        if let Slice::Cross(i, _) = slices[*s] {
            slices[*s] = Slice::Cross(i, if f.piece == 1 { Over::SeNw } else { Over::SwNe });
        }
    }
    slices
}

fn mix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// Skein rewriting engine for one rank, with a memo of reduced words.
pub struct SkeinEngine<K: Scalar> {
    n: usize,
    rho_inv: K,
    delta: K,
    z: K,
    index: HashMap<BrauerDiagram, usize>,
    strategy: Strategy,
    memo: RwLock<HashMap<Vec<Slice>, SparseVec<K>>>,
}

impl<K: Scalar> SkeinEngine<K> {
    /// `basis` fixes the coordinate order of results.
    pub fn new(basis: &[BrauerDiagram], n: usize, rho: &K, q: &K, strategy: Strategy) -> Result<Self> {
        let rho_inv = rho.inv()?;
        let q_inv = q.inv()?;
        let z = q.sub(&q_inv);
        let delta = rho_inv.sub(rho).div(&q_inv.sub(q))?.add(&K::one());
        let index = basis.iter().cloned().enumerate().map(|(i, d)| (d, i)).collect();
        Ok(Self { n, rho_inv, delta, z, index, strategy, memo: RwLock::new(HashMap::new()) })
    }

    pub fn delta(&self) -> &K {
        &self.delta
    }

    pub fn reduce_tangle(&self, t: &RawTangle) -> Result<SparseVec<K>> {
        if t.n != self.n {
            return Err(Error::RankMismatch { left: t.n, right: self.n });
        }
        let v = self.reduce(&t.slices)?;
        let f = self.delta.pow_i(t.free_loops as i64)?;
        Ok(sv_scale(&v, &f))
    }

    pub fn reduce(&self, slices: &[Slice]) -> Result<SparseVec<K>> {
        self.reduce_bounded(slices, None)
    }

    fn reduce_bounded(&self, slices: &[Slice], bound: Option<(usize, usize)>) -> Result<SparseVec<K>> {
        if let Some(v) = self.memo.read().expect("memo lock").get(slices) {
            return Ok(v.clone());
        }
        let tr = traverse(self.n, slices);
        let bad: Vec<usize> = tr
            .order
            .iter()
            .copied()
            .filter(|s| match slices[*s] {
                Slice::Cross(_, o) => tr.visits[s].0.piece != over_piece(o),
                _ => false,
            })
            .collect();
        let crossings = tr.order.len();
        if let Some(b) = bound {
            if (crossings, bad.len()) >= b {
                return Err(Error::NonTermination(format!(
                    "measure {:?} did not decrease below {:?}",
                    (crossings, bad.len()),
                    b
                )));
            }
        }
        let result = if bad.is_empty() {
            let mut writhe: i64 = 0;
            for (f, s) in tr.visits.values() {
                if f.component == s.component {
                    let (over, under) = (f, s);
                    let sign = if exit_half_edge(under) == (exit_half_edge(over) + 1) % 4 { 1 } else { -1 };
                    writhe += sign;
                }
            }
            let coeff = self.rho_inv.pow_i(writhe)?.mul(&self.delta.pow_i(tr.closed_loops as i64)?);
            let idx = *self
                .index
                .get(&tr.diagram)
                .ok_or_else(|| Error::InvalidDiagram(format!("{} not in basis", tr.diagram)))?;
            vec![(idx, coeff)]
        } else {
            let pick = match self.strategy {
                Strategy::First => bad[0],
                Strategy::Last => bad[bad.len() - 1],
                Strategy::Seeded(seed) => {
                    let mut h = seed;
                    for s in slices {
                        h = mix(h ^ slice_code(s));
                    }
                    bad[(h % bad.len() as u64) as usize]
                }
            };
            let (i, o) = match slices[pick] {
                Slice::Cross(i, o) => (i, o),
                _ => unreachable!("bad positions are crossings"),
            };
            let measure = (crossings, bad.len());
            let mut switched = slices.to_vec();
            switched[pick] = Slice::Cross(i, o.switched());
            let mut removed = slices.to_vec();
            removed.remove(pick);
            let mut smoothed = slices.to_vec();
            smoothed.splice(pick..=pick, [Slice::Cap(i), Slice::Cup(i)]);
            // g = g^{-1} + z (1 - e) and g^{-1} = g - z (1 - e).
            let z = match o {
                Over::SeNw => self.z.clone(),
                Over::SwNe => self.z.neg(),
            };
            let a = self.reduce_bounded(&switched, Some(measure))?;
            let b = self.reduce_bounded(&removed, Some(measure))?;
            let c = self.reduce_bounded(&smoothed, Some(measure))?;
            let mut out = sv_axpy(&a, &z, &b);
            out = sv_axpy(&out, &z.neg(), &c);
            out
        };
        self.memo.write().expect("memo lock").insert(slices.to_vec(), result.clone());
        Ok(result)
    }
}

fn slice_code(s: &Slice) -> u64 {
    match *s {
        Slice::Cross(i, Over::SeNw) => 4 * i as u64,
        Slice::Cross(i, Over::SwNe) => 4 * i as u64 + 1,
        Slice::Cap(i) => 4 * i as u64 + 2,
        Slice::Cup(i) => 4 * i as u64 + 3,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rat;

    fn engine(n: usize, strategy: Strategy) -> (SkeinEngine<Rat>, Vec<BrauerDiagram>) {
        let basis = BrauerDiagram::enumerate(n);
        let rho = Rat::from_rational(num_rational::BigRational::new(5.into(), 3.into()));
        let q = Rat::from_rational(num_rational::BigRational::new(7.into(), 2.into()));
        (SkeinEngine::new(&basis, n, &rho, &q, strategy).unwrap(), basis)
    }

    #[test]
    fn basis_words_have_the_right_shadow_and_reduce_to_themselves() {
        for n in 1..=4 {
            let (eng, basis) = engine(n, Strategy::First);
            for (i, d) in basis.iter().enumerate() {
                let w = normal_form_word(d);
                assert_eq!(traverse(n, &w).diagram, *d);
                assert_eq!(eng.reduce(&w).unwrap(), vec![(i, Rat::one())]);
            }
        }
    }

    #[test]
    fn free_loop_and_curl() {
        let (eng, basis) = engine(1, Strategy::First);
        let id = basis.iter().position(|d| *d == BrauerDiagram::identity(1)).unwrap();
        let t = RawTangle::new(1, vec![], 1).unwrap();
        assert_eq!(eng.reduce_tangle(&t).unwrap(), vec![(id, eng.delta().clone())]);
        // A loop drawn as a cup followed by a cap.
        let t = RawTangle::new(1, vec![Slice::Cup(1), Slice::Cap(1)], 0).unwrap();
        assert_eq!(eng.reduce_tangle(&t).unwrap(), vec![(id, eng.delta().clone())]);
        assert!(RawTangle::new(1, vec![Slice::Cup(0)], 0).is_err());
    }
}
