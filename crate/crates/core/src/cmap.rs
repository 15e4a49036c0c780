//! Signed cyclic graphs stored as rotation systems.
//!
//! Edge `i` always owns the darts `2i` and `2i + 1`, so the edge involution is
//! `d ^ 1`. Vertex rotations are counterclockwise cyclic sequences of darts.
//! Every constructor canonicalizes: each rotation starts at its smallest dart,
//! vertices are ordered by that dart, and isolated vertices come last.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

pub type Dart = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn is_positive(self) -> bool {
        self == Sign::Positive
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CmapError {
    #[error("unknown edge {0}")]
    UnknownEdge(usize),
    #[error("edge subset sized for {subset} edges used on a graph with {graph} edges")]
    SubsetMismatch { subset: usize, graph: usize },
    #[error("dart {0} is out of range")]
    DartOutOfRange(Dart),
    #[error("dart {0} appears in more than one vertex rotation")]
    DuplicateDart(Dart),
    #[error("dart {0} appears in no vertex rotation")]
    MissingDart(Dart),
    #[error("a graph needs at least one vertex")]
    NoVertices,
}

/// Membership mask over the edge ids of a host graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeSubset {
    len: usize,
    words: Vec<u64>,
}

impl EdgeSubset {
    pub fn empty(edge_count: usize) -> Self {
        EdgeSubset {
            len: edge_count,
            words: vec![0; edge_count.div_ceil(64)],
        }
    }

    pub fn full(edge_count: usize) -> Self {
        let mut s = Self::empty(edge_count);
        for e in 0..edge_count {
            s.insert(e);
        }
        s
    }

    /// Low bit is edge 0. Only edges below `edge_count` may be set.
    pub fn from_mask(edge_count: usize, mask: u64) -> Self {
        let mut s = Self::empty(edge_count);
        for e in 0..edge_count.min(64) {
            if mask >> e & 1 == 1 {
                s.insert(e);
            }
        }
        s
    }

    pub fn from_edges(edge_count: usize, edges: impl IntoIterator<Item = usize>) -> Result<Self, CmapError> {
        let mut s = Self::empty(edge_count);
        for e in edges {
            if e >= edge_count {
                return Err(CmapError::UnknownEdge(e));
            }
            s.insert(e);
        }
        Ok(s)
    }

    pub fn host_edge_count(&self) -> usize {
        self.len
    }

    pub fn contains(&self, e: usize) -> bool {
        e < self.len && self.words[e / 64] >> (e % 64) & 1 == 1
    }

    /// Panics if `e` is not an edge id of the host graph.
    pub fn insert(&mut self, e: usize) {
        assert!(e < self.len, "edge {e} outside subset of {} edges", self.len);
        self.words[e / 64] |= 1 << (e % 64);
    }

    pub fn remove(&mut self, e: usize) {
        if e < self.len {
            self.words[e / 64] &= !(1 << (e % 64));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|e| self.contains(*e))
    }

    pub fn complement(&self) -> Self {
        let mut s = Self::empty(self.len);
        for e in 0..self.len {
            if !self.contains(e) {
                s.insert(e);
            }
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedCyclicGraph {
    rotations: Vec<Vec<Dart>>,
    signs: Vec<Sign>,
    // derived
    dart_vertex: Vec<usize>,
    dart_next: Vec<Dart>,
}

impl SignedCyclicGraph {
    /// Builds a graph from vertex rotations over darts `0..2 * signs.len()`.
    /// Edge `i` joins darts `2i` and `2i + 1`.
    pub fn new(rotations: Vec<Vec<Dart>>, signs: Vec<Sign>) -> Result<Self, CmapError> {
        if rotations.is_empty() {
            return Err(CmapError::NoVertices);
        }
        let darts = 2 * signs.len();
        let mut seen = vec![false; darts];
        for rot in &rotations {
            for &d in rot {
                if d >= darts {
                    return Err(CmapError::DartOutOfRange(d));
                }
                if std::mem::replace(&mut seen[d], true) {
                    return Err(CmapError::DuplicateDart(d));
                }
            }
        }
        if let Some(d) = seen.iter().position(|s| !s) {
            return Err(CmapError::MissingDart(d));
        }
        Ok(Self::build(rotations, signs))
    }

    fn build(mut rotations: Vec<Vec<Dart>>, signs: Vec<Sign>) -> Self {
        for rot in rotations.iter_mut() {
            if let Some(pos) = rot.iter().enumerate().min_by_key(|(_, d)| **d).map(|(i, _)| i) {
                rot.rotate_left(pos);
            }
        }
        rotations.sort_by_key(|r| r.first().copied().unwrap_or(usize::MAX));
        let darts = 2 * signs.len();
        let mut dart_vertex = vec![0; darts];
        let mut dart_next = vec![0; darts];
        for (v, rot) in rotations.iter().enumerate() {
            for (i, &d) in rot.iter().enumerate() {
                dart_vertex[d] = v;
                dart_next[d] = rot[(i + 1) % rot.len()];
            }
        }
        SignedCyclicGraph {
            rotations,
            signs,
            dart_vertex,
            dart_next,
        }
    }

    pub fn isolated_vertices(n: usize) -> Self {
        Self::build(vec![Vec::new(); n.max(1)], Vec::new())
    }

    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    pub fn edge_count(&self) -> usize {
        self.signs.len()
    }

    pub fn dart_count(&self) -> usize {
        2 * self.signs.len()
    }

    pub fn rotations(&self) -> &[Vec<Dart>] {
        &self.rotations
    }

    pub fn rotation(&self, v: usize) -> &[Dart] {
        &self.rotations[v]
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn sign(&self, e: usize) -> Sign {
        self.signs[e]
    }

    pub fn edge_darts(e: usize) -> (Dart, Dart) {
        (2 * e, 2 * e + 1)
    }

    pub fn edge_of(d: Dart) -> usize {
        d / 2
    }

    pub fn opposite(d: Dart) -> Dart {
        d ^ 1
    }

    pub fn vertex_of(&self, d: Dart) -> usize {
        self.dart_vertex[d]
    }

    /// Next dart counterclockwise at the same vertex.
    pub fn next_ccw(&self, d: Dart) -> Dart {
        self.dart_next[d]
    }

    pub fn prev_ccw(&self, d: Dart) -> Dart {
        let rot = &self.rotations[self.dart_vertex[d]];
        let i = rot.iter().position(|x| *x == d).expect("dart in its rotation");
        rot[(i + rot.len() - 1) % rot.len()]
    }

    pub fn is_loop(&self, e: usize) -> bool {
        let (h1, h2) = Self::edge_darts(e);
        self.dart_vertex[h1] == self.dart_vertex[h2]
    }

    pub fn full_subset(&self) -> EdgeSubset {
        EdgeSubset::full(self.edge_count())
    }

    fn check_subset(&self, s: &EdgeSubset) -> Result<(), CmapError> {
        if s.host_edge_count() != self.edge_count() {
            return Err(CmapError::SubsetMismatch {
                subset: s.host_edge_count(),
                graph: self.edge_count(),
            });
        }
        Ok(())
    }

    /// Number of boundary components of the ribbon subgraph with all vertices
    /// and exactly the edges in `s`.
    pub fn boundary_components(&self, s: &EdgeSubset) -> Result<usize, CmapError> {
        self.check_subset(s)?;
        Ok(self.bc_with(|e| s.contains(e)))
    }

    /// Boundary components for the subset given as a bit mask (edge `i` is bit
    /// `i`). Graphs with more than 64 edges must use [`Self::boundary_components`].
    pub fn boundary_components_mask(&self, mask: u64) -> usize {
        debug_assert!(self.edge_count() <= 64);
        self.bc_with(|e| mask >> e & 1 == 1)
    }

    // Orbits of (restricted rotation) . (edge involution) on kept darts, plus
    // one per vertex that keeps no dart.
    fn bc_with(&self, keep: impl Fn(usize) -> bool) -> usize {
        let n = self.dart_count();
        let mut next = vec![usize::MAX; n];
        let mut count = 0;
        for rot in &self.rotations {
            let kept: Vec<Dart> = rot.iter().copied().filter(|d| keep(d / 2)).collect();
            if kept.is_empty() {
                count += 1;
                continue;
            }
            for (i, &d) in kept.iter().enumerate() {
                next[d] = kept[(i + 1) % kept.len()];
            }
        }
        let mut seen = vec![false; n];
        for start in 0..n {
            if next[start] == usize::MAX || seen[start] {
                continue;
            }
            count += 1;
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                d = next[d ^ 1];
            }
        }
        count
    }

    /// Connected components of the spanning subgraph on the edges in `s`.
    pub fn component_count_of(&self, s: &EdgeSubset) -> Result<usize, CmapError> {
        self.check_subset(s)?;
        Ok(self.components_with(|e| s.contains(e)))
    }

    pub fn component_count(&self) -> usize {
        self.components_with(|_| true)
    }

    fn components_with(&self, keep: impl Fn(usize) -> bool) -> usize {
        let mut uf = UnionFind::new(self.vertex_count());
        for e in 0..self.edge_count() {
            if keep(e) {
                let (h1, h2) = Self::edge_darts(e);
                uf.union(self.dart_vertex[h1], self.dart_vertex[h2]);
            }
        }
        uf.count()
    }

    /// Genus of the closed orientable surface the graph is cellularly
    /// embedded in (summed over components).
    pub fn genus(&self) -> usize {
        let bc = self.bc_with(|_| true) as i64;
        let euler = self.edge_count() as i64 - self.vertex_count() as i64 + 2 * self.component_count() as i64;
        let twice = euler - bc;
        debug_assert!(twice >= 0 && twice % 2 == 0);
        (twice / 2) as usize
    }

    /// `G - e`: drops edge `e` and its darts; later edges shift down by one.
    pub fn delete_edge(&self, e: usize) -> Result<Self, CmapError> {
        if e >= self.edge_count() {
            return Err(CmapError::UnknownEdge(e));
        }
        let relabel = |d: Dart| if d / 2 > e { d - 2 } else { d };
        let rotations = self
            .rotations
            .iter()
            .map(|rot| rot.iter().filter(|d| **d / 2 != e).map(|d| relabel(*d)).collect())
            .collect();
        let mut signs = self.signs.clone();
        signs.remove(e);
        Ok(Self::build(rotations, signs))
    }

    /// Partial dual along the single edge `e`; the sign of `e` is kept.
    ///
    /// A loop `(h1 A h2 B)` splits into the vertices `(h1 A)` and `(h2 B)`;
    /// a non-loop with ends `(h1 A)` and `(h2 B)` merges into `(h1 A h2 B)`.
    pub fn partial_dual_edge(&self, e: usize) -> Result<Self, CmapError> {
        if e >= self.edge_count() {
            return Err(CmapError::UnknownEdge(e));
        }
        let (h1, h2) = Self::edge_darts(e);
        let starting_at = |d: Dart| {
            let rot = &self.rotations[self.dart_vertex[d]];
            let i = rot.iter().position(|x| *x == d).expect("dart in its rotation");
            let mut r = rot.clone();
            r.rotate_left(i);
            r
        };
        let u = self.dart_vertex[h1];
        let v = self.dart_vertex[h2];
        let mut rotations: Vec<Vec<Dart>> = Vec::with_capacity(self.vertex_count() + 1);
        for (w, rot) in self.rotations.iter().enumerate() {
            if w != u && w != v {
                rotations.push(rot.clone());
            }
        }
        let at_h1 = starting_at(h1);
        if u == v {
            let split = at_h1.iter().position(|d| *d == h2).expect("loop end");
            rotations.push(at_h1[..split].to_vec());
            rotations.push(at_h1[split..].to_vec());
        } else {
            let mut merged = at_h1;
            merged.extend(starting_at(h2));
            rotations.push(merged);
        }
        Ok(Self::build(rotations, self.signs.clone()))
    }

    /// Partial dual along every edge in `s`, one edge at a time.
    pub fn partial_dual(&self, s: &EdgeSubset) -> Result<Self, CmapError> {
        self.check_subset(s)?;
        s.iter().try_fold(self.clone(), |g, e| g.partial_dual_edge(e))
    }

    pub fn with_sign(&self, e: usize, sign: Sign) -> Result<Self, CmapError> {
        if e >= self.edge_count() {
            return Err(CmapError::UnknownEdge(e));
        }
        let mut g = self.clone();
        g.signs[e] = sign;
        Ok(g)
    }

    pub fn with_all_signs_flipped(&self) -> Self {
        let mut g = self.clone();
        for s in g.signs.iter_mut() {
            *s = s.flipped();
        }
        g
    }

    /// Every rotation reversed.
    pub fn mirror(&self) -> Self {
        let rotations = self.rotations.iter().map(|r| r.iter().rev().copied().collect()).collect();
        SignedCyclicGraph::build(rotations, self.signs.clone())
    }

    /// Sign- and orientation-preserving equivalence by exhaustive relabeling.
    /// Returns `None` when either graph has more than 8 darts.
    pub fn equivalent_small(&self, other: &SignedCyclicGraph) -> Option<bool> {
        if self.dart_count() > 8 || other.dart_count() > 8 {
            return None;
        }
        if self.edge_count() != other.edge_count() || self.vertex_count() != other.vertex_count() {
            return Some(false);
        }
        let m = self.edge_count();
        let target = other.canonical_cycles();
        let mut perm: Vec<usize> = (0..m).collect();
        let found = for_each_permutation(&mut perm, 0, &mut |perm| {
            (0..1u32 << m).any(|flips| {
                // edge e of self maps to edge perm[e] of other, ends swapped when bit e is set
                let map = |d: Dart| {
                    let e = d / 2;
                    2 * perm[e] + ((d & 1) ^ (flips >> e & 1) as usize)
                };
                (0..m).all(|e| self.signs[e] == other.signs[perm[e]])
                    && self.relabeled_cycles(map) == target
            })
        });
        Some(found)
    }

    fn canonical_cycles(&self) -> Vec<Vec<Dart>> {
        self.relabeled_cycles(|d| d)
    }

    fn relabeled_cycles(&self, map: impl Fn(Dart) -> Dart) -> Vec<Vec<Dart>> {
        let mut cycles: Vec<Vec<Dart>> = self
            .rotations
            .iter()
            .map(|rot| {
                let mut r: Vec<Dart> = rot.iter().map(|d| map(*d)).collect();
                if let Some(pos) = r.iter().enumerate().min_by_key(|(_, d)| **d).map(|(i, _)| i) {
                    r.rotate_left(pos);
                }
                r
            })
            .collect();
        cycles.sort();
        cycles
    }
}

fn for_each_permutation(perm: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
    if k == perm.len() {
        return f(perm);
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        if for_each_permutation(perm, k + 1, f) {
            perm.swap(k, i);
            return true;
        }
        perm.swap(k, i);
    }
    false
}

/// Deterministic random graph: each edge picks two uniform vertices and is
/// inserted at uniform positions of their rotations; an edge is positive
/// with probability `sign_bias`.
pub fn random_cyclic_graph(vertex_count: usize, edge_count: usize, sign_bias: f64, seed: u64) -> SignedCyclicGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vertex_count = vertex_count.max(1);
    let mut rotations: Vec<Vec<Dart>> = vec![Vec::new(); vertex_count];
    let mut signs = Vec::with_capacity(edge_count);
    for e in 0..edge_count {
        for d in [2 * e, 2 * e + 1] {
            let v = rng.gen_range(0..vertex_count);
            let pos = rng.gen_range(0..=rotations[v].len());
            rotations[v].insert(pos, d);
        }
        signs.push(if rng.gen_bool(sign_bias.clamp(0.0, 1.0)) {
            Sign::Positive
        } else {
            Sign::Negative
        });
    }
    SignedCyclicGraph::build(rotations, signs)
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
    sets: usize,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            sets: n,
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
            self.sets -= 1;
        }
    }

    pub(crate) fn count(&self) -> usize {
        self.sets
    }
}

impl fmt::Display for SignedCyclicGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::format::write_graph(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use Sign::*;

    fn g(rotations: Vec<Vec<Dart>>, signs: Vec<Sign>) -> SignedCyclicGraph {
        SignedCyclicGraph::new(rotations, signs).unwrap()
    }

    fn interleaved() -> SignedCyclicGraph {
        // a = darts 0,1 ; b = darts 2,3 ; rotation (a1 b1 a2 b2)
        g(vec![vec![0, 2, 1, 3]], vec![Positive, Positive])
    }

    fn nested() -> SignedCyclicGraph {
        g(vec![vec![0, 1, 2, 3]], vec![Positive, Positive])
    }

    #[test]
    fn bc_examples() {
        let single = SignedCyclicGraph::isolated_vertices(1);
        assert_eq!(single.boundary_components(&EdgeSubset::empty(0)).unwrap(), 1);
        let lp = g(vec![vec![0, 1]], vec![Positive]);
        assert_eq!(lp.boundary_components(&lp.full_subset()).unwrap(), 2);
        let i = interleaved();
        assert_eq!(i.boundary_components(&i.full_subset()).unwrap(), 1);
        assert_eq!(nested().boundary_components(&nested().full_subset()).unwrap(), 3);
        assert_eq!(i.boundary_components_mask(0b01), 2);
        assert_eq!(i.boundary_components_mask(0), 1);
    }

    #[test]
    fn bc_rejects_foreign_subset() {
        let i = interleaved();
        assert_eq!(
            i.boundary_components(&EdgeSubset::empty(3)),
            Err(CmapError::SubsetMismatch { subset: 3, graph: 2 })
        );
        assert_eq!(EdgeSubset::from_edges(2, [5]), Err(CmapError::UnknownEdge(5)));
    }

    #[test]
    fn genus_examples() {
        assert_eq!(SignedCyclicGraph::isolated_vertices(1).genus(), 0);
        assert_eq!(interleaved().genus(), 1);
        assert_eq!(nested().genus(), 0);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(SignedCyclicGraph::new(vec![vec![0, 0]], vec![Positive]), Err(CmapError::DuplicateDart(0)));
        assert_eq!(SignedCyclicGraph::new(vec![vec![0]], vec![Positive]), Err(CmapError::MissingDart(1)));
        assert_eq!(SignedCyclicGraph::new(vec![vec![0, 7]], vec![Positive]), Err(CmapError::DartOutOfRange(7)));
        assert_eq!(SignedCyclicGraph::new(vec![], vec![]), Err(CmapError::NoVertices));
    }

    #[test]
    fn delete_edge_examples() {
        let lp = g(vec![vec![0, 1]], vec![Positive]);
        let d = lp.delete_edge(0).unwrap();
        assert_eq!(d.vertex_count(), 1);
        assert_eq!(d.edge_count(), 0);

        let after = interleaved().delete_edge(1).unwrap();
        assert_eq!(after.rotations(), &[vec![0, 1]]);

        let path = g(vec![vec![0], vec![1]], vec![Negative]);
        let d = path.delete_edge(0).unwrap();
        assert_eq!(d.vertex_count(), 2);
        assert_eq!(d.edge_count(), 0);
        assert_eq!(path.delete_edge(3), Err(CmapError::UnknownEdge(3)));
    }

    #[test]
    fn partial_dual_of_planar_loop() {
        let lp = g(vec![vec![0, 1]], vec![Positive]);
        let pd = lp.partial_dual_edge(0).unwrap();
        assert_eq!(pd.vertex_count(), 2);
        assert!(!pd.is_loop(0));
        assert_eq!(pd.sign(0), Positive);
        assert_eq!(pd.partial_dual_edge(0).unwrap(), lp);
        assert_eq!(lp.partial_dual_edge(1), Err(CmapError::UnknownEdge(1)));
    }

    #[test]
    fn partial_dual_of_interleaved_pair() {
        let i = interleaved();
        let pd = i.partial_dual_edge(0).unwrap();
        // (0 2 1 3) splits into (0 2) and (1 3): b becomes a non-loop
        assert_eq!(pd.rotations(), &[vec![0, 2], vec![1, 3]]);
        assert_eq!(pd.genus(), 0);
        assert_eq!(pd.partial_dual_edge(0).unwrap(), i);
    }

    #[test]
    fn full_partial_dual_is_geometric_dual() {
        for seed in 0..50 {
            let g = random_cyclic_graph(3, 5, 0.5, seed);
            let dual = g.partial_dual(&g.full_subset()).unwrap();
            let full = g.full_subset();
            assert_eq!(dual.vertex_count(), g.boundary_components(&full).unwrap());
            assert_eq!(dual.boundary_components(&full).unwrap(), g.vertex_count());
            assert_eq!(dual.genus(), g.genus());
        }
    }

    #[test]
    fn random_graph_examples() {
        let single = random_cyclic_graph(1, 0, 0.5, 99);
        assert_eq!(single.vertex_count(), 1);
        assert_eq!(single.edge_count(), 0);
        assert_eq!(random_cyclic_graph(3, 6, 0.5, 11), random_cyclic_graph(3, 6, 0.5, 11));
        let g = random_cyclic_graph(2, 5, 0.5, 7);
        let rebuilt = SignedCyclicGraph::new(g.rotations().to_vec(), g.signs().to_vec()).unwrap();
        assert_eq!(rebuilt, g);
    }

    #[test]
    fn equivalence_search() {
        let a = g(vec![vec![0, 2, 1, 3]], vec![Positive, Negative]);
        let b = g(vec![vec![0, 3, 1, 2]], vec![Negative, Positive]);
        assert_eq!(a.equivalent_small(&b), Some(true));
        let c = g(vec![vec![0, 1, 2, 3]], vec![Positive, Negative]);
        assert_eq!(a.equivalent_small(&c), Some(false));
        // toroidal and planar theta graphs
        let t1 = g(vec![vec![0, 2, 4], vec![1, 3, 5]], vec![Positive; 3]);
        let t2 = g(vec![vec![0, 2, 4], vec![1, 5, 3]], vec![Positive; 3]);
        assert_eq!((t1.genus(), t2.genus()), (1, 0));
        assert_eq!(t1.equivalent_small(&t2), Some(false));
        let t3 = g(vec![vec![0, 4, 2], vec![1, 3, 5]], vec![Positive; 3]);
        assert_eq!(t2.equivalent_small(&t3), Some(true));
        let big = random_cyclic_graph(2, 5, 0.5, 1);
        assert_eq!(big.equivalent_small(&big), None);
    }

    proptest! {
        #[test]
        fn bc_bounds_and_parity(v in 1usize..4, e in 0usize..7, seed in any::<u64>(), mask in any::<u64>()) {
            let g = random_cyclic_graph(v, e, 0.5, seed);
            let mask = mask & ((1u64 << e) - 1);
            let s = EdgeSubset::from_mask(e, mask);
            let bc = g.boundary_components(&s).unwrap();
            prop_assert!(bc >= 1);
            prop_assert!(bc <= 2 * s.len() + g.vertex_count());
            prop_assert_eq!(bc % 2, (s.len() + g.vertex_count()) % 2);
            prop_assert_eq!(bc, g.boundary_components_mask(mask));
        }

        #[test]
        fn deletion_keeps_other_subsets(v in 1usize..4, e in 1usize..7, seed in any::<u64>(), mask in any::<u64>(), pick in any::<usize>()) {
            let g = random_cyclic_graph(v, e, 0.5, seed);
            let del = pick % e;
            let deleted = g.delete_edge(del).unwrap();
            prop_assert_eq!(deleted.vertex_count(), g.vertex_count());
            let mask = mask & ((1u64 << e) - 1) & !(1u64 << del);
            let low = mask & ((1u64 << del) - 1);
            let high = mask >> (del + 1);
            let shifted = low | (high << del);
            prop_assert_eq!(g.boundary_components_mask(mask), deleted.boundary_components_mask(shifted));
        }

        #[test]
        fn partial_dual_shifts_subsets(v in 1usize..4, e in 1usize..7, seed in any::<u64>(), mask in any::<u64>(), pick in any::<usize>()) {
            let g = random_cyclic_graph(v, e, 0.5, seed);
            let edge = pick % e;
            let pd = g.partial_dual_edge(edge).unwrap();
            let mask = mask & ((1u64 << e) - 1);
            prop_assert_eq!(pd.boundary_components_mask(mask), g.boundary_components_mask(mask ^ (1 << edge)));
            prop_assert_eq!(pd.partial_dual_edge(edge).unwrap(), g);
        }
    }
}
