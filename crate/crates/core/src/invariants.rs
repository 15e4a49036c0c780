//! State sums: the bracket of a diagram, the deletion-marking polynomial of a
//! signed cyclic graph (recursively and as a spanning-subgraph sum), and the
//! Jones polynomial assembled from either.

use std::collections::HashMap;
use std::time::Instant;

use rayon::prelude::*;
use serde_json::json;

use crate::cmap::{EdgeSubset, Sign, SignedCyclicGraph};
use crate::diagram::{Orientation, State, VirtualDiagram};
use crate::medial::{self, MedialError};
use crate::polynomial::{normalize_writhe, BracketPoly, Monomial, QuarterLaurent};

/// Diagrams with at least this many crossings split the state sum across
/// the rayon pool.
const PARALLEL_THRESHOLD: usize = 14;

/// Largest crossing or edge count accepted by the exhaustive sums.
pub const MAX_ENUMERATION: usize = 40;

// counts[a][k] = number of states with a A-smoothings and k + 1 loops
fn tally(n: usize, max_loops: usize, range: std::ops::Range<u64>, loops: impl Fn(u64) -> usize) -> Vec<u64> {
    let width = max_loops + 1;
    let mut counts = vec![0u64; (n + 1) * width];
    for mask in range {
        let b = mask.count_ones() as usize;
        let l = loops(mask);
        counts[(n - b) * width + (l - 1)] += 1;
    }
    counts
}

fn counts_to_poly(n: usize, width: usize, counts: &[u64]) -> BracketPoly {
    BracketPoly::from_counts(counts.iter().enumerate().filter(|(_, c)| **c > 0).map(|(i, c)| {
        let a = (i / width) as u32;
        let k = (i % width) as u32;
        (Monomial::new(a, n as u32 - a, k), *c)
    }))
}

/// Sum over all `2^n` states of `A^α B^β d^(loops - 1)`.
pub fn bracket(d: &VirtualDiagram) -> BracketPoly {
    let n = d.crossing_count();
    assert!(n <= MAX_ENUMERATION, "{n} crossings exceeds the enumeration limit");
    let width = n + d.component_count() + 1;
    let total = 1u64 << n;
    let counts = if n < PARALLEL_THRESHOLD {
        tally(n, width - 1, 0..total, |m| d.loop_count_mask(m))
    } else {
        let chunk = 1u64 << 10;
        (0..total / chunk)
            .into_par_iter()
            .map(|i| tally(n, width - 1, i * chunk..(i + 1) * chunk, |m| d.loop_count_mask(m)))
            .reduce(
                || vec![0u64; (n + 1) * width],
                |mut acc, part| {
                    acc.iter_mut().zip(part).for_each(|(x, y)| *x += y);
                    acc
                },
            )
    };
    counts_to_poly(n, width, &counts)
}

/// Plain loop over states through the public [`VirtualDiagram::loop_count`].
pub fn bracket_by_states(d: &VirtualDiagram) -> BracketPoly {
    let n = d.crossing_count();
    let mut p = BracketPoly::zero();
    for mask in 0..1u64 << n {
        let s = State::from_mask(n, mask);
        let loops = d.loop_count(&s).expect("state covers every crossing");
        p.add_term(
            Monomial::new(s.a_count() as u32, s.b_count() as u32, loops as u32 - 1),
            1.into(),
        );
    }
    p
}

pub fn jones(d: &VirtualDiagram) -> QuarterLaurent {
    jones_with(d, &d.orient())
}

pub fn jones_with(d: &VirtualDiagram, o: &Orientation) -> QuarterLaurent {
    normalize_writhe(&bracket(d), d.writhe(o))
}

fn edge_weight(sign: Sign, kept: bool) -> Monomial {
    // a kept positive or deleted negative edge contributes A
    if sign.is_positive() == kept {
        Monomial::new(1, 0, 0)
    } else {
        Monomial::new(0, 1, 0)
    }
}

/// Spanning-subgraph expansion: the sum over edge subsets `S` of
/// `A^(e+(S) + e-(G-S)) B^(e-(S) + e+(G-S)) d^(bc(S) - 1)`.
pub fn f_expansion(g: &SignedCyclicGraph) -> BracketPoly {
    let m = g.edge_count();
    assert!(m <= MAX_ENUMERATION, "{m} edges exceeds the enumeration limit");
    let pos_mask: u64 = (0..m).filter(|e| g.sign(*e).is_positive()).fold(0, |acc, e| acc | 1 << e);
    let width = 2 * m + g.vertex_count() + 1;
    let mut counts = vec![0u64; (m + 1) * width];
    for mask in 0..1u64 << m {
        // A-count: kept positives plus deleted negatives
        let a = (mask & pos_mask).count_ones() + (!mask & !pos_mask & low_bits(m)).count_ones();
        let bc = g.boundary_components_mask(mask);
        counts[a as usize * width + bc - 1] += 1;
    }
    counts_to_poly(m, width, &counts)
}

fn low_bits(m: usize) -> u64 {
    if m == 64 {
        u64::MAX
    } else {
        (1u64 << m) - 1
    }
}

/// The deletion-marking recursion, processing edges in ascending id order.
pub fn f_recursive(g: &SignedCyclicGraph) -> BracketPoly {
    let order: Vec<usize> = (0..g.edge_count()).collect();
    f_recursive_with_order(g, &order)
}

/// The deletion-marking recursion over `order` (a permutation of the edge
/// ids). At each edge the polynomial splits into the deleted branch and the
/// marked branch; once every edge is decided the marked spanning subgraph
/// contributes `d^(bc - 1)`.
pub fn f_recursive_with_order(g: &SignedCyclicGraph, order: &[usize]) -> BracketPoly {
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    assert!(sorted.iter().copied().eq(0..g.edge_count()), "order must be a permutation of the edge ids");
    let mut cache = HashMap::new();
    recurse(g, order, EdgeSubset::empty(g.edge_count()), &mut cache)
}

fn recurse(
    g: &SignedCyclicGraph,
    remaining: &[usize],
    marked: EdgeSubset,
    cache: &mut HashMap<EdgeSubset, usize>,
) -> BracketPoly {
    let Some((&e, rest)) = remaining.split_first() else {
        let bc = *cache
            .entry(marked.clone())
            .or_insert_with(|| g.boundary_components(&marked).expect("subset sized for g"));
        return BracketPoly::monomial(Monomial::new(0, 0, bc as u32 - 1), 1);
    };
    // deleting e leaves the boundary count of every subset avoiding e unchanged
    let deleted = recurse(g, rest, marked.clone(), cache);
    let mut with_e = marked;
    with_e.insert(e);
    let kept = recurse(g, rest, with_e, cache);
    let sign = g.sign(e);
    &deleted.shift(edge_weight(sign, false)) + &kept.shift(edge_weight(sign, true))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub bracket: BracketPoly,
    pub jones: QuarterLaurent,
    pub writhe: i64,
    pub state_count: u64,
    pub ms: u128,
}

impl InvariantReport {
    /// With `timed` false the `ms` field is 0, keeping output reproducible.
    pub fn compute(d: &VirtualDiagram, timed: bool) -> Self {
        let start = Instant::now();
        let bracket = bracket(d);
        let writhe = d.writhe(&d.orient());
        let jones = normalize_writhe(&bracket, writhe);
        InvariantReport {
            bracket,
            jones,
            writhe,
            state_count: 1u64 << d.crossing_count(),
            ms: if timed { start.elapsed().as_millis() } else { 0 },
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "bracket": self.bracket.to_json(),
            "jones": self.jones.to_json(),
            "writhe": self.writhe,
            "states": self.state_count,
            "ms": self.ms as u64,
        })
    }
}

/// First edge subset whose boundary count disagrees with the loop count of
/// its matching medial state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetMismatch {
    pub subset: u64,
    pub boundary_components: usize,
    pub loops: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MedialBracketReport {
    pub expansion: BracketPoly,
    pub recursive: BracketPoly,
    pub bracket: BracketPoly,
    pub mismatch: Option<SubsetMismatch>,
}

impl MedialBracketReport {
    pub fn is_equal(&self) -> bool {
        self.expansion == self.recursive && self.expansion == self.bracket
    }
}

/// Compares the expansion, the recursion and the bracket of the medial
/// diagram term for term.
pub fn verify_medial_bracket(g: &SignedCyclicGraph) -> MedialBracketReport {
    let expansion = f_expansion(g);
    let recursive = f_recursive(g);
    let (d, map) = medial::medial(g);
    let bracket = bracket(&d);
    let mismatch = if expansion == bracket {
        None
    } else {
        (0..1u64 << g.edge_count()).find_map(|mask| {
            let s = EdgeSubset::from_mask(g.edge_count(), mask);
            let bc = g.boundary_components_mask(mask);
            let loops = d.loop_count(&map.state_for_subset(&s)).expect("full state");
            (bc != loops).then_some(SubsetMismatch {
                subset: mask,
                boundary_components: bc,
                loops,
            })
        })
    };
    MedialBracketReport {
        expansion,
        recursive,
        bracket,
        mismatch,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaitBracketReport {
    pub bracket: BracketPoly,
    pub canonical: BracketPoly,
    pub complement: BracketPoly,
}

impl TaitBracketReport {
    pub fn is_equal(&self) -> bool {
        self.bracket == self.canonical && self.bracket == self.complement
    }
}

/// Bracket of `d` against the expansion of both of its Tait graphs.
pub fn verify_tait_bracket(d: &VirtualDiagram) -> Result<TaitBracketReport, MedialError> {
    let (g, dual) = medial::tait_pair(d)?;
    Ok(TaitBracketReport {
        bracket: bracket(d),
        canonical: f_expansion(&g),
        complement: f_expansion(&dual),
    })
}

/// Jones polynomial from the Tait graph of the canonical coloring.
pub fn jones_via_f(d: &VirtualDiagram) -> Result<QuarterLaurent, MedialError> {
    let g = medial::graphical_certificate(d).ok_or(MedialError::NotColorable)?;
    Ok(normalize_writhe(&f_expansion(&g), d.writhe(&d.orient())))
}

/// Jones polynomial of the medial diagram of `g`, computed from `g` alone
/// except for the writhe.
pub fn jones_via_f_graph(g: &SignedCyclicGraph) -> QuarterLaurent {
    let (d, _) = medial::medial(g);
    normalize_writhe(&f_expansion(g), d.writhe(&d.orient()))
}
