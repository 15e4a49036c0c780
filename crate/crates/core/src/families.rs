//! Instance families for exhaustive and seeded checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cmap::{random_cyclic_graph, Sign, SignedCyclicGraph};
use crate::diagram::VirtualDiagram;

/// Every signed cyclic graph with at most `max_edges` edges and at most
/// `max_vertices` vertices, one representative per relabeling class of the
/// rotation system, with every sign pattern on it.
///
/// A rotation system is a permutation of the darts; two of them are the same
/// graph after renaming edges and swapping edge ends, so only the
/// lexicographically smallest permutation of each class is kept.
pub fn exhaustive_graphs(max_edges: usize, max_vertices: usize) -> Vec<SignedCyclicGraph> {
    let mut out = Vec::new();
    for m in 0..=max_edges {
        let relabelings = edge_relabelings(m);
        let mut perm: Vec<usize> = (0..2 * m).collect();
        let mut rotations_seen = Vec::new();
        loop {
            let cycles = cycles_of(&perm);
            if cycles.len() <= max_vertices && is_class_minimum(&perm, &relabelings) {
                rotations_seen.push(cycles);
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        for cycles in rotations_seen {
            for vertices in cycles.len().max(1)..=max_vertices {
                let mut rotations = cycles.clone();
                rotations.resize(vertices, Vec::new());
                for signs in 0..1u32 << m {
                    let signs = (0..m)
                        .map(|e| if signs >> e & 1 == 1 { Sign::Negative } else { Sign::Positive })
                        .collect();
                    out.push(SignedCyclicGraph::new(rotations.clone(), signs).expect("permutation cycles cover all darts"));
                }
            }
        }
    }
    out
}

fn cycles_of(perm: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; perm.len()];
    let mut cycles = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            cycle.push(d);
            d = perm[d];
        }
        cycles.push(cycle);
    }
    cycles
}

// All dart maps induced by permuting edges and flipping their ends.
fn edge_relabelings(m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut order: Vec<usize> = (0..m).collect();
    loop {
        for flips in 0..1usize << m {
            let map = (0..2 * m)
                .map(|d| 2 * order[d / 2] + ((d & 1) ^ (flips >> (d / 2) & 1)))
                .collect();
            out.push(map);
        }
        if !next_permutation(&mut order) {
            break;
        }
    }
    out
}

fn is_class_minimum(perm: &[usize], relabelings: &[Vec<usize>]) -> bool {
    let n = perm.len();
    let mut conj = vec![0; n];
    for h in relabelings {
        // conj = h . perm . h^-1
        for d in 0..n {
            conj[h[d]] = h[perm[d]];
        }
        if conj.as_slice() < perm {
            return false;
        }
    }
    true
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).expect("successor exists");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Seeded graphs with 1 to `max_vertices` vertices and 0 to `max_edges`
/// edges, signs balanced.
pub fn random_graphs(count: usize, max_vertices: usize, max_edges: usize, seed: u64) -> Vec<SignedCyclicGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let v = rng.gen_range(1..=max_vertices);
            let e = rng.gen_range(0..=max_edges);
            random_cyclic_graph(v, e, 0.5, rng.gen())
        })
        .collect()
}

/// Every diagram with `crossings` crossings and no free loops: all perfect
/// matchings of the ports.
pub fn exhaustive_diagrams(crossings: usize) -> Vec<VirtualDiagram> {
    let n = 4 * crossings;
    let mut out = Vec::new();
    let mut mates = vec![usize::MAX; n];
    fn extend(mates: &mut Vec<usize>, out: &mut Vec<VirtualDiagram>) {
        let Some(p) = mates.iter().position(|m| *m == usize::MAX) else {
            out.push(VirtualDiagram::new(mates.clone(), 0).expect("complete matching"));
            return;
        };
        for q in p + 1..mates.len() {
            if mates[q] == usize::MAX {
                mates[p] = q;
                mates[q] = p;
                extend(mates, out);
                mates[p] = usize::MAX;
                mates[q] = usize::MAX;
            }
        }
    }
    if crossings > 0 {
        extend(&mut mates, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matching_counts() {
        assert_eq!(exhaustive_diagrams(1).len(), 3);
        assert_eq!(exhaustive_diagrams(2).len(), 105);
        assert_eq!(exhaustive_diagrams(3).len(), 10395);
    }

    #[test]
    fn small_graph_classes() {
        // no edges: one graph per vertex count
        assert_eq!(exhaustive_graphs(0, 3).len(), 3);
        // one edge on at most two vertices: the bridge, the loop, the loop
        // beside an isolated vertex, each with two signs
        let one = exhaustive_graphs(1, 2);
        assert_eq!(one.len(), 2 + 3 * 2);
    }

    #[test]
    fn classes_are_distinct_and_complete_for_two_edges() {
        // brute force: all rotation systems of 4 darts, up to equivalence
        let reps = exhaustive_graphs(2, 2);
        let two: Vec<_> = reps.iter().filter(|g| g.edge_count() == 2).collect();
        for (i, a) in two.iter().enumerate() {
            for b in &two[i + 1..] {
                if a.signs() == b.signs() {
                    assert_eq!(a.equivalent_small(b), Some(false));
                }
            }
        }
        let mut perm: Vec<usize> = (0..4).collect();
        loop {
            let cycles = cycles_of(&perm);
            if cycles.len() <= 2 {
                let mut rot = cycles.clone();
                rot.resize(2, Vec::new());
                let g = SignedCyclicGraph::new(rot, vec![Sign::Positive, Sign::Negative]).unwrap();
                assert!(two.iter().any(|r| r.vertex_count() == 2 && r.equivalent_small(&g) == Some(true)));
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
    }
}
