//! Benchmark inputs shared by the criterion targets.

use cyclink::{fixtures, SignedCyclicGraph, VirtualDiagram};

/// Closure of a 2-strand braid with `n` crossings.
pub fn torus_diagram(n: usize) -> VirtualDiagram {
    let mut d = fixtures::trefoil_right();
    while d.crossing_count() < n {
        let segments = d.segment_count();
        d = d.r2_insert(0, segments / 2).expect("distinct segments");
    }
    d
}

pub fn random_graph(edges: usize, seed: u64) -> SignedCyclicGraph {
    cyclink::cmap::random_cyclic_graph(3, edges, 0.5, seed)
}
