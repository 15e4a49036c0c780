//! Small diagrams and graphs used throughout the tests and shipped as files
//! under `fixtures/`.

use crate::cmap::{Sign, SignedCyclicGraph};
use crate::diagram::VirtualDiagram;

/// Closure of a 2-strand braid with `n` identical crossings. Port 0 is the
/// bottom-right end, then counterclockwise; the strand from bottom-left to
/// top-right passes over, so every crossing is positive with both strands
/// oriented upward.
fn braid_closure(n: usize) -> VirtualDiagram {
    let mut arcs = Vec::new();
    for c in 0..n {
        let next = (c + 1) % n;
        arcs.push((4 * c + 2, 4 * next + 3));
        arcs.push((4 * c + 1, 4 * next));
    }
    VirtualDiagram::from_arcs(n, &arcs, 0).expect("braid closure wiring")
}

/// Right-handed trefoil, writhe +3.
pub fn trefoil_right() -> VirtualDiagram {
    braid_closure(3)
}

/// Left-handed trefoil, writhe -3.
pub fn trefoil() -> VirtualDiagram {
    trefoil_right().mirror()
}

pub fn hopf_link() -> VirtualDiagram {
    braid_closure(2)
}

/// One-crossing unknot with writhe +1.
pub fn kink_positive() -> VirtualDiagram {
    VirtualDiagram::from_arcs(1, &[(0, 1), (2, 3)], 0).expect("kink wiring")
}

/// One-crossing unknot with writhe -1.
pub fn kink_negative() -> VirtualDiagram {
    VirtualDiagram::from_arcs(1, &[(0, 3), (1, 2)], 0).expect("kink wiring")
}

/// Two real crossings met in the order over 1, over 2, under 1, under 2.
pub fn virtual_trefoil() -> VirtualDiagram {
    VirtualDiagram::from_arcs(2, &[(1, 7), (5, 0), (2, 4), (6, 3)], 0).expect("virtual trefoil wiring")
}

/// The left-handed trefoil with crossing 0 virtualized.
pub fn virtualized_trefoil() -> VirtualDiagram {
    trefoil().virtualize(0).expect("crossing 0 exists")
}

pub fn all_diagrams() -> Vec<VirtualDiagram> {
    vec![
        VirtualDiagram::unknot(),
        kink_positive(),
        kink_negative(),
        hopf_link(),
        trefoil(),
        trefoil_right(),
        virtual_trefoil(),
        virtualized_trefoil(),
    ]
}

/// One vertex with a positive planar loop.
pub fn positive_loop() -> SignedCyclicGraph {
    SignedCyclicGraph::new(vec![vec![0, 1]], vec![Sign::Positive]).expect("valid rotation")
}

/// One vertex with two positive loops in interleaved order `(a b a b)`.
pub fn double_loop() -> SignedCyclicGraph {
    SignedCyclicGraph::new(vec![vec![0, 2, 1, 3]], vec![Sign::Positive; 2]).expect("valid rotation")
}

/// Planar triangle with all edges positive.
pub fn triangle() -> SignedCyclicGraph {
    SignedCyclicGraph::new(vec![vec![0, 5], vec![1, 2], vec![3, 4]], vec![Sign::Positive; 3]).expect("valid rotation")
}

pub fn all_graphs() -> Vec<SignedCyclicGraph> {
    vec![positive_loop(), double_loop(), triangle()]
}
