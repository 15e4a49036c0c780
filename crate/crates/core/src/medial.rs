//! The medial construction and Tait-graph extraction.
//!
//! Around the crossing of edge `e` with ends `h = 2e` (at vertex `u`) and
//! `h' = 2e + 1` (at `v`), the four medial positions in counterclockwise
//! order are: 0 = the corner before `h'` at `v`, 1 = the corner after `h` at
//! `u`, 2 = the corner before `h` at `u`, 3 = the corner after `h'` at `v`.
//! A positive edge uses position `k` as port `k`; a negative edge shifts by
//! one, so its port `k` is position `k + 1`. With that choice the
//! B-smoothing of a positive edge and the A-smoothing of a negative edge run
//! parallel to the vertices.

use thiserror::Error;

use crate::cmap::{Dart, EdgeSubset, Sign, SignedCyclicGraph};
use crate::diagram::{Coloring, FaceStructure, Port, Smoothing, State, VirtualDiagram};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MedialError {
    #[error("coloring is not a proper checkerboard coloring of the diagram")]
    InvalidColoring,
    #[error("diagram is not checkerboard colorable")]
    NotColorable,
}

/// Edge `e` of the graph is crossing `e` of its medial diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MedialMap {
    signs: Vec<Sign>,
}

impl MedialMap {
    pub fn crossing_of(&self, e: usize) -> usize {
        e
    }

    pub fn edge_of(&self, c: usize) -> usize {
        c
    }

    pub fn edge_count(&self) -> usize {
        self.signs.len()
    }

    /// Smoothing at edge `e` whose curves follow the vertex boundaries.
    pub fn vertex_parallel(&self, e: usize) -> Smoothing {
        match self.signs[e] {
            Sign::Positive => Smoothing::B,
            Sign::Negative => Smoothing::A,
        }
    }

    /// Smoothing at edge `e` whose curves run along both sides of the edge.
    pub fn edge_parallel(&self, e: usize) -> Smoothing {
        self.vertex_parallel(e).other()
    }

    pub fn vertex_parallel_state(&self) -> State {
        State::new((0..self.signs.len()).map(|e| self.vertex_parallel(e)).collect())
    }

    pub fn edge_parallel_state(&self) -> State {
        State::new((0..self.signs.len()).map(|e| self.edge_parallel(e)).collect())
    }

    /// Edge-parallel on the edges of `s`, vertex-parallel elsewhere; its loops
    /// are the boundary components of the ribbon subgraph `s`.
    pub fn state_for_subset(&self, s: &EdgeSubset) -> State {
        State::new(
            (0..self.signs.len())
                .map(|e| if s.contains(e) { self.edge_parallel(e) } else { self.vertex_parallel(e) })
                .collect(),
        )
    }

    fn port(&self, e: usize, position: usize) -> Port {
        let offset = match self.signs[e] {
            Sign::Positive => 0,
            Sign::Negative => 3,
        };
        4 * e + (position + offset) % 4
    }

    /// Port whose corner (the one ending at it) sits inside the vertex disc
    /// at dart `d`.
    pub fn vertex_corner(&self, d: Dart) -> Port {
        self.port(d / 2, before(d))
    }

    /// The coloring that blackens the faces around the graph's vertices.
    pub fn vertex_coloring(&self, faces: &FaceStructure) -> Coloring {
        let mut black = vec![false; faces.faces.len()];
        for d in 0..2 * self.signs.len() {
            black[faces.face_of_port[self.vertex_corner(d)]] = true;
        }
        Coloring { black }
    }
}

fn after(d: Dart) -> usize {
    1 + 2 * (d & 1)
}

fn before(d: Dart) -> usize {
    (2 + 2 * (d & 1)) % 4
}

/// One crossing per edge; each corner `(d, next(d))` of a vertex becomes an
/// arc. Isolated vertices become free loops.
pub fn medial(g: &SignedCyclicGraph) -> (VirtualDiagram, MedialMap) {
    let map = MedialMap {
        signs: g.signs().to_vec(),
    };
    let mut mates = vec![0; 4 * g.edge_count()];
    let mut free_loops = 0;
    for rot in g.rotations() {
        if rot.is_empty() {
            free_loops += 1;
            continue;
        }
        for (i, &d) in rot.iter().enumerate() {
            let next = rot[(i + 1) % rot.len()];
            let p = map.port(d / 2, after(d));
            let q = map.port(next / 2, before(next));
            mates[p] = q;
            mates[q] = p;
        }
    }
    let d = VirtualDiagram::new(mates, free_loops).expect("medial wiring is a perfect matching");
    (d, map)
}

/// Signed Tait graph of the black faces: one vertex per black face (rotation
/// counterclockwise around the face), one edge per crossing joining its two
/// black corners, and one isolated vertex per free loop. The edge is positive
/// when the black corners are the ones ending at ports 0 and 2.
pub fn tait_graph(
    d: &VirtualDiagram,
    faces: &FaceStructure,
    coloring: &Coloring,
) -> Result<SignedCyclicGraph, MedialError> {
    if !coloring.is_proper(d, faces) {
        return Err(MedialError::InvalidColoring);
    }
    let n = d.crossing_count();
    let mut signs = Vec::with_capacity(n);
    for c in 0..n {
        let black0 = coloring.black[faces.face_of_port[4 * c]];
        signs.push(if black0 { Sign::Positive } else { Sign::Negative });
    }
    let dart_of = |p: Port| 2 * (p / 4) + usize::from(p % 4 >= 2);
    let mut rotations: Vec<Vec<Dart>> = faces
        .faces
        .iter()
        .zip(&coloring.black)
        .filter(|(_, b)| **b)
        .map(|(face, _)| face.iter().rev().map(|p| dart_of(*p)).collect())
        .collect();
    rotations.extend(std::iter::repeat_n(Vec::new(), d.free_loops()));
    SignedCyclicGraph::new(rotations, signs).map_err(|_| MedialError::InvalidColoring)
}

/// Tait graph for the canonical checkerboard coloring, if the diagram has one.
pub fn graphical_certificate(d: &VirtualDiagram) -> Option<SignedCyclicGraph> {
    let (faces, coloring) = d.checkerboard_coloring()?;
    Some(tait_graph(d, &faces, &coloring).expect("canonical coloring is proper"))
}

/// Both Tait graphs: canonical coloring first, its complement second.
pub fn tait_pair(d: &VirtualDiagram) -> Result<(SignedCyclicGraph, SignedCyclicGraph), MedialError> {
    let (faces, coloring) = d.checkerboard_coloring().ok_or(MedialError::NotColorable)?;
    let g = tait_graph(d, &faces, &coloring)?;
    let dual = tait_graph(d, &faces, &coloring.complement())?;
    Ok((g, dual))
}
