//! Signed cyclic graphs, virtual link diagrams, and the polynomial that ties
//! them together: the deletion-marking polynomial of a graph equals the
//! bracket of its medial diagram, and every checkerboard-colorable diagram
//! is the medial diagram of its Tait graph.

pub mod cmap;
pub mod diagram;
pub mod families;
pub mod fixtures;
pub mod format;
pub mod invariants;
pub mod medial;
pub mod polynomial;
pub mod suite;

pub use cmap::{CmapError, Dart, EdgeSubset, Sign, SignedCyclicGraph};
pub use diagram::{Coloring, DiagramError, FaceStructure, Port, Smoothing, State, VirtualDiagram};
pub use format::ParseError;
pub use invariants::{bracket, f_expansion, f_recursive, jones, InvariantReport};
pub use medial::{medial, tait_graph, MedialError, MedialMap};
pub use polynomial::{normalize_writhe, BracketPoly, Monomial, QuarterLaurent};
