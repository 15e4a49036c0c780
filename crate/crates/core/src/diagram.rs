//! Abstract virtual link diagrams.
//!
//! A diagram is a set of classical crossings plus a perfect matching on their
//! ports; virtual crossings are not represented. Port `4c + k` is position `k`
//! of crossing `c`, listed counterclockwise. Ports 0 and 2 carry the
//! under-strand and ports 1 and 3 the over-strand; the strand passes straight
//! through, so port `p` continues at `p ^ 2`.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::cmap::UnionFind;

pub type Port = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DiagramError {
    #[error("unknown crossing {0}")]
    UnknownCrossing(usize),
    #[error("state has {got} choices but the diagram has {expected} crossings")]
    IncompleteState { expected: usize, got: usize },
    #[error("unknown arc or loop segment {0}")]
    UnknownSegment(usize),
    #[error("cannot clasp an arc with itself")]
    SameArc,
    #[error("port {0} is matched to itself")]
    SelfMatched(Port),
    #[error("port {port} is matched to {mate}, which is matched to {back}")]
    NotAnInvolution { port: Port, mate: Port, back: Port },
    #[error("port list length {0} is not a multiple of 4")]
    RaggedPorts(usize),
    #[error("a diagram needs at least one crossing or free loop")]
    Empty,
    #[error("too many crossings for exhaustive state enumeration ({0} > 64)")]
    TooManyCrossings(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Smoothing {
    /// Joins ports 0-1 and 2-3.
    A,
    /// Joins ports 0-3 and 1-2.
    B,
}

impl Smoothing {
    pub fn other(self) -> Smoothing {
        match self {
            Smoothing::A => Smoothing::B,
            Smoothing::B => Smoothing::A,
        }
    }

    /// The port joined to `p` at its own crossing.
    pub fn partner(self, p: Port) -> Port {
        let base = p & !3;
        let k = p & 3;
        match self {
            Smoothing::A => base + (k ^ 1),
            Smoothing::B => base + (3 - k),
        }
    }
}

/// One smoothing choice per crossing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct State {
    choices: Vec<Smoothing>,
}

impl State {
    pub fn new(choices: Vec<Smoothing>) -> Self {
        State { choices }
    }

    pub fn uniform(n: usize, s: Smoothing) -> Self {
        State { choices: vec![s; n] }
    }

    /// Bit `c` of `mask` set means crossing `c` takes the B-smoothing.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        State {
            choices: (0..n)
                .map(|c| if mask >> c & 1 == 1 { Smoothing::B } else { Smoothing::A })
                .collect(),
        }
    }

    pub fn choices(&self) -> &[Smoothing] {
        &self.choices
    }

    pub fn get(&self, c: usize) -> Smoothing {
        self.choices[c]
    }

    pub fn a_count(&self) -> usize {
        self.choices.iter().filter(|s| **s == Smoothing::A).count()
    }

    pub fn b_count(&self) -> usize {
        self.choices.len() - self.a_count()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VirtualDiagram {
    mates: Vec<Port>,
    free_loops: usize,
}

/// Closed strands: each lists its entering ports in traversal order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Components {
    pub strands: Vec<Vec<Port>>,
    pub free_loops: usize,
}

impl Components {
    pub fn count(&self) -> usize {
        self.strands.len() + self.free_loops
    }
}

/// Faces of the diagram on its Carter surface. Face entries are ports; the
/// entry `p` stands for the corner between ports `p - 1` and `p` (mod 4) at
/// `p`'s crossing. Each face is listed with the face on the right of the walk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceStructure {
    pub faces: Vec<Vec<Port>>,
    pub face_of_port: Vec<usize>,
    pub free_loops: usize,
    genus: usize,
}

impl FaceStructure {
    /// Includes the two discs bounded by each free loop.
    pub fn face_count(&self) -> usize {
        self.faces.len() + 2 * self.free_loops
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    /// Pairs of faces on the two sides of each arc, one entry per arc.
    pub fn adjacencies<'a>(&'a self, d: &'a VirtualDiagram) -> impl Iterator<Item = (usize, usize)> + 'a {
        d.arcs().map(move |(p, q)| (self.face_of_port[p], self.face_of_port[q]))
    }
}

/// A proper two-coloring of the faces in a [`FaceStructure`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    pub black: Vec<bool>,
}

impl Coloring {
    pub fn complement(&self) -> Coloring {
        Coloring {
            black: self.black.iter().map(|b| !b).collect(),
        }
    }

    pub fn is_proper(&self, d: &VirtualDiagram, faces: &FaceStructure) -> bool {
        self.black.len() == faces.faces.len() && faces.adjacencies(d).all(|(f, g)| self.black[f] != self.black[g])
    }
}

/// Traversal direction of every component, recorded as which ports are
/// entered by their strand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    pub reversed: Vec<bool>,
    entering: Vec<bool>,
}

impl Orientation {
    pub fn enters(&self, p: Port) -> bool {
        self.entering[p]
    }
}

impl VirtualDiagram {
    pub fn new(mates: Vec<Port>, free_loops: usize) -> Result<Self, DiagramError> {
        if !mates.len().is_multiple_of(4) {
            return Err(DiagramError::RaggedPorts(mates.len()));
        }
        if mates.is_empty() && free_loops == 0 {
            return Err(DiagramError::Empty);
        }
        for (p, &m) in mates.iter().enumerate() {
            if m == p {
                return Err(DiagramError::SelfMatched(p));
            }
            let back = mates.get(m).copied().unwrap_or(usize::MAX);
            if back != p {
                return Err(DiagramError::NotAnInvolution { port: p, mate: m, back });
            }
        }
        Ok(VirtualDiagram { mates, free_loops })
    }

    /// Builds from arcs given as port pairs.
    pub fn from_arcs(crossings: usize, arcs: &[(Port, Port)], free_loops: usize) -> Result<Self, DiagramError> {
        let mut mates = vec![usize::MAX; 4 * crossings];
        for &(p, q) in arcs {
            if p >= mates.len() || q >= mates.len() {
                return Err(DiagramError::NotAnInvolution { port: p, mate: q, back: usize::MAX });
            }
            mates[p] = q;
            mates[q] = p;
        }
        Self::new(mates, free_loops)
    }

    pub fn unknot() -> Self {
        VirtualDiagram {
            mates: Vec::new(),
            free_loops: 1,
        }
    }

    pub fn crossing_count(&self) -> usize {
        self.mates.len() / 4
    }

    pub fn port_count(&self) -> usize {
        self.mates.len()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn mate(&self, p: Port) -> Port {
        self.mates[p]
    }

    pub fn mates(&self) -> &[Port] {
        &self.mates
    }

    /// Arcs as `(p, q)` with `p < q`, ordered by `p`.
    pub fn arcs(&self) -> impl Iterator<Item = (Port, Port)> + '_ {
        self.mates.iter().enumerate().filter(|(p, q)| p < *q).map(|(p, q)| (p, *q))
    }

    pub fn arc_count(&self) -> usize {
        self.mates.len() / 2
    }

    fn check_crossing(&self, c: usize) -> Result<(), DiagramError> {
        if c >= self.crossing_count() {
            return Err(DiagramError::UnknownCrossing(c));
        }
        Ok(())
    }

    pub fn trace_components(&self) -> Components {
        let n = self.port_count();
        let mut seen = vec![false; n];
        let mut strands = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut strand = Vec::new();
            let mut p = start;
            loop {
                seen[p] = true;
                seen[p ^ 2] = true;
                strand.push(p);
                p = self.mates[p ^ 2];
                if p == start {
                    break;
                }
            }
            strands.push(strand);
        }
        Components {
            strands,
            free_loops: self.free_loops,
        }
    }

    pub fn component_count(&self) -> usize {
        self.trace_components().count()
    }

    pub fn loop_count(&self, state: &State) -> Result<usize, DiagramError> {
        if state.choices.len() != self.crossing_count() {
            return Err(DiagramError::IncompleteState {
                expected: self.crossing_count(),
                got: state.choices.len(),
            });
        }
        Ok(self.count_loops(|c| state.choices[c]))
    }

    /// Loop count for the state whose B-smoothed crossings are the set bits
    /// of `mask`. Requires at most 64 crossings.
    pub fn loop_count_mask(&self, mask: u64) -> usize {
        self.count_loops(|c| if mask >> c & 1 == 1 { Smoothing::B } else { Smoothing::A })
    }

    fn count_loops(&self, choice: impl Fn(usize) -> Smoothing) -> usize {
        let n = self.port_count();
        let mut seen = vec![false; n];
        let mut loops = self.free_loops;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            loops += 1;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                let s = choice(p / 4).partner(p);
                seen[s] = true;
                p = self.mates[s];
            }
        }
        loops
    }

    pub fn faces(&self) -> FaceStructure {
        let n = self.port_count();
        let rot = |p: Port| (p & !3) + ((p + 1) & 3);
        let mut face_of_port = vec![usize::MAX; n];
        let mut faces = Vec::new();
        for start in 0..n {
            if face_of_port[start] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut face = Vec::new();
            let mut p = start;
            while face_of_port[p] == usize::MAX {
                face_of_port[p] = id;
                face.push(p);
                p = rot(self.mates[p]);
            }
            faces.push(face);
        }
        let mut uf = UnionFind::new(self.crossing_count());
        for (p, q) in self.arcs() {
            uf.union(p / 4, q / 4);
        }
        let v = self.crossing_count() as i64;
        let euler = v - 2 * v + faces.len() as i64;
        let twice_genus = 2 * uf.count() as i64 - euler;
        debug_assert!(twice_genus >= 0 && twice_genus % 2 == 0);
        FaceStructure {
            faces,
            face_of_port,
            free_loops: self.free_loops,
            genus: (twice_genus / 2) as usize,
        }
    }

    /// A proper two-coloring of the Carter-surface faces, if one exists. In
    /// each connected piece the face holding the corner at the lowest port is
    /// black.
    pub fn checkerboard_coloring(&self) -> Option<(FaceStructure, Coloring)> {
        let faces = self.faces();
        let nf = faces.faces.len();
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); nf];
        for (f, g) in faces.adjacencies(self) {
            if f == g {
                return None;
            }
            adj[f].push(g);
            adj[g].push(f);
        }
        let mut color: Vec<Option<bool>> = vec![None; nf];
        for p in 0..self.port_count() {
            let seed = faces.face_of_port[p];
            if color[seed].is_some() {
                continue;
            }
            color[seed] = Some(true);
            let mut queue = VecDeque::from([seed]);
            while let Some(f) = queue.pop_front() {
                let c = color[f].expect("queued faces are colored");
                for &g in &adj[f] {
                    match color[g] {
                        None => {
                            color[g] = Some(!c);
                            queue.push_back(g);
                        }
                        Some(x) if x == c => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let black = color.into_iter().map(|c| c.expect("every face reached")).collect();
        Some((faces, Coloring { black }))
    }

    pub fn checkerboard_colorable(&self) -> bool {
        self.checkerboard_coloring().is_some()
    }

    /// Every component enters the crossing at its lowest-numbered port.
    pub fn orient(&self) -> Orientation {
        let comps = self.trace_components();
        self.orient_with(&vec![false; comps.strands.len()])
    }

    /// Like [`Self::orient`], reversing the components flagged in `reversed`
    /// (indexed like [`Components::strands`]).
    pub fn orient_with(&self, reversed: &[bool]) -> Orientation {
        let comps = self.trace_components();
        let mut entering = vec![false; self.port_count()];
        for (i, strand) in comps.strands.iter().enumerate() {
            let flip = reversed.get(i).copied().unwrap_or(false);
            for &p in strand {
                entering[if flip { p ^ 2 } else { p }] = true;
            }
        }
        Orientation {
            reversed: (0..comps.strands.len()).map(|i| reversed.get(i).copied().unwrap_or(false)).collect(),
            entering,
        }
    }

    /// Oriented sign of one crossing.
    pub fn crossing_sign(&self, c: usize, o: &Orientation) -> i64 {
        let base = 4 * c;
        let under = if o.enters(base) { 0 } else { 2 };
        let over = if o.enters(base + 1) { 1 } else { 3 };
        if over == (under + 3) % 4 {
            1
        } else {
            -1
        }
    }

    pub fn writhe(&self, o: &Orientation) -> i64 {
        (0..self.crossing_count()).map(|c| self.crossing_sign(c, o)).sum()
    }

    // new_mates[f(p)] = f(mates[p])
    fn relabeled(&self, f: impl Fn(Port) -> Port) -> VirtualDiagram {
        let mut mates = vec![0; self.port_count()];
        for (p, &q) in self.mates.iter().enumerate() {
            mates[f(p)] = f(q);
        }
        VirtualDiagram {
            mates,
            free_loops: self.free_loops,
        }
    }

    /// Exchanges over and under at crossing `c`; the old port `k + 1` becomes
    /// port `k`.
    pub fn switch_crossing(&self, c: usize) -> Result<VirtualDiagram, DiagramError> {
        self.check_crossing(c)?;
        Ok(self.relabeled(|p| if p / 4 == c { 4 * c + (p + 3) % 4 } else { p }))
    }

    pub fn mirror(&self) -> VirtualDiagram {
        self.relabeled(|p| (p & !3) + (p + 3) % 4)
    }

    /// Swaps the arcs attached at ports 0 and 1 of `c`, and those at ports 2
    /// and 3. This is the flanking by two virtual crossings on its own, with
    /// the crossing record left as it was.
    pub fn flank(&self, c: usize) -> Result<VirtualDiagram, DiagramError> {
        self.check_crossing(c)?;
        Ok(self.relabeled(|p| if p / 4 == c { p ^ 1 } else { p }))
    }

    /// Replaces crossing `c` by a crossing flanked by two virtual crossings,
    /// keeping the over/under appearance of the external strands: the flank
    /// followed by a switch of the inner crossing.
    pub fn virtualize(&self, c: usize) -> Result<VirtualDiagram, DiagramError> {
        self.flank(c)?.switch_crossing(c)
    }

    /// Number of clasp targets: arcs in [`Self::arcs`] order, then free loops.
    pub fn segment_count(&self) -> usize {
        self.arc_count() + self.free_loops
    }

    /// Inserts a Reidemeister II clasp between two segments (see
    /// [`Self::segment_count`]); the strand of `x` passes over the strand of `y`
    /// at both new crossings. A free loop may be clasped with itself.
    ///
    /// Taking A at the first new crossing and B at the second reproduces the
    /// original connections with no extra loop.
    pub fn r2_insert(&self, x: usize, y: usize) -> Result<VirtualDiagram, DiagramError> {
        let segs = self.segment_count();
        for s in [x, y] {
            if s >= segs {
                return Err(DiagramError::UnknownSegment(s));
            }
        }
        let arcs: Vec<(Port, Port)> = self.arcs().collect();
        if x == y && x < arcs.len() {
            return Err(DiagramError::SameArc);
        }
        let n = self.port_count();
        let (p, q) = (n, n + 4); // first and second new crossing
        let mut mates = self.mates.clone();
        mates.extend(std::iter::repeat_n(usize::MAX, 8));
        let mut link = |a: Port, b: Port| {
            mates[a] = b;
            mates[b] = a;
        };
        // internal bigon
        link(p + 1, q + 1);
        link(p + 2, q);
        let mut free_loops = self.free_loops;
        let x_ends = (p + 3, q + 3);
        let y_ends = (p, q + 2);
        if x == y {
            // one free loop running through the clasp twice
            link(x_ends.1, y_ends.0);
            link(y_ends.1, x_ends.0);
            free_loops -= 1;
        } else {
            for (seg, (start, end)) in [(x, x_ends), (y, y_ends)] {
                if seg < arcs.len() {
                    let (a, b) = arcs[seg];
                    link(a, start);
                    link(b, end);
                } else {
                    link(end, start);
                    free_loops -= 1;
                }
            }
        }
        VirtualDiagram::new(mates, free_loops)
    }

    pub fn with_free_loops(&self, free_loops: usize) -> Result<VirtualDiagram, DiagramError> {
        VirtualDiagram::new(self.mates.clone(), free_loops)
    }
}

impl fmt::Display for VirtualDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::format::write_diagram(self))
    }
}
