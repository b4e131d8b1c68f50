//! The cell decomposition obtained from the monodromy triangulation by
//! splitting every R-tetrahedron into a tetrahedron and a slab.
//!
//! A slab has vertices 1, 2, 4, an inner triangle shared with its own
//! tetrahedron, an outer triangle, and two bigons. Its five edges are
//! directed: 14 and 24 lie on the inner triangle, 41 and 42 on the outer one,
//! and 12 on both.

use std::collections::HashMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::flipword::{FlipWord, Letter};
use crate::montri::{layering_maps, MonodromyTriangulation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum CellKind {
    TetR,
    TetL,
    Slab,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub kind: CellKind,
    pub index: usize,
}

impl Cell {
    pub fn slab(index: usize) -> Self {
        Cell { kind: CellKind::Slab, index }
    }

    pub fn tet(letter: Letter, index: usize) -> Self {
        let kind = match letter {
            Letter::R => CellKind::TetR,
            Letter::L => CellKind::TetL,
        };
        Cell { kind, index }
    }

    pub fn is_slab(&self) -> bool {
        self.kind == CellKind::Slab
    }

    pub fn vertices(&self) -> &'static [u8] {
        if self.is_slab() {
            &[1, 2, 4]
        } else {
            &[1, 2, 3, 4]
        }
    }

    /// Edges of the cell: six for a tetrahedron, five for a slab.
    pub fn edges(&self) -> Vec<CellEdge> {
        let pairs: &[(u8, u8)] = if self.is_slab() {
            &[(1, 2), (1, 4), (2, 4), (4, 1), (4, 2)]
        } else {
            &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
        };
        pairs.iter().map(|&(u, v)| CellEdge(u, v)).collect()
    }

    pub fn faces(&self) -> Vec<FaceLabel> {
        if self.is_slab() {
            vec![FaceLabel::Inner, FaceLabel::Outer, FaceLabel::Bigon14, FaceLabel::Bigon24]
        } else {
            vec![
                FaceLabel::Tri([1, 2, 3]),
                FaceLabel::Tri([1, 2, 4]),
                FaceLabel::Tri([1, 3, 4]),
                FaceLabel::Tri([2, 3, 4]),
            ]
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.kind {
            CellKind::TetR => 'R',
            CellKind::TetL => 'L',
            CellKind::Slab => 'S',
        };
        write!(f, "{c}{}", self.index)
    }
}

impl Serialize for Cell {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// An edge of a cell. Tetrahedron edges are stored with `u < v`; slab edges
/// keep their direction (`14` and `41` are different edges).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CellEdge(pub u8, pub u8);

impl CellEdge {
    pub fn tet(u: u8, v: u8) -> Self {
        CellEdge(u.min(v), u.max(v))
    }

    fn vertex_set(self) -> (u8, u8) {
        (self.0.min(self.1), self.0.max(self.1))
    }
}

impl fmt::Display for CellEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.0, self.1)
    }
}

/// A 2-cell on the boundary of a 3-cell. Triangles of tetrahedra are keyed
/// by their sorted vertex triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FaceLabel {
    Tri([u8; 3]),
    Inner,
    Outer,
    Bigon14,
    Bigon24,
}

impl FaceLabel {
    pub fn tri(mut v: [u8; 3]) -> Self {
        v.sort_unstable();
        FaceLabel::Tri(v)
    }

    pub fn is_bigon(&self) -> bool {
        matches!(self, FaceLabel::Bigon14 | FaceLabel::Bigon24)
    }

    pub fn edges(&self) -> Vec<CellEdge> {
        match *self {
            FaceLabel::Tri([a, b, c]) => vec![CellEdge::tet(a, b), CellEdge::tet(a, c), CellEdge::tet(b, c)],
            FaceLabel::Inner => vec![CellEdge(1, 2), CellEdge(1, 4), CellEdge(2, 4)],
            FaceLabel::Outer => vec![CellEdge(1, 2), CellEdge(4, 1), CellEdge(4, 2)],
            FaceLabel::Bigon14 => vec![CellEdge(1, 4), CellEdge(4, 1)],
            FaceLabel::Bigon24 => vec![CellEdge(2, 4), CellEdge(4, 2)],
        }
    }

    /// The edge of this face spanned by the vertices `u`, `v`.
    fn edge_on(&self, u: u8, v: u8) -> CellEdge {
        let (u, v) = (u.min(v), u.max(v));
        match self {
            FaceLabel::Outer if v == 4 => CellEdge(4, u),
            _ => CellEdge(u, v),
        }
    }
}

impl fmt::Display for FaceLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FaceLabel::Tri([a, b, c]) => write!(f, "({a}{b}{c})"),
            FaceLabel::Inner => write!(f, "inner(124)"),
            FaceLabel::Outer => write!(f, "outer(124)"),
            FaceLabel::Bigon14 => write!(f, "bigon(14)"),
            FaceLabel::Bigon24 => write!(f, "bigon(24)"),
        }
    }
}

/// The matrix attached to a face pairing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatrixLabel {
    G1,
    G2,
    G3,
    G4,
    I,
    Bigon(usize),
}

impl fmt::Display for MatrixLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixLabel::Bigon(n) => write!(f, "Bigon({n})"),
            other => write!(f, "{other:?}"),
        }
    }
}

impl Serialize for MatrixLabel {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// One side of a face pairing. For triangles, `vertices` is the ordered
/// triple whose i-th entry is matched with the i-th entry on the other side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FaceSide {
    pub cell: Cell,
    pub face: FaceLabel,
    pub vertices: Option<[u8; 3]>,
}

impl FaceSide {
    fn tri(cell: Cell, v: [u8; 3]) -> Self {
        FaceSide {
            cell,
            face: FaceLabel::tri(v),
            vertices: Some(v),
        }
    }

    fn slab_tri(cell: Cell, face: FaceLabel) -> Self {
        FaceSide {
            cell,
            face,
            vertices: Some([1, 2, 4]),
        }
    }

    fn bigon(cell: Cell, face: FaceLabel) -> Self {
        FaceSide {
            cell,
            face,
            vertices: None,
        }
    }
}

impl fmt::Display for FaceSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.face, self.vertices) {
            (FaceLabel::Tri(_), Some([a, b, c])) => write!(f, "{}({a}{b}{c})", self.cell),
            (face, _) => write!(f, "{}{}", self.cell, face),
        }
    }
}

impl Serialize for FaceSide {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FacePairing {
    pub source: FaceSide,
    pub target: FaceSide,
    pub label: MatrixLabel,
}

impl FacePairing {
    /// Carries an edge of the source face onto the target face, or the
    /// reverse when `forward` is false.
    pub fn transfer(&self, edge: CellEdge, forward: bool) -> CellEdge {
        let (from, to) = if forward {
            (&self.source, &self.target)
        } else {
            (&self.target, &self.source)
        };
        match (from.vertices, to.vertices) {
            (Some(fv), Some(tv)) => {
                let (u, v) = edge.vertex_set();
                let img = |x: u8| tv[fv.iter().position(|&y| y == x).expect("vertex on face")];
                to.face.edge_on(img(u), img(v))
            }
            _ => {
                // Bigons: 14 ↔ 24 and 41 ↔ 42.
                let swap = |x: u8| match x {
                    1 => 2,
                    2 => 1,
                    y => y,
                };
                CellEdge(swap(edge.0), swap(edge.1))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum ClassKind {
    /// Represented by the 14 edge of an L-tetrahedron.
    L14,
    /// Represented by the 14 edge of an R-tetrahedron.
    R14,
    /// Represented by the 41 edge of a slab.
    Slab41,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeClassD {
    pub kind: ClassKind,
    pub index: usize,
    pub n: usize,
    pub rep: (Cell, CellEdge),
    pub members: Vec<(Cell, CellEdge)>,
}

impl EdgeClassD {
    pub fn valence(&self) -> usize {
        self.members.len()
    }

    pub fn rep_string(&self) -> String {
        format!("{}({})", self.rep.0, self.rep.1)
    }

    /// Where the holonomy walk starts and which face it leaves through.
    pub fn walk_start(&self) -> ((Cell, CellEdge), FaceLabel) {
        let first = match self.kind {
            ClassKind::L14 => FaceLabel::Tri([1, 2, 4]),
            ClassKind::R14 => FaceLabel::Inner,
            ClassKind::Slab41 => FaceLabel::Outer,
        };
        (self.members[0], first)
    }
}

#[derive(Debug, Clone)]
pub struct CellDecomposition {
    word: FlipWord,
    gaps: Vec<usize>,
    cells: Vec<Cell>,
    pairings: Vec<FacePairing>,
    classes: Vec<EdgeClassD>,
    by_face: HashMap<(Cell, FaceLabel), (usize, bool)>,
}

impl CellDecomposition {
    pub fn word(&self) -> &FlipWord {
        &self.word
    }

    pub fn m(&self) -> usize {
        self.word.len()
    }

    pub fn r(&self) -> usize {
        self.word.count(Letter::R)
    }

    /// Gap value of each position of the word (see [`FlipWord::gaps`]).
    pub fn gaps(&self) -> &[usize] {
        &self.gaps
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn pairings(&self) -> &[FacePairing] {
        &self.pairings
    }

    pub fn classes(&self) -> &[EdgeClassD] {
        &self.classes
    }

    /// The tetrahedron cell at a cyclic index.
    pub fn tet(&self, j: usize) -> Cell {
        Cell::tet(self.word.at(j), j % self.m())
    }

    /// The pairing through `(cell, face)` and whether the cell is its source.
    pub fn pairing_at(&self, cell: Cell, face: FaceLabel) -> Option<(usize, bool)> {
        self.by_face.get(&(cell, face)).copied()
    }

    /// Walks once around an edge, leaving each cell through the face not
    /// used to enter it.
    pub fn walk(&self, start: (Cell, CellEdge), first_exit: FaceLabel) -> Walk {
        let mut members = vec![start];
        let mut steps = Vec::new();
        let (mut cell, mut edge, mut exit) = (start.0, start.1, first_exit);
        loop {
            let (idx, forward) = self
                .pairing_at(cell, exit)
                .unwrap_or_else(|| panic!("face {exit} of {cell} is unpaired"));
            let p = &self.pairings[idx];
            let entry = if forward { p.target } else { p.source };
            edge = p.transfer(edge, forward);
            cell = entry.cell;
            steps.push(WalkStep { pairing: idx, forward });
            if (cell, edge) == start {
                break;
            }
            members.push((cell, edge));
            exit = cell
                .faces()
                .into_iter()
                .find(|f| *f != entry.face && f.edges().contains(&edge))
                .expect("every edge lies on two faces");
        }
        Walk { members, steps }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WalkStep {
    pub pairing: usize,
    pub forward: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Walk {
    pub members: Vec<(Cell, CellEdge)>,
    pub steps: Vec<WalkStep>,
}

pub fn build_decomposition(t: &MonodromyTriangulation) -> CellDecomposition {
    let word = t.word().clone();
    let gaps = word.gaps();
    let m = word.len();
    let mut cells = Vec::new();
    for j in 0..m {
        cells.push(Cell::tet(word.at(j), j));
        if word.at(j) == Letter::R {
            cells.push(Cell::slab(j));
        }
    }
    let mut d = CellDecomposition {
        word,
        gaps,
        cells,
        pairings: Vec::new(),
        classes: Vec::new(),
        by_face: HashMap::new(),
    };
    d.pairings = assign_face_pairings(&d);
    for (i, p) in d.pairings.iter().enumerate() {
        d.by_face.insert((p.source.cell, p.source.face), (i, true));
        d.by_face.insert((p.target.cell, p.target.face), (i, false));
    }
    d.classes = edge_classes_decomp(&d);
    d
}

/// Face pairings, labelled by the type of the lower tetrahedron, followed by
/// one bigon pairing per slab.
pub fn assign_face_pairings(d: &CellDecomposition) -> Vec<FacePairing> {
    let m = d.m();
    let mut out = Vec::new();
    for j in 0..m {
        let p = (j + m - 1) % m;
        let (lower, upper) = (d.tet(p), d.tet(j));
        let [via124, via134] = layering_maps(d.word.at(p));
        match d.word.at(p) {
            Letter::L => {
                out.push(FacePairing {
                    source: FaceSide::tri(lower, via134.from),
                    target: FaceSide::tri(upper, via134.to),
                    label: MatrixLabel::G1,
                });
                out.push(FacePairing {
                    source: FaceSide::tri(lower, via124.from),
                    target: FaceSide::tri(upper, via124.to),
                    label: MatrixLabel::G2,
                });
            }
            Letter::R => {
                let slab = Cell::slab(p);
                out.push(FacePairing {
                    source: FaceSide::tri(lower, via134.from),
                    target: FaceSide::tri(upper, via134.to),
                    label: MatrixLabel::G3,
                });
                out.push(FacePairing {
                    source: FaceSide::slab_tri(slab, FaceLabel::Outer),
                    target: FaceSide::tri(upper, via124.to),
                    label: MatrixLabel::G4,
                });
                out.push(FacePairing {
                    source: FaceSide::tri(lower, via124.from),
                    target: FaceSide::slab_tri(slab, FaceLabel::Inner),
                    label: MatrixLabel::I,
                });
            }
        }
    }
    for j in 0..m {
        if d.word.at(j) == Letter::R {
            let n = d.gaps[j];
            out.push(FacePairing {
                source: FaceSide::bigon(Cell::slab(j), FaceLabel::Bigon14),
                target: FaceSide::bigon(Cell::slab((j + n + 1) % m), FaceLabel::Bigon24),
                label: MatrixLabel::Bigon(n),
            });
        }
    }
    out
}

/// Edge classes with their members in walk order, written down directly
/// from the word. Order: for each index, the L14 class, or the R14 class
/// followed by the slab class.
pub fn edge_classes_decomp(d: &CellDecomposition) -> Vec<EdgeClassD> {
    let m = d.m();
    let tet = |k: usize| d.tet(k);
    let slab = |k: usize| Cell::slab(k % m);
    let mut out = Vec::new();
    for j in 0..m {
        let n = d.gaps[j];
        match d.word.at(j) {
            Letter::L => {
                let mut mem = vec![(tet(j), CellEdge(1, 4))];
                mem.extend((1..=n + 1).map(|k| (tet(j + k), CellEdge(3, 4))));
                mem.push((tet(j + n + 2), CellEdge(2, 3)));
                mem.push((tet(j + n + 1), CellEdge(1, 2)));
                for k in (1..=n).rev() {
                    mem.push((slab(j + k), CellEdge(1, 2)));
                    mem.push((tet(j + k), CellEdge(1, 2)));
                }
                out.push(EdgeClassD {
                    kind: ClassKind::L14,
                    index: j,
                    n,
                    rep: mem[0],
                    members: mem,
                });
            }
            Letter::R => {
                let mut mem = vec![(slab(j), CellEdge(1, 4)), (tet(j), CellEdge(1, 4))];
                mem.extend((1..=n).map(|k| (tet(j + k), CellEdge(2, 4))));
                mem.push((tet(j + n + 1), CellEdge(2, 4)));
                mem.push((slab(j + n + 1), CellEdge(2, 4)));
                out.push(EdgeClassD {
                    kind: ClassKind::R14,
                    index: j,
                    n,
                    rep: mem[1],
                    members: mem,
                });
                let mut mem = vec![(slab(j), CellEdge(4, 1))];
                mem.extend((1..=n).map(|k| (tet(j + k), CellEdge(1, 3))));
                mem.push((tet(j + n + 1), CellEdge(1, 3)));
                mem.push((tet(j + n + 2), CellEdge(2, 3)));
                mem.push((slab(j + n + 1), CellEdge(4, 2)));
                out.push(EdgeClassD {
                    kind: ClassKind::Slab41,
                    index: j,
                    n,
                    rep: mem[0],
                    members: mem,
                });
            }
        }
    }
    out
}

#[derive(Serialize)]
struct PairingJson<'a> {
    source: &'a FaceSide,
    target: &'a FaceSide,
    label: MatrixLabel,
}

#[derive(Serialize)]
struct ClassJson {
    rep: String,
    kind: ClassKind,
    n: usize,
    valence: usize,
    members: Vec<String>,
}

#[derive(Serialize)]
struct DecompositionJson<'a> {
    schema: u32,
    word: &'a FlipWord,
    cells: &'a [Cell],
    pairings: Vec<PairingJson<'a>>,
    edge_classes: Vec<ClassJson>,
}

pub fn member_string(m: &(Cell, CellEdge)) -> String {
    format!("{}({})", m.0, m.1)
}

pub fn to_json(d: &CellDecomposition) -> serde_json::Value {
    serde_json::to_value(DecompositionJson {
        schema: 1,
        word: &d.word,
        cells: &d.cells,
        pairings: d
            .pairings
            .iter()
            .map(|p| PairingJson {
                source: &p.source,
                target: &p.target,
                label: p.label,
            })
            .collect(),
        edge_classes: d
            .classes
            .iter()
            .map(|c| ClassJson {
                rep: c.rep_string(),
                kind: c.kind,
                n: c.n,
                valence: c.valence(),
                members: c.members.iter().map(member_string).collect(),
            })
            .collect(),
    })
    .expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flipword::parse_word;
    use crate::montri::build_triangulation;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    fn dec(s: &str) -> CellDecomposition {
        build_decomposition(&build_triangulation(&parse_word(s).unwrap()))
    }

    fn names(ms: &[(Cell, CellEdge)]) -> Vec<String> {
        ms.iter().map(member_string).collect()
    }

    fn triangle_count(d: &CellDecomposition) -> usize {
        d.pairings().iter().filter(|p| !p.source.face.is_bigon()).count()
    }

    #[test]
    fn figure_eight_cells_and_pairings() {
        let d = dec("RL");
        let cells: Vec<String> = d.cells().iter().map(|c| c.to_string()).collect();
        assert_eq!(cells, vec!["R0", "S0", "L1"]);
        assert_eq!(triangle_count(&d), 5);
        assert_eq!(d.pairings().len(), 6);
        let e = d.pairings().iter().find(|p| p.label == MatrixLabel::I).unwrap();
        assert_eq!(e.source.to_string(), "R0(124)");
        assert_eq!(e.target.to_string(), "S0inner(124)");
        let f = d.pairings().iter().find(|p| p.source.face.is_bigon()).unwrap();
        assert_eq!(f.label, MatrixLabel::Bigon(1));
    }

    #[test]
    fn figure_eight_classes() {
        let d = dec("RL");
        let reps: Vec<String> = d.classes().iter().map(|c| c.rep_string()).collect();
        assert_eq!(reps, vec!["R0(14)", "S0(41)", "L1(14)"]);
        let vals: Vec<usize> = d.classes().iter().map(|c| c.valence()).collect();
        assert_eq!(vals, vec![5, 5, 7]);
        let l = names(&d.classes()[2].members);
        for m in ["S0(12)", "R0(12)", "R0(34)"] {
            assert!(l.contains(&m.to_string()), "{m} missing from {l:?}");
        }
    }

    #[test]
    fn rrl_counts() {
        let d = dec("RRL");
        assert_eq!(d.cells().len(), 5);
        assert_eq!(triangle_count(&d), 8);
        assert_eq!(d.pairings().len(), 10);
        let mut vals: Vec<usize> = d.classes().iter().map(|c| c.valence()).collect();
        vals.sort_unstable();
        assert_eq!(vals, vec![4, 4, 5, 5, 10]);
        let bigons: Vec<MatrixLabel> = d
            .pairings()
            .iter()
            .filter(|p| p.source.face.is_bigon())
            .map(|p| p.label)
            .collect();
        assert_eq!(bigons, vec![MatrixLabel::Bigon(0), MatrixLabel::Bigon(1)]);
    }

    #[test]
    fn lr_relabels_rl() {
        let kinds = |d: &CellDecomposition| {
            let mut k: Vec<CellKind> = d.cells().iter().map(|c| c.kind).collect();
            k.sort();
            k
        };
        assert_eq!(kinds(&dec("LR")), kinds(&dec("RL")));
    }

    #[test]
    fn figure_eight_walks() {
        let d = dec("RL");
        let slab = &d.classes()[1];
        let (start, exit) = slab.walk_start();
        let w = d.walk(start, exit);
        assert_eq!(names(&w.members), vec!["S0(41)", "L1(13)", "R0(13)", "L1(23)", "S0(42)"]);
    }

    fn word(max: usize) -> impl Strategy<Value = FlipWord> {
        proptest::collection::vec(prop_oneof![Just(Letter::R), Just(Letter::L)], 2..=max)
            .prop_filter_map("admissible", |v| FlipWord::from_letters(v).ok())
    }

    proptest! {
        #[test]
        fn walks_reproduce_closed_forms(w in word(12)) {
            let d = build_decomposition(&build_triangulation(&w));
            for c in d.classes() {
                let (start, exit) = c.walk_start();
                prop_assert_eq!(&d.walk(start, exit).members, &c.members);
            }
        }

        #[test]
        fn classes_partition_edges(w in word(14)) {
            let d = build_decomposition(&build_triangulation(&w));
            let (m, r) = (d.m(), d.r());
            prop_assert_eq!(d.cells().len(), m + r);
            prop_assert_eq!(d.classes().len(), d.cells().len());
            prop_assert_eq!(triangle_count(&d), 2 * m + r);
            prop_assert_eq!(d.pairings().len() - triangle_count(&d), r);
            let all: Vec<_> = d.classes().iter().flat_map(|c| c.members.clone()).collect();
            prop_assert_eq!(all.len(), 6 * m + 5 * r);
            let set: BTreeSet<_> = all.iter().copied().collect();
            let expected: BTreeSet<_> = d
                .cells()
                .iter()
                .flat_map(|c| c.edges().into_iter().map(move |e| (*c, e)))
                .collect();
            prop_assert_eq!(set, expected);
            for c in d.classes() {
                let want = match c.kind {
                    ClassKind::L14 => 3 * c.n + 4,
                    _ => c.n + 4,
                };
                prop_assert_eq!(c.valence(), want);
            }
        }

        #[test]
        fn every_face_paired_once(w in word(14)) {
            let d = build_decomposition(&build_triangulation(&w));
            let mut seen = BTreeSet::new();
            for p in d.pairings() {
                prop_assert!(seen.insert((p.source.cell, p.source.face)));
                prop_assert!(seen.insert((p.target.cell, p.target.face)));
            }
            let total: usize = d.cells().iter().map(|c| c.faces().len()).sum();
            prop_assert_eq!(seen.len(), total);
        }

        #[test]
        fn bigon_gap_matches_r_class(w in word(14)) {
            let d = build_decomposition(&build_triangulation(&w));
            for p in d.pairings().iter().filter(|p| p.source.face.is_bigon()) {
                let MatrixLabel::Bigon(n) = p.label else { unreachable!() };
                let target = p.target.cell;
                let class = d
                    .classes()
                    .iter()
                    .find(|c| c.members.contains(&(target, CellEdge(2, 4))))
                    .unwrap();
                prop_assert_eq!(class.kind, ClassKind::R14);
                prop_assert_eq!(class.n, n);
            }
        }
    }
}
