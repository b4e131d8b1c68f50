//! Geometric realisation of the cell decomposition: model cells, pairing
//! matrices, edge holonomy certificates, ramification orders, vertex
//! developments around edges, and the holonomy representation.

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::celldecomp::{
    build_decomposition, member_string, Cell, CellDecomposition, CellEdge, ClassKind, EdgeClassD, FaceLabel,
    MatrixLabel, Walk,
};
use crate::crgeom::{g_matrix, lambda, vertex_lift, GLabel, HeisPoint, ModelTag};
use crate::exactnum::{ExactError, Mat3, QOmega};
use crate::flipword::{ExponentForm, FlipWord, Letter};
use crate::montri::build_triangulation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealiseError {
    #[error("face pairing {0} has no matrix")]
    UnassignedPairing(usize),
    #[error("word starts with L; pass the mirror opt-in to rotate it to R-first form")]
    MirrorFormUnspecified,
    #[error(transparent)]
    Exact(#[from] ExactError),
}

pub fn label_matrix(label: MatrixLabel) -> Mat3 {
    let g = |l| g_matrix(l);
    match label {
        MatrixLabel::G1 => g(GLabel::G1),
        MatrixLabel::G2 => g(GLabel::G2),
        MatrixLabel::G3 => g(GLabel::G3),
        MatrixLabel::G4 => g(GLabel::G4),
        MatrixLabel::I => Mat3::identity(),
        MatrixLabel::Bigon(n) => {
            let p = g(GLabel::G2).pow(n as i64).expect("invertible");
            &p * &g(GLabel::G3)
        }
    }
}

/// Model cells and pairing matrices for a decomposition.
#[derive(Debug, Clone)]
pub struct Realisation {
    models: Vec<(Cell, ModelTag)>,
    matrices: Vec<Option<Mat3>>,
}

impl Realisation {
    pub fn models(&self) -> &[(Cell, ModelTag)] {
        &self.models
    }

    pub fn model_of(&self, cell: Cell) -> Option<ModelTag> {
        self.models.iter().find(|(c, _)| *c == cell).map(|(_, t)| *t)
    }

    pub fn matrix(&self, pairing: usize) -> Option<&Mat3> {
        self.matrices.get(pairing).and_then(Option::as_ref)
    }

    /// Drops the matrix of one pairing; used to exercise error paths.
    pub fn without_matrix(mut self, pairing: usize) -> Self {
        if let Some(m) = self.matrices.get_mut(pairing) {
            *m = None;
        }
        self
    }
}

/// Tetrahedra model on TB after an R and on TA after an L. A slab models on
/// `Slab(k)` where `k + 4` is the valence of the class of its 24 edge.
pub fn assign_models(d: &CellDecomposition) -> Realisation {
    let m = d.m();
    let models = d
        .cells()
        .iter()
        .map(|&c| {
            let tag = if c.is_slab() {
                let class = d
                    .classes()
                    .iter()
                    .find(|k| k.members.contains(&(c, CellEdge(2, 4))))
                    .expect("every slab edge is classified");
                ModelTag::slab(class.valence() - 4)
            } else {
                match d.word().at(c.index + m - 1) {
                    Letter::R => ModelTag::TB,
                    Letter::L => ModelTag::TA,
                }
            };
            (c, tag)
        })
        .collect();
    let matrices = d.pairings().iter().map(|p| Some(label_matrix(p.label))).collect();
    Realisation { models, matrices }
}

/// One factor of a holonomy word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Factor {
    pub label: MatrixLabel,
    pub inverse: bool,
}

impl Factor {
    fn new(label: MatrixLabel, inverse: bool) -> Self {
        Factor { label, inverse }
    }

    pub fn matrix(&self) -> Mat3 {
        let m = label_matrix(self.label);
        if self.inverse {
            m.inverse().expect("pairing matrices are invertible")
        } else {
            m
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "{}^-1", self.label)
        } else {
            write!(f, "{}", self.label)
        }
    }
}

impl Serialize for Factor {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Product of factors given in walk order: later factors multiply on the left.
pub fn walk_product(factors: &[Factor]) -> Mat3 {
    factors
        .iter()
        .fold(Mat3::identity(), |acc, f| &f.matrix() * &acc)
}

/// The holonomy word of a class, in walk order, written down from its type.
///
/// * L14: `G2, G3ⁿ, G1, G2⁻¹, (G4⁻¹ I⁻¹)ⁿ, G1⁻¹`
/// * R14: `I⁻¹, G3, G2ⁿ, I, Bigon(n)⁻¹`
/// * Slab41: `G4, G1ⁿ, G3, G4⁻¹, Bigon(n)⁻¹`
pub fn family_word(kind: ClassKind, n: usize) -> Vec<Factor> {
    use MatrixLabel::*;
    let f = Factor::new;
    let mut w = Vec::new();
    match kind {
        ClassKind::L14 => {
            w.push(f(G2, false));
            w.extend(std::iter::repeat_n(f(G3, false), n));
            w.push(f(G1, false));
            w.push(f(G2, true));
            for _ in 0..n {
                w.push(f(G4, true));
                w.push(f(I, true));
            }
            w.push(f(G1, true));
        }
        ClassKind::R14 => {
            w.push(f(I, true));
            w.push(f(G3, false));
            w.extend(std::iter::repeat_n(f(G2, false), n));
            w.push(f(I, false));
            w.push(f(Bigon(n), true));
        }
        ClassKind::Slab41 => {
            w.push(f(G4, false));
            w.extend(std::iter::repeat_n(f(G1, false), n));
            w.push(f(G3, false));
            w.push(f(G4, true));
            w.push(f(Bigon(n), true));
        }
    }
    w
}

/// Closed form of the holonomy around a class, as a product of G-powers.
///
/// * L14: `G1⁻¹ G4⁻ⁿ G2⁻¹ G1 G3ⁿ G2`
/// * R14: `(G2ⁿG3)⁻¹ G2ⁿ G3`
/// * Slab41: `G3⁻¹ G2⁻ⁿ G4⁻¹ G3 G1ⁿ G4`
pub fn family_product(kind: ClassKind, n: usize) -> Mat3 {
    let g = |l: GLabel, e: i64| g_matrix(l).pow(e).expect("invertible");
    let n = n as i64;
    let chain = |ms: &[Mat3]| ms.iter().fold(Mat3::identity(), |acc, m| &acc * m);
    match kind {
        ClassKind::L14 => chain(&[
            g(GLabel::G1, -1),
            g(GLabel::G4, -n),
            g(GLabel::G2, -1),
            g(GLabel::G1, 1),
            g(GLabel::G3, n),
            g(GLabel::G2, 1),
        ]),
        ClassKind::R14 => {
            let b = &g(GLabel::G2, n) * &g(GLabel::G3, 1);
            &b.inverse().expect("invertible") * &b
        }
        ClassKind::Slab41 => chain(&[
            g(GLabel::G3, -1),
            g(GLabel::G2, -n),
            g(GLabel::G4, -1),
            g(GLabel::G3, 1),
            g(GLabel::G1, n),
            g(GLabel::G4, 1),
        ]),
    }
}

/// Ramification order of the branch locus around a class.
pub fn ramification_order(kind: ClassKind, n: usize) -> usize {
    match kind {
        ClassKind::L14 => n + 1,
        ClassKind::R14 | ClassKind::Slab41 => (n + 5).div_ceil(6),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EdgeCertificate {
    pub rep: String,
    pub kind: ClassKind,
    pub n: usize,
    pub valence: usize,
    pub members: Vec<String>,
    /// Factors in walk order; the product multiplies later factors on the left.
    #[serde(skip)]
    pub walk_word: Vec<Factor>,
    /// The same factors written as a product, leftmost first.
    pub holonomy_word: Vec<Factor>,
    pub product: Mat3,
    pub trivial: bool,
    /// Whether the walked product equals the closed-form product exactly.
    pub family_match: bool,
    pub ramification: usize,
}

/// Walks around the class through the stored pairings and multiplies the
/// matrices met on the way.
pub fn edge_holonomy(
    r: &Realisation,
    d: &CellDecomposition,
    e: &EdgeClassD,
) -> Result<EdgeCertificate, RealiseError> {
    let (start, exit) = e.walk_start();
    let walk = d.walk(start, exit);
    let mut product = Mat3::identity();
    let mut word = Vec::new();
    for s in &walk.steps {
        let m = r.matrix(s.pairing).ok_or(RealiseError::UnassignedPairing(s.pairing))?;
        let m = if s.forward { m.clone() } else { m.inverse()? };
        product = &m * &product;
        word.push(Factor::new(d.pairings()[s.pairing].label, !s.forward));
    }
    let family_match = product == family_product(e.kind, e.n);
    Ok(EdgeCertificate {
        rep: e.rep_string(),
        kind: e.kind,
        n: e.n,
        valence: e.valence(),
        members: walk.members.iter().map(member_string).collect(),
        holonomy_word: word.iter().rev().copied().collect(),
        walk_word: word,
        trivial: product.is_projective_identity(),
        family_match,
        ramification: ramification_order(e.kind, e.n),
        product,
    })
}

/// For each cell met by a walk, the matrix placing its model in the frame of
/// the first cell.
pub fn cell_placements(r: &Realisation, walk: &Walk) -> Result<Vec<(Cell, Mat3)>, RealiseError> {
    let mut acc = Mat3::identity();
    let mut out = Vec::new();
    for (k, (cell, _)) in walk.members.iter().enumerate() {
        out.push((*cell, acc.inverse()?));
        let s = walk.steps[k];
        let m = r.matrix(s.pairing).ok_or(RealiseError::UnassignedPairing(s.pairing))?;
        let m = if s.forward { m.clone() } else { m.inverse()? };
        acc = &m * &acc;
    }
    Ok(out)
}

/// A cell with the developed position of each of its vertices.
pub type DevelopedCell = (Cell, Vec<(u8, HeisPoint)>);

/// Developed positions of every vertex of every cell around an edge.
pub fn develop(
    r: &Realisation,
    d: &CellDecomposition,
    start: (Cell, CellEdge),
    first_exit: FaceLabel,
) -> Result<Vec<DevelopedCell>, RealiseError> {
    let walk = d.walk(start, first_exit);
    cell_placements(r, &walk)?
        .into_iter()
        .map(|(cell, place)| {
            let pts = cell
                .vertices()
                .iter()
                .map(|&v| {
                    let img = crate::crgeom::apply(&place, &vertex_lift(v))?;
                    let pt = lambda(&img).expect("similitudes keep vertices null");
                    Ok((v, pt))
                })
                .collect::<Result<Vec<_>, ExactError>>()?;
            Ok((cell, pts))
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DevKind {
    Slab41,
    L14Anticlockwise,
    L14Clockwise,
}

/// A vertex around an edge: the cell is given by its type (`*` when either
/// type is possible) and its index offset from the edge's own index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DevVertex {
    pub cell: char,
    pub offset: usize,
    pub vertex: u8,
    pub z: QOmega,
}

impl DevVertex {
    pub fn label(&self) -> String {
        format!("{}+{}({})", self.cell, self.offset, self.vertex)
    }
}

fn signed_power_plus_one(sign_exp: i64, base: &QOmega, e: i64) -> QOmega {
    let s = if sign_exp.rem_euclid(2) == 0 { QOmega::one() } else { -QOmega::one() };
    &(&s * &base.pow(e).expect("unit")) + &QOmega::one()
}

/// Horizontal coordinates of the vertices of the cells around an edge that
/// are not endpoints of the edge, in walk order.
pub fn dev_vertices(kind: DevKind, n: usize) -> Vec<DevVertex> {
    let w = QOmega::omega();
    let wb = QOmega::omega_bar();
    let ni = n as i64;
    let v = |cell, offset, vertex, z| DevVertex { cell, offset, vertex, z };
    let f = |s: i64, base: &QOmega, e: i64| signed_power_plus_one(s, base, e);
    let mut out = Vec::new();
    match kind {
        DevKind::Slab41 => {
            out.push(v('S', 0, 2, -w.clone()));
            if n >= 1 {
                out.push(v('L', 1, 2, -w.clone()));
                out.push(v('L', 1, 4, QOmega::zero()));
            }
            for k in 1..ni {
                out.push(v('L', 1 + k as usize, 2, f(k, &w, k - 1)));
                out.push(v('L', 1 + k as usize, 4, f(k + 1, &w, k)));
            }
            out.push(v('R', n + 1, 2, f(ni, &w, ni - 1)));
            out.push(v('R', n + 1, 4, f(ni + 1, &w, ni)));
            out.push(v('*', n + 2, 4, f(ni + 1, &w, ni)));
            out.push(v('*', n + 2, 1, f(ni + 2, &w, ni + 1)));
            out.push(v('S', n + 1, 1, f(ni + 2, &w, ni + 1)));
        }
        DevKind::L14Anticlockwise => {
            out.push(v('L', 0, 2, -w.clone()));
            out.push(v('L', 0, 3, QOmega::zero()));
            for k in 1..=ni {
                out.push(v('R', k as usize, 3, f(k, &wb, k - 1)));
                out.push(v('R', k as usize, 4, f(k + 1, &wb, k)));
                out.push(v('S', k as usize, 4, f(k + 1, &wb, k)));
            }
            out.push(v('L', n + 1, 3, f(ni + 1, &wb, ni)));
            out.push(v('L', n + 1, 4, f(ni + 2, &wb, ni + 1)));
            out.push(v('*', n + 2, 4, f(ni + 2, &wb, ni + 1)));
            out.push(v('*', n + 2, 1, f(ni + 3, &wb, ni + 2)));
        }
        DevKind::L14Clockwise => {
            out.push(v('L', 0, 3, QOmega::zero()));
            out.push(v('L', 0, 2, -w.clone()));
            for k in 1..=ni {
                out.push(v('R', k as usize, 2, f(k + 1, &wb, k)));
                out.push(v('R', k as usize, 1, f(k + 2, &wb, k + 1)));
            }
            out.push(v('L', n + 1, 2, f(ni + 2, &wb, ni + 1)));
            out.push(v('L', n + 1, 1, f(ni + 3, &wb, ni + 2)));
            out.push(v('*', n + 2, 1, f(ni + 3, &wb, ni + 2)));
            out.push(v('*', n + 2, 4, f(ni + 2, &wb, ni + 1)));
        }
    }
    out
}

/// A word whose index-0 class realises the development of the given kind
/// with gap `n`.
pub fn dev_word(kind: DevKind, n: usize) -> FlipWord {
    let (x, y) = match kind {
        DevKind::Slab41 => (Letter::R, Letter::L),
        DevKind::L14Anticlockwise | DevKind::L14Clockwise => (Letter::L, Letter::R),
    };
    let mut letters = vec![x];
    letters.extend(std::iter::repeat_n(y, n));
    letters.extend([x, y]);
    FlipWord::from_letters(letters).expect("both letters present")
}

/// Start cell, edge and first exit face for a development kind on
/// [`dev_word`].
pub fn dev_start(kind: DevKind, d: &CellDecomposition) -> ((Cell, CellEdge), FaceLabel) {
    match kind {
        DevKind::Slab41 => ((Cell::slab(0), CellEdge(4, 1)), FaceLabel::Outer),
        DevKind::L14Anticlockwise => ((d.tet(0), CellEdge(1, 4)), FaceLabel::Tri([1, 3, 4])),
        DevKind::L14Clockwise => ((d.tet(0), CellEdge(1, 4)), FaceLabel::Tri([1, 2, 4])),
    }
}

/// How an L-first word is handled by [`holonomy_rep`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MirrorPolicy {
    Reject,
    /// Rotate the leading L-run to the end, giving an R-first word for the
    /// same bundle.
    RotateToRFirst,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HolonomyRep {
    #[serde(rename = "M_alpha")]
    pub m_alpha: Mat3,
    #[serde(rename = "M_beta")]
    pub m_beta: Mat3,
    #[serde(rename = "M_tau")]
    pub m_tau: Mat3,
}

impl HolonomyRep {
    /// Each matrix scaled by the lcm of its denominators.
    pub fn cleared(&self) -> [Mat3; 3] {
        [&self.m_alpha, &self.m_beta, &self.m_tau].map(|m| m.clear_denominators().1)
    }
}

/// Images of the fibre generators and of the base loop. For
/// `R^{a0} L^{b0} … R^{ak} L^{bk} R^c` the base loop maps to
/// `G4^{-a0-c} G1^{-b0} G4^{-a1} G1^{-b1} … G4^{-ak} G1^{-bk}`.
pub fn holonomy_rep(w: &FlipWord, policy: MirrorPolicy) -> Result<HolonomyRep, RealiseError> {
    let mut e = w.exponents();
    if e.form == ExponentForm::LFirst {
        if policy == MirrorPolicy::Reject {
            return Err(RealiseError::MirrorFormUnspecified);
        }
        let lead = w.letters().iter().take_while(|&&l| l == Letter::L).count();
        e = w.rotate(lead).exponents();
    }
    let g = |l: GLabel, k: i64| g_matrix(l).pow(k);
    let m_alpha = &g(GLabel::G4, -1)? * &g(GLabel::G3, 1)?;
    let m_beta = &g(GLabel::G1, -1)? * &g(GLabel::G2, 1)?;
    let mut m_tau = Mat3::identity();
    for (i, &(a, b)) in e.pairs.iter().enumerate() {
        let a = a as i64 + if i == 0 { e.trailing as i64 } else { 0 };
        m_tau = &(&m_tau * &g(GLabel::G4, -a)?) * &g(GLabel::G1, -(b as i64))?;
    }
    Ok(HolonomyRep { m_alpha, m_beta, m_tau })
}

#[derive(Debug, Clone, Serialize)]
pub struct CellModel {
    pub cell: Cell,
    pub model: ModelTag,
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum RepresentationEntry {
    Ok(Box<HolonomyRep>),
    Unavailable { error: &'static str },
}

#[derive(Debug, Clone, Serialize)]
pub struct Certificate {
    pub schema: u32,
    pub word: FlipWord,
    pub cells: Vec<CellModel>,
    pub edges: Vec<EdgeCertificate>,
    pub representation: RepresentationEntry,
}

impl Certificate {
    pub fn all_trivial(&self) -> bool {
        self.edges.iter().all(|e| e.trivial)
    }
}

/// Runs the whole pipeline on a word.
pub fn certify(w: &FlipWord, policy: MirrorPolicy) -> Result<Certificate, RealiseError> {
    let d = build_decomposition(&build_triangulation(w));
    let r = assign_models(&d);
    let edges = d
        .classes()
        .iter()
        .map(|c| edge_holonomy(&r, &d, c))
        .collect::<Result<Vec<_>, _>>()?;
    let representation = match holonomy_rep(w, policy) {
        Ok(h) => RepresentationEntry::Ok(Box::new(h)),
        Err(RealiseError::MirrorFormUnspecified) => RepresentationEntry::Unavailable {
            error: "MIRROR_FORM_UNSPECIFIED",
        },
        Err(e) => return Err(e),
    };
    Ok(Certificate {
        schema: 1,
        word: w.clone(),
        cells: r
            .models()
            .iter()
            .map(|&(cell, model)| CellModel { cell, model })
            .collect(),
        edges,
        representation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flipword::parse_word;
    use proptest::prelude::*;

    fn setup(s: &str) -> (CellDecomposition, Realisation) {
        let d = build_decomposition(&build_triangulation(&parse_word(s).unwrap()));
        let r = assign_models(&d);
        (d, r)
    }

    fn g(l: GLabel, e: i64) -> Mat3 {
        g_matrix(l).pow(e).unwrap()
    }

    fn chain(ms: &[Mat3]) -> Mat3 {
        ms.iter().fold(Mat3::identity(), |acc, m| &acc * m)
    }

    #[test]
    fn figure_eight_models() {
        let (d, r) = setup("RL");
        let tags: Vec<String> = r.models().iter().map(|(c, t)| format!("{c}:{t}")).collect();
        assert_eq!(tags, vec!["R0:TA", "S0:Slab(1)", "L1:TB"]);
        let f = d.pairings().iter().position(|p| p.label == MatrixLabel::Bigon(1)).unwrap();
        assert_eq!(r.matrix(f).unwrap(), &(&g(GLabel::G2, 1) * &g(GLabel::G3, 1)));
    }

    #[test]
    fn rrl_models() {
        let (_, r) = setup("RRL");
        let tags: Vec<String> = r.models().iter().map(|(c, t)| format!("{c}:{t}")).collect();
        assert_eq!(tags, vec!["R0:TA", "S0:Slab(1)", "R1:TB", "S1:Slab(0)", "L2:TB"]);
    }

    #[test]
    fn figure_eight_holonomy_words() {
        let (d, r) = setup("RL");
        let certs: Vec<EdgeCertificate> =
            d.classes().iter().map(|c| edge_holonomy(&r, &d, c).unwrap()).collect();
        let words: Vec<Vec<String>> = certs
            .iter()
            .map(|c| c.holonomy_word.iter().map(|f| f.to_string()).collect())
            .collect();
        assert_eq!(words[0], vec!["Bigon(1)^-1", "I", "G2", "G3", "I^-1"]);
        assert_eq!(words[1], vec!["Bigon(1)^-1", "G4^-1", "G3", "G1", "G4"]);
        assert_eq!(words[2], vec!["G1^-1", "I^-1", "G4^-1", "G2^-1", "G1", "G3", "G2"]);
        for c in &certs {
            assert!(c.trivial && c.family_match, "{}", c.rep);
        }
        // The displayed products for the red and blue edges.
        let red = chain(&[
            (&g(GLabel::G2, 1) * &g(GLabel::G3, 1)).inverse().unwrap(),
            g(GLabel::G4, -1),
            g(GLabel::G3, 1),
            g(GLabel::G1, 1),
            g(GLabel::G4, 1),
        ]);
        assert_eq!(certs[1].product, red);
        assert!(red.is_projective_identity());
        let blue = chain(&[
            g(GLabel::G1, -1),
            g(GLabel::G4, -1),
            g(GLabel::G2, -1),
            g(GLabel::G1, 1),
            g(GLabel::G3, 1),
            g(GLabel::G2, 1),
        ]);
        assert_eq!(certs[2].product, blue);
        let rams: Vec<usize> = certs.iter().map(|c| c.ramification).collect();
        assert_eq!(rams, vec![1, 1, 2]);
    }

    #[test]
    fn families_are_projectively_trivial() {
        for n in 0..12 {
            for kind in [ClassKind::L14, ClassKind::R14, ClassKind::Slab41] {
                assert!(family_product(kind, n).is_projective_identity(), "{kind:?} n={n}");
                assert_eq!(walk_product(&family_word(kind, n)), family_product(kind, n));
            }
        }
        assert!(family_product(ClassKind::Slab41, 4).is_projective_identity());
    }

    #[test]
    fn families_are_six_periodic() {
        for n in 0..6 {
            for kind in [ClassKind::L14, ClassKind::Slab41] {
                assert!(family_product(kind, n).projectively_equal(&family_product(kind, n + 6)));
            }
        }
    }

    #[test]
    fn g1_g2_commute_projectively() {
        let a = &g(GLabel::G1, 1) * &g(GLabel::G2, 1);
        let b = &g(GLabel::G2, 1) * &g(GLabel::G1, 1);
        assert!(a.projectively_equal(&b));
    }

    #[test]
    fn ramification_examples() {
        assert_eq!(ramification_order(ClassKind::Slab41, 5), 2);
        assert_eq!(ramification_order(ClassKind::L14, 2), 3);
        assert_eq!(ramification_order(ClassKind::R14, 1), 1);
        assert_eq!(ramification_order(ClassKind::R14, 0), 1);
        assert_eq!(ramification_order(ClassKind::R14, 2), 2);
        assert_eq!(ramification_order(ClassKind::R14, 7), 2);
        assert_eq!(ramification_order(ClassKind::R14, 8), 3);
    }

    #[test]
    fn representation_examples() {
        let rl = holonomy_rep(&parse_word("RL").unwrap(), MirrorPolicy::Reject).unwrap();
        let rrl = holonomy_rep(&parse_word("RRL").unwrap(), MirrorPolicy::Reject).unwrap();
        assert_eq!(rl.m_alpha, &g(GLabel::G4, -1) * &g(GLabel::G3, 1));
        assert_eq!(rl.m_beta, &g(GLabel::G1, -1) * &g(GLabel::G2, 1));
        assert_eq!(rl.m_tau, &g(GLabel::G4, -1) * &g(GLabel::G1, -1));
        assert_eq!((rl.m_alpha, rl.m_beta), (rrl.m_alpha, rrl.m_beta));
        // RLR = R^1 L^1 R^1: the trailing run joins the first exponent.
        let rlr = holonomy_rep(&parse_word("RLR").unwrap(), MirrorPolicy::Reject).unwrap();
        assert_eq!(rlr.m_tau, &g(GLabel::G4, -2) * &g(GLabel::G1, -1));
    }

    #[test]
    fn mirror_form_is_gated() {
        let lr = parse_word("LR").unwrap();
        assert_eq!(holonomy_rep(&lr, MirrorPolicy::Reject), Err(RealiseError::MirrorFormUnspecified));
        let h = holonomy_rep(&lr, MirrorPolicy::RotateToRFirst).unwrap();
        assert_eq!(h, holonomy_rep(&parse_word("RL").unwrap(), MirrorPolicy::Reject).unwrap());
    }

    #[test]
    fn unassigned_pairing_is_reported() {
        let (d, r) = setup("RL");
        let r = r.without_matrix(0);
        let errs: Vec<_> = d
            .classes()
            .iter()
            .filter_map(|c| edge_holonomy(&r, &d, c).err())
            .collect();
        assert!(errs.contains(&RealiseError::UnassignedPairing(0)));
    }

    #[test]
    fn dev_table_examples() {
        let s1 = dev_vertices(DevKind::Slab41, 1);
        let r2 = s1.iter().find(|v| v.cell == 'R' && v.offset == 2 && v.vertex == 2).unwrap();
        assert_eq!(r2.z, QOmega::zero());
        assert_eq!(s1[0].z, -QOmega::omega());
        let a = dev_vertices(DevKind::L14Anticlockwise, 1);
        assert_eq!(a.iter().find(|v| v.label() == "L+0(3)").unwrap().z, QOmega::zero());
        assert_eq!(dev_vertices(DevKind::Slab41, 0).len(), 6);
    }

    /// Develops the cells around the edge on the test word and keeps, cell by
    /// cell, the vertices not at the edge's endpoints.
    fn developed_rows(kind: DevKind, n: usize) -> Vec<(Cell, Vec<(u8, QOmega)>)> {
        let d = build_decomposition(&build_triangulation(&dev_word(kind, n)));
        let r = assign_models(&d);
        let (start, exit) = dev_start(kind, &d);
        let cells = develop(&r, &d, start, exit).unwrap();
        let ends = [lambda(&vertex_lift(1)).unwrap(), HeisPoint::Infinity];
        cells
            .into_iter()
            .map(|(c, pts)| {
                let rest = pts
                    .into_iter()
                    .filter(|(_, p)| !ends.contains(p))
                    .map(|(v, p)| (v, p.z().unwrap().clone()))
                    .collect();
                (c, rest)
            })
            .collect()
    }

    fn check_table(kind: DevKind, n: usize) {
        let m = dev_word(kind, n).len();
        let rows = developed_rows(kind, n);
        let table = dev_vertices(kind, n);
        type Group = (usize, char, Vec<(u8, QOmega)>);
        let mut expected: Vec<Group> = Vec::new();
        for v in &table {
            match expected.last_mut() {
                Some((o, c, vs)) if *o == v.offset && *c == v.cell => vs.push((v.vertex, v.z.clone())),
                _ => expected.push((v.offset, v.cell, vec![(v.vertex, v.z.clone())])),
            }
        }
        // Tables stop at the cell of offset n+2; the clockwise and
        // anticlockwise halves of the L14 walk each reach it.
        let got: Vec<_> = rows.into_iter().filter(|(_, vs)| !vs.is_empty()).take(expected.len()).collect();
        assert_eq!(got.len(), expected.len(), "{kind:?} n={n}");
        for ((cell, mut vs), (off, ch, mut ws)) in got.into_iter().zip(expected) {
            assert_eq!(cell.index, off % m, "{kind:?} n={n}");
            let letter = cell.to_string().chars().next().unwrap();
            assert!(ch == '*' || ch == letter, "{kind:?} n={n}: {cell} vs {ch}");
            vs.sort_by_key(|x| x.0);
            ws.sort_by_key(|x| x.0);
            assert_eq!(vs, ws, "{kind:?} n={n} cell {cell}");
        }
    }

    #[test]
    fn tables_match_exact_developments() {
        for n in 0..=7 {
            check_table(DevKind::Slab41, n);
            check_table(DevKind::L14Anticlockwise, n);
            check_table(DevKind::L14Clockwise, n);
        }
    }

    fn word(max: usize) -> impl Strategy<Value = FlipWord> {
        proptest::collection::vec(prop_oneof![Just(Letter::R), Just(Letter::L)], 2..=max)
            .prop_filter_map("admissible", |v| FlipWord::from_letters(v).ok())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn every_edge_is_trivial(w in word(12)) {
            let (d, r) = (build_decomposition(&build_triangulation(&w)), None::<()>);
            let _ = r;
            let real = assign_models(&d);
            for c in d.classes() {
                let cert = edge_holonomy(&real, &d, c).unwrap();
                prop_assert!(cert.trivial);
                prop_assert!(cert.family_match);
                prop_assert_eq!(cert.walk_word, family_word(c.kind, c.n));
            }
        }

        #[test]
        fn reversed_walk_inverts_the_product(w in word(10)) {
            let d = build_decomposition(&build_triangulation(&w));
            let real = assign_models(&d);
            for c in d.classes() {
                let (start, first) = c.walk_start();
                let other = start
                    .0
                    .faces()
                    .into_iter()
                    .find(|f| *f != first && f.edges().contains(&start.1))
                    .unwrap();
                let back = d.walk(start, other);
                let mut p = Mat3::identity();
                for s in &back.steps {
                    let m = real.matrix(s.pairing).unwrap();
                    let m = if s.forward { m.clone() } else { m.inverse().unwrap() };
                    p = &m * &p;
                }
                let fwd = edge_holonomy(&real, &d, c).unwrap().product;
                prop_assert_eq!(&p * &fwd, Mat3::identity());
                prop_assert!(p.is_projective_identity());
            }
        }

        #[test]
        fn bigon_matrix_telescopes(w in word(12)) {
            let d = build_decomposition(&build_triangulation(&w));
            let real = assign_models(&d);
            for c in d.classes().iter().filter(|c| c.kind == ClassKind::R14) {
                let cert = edge_holonomy(&real, &d, c).unwrap();
                // Every factor but the closing bigon crossing, in walk order.
                let inner = &cert.walk_word[..cert.walk_word.len() - 1];
                prop_assert_eq!(walk_product(inner), label_matrix(MatrixLabel::Bigon(c.n)));
            }
        }

        #[test]
        fn representation_is_word_independent(w in word(12)) {
            let h = holonomy_rep(&w, MirrorPolicy::RotateToRFirst).unwrap();
            prop_assert_eq!(&h.m_alpha, &(&g(GLabel::G4, -1) * &g(GLabel::G3, 1)));
            prop_assert_eq!(&h.m_beta, &(&g(GLabel::G1, -1) * &g(GLabel::G2, 1)));
            for m in h.cleared() {
                prop_assert!(m.is_eisenstein_integral());
            }
        }
    }
}
