//! The layered (monodromy) ideal triangulation of a once-punctured torus
//! bundle: one tetrahedron per letter, glued by R- and L-layerings.
//!
//! Tetrahedron `j` has vertices 1..4. Its faces through edge 14 are glued to
//! the faces through edge 23 of tetrahedron `j + 1`; the vertex maps depend
//! on the letter of tetrahedron `j`.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::flipword::{FlipWord, Letter};

/// An unordered edge `{u, v}` of the standard tetrahedron, stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeLabel(u8, u8);

impl EdgeLabel {
    pub fn new(u: u8, v: u8) -> Self {
        assert!(u != v && (1..=4).contains(&u) && (1..=4).contains(&v));
        EdgeLabel(u.min(v), u.max(v))
    }

    pub fn vertices(self) -> (u8, u8) {
        (self.0, self.1)
    }
}

pub const ALL_EDGES: [EdgeLabel; 6] = [
    EdgeLabel(1, 2),
    EdgeLabel(1, 3),
    EdgeLabel(1, 4),
    EdgeLabel(2, 3),
    EdgeLabel(2, 4),
    EdgeLabel(3, 4),
];

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.0, self.1)
    }
}

impl Serialize for EdgeLabel {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A face identification given by two ordered vertex triples: `from[i]` is
/// sent to `to[i]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FaceMap {
    pub from: [u8; 3],
    pub to: [u8; 3],
}

impl FaceMap {
    pub fn image(&self, v: u8) -> Option<u8> {
        self.from.iter().position(|&x| x == v).map(|i| self.to[i])
    }

    pub fn map_edge(&self, e: EdgeLabel) -> Option<EdgeLabel> {
        let (u, v) = e.vertices();
        Some(EdgeLabel::new(self.image(u)?, self.image(v)?))
    }
}

/// The two face maps from tetrahedron `j` (letter `x`) to tetrahedron `j+1`.
/// The first map always starts from face (1,2,4), the second from (1,3,4).
pub fn layering_maps(x: Letter) -> [FaceMap; 2] {
    match x {
        Letter::L => [
            FaceMap { from: [1, 2, 4], to: [3, 2, 4] },
            FaceMap { from: [1, 3, 4], to: [1, 3, 2] },
        ],
        Letter::R => [
            FaceMap { from: [1, 2, 4], to: [1, 2, 3] },
            FaceMap { from: [1, 3, 4], to: [2, 3, 4] },
        ],
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Gluing {
    pub lower: usize,
    pub upper: usize,
    pub layering: Letter,
    pub maps: [FaceMap; 2],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonodromyTriangulation {
    word: FlipWord,
    gluings: Vec<Gluing>,
}

impl MonodromyTriangulation {
    pub fn m(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &FlipWord {
        &self.word
    }

    pub fn types(&self) -> &[Letter] {
        self.word.letters()
    }

    pub fn gluings(&self) -> &[Gluing] {
        &self.gluings
    }
}

pub fn build_triangulation(w: &FlipWord) -> MonodromyTriangulation {
    let m = w.len();
    let gluings = (0..m)
        .map(|j| Gluing {
            lower: j,
            upper: (j + 1) % m,
            layering: w.at(j),
            maps: layering_maps(w.at(j)),
        })
        .collect();
    MonodromyTriangulation {
        word: w.clone(),
        gluings,
    }
}

/// An edge class of the triangulation, described by its ribbon.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeClassT {
    pub bottom: usize,
    pub n: usize,
    #[serde(skip)]
    pub kind: Letter,
    pub valence: usize,
    pub members: Vec<(usize, EdgeLabel)>,
}

/// One edge class per tetrahedron, read off from the cyclic word.
///
/// Members are listed around the edge: the bottom's 14, one side of the
/// ribbon upwards, the top's 23, then the other side downwards.
pub fn edge_classes(t: &MonodromyTriangulation) -> Vec<EdgeClassT> {
    let m = t.m();
    let gaps = t.word.gaps();
    (0..m)
        .map(|j| {
            let x = t.word.at(j);
            let n = gaps[j];
            let (up, down) = match x {
                Letter::L => (EdgeLabel(3, 4), EdgeLabel(1, 2)),
                Letter::R => (EdgeLabel(1, 3), EdgeLabel(2, 4)),
            };
            let mut members = vec![(j, EdgeLabel(1, 4))];
            members.extend((1..=n + 1).map(|k| ((j + k) % m, up)));
            members.push(((j + n + 2) % m, EdgeLabel(2, 3)));
            members.extend((1..=n + 1).rev().map(|k| ((j + k) % m, down)));
            EdgeClassT {
                bottom: j,
                n,
                kind: x,
                valence: members.len(),
                members,
            }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RibbonRole {
    Bottom,
    Loop,
    Top,
}

/// The tetrahedra around the edge class whose bottom is tetrahedron `j`.
pub fn ribbon(t: &MonodromyTriangulation, j: usize) -> Vec<(usize, RibbonRole)> {
    let m = t.m();
    let n = t.word.gaps()[j % m];
    (0..n + 3)
        .map(|k| {
            let role = match k {
                0 => RibbonRole::Bottom,
                k if k == n + 2 => RibbonRole::Top,
                _ => RibbonRole::Loop,
            };
            ((j + k) % m, role)
        })
        .collect()
}

#[derive(Serialize)]
struct TriangulationJson<'a> {
    schema: u32,
    word: &'a FlipWord,
    m: usize,
    types: &'a [Letter],
    edges: Vec<EdgeClassT>,
}

pub fn to_json(t: &MonodromyTriangulation) -> serde_json::Value {
    serde_json::to_value(TriangulationJson {
        schema: 1,
        word: &t.word,
        m: t.m(),
        types: t.types(),
        edges: edge_classes(t),
    })
    .expect("serializable")
}
