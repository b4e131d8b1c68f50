//! Heisenberg-model geometry over Q(ω): stereographic projection, the Cartan
//! triple product, the four standard vertices, the face-pairing matrices
//! G1..G4, and the symbolic model cells.

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::exactnum::{herm, ExactError, Mat3, ProjVector, QOmega, Q};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("vector is not null for the Hermitian form")]
    NotNull,
    #[error("two of the three points coincide")]
    DegenerateTriple,
    #[error("height coordinate must be purely imaginary")]
    NotImaginary,
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// A point of the one-point compactified Heisenberg group. The height `t`
/// is stored as `it = i·t`, which keeps every constant inside Q(ω).
#[derive(Debug, Clone, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum HeisPoint {
    Infinity,
    Finite { z: QOmega, it: QOmega },
}

impl HeisPoint {
    pub fn new(z: QOmega, it: QOmega) -> Result<Self, GeomError> {
        if it.conj() != -&it {
            return Err(GeomError::NotImaginary);
        }
        Ok(HeisPoint::Finite { z, it })
    }

    /// The point `(z, t·√3)` with rational `t`, whose stored height is
    /// `t·i√3`.
    pub fn with_sqrt3_height(z: QOmega, t: Q) -> Self {
        HeisPoint::Finite {
            z,
            it: QOmega::i_sqrt3().scale(&t),
        }
    }

    pub fn z(&self) -> Option<&QOmega> {
        match self {
            HeisPoint::Finite { z, .. } => Some(z),
            HeisPoint::Infinity => None,
        }
    }
}

/// Inverse stereographic projection: `(z, it) ↦ ((it - |z|²)/2, z, 1)`.
pub fn lambda_inv(p: &HeisPoint) -> ProjVector {
    match p {
        HeisPoint::Infinity => ProjVector::from_ints([(1, 0), (0, 0), (0, 0)]),
        HeisPoint::Finite { z, it } => {
            let half = Q::new(1.into(), 2.into());
            let x = (it - &QOmega::from_rational(z.norm())).scale(&half);
            ProjVector::new([x, z.clone(), QOmega::one()]).expect("last coordinate is 1")
        }
    }
}

/// Stereographic projection of a null vector.
pub fn lambda(v: &ProjVector) -> Result<HeisPoint, GeomError> {
    if !v.is_null() {
        return Err(GeomError::NotNull);
    }
    let [x, y, w] = v.coords();
    if w.is_zero() {
        return Ok(HeisPoint::Infinity);
    }
    let winv = w.inv()?;
    let x = x * &winv;
    let z = y * &winv;
    let it = &x.scale(&Q::from_integer(2.into())) + &QOmega::from_rational(z.norm());
    Ok(HeisPoint::Finite { z, it })
}

/// Lifts of the four standard vertices, indexed 1..=4.
pub fn vertex_lift(i: u8) -> ProjVector {
    match i {
        1 => ProjVector::from_ints([(-1, -1), (1, 0), (1, 0)]),
        2 => ProjVector::from_ints([(-1, -1), (0, -1), (1, 0)]),
        3 => ProjVector::from_ints([(0, 0), (0, 0), (1, 0)]),
        4 => ProjVector::from_ints([(1, 0), (0, 0), (0, 0)]),
        _ => panic!("vertex index {i} out of range"),
    }
}

/// `η = -⟨a,b⟩⟨b,c⟩⟨c,a⟩`.
pub fn cartan_triple(a: &ProjVector, b: &ProjVector, c: &ProjVector) -> Result<QOmega, GeomError> {
    let ab = herm(a, b);
    let bc = herm(b, c);
    let ca = herm(c, a);
    if ab.is_zero() || bc.is_zero() || ca.is_zero() {
        return Err(GeomError::DegenerateTriple);
    }
    Ok(-(&(&ab * &bc) * &ca))
}

/// With this Hermitian form, three points lie on a common C-circle exactly
/// when η is purely imaginary (a Cartan angle of ±π/2).
pub fn is_general_position(eta: &QOmega) -> bool {
    // Re(a + bω) = a - b/2.
    eta.a() * Q::from_integer(2.into()) != *eta.b()
}

/// True iff `arg η = k·π/3`, using `e^{iπ/3} = -ω`.
pub fn angle_is(eta: &QOmega, sextant: i64) -> bool {
    let rot = (-QOmega::omega()).pow(sextant.rem_euclid(6)).expect("nonzero");
    eta.checked_div(&rot).map(|q| q.is_positive_real()).unwrap_or(false)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GLabel {
    G1,
    G2,
    G3,
    G4,
}

pub const ALL_G: [GLabel; 4] = [GLabel::G1, GLabel::G2, GLabel::G3, GLabel::G4];

impl fmt::Display for GLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl Serialize for GLabel {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// The face-pairing matrices. Entries are `(a, b)` meaning `a + bω`;
/// `ω̄ = -1 - ω`.
pub fn g_matrix(label: GLabel) -> Mat3 {
    match label {
        GLabel::G1 => Mat3::from_int_pairs([
            [(0, -1), (0, 0), (0, 0)],
            [(1, 0), (1, 0), (0, 0)],
            [(1, 1), (0, 1), (0, -1)],
        ]),
        GLabel::G2 => Mat3::from_int_pairs([
            [(1, 0), (1, 0), (0, 1)],
            [(0, 0), (1, 1), (-1, -1)],
            [(0, 0), (0, 0), (1, 0)],
        ]),
        GLabel::G3 => Mat3::from_int_pairs([
            [(1, 0), (0, 0), (0, 0)],
            [(0, 0), (0, -1), (0, 0)],
            [(0, 0), (0, 0), (1, 0)],
        ]),
        GLabel::G4 => Mat3::from_int_pairs([
            [(0, 0), (0, 0), (0, -1)],
            [(0, 0), (1, 1), (0, 0)],
            [(0, -1), (0, 0), (2, 1)],
        ]),
    }
}

/// The vertex correspondences `(from, to)` each matrix realises.
pub fn vertex_mappings(label: GLabel) -> [(u8, u8); 3] {
    match label {
        GLabel::G1 => [(4, 2), (3, 3), (1, 1)],
        GLabel::G2 => [(4, 4), (1, 3), (2, 2)],
        GLabel::G3 => [(4, 4), (3, 3), (1, 2)],
        GLabel::G4 => [(4, 3), (1, 1), (2, 2)],
    }
}

pub fn apply(g: &Mat3, v: &ProjVector) -> Result<ProjVector, ExactError> {
    ProjVector::new(g.apply(v.coords()))
}

/// The action on the Heisenberg group, conjugated through stereographic
/// projection.
pub fn heis_apply(g: &Mat3, p: &HeisPoint) -> Result<HeisPoint, GeomError> {
    lambda(&apply(g, &lambda_inv(p))?)
}

/// Least `k ≤ max` with `gᵏ` projectively the identity.
pub fn projective_order(g: &Mat3, max: u32) -> Option<u32> {
    let mut acc = g.clone();
    for k in 1..=max {
        if acc.is_projective_identity() {
            return Some(k);
        }
        acc = &acc * g;
    }
    None
}

/// Horizontal parts of the rotations realised by G2 and G3.
pub fn z_action(label: GLabel, z: &QOmega) -> Option<QOmega> {
    match label {
        GLabel::G2 => Some(-(&QOmega::omega_bar() * &(z - &QOmega::one()))),
        GLabel::G3 => Some(-(&QOmega::omega() * z)),
        _ => None,
    }
}

/// For a matrix fixing the point at infinity and preserving the horizontal
/// projection, the affine map `z ↦ αz + β` it induces on the plane.
pub fn horizontal_affine(g: &Mat3) -> Option<(QOmega, QOmega)> {
    let e = g.entries();
    if !(e[1][0].is_zero() && e[2][0].is_zero() && e[2][1].is_zero()) {
        return None;
    }
    let d = e[2][2].inv().ok()?;
    Some((&e[1][1] * &d, &e[1][2] * &d))
}

/// `√3 · e^{iπd/6}` for odd `d`, an element of Q(ω) pointing along the
/// direction with index `d`.
pub fn scaled_direction(d: i64) -> QOmega {
    assert!(d.rem_euclid(2) == 1, "direction index must be odd");
    let base = QOmega::from_ints(2, 1);
    let rot = (-QOmega::omega()).pow((d + 1).div_euclid(2)).expect("nonzero");
    &base * &rot
}

/// A bigon projected to the plane: the ray from `base` in direction
/// `e^{iπ·direction/6}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BigonDescriptor {
    pub base: QOmega,
    pub direction: i64,
}

impl BigonDescriptor {
    /// Image under `z ↦ αz + β` with `α` a unit.
    pub fn transform(&self, alpha: &QOmega, beta: &QOmega) -> Option<BigonDescriptor> {
        let base = &(alpha * &self.base) + beta;
        let dir = alpha * &scaled_direction(self.direction);
        (0..12)
            .map(|k| 2 * k - 11)
            .find(|&d| scaled_direction(d) == dir)
            .map(|d| BigonDescriptor {
                base,
                direction: normalize_direction(d),
            })
    }
}

fn normalize_direction(d: i64) -> i64 {
    // Represent directions by odd indices in -11..=11, modulo 12.
    let r = d.rem_euclid(12);
    if r > 6 {
        r - 12
    } else {
        r
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModelTag {
    TA,
    TB,
    Slab(u8),
}

impl ModelTag {
    pub fn slab(k: usize) -> Self {
        ModelTag::Slab((k % 6) as u8)
    }
}

impl fmt::Display for ModelTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelTag::TA => write!(f, "TA"),
            ModelTag::TB => write!(f, "TB"),
            ModelTag::Slab(k) => write!(f, "Slab({k})"),
        }
    }
}

impl Serialize for ModelTag {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// The symbolic description of a model cell.
#[derive(Debug, Clone, Serialize)]
pub struct ModelCell {
    pub tag: ModelTag,
    pub lifts: Vec<(u8, ProjVector)>,
    pub bigons: Option<[BigonDescriptor; 2]>,
}

pub fn model_cell(tag: ModelTag) -> ModelCell {
    let verts: &[u8] = match tag {
        ModelTag::Slab(_) => &[1, 2, 4],
        _ => &[1, 2, 3, 4],
    };
    let bigons = match tag {
        ModelTag::Slab(k) => Some([
            BigonDescriptor {
                base: QOmega::one(),
                direction: -1,
            },
            BigonDescriptor {
                base: -QOmega::omega(),
                direction: normalize_direction(1 - 2 * k as i64),
            },
        ]),
        _ => None,
    };
    ModelCell {
        tag,
        lifts: verts.iter().map(|&v| (v, vertex_lift(v))).collect(),
        bigons,
    }
}

#[derive(Serialize)]
struct ConstantsJson {
    schema: u32,
    vertices: Vec<(u8, ProjVector)>,
    matrices: Vec<(GLabel, Mat3)>,
}

/// Vertex lifts and matrices, for external auditing.
pub fn constants_json() -> serde_json::Value {
    serde_json::to_value(ConstantsJson {
        schema: 1,
        vertices: (1..=4).map(|i| (i, vertex_lift(i))).collect(),
        matrices: ALL_G.iter().map(|&g| (g, g_matrix(g))).collect(),
    })
    .expect("serializable")
}
