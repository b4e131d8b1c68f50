//! Exact arithmetic in the field Q(ω), ω = -(1 + i√3)/2, and 3×3 matrices
//! over it together with the Hermitian form of signature (2,1).
//!
//! Elements are stored as `a + bω` with rational `a`, `b`. The only reduction
//! rule needed is `ω² = -1 - ω`. Complex conjugation sends `ω` to `ω̄ = -1 - ω`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num::{BigInt, BigRational, Integer, One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

pub type Q = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is singular")]
    Singular,
    #[error("projective vector has all coordinates zero")]
    ZeroVector,
    #[error("cannot parse `{0}` as an element of Q(ω)")]
    Parse(String),
}

fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// An element `a + bω` of Q(ω).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QOmega {
    a: Q,
    b: Q,
}

impl QOmega {
    pub fn new(a: Q, b: Q) -> Self {
        QOmega { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        QOmega { a: q(a), b: q(b) }
    }

    pub fn from_rational(a: Q) -> Self {
        QOmega { a, b: Q::zero() }
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0)
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0)
    }

    pub fn omega() -> Self {
        Self::from_ints(0, 1)
    }

    pub fn omega_bar() -> Self {
        Self::from_ints(-1, -1)
    }

    /// `i√3`, which equals `-(1 + 2ω)`.
    pub fn i_sqrt3() -> Self {
        Self::from_ints(-1, -2)
    }

    pub fn a(&self) -> &Q {
        &self.a
    }

    pub fn b(&self) -> &Q {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn conj(&self) -> Self {
        QOmega {
            a: &self.a - &self.b,
            b: -&self.b,
        }
    }

    /// `x · conj(x) = a² - ab + b²`, always a non-negative rational.
    pub fn norm(&self) -> Q {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    pub fn inv(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let n = self.norm();
        let c = self.conj();
        Ok(QOmega {
            a: c.a / &n,
            b: c.b / n,
        })
    }

    pub fn checked_div(&self, other: &QOmega) -> Result<Self, ExactError> {
        Ok(self * &other.inv()?)
    }

    pub fn is_real(&self) -> bool {
        self.b.is_zero()
    }

    /// True iff the element is a real number strictly greater than zero.
    pub fn is_positive_real(&self) -> bool {
        self.is_real() && self.a.is_positive()
    }

    pub fn scale(&self, r: &Q) -> Self {
        QOmega {
            a: &self.a * r,
            b: &self.b * r,
        }
    }

    /// Integer power; negative exponents need a nonzero base.
    pub fn pow(&self, e: i64) -> Result<Self, ExactError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = QOmega::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Membership in the Eisenstein integers Z[ω].
    pub fn is_eisenstein_integer(&self) -> bool {
        self.a.is_integer() && self.b.is_integer()
    }

    /// Least common multiple of the two coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.a.denom().lcm(self.b.denom())
    }

    /// Floating-point embedding into the plane, `ω ↦ (-1/2, -√3/2)`.
    pub fn to_complex(&self) -> (f64, f64) {
        let a = rat_to_f64(&self.a);
        let b = rat_to_f64(&self.b);
        (a - b / 2.0, -b * 3f64.sqrt() / 2.0)
    }
}

fn rat_to_f64(r: &Q) -> f64 {
    use num::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

impl Default for QOmega {
    fn default() -> Self {
        QOmega::zero()
    }
}

impl From<i64> for QOmega {
    fn from(n: i64) -> Self {
        QOmega::from_ints(n, 0)
    }
}

impl<'a> Add<&'a QOmega> for &'a QOmega {
    type Output = QOmega;
    fn add(self, o: &QOmega) -> QOmega {
        QOmega {
            a: &self.a + &o.a,
            b: &self.b + &o.b,
        }
    }
}

impl<'a> Sub<&'a QOmega> for &'a QOmega {
    type Output = QOmega;
    fn sub(self, o: &QOmega) -> QOmega {
        QOmega {
            a: &self.a - &o.a,
            b: &self.b - &o.b,
        }
    }
}

impl<'a> Mul<&'a QOmega> for &'a QOmega {
    type Output = QOmega;
    fn mul(self, o: &QOmega) -> QOmega {
        // (a + bω)(c + dω) = ac + (ad + bc)ω + bd(-1 - ω)
        let bd = &self.b * &o.b;
        QOmega {
            a: &self.a * &o.a - &bd,
            b: &self.a * &o.b + &self.b * &o.a - bd,
        }
    }
}

impl Neg for &QOmega {
    type Output = QOmega;
    fn neg(self) -> QOmega {
        QOmega {
            a: -&self.a,
            b: -&self.b,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<QOmega> for QOmega {
            type Output = QOmega;
            fn $m(self, o: QOmega) -> QOmega {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a QOmega> for QOmega {
            type Output = QOmega;
            fn $m(self, o: &QOmega) -> QOmega {
                (&self).$m(o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for QOmega {
    type Output = QOmega;
    fn neg(self) -> QOmega {
        -&self
    }
}

fn fmt_rat(r: &Q) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Canonical text form `p/q+r/sω`; integral coefficients drop the `/1`,
/// and a negative ω-coefficient is written with `-` instead of `+`.
impl fmt::Display for QOmega {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.b.is_negative() { '-' } else { '+' };
        write!(f, "{}{}{}ω", fmt_rat(&self.a), sign, fmt_rat(&self.b.abs()))
    }
}

fn parse_rat(s: &str) -> Option<Q> {
    if s.is_empty() {
        return None;
    }
    let r = match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().ok()?;
            let d: BigInt = d.parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Q::new(n, d)
        }
        None => Q::from_integer(s.parse().ok()?),
    };
    Some(r)
}

impl FromStr for QOmega {
    type Err = ExactError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ExactError::Parse(s.to_string());
        let body = s.trim().strip_suffix('ω').ok_or_else(err)?;
        // The separator is the last sign that is not at position 0.
        let pos = body
            .char_indices()
            .skip(1)
            .filter(|(_, c)| *c == '+' || *c == '-')
            .map(|(i, _)| i)
            .last()
            .ok_or_else(err)?;
        let (a, rest) = body.split_at(pos);
        let neg = rest.starts_with('-');
        let a = parse_rat(a).ok_or_else(err)?;
        let mut b = parse_rat(&rest[1..]).ok_or_else(err)?;
        if rest[1..].starts_with(['+', '-']) {
            return Err(err());
        }
        if neg {
            b = -b;
        }
        Ok(QOmega { a, b })
    }
}

impl Serialize for QOmega {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for QOmega {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A 3×3 matrix over Q(ω).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mat3 {
    e: [[QOmega; 3]; 3],
}

impl Mat3 {
    pub fn new(e: [[QOmega; 3]; 3]) -> Self {
        Mat3 { e }
    }

    /// Builds a matrix from `(a, b)` integer pairs meaning `a + bω`.
    pub fn from_int_pairs(p: [[(i64, i64); 3]; 3]) -> Self {
        Mat3 {
            e: p.map(|row| row.map(|(a, b)| QOmega::from_ints(a, b))),
        }
    }

    pub fn zero() -> Self {
        Mat3 {
            e: Default::default(),
        }
    }

    pub fn identity() -> Self {
        Self::diag(QOmega::one(), QOmega::one(), QOmega::one())
    }

    pub fn diag(x: QOmega, y: QOmega, z: QOmega) -> Self {
        let mut m = Self::zero();
        m.e[0][0] = x;
        m.e[1][1] = y;
        m.e[2][2] = z;
        m
    }

    /// The form matrix with ones on the antidiagonal.
    pub fn j_form() -> Self {
        let mut m = Self::zero();
        for i in 0..3 {
            m.e[i][2 - i] = QOmega::one();
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &QOmega {
        &self.e[i][j]
    }

    pub fn entries(&self) -> &[[QOmega; 3]; 3] {
        &self.e
    }

    pub fn scale(&self, s: &QOmega) -> Self {
        Mat3 {
            e: self.e.clone().map(|row| row.map(|x| &x * s)),
        }
    }

    pub fn conj_transpose(&self) -> Self {
        let mut m = Self::zero();
        for i in 0..3 {
            for j in 0..3 {
                m.e[i][j] = self.e[j][i].conj();
            }
        }
        m
    }

    pub fn det(&self) -> QOmega {
        let e = &self.e;
        let t0 = &e[0][0] * &(&(&e[1][1] * &e[2][2]) - &(&e[1][2] * &e[2][1]));
        let t1 = &e[0][1] * &(&(&e[1][0] * &e[2][2]) - &(&e[1][2] * &e[2][0]));
        let t2 = &e[0][2] * &(&(&e[1][0] * &e[2][1]) - &(&e[1][1] * &e[2][0]));
        &(&t0 - &t1) + &t2
    }

    pub fn adjugate(&self) -> Self {
        let e = &self.e;
        let mut m = Self::zero();
        for i in 0..3 {
            for j in 0..3 {
                let (r0, r1) = other_two(j);
                let (c0, c1) = other_two(i);
                let minor = &(&e[r0][c0] * &e[r1][c1]) - &(&e[r0][c1] * &e[r1][c0]);
                m.e[i][j] = if (i + j) % 2 == 0 { minor } else { -minor };
            }
        }
        m
    }

    pub fn inverse(&self) -> Result<Self, ExactError> {
        let d = self.det();
        if d.is_zero() {
            return Err(ExactError::Singular);
        }
        Ok(self.adjugate().scale(&d.inv()?))
    }

    /// Integer power; negative exponents go through the inverse.
    pub fn pow(&self, e: i64) -> Result<Self, ExactError> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Mat3::identity();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().flatten().all(QOmega::is_zero)
    }

    /// True iff `self = λ·other` for some nonzero λ in Q(ω).
    pub fn projectively_equal(&self, other: &Mat3) -> bool {
        let pivot = other
            .e
            .iter()
            .flatten()
            .zip(self.e.iter().flatten())
            .find(|(b, _)| !b.is_zero());
        let Some((b, a)) = pivot else {
            return false;
        };
        if a.is_zero() {
            return false;
        }
        let lambda = a.checked_div(b).expect("pivot is nonzero");
        self == &other.scale(&lambda)
    }

    pub fn is_projective_identity(&self) -> bool {
        self.projectively_equal(&Mat3::identity())
    }

    /// Returns λ when `Gᴴ J G = λ J` with λ a positive real, else `None`.
    pub fn is_unitary_similitude(&self) -> Option<QOmega> {
        let j = Mat3::j_form();
        let t = &(&self.conj_transpose() * &j) * self;
        let lambda = t.e[0][2].clone();
        if !lambda.is_positive_real() {
            return None;
        }
        (t == j.scale(&lambda)).then_some(lambda)
    }

    /// Multiplies by the least common multiple of all coefficient
    /// denominators; the result has every entry in Z[ω].
    pub fn clear_denominators(&self) -> (BigInt, Mat3) {
        let l = self
            .e
            .iter()
            .flatten()
            .fold(BigInt::one(), |acc, x| acc.lcm(&x.denominator_lcm()));
        let s = QOmega::from_rational(Q::from_integer(l.clone()));
        (l, self.scale(&s))
    }

    pub fn is_eisenstein_integral(&self) -> bool {
        self.e.iter().flatten().all(QOmega::is_eisenstein_integer)
    }

    pub fn apply(&self, v: &[QOmega; 3]) -> [QOmega; 3] {
        std::array::from_fn(|i| {
            (0..3).fold(QOmega::zero(), |acc, k| &acc + &(&self.e[i][k] * &v[k]))
        })
    }
}

fn other_two(i: usize) -> (usize, usize) {
    match i {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}

impl<'a> Mul<&'a Mat3> for &'a Mat3 {
    type Output = Mat3;
    fn mul(self, o: &Mat3) -> Mat3 {
        let mut m = Mat3::zero();
        for i in 0..3 {
            for j in 0..3 {
                m.e[i][j] = (0..3).fold(QOmega::zero(), |acc, k| &acc + &(&self.e[i][k] * &o.e[k][j]));
            }
        }
        m
    }
}

impl Mul for Mat3 {
    type Output = Mat3;
    fn mul(self, o: Mat3) -> Mat3 {
        &self * &o
    }
}

impl Serialize for Mat3 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.e.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Mat3 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(Mat3 {
            e: <[[QOmega; 3]; 3]>::deserialize(d)?,
        })
    }
}

impl fmt::Display for Mat3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.e.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[{}, {}, {}]", row[0], row[1], row[2])?;
        }
        Ok(())
    }
}

/// A point of CP², represented by a nonzero lift in Q(ω)³.
#[derive(Clone, Debug)]
pub struct ProjVector {
    coords: [QOmega; 3],
}

impl ProjVector {
    pub fn new(coords: [QOmega; 3]) -> Result<Self, ExactError> {
        if coords.iter().all(QOmega::is_zero) {
            return Err(ExactError::ZeroVector);
        }
        Ok(ProjVector { coords })
    }

    pub fn from_ints(c: [(i64, i64); 3]) -> Self {
        Self::new(c.map(|(a, b)| QOmega::from_ints(a, b))).expect("nonzero literal")
    }

    pub fn coords(&self) -> &[QOmega; 3] {
        &self.coords
    }

    pub fn scale(&self, s: &QOmega) -> Result<Self, ExactError> {
        Self::new(self.coords.clone().map(|x| &x * s))
    }

    pub fn is_null(&self) -> bool {
        herm(self, self).is_zero()
    }
}

impl PartialEq for ProjVector {
    fn eq(&self, other: &Self) -> bool {
        let (x, y) = (&self.coords, &other.coords);
        // All 2×2 minors vanish iff the lifts are proportional.
        (0..3).all(|i| (i + 1..3).all(|j| &x[i] * &y[j] == &x[j] * &y[i]))
    }
}

impl Eq for ProjVector {}

impl Serialize for ProjVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.coords.serialize(s)
    }
}

/// The Hermitian form `⟨z, w⟩ = w̄ᵗ J z`.
pub fn herm(z: &ProjVector, w: &ProjVector) -> QOmega {
    let (z, w) = (&z.coords, &w.coords);
    (0..3).fold(QOmega::zero(), |acc, i| &acc + &(&w[i].conj() * &z[2 - i]))
}
