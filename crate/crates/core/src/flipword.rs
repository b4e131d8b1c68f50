//! Cyclic words over the flips `R` and `L`, their monodromy matrices in
//! SL(2,Z), and the reverse conversion by Euclidean descent.
//!
//! Products are taken left to right: the first letter is the leftmost factor.

use std::cmp::Ordering;
use std::fmt;

use num::{BigInt, Integer, One, Signed, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("empty word")]
    Empty,
    #[error("unexpected character `{ch}` at position {pos}; only R and L are allowed")]
    BadCharacter { ch: char, pos: usize },
    #[error("word has no R; the bundle is not hyperbolic")]
    MissingR,
    #[error("word has no L; the bundle is not hyperbolic")]
    MissingL,
    #[error("matrix does not have determinant 1")]
    NotUnimodular,
    #[error("matrix with trace {trace} is not hyperbolic")]
    NotHyperbolic { trace: BigInt },
}

/// A flip letter. `L` sorts before `R`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    L,
    R,
}

impl Letter {
    pub fn matrix(self) -> Sl2z {
        match self {
            Letter::R => Sl2z::from_i64(1, 1, 0, 1),
            Letter::L => Sl2z::from_i64(1, 0, 1, 1),
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::R => 'R',
            Letter::L => 'L',
        }
    }

    pub fn other(self) -> Letter {
        match self {
            Letter::R => Letter::L,
            Letter::L => Letter::R,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

impl Serialize for Letter {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_char(self.as_char())
    }
}

/// An element of SL(2,Z), stored as `(a b; c d)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Sl2z {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl Sl2z {
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Result<Self, WordError> {
        if &a * &d - &b * &c != BigInt::one() {
            return Err(WordError::NotUnimodular);
        }
        Ok(Sl2z { a, b, c, d })
    }

    /// Panics if the determinant is not 1; meant for literals.
    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::new(a.into(), b.into(), c.into(), d.into()).expect("determinant 1")
    }

    pub fn identity() -> Self {
        Self::from_i64(1, 0, 0, 1)
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    pub fn inverse(&self) -> Self {
        Sl2z {
            a: self.d.clone(),
            b: -&self.b,
            c: -&self.c,
            d: self.a.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        Sl2z {
            a: -&self.a,
            b: -&self.b,
            c: -&self.c,
            d: -&self.d,
        }
    }

    pub fn mul(&self, o: &Sl2z) -> Sl2z {
        Sl2z {
            a: &self.a * &o.a + &self.b * &o.c,
            b: &self.a * &o.b + &self.b * &o.d,
            c: &self.c * &o.a + &self.d * &o.c,
            d: &self.c * &o.b + &self.d * &o.d,
        }
    }

    /// `x · self · x⁻¹`.
    pub fn conjugate_by(&self, x: &Sl2z) -> Sl2z {
        x.mul(self).mul(&x.inverse())
    }

    pub fn entries(&self) -> [BigInt; 4] {
        [self.a.clone(), self.b.clone(), self.c.clone(), self.d.clone()]
    }
}

impl fmt::Display for Sl2z {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {}; {} {})", self.a, self.b, self.c, self.d)
    }
}

impl Serialize for Sl2z {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows = [
            [self.a.to_string(), self.b.to_string()],
            [self.c.to_string(), self.d.to_string()],
        ];
        rows.serialize(s)
    }
}

/// An admissible cyclic flip word: length at least two, both letters present.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FlipWord {
    letters: Vec<Letter>,
}

impl FlipWord {
    pub fn from_letters(letters: Vec<Letter>) -> Result<Self, WordError> {
        if letters.is_empty() {
            return Err(WordError::Empty);
        }
        if !letters.contains(&Letter::R) {
            return Err(WordError::MissingR);
        }
        if !letters.contains(&Letter::L) {
            return Err(WordError::MissingL);
        }
        Ok(FlipWord { letters })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letter at a cyclic index.
    pub fn at(&self, j: usize) -> Letter {
        self.letters[j % self.letters.len()]
    }

    pub fn count(&self, l: Letter) -> usize {
        self.letters.iter().filter(|&&x| x == l).count()
    }

    /// The word read from position `k` onwards, cyclically.
    pub fn rotate(&self, k: usize) -> FlipWord {
        let mut letters = self.letters.clone();
        letters.rotate_left(k % self.len());
        FlipWord { letters }
    }

    /// For each position j, the number of letters following j (cyclically)
    /// that differ from letter j before the next occurrence of letter j.
    pub fn gaps(&self) -> Vec<usize> {
        (0..self.len())
            .map(|j| {
                let x = self.at(j);
                (1..).take_while(|&k| self.at(j + k) != x).count()
            })
            .collect()
    }

    /// The lexicographically largest rotation, with `R > L`. It begins with
    /// an R-run and ends with an L.
    pub fn normalized(&self) -> FlipWord {
        (0..self.len())
            .map(|k| self.rotate(k))
            .max()
            .expect("nonempty word")
    }

    /// Rotation index that produces [`FlipWord::normalized`].
    pub fn normalizing_rotation(&self) -> usize {
        let mut best = 0;
        for k in 1..self.len() {
            if cmp_rotations(&self.letters, k, best) == Ordering::Greater {
                best = k;
            }
        }
        best
    }

    pub fn cyclic_equal(&self, other: &FlipWord) -> bool {
        self.len() == other.len() && (0..self.len()).any(|k| &self.rotate(k) == other)
    }

    pub fn exponents(&self) -> Exponents {
        let mut runs: Vec<(Letter, usize)> = Vec::new();
        for &l in &self.letters {
            match runs.last_mut() {
                Some((x, n)) if *x == l => *n += 1,
                _ => runs.push((l, 1)),
            }
        }
        let first = runs[0].0;
        let trailing = if runs.len() % 2 == 1 {
            runs.pop().map(|(_, n)| n).unwrap_or(0)
        } else {
            0
        };
        let pairs = runs.chunks(2).map(|p| (p[0].1, p[1].1)).collect();
        Exponents {
            form: if first == Letter::R {
                ExponentForm::RFirst
            } else {
                ExponentForm::LFirst
            },
            pairs,
            trailing,
        }
    }
}

fn cmp_rotations(w: &[Letter], i: usize, j: usize) -> Ordering {
    let n = w.len();
    (0..n)
        .map(|k| w[(i + k) % n].cmp(&w[(j + k) % n]))
        .find(|o| *o != Ordering::Equal)
        .unwrap_or(Ordering::Equal)
}

impl fmt::Display for FlipWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl Serialize for FlipWord {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Which letter the exponent form starts with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ExponentForm {
    RFirst,
    LFirst,
}

/// `X^{a_0} Y^{b_0} … X^{a_k} Y^{b_k} X^{c}` with `X = R` for the R-first form
/// and `X = L` for the mirrored form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Exponents {
    pub form: ExponentForm,
    pub pairs: Vec<(usize, usize)>,
    pub trailing: usize,
}

impl Exponents {
    pub fn reassemble(&self) -> Vec<Letter> {
        let (x, y) = match self.form {
            ExponentForm::RFirst => (Letter::R, Letter::L),
            ExponentForm::LFirst => (Letter::L, Letter::R),
        };
        let mut out = Vec::new();
        for &(a, b) in &self.pairs {
            out.extend(std::iter::repeat_n(x, a));
            out.extend(std::iter::repeat_n(y, b));
        }
        out.extend(std::iter::repeat_n(x, self.trailing));
        out
    }
}

pub fn parse_word(text: &str) -> Result<FlipWord, WordError> {
    if text.is_empty() {
        return Err(WordError::Empty);
    }
    let letters = text
        .chars()
        .enumerate()
        .map(|(pos, ch)| match ch {
            'R' => Ok(Letter::R),
            'L' => Ok(Letter::L),
            _ => Err(WordError::BadCharacter { ch, pos }),
        })
        .collect::<Result<Vec<_>, _>>()?;
    FlipWord::from_letters(letters)
}

/// Left-to-right product of the letter matrices; accepts any letter slice.
pub fn letters_to_matrix(letters: &[Letter]) -> Sl2z {
    letters
        .iter()
        .fold(Sl2z::identity(), |acc, l| acc.mul(&l.matrix()))
}

pub fn word_to_matrix(w: &FlipWord) -> Sl2z {
    letters_to_matrix(w.letters())
}

/// Output of [`matrix_to_word`]: `word_to_matrix(word) = C·(±f)·C⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub word: FlipWord,
    pub conjugator: Sl2z,
    pub negated: bool,
}

/// `floor((p + s·√disc) / q)` for a non-square `disc > 0` and `q ≠ 0`.
fn floor_quadratic(p: &BigInt, s: i8, disc: &BigInt, q: &BigInt) -> BigInt {
    let (p, s, q) = if q.is_negative() {
        (-p, -s, -q)
    } else {
        (p.clone(), s, q.clone())
    };
    let r = disc.sqrt();
    if s > 0 {
        (p + r).div_floor(&q)
    } else {
        (p - r - BigInt::one()).div_floor(&q)
    }
}

/// Finds a cyclic word whose product is conjugate to `f` (or to `-f` when
/// the trace is negative).
///
/// The matrix is conjugated until both off-diagonal entries are positive,
/// at which point all entries are non-negative and the word is read off by
/// peeling R and L factors from the right.
pub fn matrix_to_word(f: &Sl2z) -> Result<Decomposition, WordError> {
    if &f.a * &f.d - &f.b * &f.c != BigInt::one() {
        return Err(WordError::NotUnimodular);
    }
    let negated = f.trace().is_negative();
    let mut m = if negated { f.neg() } else { f.clone() };
    let tr = m.trace();
    if &tr * &tr <= BigInt::from(4) {
        return Err(WordError::NotHyperbolic { trace: f.trace() });
    }
    let disc = &tr * &tr - 4;
    let mut conj = Sl2z::identity();
    let step = |m: &mut Sl2z, x: Sl2z, conj: &mut Sl2z| {
        *m = m.conjugate_by(&x);
        *conj = x.mul(conj);
    };
    loop {
        let bc = &m.b * &m.c;
        if bc.is_positive() {
            if m.b.is_negative() {
                step(&mut m, Sl2z::from_i64(0, -1, 1, 0), &mut conj);
            }
            break;
        }
        // Fixed points of z ↦ (az + b)/(cz + d) are ((a - d) ± √disc) / 2c.
        let p = &m.a - &m.d;
        let q = &m.c * 2;
        let hi = floor_quadratic(&p, 1, &disc, &q);
        let lo = floor_quadratic(&p, -1, &disc, &q);
        let (small, large) = if hi < lo { (hi, lo) } else { (lo, hi) };
        let shift = Sl2z::new(BigInt::one(), -&large, BigInt::zero(), BigInt::one())
            .expect("unipotent");
        step(&mut m, shift, &mut conj);
        if small != large {
            continue;
        }
        step(&mut m, Sl2z::from_i64(1, 0, -1, 1), &mut conj);
    }
    let mut rev = Vec::new();
    while m != Sl2z::identity() {
        if m.b >= m.a && m.d >= m.c {
            rev.push(Letter::R);
            m = Sl2z {
                b: &m.b - &m.a,
                d: &m.d - &m.c,
                ..m
            };
        } else if m.a >= m.b && m.c >= m.d {
            rev.push(Letter::L);
            m = Sl2z {
                a: &m.a - &m.b,
                c: &m.c - &m.d,
                ..m
            };
        } else {
            unreachable!("non-negative SL(2,Z) matrix always peels");
        }
    }
    rev.reverse();
    let word = FlipWord::from_letters(rev).expect("hyperbolic product has both letters");
    let k = word.normalizing_rotation();
    let prefix = letters_to_matrix(&word.letters()[..k]);
    Ok(Decomposition {
        word: word.rotate(k),
        conjugator: prefix.inverse().mul(&conj),
        negated,
    })
}

/// All admissible words of length `2..=max_len`, one per rotation class,
/// in normalized form and sorted lexicographically by their text.
pub fn canonical_words(max_len: usize) -> Vec<FlipWord> {
    let mut out = Vec::new();
    for len in 2..=max_len {
        for bits in 0u64..(1u64 << len) {
            let letters: Vec<Letter> = (0..len)
                .map(|i| if bits >> (len - 1 - i) & 1 == 1 { Letter::R } else { Letter::L })
                .collect();
            let Ok(w) = FlipWord::from_letters(letters) else {
                continue;
            };
            if w.normalized() == w {
                out.push(w);
            }
        }
    }
    out.sort_by_key(|w| w.to_string());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_examples() {
        assert_eq!(parse_word("RL").unwrap().letters(), &[Letter::R, Letter::L]);
        assert_eq!(parse_word("RRRR"), Err(WordError::MissingL));
        assert_eq!(parse_word("LL"), Err(WordError::MissingR));
        assert_eq!(
            parse_word("RXL"),
            Err(WordError::BadCharacter { ch: 'X', pos: 1 })
        );
        assert_eq!(parse_word(""), Err(WordError::Empty));
    }

    #[test]
    fn matrix_examples() {
        assert_eq!(letters_to_matrix(&[Letter::R]), Sl2z::from_i64(1, 1, 0, 1));
        assert_eq!(word_to_matrix(&parse_word("RL").unwrap()), Sl2z::from_i64(2, 1, 1, 1));
        assert_eq!(word_to_matrix(&parse_word("RRL").unwrap()), Sl2z::from_i64(3, 2, 1, 1));
    }

    #[test]
    fn decomposition_examples() {
        let rl = parse_word("RL").unwrap();
        let d = matrix_to_word(&Sl2z::from_i64(2, 1, 1, 1)).unwrap();
        assert!(d.word.cyclic_equal(&rl));
        assert!(!d.negated);
        assert_eq!(
            matrix_to_word(&Sl2z::from_i64(1, 1, 0, 1)),
            Err(WordError::NotHyperbolic { trace: 2.into() })
        );
        let d = matrix_to_word(&Sl2z::from_i64(-2, -1, -1, -1)).unwrap();
        assert_eq!(d.word, rl);
        assert!(d.negated);
        assert_eq!(d.conjugator, Sl2z::identity());
    }

    #[test]
    fn decomposition_of_mixed_sign_matrix() {
        // (0 -1; 1 3) has trace 3 and is conjugate to RL.
        let f = Sl2z::from_i64(0, -1, 1, 3);
        let d = matrix_to_word(&f).unwrap();
        assert_eq!(d.word.to_string(), "RL");
        assert_eq!(word_to_matrix(&d.word), f.conjugate_by(&d.conjugator));
    }

    #[test]
    fn exponent_examples() {
        let e = parse_word("RL").unwrap().exponents();
        assert_eq!((e.form, e.pairs.clone(), e.trailing), (ExponentForm::RFirst, vec![(1, 1)], 0));
        let e = parse_word("RRLRL").unwrap().exponents();
        assert_eq!(e.pairs, vec![(2, 1), (1, 1)]);
        assert_eq!(e.trailing, 0);
        let e = parse_word("RLR").unwrap().exponents();
        assert_eq!((e.pairs.clone(), e.trailing), (vec![(1, 1)], 1));
        let e = parse_word("LLRL").unwrap().exponents();
        assert_eq!((e.form, e.pairs.clone(), e.trailing), (ExponentForm::LFirst, vec![(2, 1)], 1));
        assert!(parse_word("RL").unwrap().cyclic_equal(&parse_word("LR").unwrap()));
        assert!(!parse_word("RRL").unwrap().cyclic_equal(&parse_word("RLL").unwrap()));
    }

    #[test]
    fn gaps_of_rrl() {
        assert_eq!(parse_word("RRL").unwrap().gaps(), vec![0, 1, 2]);
        assert_eq!(parse_word("RL").unwrap().gaps(), vec![1, 1]);
    }

    #[test]
    fn canonical_class_counts() {
        // Binary necklaces of length n minus the two constant ones.
        let per_len = [1, 2, 4, 6, 12, 18, 34, 58, 106];
        let words = canonical_words(10);
        for (len, &expected) in (2..=10).zip(per_len.iter()) {
            assert_eq!(words.iter().filter(|w| w.len() == len).count(), expected);
        }
        assert_eq!(words.len(), 241);
    }

    fn word(max: usize) -> impl Strategy<Value = FlipWord> {
        proptest::collection::vec(prop_oneof![Just(Letter::R), Just(Letter::L)], 2..=max)
            .prop_filter_map("admissible", |v| FlipWord::from_letters(v).ok())
    }

    proptest! {
        #[test]
        fn round_trip(w in word(20)) {
            let d = matrix_to_word(&word_to_matrix(&w)).unwrap();
            prop_assert!(d.word.cyclic_equal(&w));
            prop_assert!(!d.negated);
        }

        #[test]
        fn conjugator_is_certified(w in word(14), k in 0usize..14, s in 0usize..3) {
            // Scramble the product by a conjugation before decomposing.
            let x = [Sl2z::from_i64(0, -1, 1, 0), Sl2z::from_i64(2, 1, 1, 1), Sl2z::from_i64(1, -3, 0, 1)];
            let f = word_to_matrix(&w.rotate(k)).conjugate_by(&x[s]);
            let d = matrix_to_word(&f).unwrap();
            prop_assert!(d.word.cyclic_equal(&w));
            prop_assert_eq!(word_to_matrix(&d.word), f.conjugate_by(&d.conjugator));
            prop_assert_eq!(d.word.normalized(), d.word.clone());
        }

        #[test]
        fn trace_exceeds_two(w in word(20)) {
            prop_assert!(word_to_matrix(&w).trace() > BigInt::from(2));
        }

        #[test]
        fn rotation_conjugates(w in word(16), k in 0usize..16) {
            let k = k % w.len();
            let p = letters_to_matrix(&w.letters()[..k]);
            prop_assert_eq!(word_to_matrix(&w.rotate(k)), word_to_matrix(&w).conjugate_by(&p.inverse()));
        }

        #[test]
        fn exponents_reassemble(w in word(20)) {
            prop_assert_eq!(w.exponents().reassemble(), w.letters().to_vec());
        }

        #[test]
        fn normalized_shape(w in word(20)) {
            let n = w.normalized();
            prop_assert_eq!(n.at(0), Letter::R);
            prop_assert_eq!(n.at(n.len() - 1), Letter::L);
            prop_assert!(n.cyclic_equal(&w));
        }
    }
}
