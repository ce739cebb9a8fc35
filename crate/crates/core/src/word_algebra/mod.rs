//! Tangle words of degree `n`: sequences of crossing letters `g_i`, `G_i`
//! (the inverse crossing) and hook letters `e_i`, with `1 <= i <= n-1`.
//!
//! Words form a free semigroup under concatenation; the empty sequence is
//! the identity word `1`. Equality is sequence equality — no rewriting is
//! applied implicitly. All rewriting goes through [`Rule`] applications.

mod brauer;
mod rules;
mod script;

pub use brauer::BrauerDiagram;
pub use rules::{
    apply_rule, enumerate_rule_applications, Direction, Rule, RuleCategory, RuleError, RuleTag,
};
pub use script::{expand_derived_rule, verify_move_script, MoveScript, MoveStep, ScriptError};

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Sign of a crossing letter, `+1` or `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Pos, Sign::Neg];

    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn from_i64(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Pos),
            -1 => Some(Sign::Neg),
            _ => None,
        }
    }
}

impl std::ops::Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self.flip()
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:+}", self.as_i8())
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_i8(self.as_i8())
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = i64::deserialize(d)?;
        Sign::from_i64(v).ok_or_else(|| serde::de::Error::custom("sign must be +1 or -1"))
    }
}

/// What a letter does to the strands at its index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LetterKind {
    /// A crossing `g_i` (positive) or `g_i^{-1}` (negative).
    Crossing(Sign),
    /// A pair of hooks `e_i`.
    Hook,
}

/// One generator letter acting on strands `index` and `index + 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub index: usize,
    pub kind: LetterKind,
}

impl Letter {
    pub fn crossing(index: usize, sign: Sign) -> Letter {
        Letter {
            index,
            kind: LetterKind::Crossing(sign),
        }
    }

    pub fn positive(index: usize) -> Letter {
        Letter::crossing(index, Sign::Pos)
    }

    pub fn negative(index: usize) -> Letter {
        Letter::crossing(index, Sign::Neg)
    }

    pub fn hook(index: usize) -> Letter {
        Letter {
            index,
            kind: LetterKind::Hook,
        }
    }

    pub fn is_hook(&self) -> bool {
        matches!(self.kind, LetterKind::Hook)
    }

    /// Crossing sign, `None` for hooks.
    pub fn sign(&self) -> Option<Sign> {
        match self.kind {
            LetterKind::Crossing(s) => Some(s),
            LetterKind::Hook => None,
        }
    }

    /// Parse a single token: `gI`, `GI` or `eI` with a 1-based index.
    pub fn parse_token(tok: &str) -> Result<Letter, WordError> {
        let bad = || WordError::MalformedToken(tok.to_string());
        let mut chars = tok.chars();
        let head = chars.next().ok_or_else(bad)?;
        let rest = chars.as_str();
        if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let index: usize = rest.parse().map_err(|_| bad())?;
        match head {
            'g' => Ok(Letter::positive(index)),
            'G' => Ok(Letter::negative(index)),
            'e' => Ok(Letter::hook(index)),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let head = match self.kind {
            LetterKind::Crossing(Sign::Pos) => 'g',
            LetterKind::Crossing(Sign::Neg) => 'G',
            LetterKind::Hook => 'e',
        };
        write!(f, "{}{}", head, self.index)
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Letter {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Letter {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let tok = String::deserialize(d)?;
        Letter::parse_token(&tok).map_err(serde::de::Error::custom)
    }
}

/// Errors from word construction and parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("malformed token `{0}`")]
    MalformedToken(String),
    #[error("letter index {index} out of range for degree {degree}")]
    IndexOutOfRange { index: usize, degree: usize },
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("degree must be at least 1")]
    ZeroDegree,
}

/// A tangle word: an ordered letter sequence at a fixed degree.
///
/// The empty sequence is the identity word `1`. Every letter index is
/// strictly below the degree; mixed-degree operations are hard errors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    degree: usize,
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(degree: usize, letters: Vec<Letter>) -> Result<Word, WordError> {
        if degree == 0 {
            return Err(WordError::ZeroDegree);
        }
        for l in &letters {
            if l.index == 0 || l.index >= degree {
                return Err(WordError::IndexOutOfRange {
                    index: l.index,
                    degree,
                });
            }
        }
        Ok(Word { degree, letters })
    }

    /// The identity word `1` of the given degree.
    pub fn identity(degree: usize) -> Word {
        Word {
            degree,
            letters: Vec::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
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

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Parse whitespace-separated tokens; the single token `1` is the
    /// identity word.
    pub fn parse(text: &str, degree: usize) -> Result<Word, WordError> {
        if degree == 0 {
            return Err(WordError::ZeroDegree);
        }
        let toks: Vec<&str> = text.split_whitespace().collect();
        if toks == ["1"] {
            return Ok(Word::identity(degree));
        }
        let mut letters = Vec::with_capacity(toks.len());
        for tok in toks {
            letters.push(Letter::parse_token(tok)?);
        }
        Word::new(degree, letters)
    }

    /// Concatenation in the free semigroup; degrees must agree.
    pub fn concat(&self, other: &Word) -> Result<Word, WordError> {
        if self.degree != other.degree {
            return Err(WordError::DegreeMismatch(self.degree, other.degree));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Word {
            degree: self.degree,
            letters,
        })
    }

    /// Replace `count` letters at `at` by `subst`, without validation.
    /// Callers check the pattern first.
    pub(crate) fn splice(&self, at: usize, count: usize, subst: &[Letter]) -> Word {
        let mut letters = Vec::with_capacity(self.letters.len() - count + subst.len());
        letters.extend_from_slice(&self.letters[..at]);
        letters.extend_from_slice(subst);
        letters.extend_from_slice(&self.letters[at + count..]);
        Word {
            degree: self.degree,
            letters,
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} | {}]", self.degree, self)
    }
}

/// The shadow of a word: its endpoint pairing and closed-loop count.
pub fn brauer_image(word: &Word) -> BrauerDiagram {
    let mut acc = BrauerDiagram::identity(word.degree());
    for l in word.letters() {
        let next = BrauerDiagram::of_letter(*l, word.degree());
        acc = acc.compose(&next).expect("equal degrees");
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_tokens_and_round_trip() {
        let w = Word::parse("g1 G1", 2).unwrap();
        assert_eq!(w.letters(), &[Letter::positive(1), Letter::negative(1)]);
        assert_eq!(w.to_string(), "g1 G1");

        let one = Word::parse("1", 4).unwrap();
        assert!(one.is_identity());
        assert_eq!(one.to_string(), "1");
        assert_eq!(one.degree(), 4);

        let w = Word::parse("e1 e3", 4).unwrap();
        assert_eq!(w.letters(), &[Letter::hook(1), Letter::hook(3)]);

        let w = Word::new(3, vec![Letter::negative(2), Letter::hook(1)]).unwrap();
        assert_eq!(w.to_string(), "G2 e1");
        assert_eq!(Word::parse(&w.to_string(), 3).unwrap(), w);
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(matches!(
            Word::parse("g0 e1", 3),
            Err(WordError::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            Word::parse("g3", 3),
            Err(WordError::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            Word::parse("h1", 3),
            Err(WordError::MalformedToken(_))
        ));
        assert!(matches!(
            Word::parse("g", 3),
            Err(WordError::MalformedToken(_))
        ));
        assert!(matches!(
            Word::parse("g1x", 3),
            Err(WordError::MalformedToken(_))
        ));
        // `1` mixed with letters is not the identity token
        assert!(Word::parse("1 g1", 3).is_err());
    }

    #[test]
    fn concat_is_free() {
        let one = Word::identity(2);
        let w = Word::parse("g1 e1", 2).unwrap();
        assert_eq!(one.concat(&w).unwrap(), w);
        assert_eq!(w.concat(&one).unwrap(), w);

        // no simplification: g1 G1 stays four letters long when doubled
        let gg = Word::parse("g1 G1", 2).unwrap();
        assert_eq!(gg.concat(&gg).unwrap().len(), 4);

        let a = Word::parse("e1", 3).unwrap();
        let b = Word::parse("e2", 4).unwrap();
        assert!(matches!(a.concat(&b), Err(WordError::DegreeMismatch(3, 4))));
    }
}
