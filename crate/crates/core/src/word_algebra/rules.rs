//! The word-level move catalogue.
//!
//! `R1`–`R14` are the primitive two-way moves of the normal form: band
//! insertions/deletions, the crossing cancellation and braid relation,
//! hook slides, distant-letter exchanges, the hook-square disk move and
//! the two curl moves. `D15`–`D24` are derived moves; each expands to a
//! script of primitives (see [`super::MoveScript`]).
//!
//! Application is positional: a rule fires at an explicit letter offset
//! and direction, never by search.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{Letter, Sign, Word};

/// Move identifiers, `R1`..`R14` primitive and `D15`..`D24` derived.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RuleTag {
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
    R7,
    R8,
    R9,
    R10,
    R11,
    R12,
    R13,
    R14,
    D15,
    D16,
    D17,
    D18,
    D19,
    D20,
    D21,
    D22,
    D23,
    D24,
}

impl RuleTag {
    pub const ALL: [RuleTag; 24] = [
        RuleTag::R1,
        RuleTag::R2,
        RuleTag::R3,
        RuleTag::R4,
        RuleTag::R5,
        RuleTag::R6,
        RuleTag::R7,
        RuleTag::R8,
        RuleTag::R9,
        RuleTag::R10,
        RuleTag::R11,
        RuleTag::R12,
        RuleTag::R13,
        RuleTag::R14,
        RuleTag::D15,
        RuleTag::D16,
        RuleTag::D17,
        RuleTag::D18,
        RuleTag::D19,
        RuleTag::D20,
        RuleTag::D21,
        RuleTag::D22,
        RuleTag::D23,
        RuleTag::D24,
    ];

    pub fn is_derived(self) -> bool {
        self >= RuleTag::D15
    }

    pub fn parse(s: &str) -> Option<RuleTag> {
        RuleTag::ALL.iter().copied().find(|t| format!("{t:?}") == s)
    }
}

impl fmt::Display for RuleTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// What a move does to the presented surface when read as a level of a
/// motion picture.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RuleCategory {
    /// Band surgery (R1–R3).
    Band,
    /// Disk pasting (R12).
    Disk,
    /// Regular isotopy of the diagram (R4–R11).
    IsotopyRegular,
    /// Curl isotopy, the restricted type-I move (R13, R14).
    IsotopyRi,
}

impl RuleCategory {
    pub const ALL: [RuleCategory; 4] = [
        RuleCategory::Band,
        RuleCategory::Disk,
        RuleCategory::IsotopyRegular,
        RuleCategory::IsotopyRi,
    ];
}

/// Which way a two-sided move is read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    /// Left side replaced by right side.
    Forward,
    /// Right side replaced by left side.
    Backward,
}

impl Direction {
    pub fn flip(self) -> Direction {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Direction::Forward => write!(f, "fwd"),
            Direction::Backward => write!(f, "bwd"),
        }
    }
}

/// A fully parameterized move. Two-way: `lhs <-> rhs`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "tag")]
pub enum Rule {
    /// `1 <-> g_i^s`
    R1 { i: usize, sign: Sign },
    /// `1 <-> e_i`
    R2 { i: usize },
    /// `g_i^s <-> e_i`
    R3 { i: usize, sign: Sign },
    /// `g_i^s g_i^-s <-> 1`
    R4 { i: usize, sign: Sign },
    /// `g_i g_j g_i <-> g_j g_i g_j`, `|i-j| = 1`
    R5 { i: usize, j: usize },
    /// `g_i^s g_j^s e_i <-> e_j e_i`, `|i-j| = 1`
    R6 { i: usize, j: usize, sign: Sign },
    /// `e_i g_j^s g_i^s <-> e_i e_j`, `|i-j| = 1`
    R7 { i: usize, j: usize, sign: Sign },
    /// `e_i e_j e_i <-> e_i`, `|i-j| = 1`
    R8 { i: usize, j: usize },
    /// `g_i g_j <-> g_j g_i`, `|i-j| > 1`
    R9 { i: usize, j: usize },
    /// `g_i e_j <-> e_j g_i`, `|i-j| > 1`
    R10 { i: usize, j: usize },
    /// `e_i e_j <-> e_j e_i`, `|i-j| > 1`
    R11 { i: usize, j: usize },
    /// `e_i e_i <-> e_i`
    R12 { i: usize },
    /// `e_i <-> g_i e_i`
    R13 { i: usize },
    /// `e_i <-> e_i g_i`
    R14 { i: usize },
    /// `g_i^s g_j^s g_i^s <-> g_j^s g_i^s g_j^s`, `|i-j| = 1`
    D15 { i: usize, j: usize, sign: Sign },
    /// `g_i^s g_j^s g_i^-s <-> g_j^-s g_i^s g_j^s`, `|i-j| = 1`
    D16 { i: usize, j: usize, sign: Sign },
    /// `g_i^s g_j^-s g_i^-s <-> g_j^-s g_i^-s g_j^s`, `|i-j| = 1`
    D17 { i: usize, j: usize, sign: Sign },
    /// `g_i^s g_j^t <-> g_j^t g_i^s`, `|i-j| > 1`
    D18 {
        i: usize,
        j: usize,
        sign: Sign,
        sign2: Sign,
    },
    /// `g_i^s e_j <-> e_j g_i^s`, `|i-j| > 1`
    D19 { i: usize, j: usize, sign: Sign },
    /// `e_i <-> g_i^s e_i`
    D20 { i: usize, sign: Sign },
    /// `e_i <-> e_i g_i^s`
    D21 { i: usize, sign: Sign },
    /// `g_i^s g_j^s e_i <-> e_j g_i^t g_j^t`, `|i-j| = 1`
    D22 {
        i: usize,
        j: usize,
        sign: Sign,
        sign2: Sign,
    },
    /// `e_i <-> g_i^k e_i`
    D23 { i: usize, power: i64 },
    /// `e_i <-> e_i g_i^k`
    D24 { i: usize, power: i64 },
}

/// Errors from rule application.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RuleError {
    #[error("position {position} out of range for word of length {len}")]
    PositionOutOfRange { position: usize, len: usize },
    #[error("pattern mismatch at position {position}: expected `{expected}`, found `{found}`")]
    PatternMismatch {
        position: usize,
        expected: String,
        found: String,
    },
    #[error("constraint violation: {0}")]
    ConstraintViolation(String),
    #[error("rule {0} is not a derived move")]
    NotDerived(RuleTag),
}

impl Rule {
    pub fn tag(&self) -> RuleTag {
        match self {
            Rule::R1 { .. } => RuleTag::R1,
            Rule::R2 { .. } => RuleTag::R2,
            Rule::R3 { .. } => RuleTag::R3,
            Rule::R4 { .. } => RuleTag::R4,
            Rule::R5 { .. } => RuleTag::R5,
            Rule::R6 { .. } => RuleTag::R6,
            Rule::R7 { .. } => RuleTag::R7,
            Rule::R8 { .. } => RuleTag::R8,
            Rule::R9 { .. } => RuleTag::R9,
            Rule::R10 { .. } => RuleTag::R10,
            Rule::R11 { .. } => RuleTag::R11,
            Rule::R12 { .. } => RuleTag::R12,
            Rule::R13 { .. } => RuleTag::R13,
            Rule::R14 { .. } => RuleTag::R14,
            Rule::D15 { .. } => RuleTag::D15,
            Rule::D16 { .. } => RuleTag::D16,
            Rule::D17 { .. } => RuleTag::D17,
            Rule::D18 { .. } => RuleTag::D18,
            Rule::D19 { .. } => RuleTag::D19,
            Rule::D20 { .. } => RuleTag::D20,
            Rule::D21 { .. } => RuleTag::D21,
            Rule::D22 { .. } => RuleTag::D22,
            Rule::D23 { .. } => RuleTag::D23,
            Rule::D24 { .. } => RuleTag::D24,
        }
    }

    /// Category of the move; derived moves inherit the category of their
    /// expansions.
    pub fn category(&self) -> RuleCategory {
        use RuleTag::*;
        match self.tag() {
            R1 | R2 | R3 => RuleCategory::Band,
            R12 => RuleCategory::Disk,
            R4 | R5 | R6 | R7 | R8 | R9 | R10 | R11 => RuleCategory::IsotopyRegular,
            R13 | R14 => RuleCategory::IsotopyRi,
            // D15–D19 expand over R4/R5/R9/R10; D22 over R6/R7.
            D15 | D16 | D17 | D18 | D19 | D22 => RuleCategory::IsotopyRegular,
            // D20/D21/D23/D24 need the curl moves R13/R14.
            D20 | D21 | D23 | D24 => RuleCategory::IsotopyRi,
        }
    }

    /// Left-hand letter pattern.
    pub fn lhs(&self) -> Vec<Letter> {
        let g = Letter::crossing;
        let e = Letter::hook;
        match *self {
            Rule::R1 { .. } | Rule::R2 { .. } => vec![],
            Rule::R3 { i, sign } => vec![g(i, sign)],
            Rule::R4 { i, sign } => vec![g(i, sign), g(i, sign.flip())],
            Rule::R5 { i, j } => vec![g(i, Sign::Pos), g(j, Sign::Pos), g(i, Sign::Pos)],
            Rule::R6 { i, j, sign } => vec![g(i, sign), g(j, sign), e(i)],
            Rule::R7 { i, j, sign } => vec![e(i), g(j, sign), g(i, sign)],
            Rule::R8 { i, j } => vec![e(i), e(j), e(i)],
            Rule::R9 { i, j } => vec![g(i, Sign::Pos), g(j, Sign::Pos)],
            Rule::R10 { i, j } => vec![g(i, Sign::Pos), e(j)],
            Rule::R11 { i, j } => vec![e(i), e(j)],
            Rule::R12 { i } => vec![e(i), e(i)],
            Rule::R13 { i } | Rule::R14 { i } => vec![e(i)],
            Rule::D15 { i, j, sign } => vec![g(i, sign), g(j, sign), g(i, sign)],
            Rule::D16 { i, j, sign } => vec![g(i, sign), g(j, sign), g(i, sign.flip())],
            Rule::D17 { i, j, sign } => vec![g(i, sign), g(j, sign.flip()), g(i, sign.flip())],
            Rule::D18 { i, j, sign, sign2 } => vec![g(i, sign), g(j, sign2)],
            Rule::D19 { i, j, sign } => vec![g(i, sign), e(j)],
            Rule::D20 { i, .. } | Rule::D21 { i, .. } => vec![e(i)],
            Rule::D23 { i, .. } | Rule::D24 { i, .. } => vec![e(i)],
            Rule::D22 { i, j, sign, .. } => vec![g(i, sign), g(j, sign), e(i)],
        }
    }

    /// Right-hand letter pattern.
    pub fn rhs(&self) -> Vec<Letter> {
        let g = Letter::crossing;
        let e = Letter::hook;
        match *self {
            Rule::R1 { i, sign } => vec![g(i, sign)],
            Rule::R2 { i } => vec![e(i)],
            Rule::R3 { i, .. } => vec![e(i)],
            Rule::R4 { .. } => vec![],
            Rule::R5 { i, j } => vec![g(j, Sign::Pos), g(i, Sign::Pos), g(j, Sign::Pos)],
            Rule::R6 { i, j, .. } => vec![e(j), e(i)],
            Rule::R7 { i, j, .. } => vec![e(i), e(j)],
            Rule::R8 { i, .. } => vec![e(i)],
            Rule::R9 { i, j } => vec![g(j, Sign::Pos), g(i, Sign::Pos)],
            Rule::R10 { i, j } => vec![e(j), g(i, Sign::Pos)],
            Rule::R11 { i, j } => vec![e(j), e(i)],
            Rule::R12 { i } => vec![e(i)],
            Rule::R13 { i } => vec![g(i, Sign::Pos), e(i)],
            Rule::R14 { i } => vec![e(i), g(i, Sign::Pos)],
            Rule::D15 { i, j, sign } => vec![g(j, sign), g(i, sign), g(j, sign)],
            Rule::D16 { i, j, sign } => vec![g(j, sign.flip()), g(i, sign), g(j, sign)],
            Rule::D17 { i, j, sign } => {
                vec![g(j, sign.flip()), g(i, sign.flip()), g(j, sign)]
            }
            Rule::D18 { i, j, sign, sign2 } => vec![g(j, sign2), g(i, sign)],
            Rule::D19 { i, j, sign } => vec![e(j), g(i, sign)],
            Rule::D20 { i, sign } => vec![g(i, sign), e(i)],
            Rule::D21 { i, sign } => vec![e(i), g(i, sign)],
            Rule::D22 { i, j, sign2, .. } => vec![e(j), g(i, sign2), g(j, sign2)],
            Rule::D23 { i, power } => {
                let s = if power >= 0 { Sign::Pos } else { Sign::Neg };
                let mut v = vec![g(i, s); power.unsigned_abs() as usize];
                v.push(e(i));
                v
            }
            Rule::D24 { i, power } => {
                let s = if power >= 0 { Sign::Pos } else { Sign::Neg };
                let mut v = vec![e(i)];
                v.extend(vec![g(i, s); power.unsigned_abs() as usize]);
                v
            }
        }
    }

    /// Index bounds and adjacency/distance constraints for degree `n`.
    pub fn check_constraints(&self, degree: usize) -> Result<(), RuleError> {
        let fail = |msg: String| Err(RuleError::ConstraintViolation(msg));
        let index_ok = |k: usize| k >= 1 && k < degree;
        let (i, j) = self.indices();
        if !index_ok(i) {
            return fail(format!("index i={i} out of range for degree {degree}"));
        }
        if let Some(j) = j {
            if !index_ok(j) {
                return fail(format!("index j={j} out of range for degree {degree}"));
            }
            let dist = i.abs_diff(j);
            match self.tag() {
                RuleTag::R5
                | RuleTag::R6
                | RuleTag::R7
                | RuleTag::R8
                | RuleTag::D15
                | RuleTag::D16
                | RuleTag::D17
                | RuleTag::D22 => {
                    if dist != 1 {
                        return fail(format!("|i-j| = {dist}, expected 1"));
                    }
                }
                RuleTag::R9 | RuleTag::R10 | RuleTag::R11 | RuleTag::D18 | RuleTag::D19
                    if dist <= 1 =>
                {
                    return fail(format!("|i-j| = {dist}, expected > 1"));
                }
                _ => {}
            }
        }
        Ok(())
    }

    /// `(i, optional j)` of the rule's parameters.
    pub fn indices(&self) -> (usize, Option<usize>) {
        match *self {
            Rule::R1 { i, .. }
            | Rule::R2 { i }
            | Rule::R3 { i, .. }
            | Rule::R4 { i, .. }
            | Rule::R12 { i }
            | Rule::R13 { i }
            | Rule::R14 { i }
            | Rule::D20 { i, .. }
            | Rule::D21 { i, .. }
            | Rule::D23 { i, .. }
            | Rule::D24 { i, .. } => (i, None),
            Rule::R5 { i, j }
            | Rule::R6 { i, j, .. }
            | Rule::R7 { i, j, .. }
            | Rule::R8 { i, j }
            | Rule::R9 { i, j }
            | Rule::R10 { i, j }
            | Rule::R11 { i, j }
            | Rule::D15 { i, j, .. }
            | Rule::D16 { i, j, .. }
            | Rule::D17 { i, j, .. }
            | Rule::D18 { i, j, .. }
            | Rule::D19 { i, j, .. }
            | Rule::D22 { i, j, .. } => (i, Some(j)),
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tag())?;
        let (i, j) = self.indices();
        write!(f, "(i={i}")?;
        if let Some(j) = j {
            write!(f, ",j={j}")?;
        }
        match *self {
            Rule::R1 { sign, .. }
            | Rule::R3 { sign, .. }
            | Rule::R4 { sign, .. }
            | Rule::R6 { sign, .. }
            | Rule::R7 { sign, .. }
            | Rule::D15 { sign, .. }
            | Rule::D16 { sign, .. }
            | Rule::D17 { sign, .. }
            | Rule::D19 { sign, .. }
            | Rule::D20 { sign, .. }
            | Rule::D21 { sign, .. } => write!(f, ",eps={sign}")?,
            Rule::D18 { sign, sign2, .. } | Rule::D22 { sign, sign2, .. } => {
                write!(f, ",eps={sign},delta={sign2}")?
            }
            Rule::D23 { power, .. } | Rule::D24 { power, .. } => write!(f, ",k={power}")?,
            _ => {}
        }
        write!(f, ")")
    }
}

fn fmt_pattern(p: &[Letter]) -> String {
    if p.is_empty() {
        "1".into()
    } else {
        p.iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Replace the rule's source side at `position` by its target side.
///
/// The source side is `lhs` for forward application, `rhs` backward. The
/// letters at `position` must match the source exactly.
pub fn apply_rule(
    word: &Word,
    rule: &Rule,
    position: usize,
    direction: Direction,
) -> Result<Word, RuleError> {
    rule.check_constraints(word.degree())?;
    let (pattern, subst) = match direction {
        Direction::Forward => (rule.lhs(), rule.rhs()),
        Direction::Backward => (rule.rhs(), rule.lhs()),
    };
    if position + pattern.len() > word.len() || position > word.len() {
        return Err(RuleError::PositionOutOfRange {
            position,
            len: word.len(),
        });
    }
    let found = &word.letters()[position..position + pattern.len()];
    if found != pattern.as_slice() {
        return Err(RuleError::PatternMismatch {
            position,
            expected: fmt_pattern(&pattern),
            found: fmt_pattern(found),
        });
    }
    Ok(word.splice(position, pattern.len(), &subst))
}

/// All primitive-rule instances available at degree `n`, in tag order.
fn catalogue(degree: usize) -> Vec<Rule> {
    let n = degree;
    let mut out = Vec::new();
    let idx = 1..n;
    for i in idx.clone() {
        for s in Sign::BOTH {
            out.push(Rule::R1 { i, sign: s });
        }
    }
    for i in idx.clone() {
        out.push(Rule::R2 { i });
    }
    for i in idx.clone() {
        for s in Sign::BOTH {
            out.push(Rule::R3 { i, sign: s });
        }
    }
    for i in idx.clone() {
        for s in Sign::BOTH {
            out.push(Rule::R4 { i, sign: s });
        }
    }
    let adjacent: Vec<(usize, usize)> = idx
        .clone()
        .flat_map(|i| idx.clone().map(move |j| (i, j)))
        .filter(|(i, j)| i.abs_diff(*j) == 1)
        .collect();
    let distant: Vec<(usize, usize)> = idx
        .clone()
        .flat_map(|i| idx.clone().map(move |j| (i, j)))
        .filter(|(i, j)| i.abs_diff(*j) > 1)
        .collect();
    for &(i, j) in &adjacent {
        out.push(Rule::R5 { i, j });
    }
    for &(i, j) in &adjacent {
        for s in Sign::BOTH {
            out.push(Rule::R6 { i, j, sign: s });
        }
    }
    for &(i, j) in &adjacent {
        for s in Sign::BOTH {
            out.push(Rule::R7 { i, j, sign: s });
        }
    }
    for &(i, j) in &adjacent {
        out.push(Rule::R8 { i, j });
    }
    for &(i, j) in &distant {
        out.push(Rule::R9 { i, j });
    }
    for &(i, j) in &distant {
        out.push(Rule::R10 { i, j });
    }
    for &(i, j) in &distant {
        out.push(Rule::R11 { i, j });
    }
    for i in idx.clone() {
        out.push(Rule::R12 { i });
    }
    for i in idx.clone() {
        out.push(Rule::R13 { i });
    }
    for i in idx {
        out.push(Rule::R14 { i });
    }
    out
}

/// Every `(rule, position, direction)` triple over the primitive moves
/// `R1`–`R14` for which [`apply_rule`] succeeds on `word`, filtered by
/// category. Ordered by position, then tag, then parameters, forward
/// before backward.
///
/// Applications rewriting an empty source pattern are listed only for
/// the band creations R1/R2; the other out-of-nothing insertions (R4
/// backward and friends) fire at every offset and would flood the
/// frontier.
pub fn enumerate_rule_applications(
    word: &Word,
    categories: &[RuleCategory],
) -> Vec<(Rule, usize, Direction)> {
    let rules = catalogue(word.degree());
    let mut out = Vec::new();
    for position in 0..=word.len() {
        for rule in &rules {
            if !categories.contains(&rule.category()) {
                continue;
            }
            for dir in [Direction::Forward, Direction::Backward] {
                let source_len = match dir {
                    Direction::Forward => rule.lhs().len(),
                    Direction::Backward => rule.rhs().len(),
                };
                if source_len == 0
                    && !(matches!(rule.tag(), RuleTag::R1 | RuleTag::R2)
                        && dir == Direction::Forward)
                {
                    continue;
                }
                if apply_rule(word, rule, position, dir).is_ok() {
                    out.push((*rule, position, dir));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word_algebra::Word;

    fn w(text: &str, n: usize) -> Word {
        Word::parse(text, n).unwrap()
    }

    #[test]
    fn cancellation() {
        let out = apply_rule(
            &w("g1 G1", 2),
            &Rule::R4 {
                i: 1,
                sign: Sign::Pos,
            },
            0,
            Direction::Forward,
        )
        .unwrap();
        assert!(out.is_identity());
    }

    #[test]
    fn braid_relation() {
        let out = apply_rule(
            &w("g1 g2 g1", 3),
            &Rule::R5 { i: 1, j: 2 },
            0,
            Direction::Forward,
        )
        .unwrap();
        assert_eq!(out, w("g2 g1 g2", 3));
    }

    #[test]
    fn hook_disk() {
        let out = apply_rule(&w("e1 e1", 2), &Rule::R12 { i: 1 }, 0, Direction::Forward).unwrap();
        assert_eq!(out, w("e1", 2));
    }

    #[test]
    fn mismatch_and_range_errors() {
        let r = Rule::R5 { i: 1, j: 2 };
        assert!(matches!(
            apply_rule(&w("g1 g2 G1", 3), &r, 0, Direction::Forward),
            Err(RuleError::PatternMismatch { .. })
        ));
        assert!(matches!(
            apply_rule(&w("g1 g2 g1", 3), &r, 1, Direction::Forward),
            Err(RuleError::PositionOutOfRange { .. })
        ));
        let bad = Rule::R5 { i: 1, j: 3 };
        assert!(matches!(
            apply_rule(&w("g1 g3 g1", 4), &bad, 0, Direction::Forward),
            Err(RuleError::ConstraintViolation(_))
        ));
        let far = Rule::R9 { i: 1, j: 2 };
        assert!(matches!(
            apply_rule(&w("g1 g2", 3), &far, 0, Direction::Forward),
            Err(RuleError::ConstraintViolation(_))
        ));
    }

    #[test]
    fn enumerate_on_identity_lists_band_insertions() {
        let apps = enumerate_rule_applications(&Word::identity(2), &[RuleCategory::Band]);
        let expected = vec![
            (
                Rule::R1 {
                    i: 1,
                    sign: Sign::Pos,
                },
                0,
                Direction::Forward,
            ),
            (
                Rule::R1 {
                    i: 1,
                    sign: Sign::Neg,
                },
                0,
                Direction::Forward,
            ),
            (Rule::R2 { i: 1 }, 0, Direction::Forward),
        ];
        assert_eq!(apps, expected);
    }

    #[test]
    fn enumerate_isotopy_on_single_hook_is_empty() {
        let apps = enumerate_rule_applications(&w("e1", 2), &[RuleCategory::IsotopyRegular]);
        assert!(apps.is_empty());
    }

    #[test]
    fn enumerate_finds_hook_square() {
        let apps = enumerate_rule_applications(&w("e1 e2 e1", 3), &[RuleCategory::IsotopyRegular]);
        assert!(apps.contains(&(Rule::R8 { i: 1, j: 2 }, 0, Direction::Forward)));
    }

    #[test]
    fn reversibility() {
        let word = w("e1 e2 e1", 3);
        let r = Rule::R8 { i: 1, j: 2 };
        let fwd = apply_rule(&word, &r, 0, Direction::Forward).unwrap();
        let back = apply_rule(&fwd, &r, 0, Direction::Backward).unwrap();
        assert_eq!(back, word);
    }
}
