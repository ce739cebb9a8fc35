//! Leveled charts: an event sequence acting on horizontal cross-section
//! words. The same value is both the chart data model and the motion
//! picture of the presented surface — every prefix of events replayed
//! from the start word is one slice.

mod validate;

pub use validate::{Clause, EventCheck, ValidationReport};

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::word_algebra::{Direction, Letter, Sign, Word, WordError};

/// Which side of the hook letter a branch crossing attaches to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    Left,
    Right,
}

/// Rotational stance of a degree-6 braid vertex, i.e. which reading of
/// the braid triple its level realizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WhiteAttitude {
    /// `g_i g_j g_i -> g_j g_i g_j`
    Upright,
    /// `G_i G_j G_i -> G_j G_i G_j`
    Inverted,
    /// `g_i^s g_j^s g_i^-s -> g_j^-s g_i^s g_j^s`
    TiltedRight(Sign),
    /// `g_i^s g_j^-s g_i^-s -> g_j^-s g_i^-s g_j^s`
    TiltedLeft(Sign),
}

impl WhiteAttitude {
    pub const ALL: [WhiteAttitude; 6] = [
        WhiteAttitude::Upright,
        WhiteAttitude::Inverted,
        WhiteAttitude::TiltedRight(Sign::Pos),
        WhiteAttitude::TiltedRight(Sign::Neg),
        WhiteAttitude::TiltedLeft(Sign::Pos),
        WhiteAttitude::TiltedLeft(Sign::Neg),
    ];

    /// Left/right letter triples of the reading for indices `i`, `j`.
    fn reading(self, i: usize, j: usize) -> (Vec<Letter>, Vec<Letter>) {
        let g = Letter::crossing;
        match self {
            WhiteAttitude::Upright => (
                vec![g(i, Sign::Pos), g(j, Sign::Pos), g(i, Sign::Pos)],
                vec![g(j, Sign::Pos), g(i, Sign::Pos), g(j, Sign::Pos)],
            ),
            WhiteAttitude::Inverted => (
                vec![g(i, Sign::Neg), g(j, Sign::Neg), g(i, Sign::Neg)],
                vec![g(j, Sign::Neg), g(i, Sign::Neg), g(j, Sign::Neg)],
            ),
            WhiteAttitude::TiltedRight(s) => (
                vec![g(i, s), g(j, s), g(i, s.flip())],
                vec![g(j, s.flip()), g(i, s), g(j, s)],
            ),
            WhiteAttitude::TiltedLeft(s) => (
                vec![g(i, s), g(j, s.flip()), g(i, s.flip())],
                vec![g(j, s.flip()), g(i, s.flip()), g(j, s)],
            ),
        }
    }
}

/// The local transition an event performs, one per chart vertex type
/// plus the smooth edge extrema.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum EventKind {
    /// Degree-1 braid vertex: create (forward) or delete one `g_i^s`.
    BlackG {
        i: usize,
        sign: Sign,
        dir: Direction,
    },
    /// Degree-1 hook vertex: create or delete one `e_i`.
    XDot { i: usize, dir: Direction },
    /// Degree-2 vertex: `g_i^s <-> e_i`.
    Saddle {
        i: usize,
        sign: Sign,
        dir: Direction,
    },
    /// Minimum of a crossing-labeled edge: `1 -> g_i^s g_i^-s`.
    GCap { i: usize, sign: Sign },
    /// Maximum of a crossing-labeled edge: `g_i^s g_i^-s -> 1`.
    GCup { i: usize, sign: Sign },
    /// Minimum of a hook-labeled edge: `1 -> e_i e_i`. Pre-normal form only.
    ECap { i: usize },
    /// Maximum of a hook-labeled edge: `e_i e_i -> 1`. Pre-normal form only.
    ECup { i: usize },
    /// Degree-6 braid vertex at the given rotation.
    White {
        i: usize,
        j: usize,
        attitude: WhiteAttitude,
        dir: Direction,
    },
    /// Degree-4 vertex exchanging two distant letters.
    Crossing { left: Letter, right: Letter },
    /// Degree-4 hook vertex: `e_i e_j e_i <-> e_i`, `|i-j| = 1`.
    Square8 { i: usize, j: usize, dir: Direction },
    /// Degree-5 vertex: `g_i^s g_j^s e_i <-> e_j e_i` (crossings left) or
    /// `e_i g_j^s g_i^s <-> e_i e_j` (crossings right).
    Square5 {
        i: usize,
        j: usize,
        sign: Sign,
        crossings: Side,
        dir: Direction,
    },
    /// Degree-3 hook vertex, the disk event: `e_i e_i <-> e_i`.
    XTri { i: usize, dir: Direction },
    /// Degree-3 curl vertex: `e_i <-> g_i^s e_i` or `e_i <-> e_i g_i^s`.
    Branch {
        i: usize,
        sign: Sign,
        side: Side,
        dir: Direction,
    },
    /// Degree-6 composite vertex: `g_i^s g_j^s e_i <-> e_j g_i^t g_j^t`.
    Square6 {
        i: usize,
        j: usize,
        sign: Sign,
        sign2: Sign,
        dir: Direction,
    },
    /// Composite hook vertex of degree `below + above`.
    XStar {
        i: usize,
        below: usize,
        above: usize,
    },
    /// Composite curl vertex: `e_i <-> u e_i v` with `u`, `v` runs of
    /// `g_i^±1` given by their sign lists.
    SquareStar {
        i: usize,
        left: Vec<Sign>,
        right: Vec<Sign>,
        dir: Direction,
    },
    /// A level at which nothing happens.
    Nop,
}

/// An event at a letter offset of the current cross-section word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Event {
    pub position: usize,
    #[serde(flatten)]
    pub kind: EventKind,
}

impl Event {
    pub fn new(position: usize, kind: EventKind) -> Event {
        Event { position, kind }
    }

    /// `(consumed, produced)` letter patterns, direction applied.
    pub fn patterns(&self) -> (Vec<Letter>, Vec<Letter>) {
        let g = Letter::crossing;
        let e = Letter::hook;
        let oriented = |l: Vec<Letter>, r: Vec<Letter>, dir: Direction| match dir {
            Direction::Forward => (l, r),
            Direction::Backward => (r, l),
        };
        match &self.kind {
            EventKind::BlackG { i, sign, dir } => oriented(vec![], vec![g(*i, *sign)], *dir),
            EventKind::XDot { i, dir } => oriented(vec![], vec![e(*i)], *dir),
            EventKind::Saddle { i, sign, dir } => oriented(vec![g(*i, *sign)], vec![e(*i)], *dir),
            EventKind::GCap { i, sign } => (vec![], vec![g(*i, *sign), g(*i, sign.flip())]),
            EventKind::GCup { i, sign } => (vec![g(*i, *sign), g(*i, sign.flip())], vec![]),
            EventKind::ECap { i } => (vec![], vec![e(*i), e(*i)]),
            EventKind::ECup { i } => (vec![e(*i), e(*i)], vec![]),
            EventKind::White {
                i,
                j,
                attitude,
                dir,
            } => {
                let (l, r) = attitude.reading(*i, *j);
                oriented(l, r, *dir)
            }
            EventKind::Crossing { left, right } => (vec![*left, *right], vec![*right, *left]),
            EventKind::Square8 { i, j, dir } => {
                oriented(vec![e(*i), e(*j), e(*i)], vec![e(*i)], *dir)
            }
            EventKind::Square5 {
                i,
                j,
                sign,
                crossings,
                dir,
            } => {
                let (l, r) = match crossings {
                    Side::Left => (vec![g(*i, *sign), g(*j, *sign), e(*i)], vec![e(*j), e(*i)]),
                    Side::Right => (vec![e(*i), g(*j, *sign), g(*i, *sign)], vec![e(*i), e(*j)]),
                };
                oriented(l, r, *dir)
            }
            EventKind::XTri { i, dir } => oriented(vec![e(*i), e(*i)], vec![e(*i)], *dir),
            EventKind::Branch { i, sign, side, dir } => {
                let r = match side {
                    Side::Left => vec![g(*i, *sign), e(*i)],
                    Side::Right => vec![e(*i), g(*i, *sign)],
                };
                oriented(vec![e(*i)], r, *dir)
            }
            EventKind::Square6 {
                i,
                j,
                sign,
                sign2,
                dir,
            } => oriented(
                vec![g(*i, *sign), g(*j, *sign), e(*i)],
                vec![e(*j), g(*i, *sign2), g(*j, *sign2)],
                *dir,
            ),
            EventKind::XStar { i, below, above } => (vec![e(*i); *below], vec![e(*i); *above]),
            EventKind::SquareStar {
                i,
                left,
                right,
                dir,
            } => {
                let mut r: Vec<Letter> = left.iter().map(|s| g(*i, *s)).collect();
                r.push(e(*i));
                r.extend(right.iter().map(|s| g(*i, *s)));
                oriented(vec![e(*i)], r, *dir)
            }
            EventKind::Nop => (vec![], vec![]),
        }
    }

    /// The event with its transition read the other way.
    pub fn inverse(&self) -> Event {
        let kind = match self.kind.clone() {
            EventKind::BlackG { i, sign, dir } => EventKind::BlackG {
                i,
                sign,
                dir: dir.flip(),
            },
            EventKind::XDot { i, dir } => EventKind::XDot { i, dir: dir.flip() },
            EventKind::Saddle { i, sign, dir } => EventKind::Saddle {
                i,
                sign,
                dir: dir.flip(),
            },
            EventKind::GCap { i, sign } => EventKind::GCup { i, sign },
            EventKind::GCup { i, sign } => EventKind::GCap { i, sign },
            EventKind::ECap { i } => EventKind::ECup { i },
            EventKind::ECup { i } => EventKind::ECap { i },
            EventKind::White {
                i,
                j,
                attitude,
                dir,
            } => EventKind::White {
                i,
                j,
                attitude,
                dir: dir.flip(),
            },
            EventKind::Crossing { left, right } => EventKind::Crossing {
                left: right,
                right: left,
            },
            EventKind::Square8 { i, j, dir } => EventKind::Square8 {
                i,
                j,
                dir: dir.flip(),
            },
            EventKind::Square5 {
                i,
                j,
                sign,
                crossings,
                dir,
            } => EventKind::Square5 {
                i,
                j,
                sign,
                crossings,
                dir: dir.flip(),
            },
            EventKind::XTri { i, dir } => EventKind::XTri { i, dir: dir.flip() },
            EventKind::Branch { i, sign, side, dir } => EventKind::Branch {
                i,
                sign,
                side,
                dir: dir.flip(),
            },
            EventKind::Square6 {
                i,
                j,
                sign,
                sign2,
                dir,
            } => EventKind::Square6 {
                i,
                j,
                sign,
                sign2,
                dir: dir.flip(),
            },
            EventKind::XStar { i, below, above } => EventKind::XStar {
                i,
                below: above,
                above: below,
            },
            EventKind::SquareStar {
                i,
                left,
                right,
                dir,
            } => EventKind::SquareStar {
                i,
                left,
                right,
                dir: dir.flip(),
            },
            EventKind::Nop => EventKind::Nop,
        };
        Event {
            position: self.position,
            kind,
        }
    }

    /// Rewrite the word at this event's position.
    pub fn apply(&self, word: &Word) -> Result<Word, MovieError> {
        self.check_params(word.degree())
            .map_err(|detail| MovieError::IllegalEvent { detail })?;
        let (consumed, produced) = self.patterns();
        if self.position + consumed.len() > word.len() || self.position > word.len() {
            return Err(MovieError::IllegalEvent {
                detail: format!(
                    "position {} out of range for slice of length {}",
                    self.position,
                    word.len()
                ),
            });
        }
        let found = &word.letters()[self.position..self.position + consumed.len()];
        if found != consumed.as_slice() {
            return Err(MovieError::IllegalEvent {
                detail: format!(
                    "pattern mismatch at {}: expected `{}`, found `{}`",
                    self.position,
                    fmt_letters(&consumed),
                    fmt_letters(found),
                ),
            });
        }
        Ok(word.splice(self.position, consumed.len(), &produced))
    }

    /// Index-range and local Def-style constraints for degree `n`.
    pub fn check_params(&self, degree: usize) -> Result<(), String> {
        let index_ok = |k: usize| k >= 1 && k < degree;
        let check_index = |k: usize| {
            if index_ok(k) {
                Ok(())
            } else {
                Err(format!(
                    "edge label index {k} out of range for degree {degree}"
                ))
            }
        };
        match &self.kind {
            EventKind::BlackG { i, .. }
            | EventKind::XDot { i, .. }
            | EventKind::Saddle { i, .. }
            | EventKind::GCap { i, .. }
            | EventKind::GCup { i, .. }
            | EventKind::ECap { i }
            | EventKind::ECup { i }
            | EventKind::XTri { i, .. }
            | EventKind::Branch { i, .. } => check_index(*i),
            EventKind::White { i, j, .. }
            | EventKind::Square8 { i, j, .. }
            | EventKind::Square5 { i, j, .. }
            | EventKind::Square6 { i, j, .. } => {
                check_index(*i)?;
                check_index(*j)?;
                if i.abs_diff(*j) != 1 {
                    return Err(format!("|i-j| = {}, expected 1", i.abs_diff(*j)));
                }
                Ok(())
            }
            EventKind::Crossing { left, right } => {
                check_index(left.index)?;
                check_index(right.index)?;
                if left.index.abs_diff(right.index) <= 1 {
                    return Err(format!(
                        "|i-j| = {}, expected > 1",
                        left.index.abs_diff(right.index)
                    ));
                }
                Ok(())
            }
            EventKind::XStar { i, below, above } => {
                check_index(*i)?;
                if *below == 0 || *above == 0 || below + above < 3 {
                    return Err(format!(
                        "composite hook vertex needs degree >= 3 with ends on both sides, got {below}|{above}"
                    ));
                }
                Ok(())
            }
            EventKind::SquareStar { i, left, right, .. } => {
                check_index(*i)?;
                if left.is_empty() && right.is_empty() {
                    return Err("composite curl vertex needs at least one crossing edge".into());
                }
                Ok(())
            }
            EventKind::Nop => Ok(()),
        }
    }

    pub fn is_cap(&self) -> bool {
        matches!(self.kind, EventKind::ECap { .. } | EventKind::ECup { .. })
    }

    pub fn is_nop(&self) -> bool {
        matches!(self.kind, EventKind::Nop)
    }

    /// Band surgeries this event performs (each lowers the Euler
    /// characteristic of the traced surface by one).
    pub fn band_units(&self) -> i64 {
        match self.kind {
            EventKind::BlackG { .. } | EventKind::XDot { .. } | EventKind::Saddle { .. } => 1,
            _ => 0,
        }
    }

    /// Disk pastings this event performs (each raises the Euler
    /// characteristic by one). Composite hook vertices count their
    /// whole expansion tree.
    pub fn disk_units(&self) -> i64 {
        match self.kind {
            EventKind::XTri { .. } => 1,
            EventKind::XStar { below, above, .. } => (below + above) as i64 - 2,
            _ => 0,
        }
    }
}

fn fmt_letters(p: &[Letter]) -> String {
    if p.is_empty() {
        "1".into()
    } else {
        p.iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (c, p) = self.patterns();
        write!(
            f,
            "@{} {} -> {}",
            self.position,
            fmt_letters(&c),
            fmt_letters(&p)
        )
    }
}

/// Whether a validated movie presents a regular surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SurfaceClass {
    Regular,
    NonRegular,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MovieError {
    #[error("level {level} out of range (movie has {events} events)")]
    LevelOutOfRange { level: usize, events: usize },
    #[error("event {index} illegal: {detail}")]
    InvalidEvent { index: usize, detail: String },
    #[error("{detail}")]
    IllegalEvent { detail: String },
    #[error("movies do not meet: final word `{0}` vs start word `{1}`")]
    InterfaceMismatch(String, String),
    #[error(transparent)]
    Word(#[from] WordError),
}

/// A leveled chart of some degree: a start word and an event sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartMovie {
    pub degree: usize,
    pub start: Word,
    pub events: Vec<Event>,
}

impl ChartMovie {
    pub fn new(degree: usize, start: Word, events: Vec<Event>) -> Result<ChartMovie, MovieError> {
        if start.degree() != degree {
            return Err(WordError::DegreeMismatch(start.degree(), degree).into());
        }
        Ok(ChartMovie {
            degree,
            start,
            events,
        })
    }

    /// The cross-section word after the first `level` events.
    pub fn slice_at(&self, level: usize) -> Result<Word, MovieError> {
        if level > self.events.len() {
            return Err(MovieError::LevelOutOfRange {
                level,
                events: self.events.len(),
            });
        }
        let mut word = self.start.clone();
        for (k, ev) in self.events[..level].iter().enumerate() {
            word = ev.apply(&word).map_err(|e| MovieError::InvalidEvent {
                index: k,
                detail: e.to_string(),
            })?;
        }
        Ok(word)
    }

    /// All slices, `events.len() + 1` of them.
    pub fn slices(&self) -> Result<Vec<Word>, MovieError> {
        let mut out = vec![self.start.clone()];
        for (k, ev) in self.events.iter().enumerate() {
            let next = ev
                .apply(out.last().unwrap())
                .map_err(|e| MovieError::InvalidEvent {
                    index: k,
                    detail: e.to_string(),
                })?;
            out.push(next);
        }
        Ok(out)
    }

    /// The top slice.
    pub fn final_word(&self) -> Result<Word, MovieError> {
        self.slice_at(self.events.len())
    }

    /// Full per-event legality report; never fails.
    pub fn validate(&self) -> ValidationReport {
        validate::validate_movie(self)
    }

    /// Shorthand: validate and convert failure into an error.
    pub fn validate_ok(&self) -> Result<(), MovieError> {
        let report = self.validate();
        match report.first_failure {
            None => Ok(()),
            Some(index) => {
                let check = report
                    .checks
                    .iter()
                    .find(|c| c.event == index && !c.ok)
                    .expect("failing check recorded");
                Err(MovieError::InvalidEvent {
                    index,
                    detail: check.detail.clone(),
                })
            }
        }
    }

    /// Non-regular iff a curl vertex (plain or composite) occurs.
    pub fn classify(&self) -> Result<SurfaceClass, MovieError> {
        self.validate_ok()?;
        let non_regular = self.events.iter().any(|e| {
            matches!(
                e.kind,
                EventKind::Branch { .. } | EventKind::SquareStar { .. }
            )
        });
        Ok(if non_regular {
            SurfaceClass::NonRegular
        } else {
            SurfaceClass::Regular
        })
    }

    /// Replace each hook-edge extremum by its normal-form subgraph: a
    /// minimum becomes create-then-split, a maximum merge-then-delete.
    pub fn normalize_caps(&self) -> Result<ChartMovie, MovieError> {
        self.validate_ok()?;
        let mut events = Vec::with_capacity(self.events.len());
        for ev in &self.events {
            match ev.kind {
                EventKind::ECap { i } => {
                    events.push(Event::new(
                        ev.position,
                        EventKind::XDot {
                            i,
                            dir: Direction::Forward,
                        },
                    ));
                    events.push(Event::new(
                        ev.position,
                        EventKind::XTri {
                            i,
                            dir: Direction::Backward,
                        },
                    ));
                }
                EventKind::ECup { i } => {
                    events.push(Event::new(
                        ev.position,
                        EventKind::XTri {
                            i,
                            dir: Direction::Forward,
                        },
                    ));
                    events.push(Event::new(
                        ev.position,
                        EventKind::XDot {
                            i,
                            dir: Direction::Backward,
                        },
                    ));
                }
                _ => events.push(ev.clone()),
            }
        }
        Ok(ChartMovie {
            degree: self.degree,
            start: self.start.clone(),
            events,
        })
    }

    /// Expand composite vertices into primitive ones: hook stars into
    /// left-combed disk-vertex trees, curl stars into branch chains, and
    /// the degree-6 composite into its two five-vertex halves.
    ///
    /// Note that the calculus has no move deleting a hook pair outright:
    /// the disk move reads `e_i e_i <-> e_i`, never `e_i e_i <-> 1`. A
    /// curl-star expansion therefore emits branch moves only and leaves
    /// any hook pair to a separate disk event.
    pub fn expand_composites(&self) -> Result<ChartMovie, MovieError> {
        self.validate_ok()?;
        let mut events = Vec::with_capacity(self.events.len());
        for ev in &self.events {
            let p = ev.position;
            match &ev.kind {
                EventKind::XStar { i, below, above } => {
                    for _ in 1..*below {
                        events.push(Event::new(
                            p,
                            EventKind::XTri {
                                i: *i,
                                dir: Direction::Forward,
                            },
                        ));
                    }
                    for _ in 1..*above {
                        events.push(Event::new(
                            p,
                            EventKind::XTri {
                                i: *i,
                                dir: Direction::Backward,
                            },
                        ));
                    }
                }
                EventKind::SquareStar {
                    i,
                    left,
                    right,
                    dir,
                } => {
                    let branch = |sign: Sign, side: Side, dir: Direction, at: usize| {
                        Event::new(
                            at,
                            EventKind::Branch {
                                i: *i,
                                sign,
                                side,
                                dir,
                            },
                        )
                    };
                    match dir {
                        Direction::Forward => {
                            for (t, s) in left.iter().enumerate() {
                                events.push(branch(*s, Side::Left, Direction::Forward, p + t));
                            }
                            for s in right.iter().rev() {
                                events.push(branch(
                                    *s,
                                    Side::Right,
                                    Direction::Forward,
                                    p + left.len(),
                                ));
                            }
                        }
                        Direction::Backward => {
                            for s in right.iter() {
                                events.push(branch(
                                    *s,
                                    Side::Right,
                                    Direction::Backward,
                                    p + left.len(),
                                ));
                            }
                            for (t, s) in left.iter().enumerate().rev() {
                                events.push(branch(*s, Side::Left, Direction::Backward, p + t));
                            }
                        }
                    }
                }
                EventKind::Square6 {
                    i,
                    j,
                    sign,
                    sign2,
                    dir,
                } => {
                    let first = Event::new(
                        p,
                        EventKind::Square5 {
                            i: *i,
                            j: *j,
                            sign: *sign,
                            crossings: Side::Left,
                            dir: Direction::Forward,
                        },
                    );
                    let second = Event::new(
                        p,
                        EventKind::Square5 {
                            i: *j,
                            j: *i,
                            sign: *sign2,
                            crossings: Side::Right,
                            dir: Direction::Backward,
                        },
                    );
                    match dir {
                        Direction::Forward => {
                            events.push(first);
                            events.push(second);
                        }
                        Direction::Backward => {
                            events.push(second.inverse());
                            events.push(first.inverse());
                        }
                    }
                }
                _ => events.push(ev.clone()),
            }
        }
        let out = ChartMovie {
            degree: self.degree,
            start: self.start.clone(),
            events,
        };
        debug_assert!(out.validate_ok().is_ok());
        Ok(out)
    }

    /// Same movie with the do-nothing levels removed.
    pub fn without_nops(&self) -> ChartMovie {
        ChartMovie {
            degree: self.degree,
            start: self.start.clone(),
            events: self
                .events
                .iter()
                .filter(|e| !e.is_nop())
                .cloned()
                .collect(),
        }
    }

    /// Stack `other` on top; its start word must equal our final word.
    pub fn then(&self, other: &ChartMovie) -> Result<ChartMovie, MovieError> {
        if self.degree != other.degree {
            return Err(WordError::DegreeMismatch(self.degree, other.degree).into());
        }
        let top = self.final_word()?;
        if top != other.start {
            return Err(MovieError::InterfaceMismatch(
                top.to_string(),
                other.start.to_string(),
            ));
        }
        let mut events = self.events.clone();
        events.extend(other.events.iter().cloned());
        Ok(ChartMovie {
            degree: self.degree,
            start: self.start.clone(),
            events,
        })
    }
}

/// Serialized form: the start word as text, events as tagged objects.
#[derive(Serialize, Deserialize)]
struct MovieRepr {
    degree: usize,
    start: String,
    events: Vec<Event>,
}

impl Serialize for ChartMovie {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        MovieRepr {
            degree: self.degree,
            start: self.start.to_string(),
            events: self.events.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ChartMovie {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = MovieRepr::deserialize(d)?;
        let start = Word::parse(&repr.start, repr.degree).map_err(serde::de::Error::custom)?;
        Ok(ChartMovie {
            degree: repr.degree,
            start,
            events: repr.events,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str, n: usize) -> Word {
        Word::parse(text, n).unwrap()
    }

    fn movie(degree: usize, start: &str, events: Vec<Event>) -> ChartMovie {
        ChartMovie::new(degree, w(start, degree), events).unwrap()
    }

    #[test]
    fn slice_replay() {
        let m = movie(
            2,
            "1",
            vec![
                Event::new(
                    0,
                    EventKind::XDot {
                        i: 1,
                        dir: Direction::Forward,
                    },
                ),
                Event::new(
                    0,
                    EventKind::XTri {
                        i: 1,
                        dir: Direction::Backward,
                    },
                ),
            ],
        );
        assert_eq!(m.slice_at(0).unwrap(), w("1", 2));
        assert_eq!(m.slice_at(2).unwrap(), w("e1 e1", 2));
        assert!(matches!(
            m.slice_at(3),
            Err(MovieError::LevelOutOfRange { .. })
        ));
    }

    #[test]
    fn saddle_slice() {
        let m = movie(
            2,
            "g1",
            vec![Event::new(
                0,
                EventKind::Saddle {
                    i: 1,
                    sign: Sign::Pos,
                    dir: Direction::Forward,
                },
            )],
        );
        assert_eq!(m.slice_at(1).unwrap(), w("e1", 2));
    }

    #[test]
    fn classification() {
        let regular = movie(
            3,
            "g1 g2 g1",
            vec![Event::new(
                0,
                EventKind::White {
                    i: 1,
                    j: 2,
                    attitude: WhiteAttitude::Upright,
                    dir: Direction::Forward,
                },
            )],
        );
        assert_eq!(regular.classify().unwrap(), SurfaceClass::Regular);

        let curled = movie(
            2,
            "e1",
            vec![Event::new(
                0,
                EventKind::Branch {
                    i: 1,
                    sign: Sign::Pos,
                    side: Side::Left,
                    dir: Direction::Forward,
                },
            )],
        );
        assert_eq!(curled.classify().unwrap(), SurfaceClass::NonRegular);

        let composite = movie(
            3,
            "g1 g2 e1",
            vec![Event::new(
                0,
                EventKind::Square6 {
                    i: 1,
                    j: 2,
                    sign: Sign::Pos,
                    sign2: Sign::Pos,
                    dir: Direction::Forward,
                },
            )],
        );
        assert_eq!(composite.classify().unwrap(), SurfaceClass::Regular);
        // and its expansion stays regular
        assert_eq!(
            composite.expand_composites().unwrap().classify().unwrap(),
            SurfaceClass::Regular
        );
    }

    #[test]
    fn cap_normalization_is_the_standard_replacement() {
        let m = movie(
            2,
            "1",
            vec![
                Event::new(0, EventKind::ECap { i: 1 }),
                Event::new(0, EventKind::ECup { i: 1 }),
            ],
        );
        let n = m.normalize_caps().unwrap();
        let slices: Vec<String> = n.slices().unwrap().iter().map(|s| s.to_string()).collect();
        assert_eq!(slices, ["1", "e1", "e1 e1", "e1", "1"]);

        let plain = movie(2, "e1", vec![]);
        assert_eq!(plain.normalize_caps().unwrap(), plain);
    }

    #[test]
    fn composite_expansion() {
        // degree-4 hook star read with three ends below
        let m = movie(
            2,
            "e1 e1 e1",
            vec![Event::new(
                0,
                EventKind::XStar {
                    i: 1,
                    below: 3,
                    above: 1,
                },
            )],
        );
        let x = m.expand_composites().unwrap();
        assert_eq!(x.events.len(), 2);
        assert_eq!(x.final_word().unwrap(), w("e1", 2));

        // base case: degree 3 star is a single disk vertex
        let m3 = movie(
            2,
            "e1 e1",
            vec![Event::new(
                0,
                EventKind::XStar {
                    i: 1,
                    below: 2,
                    above: 1,
                },
            )],
        );
        assert_eq!(m3.expand_composites().unwrap().events.len(), 1);

        let sq = movie(
            3,
            "g1 g2 e1",
            vec![Event::new(
                0,
                EventKind::Square6 {
                    i: 1,
                    j: 2,
                    sign: Sign::Pos,
                    sign2: Sign::Pos,
                    dir: Direction::Forward,
                },
            )],
        );
        let xs = sq.expand_composites().unwrap();
        let slices: Vec<String> = xs.slices().unwrap().iter().map(|s| s.to_string()).collect();
        assert_eq!(slices, ["g1 g2 e1", "e2 e1", "e2 g1 g2"]);

        // curl star: e1 -> G1 e1 g1 g1
        let st = movie(
            2,
            "e1",
            vec![Event::new(
                0,
                EventKind::SquareStar {
                    i: 1,
                    left: vec![Sign::Neg],
                    right: vec![Sign::Pos, Sign::Pos],
                    dir: Direction::Forward,
                },
            )],
        );
        let xst = st.expand_composites().unwrap();
        assert_eq!(xst.final_word().unwrap(), w("G1 e1 g1 g1", 2));
        assert_eq!(xst.events.len(), 3);
        // and back
        let back = movie(
            2,
            "G1 e1 g1 g1",
            vec![Event::new(
                0,
                EventKind::SquareStar {
                    i: 1,
                    left: vec![Sign::Neg],
                    right: vec![Sign::Pos, Sign::Pos],
                    dir: Direction::Backward,
                },
            )],
        );
        assert_eq!(
            back.expand_composites().unwrap().final_word().unwrap(),
            w("e1", 2)
        );
    }

    #[test]
    fn json_round_trip() {
        let m = movie(
            3,
            "g1 g2 e1",
            vec![
                Event::new(
                    0,
                    EventKind::Square6 {
                        i: 1,
                        j: 2,
                        sign: Sign::Pos,
                        sign2: Sign::Neg,
                        dir: Direction::Forward,
                    },
                ),
                Event::new(0, EventKind::Nop),
            ],
        );
        let text = serde_json::to_string_pretty(&m).unwrap();
        let back: ChartMovie = serde_json::from_str(&text).unwrap();
        assert_eq!(m, back);
    }
}
