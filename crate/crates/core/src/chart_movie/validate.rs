//! Per-event legality reports.
//!
//! Every event is checked against the local conditions of its vertex
//! type — label indices, the `|i-j|` side conditions, the letter pattern
//! at its offset — and every intermediate slice must be a well-formed
//! word. Failures name the violated vertex clause.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{ChartMovie, Event, EventKind};
use crate::word_algebra::{Letter, LetterKind};

/// The vertex-type clause an event is validated against.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Clause {
    /// (a) black vertex
    A,
    /// (b) crossing of two oriented crossing-edges
    B,
    /// (c) white vertex
    C,
    /// (d) degree-1 hook vertex
    D,
    /// (e) degree-2 saddle vertex
    E,
    /// (f) crossing involving a hook edge
    F,
    /// (g) hook square
    G,
    /// (h) five-edge square
    H,
    /// (i) disk vertex
    I,
    /// (j) curl vertex
    J,
    /// (k) composite six-edge square
    K,
    /// (i') composite hook vertex
    IPrime,
    /// (j') composite curl vertex
    JPrime,
    /// smooth extremum of an edge, not a vertex
    Extremum,
    /// no-op level
    None,
}

impl Clause {
    pub fn name(&self) -> &'static str {
        match self {
            Clause::A => "a",
            Clause::B => "b",
            Clause::C => "c",
            Clause::D => "d",
            Clause::E => "e",
            Clause::F => "f",
            Clause::G => "g",
            Clause::H => "h",
            Clause::I => "i",
            Clause::J => "j",
            Clause::K => "k",
            Clause::IPrime => "i'",
            Clause::JPrime => "j'",
            Clause::Extremum => "extremum",
            Clause::None => "-",
        }
    }

    pub fn from_name(name: &str) -> Option<Clause> {
        let all = [
            Clause::A,
            Clause::B,
            Clause::C,
            Clause::D,
            Clause::E,
            Clause::F,
            Clause::G,
            Clause::H,
            Clause::I,
            Clause::J,
            Clause::K,
            Clause::IPrime,
            Clause::JPrime,
            Clause::Extremum,
            Clause::None,
        ];
        all.into_iter().find(|c| c.name() == name)
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl Serialize for Clause {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for Clause {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let name = String::deserialize(d)?;
        Clause::from_name(&name)
            .ok_or_else(|| serde::de::Error::custom(format!("unknown clause `{name}`")))
    }
}

impl Event {
    /// The clause this event is validated under.
    pub fn clause(&self) -> Clause {
        match &self.kind {
            EventKind::BlackG { .. } => Clause::A,
            EventKind::XDot { .. } => Clause::D,
            EventKind::Saddle { .. } => Clause::E,
            EventKind::GCap { .. } | EventKind::GCup { .. } => Clause::Extremum,
            EventKind::ECap { .. } | EventKind::ECup { .. } => Clause::Extremum,
            EventKind::White { .. } => Clause::C,
            EventKind::Crossing { left, right } => {
                let both_crossings = matches!(left.kind, LetterKind::Crossing(_))
                    && matches!(right.kind, LetterKind::Crossing(_));
                if both_crossings {
                    Clause::B
                } else {
                    Clause::F
                }
            }
            EventKind::Square8 { .. } => Clause::G,
            EventKind::Square5 { .. } => Clause::H,
            EventKind::XTri { .. } => Clause::I,
            EventKind::Branch { .. } => Clause::J,
            EventKind::Square6 { .. } => Clause::K,
            EventKind::XStar { .. } => Clause::IPrime,
            EventKind::SquareStar { .. } => Clause::JPrime,
            EventKind::Nop => Clause::None,
        }
    }
}

/// Outcome of checking one event.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EventCheck {
    pub event: usize,
    pub clause: Clause,
    pub ok: bool,
    pub detail: String,
}

/// The full verdict; `first_failure` is the earliest illegal event.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ValidationReport {
    pub degree: usize,
    pub valid: bool,
    pub first_failure: Option<usize>,
    pub checks: Vec<EventCheck>,
}

impl ValidationReport {
    pub fn failing_clause(&self) -> Option<Clause> {
        let index = self.first_failure?;
        self.checks
            .iter()
            .find(|c| c.event == index && !c.ok)
            .map(|c| c.clause)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "degree {}: {}",
            self.degree,
            if self.valid { "valid" } else { "invalid" }
        )?;
        for c in &self.checks {
            writeln!(
                f,
                "  event {:>3} [clause {}] {} {}",
                c.event,
                c.clause,
                if c.ok { "ok " } else { "BAD" },
                c.detail
            )?;
        }
        Ok(())
    }
}

fn describe(consumed: &[Letter], produced: &[Letter]) -> String {
    let one = |p: &[Letter]| {
        if p.is_empty() {
            "1".to_string()
        } else {
            p.iter()
                .map(|l| l.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        }
    };
    format!("{} -> {}", one(consumed), one(produced))
}

pub(super) fn validate_movie(movie: &ChartMovie) -> ValidationReport {
    let mut checks = Vec::with_capacity(movie.events.len());
    let mut first_failure = None;
    let mut word = movie.start.clone();

    for (k, ev) in movie.events.iter().enumerate() {
        let clause = ev.clause();
        // parameter constraints, then the positional pattern
        let outcome = ev
            .check_params(movie.degree)
            .and_then(|()| ev.apply(&word).map_err(|e| e.to_string()));
        match outcome {
            Ok(next) => {
                let (c, p) = ev.patterns();
                checks.push(EventCheck {
                    event: k,
                    clause,
                    ok: true,
                    detail: format!("@{} {}", ev.position, describe(&c, &p)),
                });
                word = next;
            }
            Err(detail) => {
                checks.push(EventCheck {
                    event: k,
                    clause,
                    ok: false,
                    detail,
                });
                first_failure = Some(k);
                break;
            }
        }
    }

    ValidationReport {
        degree: movie.degree,
        valid: first_failure.is_none(),
        first_failure,
        checks,
    }
}
