//! Data-driven templates for the braid chart moves of types II and III.
//!
//! Each template is a pair of event-sequence patterns over variables
//! `i`, `j` (labels), `s`, `d` (signs) and a base offset `p`. Matching
//! one side against a span of movie events binds the variables; unbound
//! ones are enumerated over the degree. The shapes live in
//! `templates.json` next to this module.

use std::sync::OnceLock;

use serde::Deserialize;

use crate::chart_movie::{Event, EventKind, WhiteAttitude};
use crate::word_algebra::{Direction, Letter, LetterKind, Sign};

#[derive(Deserialize)]
struct TemplateFile {
    #[allow(dead_code)]
    note: String,
    templates: Vec<Template>,
}

#[derive(Deserialize)]
pub struct Template {
    pub name: String,
    pub kind: String,
    lhs: Vec<PatEvent>,
    rhs: Vec<PatEvent>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum IndexRef {
    Lit(usize),
    Var(String),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum SignRef {
    Lit(i8),
    Var(String),
}

#[derive(Deserialize)]
struct PatLetter {
    g: IndexRef,
    sign: SignRef,
}

#[derive(Deserialize)]
#[serde(tag = "ev", rename_all = "kebab-case")]
enum PatEvent {
    BlackG {
        i: IndexRef,
        sign: SignRef,
        dir: String,
        at: usize,
    },
    Crossing {
        left: PatLetter,
        right: PatLetter,
        at: usize,
    },
    White {
        i: IndexRef,
        j: IndexRef,
        dir: String,
        at: usize,
    },
}

/// Variable assignment for one template match.
#[derive(Clone, Copy, Default, Debug, PartialEq, Eq)]
pub struct Binding {
    pub i: Option<usize>,
    pub j: Option<usize>,
    pub s: Option<Sign>,
    pub d: Option<Sign>,
    pub p: Option<usize>,
}

impl Binding {
    fn index(&mut self, r: &IndexRef, value: usize) -> bool {
        match r {
            IndexRef::Lit(v) => *v == value,
            IndexRef::Var(name) => {
                let slot = match name.as_str() {
                    "i" => &mut self.i,
                    "j" => &mut self.j,
                    _ => return false,
                };
                match slot {
                    Some(v) => *v == value,
                    None => {
                        *slot = Some(value);
                        true
                    }
                }
            }
        }
    }

    fn sign(&mut self, r: &SignRef, value: Sign) -> bool {
        match r {
            SignRef::Lit(v) => Sign::from_i64(*v as i64) == Some(value),
            SignRef::Var(name) => {
                let slot = match name.as_str() {
                    "s" => &mut self.s,
                    "d" => &mut self.d,
                    _ => return false,
                };
                match slot {
                    Some(v) => *v == value,
                    None => {
                        *slot = Some(value);
                        true
                    }
                }
            }
        }
    }

    fn position(&mut self, at: usize, value: usize) -> bool {
        if value < at {
            return false;
        }
        match self.p {
            Some(p) => p + at == value,
            None => {
                self.p = Some(value - at);
                true
            }
        }
    }

    fn index_out(&self, r: &IndexRef) -> Option<usize> {
        match r {
            IndexRef::Lit(v) => Some(*v),
            IndexRef::Var(name) => match name.as_str() {
                "i" => self.i,
                "j" => self.j,
                _ => None,
            },
        }
    }

    fn sign_out(&self, r: &SignRef) -> Option<Sign> {
        match r {
            SignRef::Lit(v) => Sign::from_i64(*v as i64),
            SignRef::Var(name) => match name.as_str() {
                "s" => self.s,
                "d" => self.d,
                _ => None,
            },
        }
    }
}

fn parse_dir(text: &str) -> Direction {
    match text {
        "fwd" => Direction::Forward,
        _ => Direction::Backward,
    }
}

fn match_pat(pat: &PatEvent, ev: &Event, binding: &mut Binding) -> bool {
    match (pat, &ev.kind) {
        (
            PatEvent::BlackG { i, sign, dir, at },
            EventKind::BlackG {
                i: ei,
                sign: es,
                dir: ed,
            },
        ) => {
            parse_dir(dir) == *ed
                && binding.index(i, *ei)
                && binding.sign(sign, *es)
                && binding.position(*at, ev.position)
        }
        (
            PatEvent::Crossing { left, right, at },
            EventKind::Crossing {
                left: el,
                right: er,
            },
        ) => {
            let ok_letter = |pl: &PatLetter, l: &Letter, b: &mut Binding| match l.kind {
                LetterKind::Crossing(s) => b.index(&pl.g, l.index) && b.sign(&pl.sign, s),
                LetterKind::Hook => false,
            };
            binding.position(*at, ev.position)
                && ok_letter(left, el, binding)
                && ok_letter(right, er, binding)
        }
        (
            PatEvent::White { i, j, dir, at },
            EventKind::White {
                i: ei,
                j: ej,
                attitude: WhiteAttitude::Upright,
                dir: ed,
            },
        ) => {
            parse_dir(dir) == *ed
                && binding.index(i, *ei)
                && binding.index(j, *ej)
                && binding.position(*at, ev.position)
        }
        _ => false,
    }
}

fn build_pat(pat: &PatEvent, binding: &Binding) -> Option<Event> {
    let p = binding.p?;
    match pat {
        PatEvent::BlackG { i, sign, dir, at } => Some(Event::new(
            p + at,
            EventKind::BlackG {
                i: binding.index_out(i)?,
                sign: binding.sign_out(sign)?,
                dir: parse_dir(dir),
            },
        )),
        PatEvent::Crossing { left, right, at } => Some(Event::new(
            p + at,
            EventKind::Crossing {
                left: Letter::crossing(binding.index_out(&left.g)?, binding.sign_out(&left.sign)?),
                right: Letter::crossing(
                    binding.index_out(&right.g)?,
                    binding.sign_out(&right.sign)?,
                ),
            },
        )),
        PatEvent::White { i, j, dir, at } => Some(Event::new(
            p + at,
            EventKind::White {
                i: binding.index_out(i)?,
                j: binding.index_out(j)?,
                attitude: WhiteAttitude::Upright,
                dir: parse_dir(dir),
            },
        )),
    }
}

pub fn templates() -> &'static [Template] {
    static FILE: OnceLock<TemplateFile> = OnceLock::new();
    &FILE
        .get_or_init(|| {
            serde_json::from_str(include_str!("templates.json"))
                .expect("embedded template file parses")
        })
        .templates
}

impl Template {
    pub fn lhs_len(&self) -> usize {
        self.lhs.len()
    }

    pub fn rhs_len(&self) -> usize {
        self.rhs.len()
    }

    /// Match one side against `events`; on success return every
    /// completion of the other side, enumerating unbound variables over
    /// the valid labels of `degree`.
    pub fn rewrites(&self, events: &[Event], lhs_to_rhs: bool, degree: usize) -> Vec<Vec<Event>> {
        let (source, target) = if lhs_to_rhs {
            (&self.lhs, &self.rhs)
        } else {
            (&self.rhs, &self.lhs)
        };
        if events.len() != source.len() {
            return Vec::new();
        }
        let mut binding = Binding::default();
        for (pat, ev) in source.iter().zip(events) {
            if !match_pat(pat, ev, &mut binding) {
                return Vec::new();
            }
        }
        // enumerate any variables the source side left unbound
        let index_choices = |bound: Option<usize>| -> Vec<Option<usize>> {
            match bound {
                Some(v) => vec![Some(v)],
                None => (1..degree).map(Some).collect(),
            }
        };
        let sign_choices = |bound: Option<Sign>| -> Vec<Option<Sign>> {
            match bound {
                Some(v) => vec![Some(v)],
                None => Sign::BOTH.iter().copied().map(Some).collect(),
            }
        };
        let mut out: Vec<Vec<Event>> = Vec::new();
        for i in index_choices(binding.i) {
            for j in index_choices(binding.j) {
                for s in sign_choices(binding.s) {
                    for d in sign_choices(binding.d) {
                        let full = Binding {
                            i,
                            j,
                            s,
                            d,
                            p: binding.p,
                        };
                        let built: Option<Vec<Event>> =
                            target.iter().map(|pat| build_pat(pat, &full)).collect();
                        // variables unused by the target build identical
                        // sequences; keep one of each
                        if let Some(events) = built {
                            if !out.contains(&events) {
                                out.push(events);
                            }
                        }
                    }
                }
            }
        }
        out
    }
}
