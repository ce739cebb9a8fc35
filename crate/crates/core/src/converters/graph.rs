//! The planar-graph form of a chart: labeled, partially oriented edges
//! and typed vertices positioned in the unit square. Derived from the
//! leveled form for rendering and interchange; the movie stays the
//! canonical representation.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::chart_movie::EventKind;
use crate::word_algebra::{Letter, LetterKind, Sign};

use super::ConvertError;

/// Which edge of the unit square a boundary point lies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundarySide {
    Bottom,
    Top,
}

/// An edge label: the strand index of a crossing or hook edge. Crossing
/// edges additionally carry an orientation on the edge itself.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeLabel {
    Crossing(usize),
    Hook(usize),
}

impl EdgeLabel {
    pub fn index(&self) -> usize {
        match self {
            EdgeLabel::Crossing(i) | EdgeLabel::Hook(i) => *i,
        }
    }

    pub fn of_letter(l: Letter) -> EdgeLabel {
        match l.kind {
            LetterKind::Crossing(_) => EdgeLabel::Crossing(l.index),
            LetterKind::Hook => EdgeLabel::Hook(l.index),
        }
    }

    pub fn matches(&self, l: Letter) -> bool {
        EdgeLabel::of_letter(l) == *self
    }
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeLabel::Crossing(i) => write!(f, "g{i}"),
            EdgeLabel::Hook(i) => write!(f, "e{i}"),
        }
    }
}

impl Serialize for EdgeLabel {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for EdgeLabel {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let tok = String::deserialize(d)?;
        let err = || serde::de::Error::custom(format!("bad edge label `{tok}`"));
        let mut chars = tok.chars();
        let head = chars.next().ok_or_else(err)?;
        let index: usize = chars.as_str().parse().map_err(|_| err())?;
        match head {
            'g' => Ok(EdgeLabel::Crossing(index)),
            'e' => Ok(EdgeLabel::Hook(index)),
            _ => Err(err()),
        }
    }
}

/// One attachment of an edge.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum EdgeEnd {
    /// Slot `slot` of vertex `vertex`; slots count the consumed letters
    /// left to right, then the produced letters.
    Vertex { vertex: usize, slot: usize },
    /// The `index`-th boundary point on the given side.
    Boundary { side: BoundarySide, index: usize },
}

/// An edge of the chart, with optional polyline geometry.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChartEdge {
    pub id: usize,
    pub label: EdgeLabel,
    /// Crossing edges only: orientation agrees with the path order
    /// (`ends.0` towards `ends.1`).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub forward: Option<bool>,
    /// `None` marks a closed loop edge.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ends: Option<(EdgeEnd, EdgeEnd)>,
    /// Polyline through the square; empty when the file leaves layout
    /// to the loader.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub path: Vec<(f64, f64)>,
}

/// A typed vertex. The kind carries every local parameter (indices,
/// signs, rotation variant, reading direction).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChartVertex {
    pub id: usize,
    pub kind: EventKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub at: Option<(f64, f64)>,
    /// Letter-offset hint for creation vertices in coordinate-free
    /// files; ignored when geometry is present.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub at_index: Option<usize>,
}

impl ChartVertex {
    /// `(below, above)` letter readings of this vertex.
    pub fn readings(&self) -> (Vec<Letter>, Vec<Letter>) {
        crate::chart_movie::Event::new(0, self.kind.clone()).patterns()
    }
}

/// A chart as a labeled planar graph in the unit square.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChartGraph {
    pub degree: usize,
    pub vertices: Vec<ChartVertex>,
    pub edges: Vec<ChartEdge>,
}

impl ChartGraph {
    pub fn vertex(&self, id: usize) -> Option<&ChartVertex> {
        self.vertices.iter().find(|v| v.id == id)
    }

    pub fn has_geometry(&self) -> bool {
        self.vertices.iter().all(|v| v.at.is_some()) && self.edges.iter().all(|e| e.path.len() >= 2)
    }

    /// Boundary letters on one side, sorted by index. The letter sign of
    /// a crossing edge is its orientation at that end: positive when the
    /// edge points away from the bottom (resp. towards the top).
    pub fn boundary_word(&self, side: BoundarySide) -> Result<Vec<Letter>, ConvertError> {
        let mut found: Vec<(usize, Letter)> = Vec::new();
        for e in &self.edges {
            let Some((a, b)) = e.ends else { continue };
            for (which, end) in [(0u8, a), (1u8, b)] {
                if let EdgeEnd::Boundary { side: s, index } = end {
                    if s == side {
                        found.push((index, edge_letter_at_end(e, which, side)?));
                    }
                }
            }
        }
        found.sort_by_key(|(i, _)| *i);
        for (k, (i, _)) in found.iter().enumerate() {
            if *i != k {
                return Err(ConvertError::Chart(format!(
                    "boundary indices on {side:?} are not contiguous"
                )));
            }
        }
        Ok(found.into_iter().map(|(_, l)| l).collect())
    }

    /// Local validation: every vertex slot carried by exactly one edge
    /// end whose label and orientation match the vertex reading, indices
    /// within the degree, boundary indices contiguous.
    pub fn validate(&self) -> Result<(), ConvertError> {
        let mut by_id: HashMap<usize, &ChartVertex> = HashMap::new();
        for v in &self.vertices {
            if by_id.insert(v.id, v).is_some() {
                return Err(ConvertError::Chart(format!("duplicate vertex id {}", v.id)));
            }
            let probe = crate::chart_movie::Event::new(0, v.kind.clone());
            if let Err(msg) = probe.check_params(self.degree) {
                return Err(ConvertError::Chart(format!(
                    "vertex {} (clause {}): {msg}",
                    v.id,
                    probe.clause()
                )));
            }
            if matches!(v.kind, EventKind::Nop) {
                return Err(ConvertError::Chart(format!("vertex {} has no type", v.id)));
            }
        }

        let mut edge_ids = std::collections::HashSet::new();
        let mut slots: HashMap<(usize, usize), Letter> = HashMap::new();
        for e in &self.edges {
            if !edge_ids.insert(e.id) {
                return Err(ConvertError::Chart(format!("duplicate edge id {}", e.id)));
            }
            let i = e.label.index();
            if i == 0 || i >= self.degree {
                return Err(ConvertError::Chart(format!(
                    "edge {}: label index {i} out of range for degree {}",
                    e.id, self.degree
                )));
            }
            if matches!(e.label, EdgeLabel::Crossing(_)) && e.forward.is_none() {
                return Err(ConvertError::Chart(format!(
                    "edge {}: crossing edge lacks an orientation",
                    e.id
                )));
            }
            if let Some((a, b)) = e.ends {
                for (which, end) in [(0u8, a), (1u8, b)] {
                    if let EdgeEnd::Vertex { vertex, slot } = end {
                        let v = by_id.get(&vertex).ok_or_else(|| {
                            ConvertError::Chart(format!("edge {}: unknown vertex {vertex}", e.id))
                        })?;
                        let (below, above) = v.readings();
                        let total = below.len() + above.len();
                        if slot >= total {
                            return Err(ConvertError::Chart(format!(
                                "edge {}: vertex {vertex} has no slot {slot}",
                                e.id
                            )));
                        }
                        let expect = if slot < below.len() {
                            below[slot]
                        } else {
                            above[slot - below.len()]
                        };
                        if !e.label.matches(expect) {
                            return Err(ConvertError::Chart(format!(
                                "vertex {vertex} (clause {}): slot {slot} expects `{expect}`, edge {} is labeled `{}`",
                                crate::chart_movie::Event::new(0, v.kind.clone()).clause(),
                                e.id,
                                e.label
                            )));
                        }
                        if slots.insert((vertex, slot), expect).is_some() {
                            return Err(ConvertError::Chart(format!(
                                "vertex {vertex}: slot {slot} attached twice"
                            )));
                        }
                        let _ = which;
                    }
                }
            } else if e.path.len() < 3 {
                return Err(ConvertError::Chart(format!(
                    "edge {}: closed loop without geometry",
                    e.id
                )));
            }
        }

        for v in &self.vertices {
            let (below, above) = v.readings();
            for slot in 0..below.len() + above.len() {
                if !slots.contains_key(&(v.id, slot)) {
                    return Err(ConvertError::Chart(format!(
                        "vertex {} (clause {}): slot {slot} unattached",
                        v.id,
                        crate::chart_movie::Event::new(0, v.kind.clone()).clause()
                    )));
                }
            }
        }

        self.boundary_word(BoundarySide::Bottom)?;
        self.boundary_word(BoundarySide::Top)?;
        Ok(())
    }
}

/// The letter read where edge `e` meets a horizontal boundary: label
/// plus, for crossing edges, the orientation relative to upward.
fn edge_letter_at_end(
    e: &ChartEdge,
    which: u8,
    side: BoundarySide,
) -> Result<Letter, ConvertError> {
    match e.label {
        EdgeLabel::Hook(i) => Ok(Letter::hook(i)),
        EdgeLabel::Crossing(i) => {
            let forward = e.forward.ok_or_else(|| {
                ConvertError::Chart(format!("edge {}: crossing edge lacks an orientation", e.id))
            })?;
            // Path order runs ends.0 -> ends.1. At a bottom end the edge
            // leaves upward iff that end is the path start; at a top end
            // it arrives upward iff that end is the path end.
            let upward_along_path = match side {
                BoundarySide::Bottom => which == 0,
                BoundarySide::Top => which == 1,
            };
            let sign = if forward == upward_along_path {
                Sign::Pos
            } else {
                Sign::Neg
            };
            Ok(Letter::crossing(i, sign))
        }
    }
}
