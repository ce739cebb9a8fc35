//! Planar graph to leveled chart.
//!
//! A horizontal sweep reads one vertex or edge extremum per level; ties
//! break by stable id order (the deterministic jitter). Between levels
//! the crossing points of the sweep line keep their left-to-right
//! order, which gives every event its letter offset.
//!
//! Braid vertices in a non-upright attitude compile to their derived
//! script (cancellation pairs around an upright vertex); other square
//! vertices must sit in a canonical attitude and are rejected otherwise.
//! Coordinate-free charts are reconstructed combinatorially: vertices
//! level in id-respecting topological order, edges must be monotone,
//! and pure-creation vertices sit at their `at_index` hint (right end
//! by default).

use crate::chart_movie::{ChartMovie, Event, EventKind, WhiteAttitude};
use crate::word_algebra::{
    expand_derived_rule, Direction, Letter, LetterKind, MoveStep, Rule, Sign, Word,
};

use super::graph::{BoundarySide, ChartGraph, EdgeEnd, EdgeLabel};
use super::ConvertError;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Term {
    Bottom(usize),
    Top(usize),
    Vertex { v: usize, slot: usize },
    Ext(usize),
}

struct Branch {
    letter: Letter,
    /// Points in ascending y.
    pts: Vec<(f64, f64)>,
    lower: Term,
    upper: Term,
}

struct Extremum {
    is_min: bool,
    at: (f64, f64),
}

/// Reconstruct the movie a chart levels to.
pub fn chart_graph_to_movie(graph: &ChartGraph) -> Result<ChartMovie, ConvertError> {
    graph.validate()?;
    if graph.has_geometry() {
        sweep(graph)
    } else {
        reconstruct_combinatorial(graph)
    }
}

/// Translate one step of a derived-move script into the chart event
/// performing it.
fn step_event(step: &MoveStep, offset: usize) -> Event {
    let position = offset + step.position;
    match (step.rule, step.direction) {
        (Rule::R4 { i, sign }, Direction::Forward) => {
            Event::new(position, EventKind::GCup { i, sign })
        }
        (Rule::R4 { i, sign }, Direction::Backward) => {
            Event::new(position, EventKind::GCap { i, sign })
        }
        (Rule::R5 { i, j }, dir) => Event::new(
            position,
            EventKind::White {
                i,
                j,
                attitude: WhiteAttitude::Upright,
                dir,
            },
        ),
        other => unreachable!("braid-triple scripts use only R4/R5, got {:?}", other),
    }
}

/// The one-or-more events a leveled vertex emits. Non-upright braid
/// vertices canonicalize to their derived script.
fn vertex_events(kind: &EventKind, position: usize) -> Vec<Event> {
    if let EventKind::White {
        i,
        j,
        attitude,
        dir,
    } = kind
    {
        let rule = match attitude {
            WhiteAttitude::Upright => return vec![Event::new(position, kind.clone())],
            WhiteAttitude::Inverted => Rule::D15 {
                i: *i,
                j: *j,
                sign: Sign::Neg,
            },
            WhiteAttitude::TiltedRight(s) => Rule::D16 {
                i: *i,
                j: *j,
                sign: *s,
            },
            WhiteAttitude::TiltedLeft(s) => Rule::D17 {
                i: *i,
                j: *j,
                sign: *s,
            },
        };
        let mut script = expand_derived_rule(&rule).expect("derived tag");
        if *dir == Direction::Backward {
            script = script.inverted();
        }
        script
            .steps
            .iter()
            .map(|s| step_event(s, position))
            .collect()
    } else {
        vec![Event::new(position, kind.clone())]
    }
}

// ---------------------------------------------------------------------
// geometric sweep

fn interp_x(pts: &[(f64, f64)], y: f64) -> f64 {
    if y <= pts[0].1 {
        return pts[0].0;
    }
    for w in pts.windows(2) {
        let ((x0, y0), (x1, y1)) = (w[0], w[1]);
        if y <= y1 {
            if (y1 - y0).abs() < f64::EPSILON {
                return x1;
            }
            return x0 + (x1 - x0) * (y - y0) / (y1 - y0);
        }
    }
    pts.last().expect("branch has points").0
}

/// Cut one polyline into monotone runs at its interior extrema.
/// `t_first`/`t_last` are the terminals at the path's two ends.
fn split_path(
    edge_id: usize,
    pts: &[(f64, f64)],
    t_first: Term,
    t_last: Term,
    letter_for: &dyn Fn(bool) -> Result<Letter, ConvertError>,
    extrema: &mut Vec<Extremum>,
    branches: &mut Vec<Branch>,
) -> Result<(), ConvertError> {
    let k = pts.len() - 1;
    let mut dirs = Vec::with_capacity(k); // dirs[t-1]: segment p_{t-1} -> p_t goes up
    for t in 1..=k {
        let dy = pts[t].1 - pts[t - 1].1;
        if dy.abs() < 1e-12 {
            return Err(ConvertError::Sweep(format!(
                "edge {edge_id}: level segment in polyline"
            )));
        }
        dirs.push(dy > 0.0);
    }
    let mut cuts = vec![(0usize, t_first)];
    for t in 1..k {
        if dirs[t] != dirs[t - 1] {
            let ext = extrema.len();
            extrema.push(Extremum {
                is_min: dirs[t],
                at: pts[t],
            });
            cuts.push((t, Term::Ext(ext)));
        }
    }
    cuts.push((k, t_last));
    for w in cuts.windows(2) {
        let ((a, ta), (b, tb)) = (w[0], w[1]);
        let up = dirs[a];
        let mut run = pts[a..=b].to_vec();
        if !up {
            run.reverse();
        }
        let (lower, upper) = if up { (ta, tb) } else { (tb, ta) };
        branches.push(Branch {
            letter: letter_for(up)?,
            pts: run,
            lower,
            upper,
        });
    }
    Ok(())
}

/// Split every edge into monotone branches, cut at interior extrema.
fn branches_of(graph: &ChartGraph) -> Result<(Vec<Branch>, Vec<Extremum>), ConvertError> {
    let mut branches = Vec::new();
    let mut extrema = Vec::new();

    for e in &graph.edges {
        let letter_for = |ascending_in_path: bool| -> Result<Letter, ConvertError> {
            Ok(match e.label {
                EdgeLabel::Hook(i) => Letter::hook(i),
                EdgeLabel::Crossing(i) => {
                    let forward = e.forward.ok_or_else(|| {
                        ConvertError::Chart(format!("edge {}: missing orientation", e.id))
                    })?;
                    Letter::crossing(
                        i,
                        if forward == ascending_in_path {
                            Sign::Pos
                        } else {
                            Sign::Neg
                        },
                    )
                }
            })
        };

        let mut pts = e.path.clone();
        if pts.len() < 2 {
            return Err(ConvertError::Chart(format!("edge {}: no geometry", e.id)));
        }
        match e.ends {
            Some((end_a, end_b)) => {
                let map = |end: EdgeEnd| match end {
                    EdgeEnd::Boundary {
                        side: BoundarySide::Bottom,
                        index,
                    } => Term::Bottom(index),
                    EdgeEnd::Boundary {
                        side: BoundarySide::Top,
                        index,
                    } => Term::Top(index),
                    EdgeEnd::Vertex { vertex, slot } => Term::Vertex { v: vertex, slot },
                };
                split_path(
                    e.id,
                    &pts,
                    map(end_a),
                    map(end_b),
                    &letter_for,
                    &mut extrema,
                    &mut branches,
                )?;
            }
            None => {
                // closed loop: drop the duplicated closing point and rotate
                // the cycle to start at an extremum
                if pts.first() == pts.last() {
                    pts.pop();
                }
                let m = pts.len();
                if m < 3 {
                    return Err(ConvertError::Chart(format!(
                        "edge {}: degenerate loop",
                        e.id
                    )));
                }
                let seg_up = |t: usize| pts[(t + 1) % m].1 > pts[t].1;
                let is_ext = |t: usize| seg_up((t + m - 1) % m) != seg_up(t);
                let Some(f) = (0..m).find(|&t| is_ext(t)) else {
                    return Err(ConvertError::Chart(format!("edge {}: flat loop", e.id)));
                };
                let rotated: Vec<(f64, f64)> = (0..=m).map(|t| pts[(f + t) % m]).collect();
                let e0 = extrema.len();
                extrema.push(Extremum {
                    is_min: seg_up(f),
                    at: pts[f],
                });
                split_path(
                    e.id,
                    &rotated,
                    Term::Ext(e0),
                    Term::Ext(e0),
                    &letter_for,
                    &mut extrema,
                    &mut branches,
                )?;
            }
        }
    }
    Ok((branches, extrema))
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum CritKind {
    Vertex(usize),
    Ext(usize),
}

fn sweep(graph: &ChartGraph) -> Result<ChartMovie, ConvertError> {
    let (branches, extrema) = branches_of(graph)?;

    let mut crits: Vec<(f64, CritKind)> = Vec::new();
    for v in &graph.vertices {
        let (_, y) = v.at.expect("geometry checked");
        crits.push((y, CritKind::Vertex(v.id)));
    }
    for (k, ext) in extrema.iter().enumerate() {
        crits.push((ext.at.1, CritKind::Ext(k)));
    }
    crits.sort_by(|a, b| {
        a.0.partial_cmp(&b.0)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(a.1.cmp(&b.1))
    });

    // live branches crossing the sweep line, left to right
    let mut bottoms: Vec<(usize, usize)> = branches
        .iter()
        .enumerate()
        .filter_map(|(id, b)| match b.lower {
            Term::Bottom(i) => Some((i, id)),
            _ => None,
        })
        .collect();
    bottoms.sort();
    let mut live: Vec<usize> = bottoms.into_iter().map(|(_, id)| id).collect();
    let start_letters: Vec<Letter> = live.iter().map(|&b| branches[b].letter).collect();
    let start =
        Word::new(graph.degree, start_letters).map_err(|e| ConvertError::Chart(e.to_string()))?;

    let mut events: Vec<Event> = Vec::new();

    for &(y, kind) in &crits {
        match kind {
            CritKind::Ext(k) if extrema[k].is_min => {
                let mut pair: Vec<usize> = branches
                    .iter()
                    .enumerate()
                    .filter_map(|(id, b)| (b.lower == Term::Ext(k)).then_some(id))
                    .collect();
                if pair.len() != 2 {
                    return Err(ConvertError::Sweep(format!(
                        "minimum joins {} branches",
                        pair.len()
                    )));
                }
                // order the two branches by x just above the extremum
                let probe = branches[pair[0]].pts[1].1.min(branches[pair[1]].pts[1].1);
                pair.sort_by(|&a, &b| {
                    interp_x(&branches[a].pts, probe)
                        .partial_cmp(&interp_x(&branches[b].pts, probe))
                        .unwrap_or(std::cmp::Ordering::Equal)
                });
                let x = extrema[k].at.0;
                let position = live
                    .iter()
                    .filter(|&&b| interp_x(&branches[b].pts, y) < x)
                    .count();
                let (la, lb) = (branches[pair[0]].letter, branches[pair[1]].letter);
                let ev = min_event(la, lb, position)?;
                events.push(ev);
                live.insert(position, pair[0]);
                live.insert(position + 1, pair[1]);
            }
            CritKind::Ext(k) => {
                let found: Vec<usize> = live
                    .iter()
                    .enumerate()
                    .filter_map(|(pos, &b)| (branches[b].upper == Term::Ext(k)).then_some(pos))
                    .collect();
                if found.len() != 2 || found[1] != found[0] + 1 {
                    return Err(ConvertError::Sweep(
                        "maximum must close two adjacent crossing points".into(),
                    ));
                }
                let position = found[0];
                let (la, lb) = (
                    branches[live[position]].letter,
                    branches[live[position + 1]].letter,
                );
                let ev = max_event(la, lb, position)?;
                events.push(ev);
                live.drain(position..position + 2);
            }
            CritKind::Vertex(vid) => {
                let vertex = graph.vertex(vid).expect("validated");
                let (below, above) = vertex.readings();
                let consumed: Vec<(usize, usize)> = live
                    .iter()
                    .enumerate()
                    .filter_map(|(pos, &b)| match branches[b].upper {
                        Term::Vertex { v, slot } if v == vid => Some((pos, slot)),
                        _ => None,
                    })
                    .collect();
                if consumed.len() != below.len() {
                    return Err(ConvertError::Sweep(format!(
                        "vertex {vid}: {} incoming branches, reading needs {}",
                        consumed.len(),
                        below.len()
                    )));
                }
                for (c, &(pos, slot)) in consumed.iter().enumerate() {
                    if slot != c || (c > 0 && pos != consumed[c - 1].0 + 1) {
                        return Err(ConvertError::Sweep(format!(
                            "vertex {vid}: incoming branches not adjacent in slot order; \
                             rotate the vertex to a canonical attitude"
                        )));
                    }
                    let found = branches[live[pos]].letter;
                    if found != below[c] {
                        return Err(ConvertError::Chart(format!(
                            "vertex {vid} (clause {}): reading expects `{}` at slot {c}, found `{}`",
                            Event::new(0, vertex.kind.clone()).clause(),
                            below[c],
                            found
                        )));
                    }
                }
                let position = if below.is_empty() {
                    let x = vertex.at.expect("geometry").0;
                    live.iter()
                        .filter(|&&b| interp_x(&branches[b].pts, y) < x)
                        .count()
                } else {
                    consumed[0].0
                };
                let mut produced: Vec<(usize, usize)> = branches
                    .iter()
                    .enumerate()
                    .filter_map(|(id, b)| match b.lower {
                        Term::Vertex { v, slot } if v == vid => Some((slot, id)),
                        _ => None,
                    })
                    .collect();
                produced.sort();
                for (c, &(slot, id)) in produced.iter().enumerate() {
                    if slot != below.len() + c {
                        return Err(ConvertError::Sweep(format!(
                            "vertex {vid}: outgoing slots not contiguous"
                        )));
                    }
                    if branches[id].letter != above[c] {
                        return Err(ConvertError::Chart(format!(
                            "vertex {vid} (clause {}): reading expects `{}` above, found `{}`",
                            Event::new(0, vertex.kind.clone()).clause(),
                            above[c],
                            branches[id].letter
                        )));
                    }
                }
                events.extend(vertex_events(&vertex.kind, position));
                live.splice(
                    position..position + below.len(),
                    produced.into_iter().map(|(_, id)| id),
                );
            }
        }
    }

    for (pos, &b) in live.iter().enumerate() {
        if branches[b].upper != Term::Top(pos) {
            return Err(ConvertError::Sweep(format!(
                "sweep ends out of order at crossing point {pos}"
            )));
        }
    }

    let movie = ChartMovie::new(graph.degree, start, events).map_err(ConvertError::Movie)?;
    movie.validate_ok().map_err(ConvertError::Movie)?;
    Ok(movie)
}

fn min_event(left: Letter, right: Letter, position: usize) -> Result<Event, ConvertError> {
    match (left.kind, right.kind) {
        (LetterKind::Crossing(s), LetterKind::Crossing(t))
            if left.index == right.index && t == s.flip() =>
        {
            Ok(Event::new(
                position,
                EventKind::GCap {
                    i: left.index,
                    sign: s,
                },
            ))
        }
        (LetterKind::Hook, LetterKind::Hook) if left.index == right.index => {
            Ok(Event::new(position, EventKind::ECap { i: left.index }))
        }
        _ => Err(ConvertError::Sweep(format!(
            "minimum with inconsistent readings `{left}`, `{right}`"
        ))),
    }
}

fn max_event(left: Letter, right: Letter, position: usize) -> Result<Event, ConvertError> {
    match (left.kind, right.kind) {
        (LetterKind::Crossing(s), LetterKind::Crossing(t))
            if left.index == right.index && t == s.flip() =>
        {
            Ok(Event::new(
                position,
                EventKind::GCup {
                    i: left.index,
                    sign: s,
                },
            ))
        }
        (LetterKind::Hook, LetterKind::Hook) if left.index == right.index => {
            Ok(Event::new(position, EventKind::ECup { i: left.index }))
        }
        _ => Err(ConvertError::Sweep(format!(
            "maximum with inconsistent readings `{left}`, `{right}`"
        ))),
    }
}

// ---------------------------------------------------------------------
// coordinate-free reconstruction

fn reconstruct_combinatorial(graph: &ChartGraph) -> Result<ChartMovie, ConvertError> {
    // per edge: (lower terminal, upper terminal, letter at the lower end)
    struct Mono {
        lower: Term,
        upper: Term,
        letter: Letter,
    }

    let below_len = |vid: usize| graph.vertex(vid).map(|v| v.readings().0.len());

    let mut monos: Vec<Mono> = Vec::with_capacity(graph.edges.len());
    for e in &graph.edges {
        let Some((a, b)) = e.ends else {
            return Err(ConvertError::Chart(format!(
                "edge {}: closed loops need explicit geometry",
                e.id
            )));
        };
        // an end is the edge's top when it enters a vertex from below or
        // meets the top boundary
        let classify = |end: EdgeEnd| -> Result<(Term, bool), ConvertError> {
            Ok(match end {
                EdgeEnd::Boundary {
                    side: BoundarySide::Bottom,
                    index,
                } => (Term::Bottom(index), false),
                EdgeEnd::Boundary {
                    side: BoundarySide::Top,
                    index,
                } => (Term::Top(index), true),
                EdgeEnd::Vertex { vertex, slot } => {
                    let below = below_len(vertex).ok_or_else(|| {
                        ConvertError::Chart(format!("edge {}: unknown vertex {vertex}", e.id))
                    })?;
                    (Term::Vertex { v: vertex, slot }, slot < below)
                }
            })
        };
        let (ta, up_a) = classify(a)?;
        let (tb, up_b) = classify(b)?;
        if up_a == up_b {
            return Err(ConvertError::Chart(format!(
                "edge {}: not monotone; curving edges need explicit geometry",
                e.id
            )));
        }
        let (lower, upper, ascending_in_path) = if up_b {
            (ta, tb, true)
        } else {
            (tb, ta, false)
        };
        let letter = match e.label {
            EdgeLabel::Hook(i) => Letter::hook(i),
            EdgeLabel::Crossing(i) => {
                let forward = e.forward.ok_or_else(|| {
                    ConvertError::Chart(format!("edge {}: missing orientation", e.id))
                })?;
                Letter::crossing(
                    i,
                    if forward == ascending_in_path {
                        Sign::Pos
                    } else {
                        Sign::Neg
                    },
                )
            }
        };
        monos.push(Mono {
            lower,
            upper,
            letter,
        });
    }

    // topological order of vertices along the sweep, smallest id first
    let ids: Vec<usize> = graph.vertices.iter().map(|v| v.id).collect();
    let mut indegree: std::collections::HashMap<usize, usize> =
        ids.iter().map(|&v| (v, 0)).collect();
    for m in &monos {
        if let (Term::Vertex { .. }, Term::Vertex { v: upper, .. }) = (m.lower, m.upper) {
            *indegree.get_mut(&upper).expect("known vertex") += 1;
        }
    }
    let mut order: Vec<usize> = Vec::with_capacity(ids.len());
    let mut ready: std::collections::BTreeSet<usize> = indegree
        .iter()
        .filter_map(|(&v, &d)| (d == 0).then_some(v))
        .collect();
    while let Some(&v) = ready.iter().next() {
        ready.remove(&v);
        order.push(v);
        for m in &monos {
            if let (Term::Vertex { v: lo, .. }, Term::Vertex { v: hi, .. }) = (m.lower, m.upper) {
                if lo == v {
                    let d = indegree.get_mut(&hi).expect("known vertex");
                    *d -= 1;
                    if *d == 0 {
                        ready.insert(hi);
                    }
                }
            }
        }
    }
    if order.len() != ids.len() {
        return Err(ConvertError::Chart(
            "vertex levels form a cycle; provide explicit geometry".into(),
        ));
    }

    let mut bottoms: Vec<(usize, usize)> = monos
        .iter()
        .enumerate()
        .filter_map(|(id, m)| match m.lower {
            Term::Bottom(i) => Some((i, id)),
            _ => None,
        })
        .collect();
    bottoms.sort();
    let mut live: Vec<usize> = bottoms.into_iter().map(|(_, id)| id).collect();
    let start = Word::new(
        graph.degree,
        live.iter().map(|&m| monos[m].letter).collect(),
    )
    .map_err(|e| ConvertError::Chart(e.to_string()))?;

    let mut events = Vec::new();
    for vid in order {
        let vertex = graph.vertex(vid).expect("validated");
        let (below, above) = vertex.readings();
        let consumed: Vec<(usize, usize)> = live
            .iter()
            .enumerate()
            .filter_map(|(pos, &m)| match monos[m].upper {
                Term::Vertex { v, slot } if v == vid => Some((pos, slot)),
                _ => None,
            })
            .collect();
        if consumed.len() != below.len() {
            return Err(ConvertError::Chart(format!(
                "vertex {vid}: expects {} incoming edges, found {}",
                below.len(),
                consumed.len()
            )));
        }
        for (c, &(pos, slot)) in consumed.iter().enumerate() {
            if slot != c || (c > 0 && pos != consumed[c - 1].0 + 1) {
                return Err(ConvertError::Chart(format!(
                    "vertex {vid}: incoming edges not adjacent in slot order"
                )));
            }
            if monos[live[pos]].letter != below[c] {
                return Err(ConvertError::Chart(format!(
                    "vertex {vid} (clause {}): reading expects `{}` at slot {c}, found `{}`",
                    Event::new(0, vertex.kind.clone()).clause(),
                    below[c],
                    monos[live[pos]].letter
                )));
            }
        }
        let position = if below.is_empty() {
            vertex.at_index.unwrap_or(live.len()).min(live.len())
        } else {
            consumed[0].0
        };
        let mut produced: Vec<(usize, usize)> = monos
            .iter()
            .enumerate()
            .filter_map(|(id, m)| match m.lower {
                Term::Vertex { v, slot } if v == vid => Some((slot, id)),
                _ => None,
            })
            .collect();
        produced.sort();
        for (c, &(slot, id)) in produced.iter().enumerate() {
            if slot != below.len() + c || monos[id].letter != above[c] {
                return Err(ConvertError::Chart(format!(
                    "vertex {vid} (clause {}): outgoing reading does not match",
                    Event::new(0, vertex.kind.clone()).clause()
                )));
            }
        }
        events.extend(vertex_events(&vertex.kind, position));
        live.splice(
            position..position + below.len(),
            produced.into_iter().map(|(_, id)| id),
        );
    }

    let movie = ChartMovie::new(graph.degree, start, events).map_err(ConvertError::Movie)?;
    movie.validate_ok().map_err(ConvertError::Movie)?;
    Ok(movie)
}
