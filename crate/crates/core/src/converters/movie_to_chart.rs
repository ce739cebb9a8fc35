//! Leveled chart to planar graph.
//!
//! One horizontal level per slice: letters become edge-crossing points,
//! events become vertices at the half levels, crossing-edge extrema
//! (cap/cup events) become smooth bends of one edge. Letter strands are
//! traced level by level into monotone segments, then segments are
//! stitched across extrema into whole edges.

use crate::chart_movie::{ChartMovie, EventKind};
use crate::word_algebra::{Letter, LetterKind, Sign};

use super::graph::{BoundarySide, ChartEdge, ChartGraph, ChartVertex, EdgeEnd, EdgeLabel};
use super::ConvertError;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum SegEnd {
    Bottom(usize),
    Top(usize),
    Vertex { v: usize, slot: usize },
    Junction { j: usize, side: u8 },
}

struct Segment {
    letter: Letter,
    points: Vec<(f64, f64)>,
    lower: SegEnd,
    upper: Option<SegEnd>,
}

enum JunctionKind {
    Min,
    Max,
}

struct Junction {
    kind: JunctionKind,
}

fn x_at(len: usize, p: usize) -> f64 {
    (p + 1) as f64 / (len + 1) as f64
}

/// Build the planar-graph chart of a validated movie. The movie must be
/// free of hook-edge extrema (normalize caps first); do-nothing levels
/// are dropped.
pub fn movie_to_chart_graph(movie: &ChartMovie) -> Result<ChartGraph, ConvertError> {
    let movie = movie.without_nops();
    movie.validate_ok()?;
    if movie.events.iter().any(|e| e.is_cap()) {
        return Err(ConvertError::ResidualCaps);
    }
    let slices = movie.slices().expect("validated");
    let n_events = movie.events.len();
    let y_slice = |k: usize| {
        if n_events == 0 {
            if k == 0 {
                0.0
            } else {
                1.0
            }
        } else {
            k as f64 / n_events as f64
        }
    };
    let y_event = |k: usize| (k as f64 + 0.5) / n_events as f64;

    let mut segments: Vec<Segment> = Vec::new();
    let mut junctions: Vec<Junction> = Vec::new();
    let mut vertices: Vec<ChartVertex> = Vec::new();
    let mut live: Vec<usize> = Vec::new();

    for (p, &letter) in slices[0].letters().iter().enumerate() {
        segments.push(Segment {
            letter,
            points: vec![(x_at(slices[0].len(), p), 0.0)],
            lower: SegEnd::Bottom(p),
            upper: None,
        });
        live.push(p);
    }

    for (k, ev) in movie.events.iter().enumerate() {
        let (consumed, produced) = ev.patterns();
        let p = ev.position;
        let before = &slices[k];
        let after = &slices[k + 1];
        let yl = y_event(k);

        // x position of the event: centroid of its endpoint crossings
        let mut xs: Vec<f64> = (0..consumed.len())
            .map(|c| x_at(before.len(), p + c))
            .collect();
        xs.extend((0..produced.len()).map(|c| x_at(after.len(), p + c)));
        let cx = xs.iter().sum::<f64>() / xs.len().max(1) as f64;

        let mut incoming: Vec<usize> = Vec::with_capacity(produced.len());
        match &ev.kind {
            EventKind::GCap { .. } => {
                let j = junctions.len();
                junctions.push(Junction {
                    kind: JunctionKind::Min,
                });
                for (side, &letter) in produced.iter().enumerate() {
                    let id = segments.len();
                    segments.push(Segment {
                        letter,
                        points: vec![(cx, yl)],
                        lower: SegEnd::Junction {
                            j,
                            side: side as u8,
                        },
                        upper: None,
                    });
                    incoming.push(id);
                }
            }
            EventKind::GCup { .. } => {
                let j = junctions.len();
                junctions.push(Junction {
                    kind: JunctionKind::Max,
                });
                for side in 0..2u8 {
                    let seg = &mut segments[live[p + side as usize]];
                    seg.points.push((cx, yl));
                    seg.upper = Some(SegEnd::Junction { j, side });
                }
            }
            _ => {
                let v = vertices.len();
                vertices.push(ChartVertex {
                    id: v,
                    kind: ev.kind.clone(),
                    at: Some((cx, yl)),
                    at_index: None,
                });
                for (slot, _) in consumed.iter().enumerate() {
                    let seg = &mut segments[live[p + slot]];
                    seg.points.push((cx, yl));
                    seg.upper = Some(SegEnd::Vertex { v, slot });
                }
                for (c, &letter) in produced.iter().enumerate() {
                    let id = segments.len();
                    segments.push(Segment {
                        letter,
                        points: vec![(cx, yl)],
                        lower: SegEnd::Vertex {
                            v,
                            slot: consumed.len() + c,
                        },
                        upper: None,
                    });
                    incoming.push(id);
                }
            }
        }
        live.splice(p..p + consumed.len(), incoming);

        for (pos, &seg_id) in live.iter().enumerate() {
            segments[seg_id]
                .points
                .push((x_at(after.len(), pos), y_slice(k + 1)));
        }
    }

    if n_events == 0 {
        for &seg_id in &live {
            let (x, _) = segments[seg_id].points[0];
            segments[seg_id].points.push((x, 1.0));
        }
    }
    for (pos, &seg_id) in live.iter().enumerate() {
        segments[seg_id].upper = Some(SegEnd::Top(pos));
    }

    let edges = stitch(&segments, &junctions)?;
    let graph = ChartGraph {
        degree: movie.degree,
        vertices,
        edges,
    };
    debug_assert!(graph.validate().is_ok(), "generated chart must validate");
    Ok(graph)
}

/// Which end of a segment a chain traversal enters.
#[derive(Clone, Copy, PartialEq)]
enum Entered {
    Lower,
    Upper,
}

/// One stitched chain: polyline, both terminals, orientation relative
/// to the polyline, loop-closure flag.
type Chain = (Vec<(f64, f64)>, SegEnd, SegEnd, Option<bool>, bool);

fn stitch(segments: &[Segment], junctions: &[Junction]) -> Result<Vec<ChartEdge>, ConvertError> {
    // the two segment ends meeting at each junction
    let mut at_junction: Vec<Vec<(usize, Entered)>> = vec![Vec::new(); junctions.len()];
    for (id, seg) in segments.iter().enumerate() {
        if let SegEnd::Junction { j, .. } = seg.lower {
            at_junction[j].push((id, Entered::Lower));
        }
        if let Some(SegEnd::Junction { j, .. }) = seg.upper {
            at_junction[j].push((id, Entered::Upper));
        }
    }
    for (j, refs) in at_junction.iter().enumerate() {
        if refs.len() != 2 {
            return Err(ConvertError::Sweep(format!(
                "extremum {j} joins {} segment ends, expected 2",
                refs.len()
            )));
        }
        let want = match junctions[j].kind {
            JunctionKind::Min => Entered::Lower,
            JunctionKind::Max => Entered::Upper,
        };
        if refs.iter().any(|(_, e)| *e != want) {
            return Err(ConvertError::Sweep(format!(
                "extremum {j} joins mismatched ends"
            )));
        }
    }

    let map_end = |end: SegEnd| -> EdgeEnd {
        match end {
            SegEnd::Bottom(index) => EdgeEnd::Boundary {
                side: BoundarySide::Bottom,
                index,
            },
            SegEnd::Top(index) => EdgeEnd::Boundary {
                side: BoundarySide::Top,
                index,
            },
            SegEnd::Vertex { v, slot } => EdgeEnd::Vertex { vertex: v, slot },
            SegEnd::Junction { .. } => unreachable!("junction ends are stitched away"),
        }
    };

    let mut visited = vec![false; segments.len()];
    let mut edges: Vec<ChartEdge> = Vec::new();

    // walk a chain starting at segment `s0` entered at `e0`; yields the
    // stitched polyline, both terminals, the orientation flag and
    // whether the chain closed into a loop
    let walk = |s0: usize, e0: Entered, visited: &mut Vec<bool>| -> Result<Chain, ConvertError> {
        let mut path: Vec<(f64, f64)> = Vec::new();
        let mut forward: Option<bool> = None;
        let first_end = match e0 {
            Entered::Lower => segments[s0].lower,
            Entered::Upper => segments[s0].upper.expect("segment closed"),
        };
        let (mut s, mut entered) = (s0, e0);
        let mut steps = 0usize;
        loop {
            steps += 1;
            if steps > segments.len() + 1 {
                return Err(ConvertError::Sweep("edge chain does not terminate".into()));
            }
            visited[s] = true;
            let seg = &segments[s];
            // orientation of a crossing edge along the traversal
            if let LetterKind::Crossing(sign) = seg.letter.kind {
                let along = match entered {
                    Entered::Lower => sign == Sign::Pos,
                    Entered::Upper => sign == Sign::Neg,
                };
                match forward {
                    None => forward = Some(along),
                    Some(f) if f != along => {
                        return Err(ConvertError::Sweep(
                            "inconsistent orientation along a stitched edge".into(),
                        ))
                    }
                    _ => {}
                }
            }
            let pts = seg.points.iter().copied();
            let skip = usize::from(!path.is_empty());
            match entered {
                Entered::Lower => path.extend(pts.skip(skip)),
                Entered::Upper => path.extend(seg.points.iter().rev().copied().skip(skip)),
            }
            let exit = match entered {
                Entered::Lower => seg.upper.expect("segment closed"),
                Entered::Upper => seg.lower,
            };
            match exit {
                SegEnd::Junction { j, .. } => {
                    // each junction joins exactly two distinct segments
                    let (next, next_entered) = at_junction[j]
                        .iter()
                        .copied()
                        .find(|(id, _)| *id != s)
                        .ok_or_else(|| ConvertError::Sweep("degenerate extremum".into()))?;
                    if next == s0 && next_entered == e0 {
                        // closed loop
                        return Ok((path, first_end, exit, forward, true));
                    }
                    s = next;
                    entered = next_entered;
                }
                real => return Ok((path, first_end, real, forward, false)),
            }
        }
    };

    for s0 in 0..segments.len() {
        if visited[s0] {
            continue;
        }
        let lower_real = !matches!(segments[s0].lower, SegEnd::Junction { .. });
        let upper_real = !matches!(segments[s0].upper, Some(SegEnd::Junction { .. }));
        if !(lower_real || upper_real) {
            continue; // part of a closed loop; picked up below
        }
        let e0 = if lower_real {
            Entered::Lower
        } else {
            Entered::Upper
        };
        let (path, start, end, forward, closed) = walk(s0, e0, &mut visited)?;
        debug_assert!(!closed);
        let label = EdgeLabel::of_letter(segments[s0].letter);
        edges.push(ChartEdge {
            id: edges.len(),
            label,
            forward: matches!(label, EdgeLabel::Crossing(_)).then(|| forward.unwrap_or(true)),
            ends: Some((map_end(start), map_end(end))),
            path,
        });
    }

    for s0 in 0..segments.len() {
        if visited[s0] {
            continue;
        }
        let (mut path, _, _, forward, closed) = walk(s0, Entered::Lower, &mut visited)?;
        if !closed {
            return Err(ConvertError::Sweep(
                "open chain found among loop segments".into(),
            ));
        }
        if path.first() != path.last() {
            let first = *path.first().expect("loop has points");
            path.push(first);
        }
        let label = EdgeLabel::of_letter(segments[s0].letter);
        edges.push(ChartEdge {
            id: edges.len(),
            label,
            forward: matches!(label, EdgeLabel::Crossing(_)).then(|| forward.unwrap_or(true)),
            ends: None,
            path,
        });
    }

    Ok(edges)
}
