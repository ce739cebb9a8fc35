//! Randomized movies through the conversion pair: the slice sequence
//! must survive movie -> chart -> movie exactly.

mod common;

use bmw_chart::chart_movie::{ChartMovie, Event, EventKind, Side, WhiteAttitude};
use bmw_chart::converters::{chart_graph_to_movie, movie_to_chart_graph};
use bmw_chart::word_algebra::{Direction, Letter, Sign, Word};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

fn random_event(rng: &mut ChaCha8Rng, word: &Word) -> Option<Event> {
    let n = word.degree();
    if n < 2 {
        return None;
    }
    let len = word.len();
    let i = rng.gen_range(1..n);
    let j = if rng.gen() && i + 1 < n { i + 1 } else { i.max(2) - 1 };
    let sign = if rng.gen() { Sign::Pos } else { Sign::Neg };
    let sign2 = if rng.gen() { Sign::Pos } else { Sign::Neg };
    let side = if rng.gen() { Side::Left } else { Side::Right };
    let dir = if rng.gen() { Direction::Forward } else { Direction::Backward };
    let position = rng.gen_range(0..=len);
    let kind = match rng.gen_range(0..15) {
        0 => EventKind::BlackG { i, sign, dir },
        1 => EventKind::XDot { i, dir },
        2 => EventKind::Saddle { i, sign, dir },
        3 => EventKind::GCap { i, sign },
        4 => EventKind::GCup { i, sign },
        5 => EventKind::White { i, j, attitude: WhiteAttitude::Upright, dir },
        6 => {
            let l = *word.letters().get(position)?;
            let r = *word.letters().get(position + 1)?;
            EventKind::Crossing { left: l, right: r }
        }
        7 => EventKind::Square8 { i, j, dir },
        8 => EventKind::Square5 { i, j, sign, crossings: side, dir },
        9 => EventKind::XTri { i, dir },
        10 => EventKind::Branch { i, sign, side, dir },
        11 => EventKind::Square6 { i, j, sign, sign2, dir },
        12 => EventKind::XStar {
            i,
            below: rng.gen_range(1..=3),
            above: rng.gen_range(1..=3),
        },
        13 => EventKind::SquareStar {
            i,
            left: (0..rng.gen_range(0..=2)).map(|_| sign).collect(),
            right: (0..rng.gen_range(0..=2)).map(|_| sign2).collect(),
            dir,
        },
        _ => EventKind::ECap { i },
    };
    Some(Event::new(position, kind))
}

fn random_movie(rng: &mut ChaCha8Rng) -> ChartMovie {
    let n = rng.gen_range(2..=4);
    let start = {
        let len = rng.gen_range(0..4);
        let letters = (0..len)
            .map(|_| {
                let i = rng.gen_range(1..n);
                match rng.gen_range(0..3) {
                    0 => Letter::positive(i),
                    1 => Letter::negative(i),
                    _ => Letter::hook(i),
                }
            })
            .collect();
        Word::new(n, letters).unwrap()
    };
    let mut movie = ChartMovie::new(n, start, vec![]).unwrap();
    let target = rng.gen_range(0..7);
    let mut attempts = 0;
    while movie.events.len() < target && attempts < 300 {
        attempts += 1;
        let word = movie.final_word().unwrap();
        let Some(event) = random_event(rng, &word) else { continue };
        if event.apply(&word).is_ok() {
            movie.events.push(event);
        }
    }
    assert!(movie.validate_ok().is_ok());
    movie
}

#[test]
fn random_movies_round_trip_slice_exact() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x51CE);
    let mut total_events = 0usize;
    for case in 0..400 {
        let movie = random_movie(&mut rng);
        let normal = movie.normalize_caps().unwrap();
        total_events += normal.events.len();
        let graph = movie_to_chart_graph(&normal)
            .unwrap_or_else(|e| panic!("case {case}: to chart: {e}\n{normal:?}"));
        let back = chart_graph_to_movie(&graph)
            .unwrap_or_else(|e| panic!("case {case}: back to movie: {e}\n{normal:?}"));
        assert_eq!(
            back.slices().unwrap(),
            normal.slices().unwrap(),
            "case {case}: {normal:?}"
        );
        assert_eq!(back, normal, "case {case}");
    }
    assert!(total_events > 400, "fuzz produced only {total_events} events");
}
