//! Shared test support: the hand-built movie corpus and independent
//! brute-force oracles. The oracles deliberately take different
//! algorithmic routes from the library code they check.

#![allow(dead_code)]

use bmw_chart::chart_movie::{ChartMovie, Event, EventKind, Side, WhiteAttitude};
use bmw_chart::word_algebra::{BrauerDiagram, Direction, Letter, LetterKind, Sign, Word};

pub fn w(text: &str, degree: usize) -> Word {
    Word::parse(text, degree).expect("test word parses")
}

pub fn ev(position: usize, kind: EventKind) -> Event {
    Event::new(position, kind)
}

pub fn mv(degree: usize, start: &str, events: Vec<Event>) -> ChartMovie {
    let movie = ChartMovie::new(degree, w(start, degree), events).expect("degree matches");
    assert!(
        movie.validate_ok().is_ok(),
        "corpus movie must validate: {movie:?}"
    );
    movie
}

const F: Direction = Direction::Forward;
const B: Direction = Direction::Backward;

/// Hand-built movies covering every event kind, including both hook-edge
/// extrema. All validate.
pub fn corpus() -> Vec<(String, ChartMovie)> {
    let mut out: Vec<(String, ChartMovie)> = Vec::new();
    let mut push = |name: String, movie: ChartMovie| out.push((name, movie));

    for n in 1..=4 {
        push(format!("product-{n}"), mv(n, "1", vec![]));
    }
    for (n, s) in [(2, "e1"), (3, "g1 g2"), (4, "e1 e3"), (4, "g1 G2 e3")] {
        push(format!("constant-{n}-{s}"), mv(n, s, vec![]));
    }

    for n in 2..=4usize {
        for i in 1..n {
            for sign in Sign::BOTH {
                push(
                    format!("black-pair-{n}-{i}-{sign}"),
                    mv(
                        n,
                        "1",
                        vec![
                            ev(0, EventKind::BlackG { i, sign, dir: F }),
                            ev(0, EventKind::BlackG { i, sign, dir: B }),
                        ],
                    ),
                );
            }
        }
    }

    for n in 2..=3usize {
        for i in 1..n {
            push(
                format!("hook-dot-pair-{n}-{i}"),
                mv(
                    n,
                    "1",
                    vec![
                        ev(0, EventKind::XDot { i, dir: F }),
                        ev(0, EventKind::XDot { i, dir: B }),
                    ],
                ),
            );
        }
    }

    for sign in Sign::BOTH {
        let tok = if sign == Sign::Pos { "g1" } else { "G1" };
        push(
            format!("saddle-fwd-{sign}"),
            mv(
                2,
                tok,
                vec![ev(0, EventKind::Saddle { i: 1, sign, dir: F })],
            ),
        );
        push(
            format!("saddle-bwd-{sign}"),
            mv(
                2,
                "e1",
                vec![ev(0, EventKind::Saddle { i: 1, sign, dir: B })],
            ),
        );
    }

    for sign in Sign::BOTH {
        push(
            format!("crossing-loop-{sign}"),
            mv(
                2,
                "1",
                vec![
                    ev(0, EventKind::GCap { i: 1, sign }),
                    ev(0, EventKind::GCup { i: 1, sign }),
                ],
            ),
        );
    }
    push(
        "crossing-loop-nested".into(),
        mv(
            2,
            "1",
            vec![
                ev(
                    0,
                    EventKind::GCap {
                        i: 1,
                        sign: Sign::Pos,
                    },
                ),
                ev(
                    1,
                    EventKind::GCap {
                        i: 1,
                        sign: Sign::Pos,
                    },
                ),
                ev(
                    1,
                    EventKind::GCup {
                        i: 1,
                        sign: Sign::Pos,
                    },
                ),
                ev(
                    0,
                    EventKind::GCup {
                        i: 1,
                        sign: Sign::Pos,
                    },
                ),
            ],
        ),
    );

    let white = |i: usize, j: usize, dir: Direction| EventKind::White {
        i,
        j,
        attitude: WhiteAttitude::Upright,
        dir,
    };
    push(
        "white-fwd".into(),
        mv(3, "g1 g2 g1", vec![ev(0, white(1, 2, F))]),
    );
    push(
        "white-bwd".into(),
        mv(3, "g2 g1 g2", vec![ev(0, white(1, 2, B))]),
    );
    push(
        "white-high".into(),
        mv(4, "g2 g3 g2 e1", vec![ev(0, white(2, 3, F))]),
    );

    let cross = |l: Letter, r: Letter| EventKind::Crossing { left: l, right: r };
    push(
        "crossing-gg".into(),
        mv(
            4,
            "g1 g3",
            vec![ev(0, cross(Letter::positive(1), Letter::positive(3)))],
        ),
    );
    push(
        "crossing-GG".into(),
        mv(
            4,
            "G1 G3",
            vec![ev(0, cross(Letter::negative(1), Letter::negative(3)))],
        ),
    );
    push(
        "crossing-ge".into(),
        mv(
            4,
            "g1 e3",
            vec![ev(0, cross(Letter::positive(1), Letter::hook(3)))],
        ),
    );
    push(
        "crossing-ee".into(),
        mv(
            4,
            "e1 e3",
            vec![ev(0, cross(Letter::hook(1), Letter::hook(3)))],
        ),
    );
    push(
        "crossing-eG".into(),
        mv(
            4,
            "e1 G3",
            vec![ev(0, cross(Letter::hook(1), Letter::negative(3)))],
        ),
    );

    push(
        "square8-fwd".into(),
        mv(
            3,
            "e1 e2 e1",
            vec![ev(0, EventKind::Square8 { i: 1, j: 2, dir: F })],
        ),
    );
    push(
        "square8-bwd".into(),
        mv(
            3,
            "e1",
            vec![ev(0, EventKind::Square8 { i: 1, j: 2, dir: B })],
        ),
    );
    push(
        "square8-swapped".into(),
        mv(
            3,
            "e2 e1 e2",
            vec![ev(0, EventKind::Square8 { i: 2, j: 1, dir: F })],
        ),
    );
    push(
        "square8-high".into(),
        mv(
            4,
            "e3 e2 e3",
            vec![ev(0, EventKind::Square8 { i: 3, j: 2, dir: F })],
        ),
    );

    for sign in Sign::BOTH {
        let (gi, gj) = if sign == Sign::Pos {
            ("g1", "g2")
        } else {
            ("G1", "G2")
        };
        push(
            format!("square5-left-{sign}"),
            mv(
                3,
                &format!("{gi} {gj} e1"),
                vec![ev(
                    0,
                    EventKind::Square5 {
                        i: 1,
                        j: 2,
                        sign,
                        crossings: Side::Left,
                        dir: F,
                    },
                )],
            ),
        );
        push(
            format!("square5-right-{sign}"),
            mv(
                3,
                &format!("e1 {gj} {gi}"),
                vec![ev(
                    0,
                    EventKind::Square5 {
                        i: 1,
                        j: 2,
                        sign,
                        crossings: Side::Right,
                        dir: F,
                    },
                )],
            ),
        );
        push(
            format!("square5-left-bwd-{sign}"),
            mv(
                3,
                "e2 e1",
                vec![ev(
                    0,
                    EventKind::Square5 {
                        i: 1,
                        j: 2,
                        sign,
                        crossings: Side::Left,
                        dir: B,
                    },
                )],
            ),
        );
    }

    push(
        "xtri-merge".into(),
        mv(2, "e1 e1", vec![ev(0, EventKind::XTri { i: 1, dir: F })]),
    );
    push(
        "xtri-split".into(),
        mv(2, "e1", vec![ev(0, EventKind::XTri { i: 1, dir: B })]),
    );

    for sign in Sign::BOTH {
        for side in [Side::Left, Side::Right] {
            push(
                format!("branch-{side:?}-{sign}"),
                mv(
                    2,
                    "e1",
                    vec![ev(
                        0,
                        EventKind::Branch {
                            i: 1,
                            sign,
                            side,
                            dir: F,
                        },
                    )],
                ),
            );
        }
    }

    for sign in Sign::BOTH {
        for sign2 in Sign::BOTH {
            let start = if sign == Sign::Pos {
                "g1 g2 e1"
            } else {
                "G1 G2 e1"
            };
            push(
                format!("square6-{sign}-{sign2}"),
                mv(
                    3,
                    start,
                    vec![ev(
                        0,
                        EventKind::Square6 {
                            i: 1,
                            j: 2,
                            sign,
                            sign2,
                            dir: F,
                        },
                    )],
                ),
            );
        }
    }

    push(
        "xstar-21".into(),
        mv(
            2,
            "e1 e1",
            vec![ev(
                0,
                EventKind::XStar {
                    i: 1,
                    below: 2,
                    above: 1,
                },
            )],
        ),
    );
    push(
        "xstar-12".into(),
        mv(
            2,
            "e1",
            vec![ev(
                0,
                EventKind::XStar {
                    i: 1,
                    below: 1,
                    above: 2,
                },
            )],
        ),
    );
    push(
        "xstar-31".into(),
        mv(
            2,
            "e1 e1 e1",
            vec![ev(
                0,
                EventKind::XStar {
                    i: 1,
                    below: 3,
                    above: 1,
                },
            )],
        ),
    );
    push(
        "xstar-22".into(),
        mv(
            2,
            "e1 e1",
            vec![ev(
                0,
                EventKind::XStar {
                    i: 1,
                    below: 2,
                    above: 2,
                },
            )],
        ),
    );

    push(
        "squarestar-right".into(),
        mv(
            2,
            "e1",
            vec![ev(
                0,
                EventKind::SquareStar {
                    i: 1,
                    left: vec![],
                    right: vec![Sign::Pos, Sign::Neg],
                    dir: F,
                },
            )],
        ),
    );
    push(
        "squarestar-both".into(),
        mv(
            2,
            "e1",
            vec![ev(
                0,
                EventKind::SquareStar {
                    i: 1,
                    left: vec![Sign::Neg],
                    right: vec![Sign::Pos],
                    dir: F,
                },
            )],
        ),
    );
    push(
        "squarestar-bwd".into(),
        mv(
            2,
            "g1 e1",
            vec![ev(
                0,
                EventKind::SquareStar {
                    i: 1,
                    left: vec![Sign::Pos],
                    right: vec![],
                    dir: B,
                },
            )],
        ),
    );

    push("hook-loop".into(), fig17_left());
    push("hook-loop-replaced".into(), fig17_right());
    push(
        "hook-arc-min".into(),
        mv(2, "1", vec![ev(0, EventKind::ECap { i: 1 })]),
    );
    push(
        "hook-arc-max".into(),
        mv(2, "e1 e1", vec![ev(0, EventKind::ECup { i: 1 })]),
    );

    // circle components created and reabsorbed next to a spectator hook
    push(
        "spectator-split-left".into(),
        mv(
            4,
            "e1 e3",
            vec![
                ev(0, EventKind::XTri { i: 1, dir: B }),
                ev(0, EventKind::XTri { i: 1, dir: F }),
            ],
        ),
    );
    push(
        "spectator-split-right".into(),
        mv(
            4,
            "e1 e3",
            vec![
                ev(1, EventKind::XTri { i: 3, dir: B }),
                ev(1, EventKind::XTri { i: 3, dir: F }),
            ],
        ),
    );

    // longer mixed movies
    push(
        "mixed-birth-braid".into(),
        mv(
            3,
            "1",
            vec![
                ev(
                    0,
                    EventKind::BlackG {
                        i: 1,
                        sign: Sign::Pos,
                        dir: F,
                    },
                ),
                ev(
                    1,
                    EventKind::BlackG {
                        i: 2,
                        sign: Sign::Pos,
                        dir: F,
                    },
                ),
                ev(
                    2,
                    EventKind::BlackG {
                        i: 1,
                        sign: Sign::Pos,
                        dir: F,
                    },
                ),
                ev(0, white(1, 2, F)),
                ev(
                    0,
                    EventKind::BlackG {
                        i: 2,
                        sign: Sign::Pos,
                        dir: B,
                    },
                ),
                ev(
                    0,
                    EventKind::BlackG {
                        i: 1,
                        sign: Sign::Pos,
                        dir: B,
                    },
                ),
                ev(
                    0,
                    EventKind::BlackG {
                        i: 2,
                        sign: Sign::Pos,
                        dir: B,
                    },
                ),
            ],
        ),
    );
    push(
        "mixed-saddle-chain".into(),
        mv(
            4,
            "g1 e3",
            vec![
                ev(
                    0,
                    EventKind::Saddle {
                        i: 1,
                        sign: Sign::Pos,
                        dir: F,
                    },
                ),
                ev(0, cross(Letter::hook(1), Letter::hook(3))),
                ev(
                    1,
                    EventKind::Branch {
                        i: 1,
                        sign: Sign::Neg,
                        side: Side::Right,
                        dir: F,
                    },
                ),
                ev(
                    2,
                    EventKind::BlackG {
                        i: 3,
                        sign: Sign::Neg,
                        dir: F,
                    },
                ),
            ],
        ),
    );
    push(
        "mixed-cap-between".into(),
        mv(
            3,
            "e1",
            vec![
                ev(
                    1,
                    EventKind::GCap {
                        i: 2,
                        sign: Sign::Neg,
                    },
                ),
                ev(
                    1,
                    EventKind::Saddle {
                        i: 2,
                        sign: Sign::Neg,
                        dir: F,
                    },
                ),
                ev(
                    0,
                    EventKind::Square5 {
                        i: 1,
                        j: 2,
                        sign: Sign::Pos,
                        crossings: Side::Right,
                        dir: B,
                    },
                ),
            ],
        ),
    );

    assert!(out.len() >= 50, "corpus has {} movies", out.len());
    out
}

/// The closed hook loop drawn with two smooth extrema.
pub fn fig17_left() -> ChartMovie {
    mv(
        2,
        "1",
        vec![
            ev(0, EventKind::ECap { i: 1 }),
            ev(0, EventKind::ECup { i: 1 }),
        ],
    )
}

/// Its replacement: vertex, split, merge, vertex.
pub fn fig17_right() -> ChartMovie {
    mv(
        2,
        "1",
        vec![
            ev(0, EventKind::XDot { i: 1, dir: F }),
            ev(0, EventKind::XTri { i: 1, dir: B }),
            ev(0, EventKind::XTri { i: 1, dir: F }),
            ev(0, EventKind::XDot { i: 1, dir: B }),
        ],
    )
}

/// Movies whose braid vertices sit in rotated attitudes; conversions
/// canonicalize these, so round trips preserve endpoints, not slices.
pub fn rotated_white_movies() -> Vec<(String, ChartMovie)> {
    let mut out = Vec::new();
    out.push((
        "white-inverted".into(),
        mv(
            3,
            "G1 G2 G1",
            vec![ev(
                0,
                EventKind::White {
                    i: 1,
                    j: 2,
                    attitude: WhiteAttitude::Inverted,
                    dir: F,
                },
            )],
        ),
    ));
    for sign in Sign::BOTH {
        let (a, b, c) = match sign {
            Sign::Pos => ("g1", "g2", "G1"),
            Sign::Neg => ("G1", "G2", "g1"),
        };
        out.push((
            format!("white-tilted-right-{sign}"),
            mv(
                3,
                &format!("{a} {b} {c}"),
                vec![ev(
                    0,
                    EventKind::White {
                        i: 1,
                        j: 2,
                        attitude: WhiteAttitude::TiltedRight(sign),
                        dir: F,
                    },
                )],
            ),
        ));
    }
    out
}

// ---------------------------------------------------------------------
// independent oracles

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Dsu {
        Dsu((0..n).collect())
    }
    fn find(&mut self, a: usize) -> usize {
        if self.0[a] != a {
            let r = self.find(self.0[a]);
            self.0[a] = r;
        }
        self.0[a]
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        self.0[ra] = rb;
    }
}

/// Brute-force connectivity of a word's diagram, computed on the full
/// letter-by-letter grid rather than by pairwise diagram composition:
/// one node per (level, strand) point, wires per letter, then
/// union-find. Returns the same diagram type for easy comparison.
pub fn oracle_brauer(word: &Word) -> BrauerDiagram {
    let n = word.degree();
    let levels = word.len() + 1;
    let node = |level: usize, k: usize| level * n + k;
    let mut dsu = Dsu::new(levels * n);

    for (t, letter) in word.letters().iter().enumerate() {
        let i = letter.index - 1;
        for k in 0..n {
            if k == i || k == i + 1 {
                continue;
            }
            dsu.union(node(t, k), node(t + 1, k));
        }
        match letter.kind {
            LetterKind::Crossing(_) => {
                dsu.union(node(t, i), node(t + 1, i + 1));
                dsu.union(node(t, i + 1), node(t + 1, i));
            }
            LetterKind::Hook => {
                dsu.union(node(t, i), node(t, i + 1));
                dsu.union(node(t + 1, i), node(t + 1, i + 1));
            }
        }
    }

    // boundary points: bottom = level 0, top = last level
    let boundary: Vec<usize> = (0..n)
        .map(|k| node(0, k))
        .chain((0..n).map(|k| node(levels - 1, k)))
        .collect();
    let mut pairing = vec![usize::MAX; 2 * n];
    for a in 0..2 * n {
        if pairing[a] != usize::MAX {
            continue;
        }
        let ra = dsu.find(boundary[a]);
        let partner = (a + 1..2 * n)
            .find(|&b| pairing[b] == usize::MAX && dsu.find(boundary[b]) == ra)
            .expect("boundary points pair up");
        pairing[a] = partner;
        pairing[partner] = a;
    }

    // loops: interior components not containing any boundary point
    let boundary_roots: std::collections::HashSet<usize> =
        boundary.iter().map(|&b| dsu.find(b)).collect();
    let mut roots = std::collections::HashSet::new();
    for v in 0..levels * n {
        let r = dsu.find(v);
        if !boundary_roots.contains(&r) {
            roots.insert(r);
        }
    }

    BrauerDiagram::from_pairing(n, pairing, roots.len()).expect("oracle output is an involution")
}

#[test]
fn oracle_matches_identity_and_hooks() {
    use bmw_chart::word_algebra::brauer_image;
    for n in 1..=4 {
        let one = Word::identity(n);
        assert_eq!(oracle_brauer(&one), brauer_image(&one));
    }
    let ee = w("e1 e1", 2);
    assert_eq!(oracle_brauer(&ee).loops(), 1);
    assert_eq!(oracle_brauer(&ee), brauer_image(&ee));
}
