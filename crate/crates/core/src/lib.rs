//! Combinatorics of braided-surface presentations built from crossing
//! and hook generators: tangle words and their rewriting moves, leveled
//! charts (motion pictures), chart/movie conversion, surface invariants,
//! chart moves and bounded equivalence search.

pub mod chart_moves;
pub mod chart_movie;
pub mod converters;
pub mod render;
pub mod word_algebra;

pub use chart_movie::{ChartMovie, Event, EventKind, Side, SurfaceClass, WhiteAttitude};
pub use converters::{
    chart_graph_to_movie, movie_to_chart_graph, surface_invariants, ChartGraph, SurfaceInvariants,
};
pub use word_algebra::{
    brauer_image, BrauerDiagram, Direction, Letter, LetterKind, Rule, RuleCategory, RuleTag, Sign,
    Word,
};
