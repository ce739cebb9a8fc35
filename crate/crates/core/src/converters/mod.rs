//! Conversions between the leveled form and the planar-graph form of a
//! chart, and invariants of the presented surface.

mod chart_to_movie;
mod graph;
mod invariants;
mod movie_to_chart;

pub use chart_to_movie::chart_graph_to_movie;
pub use graph::{BoundarySide, ChartEdge, ChartGraph, ChartVertex, EdgeEnd, EdgeLabel};
pub use invariants::{surface_invariants, SurfaceInvariants};
pub use movie_to_chart::movie_to_chart_graph;

use thiserror::Error;

use crate::chart_movie::MovieError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConvertError {
    #[error("invalid movie: {0}")]
    Movie(#[from] MovieError),
    #[error("movie still contains hook-edge extrema; run cap normalization first")]
    ResidualCaps,
    #[error("invalid chart: {0}")]
    Chart(String),
    #[error("sweep failed: {0}")]
    Sweep(String),
}
