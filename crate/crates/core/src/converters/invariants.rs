//! Invariants of the surface presented by a movie.
//!
//! The Euler characteristic is handle bookkeeping over the event list:
//! every interval strand traces one sheet, every band surgery subtracts
//! one, every pasted disk adds one. Boundary components are cycles of
//! the end-slice pairings glued along the four sides of the square.

use serde::{Deserialize, Serialize};

use crate::chart_movie::{ChartMovie, MovieError};
use crate::word_algebra::brauer_image;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceInvariants {
    pub euler_characteristic: i64,
    pub boundary_components: usize,
    pub trivial_boundary: bool,
    pub interval_components_start: usize,
    pub circle_components_start: usize,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, a: usize) -> usize {
        if self.0[a] != a {
            let root = self.find(self.0[a]);
            self.0[a] = root;
        }
        self.0[a]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        self.0[ra] = rb;
    }

    fn components(&mut self) -> usize {
        let n = self.0.len();
        (0..n).filter(|&a| self.find(a) == a).count()
    }
}

/// Compute the invariants of a validated movie. Movies with hook-edge
/// extrema are normalized first; the replacement subgraph presents an
/// equivalent surface, so the invariants extend to them.
pub fn surface_invariants(movie: &ChartMovie) -> Result<SurfaceInvariants, MovieError> {
    let movie = movie.normalize_caps()?;
    let n = movie.degree;
    let start = &movie.start;
    let end = movie.final_word()?;

    let disks: i64 = movie.events.iter().map(|e| e.disk_units()).sum();
    let bands: i64 = movie.events.iter().map(|e| e.band_units()).sum();
    let euler_characteristic = n as i64 + disks - bands;

    // Boundary graph on 4n nodes: the 2n tangle endpoints at time 0 and
    // at time 1. Arcs: the two end-slice pairings, plus a straight side
    // strand per endpoint joining its two times.
    let d0 = brauer_image(start);
    let d1 = brauer_image(&end);
    let mut uf = UnionFind::new(4 * n);
    for p in 0..2 * n {
        uf.union(p, d0.partner(p));
        uf.union(2 * n + p, 2 * n + d1.partner(p));
        uf.union(p, 2 * n + p);
    }
    let boundary_components = uf.components() + d0.loops() + d1.loops();

    Ok(SurfaceInvariants {
        euler_characteristic,
        boundary_components,
        trivial_boundary: start.is_identity() && end.is_identity(),
        interval_components_start: n,
        circle_components_start: d0.loops(),
    })
}
