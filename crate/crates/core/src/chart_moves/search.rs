//! Bounded breadth-first search for chart-move equivalence.
//!
//! Search is one-directional from the first movie, deduplicated by a
//! canonical hash; a returned witness replays move by move. A not-found
//! outcome is inconclusive, never a negative certificate.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use sha2::{Digest, Sha256};

use super::{applicable_moves, apply_chart_move, MoveError, MoveInstance, MoveOptions};
use crate::chart_movie::ChartMovie;

/// Content hash of a movie up to no-op normalization (do-nothing levels
/// are dropped before hashing).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct CanonicalHash([u8; 32]);

impl fmt::Display for CanonicalHash {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.0 {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CanonicalHash {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalHash({self})")
    }
}

/// Hash a validated movie's canonical form.
pub fn canonical_hash(movie: &ChartMovie) -> CanonicalHash {
    let canon = movie.without_nops();
    let text = serde_json::to_string(&canon).expect("movies serialize");
    let mut hasher = Sha256::new();
    hasher.update(text.as_bytes());
    CanonicalHash(hasher.finalize().into())
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub depth: usize,
    pub budget: usize,
    pub moves: MoveOptions,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            depth: 6,
            budget: 100_000,
            moves: MoveOptions::default(),
        }
    }
}

#[derive(Clone, Debug)]
pub enum SearchOutcome {
    /// The witness transforms the first movie into the second.
    Equivalent { witness: Vec<MoveInstance> },
    /// Inconclusive: the bounded search saw `explored` movies.
    NotFound {
        explored: usize,
        budget_exhausted: bool,
    },
}

/// Breadth-first search for a move sequence from `a` to `b`, up to the
/// given depth and node budget.
pub fn equivalent_bounded(
    a: &ChartMovie,
    b: &ChartMovie,
    opts: &SearchOptions,
) -> Result<SearchOutcome, MoveError> {
    if a.degree != b.degree {
        return Err(MoveError::DegreeMismatch(a.degree, b.degree));
    }
    a.validate_ok()?;
    b.validate_ok()?;
    let target = canonical_hash(b);
    if canonical_hash(a) == target {
        return Ok(SearchOutcome::Equivalent {
            witness: Vec::new(),
        });
    }

    struct Node {
        movie: ChartMovie,
        parent: Option<(usize, MoveInstance)>,
        depth: usize,
    }

    let mut nodes = vec![Node {
        movie: a.clone(),
        parent: None,
        depth: 0,
    }];
    let mut visited: HashSet<CanonicalHash> = HashSet::from([canonical_hash(a)]);
    let mut queue: VecDeque<usize> = VecDeque::from([0]);
    let mut budget_exhausted = false;

    'outer: while let Some(id) = queue.pop_front() {
        if nodes[id].depth >= opts.depth {
            continue;
        }
        let moves = applicable_moves(&nodes[id].movie, &opts.moves)?;
        for inst in moves {
            let next = match apply_chart_move(&nodes[id].movie, &inst) {
                Ok(next) => next,
                Err(_) => continue,
            };
            let hash = canonical_hash(&next);
            if !visited.insert(hash) {
                continue;
            }
            let depth = nodes[id].depth + 1;
            nodes.push(Node {
                movie: next,
                parent: Some((id, inst)),
                depth,
            });
            let new_id = nodes.len() - 1;
            if hash == target {
                let mut witness = Vec::new();
                let mut cursor = new_id;
                while let Some((parent, inst)) = nodes[cursor].parent.clone() {
                    witness.push(inst);
                    cursor = parent;
                }
                witness.reverse();
                return Ok(SearchOutcome::Equivalent { witness });
            }
            if nodes.len() >= opts.budget {
                budget_exhausted = true;
                break 'outer;
            }
            queue.push_back(new_id);
        }
    }

    Ok(SearchOutcome::NotFound {
        explored: nodes.len(),
        budget_exhausted,
    })
}
