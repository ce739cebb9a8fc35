//! Endpoint pairings with a closed-loop count.
//!
//! A diagram records which of the `2n` boundary points of a degree-`n`
//! tangle are joined, plus how many closed components float inside.
//! Crossings compose like transpositions; hooks pair neighbours on each
//! side. Composition stacks diagrams and absorbs interface cycles into
//! the loop count.

use std::fmt;

use thiserror::Error;

use super::{Letter, LetterKind, WordError};

/// Points `0..n` are on the bottom end of the tangle, `n..2n` on the top.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BrauerDiagram {
    degree: usize,
    /// Fixed-point-free involution on `0..2n`.
    pairing: Vec<usize>,
    loops: usize,
}

#[derive(Debug, Error)]
pub enum BrauerError {
    #[error("pairing is not a fixed-point-free involution")]
    NotInvolution,
}

/// Cursor for walking arcs of a stacked pair of diagrams.
#[derive(Clone, Copy)]
enum Pos {
    /// Point index in the lower diagram.
    Low(usize),
    /// Point index in the upper diagram.
    Up(usize),
}

impl BrauerDiagram {
    /// The identity pairing: bottom `k` joined to top `k`, no loops.
    pub fn identity(degree: usize) -> BrauerDiagram {
        let pairing = (0..2 * degree)
            .map(|p| if p < degree { p + degree } else { p - degree })
            .collect();
        BrauerDiagram {
            degree,
            pairing,
            loops: 0,
        }
    }

    /// Build from an explicit involution.
    pub fn from_pairing(
        degree: usize,
        pairing: Vec<usize>,
        loops: usize,
    ) -> Result<Self, BrauerError> {
        if pairing.len() != 2 * degree {
            return Err(BrauerError::NotInvolution);
        }
        for (p, &q) in pairing.iter().enumerate() {
            if q >= 2 * degree || q == p || pairing[q] != p {
                return Err(BrauerError::NotInvolution);
            }
        }
        Ok(BrauerDiagram {
            degree,
            pairing,
            loops,
        })
    }

    /// The diagram of a single letter.
    pub fn of_letter(letter: Letter, degree: usize) -> BrauerDiagram {
        let mut d = BrauerDiagram::identity(degree);
        let i = letter.index - 1; // 0-based strand
        let (bi, bj, ti, tj) = (i, i + 1, degree + i, degree + i + 1);
        match letter.kind {
            LetterKind::Crossing(_) => {
                d.pairing[bi] = tj;
                d.pairing[tj] = bi;
                d.pairing[bj] = ti;
                d.pairing[ti] = bj;
            }
            LetterKind::Hook => {
                d.pairing[bi] = bj;
                d.pairing[bj] = bi;
                d.pairing[ti] = tj;
                d.pairing[tj] = ti;
            }
        }
        d
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn loops(&self) -> usize {
        self.loops
    }

    /// Partner of a point under the pairing.
    pub fn partner(&self, point: usize) -> usize {
        self.pairing[point]
    }

    pub fn pairing(&self) -> &[usize] {
        &self.pairing
    }

    /// Same pairing, ignoring loop counts.
    pub fn same_pairing(&self, other: &BrauerDiagram) -> bool {
        self.degree == other.degree && self.pairing == other.pairing
    }

    /// Stack `self` (bottom) under `other` (top). Loops accumulate
    /// additively plus one per cycle closed at the interface.
    pub fn compose(&self, other: &BrauerDiagram) -> Result<BrauerDiagram, WordError> {
        if self.degree != other.degree {
            return Err(WordError::DegreeMismatch(self.degree, other.degree));
        }
        let n = self.degree;
        // Interface point m sits between self's top m and other's bottom m.
        // Outer points of the composite: self's bottoms (0..n) and other's
        // tops (n..2n), which share their numeric indices.
        let mut pairing = vec![usize::MAX; 2 * n];
        let mut seen_mid = vec![false; n];

        let follow = |start: usize, seen_mid: &mut [bool]| -> usize {
            let mut pos = if start < n {
                Pos::Low(start)
            } else {
                Pos::Up(start)
            };
            loop {
                match pos {
                    Pos::Low(p) => {
                        let q = self.pairing[p];
                        if q < n {
                            return q;
                        }
                        seen_mid[q - n] = true;
                        pos = Pos::Up(q - n);
                    }
                    Pos::Up(p) => {
                        let q = other.pairing[p];
                        if q >= n {
                            return q;
                        }
                        seen_mid[q] = true;
                        pos = Pos::Low(n + q);
                    }
                }
            }
        };

        for outer in 0..2 * n {
            if pairing[outer] != usize::MAX {
                continue;
            }
            let end = follow(outer, &mut seen_mid);
            pairing[outer] = end;
            pairing[end] = outer;
        }

        // Interface points untouched by boundary paths lie on closed
        // alternating cycles; each cycle is one new loop.
        let mut extra = 0;
        for m0 in 0..n {
            if seen_mid[m0] {
                continue;
            }
            extra += 1;
            let mut m = m0;
            loop {
                seen_mid[m] = true;
                let q = self.pairing[n + m];
                debug_assert!(q >= n, "cycle arc must stay on the interface");
                let m1 = q - n;
                seen_mid[m1] = true;
                let r = other.pairing[m1];
                debug_assert!(r < n, "cycle arc must stay on the interface");
                m = r;
                if m == m0 {
                    break;
                }
            }
        }

        Ok(BrauerDiagram {
            degree: n,
            pairing,
            loops: self.loops + other.loops + extra,
        })
    }
}

impl fmt::Debug for BrauerDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Brauer(n={}, loops={},", self.degree, self.loops)?;
        let name = |p: usize| {
            if p < self.degree {
                format!("b{}", p + 1)
            } else {
                format!("t{}", p - self.degree + 1)
            }
        };
        for p in 0..2 * self.degree {
            let q = self.pairing[p];
            if p < q {
                write!(f, " {}-{}", name(p), name(q))?;
            }
        }
        write!(f, ")")
    }
}
