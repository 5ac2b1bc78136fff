//! Extended Reidemeister and pseudo-Reidemeister moves on pseudodiagrams,
//! and a bounded search that uses them to decide triviality.
//!
//! Every move is a local rewrite of a small tangle. Moves that remove
//! double points are `Reduce`; their inverses are `Expand`. Moves that keep
//! the number of double points (`R3`, `R4`, `R5`, `PR2`, `PR3`) are their
//! own inverses and are always listed as `Reduce`.

mod recognize;
mod rules;
mod search;
mod tangle;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagram::{Pseudodiagram, SiteKind, SlotRef};
use crate::error::{Error, Result};

pub use recognize::{recognize_pretzel, PretzelReading};
pub use search::{pr_equivalent_samples, simplify, Certificate, Sample, SearchBudget, Simplification};

pub(crate) use search::{search_reductions, StandardForms};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MoveKind {
    R1,
    R2,
    R3,
    R4,
    R5,
    R5alt,
    PR1,
    PR2,
    PR3,
}

impl MoveKind {
    pub const ALL: [MoveKind; 9] = [
        MoveKind::R1,
        MoveKind::R2,
        MoveKind::R3,
        MoveKind::R4,
        MoveKind::R5,
        MoveKind::R5alt,
        MoveKind::PR1,
        MoveKind::PR2,
        MoveKind::PR3,
    ];

    pub fn is_pseudo(self) -> bool {
        matches!(self, MoveKind::PR1 | MoveKind::PR2 | MoveKind::PR3)
    }

    /// Direction of the move that undoes a move in direction `dir`.
    pub fn inverse(self, dir: Direction) -> Direction {
        match self {
            MoveKind::R3 | MoveKind::R4 | MoveKind::R5 | MoveKind::PR2 | MoveKind::PR3 => dir,
            _ => dir.flipped(),
        }
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Reduce,
    Expand,
}

impl Direction {
    pub fn flipped(self) -> Direction {
        match self {
            Direction::Reduce => Direction::Expand,
            Direction::Expand => Direction::Reduce,
        }
    }
}

/// A located move. The anchor lists the matched site ids (or, for moves
/// that insert a tangle into faces, the cut darts as `site, slot` pairs),
/// followed by a variant number.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MoveInstance {
    pub kind: MoveKind,
    pub direction: Direction,
    pub anchor: Vec<u32>,
}

impl fmt::Display for MoveInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.anchor.iter().map(|a| a.to_string()).collect();
        write!(f, "{} {:?} [{}]", self.kind, self.direction, parts.join(","))
    }
}

/// Every move that applies to `d`, in a fixed order.
pub fn applicable_moves(d: &Pseudodiagram) -> Vec<MoveInstance> {
    rules::enumerate(d, &rules::Filter::all()).into_iter().map(|(m, _)| m).collect()
}

pub fn apply_move(d: &Pseudodiagram, m: &MoveInstance) -> Result<Pseudodiagram> {
    let filter = rules::Filter::only(m.kind, m.direction);
    rules::enumerate(d, &filter)
        .into_iter()
        .find(|(inst, _)| inst == m)
        .map(|(_, r)| r)
        .ok_or_else(|| Error::StaleMove(m.to_string()))
}

/// Add a curl with a double point of the given kind on the edge at `dart`.
/// `side` selects which side of the edge the curl lies on.
pub fn insert_kink(d: &Pseudodiagram, dart: SlotRef, kind: SiteKind, side: bool) -> Pseudodiagram {
    let other = d.partner(dart).expect("dart is attached");
    let dart = if side { other } else { dart };
    rules::kink_at(d, dart, kind)
}

#[cfg(test)]
mod tests;
