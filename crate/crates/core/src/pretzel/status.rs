//! Triviality decision for fully resolved pretzel states.
//!
//! Within a stack, adjacent opposite crossings cancel by Reidemeister II
//! moves, so only the signed net of each stack matters. A stack whose net
//! has absolute value at least 2 keeps its two strands linked and the
//! diagram is knotted. A stack with net 0 separates the petals and leaves a
//! `T(p, q)` pattern, which is K-trivial. When every stack is a single
//! crossing the stacks cancel pairwise across stack boundaries and only the
//! total matters.

use super::{PretzelState, StackEntry};
use crate::diagram::{Pseudodiagram, SiteKind, SlotRef};
use crate::error::{Error, Result};
use crate::moves::insert_kink;
use crate::verdict::Verdict;

/// Signed net crossings per stack.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReducedPretzel {
    pub nets: Vec<i32>,
}

impl ReducedPretzel {
    pub fn status(&self) -> Verdict {
        status_of_nets(&self.nets)
    }

    pub fn mirror(&self) -> ReducedPretzel {
        ReducedPretzel { nets: self.nets.iter().map(|e| -e).collect() }
    }
}

pub fn reduce(state: &PretzelState) -> Result<ReducedPretzel> {
    state
        .stacks()
        .iter()
        .map(|s| {
            s.iter().try_fold(0i32, |acc, e| match e {
                StackEntry::Plus => Ok(acc + 1),
                StackEntry::Minus => Ok(acc - 1),
                StackEntry::Unresolved => Err(Error::Unresolved),
            })
        })
        .collect::<Result<Vec<_>>>()
        .map(|nets| ReducedPretzel { nets })
}

pub fn status_of_nets(nets: &[i32]) -> Verdict {
    if nets.iter().any(|e| e.abs() >= 2) {
        return Verdict::Knotted;
    }
    if nets.contains(&0) {
        return Verdict::TrivialK;
    }
    match nets.iter().sum::<i32>().abs() {
        0 => Verdict::TrivialK,
        1 => Verdict::TrivialL,
        _ => Verdict::Knotted,
    }
}

pub fn resolution_status(state: &PretzelState) -> Result<Verdict> {
    Ok(reduce(state)?.status())
}

/// The diagram `T(p, q)`: the type-K vertex with `p` and `q` curls on its
/// two petals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TpqForm {
    pub p: u32,
    pub q: u32,
}

impl TpqForm {
    /// Curls are precrossings; resolve them to get diagrams of `T(p, q)`.
    pub fn diagram(&self) -> Pseudodiagram {
        let mut d = super::PretzelCode::new(vec![0]).expect("(0) is valid").diagram();
        let v = d.vertex().expect("has a vertex");
        for (slot, count) in [(3u8, self.p), (0u8, self.q)] {
            for _ in 0..count {
                d = insert_kink(&d, SlotRef::new(v, slot), SiteKind::Precrossing, false);
            }
        }
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn state(s: &str) -> PretzelState {
        PretzelState::parse(s).unwrap()
    }

    #[test]
    fn reduce_counts_nets() {
        assert_eq!(reduce(&state("(+-+)")).unwrap().nets, vec![1]);
        assert_eq!(reduce(&state("(++++)")).unwrap().nets, vec![4]);
        assert_eq!(reduce(&state("(+-,+++)")).unwrap().nets, vec![0, 3]);
        assert_eq!(reduce(&state("(+?-)")), Err(Error::Unresolved));
    }

    #[test]
    fn single_stack_statuses() {
        assert_eq!(resolution_status(&state("(++--)")).unwrap(), Verdict::TrivialK);
        assert_eq!(resolution_status(&state("(++++)")).unwrap(), Verdict::Knotted);
        assert_eq!(resolution_status(&state("(+-+)")).unwrap(), Verdict::TrivialL);
        assert_eq!(resolution_status(&state("()")).unwrap(), Verdict::TrivialK);
    }

    #[test]
    fn single_crossing_stacks_cancel_by_total() {
        assert_eq!(resolution_status(&state("(+,-)")).unwrap(), Verdict::TrivialK);
        assert_eq!(resolution_status(&state("(+,+)")).unwrap(), Verdict::Knotted);
        assert_eq!(resolution_status(&state("(+,-,+)")).unwrap(), Verdict::TrivialL);
        assert_eq!(resolution_status(&state("(+-,+,-,+)")).unwrap(), Verdict::TrivialK);
    }

    #[test]
    fn knotted_stack_dominates() {
        assert_eq!(resolution_status(&state("(++,+)")).unwrap(), Verdict::Knotted);
        assert_eq!(resolution_status(&state("(+-,+++)")).unwrap(), Verdict::Knotted);
    }
}
