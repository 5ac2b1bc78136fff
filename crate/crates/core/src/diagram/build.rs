//! Pretzel diagrams as combinatorial maps.
//!
//! Columns are laid out left to right: the rigid vertex first, then one
//! vertical stack per entry. Neighbouring columns are joined top-right to
//! top-left and bottom-right to bottom-left, and the last column wraps around
//! the outside back to the vertex.
//!
//! Vertex slots: 0 = upper left, 1 = lower left, 2 = lower right, 3 = upper
//! right (the edges labelled 1, 4, 3, 2 when read clockwise from the upper
//! left). Crossing slots: 0 = lower left, 1 = lower right, 2 = upper right,
//! 3 = upper left, so a `+` entry is a crossing whose overstrand has positive
//! slope.

use super::{Pseudodiagram, SiteId, SiteKind, SlotRef};
use crate::error::Result;
use crate::pretzel::{PretzelCode, PretzelState};

pub(crate) const V_NW: u8 = 0;
pub(crate) const V_SW: u8 = 1;
pub(crate) const V_SE: u8 = 2;
pub(crate) const V_NE: u8 = 3;

pub(crate) const X_SW: u8 = 0;
pub(crate) const X_SE: u8 = 1;
pub(crate) const X_NE: u8 = 2;
pub(crate) const X_NW: u8 = 3;

/// Site ids of a pretzel diagram, stack by stack, top to bottom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StackLayout {
    pub vertex: SiteId,
    pub stacks: Vec<Vec<SiteId>>,
}

const TL: usize = 0;
const TR: usize = 1;
const BL: usize = 2;
const BR: usize = 3;

/// Build the map for the given stacks without checking the 2-bouquet
/// conditions. Empty stacks are two parallel vertical strands.
pub fn pretzel_map_unchecked(stacks: &[Vec<SiteKind>]) -> (Pseudodiagram, StackLayout) {
    let cols = stacks.len() + 1;
    let mut d = Pseudodiagram::empty();
    let vertex: SiteId = 0;
    d.insert_site(vertex, SiteKind::RigidVertex);

    // ends[col * 4 + corner]: Some(dart) or None for a pass-through corner
    let mut ends: Vec<Option<SlotRef>> = vec![None; cols * 4];
    let mut through: Vec<Option<usize>> = vec![None; cols * 4];
    ends[TL] = Some(SlotRef::new(vertex, V_NW));
    ends[BL] = Some(SlotRef::new(vertex, V_SW));
    ends[BR] = Some(SlotRef::new(vertex, V_SE));
    ends[TR] = Some(SlotRef::new(vertex, V_NE));

    let mut next_id: SiteId = 1;
    let mut layout = Vec::with_capacity(stacks.len());
    for (i, stack) in stacks.iter().enumerate() {
        let base = (i + 1) * 4;
        let ids: Vec<SiteId> = (0..stack.len() as SiteId).map(|r| next_id + r).collect();
        next_id += stack.len() as SiteId;
        for (&id, &kind) in ids.iter().zip(stack) {
            d.insert_site(id, kind);
        }
        for w in ids.windows(2) {
            d.connect(SlotRef::new(w[0], X_SW), SlotRef::new(w[1], X_NW));
            d.connect(SlotRef::new(w[0], X_SE), SlotRef::new(w[1], X_NE));
        }
        match (ids.first(), ids.last()) {
            (Some(&top), Some(&bottom)) => {
                ends[base + TL] = Some(SlotRef::new(top, X_NW));
                ends[base + TR] = Some(SlotRef::new(top, X_NE));
                ends[base + BL] = Some(SlotRef::new(bottom, X_SW));
                ends[base + BR] = Some(SlotRef::new(bottom, X_SE));
            }
            _ => {
                through[base + TL] = Some(base + BL);
                through[base + BL] = Some(base + TL);
                through[base + TR] = Some(base + BR);
                through[base + BR] = Some(base + TR);
            }
        }
        layout.push(ids);
    }

    let mut conn = vec![0usize; cols * 4];
    for c in 0..cols {
        let n = (c + 1) % cols;
        conn[c * 4 + TR] = n * 4 + TL;
        conn[n * 4 + TL] = c * 4 + TR;
        conn[c * 4 + BR] = n * 4 + BL;
        conn[n * 4 + BL] = c * 4 + BR;
    }
    for start in 0..cols * 4 {
        let Some(a) = ends[start] else { continue };
        let mut e = conn[start];
        while let Some(t) = through[e] {
            e = conn[t];
        }
        if let Some(b) = ends[e] {
            d.connect(a, b);
        }
    }
    (d, StackLayout { vertex, stacks: layout })
}

pub fn from_pretzel_code(code: &PretzelCode) -> Result<Pseudodiagram> {
    let stacks: Vec<Vec<SiteKind>> = code.entries().iter().map(|&x| vec![SiteKind::Precrossing; x as usize]).collect();
    Ok(pretzel_map_unchecked(&stacks).0)
}

pub fn from_pretzel_state(state: &PretzelState) -> Result<Pseudodiagram> {
    Ok(pretzel_map_unchecked(&state.site_kinds()).0)
}
