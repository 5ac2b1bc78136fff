//! Reading a diagram as a pretzel pseudodiagram.

use crate::diagram::{Pseudodiagram, SiteKind, SlotRef};
use crate::pretzel::{PretzelState, StackEntry};

/// A way of reading `d` as a pretzel state, starting at the given vertex
/// slot as the upper-left edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PretzelReading {
    pub state: PretzelState,
    pub vertex_offset: u8,
}

fn entry(kind: SiteKind, offset: u8) -> StackEntry {
    match kind.rotated(offset) {
        SiteKind::CrossingPlus => StackEntry::Plus,
        SiteKind::CrossingMinus => StackEntry::Minus,
        _ => StackEntry::Unresolved,
    }
}

fn read(d: &Pseudodiagram, o: u8) -> Option<PretzelState> {
    let v = d.vertex()?;
    let at = |s, k: u8| SlotRef::new(s, (k + o) % 4);
    let nw = at(v, 0);
    let mut tr = at(v, 3);
    let mut stacks = Vec::new();
    loop {
        let q = d.partner(tr)?;
        if q == nw {
            break;
        }
        if q.site == v || stacks.len() > d.site_count() {
            return None;
        }
        let top = (q.site, (q.slot + 1) % 4);
        let mut cur = top;
        let mut stack = vec![entry(d.kind(cur.0)?, cur.1)];
        loop {
            let sw = d.partner(SlotRef::new(cur.0, cur.1))?;
            let se = d.partner(SlotRef::new(cur.0, (cur.1 + 1) % 4))?;
            let off = (sw.slot + 1) % 4;
            let stacked = sw.site == se.site && sw.site != v && se.slot == (off + 2) % 4;
            if !stacked || stack.len() > d.site_count() {
                break;
            }
            cur = (sw.site, off);
            stack.push(entry(d.kind(cur.0)?, cur.1));
        }
        stacks.push(stack);
        tr = SlotRef::new(top.0, (top.1 + 2) % 4);
    }
    PretzelState::new(stacks).ok()
}

/// All pretzel readings of `d` whose rebuilt diagram has the same
/// canonical code.
pub fn recognize_pretzel(d: &Pseudodiagram) -> Vec<PretzelReading> {
    let Ok(code) = d.canonical_code() else { return Vec::new() };
    let mut out: Vec<PretzelReading> = Vec::new();
    for o in 0..4 {
        let Some(state) = read(d, o) else { continue };
        if out.iter().any(|r| r.state == state) {
            continue;
        }
        if state.diagram().canonical_code().ok().as_ref() == Some(&code) {
            out.push(PretzelReading { state, vertex_offset: o });
        }
    }
    out
}
