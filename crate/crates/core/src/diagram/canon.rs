//! Canonical text key of a connected map, up to site renumbering and
//! per-site slot rotation.

use std::collections::BTreeMap;
use std::fmt::Write;

use super::{Pseudodiagram, SiteId, SlotRef};

/// Minimum over the four starting slots at the vertex of a breadth-first
/// encoding. Each newly reached site is numbered in discovery order and its
/// slots are renumbered so that the slot it was reached through becomes 0.
pub(super) fn canonical_code(d: &Pseudodiagram) -> String {
    let Some(v) = d.vertex() else {
        return String::new();
    };
    (0..4u8).map(|r| encode_from(d, v, r)).min().unwrap_or_default()
}

fn encode_from(d: &Pseudodiagram, v: SiteId, offset: u8) -> String {
    let mut order: Vec<(SiteId, u8)> = vec![(v, offset)];
    let mut number: BTreeMap<SiteId, (usize, u8)> = BTreeMap::new();
    number.insert(v, (0, offset));
    let mut out = String::with_capacity(d.site_count() * 24);
    let mut i = 0;
    while i < order.len() {
        let (site, off) = order[i];
        let kind = d.kind(site).expect("numbered sites exist");
        out.push(kind.rotated(off).code_char());
        for q in 0..4u8 {
            let p = d.partner(SlotRef::new(site, (q + off) % 4)).expect("map is complete");
            let (pid, poff) = *number.entry(p.site).or_insert_with(|| {
                order.push((p.site, p.slot));
                (order.len() - 1, p.slot)
            });
            let rel = (p.slot + 4 - poff) % 4;
            let _ = write!(out, "{pid}.{rel}");
            out.push(if q == 3 { ';' } else { ',' });
        }
        i += 1;
    }
    out
}
