//! Local tangles: small template maps with an ordered boundary, matched
//! against a diagram and swapped in place.
//!
//! Template boundaries are listed counterclockwise around the disc that
//! contains the tangle. Replacing one tangle by another with the same
//! boundary length reconnects boundary point `i` to the same outside slot.

use std::collections::BTreeMap;

use crate::diagram::{Pseudodiagram, SiteId, SiteKind, SlotRef};

pub(crate) type Port = (usize, u8);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum End {
    Port(Port),
    /// A bare arc to another boundary point.
    Arc(usize),
}

#[derive(Debug, Clone)]
pub(crate) struct Template {
    pub sites: usize,
    pub internal: Vec<(Port, Port)>,
    pub boundary: Vec<End>,
    /// Index of the rigid vertex among the sites, if any.
    pub vertex: Option<usize>,
}

impl Template {
    pub fn new(sites: usize, internal: &[(Port, Port)], boundary: &[Port], vertex: Option<usize>) -> Self {
        Template {
            sites,
            internal: internal.to_vec(),
            boundary: boundary.iter().map(|&p| End::Port(p)).collect(),
            vertex,
        }
    }

    pub fn arcs(pairs: &[(usize, usize)]) -> Self {
        let n = pairs.len() * 2;
        let mut boundary = vec![End::Arc(0); n];
        for &(a, b) in pairs {
            boundary[a] = End::Arc(b);
            boundary[b] = End::Arc(a);
        }
        Template { sites: 0, internal: Vec::new(), boundary, vertex: None }
    }

    fn neighbour(&self, p: Port) -> Option<Port> {
        self.internal.iter().find_map(|&(a, b)| {
            if a == p {
                Some(b)
            } else if b == p {
                Some(a)
            } else {
                None
            }
        })
    }

    fn boundary_index(&self, p: Port) -> Option<usize> {
        self.boundary.iter().position(|e| *e == End::Port(p))
    }

    /// Follow every strand from the boundary through the template.
    pub fn strands(&self, kinds: &[SiteKind]) -> Strands {
        let mut at = BTreeMap::new();
        let mut ends = vec![StrandEnd::Boundary(0); self.boundary.len()];
        for (i, e) in self.boundary.iter().enumerate() {
            let mut p = match *e {
                End::Arc(j) => {
                    ends[i] = StrandEnd::Boundary(j);
                    continue;
                }
                End::Port(p) => p,
            };
            ends[i] = loop {
                if Some(p.0) == self.vertex {
                    break StrandEnd::Vertex(p.1);
                }
                at.entry(p.0).or_insert_with(BTreeMap::new).insert(p.1 % 2, i);
                let out = (p.0, (p.1 + 2) % 4);
                match self.neighbour(out) {
                    Some(next) => p = next,
                    None => break StrandEnd::Boundary(self.boundary_index(out).expect("port on boundary")),
                }
            };
        }
        let crossings = (0..self.sites)
            .filter(|&s| Some(s) != self.vertex)
            .map(|s| {
                let m = at.get(&s).cloned().unwrap_or_default();
                let id = |par: u8| m.get(&par).map(|&i| strand_id(&ends, i)).unwrap_or(usize::MAX);
                let (even, odd) = (id(0), id(1));
                let rel = match kinds[s].over_parity() {
                    Some(0) => Relation::Over(even, odd),
                    Some(_) => Relation::Over(odd, even),
                    None => Relation::Pre(even.min(odd), even.max(odd)),
                };
                (s, rel)
            })
            .collect();
        Strands { crossings }
    }
}

fn strand_id(ends: &[StrandEnd], i: usize) -> usize {
    match ends[i] {
        StrandEnd::Boundary(j) => i.min(j),
        StrandEnd::Vertex(_) => i,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum StrandEnd {
    Boundary(usize),
    /// Template slot of the vertex reached.
    Vertex(u8),
}

/// Which strand passes over at a double point. Strands are named by their
/// smallest boundary index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) enum Relation {
    Over(usize, usize),
    Pre(usize, usize),
}

#[derive(Debug, Clone)]
pub(crate) struct Strands {
    pub crossings: Vec<(usize, Relation)>,
}

impl Strands {
    pub fn relations(&self) -> Vec<Relation> {
        self.crossings.iter().map(|&(_, r)| r).collect()
    }

    /// Whether strand `s` is over at every double point it meets (`Some(true)`),
    /// under at every one (`Some(false)`), or neither.
    pub fn uniform(&self, s: usize) -> Option<bool> {
        let mut seen = None;
        for &(_, r) in &self.crossings {
            let v = match r {
                Relation::Over(a, _) if a == s => true,
                Relation::Over(_, b) if b == s => false,
                Relation::Pre(a, b) if a == s || b == s => return None,
                _ => continue,
            };
            if *seen.get_or_insert(v) != v {
                return None;
            }
        }
        seen
    }
}

/// An occurrence of a template in a diagram.
#[derive(Debug, Clone)]
pub(crate) struct Match {
    pub sites: Vec<SiteId>,
    pub offsets: Vec<u8>,
    /// Kinds read in the template's slot frame.
    pub kinds: Vec<SiteKind>,
    /// Outside slot attached to each boundary point.
    pub outer: Vec<SlotRef>,
}

fn image(sites: &[SiteId], offsets: &[u8], p: Port) -> SlotRef {
    SlotRef::new(sites[p.0], (p.1 + offsets[p.0]) % 4)
}

/// Match template site 0 onto `anchor` with the given slot offset.
pub(crate) fn match_at(d: &Pseudodiagram, t: &Template, anchor: SiteId, offset: u8) -> Option<Match> {
    if t.sites == 0 {
        return None;
    }
    let mut sites: Vec<Option<SiteId>> = vec![None; t.sites];
    let mut offs = vec![0u8; t.sites];
    sites[0] = Some(anchor);
    offs[0] = offset;
    let mut changed = true;
    while changed {
        changed = false;
        for &(a, b) in &t.internal {
            for (p, q) in [(a, b), (b, a)] {
                let Some(s) = sites[p.0] else { continue };
                let there = d.partner(SlotRef::new(s, (p.1 + offs[p.0]) % 4))?;
                let off = (there.slot + 4 - q.1) % 4;
                match sites[q.0] {
                    Some(existing) if existing != there.site || offs[q.0] != off => return None,
                    Some(_) => {}
                    None => {
                        sites[q.0] = Some(there.site);
                        offs[q.0] = off;
                        changed = true;
                    }
                }
            }
        }
    }
    let sites: Vec<SiteId> = sites.into_iter().collect::<Option<_>>()?;
    let mut sorted = sites.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != sites.len() {
        return None;
    }
    let mut kinds = Vec::with_capacity(t.sites);
    for (i, &s) in sites.iter().enumerate() {
        let k = d.kind(s)?;
        if (Some(i) == t.vertex) != (k == SiteKind::RigidVertex) {
            return None;
        }
        kinds.push(k.rotated(offs[i]));
    }
    let mut outer = Vec::with_capacity(t.boundary.len());
    for e in &t.boundary {
        let End::Port(p) = *e else { return None };
        let o = d.partner(image(&sites, &offs, p))?;
        if sorted.binary_search(&o.site).is_ok() {
            return None;
        }
        outer.push(o);
    }
    Some(Match { sites, offsets: offs, kinds, outer })
}

/// All occurrences, in order of anchor site and offset.
pub(crate) fn matches(d: &Pseudodiagram, t: &Template) -> Vec<Match> {
    let mut out = Vec::new();
    for (id, _) in d.sites() {
        for off in 0..4 {
            if let Some(m) = match_at(d, t, id, off) {
                out.push(m);
            }
        }
    }
    out
}

/// Remove `remove`, cut the edges at `cut`, and glue in `t` so that its
/// boundary point `i` meets `outer[i]`.
pub(crate) fn replace(
    d: &Pseudodiagram,
    remove: &[SiteId],
    cut: &[SlotRef],
    outer: &[SlotRef],
    t: &Template,
    kinds: &[SiteKind],
) -> Pseudodiagram {
    debug_assert_eq!(outer.len(), t.boundary.len());
    let mut r = d.clone();
    for &s in remove {
        r.remove_site(s);
    }
    for &c in cut {
        r.disconnect(c);
    }
    let base = r.next_id().max(d.next_id());
    let ids: Vec<SiteId> = (0..t.sites as SiteId).map(|i| base + i).collect();
    for (i, &id) in ids.iter().enumerate() {
        r.insert_site(id, kinds[i]);
    }
    let zero = vec![0u8; t.sites];
    for &(a, b) in &t.internal {
        r.connect(image(&ids, &zero, a), image(&ids, &zero, b));
    }
    for (i, e) in t.boundary.iter().enumerate() {
        match *e {
            End::Port(p) => r.connect(image(&ids, &zero, p), outer[i]),
            End::Arc(j) if i < j => r.connect(outer[i], outer[j]),
            End::Arc(_) => {}
        }
    }
    r
}

/// Counterclockwise boundary order obtained by walking around the
/// template, starting at its first boundary port.
#[cfg(test)]
pub(crate) fn walk_boundary(t: &Template) -> Vec<Port> {
    let ports: Vec<Port> =
        t.boundary.iter().filter_map(|e| if let End::Port(p) = e { Some(*p) } else { None }).collect();
    let Some(&start) = ports.first() else { return Vec::new() };
    let mut out = vec![start];
    let mut p = start;
    loop {
        let mut q = (p.0, (p.1 + 1) % 4);
        while let Some(n) = t.neighbour(q) {
            q = (n.0, (n.1 + 1) % 4);
        }
        if q == start {
            return out;
        }
        out.push(q);
        p = q;
        if out.len() > ports.len() {
            return out;
        }
    }
}
