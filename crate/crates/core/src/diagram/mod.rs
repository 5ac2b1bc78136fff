//! Pseudodiagrams of rigid-vertex 2-bouquets as planar combinatorial maps.
//!
//! A diagram is a rotation system: every site (the rigid vertex, a crossing
//! or a precrossing) has four slots numbered `0..4` counterclockwise, and
//! every slot is glued to exactly one other slot. Faces are derived from the
//! rotation system and never stored.
//!
//! Strands pass straight through crossings and precrossings: a strand that
//! enters at slot `i` leaves at slot `i + 2 (mod 4)`. At a crossing the
//! strand through the even slots `{0, 2}` is the overstrand for
//! [`SiteKind::CrossingPlus`] and the understrand for
//! [`SiteKind::CrossingMinus`]; drawn with slot 0 at the lower left, this is
//! the usual "overstrand has positive slope" convention.

mod build;
mod canon;
mod json;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use build::{from_pretzel_code, from_pretzel_state, pretzel_map_unchecked, StackLayout};
pub use json::DiagramFile;

pub type SiteId = u32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SiteKind {
    RigidVertex,
    Precrossing,
    CrossingPlus,
    CrossingMinus,
}

impl SiteKind {
    pub fn is_crossing(self) -> bool {
        matches!(self, SiteKind::CrossingPlus | SiteKind::CrossingMinus)
    }

    pub fn mirrored(self) -> SiteKind {
        match self {
            SiteKind::CrossingPlus => SiteKind::CrossingMinus,
            SiteKind::CrossingMinus => SiteKind::CrossingPlus,
            k => k,
        }
    }

    /// Parity of the slots carrying the overstrand, for crossings.
    pub fn over_parity(self) -> Option<u8> {
        match self {
            SiteKind::CrossingPlus => Some(0),
            SiteKind::CrossingMinus => Some(1),
            _ => None,
        }
    }

    /// The crossing whose overstrand runs through slots of the given parity.
    pub fn with_over_parity(parity: u8) -> SiteKind {
        if parity.is_multiple_of(2) {
            SiteKind::CrossingPlus
        } else {
            SiteKind::CrossingMinus
        }
    }

    /// Kind seen after renumbering the slots by `offset` steps.
    ///
    /// An odd rotation exchanges the roles of the two strands, so the sign of
    /// a crossing flips.
    pub fn rotated(self, offset: u8) -> SiteKind {
        if offset % 2 == 1 {
            self.mirrored()
        } else {
            self
        }
    }

    pub(crate) fn code_char(self) -> char {
        match self {
            SiteKind::RigidVertex => 'V',
            SiteKind::Precrossing => 'o',
            SiteKind::CrossingPlus => '+',
            SiteKind::CrossingMinus => '-',
        }
    }
}

/// Resolution sign of a precrossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn crossing(self) -> SiteKind {
        match self {
            Sign::Plus => SiteKind::CrossingPlus,
            Sign::Minus => SiteKind::CrossingMinus,
        }
    }

    pub fn value(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SlotRef {
    pub site: SiteId,
    pub slot: u8,
}

impl SlotRef {
    pub const fn new(site: SiteId, slot: u8) -> Self {
        SlotRef { site, slot }
    }

    /// The slot `k` steps counterclockwise from this one.
    pub fn rot(self, k: u8) -> SlotRef {
        SlotRef::new(self.site, (self.slot + k) % 4)
    }

    /// Where a strand entering at this slot leaves the site.
    pub fn opposite(self) -> SlotRef {
        self.rot(2)
    }
}

impl fmt::Display for SlotRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.site, self.slot)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BouquetType {
    K,
    L,
}

impl fmt::Display for BouquetType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BouquetType::K => "K",
            BouquetType::L => "L",
        })
    }
}

/// One violated diagram invariant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Violation {
    DuplicateSite(SiteId),
    UnknownSite(SlotRef),
    SlotOutOfRange { site: SiteId, slot: u8 },
    SlotReused(SlotRef),
    UnpairedSlot(SlotRef),
    VertexCount(usize),
    Disconnected { components: usize },
    NotPlanar { vertices: usize, edges: usize, faces: usize },
    PetalCount(usize),
    ExtraComponent { sites: Vec<SiteId> },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DuplicateSite(id) => write!(f, "site id {id} declared twice"),
            Violation::UnknownSite(s) => write!(f, "edge endpoint {s} names an undeclared site"),
            Violation::SlotOutOfRange { site, slot } => {
                write!(f, "site {site} slot {slot} out of range 0..3")
            }
            Violation::SlotReused(s) => write!(f, "slot {s} used by more than one edge"),
            Violation::UnpairedSlot(s) => write!(f, "slot {s} is not attached to any edge"),
            Violation::VertexCount(n) => write!(f, "expected exactly one rigid vertex, found {n}"),
            Violation::Disconnected { components } => {
                write!(f, "map is disconnected ({components} components)")
            }
            Violation::NotPlanar { vertices, edges, faces } => write!(
                f,
                "not planar: V - E + F = {vertices} - {edges} + {faces} = {}",
                *vertices as i64 - *edges as i64 + *faces as i64
            ),
            Violation::PetalCount(n) => write!(f, "expected 2 petals, traced {n}"),
            Violation::ExtraComponent { sites } => write!(
                f,
                "closed component not passing through the vertex (sites {sites:?}); at most one \
                 pretzel stack may be even"
            ),
        }
    }
}

/// List of violated invariants; empty means valid.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn into_result(self) -> Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(Error::InvalidDiagram(self))
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// A strand of a 2-bouquet traced from one vertex slot to another.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Petal {
    /// Slots visited in order, starting and ending at vertex slots.
    pub path: Vec<SlotRef>,
}

impl Petal {
    pub fn start(&self) -> SlotRef {
        self.path[0]
    }

    pub fn end(&self) -> SlotRef {
        *self.path.last().expect("petal path is never empty")
    }

    /// Non-vertex sites crossed, in order (a site may appear twice).
    pub fn sites(&self) -> impl Iterator<Item = SiteId> + '_ {
        self.path[1..self.path.len() - 1].iter().step_by(2).map(|s| s.site)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pseudodiagram {
    kinds: BTreeMap<SiteId, SiteKind>,
    link: BTreeMap<SlotRef, SlotRef>,
}

impl Pseudodiagram {
    /// Assemble a diagram from raw parts.
    ///
    /// Problems that cannot be represented at all (bad slot numbers, reused
    /// slots, undeclared sites) are returned as a report. Everything else is
    /// accepted here and checked by [`Pseudodiagram::validate`].
    pub fn from_parts<S, E>(sites: S, edges: E) -> std::result::Result<Self, ValidationReport>
    where
        S: IntoIterator<Item = (SiteId, SiteKind)>,
        E: IntoIterator<Item = (SlotRef, SlotRef)>,
    {
        let mut violations = Vec::new();
        let mut kinds = BTreeMap::new();
        for (id, kind) in sites {
            if kinds.insert(id, kind).is_some() {
                violations.push(Violation::DuplicateSite(id));
            }
        }
        let mut link = BTreeMap::new();
        for (a, b) in edges {
            let mut ok = true;
            for s in [a, b] {
                if s.slot > 3 {
                    violations.push(Violation::SlotOutOfRange { site: s.site, slot: s.slot });
                    ok = false;
                } else if !kinds.contains_key(&s.site) {
                    violations.push(Violation::UnknownSite(s));
                    ok = false;
                }
            }
            if !ok {
                continue;
            }
            if a == b {
                violations.push(Violation::SlotReused(a));
                continue;
            }
            for s in [a, b] {
                if link.contains_key(&s) {
                    violations.push(Violation::SlotReused(s));
                    ok = false;
                }
            }
            if ok {
                link.insert(a, b);
                link.insert(b, a);
            }
        }
        if violations.is_empty() {
            Ok(Pseudodiagram { kinds, link })
        } else {
            Err(ValidationReport { violations })
        }
    }

    pub(crate) fn empty() -> Self {
        Pseudodiagram { kinds: BTreeMap::new(), link: BTreeMap::new() }
    }

    pub fn site_count(&self) -> usize {
        self.kinds.len()
    }

    pub fn sites(&self) -> impl Iterator<Item = (SiteId, SiteKind)> + '_ {
        self.kinds.iter().map(|(&id, &k)| (id, k))
    }

    pub fn kind(&self, site: SiteId) -> Option<SiteKind> {
        self.kinds.get(&site).copied()
    }

    pub fn partner(&self, slot: SlotRef) -> Option<SlotRef> {
        self.link.get(&slot).copied()
    }

    /// Each edge once, as an ordered pair with the smaller endpoint first.
    pub fn edges(&self) -> impl Iterator<Item = (SlotRef, SlotRef)> + '_ {
        self.link.iter().filter(|(a, b)| a < b).map(|(&a, &b)| (a, b))
    }

    pub fn edge_count(&self) -> usize {
        self.link.len() / 2
    }

    pub fn vertex(&self) -> Option<SiteId> {
        self.kinds.iter().find(|(_, k)| **k == SiteKind::RigidVertex).map(|(&id, _)| id)
    }

    pub fn precrossings(&self) -> Vec<SiteId> {
        self.kinds.iter().filter(|(_, k)| **k == SiteKind::Precrossing).map(|(&id, _)| id).collect()
    }

    pub fn precrossing_count(&self) -> usize {
        self.kinds.values().filter(|k| **k == SiteKind::Precrossing).count()
    }

    pub fn crossing_count(&self) -> usize {
        self.kinds.values().filter(|k| k.is_crossing()).count()
    }

    /// Number of non-vertex sites.
    pub fn double_point_count(&self) -> usize {
        self.kinds.values().filter(|k| **k != SiteKind::RigidVertex).count()
    }

    pub(crate) fn next_id(&self) -> SiteId {
        self.kinds.keys().next_back().map_or(0, |id| id + 1)
    }

    pub(crate) fn insert_site(&mut self, id: SiteId, kind: SiteKind) {
        self.kinds.insert(id, kind);
    }

    pub(crate) fn set_kind(&mut self, id: SiteId, kind: SiteKind) {
        self.kinds.insert(id, kind);
    }

    /// Remove a site and detach every slot glued to it.
    pub(crate) fn remove_site(&mut self, id: SiteId) {
        self.kinds.remove(&id);
        for slot in 0..4 {
            if let Some(p) = self.link.remove(&SlotRef::new(id, slot)) {
                self.link.remove(&p);
            }
        }
    }

    pub(crate) fn connect(&mut self, a: SlotRef, b: SlotRef) {
        debug_assert_ne!(a, b);
        if let Some(old) = self.link.insert(a, b) {
            if old != b {
                self.link.remove(&old);
            }
        }
        if let Some(old) = self.link.insert(b, a) {
            if old != a {
                self.link.remove(&old);
            }
        }
    }

    pub(crate) fn disconnect(&mut self, a: SlotRef) {
        if let Some(b) = self.link.remove(&a) {
            self.link.remove(&b);
        }
    }

    /// Face permutation: cross the edge, then turn to the next slot counterclockwise.
    pub(crate) fn face_next(&self, dart: SlotRef) -> Option<SlotRef> {
        self.partner(dart).map(|p| p.rot(1))
    }

    /// All faces as cyclic dart sequences, in a deterministic order.
    pub fn faces(&self) -> Vec<Vec<SlotRef>> {
        let mut seen = BTreeSet::new();
        let mut faces = Vec::new();
        for &start in self.link.keys() {
            if seen.contains(&start) {
                continue;
            }
            let mut face = Vec::new();
            let mut d = start;
            loop {
                if !seen.insert(d) {
                    break;
                }
                face.push(d);
                match self.face_next(d) {
                    Some(n) => d = n,
                    None => break,
                }
            }
            faces.push(face);
        }
        faces
    }

    fn component_count(&self) -> usize {
        let ids: Vec<SiteId> = self.kinds.keys().copied().collect();
        let index: BTreeMap<SiteId, usize> = ids.iter().enumerate().map(|(i, &id)| (id, i)).collect();
        let mut parent: Vec<usize> = (0..ids.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for (a, b) in self.edges() {
            let (ra, rb) = (find(&mut parent, index[&a.site]), find(&mut parent, index[&b.site]));
            if ra != rb {
                parent[ra] = rb;
            }
        }
        (0..ids.len()).filter(|&i| find(&mut parent, i) == i).count()
    }

    /// Map-level checks only: slots paired, one vertex, connected, genus 0.
    pub fn validate_map(&self) -> ValidationReport {
        let mut violations = Vec::new();
        for &id in self.kinds.keys() {
            for slot in 0..4 {
                let s = SlotRef::new(id, slot);
                if !self.link.contains_key(&s) {
                    violations.push(Violation::UnpairedSlot(s));
                }
            }
        }
        let vertices = self.kinds.values().filter(|k| **k == SiteKind::RigidVertex).count();
        if vertices != 1 {
            violations.push(Violation::VertexCount(vertices));
        }
        let components = self.component_count();
        if components != 1 {
            violations.push(Violation::Disconnected { components });
        }
        if violations.is_empty() {
            let (v, e, f) = (self.kinds.len(), self.edge_count(), self.faces().len());
            if v as i64 - e as i64 + f as i64 != 2 {
                violations.push(Violation::NotPlanar { vertices: v, edges: e, faces: f });
            }
        }
        ValidationReport { violations }
    }

    /// Full check: map-level invariants plus the 2-bouquet strand structure.
    pub fn validate(&self) -> ValidationReport {
        let mut report = self.validate_map();
        if !report.is_valid() {
            return report;
        }
        let (petals, leftover) = self.trace_strands();
        if petals.len() != 2 {
            report.violations.push(Violation::PetalCount(petals.len()));
        }
        if !leftover.is_empty() {
            report.violations.push(Violation::ExtraComponent { sites: leftover });
        }
        report
    }

    /// Trace strands from the vertex slots. Returns the petals and the sites
    /// visited by no petal.
    fn trace_strands(&self) -> (Vec<Petal>, Vec<SiteId>) {
        let Some(v) = self.vertex() else {
            return (Vec::new(), self.kinds.keys().copied().collect());
        };
        let mut used_vertex_slots = BTreeSet::new();
        let mut visited: BTreeMap<SiteId, u8> = BTreeMap::new();
        let mut petals = Vec::new();
        let limit = 2 * self.kinds.len() + 4;
        for slot in 0..4u8 {
            let start = SlotRef::new(v, slot);
            if used_vertex_slots.contains(&start) {
                continue;
            }
            let mut path = vec![start];
            let mut cur = start;
            let mut closed = false;
            for _ in 0..limit {
                let Some(p) = self.partner(cur) else { break };
                path.push(p);
                if p.site == v {
                    closed = true;
                    break;
                }
                *visited.entry(p.site).or_default() += 1;
                cur = p.opposite();
                path.push(cur);
            }
            used_vertex_slots.insert(start);
            if closed {
                used_vertex_slots.insert(*path.last().unwrap());
                petals.push(Petal { path });
            }
        }
        let leftover =
            self.kinds.keys().copied().filter(|&id| id != v && visited.get(&id).copied().unwrap_or(0) < 2).collect();
        (petals, leftover)
    }

    /// The two petals; the first starts at vertex slot 0.
    pub fn petals(&self) -> Result<[Petal; 2]> {
        self.validate().into_result()?;
        let (petals, _) = self.trace_strands();
        let [a, b]: [Petal; 2] = petals.try_into().expect("validated diagrams have two petals");
        Ok([a, b])
    }

    pub fn bouquet_type(&self) -> Result<BouquetType> {
        let [p, _] = self.petals()?;
        Ok(petal_type(&p))
    }

    pub fn mirror(&self) -> Pseudodiagram {
        let mut d = self.clone();
        for k in d.kinds.values_mut() {
            *k = k.mirrored();
        }
        d
    }

    pub fn resolve(&self, site: SiteId, sign: Sign) -> Result<Pseudodiagram> {
        match self.kind(site) {
            None => Err(Error::UnknownSite(site)),
            Some(SiteKind::Precrossing) => {
                let mut d = self.clone();
                d.set_kind(site, sign.crossing());
                Ok(d)
            }
            Some(_) => Err(Error::NotAPrecrossing(site)),
        }
    }

    /// Resolve every precrossing according to `choice`.
    pub fn resolve_all(&self, choice: &ResolutionChoice) -> Result<Pseudodiagram> {
        let pre = self.precrossings();
        if pre.len() != choice.assignment.len() || pre.iter().any(|p| !choice.assignment.contains_key(p)) {
            return Err(Error::InvalidArgument("resolution choice must cover exactly the precrossings".into()));
        }
        let mut d = self.clone();
        for (&site, &sign) in &choice.assignment {
            d.set_kind(site, sign.crossing());
        }
        Ok(d)
    }

    /// All `2^p` full resolutions in counter order.
    ///
    /// Precrossings are sorted by id; bit `i` of the counter decides the
    /// `i`-th precrossing, with a clear bit meaning [`Sign::Plus`].
    pub fn resolutions(&self) -> Resolutions<'_> {
        let pre = self.precrossings();
        assert!(pre.len() < 64, "too many precrossings to enumerate");
        Resolutions { base: self, total: 1u64 << pre.len(), next: 0, pre }
    }

    /// Resolution number `index` in the counter order of [`Pseudodiagram::resolutions`].
    pub fn resolution_at(&self, pre: &[SiteId], index: u64) -> Pseudodiagram {
        let mut d = self.clone();
        for (bit, &site) in pre.iter().enumerate() {
            let sign = if index >> bit & 1 == 0 { Sign::Plus } else { Sign::Minus };
            d.set_kind(site, sign.crossing());
        }
        d
    }

    /// Renumber sites through `f`; used to test relabeling invariance.
    pub fn relabeled(&self, f: impl Fn(SiteId) -> SiteId) -> Pseudodiagram {
        Pseudodiagram {
            kinds: self.kinds.iter().map(|(&id, &k)| (f(id), k)).collect(),
            link: self
                .link
                .iter()
                .map(|(a, b)| (SlotRef::new(f(a.site), a.slot), SlotRef::new(f(b.site), b.slot)))
                .collect(),
        }
    }

    /// Renumber the slots of `site` by `offset` steps, adjusting its kind so
    /// the diagram is unchanged.
    pub fn rotate_site(&self, site: SiteId, offset: u8) -> Pseudodiagram {
        let offset = offset % 4;
        let mv = |s: SlotRef| if s.site == site { s.rot(offset) } else { s };
        let mut d = Pseudodiagram {
            kinds: self.kinds.clone(),
            link: self.link.iter().map(|(&a, &b)| (mv(a), mv(b))).collect(),
        };
        if let Some(k) = d.kinds.get_mut(&site) {
            *k = k.rotated(offset);
        }
        d
    }

    pub fn canonical_code(&self) -> Result<String> {
        self.validate().into_result()?;
        Ok(canon::canonical_code(self))
    }

    /// Canonical code without the strand checks; for move-engine intermediates.
    pub fn map_code(&self) -> Result<String> {
        self.validate_map().into_result()?;
        Ok(canon::canonical_code(self))
    }
}

pub(crate) fn petal_type(p: &Petal) -> BouquetType {
    match (p.end().slot + 4 - p.start().slot) % 4 {
        2 => BouquetType::L,
        _ => BouquetType::K,
    }
}

/// Assignment of a sign to each precrossing.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ResolutionChoice {
    pub assignment: BTreeMap<SiteId, Sign>,
}

pub struct Resolutions<'a> {
    base: &'a Pseudodiagram,
    pre: Vec<SiteId>,
    total: u64,
    next: u64,
}

impl Resolutions<'_> {
    pub fn precrossings(&self) -> &[SiteId] {
        &self.pre
    }
}

impl Iterator for Resolutions<'_> {
    type Item = Pseudodiagram;

    fn next(&mut self) -> Option<Pseudodiagram> {
        if self.next >= self.total {
            return None;
        }
        let d = self.base.resolution_at(&self.pre, self.next);
        self.next += 1;
        Some(d)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for Resolutions<'_> {}

#[cfg(test)]
mod tests;
