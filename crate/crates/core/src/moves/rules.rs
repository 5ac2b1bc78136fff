//! The move catalogue as pairs of tangles.

use std::collections::HashSet;

use super::tangle::{matches, replace, Match, Relation, Template};
use super::{Direction, MoveInstance, MoveKind};
use crate::diagram::{Pseudodiagram, SiteKind, SlotRef};

const PLUS: SiteKind = SiteKind::CrossingPlus;
const MINUS: SiteKind = SiteKind::CrossingMinus;
const PRE: SiteKind = SiteKind::Precrossing;
const VERTEX: SiteKind = SiteKind::RigidVertex;

/// A curl: the loop joins slots 2 and 3.
pub(crate) fn kink() -> Template {
    Template::new(1, &[((0, 2), (0, 3))], &[(0, 0), (0, 1)], None)
}

/// Two double points joined along a face. Boundary points 0 and 1 lie on
/// one strand (even slots at both sites), 2 and 3 on the other.
pub(crate) fn bigon() -> Template {
    Template::new(2, &[((0, 0), (1, 2)), ((0, 3), (1, 3))], &[(0, 2), (1, 0), (1, 1), (0, 1)], None)
}

/// A triangle of double points; strands join boundary points `i` and `i+3`.
pub(crate) fn triangle(flipped: bool) -> Template {
    let internal = [((0, 2), (1, 3)), ((1, 2), (2, 3)), ((2, 2), (0, 3))];
    if flipped {
        Template::new(3, &internal, &[(2, 1), (0, 0), (0, 1), (1, 0), (1, 1), (2, 0)], None)
    } else {
        Template::new(3, &internal, &[(0, 0), (0, 1), (1, 0), (1, 1), (2, 0), (2, 1)], None)
    }
}

/// A strand (boundary 0 to 3) crossing vertex slots 0 and 1; the vertex is site 2.
pub(crate) fn strand_by_vertex(flipped: bool) -> Template {
    if flipped {
        Template::new(
            3,
            &[((0, 1), (2, 3)), ((0, 2), (1, 0)), ((1, 1), (2, 2))],
            &[(0, 0), (2, 0), (2, 1), (1, 2), (1, 3), (0, 3)],
            Some(2),
        )
    } else {
        Template::new(
            3,
            &[((0, 1), (1, 0)), ((0, 2), (2, 0)), ((1, 3), (2, 1))],
            &[(0, 3), (0, 0), (1, 1), (1, 2), (2, 2), (2, 3)],
            Some(2),
        )
    }
}

/// A double point on vertex slots 0 and 1 (site 0), or, flipped, the
/// reversed vertex (site 0) with the double point on its slots 2 and 3.
pub(crate) fn twisted_vertex(flipped: bool) -> Template {
    if flipped {
        Template::new(2, &[((1, 0), (0, 3)), ((1, 1), (0, 2))], &[(0, 0), (0, 1), (1, 2), (1, 3)], Some(0))
    } else {
        Template::new(2, &[((0, 2), (1, 1)), ((0, 3), (1, 0))], &[(0, 0), (0, 1), (1, 2), (1, 3)], Some(1))
    }
}

/// Vertex (site 1) twisted on both sides: slots 0,1 through site 0 and
/// slots 2,3 through site 2.
pub(crate) fn double_twist() -> Template {
    Template::new(
        3,
        &[((0, 2), (1, 1)), ((0, 3), (1, 0)), ((2, 0), (1, 3)), ((2, 1), (1, 2))],
        &[(0, 0), (0, 1), (2, 2), (2, 3)],
        Some(1),
    )
}

pub(crate) fn bare_vertex() -> Template {
    Template::new(1, &[], &[(0, 0), (0, 1), (0, 2), (0, 3)], Some(0))
}

#[derive(Debug, Clone)]
pub(crate) struct Filter {
    kind: Option<MoveKind>,
    direction: Option<Direction>,
    /// Allow moves that add double points.
    growth: bool,
}

impl Filter {
    pub fn all() -> Self {
        Filter { kind: None, direction: None, growth: true }
    }

    pub fn only(kind: MoveKind, direction: Direction) -> Self {
        Filter { kind: Some(kind), direction: Some(direction), growth: true }
    }

    /// Moves that never increase the number of double points.
    pub fn non_increasing() -> Self {
        Filter { kind: None, direction: None, growth: false }
    }

    fn wants(&self, kind: MoveKind, dir: Direction) -> bool {
        self.kind.is_none_or(|k| k == kind)
            && self.direction.is_none_or(|d| d == dir)
            && (self.growth || !grows(kind, dir))
    }

    fn wants_any(&self, kinds: &[MoveKind], dir: Direction) -> bool {
        kinds.iter().any(|&k| self.wants(k, dir))
    }
}

fn grows(kind: MoveKind, dir: Direction) -> bool {
    dir == Direction::Expand && matches!(kind, MoveKind::R1 | MoveKind::R2 | MoveKind::R5alt | MoveKind::PR1)
}

struct Out<'a> {
    filter: &'a Filter,
    seen: HashSet<(MoveKind, Direction, Pseudodiagram)>,
    list: Vec<(MoveInstance, Pseudodiagram)>,
}

impl Out<'_> {
    fn push(&mut self, kind: MoveKind, direction: Direction, anchor: Vec<u32>, result: Pseudodiagram) {
        if !self.filter.wants(kind, direction) {
            return;
        }
        if self.seen.insert((kind, direction, result.clone())) {
            self.list.push((MoveInstance { kind, direction, anchor }, result));
        }
    }
}

fn site_anchor(m: &Match, variant: u32) -> Vec<u32> {
    let mut a = m.sites.clone();
    a.push(m.offsets[0] as u32);
    a.push(variant);
    a
}

fn dart_anchor(darts: &[SlotRef], variant: u32) -> Vec<u32> {
    let mut a: Vec<u32> = darts.iter().flat_map(|d| [d.site, d.slot as u32]).collect();
    a.push(variant);
    a
}

fn is_crossing(k: SiteKind) -> bool {
    k.is_crossing()
}

/// Every way of replacing the double points of `t` by crossings or
/// precrossings, keeping the vertex.
fn assignments(t: &Template, pre_allowed: bool) -> Vec<Vec<SiteKind>> {
    let options: &[SiteKind] = if pre_allowed { &[PLUS, MINUS, PRE] } else { &[PLUS, MINUS] };
    let mut out = vec![Vec::new()];
    for s in 0..t.sites {
        let opts: Vec<SiteKind> = if Some(s) == t.vertex { vec![VERTEX] } else { options.to_vec() };
        out = out
            .into_iter()
            .flat_map(|prefix| {
                opts.iter().map(move |&k| {
                    let mut v = prefix.clone();
                    v.push(k);
                    v
                })
            })
            .collect();
    }
    out
}

pub(crate) fn kink_at(d: &Pseudodiagram, dart: SlotRef, kind: SiteKind) -> Pseudodiagram {
    let other = d.partner(dart).expect("dart is attached");
    replace(d, &[], &[dart], &[other, dart], &kink(), &[kind])
}

fn curls(d: &Pseudodiagram, out: &mut Out) {
    if out.filter.wants_any(&[MoveKind::R1, MoveKind::PR1], Direction::Reduce) {
        let arc = Template::arcs(&[(0, 1)]);
        for m in matches(d, &kink()) {
            let kind = if m.kinds[0] == PRE { MoveKind::PR1 } else { MoveKind::R1 };
            let r = replace(d, &m.sites, &[], &m.outer, &arc, &[]);
            out.push(kind, Direction::Reduce, site_anchor(&m, 0), r);
        }
    }
    if out.filter.wants_any(&[MoveKind::R1, MoveKind::PR1], Direction::Expand) {
        let darts: Vec<SlotRef> =
            d.edges().flat_map(|(a, b)| [a, b]).collect::<std::collections::BTreeSet<_>>().into_iter().collect();
        for dart in darts {
            for (variant, kind) in [PLUS, MINUS, PRE].into_iter().enumerate() {
                let mk = if kind == PRE { MoveKind::PR1 } else { MoveKind::R1 };
                if out.filter.wants(mk, Direction::Expand) {
                    out.push(mk, Direction::Expand, dart_anchor(&[dart], variant as u32), kink_at(d, dart, kind));
                }
            }
        }
    }
}

fn bigons(d: &Pseudodiagram, out: &mut Out) {
    let t = bigon();
    if out.filter.wants_any(&[MoveKind::R2, MoveKind::PR2], Direction::Reduce) {
        let arcs = Template::arcs(&[(0, 1), (2, 3)]);
        for m in matches(d, &t) {
            let crossings = m.kinds.iter().filter(|k| is_crossing(**k)).count();
            let strands = t.strands(&m.kinds);
            if crossings == 2 && strands.uniform(0).is_some() {
                let r = replace(d, &m.sites, &[], &m.outer, &arcs, &[]);
                out.push(MoveKind::R2, Direction::Reduce, site_anchor(&m, 0), r);
            } else if crossings == 1 && m.kinds.contains(&PRE) {
                let pre = m.kinds.iter().position(|&k| k == PRE).expect("one precrossing");
                for new in [PLUS, MINUS] {
                    let mut kinds = m.kinds.clone();
                    kinds[pre] = new;
                    if t.strands(&kinds).uniform(0).is_some() {
                        continue;
                    }
                    kinds[1 - pre] = PRE;
                    let r = replace(d, &m.sites, &[], &m.outer, &t, &kinds);
                    out.push(MoveKind::PR2, Direction::Reduce, site_anchor(&m, 0), r);
                }
            }
        }
    }
    if out.filter.wants(MoveKind::R2, Direction::Expand) {
        for face in d.faces() {
            for i in 0..face.len() {
                for j in i + 1..face.len() {
                    let (d1, d2) = (face[i], face[j]);
                    let (o1, o2) = (d.partner(d1).expect("paired"), d.partner(d2).expect("paired"));
                    if o1 == d2 {
                        continue;
                    }
                    for (variant, k) in [PLUS, MINUS].into_iter().enumerate() {
                        let r = replace(d, &[], &[d1, d2], &[o1, d1, o2, d2], &t, &[k, k]);
                        out.push(MoveKind::R2, Direction::Expand, dart_anchor(&[d1, d2], variant as u32), r);
                    }
                }
            }
        }
    }
}

fn triangles(d: &Pseudodiagram, out: &mut Out) {
    if !out.filter.wants_any(&[MoveKind::R3, MoveKind::PR3], Direction::Reduce) {
        return;
    }
    let (from, to) = (triangle(false), triangle(true));
    for m in matches(d, &from) {
        let pres = m.kinds.iter().filter(|&&k| k == PRE).count();
        let rel = from.strands(&m.kinds);
        let kind = match pres {
            0 => {
                let top = (0..3).any(|s| rel.uniform(s) == Some(true));
                if !top {
                    continue;
                }
                MoveKind::R3
            }
            1 => {
                let Some(&(_, Relation::Pre(a, b))) =
                    rel.crossings.iter().find(|(_, r)| matches!(r, Relation::Pre(..)))
                else {
                    continue;
                };
                let third = (0..3).find(|&s| s != a && s != b).expect("three strands");
                if rel.uniform(third).is_none() {
                    continue;
                }
                MoveKind::PR3
            }
            _ => continue,
        };
        let mut want = rel.relations();
        want.sort();
        for kinds in assignments(&to, pres == 1) {
            let mut got = to.strands(&kinds).relations();
            got.sort();
            if got == want {
                let r = replace(d, &m.sites, &[], &m.outer, &to, &kinds);
                out.push(kind, Direction::Reduce, site_anchor(&m, 0), r);
            }
        }
    }
}

fn vertex_slides(d: &Pseudodiagram, out: &mut Out) {
    if !out.filter.wants(MoveKind::R4, Direction::Reduce) {
        return;
    }
    let (from, to) = (strand_by_vertex(false), strand_by_vertex(true));
    for m in matches(d, &from) {
        if !m.kinds.iter().enumerate().all(|(i, &k)| Some(i) == from.vertex || is_crossing(k)) {
            continue;
        }
        let Some(over) = from.strands(&m.kinds).uniform(0) else { continue };
        for kinds in assignments(&to, false) {
            if to.strands(&kinds).uniform(0) == Some(over) {
                let r = replace(d, &m.sites, &[], &m.outer, &to, &kinds);
                out.push(MoveKind::R4, Direction::Reduce, site_anchor(&m, 0), r);
            }
        }
    }
}

fn vertex_twists(d: &Pseudodiagram, out: &mut Out) {
    if out.filter.wants(MoveKind::R5, Direction::Reduce) {
        let (from, to) = (twisted_vertex(false), twisted_vertex(true));
        for m in matches(d, &from) {
            let r = replace(d, &m.sites, &[], &m.outer, &to, &[VERTEX, m.kinds[0]]);
            out.push(MoveKind::R5, Direction::Reduce, site_anchor(&m, 0), r);
        }
    }
    let twist = double_twist();
    if out.filter.wants(MoveKind::R5alt, Direction::Reduce) {
        let plain = bare_vertex();
        for m in matches(d, &twist) {
            let (a, b) = (m.kinds[0], m.kinds[2]);
            if is_crossing(a) && b == a.mirrored() {
                let r = replace(d, &m.sites, &[], &m.outer, &plain, &[VERTEX]);
                out.push(MoveKind::R5alt, Direction::Reduce, site_anchor(&m, 0), r);
            }
        }
    }
    if out.filter.wants(MoveKind::R5alt, Direction::Expand) {
        for m in matches(d, &bare_vertex()) {
            for (variant, k) in [PLUS, MINUS].into_iter().enumerate() {
                let r = replace(d, &m.sites, &[], &m.outer, &twist, &[k, VERTEX, k.mirrored()]);
                out.push(MoveKind::R5alt, Direction::Expand, site_anchor(&m, variant as u32), r);
            }
        }
    }
}

pub(crate) fn enumerate(d: &Pseudodiagram, filter: &Filter) -> Vec<(MoveInstance, Pseudodiagram)> {
    let mut out = Out { filter, seen: HashSet::new(), list: Vec::new() };
    curls(d, &mut out);
    bigons(d, &mut out);
    triangles(d, &mut out);
    vertex_slides(d, &mut out);
    vertex_twists(d, &mut out);
    out.list
}
