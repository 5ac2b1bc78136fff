use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use super::build::pretzel_map_unchecked;
use super::*;
use crate::pretzel::{PretzelCode, PretzelState};

fn code(s: &str) -> Pseudodiagram {
    PretzelCode::parse(s).unwrap().diagram()
}

fn loops(a: (u8, u8), b: (u8, u8)) -> std::result::Result<Pseudodiagram, ValidationReport> {
    Pseudodiagram::from_parts(
        [(0, SiteKind::RigidVertex)],
        [(SlotRef::new(0, a.0), SlotRef::new(0, a.1)), (SlotRef::new(0, b.0), SlotRef::new(0, b.1))],
    )
}

#[test]
fn trivial_k_is_valid() {
    let d = loops((0, 1), (2, 3)).unwrap();
    assert!(d.validate().is_valid());
    assert_eq!(d.bouquet_type().unwrap(), BouquetType::K);
    let [a, b] = d.petals().unwrap();
    let ends = |p: &Petal| {
        let mut v = [p.start().slot, p.end().slot];
        v.sort();
        v
    };
    assert_eq!(ends(&a), [0, 1]);
    assert_eq!(ends(&b), [2, 3]);
}

#[test]
fn opposite_loops_fail_euler() {
    let d = loops((0, 2), (1, 3)).unwrap();
    let r = d.validate();
    assert!(r.violations.contains(&Violation::NotPlanar { vertices: 1, edges: 2, faces: 1 }), "{r}");
}

#[test]
fn two_even_stacks_leave_a_closed_component() {
    let stacks = vec![vec![SiteKind::Precrossing; 2], vec![SiteKind::Precrossing; 4]];
    let (d, _) = pretzel_map_unchecked(&stacks);
    let r = d.validate();
    assert!(r.violations.iter().any(|v| matches!(v, Violation::ExtraComponent { .. })), "{r}");
    assert!(d.validate_map().is_valid());
}

#[test]
fn malformed_parts_are_reported() {
    let r = Pseudodiagram::from_parts(
        [(0, SiteKind::RigidVertex), (0, SiteKind::Precrossing)],
        [(SlotRef::new(0, 5), SlotRef::new(0, 1)), (SlotRef::new(0, 1), SlotRef::new(9, 0))],
    )
    .unwrap_err();
    assert!(r.violations.contains(&Violation::DuplicateSite(0)));
    assert!(r.violations.contains(&Violation::SlotOutOfRange { site: 0, slot: 5 }));
    assert!(r.violations.contains(&Violation::UnknownSite(SlotRef::new(9, 0))));
    let unpaired = loops((0, 1), (2, 2));
    assert!(unpaired.is_err());
}

#[test]
fn petal_slots_follow_type() {
    let [a, b] = code("(1)").petals().unwrap();
    for p in [&a, &b] {
        assert_eq!((p.start().slot + 2) % 4, p.end().slot);
    }
    let [a, b] = code("(3)").petals().unwrap();
    assert!(a.sites().count() > 0 && b.sites().count() > 0);
    assert_eq!(code("(2)").bouquet_type().unwrap(), BouquetType::K);
    assert_eq!(code("(3)").bouquet_type().unwrap(), BouquetType::L);
    assert_eq!(code("(1,3)").bouquet_type().unwrap(), BouquetType::K);
}

#[test]
fn from_pretzel_examples() {
    let zero = code("(0)");
    assert_eq!(zero.double_point_count(), 0);
    assert_eq!(zero.bouquet_type().unwrap(), BouquetType::K);
    let one = code("(1)");
    assert_eq!(one.precrossing_count(), 1);
    assert_eq!(one.bouquet_type().unwrap(), BouquetType::L);
    let d = code("(2,3)");
    assert_eq!(d.precrossing_count(), 5);
    assert_eq!(d.bouquet_type().unwrap(), BouquetType::K);
    assert_eq!(code("(1,1,3)").precrossing_count(), 5);
}

#[test]
fn mirror_examples() {
    let p = code("(2,3)");
    assert_eq!(p.mirror(), p);
    let plus = PretzelState::parse("(++++)").unwrap().diagram();
    let minus = PretzelState::parse("(----)").unwrap().diagram();
    assert_eq!(plus.mirror(), minus);
    assert_ne!(plus.canonical_code().unwrap(), minus.canonical_code().unwrap());
}

#[test]
fn resolve_and_enumerate() {
    let one = code("(1)");
    let site = one.precrossings()[0];
    let r = one.resolve(site, Sign::Plus).unwrap();
    assert_eq!((r.precrossing_count(), r.crossing_count()), (0, 1));
    assert_eq!(r.resolve(site, Sign::Minus), Err(Error::NotAPrecrossing(site)));
    assert_eq!(one.resolve(42, Sign::Plus), Err(Error::UnknownSite(42)));

    let mut four = code("(4)");
    for s in four.precrossings() {
        four = four.resolve(s, Sign::Minus).unwrap();
    }
    assert_eq!(four.crossing_count(), 4);

    assert_eq!(r.resolutions().count(), 1);
    assert_eq!(one.resolutions().count(), 2);
    assert_eq!(code("(3)").resolutions().count(), 8);

    let first: Vec<_> = code("(3)").resolutions().take(2).collect();
    let pre = code("(3)").precrossings();
    assert_eq!(first[0].kind(pre[0]), Some(SiteKind::CrossingPlus));
    assert_eq!(first[1].kind(pre[0]), Some(SiteKind::CrossingMinus));
    assert_eq!(first[1].kind(pre[1]), Some(SiteKind::CrossingPlus));
}

#[test]
fn resolve_all_needs_every_precrossing() {
    let d = code("(1,2)");
    let pre = d.precrossings();
    let mut choice = ResolutionChoice::default();
    choice.assignment.insert(pre[0], Sign::Plus);
    assert!(d.resolve_all(&choice).is_err());
    for &p in &pre[1..] {
        choice.assignment.insert(p, Sign::Minus);
    }
    assert_eq!(d.resolve_all(&choice).unwrap().precrossing_count(), 0);
}

#[test]
fn json_round_trip() {
    let d = PretzelState::parse("(+?-,?)").unwrap().diagram();
    let back = Pseudodiagram::from_json(&d.to_json()).unwrap();
    assert_eq!(back, d);
    assert_eq!(back.canonical_code().unwrap(), d.canonical_code().unwrap());
    let err = Pseudodiagram::from_json("{\"sites\": [").unwrap_err();
    assert!(matches!(err, Error::Parse { .. }));
}

#[test]
fn canonical_code_ignores_labels() {
    let d = code("(2,3)");
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    let want = d.canonical_code().unwrap();
    for _ in 0..20 {
        let mut ids: Vec<SiteId> = (0..d.site_count() as SiteId).map(|i| i * 3 + 10).collect();
        ids.shuffle(&mut rng);
        let e = d.relabeled(|s| ids[s as usize]);
        assert_eq!(e.canonical_code().unwrap(), want);
    }
}

fn arb_state() -> impl Strategy<Value = PretzelState> {
    prop::collection::vec(1u32..4, 1..4)
        .prop_filter("valid code", |v| PretzelCode::new(v.clone()).is_ok())
        .prop_flat_map(|lens| {
            lens.into_iter()
                .map(|n| prop::collection::vec(prop::sample::select(vec!['+', '-', '?']), n as usize))
                .collect::<Vec<_>>()
        })
        .prop_map(|stacks| {
            let text: Vec<String> = stacks.into_iter().map(|s| s.into_iter().collect()).collect();
            PretzelState::parse(&format!("({})", text.join(","))).unwrap()
        })
}

proptest! {
    #[test]
    fn mirror_is_an_involution_keeping_type(s in arb_state()) {
        let d = s.diagram();
        prop_assert_eq!(d.mirror().mirror(), d.clone());
        prop_assert_eq!(d.mirror().bouquet_type().unwrap(), d.bouquet_type().unwrap());
    }

    #[test]
    fn resolutions_are_valid_and_keep_type(s in arb_state()) {
        let d = s.diagram();
        let t = d.bouquet_type().unwrap();
        let n = d.resolutions().count();
        prop_assert_eq!(n, 1usize << d.precrossing_count());
        for r in d.resolutions() {
            prop_assert!(r.validate().is_valid());
            prop_assert_eq!(r.bouquet_type().unwrap(), t);
        }
    }

    #[test]
    fn relabeling_keeps_code(s in arb_state(), seed in any::<u64>()) {
        let d = s.diagram();
        let mut ids: Vec<SiteId> = (0..d.site_count() as SiteId).collect();
        ids.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
        prop_assert_eq!(d.relabeled(|x| ids[x as usize]).canonical_code().unwrap(), d.canonical_code().unwrap());
    }

    #[test]
    fn json_round_trips(s in arb_state()) {
        let d = s.diagram();
        prop_assert_eq!(Pseudodiagram::from_json(&d.to_json()).unwrap(), d);
    }
}
