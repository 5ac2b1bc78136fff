use proptest::prelude::*;

use super::*;
use crate::extnat::ExtNat;
use crate::verdict::Verdict;

fn code(s: &str) -> PretzelCode {
    PretzelCode::parse(s).unwrap()
}

#[test]
fn validity() {
    assert!(!is_valid(&[2, 4]).valid);
    assert!(is_valid(&[2, 3, 5]).valid);
    assert!(is_valid(&[1, 1, 1]).valid);
    assert!(is_valid(&[0]).valid);
    assert!(!is_valid(&[0, 1]).valid);
    assert!(!is_valid(&[]).valid);
    assert!(is_valid(&[2, 4]).reason.unwrap().contains("closed component"));
}

#[test]
fn types() {
    assert_eq!(code("(4)").classify_type(), BouquetType::K);
    assert_eq!(code("(5)").classify_type(), BouquetType::L);
    assert_eq!(code("(1,1,3)").classify_type(), BouquetType::L);
    assert_eq!(code("(0)").classify_type(), BouquetType::K);
}

#[test]
fn canonical_order() {
    assert_eq!(code("(3,1,2)").canonical_order().to_string(), "(1,2,3)");
    assert_eq!(code("(1,1)").canonical_order().to_string(), "(1,1)");
}

#[test]
fn state_round_trip() {
    let s = PretzelState::parse("(+?-, ?)").unwrap();
    assert_eq!(s.to_string(), "(+?-,?)");
    assert_eq!(s.code().to_string(), "(3,1)");
    assert_eq!(s.unresolved_count(), 2);
    assert_eq!(s.completions().count(), 4);
    assert_eq!(s.completions().next().unwrap().to_string(), "(++-,+)");
    assert_eq!(s.mirror().to_string(), "(-?+,?)");
    assert!(PretzelState::parse("(++,--)").is_err());
}

#[test]
fn worked_statuses() {
    let st = |s: &str| resolution_status(&PretzelState::parse(s).unwrap()).unwrap();
    assert_eq!(st("(++--)"), Verdict::TrivialK);
    assert_eq!(st("(++++)"), Verdict::Knotted);
    assert_eq!(st("(+-+)"), Verdict::TrivialL);
    assert!(resolution_status(&PretzelState::parse("(+?)").unwrap()).is_err());
}

#[test]
fn serde_code() {
    let c = code("(1,2,3)");
    assert_eq!(serde_json::to_string(&c).unwrap(), "[1,2,3]");
    let back: PretzelCode = serde_json::from_str("[1,2,3]").unwrap();
    assert_eq!(back, c);
    assert!(serde_json::from_str::<PretzelCode>("[2,2]").is_err());
}

#[test]
fn formulas_match_oracles_up_to_six() {
    for p in 0..=6 {
        for c in PretzelCode::all_with_precrossings(p) {
            assert_eq!(ExtNat::Finite(tr_formula(&c)), tr_oracle(&c, 12).unwrap().value, "tr {c}");
            assert_eq!(kn_formula(&c), kn_oracle(&c, 12).unwrap().value, "kn {c}");
        }
    }
}

fn arb_code() -> impl Strategy<Value = PretzelCode> {
    (prop::collection::vec(0u32..4, 1..5), any::<prop::sample::Index>(), any::<bool>()).prop_map(
        |(halves, idx, even)| {
            let mut v: Vec<u32> = halves.iter().map(|h| 2 * h + 1).collect();
            if even {
                let i = idx.index(v.len());
                v[i] += 1;
            }
            PretzelCode::new(v).unwrap()
        },
    )
}

fn arb_state() -> impl Strategy<Value = PretzelState> {
    arb_code().prop_flat_map(|c| {
        let lens: Vec<usize> = c.entries().iter().map(|&x| x as usize).collect();
        lens.into_iter().map(|n| prop::collection::vec(prop::bool::ANY, n)).collect::<Vec<_>>().prop_map(|stacks| {
            PretzelState::from_signs(
                stacks
                    .into_iter()
                    .map(|s| s.into_iter().map(|b| if b { Sign::Plus } else { Sign::Minus }).collect())
                    .collect(),
            )
            .unwrap()
        })
    })
}

proptest! {
    #[test]
    fn tr_is_even(c in arb_code()) {
        prop_assert_eq!(tr_formula(&c) % 2, 0);
    }

    #[test]
    fn kn_at_least_two(c in arb_code()) {
        prop_assert!(kn_formula(&c) >= ExtNat::Finite(2));
    }

    #[test]
    fn trivial_letter_matches_type(s in arb_state()) {
        let v = resolution_status(&s).unwrap();
        if let Some(t) = v.trivial_type() {
            prop_assert_eq!(t, s.code().classify_type());
        }
    }

    #[test]
    fn mirror_preserves_status(s in arb_state()) {
        prop_assert_eq!(resolution_status(&s).unwrap(), resolution_status(&s.mirror()).unwrap());
    }

    #[test]
    fn nets_have_code_parity(s in arb_state()) {
        let r = reduce(&s).unwrap();
        for (e, x) in r.nets.iter().zip(s.code().entries()) {
            prop_assert_eq!(e.rem_euclid(2) as u32, x % 2);
        }
    }

    #[test]
    fn diagram_type_matches_code(c in arb_code()) {
        let d = c.diagram();
        prop_assert!(d.validate().is_valid());
        prop_assert_eq!(d.bouquet_type().unwrap(), c.classify_type());
        prop_assert_eq!(d.precrossing_count() as u32, c.precrossings());
    }
}
