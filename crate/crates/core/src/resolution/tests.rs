use super::*;
use crate::diagram::BouquetType;
use crate::moves::MoveKind;
use crate::pretzel::{PretzelCode, PretzelState};

fn code(s: &str) -> Pseudodiagram {
    PretzelCode::parse(s).unwrap().diagram()
}

fn state(s: &str) -> Pseudodiagram {
    PretzelState::parse(s).unwrap().diagram()
}

fn wrs(d: &Pseudodiagram) -> WeightedResolutionSet {
    weighted_resolution_set(d, WrsBudget::default()).unwrap()
}

fn rendered(w: &WeightedResolutionSet) -> Vec<(String, String)> {
    w.classes().map(|(k, _, wt)| (k.to_string(), wt.to_string())).collect()
}

#[test]
fn dyadic_weights_reduce() {
    assert_eq!(DyadicWeight::new(2, 1), DyadicWeight::one());
    assert_eq!(DyadicWeight::new(6, 4).to_string(), "3/2^3");
    assert_eq!(DyadicWeight::new(0, 5), DyadicWeight::zero());
    assert_eq!("3/2^3".parse::<DyadicWeight>().unwrap(), DyadicWeight::new(3, 3));
    assert!("3/8".parse::<DyadicWeight>().is_err());
    let sum = DyadicWeight::new(1, 2).checked_add(DyadicWeight::new(3, 3)).unwrap();
    assert_eq!(sum, DyadicWeight::new(5, 3));
}

fn key(nets: &[i32]) -> String {
    ClassKey::from_nets(BouquetType::K, nets).to_string()
}

#[test]
fn keys_follow_tangle_arithmetic() {
    assert_eq!(key(&[0]), "K:trivial");
    assert_eq!(key(&[1, -1]), "K:trivial");
    assert_eq!(key(&[2]), "K:rational(-2/1)");
    assert_eq!(key(&[1, 1]), key(&[-2]));
    assert_eq!(key(&[2, -1]), key(&[-2]));
    assert_eq!(key(&[3, -1]), key(&[1, 2]));
    assert_eq!(key(&[-3, 1]), key(&[-1, -2]));
    assert_eq!(key(&[3]), key(&[-1, -1, -1]));
    assert_ne!(key(&[2]), key(&[-2]));
    assert_ne!(key(&[1, 3]), key(&[3]));
    assert_eq!(key(&[3, 2]), key(&[2, 3]));
    assert_eq!(key(&[2, 3]), "K:sum(1/2,1/3;0)");
    assert_eq!(key(&[2, 1, 3]), key(&[1, 2, 3]));
    assert_eq!(key(&[-3, 3]), key(&[3, -3]));
    assert_ne!(key(&[2, 3]), key(&[-2, -3]));
    assert_eq!(key(&[0, 3]), "K:split(;1/3)");
    assert_eq!(key(&[3, 1, 0]), key(&[0, 3]));
}

#[test]
fn mirror_keys_negate() {
    for nets in [vec![2, 1, 1], vec![3], vec![2, 3, -1], vec![0, -3], vec![1, 1]] {
        let k = ClassKey::from_nets(BouquetType::K, &nets);
        let neg: Vec<i32> = nets.iter().map(|e| -e).collect();
        assert_eq!(k.mirror().unwrap(), ClassKey::from_nets(BouquetType::K, &neg), "{nets:?}");
        assert_eq!(k.mirror().unwrap().mirror().unwrap(), k);
    }
    assert_eq!(ClassKey::Trivial(BouquetType::L).mirror(), Some(ClassKey::Trivial(BouquetType::L)));
}

#[test]
fn worked_sets() {
    assert_eq!(rendered(&wrs(&code("(1)"))), [("L:trivial".to_string(), "1/2^0".to_string())]);
    assert_eq!(rendered(&wrs(&code("(0)"))), [("K:trivial".to_string(), "1/2^0".to_string())]);

    let w = wrs(&state("(+???)"));
    assert_eq!(w.precrossings(), 3);
    let got: Vec<(String, u64)> = w.classes().map(|(k, c, _)| (k.to_string(), c)).collect();
    let want = [(key(&[-2]), 1), (key(&[2]), 3), (key(&[4]), 1), ("K:trivial".to_string(), 3)];
    let mut want = want.to_vec();
    want.sort();
    assert_eq!(got, want);
    let plus2 = ClassKey::from_nets(BouquetType::K, &[2]);
    assert_eq!(plus2.mirror().unwrap(), ClassKey::from_nets(BouquetType::K, &[-2]));
    assert_eq!(w.weight(&plus2), DyadicWeight::new(3, 3));
}

#[test]
fn comparisons() {
    let two = wrs(&code("(2)"));
    let three = wrs(&code("(3)"));
    assert_eq!(wrs_equal(&two, &two), Comparison::Equal);
    assert_eq!(wrs_equal(&two, &three), Comparison::Unequal);
    let unknown = WeightedResolutionSet {
        p: 0,
        counts: BTreeMap::from([(ClassKey::Unknown { bouquet_type: BouquetType::K, code: "x".into() }, 1)]),
    };
    assert_eq!(wrs_equal(&two, &unknown), Comparison::Indeterminate);
}

#[test]
fn kink_expansion_keeps_the_set() {
    let d = code("(1)");
    let base = wrs(&d);
    let mut n = 0;
    for s in pr_equivalent_samples(&d).into_iter().filter(|s| s.via.as_ref().is_some_and(|m| m.kind == MoveKind::PR1)) {
        assert_eq!(wrs_equal(&base, &wrs(&s.diagram)), Comparison::Equal);
        n += 1;
    }
    assert!(n > 0);
}

#[test]
fn weights_sum_to_one_and_trivial_weight_matches_status() {
    for c in ["(2)", "(3)", "(1,3)", "(2,3)", "(1,1,1)", "(1,1,2)", "(3,3)"] {
        let d = code(c);
        let w = wrs(&d);
        assert_eq!(w.total_weight(), DyadicWeight::one(), "{c}");
        let projection = PretzelCode::parse(c).unwrap().projection();
        let trivial =
            projection.completions().filter(|s| crate::pretzel::resolution_status(s).unwrap().is_trivial()).count()
                as u64;
        assert_eq!(w.trivial_weight(), DyadicWeight::new(trivial, w.precrossings()), "{c}");
    }
}

#[test]
fn mirror_diagram_mirrors_keys() {
    for s in ["(+??)", "(?,-?,+??)", "(??,???)"] {
        let d = state(s);
        assert_eq!(wrs(&d.mirror()), wrs(&d).mirrored().unwrap(), "{s}");
    }
}

#[test]
fn pr_invariance_on_small_pretzels() {
    for c in ["(1)", "(2)", "(3)", "(1,1)", "(2,3)", "(1,1,1)"] {
        let report = check_pr_invariance(&code(c), WrsBudget::default()).unwrap();
        let bad: Vec<_> = report.violations().collect();
        assert!(bad.is_empty(), "{c}: {bad:?}");
        assert_eq!(report.count(NeighborOutcome::Indeterminate), 0, "{c}");
        assert!(report.count(NeighborOutcome::Invariant) > 0, "{c}");
    }
}

#[test]
fn resolved_neighbours_are_not_applicable() {
    let report = check_pr_invariance(&state("(+++)"), WrsBudget::default()).unwrap();
    for n in &report.neighbors {
        let pseudo = n.via.starts_with("PR");
        assert_eq!(n.outcome == NeighborOutcome::NotApplicable, !pseudo, "{n:?}");
    }
    assert!(report.count(NeighborOutcome::NotApplicable) > 0);
}

#[test]
fn budget_is_enforced() {
    let budget = WrsBudget { max_precrossings: 2, ..WrsBudget::default() };
    let err = weighted_resolution_set(&code("(3)"), budget).unwrap_err();
    assert!(err.is_budget());
}

#[test]
fn report_serializes() {
    let w = wrs(&code("(2)"));
    let json = serde_json::to_value(w.report(|_| None)).unwrap();
    assert_eq!(json["p"], 2);
    assert_eq!(json["classes"][0]["key"], "K:rational(-2/1)");
    assert_eq!(json["classes"][0]["weight"], "1/2^2");
    assert!(json["classes"][0].get("name").is_none());
}
