use super::rules::{bare_vertex, bigon, double_twist, kink, strand_by_vertex, triangle, twisted_vertex};
use super::tangle::{walk_boundary, End};
use super::*;
use crate::diagram::Sign;
use crate::pretzel::{resolution_status, PretzelCode, PretzelState, TpqForm};
use crate::verdict::Verdict;

fn state(s: &str) -> Pseudodiagram {
    PretzelState::parse(s).unwrap().diagram()
}

fn code(d: &Pseudodiagram) -> String {
    d.canonical_code().unwrap()
}

fn zero() -> Pseudodiagram {
    PretzelCode::new(vec![0]).unwrap().diagram()
}

fn resolved_tpq(p: u32, q: u32, signs: &[Sign]) -> Pseudodiagram {
    let d = TpqForm { p, q }.diagram();
    let pre = d.precrossings();
    let mut r = d.clone();
    for (s, &sign) in pre.iter().zip(signs.iter().cycle()) {
        r = r.resolve(*s, sign).unwrap();
    }
    r
}

#[test]
fn template_boundaries_run_counterclockwise() {
    let all = [
        kink(),
        bigon(),
        triangle(false),
        triangle(true),
        strand_by_vertex(false),
        strand_by_vertex(true),
        twisted_vertex(false),
        twisted_vertex(true),
        double_twist(),
        bare_vertex(),
    ];
    for t in all {
        let ports: Vec<_> = t.boundary.iter().map(|e| if let End::Port(p) = e { *p } else { unreachable!() }).collect();
        let walk = walk_boundary(&t);
        let start = ports.iter().position(|p| *p == walk[0]).unwrap();
        let rotated: Vec<_> = (0..ports.len()).map(|i| ports[(start + i) % ports.len()]).collect();
        assert_eq!(walk, rotated);
    }
}

fn sample_diagrams() -> Vec<Pseudodiagram> {
    let mut v: Vec<Pseudodiagram> =
        ["(+-)", "(++)", "(+-+)", "(+,-,+)", "(+?-,?)", "(?,?,?)", "(+-,+++)", "(?+,-)", "(+,+)", "(-)"]
            .iter()
            .map(|s| state(s))
            .collect();
    v.push(zero());
    v.push(TpqForm { p: 1, q: 1 }.diagram());
    v.push(resolved_tpq(2, 1, &[Sign::Plus, Sign::Minus]));
    v
}

#[test]
fn moves_keep_diagrams_valid_and_type() {
    for d in sample_diagrams() {
        let t = d.bouquet_type().unwrap();
        for m in applicable_moves(&d) {
            let r = apply_move(&d, &m).unwrap();
            assert!(r.validate().is_valid(), "{m} on {}: {}", code(&d), r.validate());
            assert_eq!(r.bouquet_type().unwrap(), t, "{m}");
        }
    }
}

#[test]
fn every_move_can_be_undone() {
    for d in sample_diagrams() {
        let c = code(&d);
        for m in applicable_moves(&d) {
            let r = apply_move(&d, &m).unwrap();
            let back = applicable_moves(&r)
                .into_iter()
                .filter(|b| b.kind == m.kind && b.direction == m.kind.inverse(m.direction))
                .any(|b| code(&apply_move(&r, &b).unwrap()) == c);
            assert!(back, "{m} on {c} has no inverse");
        }
    }
}

#[test]
fn stale_instances_are_rejected() {
    let d = state("(+-)");
    let m = applicable_moves(&d).into_iter().find(|m| m.kind == MoveKind::R2).unwrap();
    let r = apply_move(&d, &m).unwrap();
    assert!(matches!(apply_move(&r, &m), Err(Error::StaleMove(_))));
}

#[test]
fn r2_clears_a_cancelling_pair() {
    let d = state("(+-)");
    let m =
        applicable_moves(&d).into_iter().find(|m| m.kind == MoveKind::R2 && m.direction == Direction::Reduce).unwrap();
    assert_eq!(code(&apply_move(&d, &m).unwrap()), code(&zero()));
    assert!(!applicable_moves(&state("(++)"))
        .iter()
        .any(|m| m.kind == MoveKind::R2 && m.direction == Direction::Reduce));
}

#[test]
fn r1_removes_a_curl() {
    let d = resolved_tpq(1, 0, &[Sign::Plus]);
    let m =
        applicable_moves(&d).into_iter().find(|m| m.kind == MoveKind::R1 && m.direction == Direction::Reduce).unwrap();
    assert_eq!(code(&apply_move(&d, &m).unwrap()), code(&zero()));
}

#[test]
fn standard_k_has_no_reductions() {
    assert!(applicable_moves(&zero()).iter().all(|m| m.direction == Direction::Expand || m.kind == MoveKind::R5));
}

#[test]
fn alternate_twist_is_twist_then_bigon() {
    let d = state("(+)");
    let twists: Vec<_> = applicable_moves(&d)
        .into_iter()
        .filter(|m| m.kind == MoveKind::R5alt && m.direction == Direction::Expand)
        .collect();
    assert_eq!(twists.len(), 8);
    for m in twists {
        let twisted = apply_move(&d, &m).unwrap();
        let via_rv = applicable_moves(&twisted).into_iter().filter(|x| x.kind == MoveKind::R5).any(|x| {
            let mid = apply_move(&twisted, &x).unwrap();
            applicable_moves(&mid)
                .into_iter()
                .filter(|y| y.kind == MoveKind::R2 && y.direction == Direction::Reduce)
                .any(|y| code(&apply_move(&mid, &y).unwrap()) == code(&d))
        });
        assert!(via_rv, "{m}");
    }
}

#[test]
fn pseudo_moves_need_precrossings() {
    for m in applicable_moves(&state("(+-+)")) {
        assert!(!m.kind.is_pseudo() || m.direction == Direction::Expand, "{m}");
    }
    let d = state("(+?)");
    let pr2 = applicable_moves(&d).into_iter().find(|m| m.kind == MoveKind::PR2).unwrap();
    let r = apply_move(&d, &pr2).unwrap();
    assert_eq!(code(&r), code(&state("(?+)")));
    assert_eq!(r.precrossing_count(), 1);
}

#[test]
fn simplify_worked_examples() {
    let s = simplify(&state("(+-+)"), SearchBudget::default()).unwrap();
    assert_eq!(s.verdict, Verdict::TrivialL);
    assert_eq!(s.witness.len(), 1);
    assert_eq!(s.witness[0].kind, MoveKind::R2);

    let d = resolved_tpq(2, 3, &[Sign::Plus, Sign::Minus, Sign::Minus]);
    let s = simplify(&d, SearchBudget::default()).unwrap();
    assert_eq!(s.verdict, Verdict::TrivialK);
    assert_eq!(s.witness.len(), 5);
    assert!(s.witness.iter().all(|m| m.kind == MoveKind::R1));

    assert_eq!(simplify(&state("(++)"), SearchBudget::default()).unwrap().verdict, Verdict::Knotted);
    for one in ["(+)", "(-)"] {
        assert_eq!(simplify(&state(one), SearchBudget::default()).unwrap().verdict, Verdict::TrivialL);
    }
    assert!(simplify(&state("(?)"), SearchBudget::default()).is_err());
}

#[test]
fn witnesses_replay() {
    let d = state("(+-,-,+)");
    let s = simplify(&d, SearchBudget::default()).unwrap();
    assert!(s.verdict.is_trivial());
    let mut cur = d;
    for m in &s.witness {
        cur = apply_move(&cur, m).unwrap();
    }
    assert_eq!(code(&cur), code(&zero()));
}

#[test]
fn simplify_agrees_with_stack_rule_up_to_five() {
    for p in 1..=5 {
        for c in PretzelCode::all_with_precrossings(p) {
            for s in c.projection().completions() {
                let want = resolution_status(&s).unwrap();
                let got = simplify(&s.diagram(), SearchBudget::default()).unwrap().verdict;
                assert_eq!(got, want, "{s}");
            }
        }
    }
}

#[test]
fn samples_include_input_and_curls() {
    let d = PretzelCode::parse("(1)").unwrap().diagram();
    let samples = pr_equivalent_samples(&d);
    assert!(samples[0].via.is_none());
    assert!(samples
        .iter()
        .any(|s| s.via.as_ref().is_some_and(|m| m.kind == MoveKind::PR1) && s.diagram.precrossing_count() == 2));
}

#[test]
#[ignore]
fn census() {
    let mut counts = std::collections::BTreeMap::new();
    for d in sample_diagrams() {
        for m in applicable_moves(&d) {
            *counts.entry((m.kind, m.direction)).or_insert(0) += 1;
            let r = apply_move(&d, &m).unwrap();
            for m2 in applicable_moves(&r) {
                *counts.entry((m2.kind, m2.direction)).or_insert(0) += 1;
            }
        }
    }
    println!("{counts:?}");
}

#[test]
fn neutral_moves_after_expansion_are_valid_and_reversible() {
    let mut seen = std::collections::BTreeSet::new();
    for d in sample_diagrams() {
        for m in applicable_moves(&d).into_iter().filter(|m| m.direction == Direction::Expand) {
            let r = apply_move(&d, &m).unwrap();
            let t = r.bouquet_type().unwrap();
            for x in applicable_moves(&r)
                .into_iter()
                .filter(|x| matches!(x.kind, MoveKind::R3 | MoveKind::R4 | MoveKind::PR3))
            {
                seen.insert(x.kind);
                let s = apply_move(&r, &x).unwrap();
                assert!(s.validate().is_valid(), "{x}");
                assert_eq!(s.bouquet_type().unwrap(), t);
                assert_eq!(s.precrossing_count(), r.precrossing_count());
                let back = applicable_moves(&s)
                    .into_iter()
                    .filter(|b| b.kind == x.kind)
                    .any(|b| code(&apply_move(&s, &b).unwrap()) == code(&r));
                assert!(back, "{x}");
            }
        }
    }
    assert_eq!(seen.len(), 3, "{seen:?}");
}

#[test]
fn pretzel_keys_agree_along_moves() {
    use crate::resolution::ClassKey;
    use std::collections::{HashSet, VecDeque};
    let vals = [-2, -1, 1, 2];
    let mut inputs: Vec<Vec<i32>> = vals.iter().map(|&a| vec![a]).collect();
    inputs.extend(vals.iter().flat_map(|&a| vals.iter().map(move |&b| vec![a, b])));
    inputs.push(vec![3, -1]);
    inputs.push(vec![1, 1, 1]);
    for nets in inputs {
        let text: Vec<String> =
            nets.iter().map(|&e| (if e > 0 { "+" } else { "-" }).repeat(e.unsigned_abs() as usize)).collect();
        let Ok(st) = PretzelState::parse(&format!("({})", text.join(","))) else { continue };
        let d = st.diagram();
        let t = d.bouquet_type().unwrap();
        let want = ClassKey::from_nets(t, &nets);
        let cap = d.double_point_count() + 1;
        let mut seen = HashSet::from([code(&d)]);
        let mut queue = VecDeque::from([d]);
        let mut nodes = 0;
        while let Some(x) = queue.pop_front() {
            nodes += 1;
            for r in recognize_pretzel(&x) {
                let got = ClassKey::from_nets(t, &crate::pretzel::reduce(&r.state).unwrap().nets);
                assert_eq!(got, want, "{nets:?} reached {}", r.state);
            }
            if nodes > 1500 {
                break;
            }
            for (_, n) in rules::enumerate(&x, &rules::Filter::all()) {
                if n.precrossing_count() == 0 && n.double_point_count() <= cap && seen.insert(code(&n)) {
                    queue.push_back(n);
                }
            }
        }
    }
}
