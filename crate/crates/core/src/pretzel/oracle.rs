//! Exhaustive trivializing and knotting numbers of pretzel projections.
//!
//! Precrossing positions are numbered in stack order, top to bottom. A
//! resolution is a bit mask over positions with a set bit meaning `-`. The
//! verdict of every full resolution is tabulated once; a partial assignment
//! `(S, sigma)` is then checked against all masks agreeing with it on `S`.

use serde::Serialize;

use super::status::status_of_nets;
use super::PretzelCode;
use crate::diagram::Sign;
use crate::error::{Error, Result};
use crate::extnat::ExtNat;
use crate::verdict::Verdict;

/// Largest precrossing count the oracles accept by default.
pub const DEFAULT_ORACLE_BUDGET: u32 = 12;

/// Oracle value with the first witnessing partial resolution found.
///
/// Witness positions index precrossings in stack order, top to bottom.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub code: PretzelCode,
    pub value: ExtNat,
    pub witness_subset: Option<Vec<u32>>,
    pub witness_signs: Option<Vec<Sign>>,
}

fn verdict_table(code: &PretzelCode) -> Vec<Verdict> {
    let lens = code.entries();
    let p = code.precrossings();
    (0..1u32 << p)
        .map(|mask| {
            let mut pos = 0;
            let nets: Vec<i32> = lens
                .iter()
                .map(|&x| {
                    let minus = (mask >> pos & ((1u32 << x) - 1)).count_ones() as i32;
                    pos += x;
                    x as i32 - 2 * minus
                })
                .collect();
            status_of_nets(&nets)
        })
        .collect()
}

/// Iterate over the submasks of `m`, including 0 and `m`.
fn submasks(m: u32) -> impl Iterator<Item = u32> {
    let mut next = Some(m);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & m) };
        Some(cur)
    })
}

/// Spread the low bits of `counter` over the set bits of `subset`.
fn deposit(counter: u32, subset: u32) -> u32 {
    let mut out = 0;
    let mut bit = 0;
    for i in 0..32 {
        if subset >> i & 1 == 1 {
            if counter >> bit & 1 == 1 {
                out |= 1 << i;
            }
            bit += 1;
        }
    }
    out
}

/// Smallest partial assignment `(subset, fixed bits)` over `p` positions
/// such that every mask agreeing with it satisfies `want`.
pub(crate) fn search_table(table: &[Verdict], p: u32, want: impl Fn(Verdict) -> bool) -> Option<(u32, u32)> {
    let full = if p == 0 { 0 } else { (1u32 << p) - 1 };
    for size in 0..=p {
        for subset in (0..=full).filter(|s| s.count_ones() == size) {
            let free = full & !subset;
            for counter in 0..1u32 << size {
                let fixed = deposit(counter, subset);
                if submasks(free).all(|r| want(table[(fixed | r) as usize])) {
                    return Some((subset, fixed));
                }
            }
        }
    }
    None
}

fn search(code: &PretzelCode, budget: u32, want: impl Fn(Verdict) -> bool) -> Result<OracleReport> {
    let p = code.precrossings();
    if p > budget {
        return Err(Error::BudgetExceeded { what: "precrossings", actual: p as usize, limit: budget as usize });
    }
    let table = verdict_table(code);
    let Some((subset, fixed)) = search_table(&table, p, want) else {
        return Ok(OracleReport {
            code: code.clone(),
            value: ExtNat::Infinity,
            witness_subset: None,
            witness_signs: None,
        });
    };
    let positions: Vec<u32> = (0..p).filter(|i| subset >> i & 1 == 1).collect();
    let signs = positions.iter().map(|i| if fixed >> i & 1 == 1 { Sign::Minus } else { Sign::Plus }).collect();
    Ok(OracleReport {
        code: code.clone(),
        value: ExtNat::Finite(subset.count_ones()),
        witness_subset: Some(positions),
        witness_signs: Some(signs),
    })
}

/// Fewest precrossings whose resolution forces every completion to be trivial.
pub fn tr_oracle(code: &PretzelCode, budget: u32) -> Result<OracleReport> {
    search(code, budget, Verdict::is_trivial)
}

/// Fewest precrossings whose resolution forces every completion to be knotted.
pub fn kn_oracle(code: &PretzelCode, budget: u32) -> Result<OracleReport> {
    search(code, budget, |v| v == Verdict::Knotted)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> PretzelCode {
        PretzelCode::parse(s).unwrap()
    }

    fn tr(s: &str) -> ExtNat {
        tr_oracle(&c(s), DEFAULT_ORACLE_BUDGET).unwrap().value
    }

    fn kn(s: &str) -> ExtNat {
        kn_oracle(&c(s), DEFAULT_ORACLE_BUDGET).unwrap().value
    }

    #[test]
    fn small_values() {
        assert_eq!(tr("(2)"), ExtNat::Finite(2));
        assert_eq!(tr("(1)"), ExtNat::Finite(0));
        assert_eq!(tr("(0)"), ExtNat::Finite(0));
        assert_eq!(tr("(3,3)"), ExtNat::Finite(6));
        assert_eq!(kn("(2)"), ExtNat::Finite(2));
        assert_eq!(kn("(0)"), ExtNat::Infinity);
        assert_eq!(kn("(1)"), ExtNat::Infinity);
        assert_eq!(kn("(1,3)"), ExtNat::Finite(3));
    }

    #[test]
    fn witness_forces_outcome() {
        let r = kn_oracle(&c("(4)"), 12).unwrap();
        assert_eq!(r.value, ExtNat::Finite(3));
        assert_eq!(r.witness_subset.as_ref().unwrap().len(), 3);
        let signs = r.witness_signs.unwrap();
        assert!(signs.iter().all(|&s| s == signs[0]));
    }

    #[test]
    fn budget_is_enforced() {
        let err = tr_oracle(&c("(13)"), 12).unwrap_err();
        assert!(err.is_budget());
        assert!(tr_oracle(&c("(3)"), 2).unwrap_err().is_budget());
    }

    #[test]
    fn submask_enumeration() {
        let mut v: Vec<u32> = submasks(0b101).collect();
        v.sort();
        assert_eq!(v, vec![0, 1, 4, 5]);
        assert_eq!(submasks(0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(deposit(0b11, 0b1010), 0b1010);
        assert_eq!(deposit(0b10, 0b1010), 0b1000);
    }
}
