use serde::Serialize;

use super::{Catalog, CatalogEntry, Source};
use crate::diagram::{BouquetType, Pseudodiagram};
use crate::error::{Error, Result};
use crate::extnat::ExtNat;
use crate::moves::{simplify, SearchBudget};
use crate::pretzel::{kn_formula, kn_oracle, search_table, tr_formula, tr_oracle, DEFAULT_ORACLE_BUDGET};
use crate::verdict::Verdict;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyBudget {
    /// Largest precrossing count handed to the exhaustive oracles.
    pub oracle_precrossings: u32,
    /// Per-resolution search for entries given as diagram files.
    pub search: SearchBudget,
}

impl Default for VerifyBudget {
    fn default() -> Self {
        VerifyBudget { oracle_precrossings: DEFAULT_ORACLE_BUDGET, search: SearchBudget::default() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Mismatch,
    /// A budget ran out or a resolution could not be classified.
    Incomplete,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub name: String,
    pub source: String,
    pub expected_type: BouquetType,
    pub computed_type: Option<BouquetType>,
    pub expected_tr: u32,
    pub tr_formula: Option<u32>,
    pub tr_oracle: Option<ExtNat>,
    pub expected_kn: ExtNat,
    pub kn_formula: Option<ExtNat>,
    pub kn_oracle: Option<ExtNat>,
    pub mismatches: Vec<String>,
    pub status: CheckStatus,
}

/// Recompute type, tr and kn of an entry and compare with its expectations.
pub fn verify_entry(catalog: &Catalog, e: &CatalogEntry, budget: VerifyBudget) -> Result<VerifyReport> {
    let mut r = VerifyReport {
        name: e.name.clone(),
        source: e.source.to_string(),
        expected_type: e.expected_type,
        computed_type: None,
        expected_tr: e.expected_tr,
        tr_formula: None,
        tr_oracle: None,
        expected_kn: e.expected_kn,
        kn_formula: None,
        kn_oracle: None,
        mismatches: Vec::new(),
        status: CheckStatus::Pass,
    };
    let mut incomplete = false;
    match &e.source {
        Source::Pretzel(code) => {
            r.computed_type = Some(code.classify_type());
            r.tr_formula = Some(tr_formula(code));
            r.kn_formula = Some(kn_formula(code));
            match (tr_oracle(code, budget.oracle_precrossings), kn_oracle(code, budget.oracle_precrossings)) {
                (Ok(t), Ok(k)) => {
                    r.tr_oracle = Some(t.value);
                    r.kn_oracle = Some(k.value);
                }
                (Err(err), _) | (_, Err(err)) if err.is_budget() => incomplete = true,
                (Err(err), _) | (_, Err(err)) => return Err(err),
            }
        }
        Source::DiagramFile(_) => {
            let d = catalog.diagram(e)?;
            r.computed_type = Some(d.bouquet_type()?);
            match diagram_tr_kn(&d, budget) {
                Ok(Some((t, k))) => {
                    r.tr_oracle = Some(t);
                    r.kn_oracle = Some(k);
                }
                Ok(None) => incomplete = true,
                Err(err) if err.is_budget() => incomplete = true,
                Err(err) => return Err(err),
            }
        }
    }
    if r.computed_type != Some(e.expected_type) {
        r.mismatches.push(format!("type: expected {}, computed {}", e.expected_type, show(r.computed_type)));
    }
    let tr = ExtNat::Finite(e.expected_tr);
    for (what, got) in [("tr formula", r.tr_formula.map(ExtNat::Finite)), ("tr oracle", r.tr_oracle)] {
        if got.is_some_and(|g| g != tr) {
            r.mismatches.push(format!("{what}: expected {tr}, computed {}", show(got)));
        }
    }
    for (what, got) in [("kn formula", r.kn_formula), ("kn oracle", r.kn_oracle)] {
        if got.is_some_and(|g| g != e.expected_kn) {
            r.mismatches.push(format!("{what}: expected {}, computed {}", e.expected_kn, show(got)));
        }
    }
    r.status = if !r.mismatches.is_empty() {
        CheckStatus::Mismatch
    } else if incomplete {
        CheckStatus::Incomplete
    } else {
        CheckStatus::Pass
    };
    Ok(r)
}

fn show<T: std::fmt::Display>(v: Option<T>) -> String {
    v.map_or_else(|| "nothing".to_string(), |x| x.to_string())
}

/// Exhaustive tr and kn of an arbitrary projection, deciding each full
/// resolution by move search. `None` when some resolution stays undecided.
pub fn diagram_tr_kn(d: &Pseudodiagram, budget: VerifyBudget) -> Result<Option<(ExtNat, ExtNat)>> {
    let p = d.precrossing_count();
    if p > budget.oracle_precrossings as usize {
        return Err(Error::BudgetExceeded {
            what: "precrossings",
            actual: p,
            limit: budget.oracle_precrossings as usize,
        });
    }
    let mut table = Vec::with_capacity(1 << p);
    for r in d.resolutions() {
        let v = simplify(&r, budget.search)?.verdict;
        if v == Verdict::Unknown {
            return Ok(None);
        }
        table.push(v);
    }
    let value = |hit: Option<(u32, u32)>| hit.map_or(ExtNat::Infinity, |(s, _)| ExtNat::Finite(s.count_ones()));
    let tr = value(search_table(&table, p as u32, Verdict::is_trivial));
    let kn = value(search_table(&table, p as u32, |v| v == Verdict::Knotted));
    Ok(Some((tr, kn)))
}
