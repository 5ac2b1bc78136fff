//! Weighted resolution sets: each equivalence class of full resolutions
//! with the probability of reaching it when every precrossing is resolved
//! by a fair coin.

mod classify;
mod key;
mod weight;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::diagram::Pseudodiagram;
use crate::error::{Error, Result};
use crate::moves::pr_equivalent_samples;

pub use classify::{Classifier, DEFAULT_CLASSIFY_NODES};
pub use key::{ClassKey, Frac, PretzelForm};
pub use weight::DyadicWeight;

pub const DEFAULT_WRS_BUDGET: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WrsBudget {
    pub max_precrossings: usize,
    /// Diagrams visited when classifying a resolution that is not a pretzel.
    pub classify_nodes: usize,
}

impl Default for WrsBudget {
    fn default() -> Self {
        WrsBudget { max_precrossings: DEFAULT_WRS_BUDGET, classify_nodes: DEFAULT_CLASSIFY_NODES }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedResolutionSet {
    p: u32,
    counts: BTreeMap<ClassKey, u64>,
}

impl WeightedResolutionSet {
    /// Number of precrossings of the source diagram.
    pub fn precrossings(&self) -> u32 {
        self.p
    }

    pub fn classes(&self) -> impl Iterator<Item = (&ClassKey, u64, DyadicWeight)> + '_ {
        self.counts.iter().map(|(k, &c)| (k, c, DyadicWeight::new(c, self.p)))
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn weight(&self, key: &ClassKey) -> DyadicWeight {
        DyadicWeight::new(self.counts.get(key).copied().unwrap_or(0), self.p)
    }

    pub fn total_weight(&self) -> DyadicWeight {
        self.classes().fold(DyadicWeight::zero(), |acc, (_, _, w)| acc.checked_add(w).expect("weights fit"))
    }

    pub fn has_unknown(&self) -> bool {
        self.counts.keys().any(|k| k.is_unknown())
    }

    /// Weight of the trivial classes.
    pub fn trivial_weight(&self) -> DyadicWeight {
        let n = self.counts.iter().filter(|(k, _)| k.is_trivial()).map(|(_, c)| c).sum();
        DyadicWeight::new(n, self.p)
    }

    /// The set with every key replaced by its mirror key, when all keys have one.
    pub fn mirrored(&self) -> Option<WeightedResolutionSet> {
        let mut counts = BTreeMap::new();
        for (k, &c) in &self.counts {
            *counts.entry(k.mirror()?).or_insert(0) += c;
        }
        Some(WeightedResolutionSet { p: self.p, counts })
    }

    fn weights(&self) -> BTreeMap<&ClassKey, DyadicWeight> {
        self.classes().map(|(k, _, w)| (k, w)).collect()
    }

    pub fn report(&self, name: impl Fn(&ClassKey) -> Option<String>) -> WrsReport {
        WrsReport {
            p: self.p,
            classes: self
                .classes()
                .map(|(k, count, weight)| ClassEntry {
                    key: k.to_string(),
                    count,
                    weight,
                    name: name(k),
                    unknown: k.is_unknown(),
                })
                .collect(),
        }
    }
}

/// The serialized form of a weighted resolution set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WrsReport {
    pub p: u32,
    pub classes: Vec<ClassEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassEntry {
    pub key: String,
    pub count: u64,
    pub weight: DyadicWeight,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub unknown: bool,
}

pub fn weighted_resolution_set(d: &Pseudodiagram, budget: WrsBudget) -> Result<WeightedResolutionSet> {
    weighted_resolution_set_with(d, budget, &mut Classifier::new(budget.classify_nodes))
}

/// Like [`weighted_resolution_set`], sharing a classifier cache between calls.
pub fn weighted_resolution_set_with(
    d: &Pseudodiagram,
    budget: WrsBudget,
    classifier: &mut Classifier,
) -> Result<WeightedResolutionSet> {
    d.validate().into_result()?;
    let p = d.precrossing_count();
    if p > budget.max_precrossings {
        return Err(Error::BudgetExceeded { what: "precrossings", actual: p, limit: budget.max_precrossings });
    }
    let mut counts = BTreeMap::new();
    for r in d.resolutions() {
        *counts.entry(classifier.classify(&r)?).or_insert(0) += 1;
    }
    Ok(WeightedResolutionSet { p: p as u32, counts })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Comparison {
    Equal,
    Unequal,
    /// One of the sets has a class the search could not settle.
    Indeterminate,
}

/// Compare two sets by class weights.
pub fn wrs_equal(a: &WeightedResolutionSet, b: &WeightedResolutionSet) -> Comparison {
    if a.has_unknown() || b.has_unknown() {
        Comparison::Indeterminate
    } else if a.weights() == b.weights() {
        Comparison::Equal
    } else {
        Comparison::Unequal
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NeighborOutcome {
    Invariant,
    Violation,
    Indeterminate,
    /// Reached by a move that is not a pseudo-Reidemeister move.
    NotApplicable,
}

#[derive(Debug, Clone, Serialize)]
pub struct NeighborCheck {
    pub via: String,
    pub outcome: NeighborOutcome,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct InvarianceReport {
    pub neighbors: Vec<NeighborCheck>,
}

impl InvarianceReport {
    pub fn count(&self, outcome: NeighborOutcome) -> usize {
        self.neighbors.iter().filter(|n| n.outcome == outcome).count()
    }

    pub fn violations(&self) -> impl Iterator<Item = &NeighborCheck> + '_ {
        self.neighbors.iter().filter(|n| n.outcome == NeighborOutcome::Violation)
    }
}

/// Compare the set of `d` with that of every one-move neighbour reached by a
/// pseudo-Reidemeister move.
pub fn check_pr_invariance(d: &Pseudodiagram, budget: WrsBudget) -> Result<InvarianceReport> {
    let mut classifier = Classifier::new(budget.classify_nodes);
    let base = weighted_resolution_set_with(d, budget, &mut classifier)?;
    let mut report = InvarianceReport::default();
    for sample in pr_equivalent_samples(d) {
        let Some(via) = sample.via else { continue };
        let outcome = if !via.kind.is_pseudo() {
            NeighborOutcome::NotApplicable
        } else {
            neighbor_outcome(&base, &sample.diagram, budget, &mut classifier)?
        };
        report.neighbors.push(NeighborCheck { via: via.to_string(), outcome });
    }
    Ok(report)
}

fn neighbor_outcome(
    base: &WeightedResolutionSet,
    d: &Pseudodiagram,
    budget: WrsBudget,
    classifier: &mut Classifier,
) -> Result<NeighborOutcome> {
    let other = match weighted_resolution_set_with(d, budget, classifier) {
        Err(e) if e.is_budget() => return Ok(NeighborOutcome::Indeterminate),
        r => r?,
    };
    Ok(match wrs_equal(base, &other) {
        Comparison::Equal => NeighborOutcome::Invariant,
        Comparison::Unequal => NeighborOutcome::Violation,
        Comparison::Indeterminate => NeighborOutcome::Indeterminate,
    })
}

#[cfg(test)]
mod tests;
