//! Bounded breadth-first search for standard forms.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::Serialize;

use super::recognize::recognize_pretzel;
use super::rules::{enumerate, Filter};
use super::MoveInstance;
use crate::diagram::{BouquetType, Pseudodiagram};
use crate::error::{Error, Result};
use crate::pretzel::{resolution_status, PretzelCode, PretzelState};
use crate::verdict::Verdict;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    /// Diagrams visited per search phase.
    pub max_nodes: usize,
    /// How far expanding moves may raise the number of double points.
    pub extra_crossings: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_nodes: 20_000, extra_crossings: 2 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Certificate {
    /// The witness ends at the standard diagram of this type.
    StandardForm { bouquet_type: BouquetType },
    /// The witness ends at a diagram readable as this knotted pretzel state.
    KnottedPretzel { state: String },
}

#[derive(Debug, Clone, Serialize)]
pub struct Simplification {
    pub verdict: Verdict,
    pub witness: Vec<MoveInstance>,
    pub certificate: Option<Certificate>,
    /// Diagrams visited over both phases.
    pub nodes: usize,
    /// Whether a phase stopped at the node budget.
    pub exhausted: bool,
}

pub(crate) struct StandardForms {
    k: String,
    l: [String; 2],
}

impl StandardForms {
    pub fn new() -> Self {
        let code = |s: &PretzelState| s.diagram().canonical_code().expect("standard forms are valid");
        let zero = PretzelCode::new(vec![0]).expect("(0) is valid").diagram();
        StandardForms {
            k: zero.canonical_code().expect("standard forms are valid"),
            l: [
                code(&PretzelState::parse("(+)").expect("literal")),
                code(&PretzelState::parse("(-)").expect("literal")),
            ],
        }
    }

    pub fn classify(&self, code: &str) -> Option<BouquetType> {
        if code == self.k {
            Some(BouquetType::K)
        } else if self.l.iter().any(|c| c == code) {
            Some(BouquetType::L)
        } else {
            None
        }
    }
}

enum Found {
    Trivial(BouquetType),
    Knotted(PretzelState),
}

fn inspect(forms: &StandardForms, d: &Pseudodiagram, code: &str) -> Option<Found> {
    if let Some(t) = forms.classify(code) {
        return Some(Found::Trivial(t));
    }
    recognize_pretzel(d).into_iter().find_map(|r| match resolution_status(&r.state) {
        Ok(Verdict::Knotted) => Some(Found::Knotted(r.state)),
        _ => None,
    })
}

struct Phase {
    found: Option<(Found, Vec<MoveInstance>)>,
    nodes: usize,
    exhausted: bool,
}

fn bfs(forms: &StandardForms, start: &Pseudodiagram, filter: &Filter, cap: usize, max_nodes: usize) -> Result<Phase> {
    let start_code = start.canonical_code()?;
    let mut parent: HashMap<String, Option<(String, MoveInstance)>> = HashMap::new();
    parent.insert(start_code.clone(), None);
    let mut queue = VecDeque::from([(start.clone(), start_code)]);
    let path = |parent: &HashMap<String, Option<(String, MoveInstance)>>, mut code: String| {
        let mut moves = Vec::new();
        while let Some(Some((p, m))) = parent.get(&code) {
            moves.push(m.clone());
            code = p.clone();
        }
        moves.reverse();
        moves
    };
    let mut nodes = 0;
    while let Some((d, code)) = queue.pop_front() {
        nodes += 1;
        if let Some(f) = inspect(forms, &d, &code) {
            return Ok(Phase { found: Some((f, path(&parent, code))), nodes, exhausted: false });
        }
        if nodes >= max_nodes {
            return Ok(Phase { found: None, nodes, exhausted: true });
        }
        for (m, next) in enumerate(&d, filter) {
            if next.double_point_count() > cap {
                continue;
            }
            let Ok(c) = next.canonical_code() else { continue };
            if parent.contains_key(&c) {
                continue;
            }
            parent.insert(c.clone(), Some((code.clone(), m)));
            queue.push_back((next, c));
        }
    }
    Ok(Phase { found: None, nodes, exhausted: false })
}

/// Decide whether a fully resolved diagram is trivial.
///
/// The search first uses only moves that do not add double points, then
/// allows expansions up to `extra_crossings` above the starting count.
/// `Knotted` is returned only when a reached diagram is a pretzel state with
/// a knotted stack structure; otherwise an unfinished search gives `Unknown`.
pub fn simplify(d: &Pseudodiagram, budget: SearchBudget) -> Result<Simplification> {
    d.validate().into_result()?;
    if d.precrossing_count() > 0 {
        return Err(Error::InvalidArgument("simplify needs a diagram without precrossings".into()));
    }
    let forms = StandardForms::new();
    let mut total = 0;
    let mut exhausted = false;
    let start = d.double_point_count();
    for (filter, cap) in [(Filter::non_increasing(), start), (Filter::all(), start + budget.extra_crossings)] {
        let phase = bfs(&forms, d, &filter, cap, budget.max_nodes)?;
        total += phase.nodes;
        exhausted |= phase.exhausted;
        if let Some((found, witness)) = phase.found {
            let (verdict, certificate) = match found {
                Found::Trivial(t) => (Verdict::trivial(t), Certificate::StandardForm { bouquet_type: t }),
                Found::Knotted(s) => (Verdict::Knotted, Certificate::KnottedPretzel { state: s.to_string() }),
            };
            return Ok(Simplification { verdict, witness, certificate: Some(certificate), nodes: total, exhausted });
        }
    }
    Ok(Simplification { verdict: Verdict::Unknown, witness: Vec::new(), certificate: None, nodes: total, exhausted })
}

/// A diagram one move away from the input (or the input itself).
#[derive(Debug, Clone)]
pub struct Sample {
    pub via: Option<MoveInstance>,
    pub diagram: Pseudodiagram,
}

/// The input and its neighbours under single moves, keeping at most two
/// double points more than the input.
pub fn pr_equivalent_samples(d: &Pseudodiagram) -> Vec<Sample> {
    let cap = d.double_point_count() + 2;
    let mut out = vec![Sample { via: None, diagram: d.clone() }];
    for (m, next) in enumerate(d, &Filter::all()) {
        if next.double_point_count() <= cap {
            out.push(Sample { via: Some(m), diagram: next });
        }
    }
    out
}

/// Outcome of [`search_reductions`].
pub(crate) struct Reductions<T> {
    pub found: Option<T>,
    /// Smallest canonical code among visited diagrams with the fewest double points.
    pub minimal: String,
    pub exhausted: bool,
}

/// Breadth-first search over moves that do not add double points, stopping
/// at the first diagram for which `hit` returns a value.
pub(crate) fn search_reductions<T>(
    start: &Pseudodiagram,
    max_nodes: usize,
    mut hit: impl FnMut(&Pseudodiagram, &str) -> Result<Option<T>>,
) -> Result<Reductions<T>> {
    let filter = Filter::non_increasing();
    let cap = start.double_point_count();
    let start_code = start.canonical_code()?;
    let mut seen = HashSet::from([start_code.clone()]);
    let mut queue = VecDeque::from([(start.clone(), start_code)]);
    let mut minimal: Option<(usize, String)> = None;
    let mut nodes = 0;
    while let Some((d, code)) = queue.pop_front() {
        nodes += 1;
        if let Some(t) = hit(&d, &code)? {
            return Ok(Reductions { found: Some(t), minimal: code, exhausted: false });
        }
        let here = (d.double_point_count(), code);
        if minimal.as_ref().is_none_or(|m| here < *m) {
            minimal = Some(here);
        }
        if nodes >= max_nodes {
            break;
        }
        for (_, next) in enumerate(&d, &filter) {
            if next.double_point_count() > cap {
                continue;
            }
            let Ok(c) = next.canonical_code() else { continue };
            if seen.insert(c.clone()) {
                queue.push_back((next, c));
            }
        }
    }
    let exhausted = !queue.is_empty();
    Ok(Reductions { found: None, minimal: minimal.map(|m| m.1).unwrap_or_default(), exhausted })
}
