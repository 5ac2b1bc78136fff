//! Pretzel projections `(x1, ..., xk)` and their pseudodiagram states.
//!
//! A pretzel projection is a rigid vertex followed by `k` vertical stacks of
//! `x_i` precrossings. Resolving some or all of them gives a
//! [`PretzelState`], written `(s1, ..., sk)` with each `s_i` a string over
//! `+`, `-` and `?` (top to bottom).

mod construct;
mod formula;
mod oracle;
mod parse;
mod status;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagram::{self, BouquetType, Pseudodiagram, Sign, SiteKind};
use crate::error::{Error, Result};

pub use construct::{construct_pair, construct_with_kn, construct_with_tr, PairCase, PairConstruction};
pub use formula::{kn_equals_p, kn_formula, tr_equals_p, tr_formula, tr_p_characterization, TrEqualsP};
pub(crate) use oracle::search_table;
pub use oracle::{kn_oracle, tr_oracle, OracleReport, DEFAULT_ORACLE_BUDGET};
pub use status::{reduce, resolution_status, status_of_nets, ReducedPretzel, TpqForm};

/// Why a candidate code is or is not a pretzel projection of a 2-bouquet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Validity {
    pub valid: bool,
    pub reason: Option<String>,
}

pub fn is_valid(entries: &[u32]) -> Validity {
    let bad = |r: String| Validity { valid: false, reason: Some(r) };
    if entries.is_empty() {
        return bad("a pretzel code needs at least one stack".into());
    }
    if entries == [0] {
        return Validity { valid: true, reason: None };
    }
    if let Some(i) = entries.iter().position(|&x| x == 0) {
        return bad(format!("stack {} is empty; only the code (0) may contain 0", i + 1));
    }
    let even: Vec<usize> = entries.iter().enumerate().filter(|(_, &x)| x % 2 == 0).map(|(i, _)| i + 1).collect();
    if even.len() > 1 {
        return bad(format!(
            "stacks {even:?} are all even; at most one stack may be even, otherwise the diagram has \
             an extra closed component"
        ));
    }
    Validity { valid: true, reason: None }
}

/// A valid pretzel projection.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct PretzelCode {
    entries: Vec<u32>,
}

impl PretzelCode {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        match is_valid(&entries) {
            Validity { valid: true, .. } => Ok(PretzelCode { entries }),
            Validity { reason, .. } => {
                Err(Error::InvalidCode { code: fmt_entries(&entries), reason: reason.unwrap_or_default() })
            }
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        PretzelCode::new(parse::parse_code(text)?)
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn stack_count(&self) -> usize {
        self.entries.len()
    }

    /// Number of precrossings of the projection.
    pub fn precrossings(&self) -> u32 {
        self.entries.iter().sum()
    }

    /// Every valid code with `total` precrossings, each ordering of the
    /// entries listed separately.
    pub fn all_with_precrossings(total: u32) -> Vec<PretzelCode> {
        fn rec(rest: u32, cur: &mut Vec<u32>, out: &mut Vec<PretzelCode>) {
            if rest == 0 {
                if let Ok(c) = PretzelCode::new(cur.clone()) {
                    out.push(c);
                }
                return;
            }
            for x in 1..=rest {
                cur.push(x);
                rec(rest - x, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if total == 0 {
            out.push(PretzelCode { entries: vec![0] });
        } else {
            rec(total, &mut Vec::new(), &mut out);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries == [0]
    }

    /// Entries equal to 1 first, then the rest ascending.
    pub fn canonical_order(&self) -> PretzelCode {
        let mut ones: Vec<u32> = self.entries.iter().copied().filter(|&x| x == 1).collect();
        let mut rest: Vec<u32> = self.entries.iter().copied().filter(|&x| x != 1).collect();
        rest.sort_unstable();
        ones.extend(rest);
        PretzelCode { entries: ones }
    }

    /// Number of entries equal to 1, and the entries of at least 2.
    pub(crate) fn split(&self) -> (u32, Vec<u32>) {
        let m = self.entries.iter().filter(|&&x| x == 1).count() as u32;
        let ys = self.entries.iter().copied().filter(|&x| x >= 2).collect();
        (m, ys)
    }

    pub fn classify_type(&self) -> BouquetType {
        let all_odd = self.entries.iter().all(|x| x % 2 == 1);
        if all_odd && self.entries.len() % 2 == 1 {
            BouquetType::L
        } else {
            BouquetType::K
        }
    }

    pub fn projection(&self) -> PretzelState {
        PretzelState { stacks: self.entries.iter().map(|&x| vec![StackEntry::Unresolved; x as usize]).collect() }
    }

    pub fn diagram(&self) -> Pseudodiagram {
        diagram::from_pretzel_code(self).expect("valid codes build valid diagrams")
    }
}

impl TryFrom<Vec<u32>> for PretzelCode {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        PretzelCode::new(v)
    }
}

impl From<PretzelCode> for Vec<u32> {
    fn from(c: PretzelCode) -> Self {
        c.entries
    }
}

fn fmt_entries(entries: &[u32]) -> String {
    let parts: Vec<String> = entries.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

impl fmt::Display for PretzelCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_entries(&self.entries))
    }
}

impl std::str::FromStr for PretzelCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PretzelCode::parse(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StackEntry {
    Plus,
    Minus,
    Unresolved,
}

impl StackEntry {
    pub fn from_sign(s: Sign) -> Self {
        match s {
            Sign::Plus => StackEntry::Plus,
            Sign::Minus => StackEntry::Minus,
        }
    }

    pub fn sign(self) -> Option<Sign> {
        match self {
            StackEntry::Plus => Some(Sign::Plus),
            StackEntry::Minus => Some(Sign::Minus),
            StackEntry::Unresolved => None,
        }
    }

    fn as_char(self) -> char {
        match self {
            StackEntry::Plus => '+',
            StackEntry::Minus => '-',
            StackEntry::Unresolved => '?',
        }
    }

    fn site_kind(self) -> SiteKind {
        match self {
            StackEntry::Plus => SiteKind::CrossingPlus,
            StackEntry::Minus => SiteKind::CrossingMinus,
            StackEntry::Unresolved => SiteKind::Precrossing,
        }
    }
}

/// A pretzel pseudodiagram: every stack position is `+`, `-` or unresolved.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PretzelState {
    stacks: Vec<Vec<StackEntry>>,
}

impl PretzelState {
    pub fn new(stacks: Vec<Vec<StackEntry>>) -> Result<Self> {
        let lens: Vec<u32> = stacks.iter().map(|s| s.len() as u32).collect();
        PretzelCode::new(lens)?;
        Ok(PretzelState { stacks })
    }

    pub fn parse(text: &str) -> Result<Self> {
        PretzelState::new(parse::parse_state(text)?)
    }

    /// Fully resolved state with the given signs, stack by stack.
    pub fn from_signs(stacks: Vec<Vec<Sign>>) -> Result<Self> {
        PretzelState::new(stacks.into_iter().map(|s| s.into_iter().map(StackEntry::from_sign).collect()).collect())
    }

    pub fn stacks(&self) -> &[Vec<StackEntry>] {
        &self.stacks
    }

    pub fn code(&self) -> PretzelCode {
        PretzelCode { entries: self.stacks.iter().map(|s| s.len() as u32).collect() }
    }

    pub fn is_resolved(&self) -> bool {
        self.stacks.iter().flatten().all(|e| *e != StackEntry::Unresolved)
    }

    pub fn unresolved_count(&self) -> usize {
        self.stacks.iter().flatten().filter(|e| **e == StackEntry::Unresolved).count()
    }

    /// Every crossing sign flipped; precrossings unchanged.
    pub fn mirror(&self) -> PretzelState {
        let flip = |e: &StackEntry| match e {
            StackEntry::Plus => StackEntry::Minus,
            StackEntry::Minus => StackEntry::Plus,
            StackEntry::Unresolved => StackEntry::Unresolved,
        };
        PretzelState { stacks: self.stacks.iter().map(|s| s.iter().map(flip).collect()).collect() }
    }

    pub fn site_kinds(&self) -> Vec<Vec<SiteKind>> {
        self.stacks.iter().map(|s| s.iter().map(|e| e.site_kind()).collect()).collect()
    }

    pub fn diagram(&self) -> Pseudodiagram {
        diagram::from_pretzel_state(self).expect("valid states build valid diagrams")
    }

    /// All completions of the unresolved positions, in binary counter order
    /// (positions in stack order, top to bottom, clear bit = `+`).
    pub fn completions(&self) -> impl Iterator<Item = PretzelState> + '_ {
        let free: Vec<(usize, usize)> = self
            .stacks
            .iter()
            .enumerate()
            .flat_map(|(i, s)| {
                s.iter().enumerate().filter(|(_, e)| **e == StackEntry::Unresolved).map(move |(r, _)| (i, r))
            })
            .collect();
        let total = 1u64 << free.len();
        (0..total).map(move |mask| {
            let mut st = self.clone();
            for (bit, &(i, r)) in free.iter().enumerate() {
                st.stacks[i][r] = if mask >> bit & 1 == 0 { StackEntry::Plus } else { StackEntry::Minus };
            }
            st
        })
    }
}

impl fmt::Display for PretzelState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, s) in self.stacks.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            for e in s {
                write!(f, "{}", e.as_char())?;
            }
        }
        f.write_str(")")
    }
}

impl std::str::FromStr for PretzelState {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PretzelState::parse(s)
    }
}

#[cfg(test)]
mod tests;
