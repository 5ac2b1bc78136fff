use std::fmt::Write as _;

use serde::Serialize;

use super::verify::{verify_entry, CheckStatus, VerifyBudget};
use super::{Catalog, Identification};
use crate::diagram::BouquetType;
use crate::extnat::ExtNat;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TypeFilter {
    K,
    L,
    All,
}

impl TypeFilter {
    fn admits(self, t: BouquetType) -> bool {
        match self {
            TypeFilter::K => t == BouquetType::K,
            TypeFilter::L => t == BouquetType::L,
            TypeFilter::All => true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub name: String,
    pub crossings: usize,
    pub tr: Option<ExtNat>,
    pub kn: Option<ExtNat>,
    pub status: CheckStatus,
    pub identification: Identification,
    /// Set when the entry could not be checked at all.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl TableRow {
    fn marker(&self) -> String {
        match (&self.error, self.status) {
            (Some(e), _) => format!("ERROR {e}"),
            (None, CheckStatus::Pass) => "ok".into(),
            (None, CheckStatus::Mismatch) => "MISMATCH".into(),
            (None, CheckStatus::Incomplete) => "incomplete".into(),
        }
    }
}

/// Verify every entry of the requested type, ordered by crossing count
/// then name.
pub fn generate_table(c: &Catalog, filter: TypeFilter, budget: VerifyBudget) -> Vec<TableRow> {
    let mut rows: Vec<TableRow> = c
        .entries()
        .iter()
        .filter(|e| filter.admits(e.expected_type))
        .map(|e| {
            let crossings = c.diagram(e).map(|d| d.double_point_count()).unwrap_or(0);
            match verify_entry(c, e, budget) {
                Ok(r) => TableRow {
                    name: e.name.clone(),
                    crossings,
                    tr: r.tr_oracle.or(r.tr_formula.map(ExtNat::Finite)),
                    kn: r.kn_oracle.or(r.kn_formula),
                    status: r.status,
                    identification: e.status,
                    error: None,
                },
                Err(err) => TableRow {
                    name: e.name.clone(),
                    crossings,
                    tr: None,
                    kn: None,
                    status: CheckStatus::Incomplete,
                    identification: e.status,
                    error: Some(err.to_string()),
                },
            }
        })
        .collect();
    rows.sort_by(|a, b| (a.crossings, &a.name).cmp(&(b.crossings, &b.name)));
    rows
}

const HEADER: [&str; 5] = ["name", "tr", "kn", "identification", "status"];

fn cells(r: &TableRow) -> [String; 5] {
    let v = |x: Option<ExtNat>| x.map_or_else(|| "-".to_string(), |n| n.to_string());
    let ident = match r.identification {
        Identification::Confirmed => "confirmed",
        Identification::Conjectured => "conjectured",
    };
    [r.name.clone(), v(r.tr), v(r.kn), ident.to_string(), r.marker()]
}

pub fn render_csv(rows: &[TableRow]) -> String {
    let mut out = HEADER.join(",");
    out.push('\n');
    for r in rows {
        let line: Vec<String> = cells(r).into_iter().map(csv_field).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

fn csv_field(s: String) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s
    }
}

pub fn render_text(rows: &[TableRow]) -> String {
    let body: Vec<[String; 5]> = rows.iter().map(cells).collect();
    let mut widths = HEADER.map(str::len);
    for row in &body {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cols: &[String]| {
        let parts: Vec<String> = cols.iter().zip(widths).map(|(c, w)| format!("{c:<w$}")).collect();
        let _ = writeln!(out, "{}", parts.join("  ").trim_end());
    };
    line(&HEADER.map(String::from));
    for row in &body {
        line(row);
    }
    out
}
