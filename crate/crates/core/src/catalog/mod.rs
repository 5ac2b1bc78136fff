//! Named 2-bouquet projections with expected trivializing and knotting
//! numbers, and table generation.

mod table;
mod verify;

use std::collections::BTreeSet;
use std::fmt;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::diagram::{BouquetType, Pseudodiagram};
use crate::error::{Error, Result};
use crate::extnat::ExtNat;
use crate::pretzel::PretzelCode;
use crate::resolution::ClassKey;

pub use table::{generate_table, render_csv, render_text, TableRow, TypeFilter};
pub use verify::{diagram_tr_kn, verify_entry, CheckStatus, VerifyBudget, VerifyReport};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    Pretzel(PretzelCode),
    /// A JSON diagram file, relative to the catalog file when not absolute.
    DiagramFile(PathBuf),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Identification {
    Confirmed,
    Conjectured,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub source: Source,
    pub expected_type: BouquetType,
    pub expected_tr: u32,
    pub expected_kn: ExtNat,
    pub status: Identification,
}

impl CatalogEntry {
    pub fn pretzel(name: &str, code: &str, t: BouquetType, tr: u32, kn: ExtNat, status: Identification) -> Self {
        CatalogEntry {
            name: name.to_string(),
            source: Source::Pretzel(PretzelCode::parse(code).expect("builtin codes are valid")),
            expected_type: t,
            expected_tr: tr,
            expected_kn: kn,
            status,
        }
    }

    /// The type letter in the name's superscript, as in `4_1^k`.
    pub fn name_type(&self) -> Option<BouquetType> {
        let sup = self.name.split_once('^')?.1.trim_start_matches('{');
        match sup.chars().next()? {
            'k' => Some(BouquetType::K),
            'l' => Some(BouquetType::L),
            _ => None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Catalog {
    pub format_version: u32,
    entries: Vec<CatalogEntry>,
    /// Directory that relative diagram files are resolved against.
    base_dir: Option<PathBuf>,
}

impl Catalog {
    pub fn new(entries: Vec<CatalogEntry>) -> Result<Catalog> {
        let mut names = BTreeSet::new();
        for e in &entries {
            if !names.insert(e.name.as_str()) {
                return Err(Error::Catalog(format!("duplicate entry name {:?}", e.name)));
            }
            if e.name_type().is_some_and(|t| t != e.expected_type) {
                return Err(Error::Catalog(format!(
                    "entry {:?} has type {} but its name says otherwise",
                    e.name, e.expected_type
                )));
            }
        }
        Ok(Catalog { format_version: FORMAT_VERSION, entries, base_dir: None })
    }

    pub fn empty() -> Catalog {
        Catalog { format_version: FORMAT_VERSION, entries: Vec::new(), base_dir: None }
    }

    pub fn builtin() -> Catalog {
        use BouquetType::{K, L};
        use ExtNat::{Finite as F, Infinity as Inf};
        use Identification::{Confirmed as Yes, Conjectured as Guess};
        let e = CatalogEntry::pretzel;
        Catalog::new(vec![
            e("0_1^k", "(0)", K, 0, Inf, Yes),
            e("1_1^l", "(1)", L, 0, Inf, Yes),
            e("2_1^k", "(2)", K, 2, F(2), Yes),
            e("3_1^l", "(3)", L, 2, F(3), Yes),
            e("4_1^k", "(4)", K, 4, F(3), Guess),
            e("4_2^k", "(1,3)", K, 4, F(3), Guess),
            e("5_1^l", "(5)", L, 4, F(4), Guess),
            e("5_2^l", "(1,1,3)", L, 4, F(3), Guess),
            e("5_4^k", "(2,3)", K, 4, F(2), Guess),
            e("6_1^k", "(6)", K, 6, F(4), Guess),
            e("6_2^k", "(1,5)", K, 6, F(4), Guess),
            e("6_5^k", "(3,3)", K, 6, F(3), Guess),
            e("6_7^k", "(1,1,1,3)", K, 6, F(3), Guess),
        ])
        .expect("builtin catalog is consistent")
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn get(&self, name: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn base_dir(&self) -> Option<&Path> {
        self.base_dir.as_deref()
    }

    /// Load an entry's diagram: the pretzel projection or the diagram file.
    pub fn diagram(&self, e: &CatalogEntry) -> Result<Pseudodiagram> {
        match &e.source {
            Source::Pretzel(c) => Ok(c.diagram()),
            Source::DiagramFile(p) => {
                let path = match &self.base_dir {
                    Some(dir) if p.is_relative() => dir.join(p),
                    _ => p.clone(),
                };
                let text =
                    std::fs::read_to_string(&path).map_err(|err| Error::Io(format!("{}: {err}", path.display())))?;
                Pseudodiagram::from_json(&text)
            }
        }
    }

    /// Name for a class of resolved diagrams: an entry's all-`+` resolution
    /// gets the entry name, its mirror the name with `*` appended.
    pub fn class_name(&self, key: &ClassKey) -> Option<String> {
        self.entries.iter().find_map(|e| {
            let Source::Pretzel(c) = &e.source else { return None };
            let nets: Vec<i32> = c.entries().iter().map(|&x| x as i32).collect();
            let k = ClassKey::from_nets(c.classify_type(), &nets);
            if k.is_trivial() {
                return None;
            }
            if &k == key {
                Some(e.name.clone())
            } else if k.mirror().as_ref() == Some(key) {
                Some(format!("{}*", e.name))
            } else {
                None
            }
        })
    }

    pub fn to_json(&self) -> String {
        let file = CatalogFile {
            format_version: self.format_version,
            entries: self.entries.iter().map(EntryFile::from).collect(),
        };
        let mut s = serde_json::to_string_pretty(&file).expect("catalog serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Catalog> {
        let file: CatalogFile = serde_json::from_str(text)
            .map_err(|e| Error::Catalog(format!("line {} column {}: {e}", e.line(), e.column())))?;
        if file.format_version != FORMAT_VERSION {
            return Err(Error::Catalog(format!(
                "unsupported format_version {} (expected {FORMAT_VERSION})",
                file.format_version
            )));
        }
        let entries = file.entries.into_iter().map(CatalogEntry::try_from).collect::<Result<Vec<_>>>()?;
        Catalog::new(entries)
    }

    pub fn load(path: &Path) -> Result<Catalog> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        let mut c = Catalog::from_json(&text)?;
        c.base_dir = path.parent().map(Path::to_path_buf);
        Ok(c)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json()).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
    }
}

/// Catalogs compare by content, not by where they were loaded from.
impl PartialEq for Catalog {
    fn eq(&self, other: &Self) -> bool {
        self.format_version == other.format_version && self.entries == other.entries
    }
}

impl Eq for Catalog {}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CatalogFile {
    format_version: u32,
    entries: Vec<EntryFile>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EntryFile {
    name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pretzel: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    diagram_file: Option<String>,
    #[serde(rename = "type")]
    bouquet_type: BouquetType,
    tr: u32,
    kn: ExtNat,
    status: Identification,
}

impl From<&CatalogEntry> for EntryFile {
    fn from(e: &CatalogEntry) -> Self {
        let (pretzel, diagram_file) = match &e.source {
            Source::Pretzel(c) => (Some(c.to_string()), None),
            Source::DiagramFile(p) => (None, Some(p.to_string_lossy().into_owned())),
        };
        EntryFile {
            name: e.name.clone(),
            pretzel,
            diagram_file,
            bouquet_type: e.expected_type,
            tr: e.expected_tr,
            kn: e.expected_kn,
            status: e.status,
        }
    }
}

impl TryFrom<EntryFile> for CatalogEntry {
    type Error = Error;

    fn try_from(f: EntryFile) -> Result<Self> {
        let source = match (f.pretzel, f.diagram_file) {
            (Some(p), None) => {
                Source::Pretzel(PretzelCode::parse(&p).map_err(|e| Error::Catalog(format!("entry {:?}: {e}", f.name)))?)
            }
            (None, Some(d)) => Source::DiagramFile(PathBuf::from(d)),
            _ => {
                return Err(Error::Catalog(format!(
                    "entry {:?} needs exactly one of \"pretzel\" and \"diagram_file\"",
                    f.name
                )))
            }
        };
        Ok(CatalogEntry {
            name: f.name,
            source,
            expected_type: f.bouquet_type,
            expected_tr: f.tr,
            expected_kn: f.kn,
            status: f.status,
        })
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Pretzel(c) => write!(f, "{c}"),
            Source::DiagramFile(p) => write!(f, "{}", p.display()),
        }
    }
}
