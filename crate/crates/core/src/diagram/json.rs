//! JSON diagram files:
//! `{"sites": [{"id": 0, "kind": "vertex"}, ...], "edges": [[[0, 1], [3, 2]], ...]}`.

use serde::{Deserialize, Serialize};

use super::{Pseudodiagram, SiteId, SiteKind, SlotRef};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum KindTag {
    Vertex,
    Pre,
    Plus,
    Minus,
}

impl From<SiteKind> for KindTag {
    fn from(k: SiteKind) -> Self {
        match k {
            SiteKind::RigidVertex => KindTag::Vertex,
            SiteKind::Precrossing => KindTag::Pre,
            SiteKind::CrossingPlus => KindTag::Plus,
            SiteKind::CrossingMinus => KindTag::Minus,
        }
    }
}

impl From<KindTag> for SiteKind {
    fn from(k: KindTag) -> Self {
        match k {
            KindTag::Vertex => SiteKind::RigidVertex,
            KindTag::Pre => SiteKind::Precrossing,
            KindTag::Plus => SiteKind::CrossingPlus,
            KindTag::Minus => SiteKind::CrossingMinus,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct SiteEntry {
    id: SiteId,
    kind: KindTag,
}

/// Serialized form of a [`Pseudodiagram`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagramFile {
    sites: Vec<SiteEntry>,
    edges: Vec<[(SiteId, u8); 2]>,
}

impl DiagramFile {
    pub fn from_diagram(d: &Pseudodiagram) -> Self {
        DiagramFile {
            sites: d.sites().map(|(id, kind)| SiteEntry { id, kind: kind.into() }).collect(),
            edges: d.edges().map(|(a, b)| [(a.site, a.slot), (b.site, b.slot)]).collect(),
        }
    }

    pub fn to_diagram(&self) -> Result<Pseudodiagram> {
        Pseudodiagram::from_parts(
            self.sites.iter().map(|s| (s.id, s.kind.into())),
            self.edges.iter().map(|[a, b]| (SlotRef::new(a.0, a.1), SlotRef::new(b.0, b.1))),
        )
        .map_err(Error::InvalidDiagram)
    }
}

impl Pseudodiagram {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&DiagramFile::from_diagram(self)).expect("diagram serializes")
    }

    pub fn from_json(text: &str) -> Result<Pseudodiagram> {
        let file: DiagramFile = serde_json::from_str(text).map_err(|e| Error::Parse {
            pos: e.column(),
            msg: format!("line {} column {}: {e}", e.line(), e.column()),
        })?;
        file.to_diagram()
    }
}
