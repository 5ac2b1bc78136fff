use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagram::BouquetType;

/// Outcome of a triviality analysis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Verdict {
    TrivialK,
    TrivialL,
    Knotted,
    Unknown,
}

impl Verdict {
    pub fn is_trivial(self) -> bool {
        matches!(self, Verdict::TrivialK | Verdict::TrivialL)
    }

    pub fn trivial(t: BouquetType) -> Verdict {
        match t {
            BouquetType::K => Verdict::TrivialK,
            BouquetType::L => Verdict::TrivialL,
        }
    }

    pub fn trivial_type(self) -> Option<BouquetType> {
        match self {
            Verdict::TrivialK => Some(BouquetType::K),
            Verdict::TrivialL => Some(BouquetType::L),
            _ => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::TrivialK => "trivial-K",
            Verdict::TrivialL => "trivial-L",
            Verdict::Knotted => "knotted",
            Verdict::Unknown => "unknown",
        })
    }
}
