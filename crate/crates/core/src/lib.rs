//! Trivializing and knotting numbers of rigid-vertex 2-bouquet
//! pseudodiagrams.
//!
//! - [`diagram`]: pseudodiagrams as planar 4-regular maps with one rigid vertex.
//! - [`pretzel`]: pretzel projections, closed forms and exhaustive oracles.
//! - [`moves`]: extended Reidemeister and pseudo-Reidemeister moves, and a
//!   bounded triviality search.
//! - [`resolution`]: weighted resolution sets.
//! - [`suite`]: batch property checks behind the `check` command.
//! - [`catalog`]: named projections with expected values, and tables.

pub mod catalog;
pub mod diagram;
pub mod error;
pub mod extnat;
pub mod moves;
pub mod pretzel;
pub mod resolution;
pub mod suite;
pub mod verdict;

pub use diagram::{BouquetType, Pseudodiagram, Sign, SiteId, SiteKind, SlotRef, ValidationReport, Violation};
pub use error::{Error, Result};
pub use extnat::ExtNat;
pub use pretzel::{PretzelCode, PretzelState};
pub use verdict::Verdict;
