use std::collections::HashMap;

use super::key::ClassKey;
use crate::diagram::Pseudodiagram;
use crate::error::{Error, Result};
use crate::moves::{recognize_pretzel, search_reductions, StandardForms};
use crate::pretzel::reduce;

/// Default number of diagrams visited when a resolution is not a pretzel.
pub const DEFAULT_CLASSIFY_NODES: usize = 4_000;

/// Assigns class keys to fully resolved diagrams, caching by canonical code.
pub struct Classifier {
    forms: StandardForms,
    cache: HashMap<String, ClassKey>,
    max_nodes: usize,
}

impl Classifier {
    pub fn new(max_nodes: usize) -> Classifier {
        Classifier { forms: StandardForms::new(), cache: HashMap::new(), max_nodes }
    }

    pub fn classify(&mut self, d: &Pseudodiagram) -> Result<ClassKey> {
        if d.precrossing_count() > 0 {
            return Err(Error::Unresolved);
        }
        let code = d.canonical_code()?;
        if let Some(k) = self.cache.get(&code) {
            return Ok(k.clone());
        }
        let key = self.compute(d)?;
        self.cache.insert(code, key.clone());
        Ok(key)
    }

    fn compute(&self, d: &Pseudodiagram) -> Result<ClassKey> {
        let found = search_reductions(d, self.max_nodes, |x, code| match self.forms.classify(code) {
            Some(t) => Ok(Some(ClassKey::Trivial(t))),
            None => pretzel_key(x),
        })?;
        if let Some(k) = found.found {
            return Ok(k);
        }
        let bouquet_type = d.bouquet_type()?;
        let code = found.minimal;
        Ok(if found.exhausted {
            ClassKey::Unknown { bouquet_type, code }
        } else {
            ClassKey::General { bouquet_type, code }
        })
    }
}

/// Smallest key over all pretzel readings, preferring a trivial one.
fn pretzel_key(d: &Pseudodiagram) -> Result<Option<ClassKey>> {
    let readings = recognize_pretzel(d);
    if readings.is_empty() {
        return Ok(None);
    }
    let bouquet_type = d.bouquet_type()?;
    let mut keys = Vec::new();
    for r in readings {
        let key = ClassKey::from_nets(bouquet_type, &reduce(&r.state)?.nets);
        if key.is_trivial() {
            return Ok(Some(key));
        }
        keys.push(key);
    }
    Ok(keys.into_iter().min())
}
