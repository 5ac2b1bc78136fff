use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::pretzel::{PretzelState, StackEntry};

/// Largest projection drawn for the corpus.
const MAX_TOTAL: u32 = 8;

/// `samples` distinct pretzel pseudodiagrams with between one and
/// `max_precrossings` unresolved double points, drawn from a seeded RNG.
pub fn wrs_corpus(samples: usize, max_precrossings: u32, seed: u64) -> Vec<PretzelState> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    if max_precrossings == 0 {
        return out;
    }
    for _ in 0..samples.saturating_mul(200) {
        if out.len() >= samples {
            break;
        }
        let total = rng.gen_range(1..=MAX_TOTAL);
        let mut lens = Vec::new();
        let mut rest = total;
        while rest > 0 {
            let x = rng.gen_range(1..=rest);
            lens.push(x);
            rest -= x;
        }
        let stacks: Vec<Vec<StackEntry>> = lens
            .iter()
            .map(|&n| {
                (0..n)
                    .map(|_| match rng.gen_range(0..3) {
                        0 => StackEntry::Plus,
                        1 => StackEntry::Minus,
                        _ => StackEntry::Unresolved,
                    })
                    .collect()
            })
            .collect();
        let Ok(s) = PretzelState::new(stacks) else { continue };
        let open = s.unresolved_count() as u32;
        if open == 0 || open > max_precrossings {
            continue;
        }
        if seen.insert(s.to_string()) {
            out.push(s);
        }
    }
    out
}
