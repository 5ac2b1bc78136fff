//! Closed forms for trivializing and knotting numbers of pretzel projections.
//!
//! Codes are split into `m` entries equal to 1 and the entries `y_j >= 2`;
//! stack order does not enter the formulas.

use super::PretzelCode;
use crate::extnat::ExtNat;

fn ceil_half(v: u32) -> u32 {
    v.div_ceil(2)
}

pub fn tr_formula(code: &PretzelCode) -> u32 {
    if code.is_zero() {
        return 0;
    }
    let (m, ys) = code.canonical_order().split();
    let n = ys.len() as u32;
    if n == 0 {
        return 2 * (m / 2);
    }
    match ys.iter().position(|y| y % 2 == 0) {
        Some(j) => ys[j] + ys.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, y)| y - 1).sum::<u32>(),
        None => 2 * ((m + n) / 2) + ys.iter().map(|y| y - 1).sum::<u32>(),
    }
}

pub fn kn_formula(code: &PretzelCode) -> ExtNat {
    if code.is_zero() {
        return ExtNat::Infinity;
    }
    let (m, ys) = code.canonical_order().split();
    let n = ys.len() as u32;
    if n == 0 {
        return if m <= 1 { ExtNat::Infinity } else { ExtNat::Finite(ceil_half(m) + 1) };
    }
    let stacks = ys.iter().map(|&y| ceil_half(y) + 1).min().expect("n >= 1");
    let all_odd = ys.iter().all(|y| y % 2 == 1);
    if all_odd && m > n + 1 {
        ExtNat::Finite(stacks.min(ceil_half(m + n) + 1))
    } else {
        ExtNat::Finite(stacks)
    }
}

/// `tr = p` computed from the formula, with the published characterization
/// evaluated alongside for comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrEqualsP {
    pub holds: bool,
    pub characterization: bool,
}

impl TrEqualsP {
    pub fn agrees(&self) -> bool {
        self.holds == self.characterization
    }
}

/// The characterization "`n = 0` and `m` even, or `n >= 1`, `m + n` even
/// and every `y_j` odd".
pub fn tr_p_characterization(code: &PretzelCode) -> bool {
    let (m, ys) = code.split();
    let n = ys.len() as u32;
    if n == 0 {
        m % 2 == 0
    } else {
        (m + n).is_multiple_of(2) && ys.iter().all(|y| y % 2 == 1)
    }
}

pub fn tr_equals_p(code: &PretzelCode) -> TrEqualsP {
    TrEqualsP { holds: tr_formula(code) == code.precrossings(), characterization: tr_p_characterization(code) }
}

pub fn kn_equals_p(code: &PretzelCode) -> bool {
    kn_formula(code) == ExtNat::Finite(code.precrossings())
}
