//! Explicit projections realizing prescribed trivializing and knotting
//! numbers.

use serde::Serialize;

use super::formula::{kn_formula, tr_formula};
use super::PretzelCode;
use crate::error::{Error, Result};
use crate::extnat::ExtNat;

/// A projection with trivializing number `t` (`t` even).
pub fn construct_with_tr(t: u32) -> Result<PretzelCode> {
    if t % 2 == 1 {
        return Err(Error::InvalidArgument(format!("trivializing numbers are even, got {t}")));
    }
    PretzelCode::new(vec![t])
}

/// A projection with knotting number `kv` (`kv >= 2`).
pub fn construct_with_kn(kv: u32) -> Result<PretzelCode> {
    if kv < 2 {
        return Err(Error::InvalidArgument(format!(
            "knotting numbers of pretzel projections are at least 2, got {kv}"
        )));
    }
    PretzelCode::new(vec![2 * (kv - 1)])
}

/// The four families, with `m` stacks of one precrossing and `n` taller
/// stacks, the last of which receives `2l` extra precrossings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "case", rename_all = "kebab-case")]
pub enum PairCase {
    /// A single stack of `2(k-1)` precrossings, or `2k-3` when `odd`.
    NoTallStacks { odd: bool },
    /// Tall stacks of `2k-3`, the last one even: `2(k-1)+2l`.
    EvenStack { m: u32, n: u32, l: u32 },
    /// Tall stacks of `2k-3`, all odd, with `m <= n+1`.
    AllOddFewOnes { m: u32, n: u32, l: u32 },
    /// Tall stacks of `2k-1`, all odd, with `m > n+1` and `m+n` equal to
    /// `2(k-1)` or `2k-3`.
    AllOddManyOnes { m: u32, n: u32, l: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairConstruction {
    pub code: PretzelCode,
    pub predicted_tr: u32,
    pub predicted_kn: u32,
}

impl PairConstruction {
    /// Whether the closed forms reproduce both predicted values.
    pub fn formulas_agree(&self) -> bool {
        tr_formula(&self.code) == self.predicted_tr && kn_formula(&self.code) == ExtNat::Finite(self.predicted_kn)
    }
}

fn family(m: u32, tall: u32, n: u32, last: u32) -> Vec<u32> {
    let mut v = vec![1; m as usize];
    v.extend(std::iter::repeat_n(tall, n.saturating_sub(1) as usize));
    v.push(last);
    v
}

pub fn construct_pair(kv: u32, case: PairCase) -> Result<PairConstruction> {
    if kv < 2 {
        return Err(Error::InvalidArgument(format!("k must be at least 2, got {kv}")));
    }
    let k = kv;
    let bad = |msg: String| Err(Error::InvalidArgument(msg));
    let (entries, predicted_tr) = match case {
        PairCase::NoTallStacks { odd: false } => (vec![2 * (k - 1)], 2 * (k - 1)),
        PairCase::NoTallStacks { odd: true } => (vec![2 * k - 3], 2 * (k - 2)),
        PairCase::EvenStack { m, n, l } => {
            if n == 0 {
                return bad("this case needs n >= 1".into());
            }
            (family(m, 2 * k - 3, n, 2 * (k - 1) + 2 * l), 2 * n * (k - 2) + 2 + 2 * l)
        }
        PairCase::AllOddFewOnes { m, n, l } => {
            if n == 0 || m > n + 1 {
                return bad(format!("this case needs n >= 1 and m <= n+1, got m={m}, n={n}"));
            }
            (family(m, 2 * k - 3, n, 2 * k - 3 + 2 * l), 2 * ((m + n) / 2) + 2 * n * (k - 2) + 2 * l)
        }
        PairCase::AllOddManyOnes { m, n, l } => {
            if n == 0 || m <= n + 1 {
                return bad(format!("this case needs n >= 1 and m > n+1, got m={m}, n={n}"));
            }
            if m + n != 2 * (k - 1) && m + n != 2 * k - 3 {
                return bad(format!("m+n must be {} or {}, got {}", 2 * (k - 1), 2 * k - 3, m + n));
            }
            (family(m, 2 * k - 1, n, 2 * k - 1 + 2 * l), 2 * (k - 1) * (n + 1) + 2 * l)
        }
    };
    let (m_case, n_case) = match case {
        PairCase::NoTallStacks { .. } => (None, 0),
        PairCase::EvenStack { m, n, .. }
        | PairCase::AllOddFewOnes { m, n, .. }
        | PairCase::AllOddManyOnes { m, n, .. } => (Some(m), n),
    };
    if let Some(m) = m_case {
        let code = PretzelCode::new(entries.clone())?;
        let (m_got, ys) = code.split();
        if m_got != m || ys.len() as u32 != n_case {
            return bad(format!(
                "k={k} makes the family degenerate: {code} has {m_got} stacks of 1 and {} taller stacks",
                ys.len()
            ));
        }
    }
    Ok(PairConstruction { code: PretzelCode::new(entries)?, predicted_tr, predicted_kn: k })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_stack_constructions() {
        assert_eq!(construct_with_tr(6).unwrap().to_string(), "(6)");
        assert_eq!(construct_with_tr(0).unwrap().to_string(), "(0)");
        assert!(construct_with_tr(3).is_err());
        assert_eq!(construct_with_kn(4).unwrap().to_string(), "(6)");
        assert_eq!(construct_with_kn(2).unwrap().to_string(), "(2)");
        assert!(construct_with_kn(1).is_err());
    }

    #[test]
    fn pair_examples() {
        let p = construct_pair(3, PairCase::EvenStack { m: 0, n: 2, l: 0 }).unwrap();
        assert_eq!(p.code.to_string(), "(3,4)");
        assert_eq!(p.predicted_tr, 6);
        assert!(p.formulas_agree());

        let p = construct_pair(2, PairCase::NoTallStacks { odd: false }).unwrap();
        assert_eq!(p.code.to_string(), "(2)");
        assert_eq!(p.predicted_tr, 2);

        let p = construct_pair(3, PairCase::AllOddFewOnes { m: 1, n: 1, l: 1 }).unwrap();
        assert_eq!(p.code.to_string(), "(1,5)");
        assert_eq!(p.predicted_tr, 6);
        assert_eq!(tr_formula(&p.code), 6);
        // the extra 2l raises the knotting number of a lone tall stack
        assert_eq!(kn_formula(&p.code), ExtNat::Finite(4));
    }

    #[test]
    fn many_ones_family() {
        let p = construct_pair(3, PairCase::AllOddManyOnes { m: 3, n: 1, l: 0 }).unwrap();
        assert_eq!(p.code.to_string(), "(1,1,1,5)");
        assert!(p.formulas_agree());
        // m+n odd: the predicted value overshoots
        let p = construct_pair(4, PairCase::AllOddManyOnes { m: 4, n: 1, l: 0 }).unwrap();
        assert_eq!(tr_formula(&p.code), 10);
        assert_eq!(p.predicted_tr, 12);
    }

    #[test]
    fn rejects_inconsistent_parameters() {
        assert!(construct_pair(3, PairCase::EvenStack { m: 0, n: 0, l: 0 }).is_err());
        assert!(construct_pair(3, PairCase::AllOddFewOnes { m: 4, n: 1, l: 0 }).is_err());
        assert!(construct_pair(3, PairCase::AllOddManyOnes { m: 2, n: 1, l: 0 }).is_err());
        assert!(construct_pair(2, PairCase::EvenStack { m: 0, n: 2, l: 0 }).is_err());
    }
}
