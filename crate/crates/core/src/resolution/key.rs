use std::cmp::Ordering;
use std::fmt;

use crate::diagram::BouquetType;
use crate::pretzel::status_of_nets;
use crate::verdict::Verdict;

/// A fraction `num/den` with `0 < num < den`, the non-integer part of a
/// vertical stack read as a rational tangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Frac {
    pub num: i64,
    pub den: i64,
}

impl Frac {
    fn complement(self) -> Frac {
        Frac { num: self.den - self.num, den: self.den }
    }
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Normal form of a knotted resolved pretzel state.
///
/// A stack with net `n` is the rational tangle `1/n`; single crossings are
/// integer tangles and slide freely along the sum, so only their total
/// matters. A sum with at most one non-integer tangle is a single rational
/// `r`, and `r` and `-1/r` give the same diagram up to turning the vertex.
/// A stack with net 0 cuts the sum into two petals; integers on either side
/// untwist against the cut.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PretzelForm {
    Rational { num: i64, den: i64 },
    Sum { parts: Vec<Frac>, twist: i64 },
    Split { right: Vec<Frac>, left: Vec<Frac> },
}

impl PretzelForm {
    pub fn from_nets(nets: &[i32]) -> PretzelForm {
        if let Some(z) = nets.iter().position(|&e| e == 0) {
            let side = |s: &[i32]| s.iter().filter(|e| e.abs() >= 2).map(|&e| split_stack(e).0).collect();
            return split(side(&nets[..z]), side(&nets[z + 1..]));
        }
        let mut twist = 0;
        let mut parts = Vec::new();
        for &e in nets {
            if e.abs() == 1 {
                twist += e as i64;
            } else {
                let (f, t) = split_stack(e);
                parts.push(f);
                twist += t;
            }
        }
        sum(parts, twist)
    }

    pub fn mirror(&self) -> PretzelForm {
        let flip = |v: &[Frac]| v.iter().map(|f| f.complement()).collect::<Vec<_>>();
        match self {
            PretzelForm::Rational { num, den } => rational(-num, *den),
            PretzelForm::Sum { parts, twist } => sum(flip(parts), -twist - parts.len() as i64),
            PretzelForm::Split { right, left } => split(flip(right), flip(left)),
        }
    }
}

/// `1/n` as a fraction in `(0, 1)` plus an integer.
fn split_stack(n: i32) -> (Frac, i64) {
    let a = n.unsigned_abs() as i64;
    if n > 0 {
        (Frac { num: 1, den: a }, 0)
    } else {
        (Frac { num: a - 1, den: a }, -1)
    }
}

fn least(v: Vec<Frac>) -> Vec<Frac> {
    let mut r = v.clone();
    r.reverse();
    v.min(r)
}

fn sum(parts: Vec<Frac>, twist: i64) -> PretzelForm {
    match parts[..] {
        [] => rational(twist, 1),
        [f] => rational(f.num + twist * f.den, f.den),
        _ => PretzelForm::Sum { parts: least(parts), twist },
    }
}

fn split(right: Vec<Frac>, left: Vec<Frac>) -> PretzelForm {
    let (right, left) = (least(right), least(left));
    let (right, left) = if right <= left { (right, left) } else { (left, right) };
    PretzelForm::Split { right, left }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// The smaller of `num/den` and `-den/num`, ordered by denominator first.
fn rational(num: i64, den: i64) -> PretzelForm {
    let norm = |n: i64, d: i64| {
        let g = gcd(n, d).max(1) * d.signum();
        (d / g, n / g)
    };
    let a = norm(num, den);
    let b = if num == 0 { a } else { norm(-den, num) };
    let (den, num) = a.min(b);
    PretzelForm::Rational { num, den }
}

impl fmt::Display for PretzelForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[Frac]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        match self {
            PretzelForm::Rational { num, den } => write!(f, "rational({num}/{den})"),
            PretzelForm::Sum { parts, twist } => write!(f, "sum({};{twist})", list(parts)),
            PretzelForm::Split { right, left } => write!(f, "split({};{})", list(right), list(left)),
        }
    }
}

/// Equivalence class of a fully resolved diagram.
///
/// Keys are sound but may be finer than true equivalence: equal keys mean
/// equivalent diagrams, distinct keys need not mean distinct ones.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ClassKey {
    Trivial(BouquetType),
    Pretzel {
        bouquet_type: BouquetType,
        form: PretzelForm,
    },
    /// Not recognized as a pretzel; the smallest canonical code reached.
    General {
        bouquet_type: BouquetType,
        code: String,
    },
    /// The search ran out of budget before settling the class.
    Unknown {
        bouquet_type: BouquetType,
        code: String,
    },
}

impl ClassKey {
    /// Key of a resolved pretzel state with the given stack nets.
    pub fn from_nets(bouquet_type: BouquetType, nets: &[i32]) -> ClassKey {
        match status_of_nets(nets) {
            Verdict::TrivialK => ClassKey::Trivial(BouquetType::K),
            Verdict::TrivialL => ClassKey::Trivial(BouquetType::L),
            _ => ClassKey::Pretzel { bouquet_type, form: PretzelForm::from_nets(nets) },
        }
    }

    pub fn bouquet_type(&self) -> BouquetType {
        match self {
            ClassKey::Trivial(t) => *t,
            ClassKey::Pretzel { bouquet_type, .. }
            | ClassKey::General { bouquet_type, .. }
            | ClassKey::Unknown { bouquet_type, .. } => *bouquet_type,
        }
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self, ClassKey::Trivial(_))
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, ClassKey::Unknown { .. })
    }

    /// Key of the mirror image, when it can be read off the key itself.
    pub fn mirror(&self) -> Option<ClassKey> {
        match self {
            ClassKey::Trivial(t) => Some(ClassKey::Trivial(*t)),
            ClassKey::Pretzel { bouquet_type, form } => {
                Some(ClassKey::Pretzel { bouquet_type: *bouquet_type, form: form.mirror() })
            }
            _ => None,
        }
    }
}

impl fmt::Display for ClassKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassKey::Trivial(t) => write!(f, "{t}:trivial"),
            ClassKey::Pretzel { bouquet_type, form } => write!(f, "{bouquet_type}:{form}"),
            ClassKey::General { bouquet_type, code } => write!(f, "{bouquet_type}:diagram:{code}"),
            ClassKey::Unknown { bouquet_type, code } => write!(f, "{bouquet_type}:unknown:{code}"),
        }
    }
}

impl PartialOrd for ClassKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Keys sort by their rendered text.
impl Ord for ClassKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.to_string().cmp(&other.to_string()).then_with(|| format!("{self:?}").cmp(&format!("{other:?}")))
    }
}
