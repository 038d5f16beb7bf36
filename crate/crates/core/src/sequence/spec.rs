use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{Frac, Mat2};

/// Names one sequence family together with its parameters.
///
/// | variant | members h/k of the Farey sequence of order n |
/// |---|---|
/// | `Full { n }` | all |
/// | `Upper { n, m }` | h ≤ m |
/// | `Lower { n, m }` | m + k − n ≤ h |
/// | `Bool { n, m }` | m + k − n ≤ h ≤ m |
/// | `BoolF { n, m, l }` | members of `Bool { n, m }` with h ≤ l |
/// | `BoolG { n, m, l }` | members of `Bool { n, m }` with l + k − n ≤ h |
///
/// `HalfLow`/`HalfHigh` keep the members of `inner` that are ≤ 1/2 or ≥ 1/2,
/// and `Image` is the set of images M·x of the members x of `inner`, listed in
/// increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum SeqSpec {
    Full { n: i64 },
    Upper { n: i64, m: i64 },
    Lower { n: i64, m: i64 },
    Bool { n: i64, m: i64 },
    BoolF { n: i64, m: i64, l: i64 },
    BoolG { n: i64, m: i64, l: i64 },
    HalfLow { inner: Box<SeqSpec> },
    HalfHigh { inner: Box<SeqSpec> },
    Image { matrix: Mat2, inner: Box<SeqSpec> },
}

impl SeqSpec {
    pub fn full(n: i64) -> Self {
        SeqSpec::Full { n }
    }

    pub fn upper(n: i64, m: i64) -> Self {
        SeqSpec::Upper { n, m }
    }

    pub fn lower(n: i64, m: i64) -> Self {
        SeqSpec::Lower { n, m }
    }

    pub fn boolean(n: i64, m: i64) -> Self {
        SeqSpec::Bool { n, m }
    }

    pub fn bool_f(n: i64, m: i64, l: i64) -> Self {
        SeqSpec::BoolF { n, m, l }
    }

    pub fn bool_g(n: i64, m: i64, l: i64) -> Self {
        SeqSpec::BoolG { n, m, l }
    }

    pub fn half_low(self) -> Self {
        SeqSpec::HalfLow {
            inner: Box::new(self),
        }
    }

    pub fn half_high(self) -> Self {
        SeqSpec::HalfHigh {
            inner: Box::new(self),
        }
    }

    pub fn image(self, matrix: Mat2) -> Self {
        SeqSpec::Image {
            matrix,
            inner: Box::new(self),
        }
    }

    /// Checks the parameter constraints of every family in the tree.
    pub fn validate(&self) -> Result<()> {
        let bad = |why: &str| Err(Error::Spec(format!("{self}: {why}")));
        match *self {
            SeqSpec::Full { n } if n < 1 => bad("order must be at least 1"),
            SeqSpec::Upper { n, m } if n < 1 || m < 1 => bad("need n ≥ 1 and m ≥ 1"),
            SeqSpec::Lower { n, m } if n < 1 || m > n - 1 => bad("need n ≥ 1 and m ≤ n − 1"),
            SeqSpec::Bool { n, m } if !(1 <= m && m < n) => bad("need 1 ≤ m ≤ n − 1"),
            SeqSpec::BoolF { n, m, l } if !(1 <= m && m < n) || !(1 <= l && l <= m) => {
                bad("need 1 ≤ l ≤ m ≤ n − 1")
            }
            SeqSpec::BoolG { n, m, l } if !(1 <= m && m < n) || !(m <= l && l < n) => {
                bad("need 1 ≤ m ≤ l ≤ n − 1")
            }
            SeqSpec::HalfLow { ref inner }
            | SeqSpec::HalfHigh { ref inner }
            | SeqSpec::Image { ref inner, .. } => inner.validate(),
            _ => Ok(()),
        }
    }

    /// The largest Farey order the tree filters; every non-image member lives
    /// in the Farey sequence of this order.
    pub fn order(&self) -> i64 {
        match *self {
            SeqSpec::Full { n }
            | SeqSpec::Upper { n, .. }
            | SeqSpec::Lower { n, .. }
            | SeqSpec::Bool { n, .. }
            | SeqSpec::BoolF { n, .. }
            | SeqSpec::BoolG { n, .. } => n,
            SeqSpec::HalfLow { ref inner }
            | SeqSpec::HalfHigh { ref inner }
            | SeqSpec::Image { ref inner, .. } => inner.order(),
        }
    }

    /// Membership predicate. Assumes the spec is valid.
    pub fn contains(&self, x: Frac) -> bool {
        let (h, k) = (x.h(), x.k());
        let bool_member = |n: i64, m: i64| k <= n && m + k - n <= h && h <= m;
        match *self {
            SeqSpec::Full { n } => k <= n,
            SeqSpec::Upper { n, m } => k <= n && h <= m,
            SeqSpec::Lower { n, m } => k <= n && m + k - n <= h,
            SeqSpec::Bool { n, m } => bool_member(n, m),
            SeqSpec::BoolF { n, m, l } => bool_member(n, m) && h <= l,
            SeqSpec::BoolG { n, m, l } => bool_member(n, m) && l + k - n <= h,
            SeqSpec::HalfLow { ref inner } => x <= Frac::HALF && inner.contains(x),
            SeqSpec::HalfHigh { ref inner } => x >= Frac::HALF && inner.contains(x),
            SeqSpec::Image { matrix, ref inner } => matrix
                .inverse()
                .and_then(|inv| inv.apply(x))
                .is_ok_and(|pre| inner.contains(pre)),
        }
    }

    /// True for an image whose matrix lists the (increasing) inner sequence in
    /// decreasing order, so generation had to re-sort it.
    pub fn reverses_order(&self) -> bool {
        matches!(self, SeqSpec::Image { matrix, .. } if !matrix.preserves_order())
    }
}

impl fmt::Display for SeqSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeqSpec::Full { n } => write!(f, "full({n})"),
            SeqSpec::Upper { n, m } => write!(f, "upper({n},{m})"),
            SeqSpec::Lower { n, m } => write!(f, "lower({n},{m})"),
            SeqSpec::Bool { n, m } => write!(f, "bool({n},{m})"),
            SeqSpec::BoolF { n, m, l } => write!(f, "bool_f({n},{m},{l})"),
            SeqSpec::BoolG { n, m, l } => write!(f, "bool_g({n},{m},{l})"),
            SeqSpec::HalfLow { inner } => write!(f, "half_low({inner})"),
            SeqSpec::HalfHigh { inner } => write!(f, "half_high({inner})"),
            SeqSpec::Image { matrix, inner } => write!(f, "image({matrix},{inner})"),
        }
    }
}
