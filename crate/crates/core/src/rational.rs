//! Exact fractions in [0, 1] and 2×2 integer matrices of determinant ±1.
//!
//! A fraction h/k is treated as the column vector [h, k]; a matrix acts on it
//! by ordinary matrix-vector multiplication. Because |det| = 1 the image
//! vector of a reduced fraction is again reduced, so [`Mat2::apply`] never
//! needs to divide by a gcd.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub(crate) fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// An irreducible fraction h/k with 0 ≤ h ≤ k and k ≥ 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Frac {
    h: i64,
    k: i64,
}

impl Frac {
    pub const ZERO: Frac = Frac { h: 0, k: 1 };
    pub const HALF: Frac = Frac { h: 1, k: 2 };
    pub const ONE: Frac = Frac { h: 1, k: 1 };

    /// Builds h/k in lowest terms.
    pub fn new(h: i64, k: i64) -> Result<Self> {
        if k < 1 || h < 0 || h > k {
            return Err(Error::Domain(format!(
                "{h}/{k} is not a fraction in [0, 1] with positive denominator"
            )));
        }
        let g = gcd(h, k);
        Ok(Frac { h: h / g, k: k / g })
    }

    /// Caller guarantees gcd(h, k) = 1 and 0 ≤ h ≤ k, k ≥ 1.
    pub(crate) const fn from_reduced(h: i64, k: i64) -> Self {
        Frac { h, k }
    }

    pub fn h(self) -> i64 {
        self.h
    }

    pub fn k(self) -> i64 {
        self.k
    }

    /// The reduced mediant (h₁+h₂)/(k₁+k₂).
    pub fn mediant(self, other: Frac) -> Result<Frac> {
        let h = self
            .h
            .checked_add(other.h)
            .ok_or(Error::Overflow("mediant"))?;
        let k = self
            .k
            .checked_add(other.k)
            .ok_or(Error::Overflow("mediant"))?;
        Frac::new(h, k)
    }

    /// `other.h·self.k − self.h·other.k`; equals 1 exactly when `self < other`
    /// are Farey neighbors.
    pub fn cross(self, other: Frac) -> i128 {
        other.h as i128 * self.k as i128 - self.h as i128 * other.k as i128
    }

    /// Compares h/k with 1/2.
    pub fn cmp_half(self) -> Ordering {
        (2 * self.h as i128).cmp(&(self.k as i128))
    }
}

impl Ord for Frac {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.h as i128 * other.k as i128).cmp(&(other.h as i128 * self.k as i128))
    }
}

impl PartialOrd for Frac {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.h, self.k)
    }
}

impl FromStr for Frac {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_err = |reason| Error::Parse {
            input: s.to_string(),
            reason,
        };
        let (h, k) = s.trim().split_once('/').ok_or(parse_err("expected h/k"))?;
        let h = h.trim().parse().map_err(|_| parse_err("bad numerator"))?;
        let k = k.trim().parse().map_err(|_| parse_err("bad denominator"))?;
        Frac::new(h, k)
    }
}

impl Serialize for Frac {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Frac {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A row-major 2×2 integer matrix [[a, b], [c, d]] with determinant ±1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mat2 {
    a: i64,
    b: i64,
    c: i64,
    d: i64,
}

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2::raw(1, 0, 0, 1);
    /// [[1,0],[1,1]]: h/k ↦ h/(h+k), maps [0,1] onto [0,1/2].
    pub const L: Mat2 = Mat2::raw(1, 0, 1, 1);
    /// [[0,1],[-1,2]]: h/k ↦ k/(2k−h), maps [0,1] onto [1/2,1].
    pub const R: Mat2 = Mat2::raw(0, 1, -1, 2);
    /// [[-1,1],[0,1]]: the complement h/k ↦ (k−h)/k.
    pub const J: Mat2 = Mat2::raw(-1, 1, 0, 1);

    pub(crate) const fn raw(a: i64, b: i64, c: i64, d: i64) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        let det = a as i128 * d as i128 - b as i128 * c as i128;
        if det != 1 && det != -1 {
            return Err(Error::Domain(format!(
                "[[{a},{b}],[{c},{d}]] has determinant {det}, expected ±1"
            )));
        }
        Ok(Mat2 { a, b, c, d })
    }

    pub fn entries(&self) -> [[i64; 2]; 2] {
        [[self.a, self.b], [self.c, self.d]]
    }

    /// Always +1 or −1.
    pub fn det(&self) -> i64 {
        (self.a as i128 * self.d as i128 - self.b as i128 * self.c as i128) as i64
    }

    /// Determinant +1 matrices preserve the order of fractions they map into
    /// [0, 1]; determinant −1 matrices reverse it.
    pub fn preserves_order(&self) -> bool {
        self.det() == 1
    }

    pub fn mul(&self, rhs: &Mat2) -> Result<Mat2> {
        let dot = |x: i64, y: i64, z: i64, w: i64| {
            x.checked_mul(y)
                .zip(z.checked_mul(w))
                .and_then(|(p, q)| p.checked_add(q))
                .ok_or(Error::Overflow("matrix product"))
        };
        Ok(Mat2 {
            a: dot(self.a, rhs.a, self.b, rhs.c)?,
            b: dot(self.a, rhs.b, self.b, rhs.d)?,
            c: dot(self.c, rhs.a, self.d, rhs.c)?,
            d: dot(self.c, rhs.b, self.d, rhs.d)?,
        })
    }

    /// Product of a sequence of matrices, leftmost factor first.
    pub fn product<'a, I>(factors: I) -> Result<Mat2>
    where
        I: IntoIterator<Item = &'a Mat2>,
    {
        factors
            .into_iter()
            .try_fold(Mat2::IDENTITY, |acc, m| acc.mul(m))
    }

    pub fn inverse(&self) -> Result<Mat2> {
        let neg = |x: i64| x.checked_neg().ok_or(Error::Overflow("matrix inverse"));
        let (a, b, c, d) = (self.d, neg(self.b)?, neg(self.c)?, self.a);
        if self.det() == 1 {
            Ok(Mat2 { a, b, c, d })
        } else {
            Ok(Mat2 {
                a: neg(a)?,
                b: neg(b)?,
                c: neg(c)?,
                d: neg(d)?,
            })
        }
    }

    /// M^j for any integer j; negative powers exponentiate the inverse.
    pub fn pow(&self, j: i64) -> Result<Mat2> {
        let mut base = if j < 0 { self.inverse()? } else { *self };
        let mut e = j.unsigned_abs();
        let mut acc = Mat2::IDENTITY;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn is_involution(&self) -> bool {
        matches!(self.mul(self), Ok(m) if m == Mat2::IDENTITY)
    }

    /// The raw image vector M·[h, k].
    pub fn apply_vector(&self, h: i64, k: i64) -> Result<(i64, i64)> {
        let row = |x: i64, y: i64| {
            x.checked_mul(h)
                .zip(y.checked_mul(k))
                .and_then(|(p, q)| p.checked_add(q))
                .ok_or(Error::Overflow("matrix action"))
        };
        Ok((row(self.a, self.b)?, row(self.c, self.d)?))
    }

    /// The fraction whose vector is M·[h, k]. Fails when the image vector does
    /// not describe a fraction in [0, 1] with positive denominator, which means
    /// the matrix was applied outside the domain of the map it belongs to.
    pub fn apply(&self, x: Frac) -> Result<Frac> {
        let (h, k) = self.apply_vector(x.h, x.k)?;
        if k < 1 || h < 0 || h > k {
            return Err(Error::OutOfDomain {
                matrix: *self,
                input: x,
                h,
                k,
            });
        }
        debug_assert_eq!(gcd(h, k), 1);
        Ok(Frac { h, k })
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.b, self.c, self.d)
    }
}

impl FromStr for Mat2 {
    type Err = Error;

    /// Accepts four integers separated by commas, spaces or brackets, in
    /// row-major order: `"1,0,2,1"` or `"[[1,0],[2,1]]"`.
    fn from_str(s: &str) -> Result<Self> {
        let parse_err = |reason| Error::Parse {
            input: s.to_string(),
            reason,
        };
        let nums = s
            .split(|c: char| c == ',' || c == '[' || c == ']' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<i64>().map_err(|_| parse_err("bad matrix entry")))
            .collect::<Result<Vec<_>>>()?;
        match nums[..] {
            [a, b, c, d] => Mat2::new(a, b, c, d),
            _ => Err(parse_err("expected four matrix entries")),
        }
    }
}

impl Serialize for Mat2 {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Mat2 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let [[a, b], [c, d]] = <[[i64; 2]; 2]>::deserialize(deserializer)?;
        Mat2::new(a, b, c, d).map_err(serde::de::Error::custom)
    }
}
