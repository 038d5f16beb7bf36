//! Möbius sieve and closed-form sizes of the sequence families.
//!
//! Several formulas carry the coefficients 3/2 and 1/2. They are evaluated as
//! twice the count, in integers, and halved once at the end.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::sequence::SeqSpec;

/// Largest sieve this library will allocate (one byte per entry).
pub const MOBIUS_CAP: i64 = 100_000_000;

/// μ(d) for 1 ≤ d ≤ limit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MobiusTable {
    values: Vec<i8>,
}

impl MobiusTable {
    pub fn limit(&self) -> i64 {
        self.values.len() as i64 - 1
    }

    /// μ(d). Panics if `d` is outside `1..=limit`.
    pub fn mu(&self, d: i64) -> i8 {
        assert!(d >= 1 && d <= self.limit(), "μ({d}) outside sieve range");
        self.values[d as usize]
    }

    /// μ(1), …, μ(limit).
    pub fn values(&self) -> &[i8] {
        &self.values[1..]
    }
}

/// Linear sieve of the Möbius function on `1..=limit`.
pub fn mobius_sieve(limit: i64) -> Result<MobiusTable> {
    if limit < 1 {
        return Err(Error::Domain(format!(
            "sieve limit must be at least 1, got {limit}"
        )));
    }
    if limit > MOBIUS_CAP {
        return Err(Error::Cap {
            order: limit,
            cap: MOBIUS_CAP,
        });
    }
    let len = limit as usize + 1;
    let mut mu = vec![0i8; len];
    let mut composite = vec![false; len];
    let mut primes: Vec<usize> = Vec::new();
    mu[1] = 1;
    for i in 2..len {
        if !composite[i] {
            primes.push(i);
            mu[i] = -1;
        }
        for &p in &primes {
            let ip = i * p;
            if ip >= len {
                break;
            }
            composite[ip] = true;
            if i % p == 0 {
                mu[ip] = 0;
                break;
            }
            mu[ip] = -mu[i];
        }
    }
    Ok(MobiusTable { values: mu })
}

/// The four difference counts for one `(n, m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Differences {
    pub n: i64,
    pub m: i64,
    /// |upper(n,m)| − |bool(n,m)|
    pub upper_minus_bool: i64,
    /// |lower(n,m)| − |bool(n,m)|
    pub lower_minus_bool: i64,
    /// |full(n)| − |bool(n,m)|
    pub full_minus_bool: i64,
    /// Present when n = 2m.
    pub balanced: Option<Balanced>,
}

/// Difference counts specialized to n = 2m, where upper and lower have the
/// same size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Balanced {
    /// |upper(2m,m)| − |bool(2m,m)|
    pub half_minus_bool: i64,
    /// |full(2m)| − |bool(2m,m)|
    pub full_minus_bool: i64,
}

/// Evaluates the counting formulas against a fixed Möbius table.
#[derive(Debug, Clone)]
pub struct Counter {
    table: MobiusTable,
}

impl Counter {
    /// A counter able to handle orders up to `limit`.
    pub fn new(limit: i64) -> Result<Self> {
        Ok(Counter {
            table: mobius_sieve(limit)?,
        })
    }

    pub fn from_table(table: MobiusTable) -> Self {
        Counter { table }
    }

    pub fn table(&self) -> &MobiusTable {
        &self.table
    }

    pub fn limit(&self) -> i64 {
        self.table.limit()
    }

    fn need(&self, order: i64) -> Result<()> {
        if order > self.limit() {
            return Err(Error::Cap {
                order,
                cap: self.limit(),
            });
        }
        Ok(())
    }

    /// Σ_{d=1}^{upto} μ(d)·term(d), accumulated in i128.
    fn mobius_sum(&self, upto: i64, term: impl Fn(i64) -> i128) -> Result<i64> {
        let mut acc: i128 = 0;
        for d in 1..=upto {
            let mu = self.table.values[d as usize];
            if mu != 0 {
                acc += mu as i128 * term(d);
            }
        }
        i64::try_from(acc).map_err(|_| Error::Overflow("Möbius sum"))
    }

    /// |full(n)| = 3/2 + ½·Σ μ(d)⌊n/d⌋².
    pub fn full(&self, n: i64) -> Result<i64> {
        self.need(n)?;
        let s = self.mobius_sum(n, |d| {
            let b = (n / d) as i128;
            b * b
        })?;
        Ok(halve(3 + s))
    }

    /// |upper(n,m)| = 3/2 + ½·Σ μ(d)⌊m/d⌋(2⌊n/d⌋ − ⌊m/d⌋). For m ≥ n the
    /// constraint h ≤ m is vacuous and this is |full(n)|.
    pub fn upper(&self, n: i64, m: i64) -> Result<i64> {
        self.need(n)?;
        let m = m.clamp(0, n);
        let s = self.mobius_sum(m, |d| {
            let (a, b) = ((m / d) as i128, (n / d) as i128);
            a * (2 * b - a)
        })?;
        Ok(halve(3 + s))
    }

    /// |lower(n,m)| = |upper(n, n−m)|.
    pub fn lower(&self, n: i64, m: i64) -> Result<i64> {
        self.upper(n, n.saturating_sub(m))
    }

    /// |bool(n,m)| = 2 + Σ μ(d)⌊m/d⌋⌊(n−m)/d⌋.
    pub fn boolean(&self, n: i64, m: i64) -> Result<i64> {
        self.need(n)?;
        let c = n - m;
        let s = self.mobius_sum(m.min(c), |d| ((m / d) * (c / d)) as i128)?;
        Ok(2 + s)
    }

    /// Closed-form size of any family with one; matrix images and halves
    /// have none.
    pub fn cardinality(&self, spec: &SeqSpec) -> Result<i64> {
        spec.validate()?;
        match *spec {
            SeqSpec::Full { n } => self.full(n),
            SeqSpec::Upper { n, m } => self.upper(n, m),
            SeqSpec::Lower { n, m } => self.lower(n, m),
            SeqSpec::Bool { n, m } => self.boolean(n, m),
            SeqSpec::BoolF { n, m, l } => self.boolean(n - m + l, l),
            SeqSpec::BoolG { n, m, l } => self.boolean(n + m - l, m),
            _ => Err(Error::NoFormula(spec.to_string())),
        }
    }

    /// Each difference from its own single sum rather than by subtracting
    /// two cardinalities.
    pub fn differences(&self, n: i64, m: i64) -> Result<Differences> {
        if !(1 <= m && m < n) {
            return Err(Error::Spec(format!(
                "differences need 1 ≤ m ≤ n − 1, got n={n}, m={m}"
            )));
        }
        self.need(n)?;
        let abc = |d: i64| ((m / d) as i128, (n / d) as i128, ((n - m) / d) as i128);

        // 2(|upper| − |bool|) = −1 + Σ μ a(2b − a − 2c)
        let upper = self.mobius_sum(m, |d| {
            let (a, b, c) = abc(d);
            a * (2 * b - a - 2 * c)
        })?;
        // 2(|lower| − |bool|) = −1 + Σ μ c(2b − c − 2a)
        let lower = self.mobius_sum(n - m, |d| {
            let (a, b, c) = abc(d);
            c * (2 * b - c - 2 * a)
        })?;
        // 2(|full| − |bool|) = −1 + Σ μ(b² − 2ac)
        let full = self.mobius_sum(n, |d| {
            let (a, b, c) = abc(d);
            b * b - 2 * a * c
        })?;
        let balanced = if n == 2 * m {
            // 2(|upper(2m,m)| − |bool(2m,m)|) = −1 + Σ μ a(2⌊2m/d⌋ − 3a),
            // which is also |full(2m)| − |bool(2m,m)| since both halves agree.
            let twice = -1
                + self.mobius_sum(m, |d| {
                    let a = (m / d) as i128;
                    a * (2 * ((2 * m) / d) as i128 - 3 * a)
                })?;
            Some(Balanced {
                half_minus_bool: halve(twice),
                full_minus_bool: twice,
            })
        } else {
            None
        };
        Ok(Differences {
            n,
            m,
            upper_minus_bool: halve(upper - 1),
            lower_minus_bool: halve(lower - 1),
            full_minus_bool: halve(full - 1),
            balanced,
        })
    }
}

fn halve(twice: i64) -> i64 {
    assert!(twice % 2 == 0, "doubled count {twice} is odd");
    twice / 2
}

/// Closed-form size of `spec`, sieving just far enough for its order.
pub fn cardinality(spec: &SeqSpec) -> Result<i64> {
    spec.validate()?;
    if matches!(
        spec,
        SeqSpec::HalfLow { .. } | SeqSpec::HalfHigh { .. } | SeqSpec::Image { .. }
    ) {
        return Err(Error::NoFormula(spec.to_string()));
    }
    Counter::new(spec.order())?.cardinality(spec)
}

pub fn cardinality_differences(n: i64, m: i64) -> Result<Differences> {
    Counter::new(n.max(1))?.differences(n, m)
}

/// |full(n)| from |full(n)| = n(n+3)/2 − Σ_{d=2}^{n} |full(⌊n/d⌋)|, memoized
/// over the distinct quotients ⌊n/d⌋ and summed in blocks of equal quotient.
pub fn cardinality_full_recursive(n: i64) -> Result<i64> {
    if n < 1 {
        return Err(Error::Domain(format!(
            "Farey order must be at least 1, got {n}"
        )));
    }
    let mut memo = HashMap::new();
    full_rec(n, &mut memo)
}

fn full_rec(v: i64, memo: &mut HashMap<i64, i64>) -> Result<i64> {
    if let Some(&c) = memo.get(&v) {
        return Ok(c);
    }
    let overflow = || Error::Overflow("recursive Farey count");
    let mut total = v as i128 * (v as i128 + 3) / 2;
    let mut d = 2;
    while d <= v {
        let q = v / d;
        let last = v / q;
        total -= (last - d + 1) as i128 * full_rec(q, memo)? as i128;
        d = last + 1;
    }
    let c = i64::try_from(total).map_err(|_| overflow())?;
    memo.insert(v, c);
    Ok(c)
}
