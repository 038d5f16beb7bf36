//! Exact set identities between the sequence families.

use serde::Serialize;

use super::{full_sequence, restrict, FareySeq, SeqSpec, DEFAULT_ORDER_CAP};
use crate::error::{Error, Result};
use crate::rational::Frac;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawCheck {
    pub law: &'static str,
    pub instances: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub n: i64,
    pub m: i64,
    pub laws: Vec<LawCheck>,
}

impl IdentityReport {
    pub fn instances(&self) -> usize {
        self.laws.iter().map(|l| l.instances).sum()
    }
}

/// Checks, for the given `(n, m)`:
///
/// * `upper(n,m) ∩ lower(n,m) = bool(n,m)` and `upper(n,m) ∪ lower(n,m) = full(n)`
/// * `bool_f(n,m,l) = bool(n−m+l, l)` for `1 ≤ l ≤ m`
/// * `bool_g(n,m,l) = bool(n+m−l, m)` for `m ≤ l < n`
/// * `bool_f(n,m,l) ∩ bool_g(n,m,n−λ) = bool(l+λ, l)` for `1 ≤ l ≤ m`, `1 ≤ λ ≤ n−m`
pub fn check_identity_laws(n: i64, m: i64) -> Result<IdentityReport> {
    check_params(n, m)?;
    let base = full_sequence(n, DEFAULT_ORDER_CAP)?;
    check_identity_laws_in(n, m, &base)
}

/// Same as [`check_identity_laws`] over a caller-supplied full sequence of
/// order at least `n`.
pub fn check_identity_laws_in(n: i64, m: i64, base: &FareySeq) -> Result<IdentityReport> {
    check_params(n, m)?;
    let get = |spec: SeqSpec| restrict(&spec, base).map(FareySeq::into_terms);
    let fail = |law: &'static str, params: String| Error::IdentityViolation { law, params };
    let mut laws = Vec::with_capacity(5);

    let upper = get(SeqSpec::upper(n, m))?;
    let lower = get(SeqSpec::lower(n, m))?;
    let boolean = get(SeqSpec::boolean(n, m))?;
    if intersect(&upper, &lower) != boolean {
        return Err(fail("upper ∩ lower = bool", format!("n={n}, m={m}")));
    }
    laws.push(LawCheck {
        law: "upper ∩ lower = bool",
        instances: 1,
    });
    if union(&upper, &lower) != get(SeqSpec::full(n))? {
        return Err(fail("upper ∪ lower = full", format!("n={n}, m={m}")));
    }
    laws.push(LawCheck {
        law: "upper ∪ lower = full",
        instances: 1,
    });

    let mut bool_f = Vec::with_capacity(m as usize);
    for l in 1..=m {
        let seq = get(SeqSpec::bool_f(n, m, l))?;
        if seq != get(SeqSpec::boolean(n - m + l, l))? {
            return Err(fail(
                "bool_f(n,m,l) = bool(n-m+l,l)",
                format!("n={n}, m={m}, l={l}"),
            ));
        }
        bool_f.push(seq);
    }
    laws.push(LawCheck {
        law: "bool_f(n,m,l) = bool(n-m+l,l)",
        instances: bool_f.len(),
    });

    // Indexed by λ = n − l, so bool_g[λ − 1] is bool_g(n, m, n − λ).
    let mut bool_g = Vec::with_capacity((n - m) as usize);
    for lambda in 1..=n - m {
        let l = n - lambda;
        let seq = get(SeqSpec::bool_g(n, m, l))?;
        if seq != get(SeqSpec::boolean(n + m - l, m))? {
            return Err(fail(
                "bool_g(n,m,l) = bool(n+m-l,m)",
                format!("n={n}, m={m}, l={l}"),
            ));
        }
        bool_g.push(seq);
    }
    laws.push(LawCheck {
        law: "bool_g(n,m,l) = bool(n+m-l,m)",
        instances: bool_g.len(),
    });

    let mut count = 0;
    for (f, l) in bool_f.iter().zip(1..) {
        for (g, lambda) in bool_g.iter().zip(1..) {
            if intersect(f, g) != get(SeqSpec::boolean(l + lambda, l))? {
                return Err(fail(
                    "bool_f(n,m,l) ∩ bool_g(n,m,n-λ) = bool(l+λ,l)",
                    format!("n={n}, m={m}, l={l}, λ={lambda}"),
                ));
            }
            count += 1;
        }
    }
    laws.push(LawCheck {
        law: "bool_f(n,m,l) ∩ bool_g(n,m,n-λ) = bool(l+λ,l)",
        instances: count,
    });

    Ok(IdentityReport { n, m, laws })
}

fn check_params(n: i64, m: i64) -> Result<()> {
    if 1 <= m && m < n {
        Ok(())
    } else {
        Err(Error::Spec(format!(
            "identity laws need 1 ≤ m ≤ n − 1, got n={n}, m={m}"
        )))
    }
}

/// Intersection of two strictly increasing slices.
pub(crate) fn intersect(a: &[Frac], b: &[Frac]) -> Vec<Frac> {
    let mut out = Vec::with_capacity(a.len().min(b.len()));
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Union of two strictly increasing slices.
pub(crate) fn union(a: &[Frac], b: &[Frac]) -> Vec<Frac> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}
