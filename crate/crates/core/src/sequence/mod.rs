//! Farey sequences and the subsequence families cut out of them.
//!
//! Every family except matrix images is obtained by filtering the full Farey
//! sequence of the family's order with its membership predicate; the full
//! sequence itself comes from the classical next-term recurrence.

mod laws;
mod spec;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Frac;

pub use laws::{check_identity_laws, check_identity_laws_in, IdentityReport, LawCheck};
pub use spec::SeqSpec;

/// Default bound on the order of a materialized Farey sequence.
pub const DEFAULT_ORDER_CAP: i64 = 1_000_000;

/// The successor of `cur` in the Farey sequence of order `n`, given its
/// predecessor `prev`.
pub fn next_term(n: i64, prev: Frac, cur: Frac) -> Result<Frac> {
    if n < 1 || prev.k() > n || cur.k() > n {
        return Err(Error::Domain(format!(
            "{prev}, {cur} are not terms of the Farey sequence of order {n}"
        )));
    }
    if prev.cross(cur) != 1 {
        return Err(Error::Domain(format!(
            "{prev}, {cur} are not consecutive Farey fractions"
        )));
    }
    if cur == Frac::ONE {
        return Err(Error::Domain("1/1 has no successor".into()));
    }
    Ok(step(n, prev, cur))
}

fn step(n: i64, prev: Frac, cur: Frac) -> Frac {
    // q·cur.k ≤ n + prev.k, so nothing here exceeds 2n.
    let q = (n + prev.k()) / cur.k();
    Frac::from_reduced(q * cur.h() - prev.h(), q * cur.k() - prev.k())
}

/// Streams the Farey sequence of order `n` in increasing order without
/// materializing it.
#[derive(Debug, Clone)]
pub struct FareyIter {
    n: i64,
    prev: Option<Frac>,
    cur: Option<Frac>,
}

impl FareyIter {
    pub fn new(n: i64) -> Result<Self> {
        if n < 1 {
            return Err(Error::Spec(format!(
                "Farey order must be at least 1, got {n}"
            )));
        }
        Ok(FareyIter {
            n,
            prev: None,
            cur: Some(Frac::ZERO),
        })
    }
}

impl Iterator for FareyIter {
    type Item = Frac;

    fn next(&mut self) -> Option<Frac> {
        let out = self.cur?;
        self.cur = if out == Frac::ONE {
            None
        } else {
            Some(match self.prev {
                None => Frac::from_reduced(1, self.n),
                Some(prev) => step(self.n, prev, out),
            })
        };
        self.prev = Some(out);
        Some(out)
    }
}

impl std::iter::FusedIterator for FareyIter {}

/// A strictly increasing list of fractions together with the spec it realizes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawSeq")]
pub struct FareySeq {
    spec: SeqSpec,
    terms: Vec<Frac>,
}

#[derive(Deserialize)]
struct RawSeq {
    spec: SeqSpec,
    terms: Vec<Frac>,
}

impl TryFrom<RawSeq> for FareySeq {
    type Error = Error;

    fn try_from(raw: RawSeq) -> Result<Self> {
        FareySeq::from_terms(raw.spec, raw.terms)
    }
}

impl FareySeq {
    /// Wraps an explicit term list, checking that it is strictly increasing
    /// and that every term belongs to `spec`.
    pub fn from_terms(spec: SeqSpec, terms: Vec<Frac>) -> Result<Self> {
        spec.validate()?;
        if let Some(w) = terms.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::Spec(format!(
                "terms are not strictly increasing at {} ≥ {}",
                w[0], w[1]
            )));
        }
        if let Some(x) = terms.iter().find(|x| !spec.contains(**x)) {
            return Err(Error::Spec(format!("{x} is not a member of {spec}")));
        }
        Ok(FareySeq { spec, terms })
    }

    pub fn spec(&self) -> &SeqSpec {
        &self.spec
    }

    pub fn terms(&self) -> &[Frac] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Frac> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Frac> {
        self.terms.iter()
    }

    pub fn contains(&self, x: Frac) -> bool {
        self.terms.binary_search(&x).is_ok()
    }

    pub fn position(&self, x: Frac) -> Option<usize> {
        self.terms.binary_search(&x).ok()
    }

    /// Whitespace-separated `h/k` terms.
    pub fn to_plain(&self) -> String {
        self.to_string()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("FareySeq serializes infallibly")
    }
}

impl fmt::Display for FareySeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl<'a> IntoIterator for &'a FareySeq {
    type Item = &'a Frac;
    type IntoIter = std::slice::Iter<'a, Frac>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

/// The full Farey sequence of order `n`, built by the next-term recurrence.
pub fn full_sequence(n: i64, cap: i64) -> Result<FareySeq> {
    if n > cap {
        return Err(Error::Cap { order: n, cap });
    }
    let terms = FareyIter::new(n)?.collect();
    Ok(FareySeq {
        spec: SeqSpec::full(n),
        terms,
    })
}

/// Materializes `spec` with the default order cap.
pub fn generate(spec: &SeqSpec) -> Result<FareySeq> {
    generate_capped(spec, DEFAULT_ORDER_CAP)
}

pub fn generate_capped(spec: &SeqSpec, cap: i64) -> Result<FareySeq> {
    spec.validate()?;
    let base = full_sequence(spec.order(), cap)?;
    if *spec == base.spec {
        return Ok(base);
    }
    restrict(spec, &base)
}

/// Materializes `spec` by filtering an already generated full Farey sequence
/// whose order is at least `spec.order()`. Lets callers that need many
/// subsequences of one order share a single base.
pub fn restrict(spec: &SeqSpec, base: &FareySeq) -> Result<FareySeq> {
    spec.validate()?;
    let base_order = match base.spec {
        SeqSpec::Full { n } => n,
        _ => {
            return Err(Error::Spec(format!(
                "base must be a full sequence, got {}",
                base.spec
            )))
        }
    };
    if spec.order() > base_order {
        return Err(Error::Spec(format!(
            "{spec} needs order {}, base has order {base_order}",
            spec.order()
        )));
    }
    let terms = restrict_terms(spec, &base.terms)?;
    Ok(FareySeq {
        spec: spec.clone(),
        terms,
    })
}

fn restrict_terms(spec: &SeqSpec, base: &[Frac]) -> Result<Vec<Frac>> {
    Ok(match spec {
        SeqSpec::HalfLow { inner } => {
            let mut t = restrict_terms(inner, base)?;
            t.retain(|x| *x <= Frac::HALF);
            t
        }
        SeqSpec::HalfHigh { inner } => {
            let mut t = restrict_terms(inner, base)?;
            t.retain(|x| *x >= Frac::HALF);
            t
        }
        SeqSpec::Image { matrix, inner } => {
            let mut t = restrict_terms(inner, base)?
                .into_iter()
                .map(|x| matrix.apply(x))
                .collect::<Result<Vec<_>>>()?;
            if !matrix.preserves_order() {
                t.reverse();
            }
            debug_assert!(t.windows(2).all(|w| w[0] < w[1]));
            t
        }
        SeqSpec::Full { n } => base.iter().copied().filter(|x| x.k() <= *n).collect(),
        leaf => base.iter().copied().filter(|x| leaf.contains(*x)).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Mat2;

    fn fr(s: &str) -> Vec<Frac> {
        s.split_whitespace().map(|t| t.parse().unwrap()).collect()
    }

    fn gen(spec: SeqSpec) -> Vec<Frac> {
        generate(&spec).unwrap().into_terms()
    }

    #[test]
    fn next_term_examples() {
        let f = |s: &str| s.parse::<Frac>().unwrap();
        assert_eq!(next_term(6, f("0/1"), f("1/6")).unwrap(), f("1/5"));
        assert_eq!(next_term(6, f("3/4"), f("4/5")).unwrap(), f("5/6"));
        assert!(matches!(
            next_term(6, f("5/6"), f("1/1")),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            next_term(6, f("1/6"), f("1/4")),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            next_term(6, f("0/1"), f("1/7")),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn order_one_is_two_terms() {
        assert_eq!(
            FareyIter::new(1).unwrap().collect::<Vec<_>>(),
            fr("0/1 1/1")
        );
        assert_eq!(gen(SeqSpec::full(1)), fr("0/1 1/1"));
        assert!(FareyIter::new(0).is_err());
    }

    #[test]
    fn golden_rows() {
        assert_eq!(
            gen(SeqSpec::full(6)),
            fr("0/1 1/6 1/5 1/4 1/3 2/5 1/2 3/5 2/3 3/4 4/5 5/6 1/1")
        );
        assert_eq!(
            gen(SeqSpec::boolean(6, 4)),
            fr("0/1 1/3 1/2 3/5 2/3 3/4 4/5 1/1")
        );
        assert_eq!(
            gen(SeqSpec::boolean(8, 4)),
            fr("0/1 1/5 1/4 1/3 2/5 3/7 1/2 4/7 3/5 2/3 3/4 4/5 1/1")
        );
        assert_eq!(
            gen(SeqSpec::upper(6, 4)),
            fr("0/1 1/6 1/5 1/4 1/3 2/5 1/2 3/5 2/3 3/4 4/5 1/1")
        );
        assert_eq!(
            gen(SeqSpec::lower(6, 4)),
            fr("0/1 1/3 1/2 3/5 2/3 3/4 4/5 5/6 1/1")
        );
    }

    #[test]
    fn halves_and_images() {
        assert_eq!(gen(SeqSpec::boolean(4, 2).half_low()), fr("0/1 1/3 1/2"));
        assert_eq!(gen(SeqSpec::boolean(4, 2).half_high()), fr("1/2 2/3 1/1"));
        let ll = Mat2::L.pow(2).unwrap();
        assert_eq!(gen(SeqSpec::full(2).image(ll)), fr("0/1 1/4 1/3"));
        let reversed = SeqSpec::full(3).image(Mat2::J);
        assert!(reversed.reverses_order());
        assert_eq!(gen(reversed), gen(SeqSpec::full(3)));
    }

    #[test]
    fn image_outside_domain_propagates() {
        let bad = SeqSpec::full(2).image(Mat2::new(-2, 1, -7, 3).unwrap());
        assert!(matches!(generate(&bad), Err(Error::OutOfDomain { .. })));
    }

    #[test]
    fn caps_and_spec_errors() {
        assert_eq!(
            generate_capped(&SeqSpec::full(50), 10),
            Err(Error::Cap { order: 50, cap: 10 })
        );
        assert!(matches!(generate(&SeqSpec::full(0)), Err(Error::Spec(_))));
        let base = generate(&SeqSpec::full(5)).unwrap();
        assert!(restrict(&SeqSpec::boolean(8, 4), &base).is_err());
        assert!(restrict(&SeqSpec::boolean(4, 2), &base).is_ok());
    }

    #[test]
    fn from_terms_validates() {
        let spec = SeqSpec::full(3);
        assert!(FareySeq::from_terms(spec.clone(), fr("0/1 1/3 1/2")).is_ok());
        assert!(FareySeq::from_terms(spec.clone(), fr("0/1 1/2 1/3")).is_err());
        assert!(FareySeq::from_terms(spec.clone(), fr("0/1 1/4")).is_err());
        assert!(FareySeq::from_terms(spec, fr("1/2 1/2")).is_err());
    }

    #[test]
    fn plain_and_json_formats() {
        let seq = generate(&SeqSpec::boolean(4, 2)).unwrap();
        assert_eq!(seq.to_plain(), "0/1 1/3 1/2 2/3 1/1");
        assert_eq!(
            seq.to_json(),
            r#"{"spec":{"family":"bool","n":4,"m":2},"terms":["0/1","1/3","1/2","2/3","1/1"]}"#
        );
        let back: FareySeq = serde_json::from_str(&seq.to_json()).unwrap();
        assert_eq!(back, seq);
        let tampered = r#"{"spec":{"family":"bool","n":4,"m":2},"terms":["0/1","1/4"]}"#;
        assert!(serde_json::from_str::<FareySeq>(tampered).is_err());
    }
}
