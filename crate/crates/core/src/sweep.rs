//! Exhaustive checks over parameter ranges. Each suite stops at the first
//! failure and otherwise reports how many cases it covered.

use std::thread;

use serde::Serialize;

use crate::counting::Counter;
use crate::error::{Error, Result};
use crate::maps::{
    apply_map, lemma_injection, neighbor_check, registry, theorem_preserving_map,
    theorem_reversing_map, verify_map, word_complement_map, GridBounds, LRWord, MapHandle,
};
use crate::rational::Mat2;
use crate::sequence::{
    check_identity_laws_in, full_sequence, generate, restrict, SeqSpec, DEFAULT_ORDER_CAP,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteSummary {
    pub suite: &'static str,
    pub cases: usize,
}

/// Limits for [`run_all`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SweepBounds {
    /// Largest order for identity laws, counting, and n-parametrized maps.
    pub max_n: i64,
    /// Largest m for maps parametrized by m.
    pub max_m: i64,
    /// Largest word length, i.e. s.
    pub max_s: i64,
}

impl Default for SweepBounds {
    fn default() -> Self {
        SweepBounds {
            max_n: 24,
            max_m: 8,
            max_s: 2,
        }
    }
}

fn failure(suite: &str, detail: String) -> Error {
    Error::VerificationFailure {
        map: suite.to_string(),
        detail,
    }
}

fn verified(handle: &MapHandle) -> Result<()> {
    verify_map(handle)?.into_result().map(|_| ())
}

/// Every identity law for 1 ≤ m < n ≤ max_n.
pub fn identity_suite(max_n: i64) -> Result<SuiteSummary> {
    let mut cases = 0;
    for n in 2..=max_n {
        let base = full_sequence(n, DEFAULT_ORDER_CAP)?;
        for m in 1..n {
            cases += check_identity_laws_in(n, m, &base)?.instances();
        }
    }
    Ok(SuiteSummary {
        suite: "identity laws",
        cases,
    })
}

/// Closed-form counts against generated lengths for n ≤ max_n: the full
/// sequence by both formulas, upper, lower and bool for every m, and every
/// difference count.
pub fn counting_suite(max_n: i64) -> Result<SuiteSummary> {
    let counter = Counter::new(max_n.max(1))?;
    let mut cases = 0;
    let mismatch = |what: String, formula: i64, generated: i64| {
        failure(
            "counting",
            format!("{what}: formula gives {formula}, generated {generated}"),
        )
    };
    for n in 1..=max_n {
        let base = full_sequence(n, DEFAULT_ORDER_CAP)?;
        let full = base.len() as i64;
        for (name, value) in [
            ("sum", counter.full(n)?),
            ("recursion", crate::counting::cardinality_full_recursive(n)?),
        ] {
            if value != full {
                return Err(mismatch(format!("full({n}) by {name}"), value, full));
            }
            cases += 1;
        }
        for m in 1..n {
            let len = |spec: SeqSpec| restrict(&spec, &base).map(|s| s.len() as i64);
            let upper = len(SeqSpec::upper(n, m))?;
            let lower = len(SeqSpec::lower(n, m))?;
            let boolean = len(SeqSpec::boolean(n, m))?;
            for (spec, generated) in [
                (SeqSpec::upper(n, m), upper),
                (SeqSpec::lower(n, m), lower),
                (SeqSpec::boolean(n, m), boolean),
            ] {
                let formula = counter.cardinality(&spec)?;
                if formula != generated {
                    return Err(mismatch(spec.to_string(), formula, generated));
                }
            }
            let d = counter.differences(n, m)?;
            let mut expect = vec![
                ("|upper| - |bool|", d.upper_minus_bool, upper - boolean),
                ("|lower| - |bool|", d.lower_minus_bool, lower - boolean),
                ("|full| - |bool|", d.full_minus_bool, full - boolean),
            ];
            if let Some(b) = d.balanced {
                expect.push((
                    "balanced |upper| - |bool|",
                    b.half_minus_bool,
                    upper - boolean,
                ));
                expect.push((
                    "balanced |full| - |bool|",
                    b.full_minus_bool,
                    full - boolean,
                ));
            }
            for (what, formula, generated) in expect {
                if formula != generated {
                    return Err(mismatch(
                        format!("{what} at n={n}, m={m}"),
                        formula,
                        generated,
                    ));
                }
            }
            cases += 3 + 3 + if d.balanced.is_some() { 2 } else { 0 };
        }
    }
    Ok(SuiteSummary {
        suite: "counting",
        cases,
    })
}

/// Every catalog entry over its parameter grid.
pub fn registry_suite(bounds: GridBounds) -> Result<SuiteSummary> {
    let mut cases = 0;
    for entry in registry() {
        for p in entry.family.grid(bounds) {
            verified(&entry.instantiate(&p)?)?;
            cases += 1;
        }
    }
    Ok(SuiteSummary {
        suite: "registry",
        cases,
    })
}

/// For all word pairs of length s ≤ max_s and m ≤ max_m, with n = m·2^s: the
/// preserving and reversing maps verify, and for equal words the reversing
/// map is an involution fixing M·(1/2) when m > 1.
pub fn theorem_suite(max_s: i64, max_m: i64) -> Result<SuiteSummary> {
    let mut cases = 0;
    for s in 0..=max_s as usize {
        for m in 1..=max_m {
            let n = m << s;
            for wm in LRWord::all(s) {
                for wn in LRWord::all(s) {
                    verified(&theorem_preserving_map(&wm, &wn, m, n)?)?;
                    let rev = theorem_reversing_map(&wm, &wn, m, n)?;
                    let report = verify_map(&rev)?.into_result()?;
                    if wm == wn {
                        if !report.involutory {
                            return Err(failure(
                                &rev.label,
                                format!("{} is not an involution", rev.matrix),
                            ));
                        }
                        if m > 1 && rev.fixed_point.is_none() {
                            return Err(failure(&rev.label, "no fixed point declared".into()));
                        }
                    }
                    cases += 2;
                }
            }
        }
    }
    Ok(SuiteSummary {
        suite: "word-pair maps",
        cases,
    })
}

/// For all words of length s ≤ max_s and m ≤ max_m, with n = m·2^s: the word
/// embeds full(m) increasingly into the declared half of full(n), and the
/// image is a chain of Farey neighbors.
pub fn lemma_suite(max_s: i64, max_m: i64) -> Result<SuiteSummary> {
    let mut cases = 0;
    for s in 0..=max_s as usize {
        for m in 1..=max_m {
            let domain = generate(&SeqSpec::full(m))?;
            for w in LRWord::all(s) {
                let handle = lemma_injection(&w, m, m << s)?;
                verified(&handle)?;
                let image = apply_map(&handle, &domain)?;
                neighbor_check(image.image.terms())?;
                cases += 1;
            }
        }
    }
    Ok(SuiteSummary {
        suite: "word embeddings",
        cases,
    })
}

/// For all words of length ≤ max_s and m ≤ max_m, J reverses the word's
/// image of full(m) onto the swapped word's image.
pub fn complement_suite(max_s: i64, max_m: i64) -> Result<SuiteSummary> {
    let mut cases = 0;
    for s in 0..=max_s as usize {
        for m in 1..=max_m {
            for w in LRWord::all(s) {
                let handle = word_complement_map(&w, m)?;
                if handle.matrix != Mat2::J {
                    return Err(failure(
                        &handle.label,
                        "matrix is not the complement".into(),
                    ));
                }
                verified(&handle)?;
                cases += 1;
            }
        }
    }
    Ok(SuiteSummary {
        suite: "word complements",
        cases,
    })
}

/// Runs every suite, each on its own thread, and returns the summaries in a
/// fixed order, or the first failure in that order.
pub fn run_all(b: SweepBounds) -> Result<Vec<SuiteSummary>> {
    let grid = GridBounds {
        max_n: b.max_n,
        max_m: b.max_m,
        max_s: b.max_s,
    };
    type Suite = Box<dyn FnOnce() -> Result<SuiteSummary> + Send>;
    let suites: Vec<Suite> = vec![
        Box::new(move || identity_suite(b.max_n)),
        Box::new(move || counting_suite(b.max_n)),
        Box::new(move || registry_suite(grid)),
        Box::new(move || theorem_suite(b.max_s, b.max_m)),
        Box::new(move || lemma_suite(b.max_s, b.max_m)),
        Box::new(move || complement_suite(b.max_s, b.max_m)),
    ];
    thread::scope(|scope| {
        let handles: Vec<_> = suites.into_iter().map(|f| scope.spawn(f)).collect();
        handles
            .into_iter()
            .map(|h| h.join().unwrap_or_else(|e| std::panic::resume_unwind(e)))
            .collect()
    })
}
