//! Monotone unimodular maps between sequence families: the static catalog,
//! the constructors indexed by words in L and R, and the checker that
//! confirms each map against generated sequences.

mod registry;
mod verify;
mod word;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{Frac, Mat2};
use crate::sequence::SeqSpec;

pub use registry::{find, registry, GridBounds, MapEntry, ParamFamily, Params, Template};
pub use verify::{
    apply_map, neighbor_check, verify_map, verify_map_capped, Mapping, NeighborReport,
    VerificationReport,
};
pub use word::{word_matrix, LRWord, Letter};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Preserving,
    Reversing,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Injectivity {
    Bijective,
    Injective,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Preserving => "order-preserving",
            Direction::Reversing => "order-reversing",
        })
    }
}

impl fmt::Display for Injectivity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Injectivity::Bijective => "bijective",
            Injectivity::Injective => "injective",
        })
    }
}

/// A map with concrete parameters: x ↦ matrix·x from `domain` to `codomain`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MapHandle {
    pub label: String,
    pub matrix: Mat2,
    pub direction: Direction,
    pub injectivity: Injectivity,
    pub domain: SeqSpec,
    pub codomain: SeqSpec,
    /// Documented images, each checked against `matrix`.
    pub endpoints: Vec<(Frac, Frac)>,
    /// A term of `domain` the map must fix.
    pub fixed_point: Option<Frac>,
    /// Built from the empty word.
    pub degenerate: bool,
}

/// The word length s = ⌊log₂(n/m)⌋, i.e. the largest s with m·2^s ≤ n.
pub fn word_length(m: i64, n: i64) -> Result<usize> {
    if m < 1 || n < m {
        return Err(Error::Spec(format!("need 1 ≤ m ≤ n, got m={m}, n={n}")));
    }
    let mut s = 0;
    while m
        .checked_mul(2i64.pow(s as u32 + 1))
        .is_some_and(|v| v <= n)
    {
        s += 1;
    }
    Ok(s)
}

fn check_word(w: &LRWord, m: i64, n: i64) -> Result<bool> {
    let s = word_length(m, n)?;
    if w.len() != s {
        return Err(Error::Spec(format!(
            "word {w} has length {}, but m={m}, n={n} need length {s}",
            w.len()
        )));
    }
    Ok(s == 0)
}

fn image_of_full(w: &LRWord, m: i64) -> Result<(Mat2, SeqSpec)> {
    let mat = w.matrix()?;
    Ok((mat, SeqSpec::full(m).image(mat)))
}

/// The embedding x ↦ W·x of the Farey sequence of order `m` into the one of
/// order `n`, where W is the product of the word. Its image lies in [0, 1/2]
/// when the word starts with L and in [1/2, 1] when it starts with R.
pub fn lemma_injection(w: &LRWord, m: i64, n: i64) -> Result<MapHandle> {
    let degenerate = check_word(w, m, n)?;
    let matrix = w.matrix()?;
    let codomain = match w.first() {
        None => SeqSpec::full(n),
        Some(Letter::L) => SeqSpec::full(n).half_low(),
        Some(Letter::R) => SeqSpec::full(n).half_high(),
    };
    Ok(MapHandle {
        label: format!("lemma[{w}, m={m}, n={n}]"),
        matrix,
        direction: Direction::Preserving,
        injectivity: Injectivity::Injective,
        domain: SeqSpec::full(m),
        codomain,
        endpoints: vec![
            (Frac::ZERO, matrix.apply(Frac::ZERO)?),
            (Frac::ONE, matrix.apply(Frac::ONE)?),
        ],
        fixed_point: None,
        degenerate,
    })
}

fn check_pair(wm: &LRWord, wn: &LRWord, m: i64, n: i64) -> Result<bool> {
    if wm.len() != wn.len() {
        return Err(Error::Spec(format!("words {wm} and {wn} differ in length")));
    }
    check_word(wm, m, n)
}

/// N·M⁻¹, the order-preserving bijection from M·(full m) onto N·(full m).
pub fn theorem_preserving_map(wm: &LRWord, wn: &LRWord, m: i64, n: i64) -> Result<MapHandle> {
    let degenerate = check_pair(wm, wn, m, n)?;
    let (mm, domain) = image_of_full(wm, m)?;
    let (nn, codomain) = image_of_full(wn, m)?;
    let matrix = nn.mul(&mm.inverse()?)?;
    Ok(MapHandle {
        label: format!("preserving[{wm} → {wn}, m={m}, n={n}]"),
        matrix,
        direction: Direction::Preserving,
        injectivity: Injectivity::Bijective,
        domain,
        codomain,
        endpoints: vec![
            (mm.apply(Frac::ZERO)?, nn.apply(Frac::ZERO)?),
            (mm.apply(Frac::ONE)?, nn.apply(Frac::ONE)?),
        ],
        fixed_point: None,
        degenerate,
    })
}

/// N·J·M⁻¹, the order-reversing bijection from M·(full m) onto N·(full m).
/// For M = N it is an involution fixing M·(1/2), which is a term of the
/// domain once m > 1.
pub fn theorem_reversing_map(wm: &LRWord, wn: &LRWord, m: i64, n: i64) -> Result<MapHandle> {
    let degenerate = check_pair(wm, wn, m, n)?;
    let (mm, domain) = image_of_full(wm, m)?;
    let (nn, codomain) = image_of_full(wn, m)?;
    let matrix = nn.mul(&Mat2::J)?.mul(&mm.inverse()?)?;
    let fixed_point = if wm == wn && m > 1 {
        Some(mm.apply(Frac::HALF)?)
    } else {
        None
    };
    Ok(MapHandle {
        label: format!("reversing[{wm} → {wn}, m={m}, n={n}]"),
        matrix,
        direction: Direction::Reversing,
        injectivity: Injectivity::Bijective,
        domain,
        codomain,
        endpoints: vec![
            (mm.apply(Frac::ZERO)?, nn.apply(Frac::ONE)?),
            (mm.apply(Frac::ONE)?, nn.apply(Frac::ZERO)?),
        ],
        fixed_point,
        degenerate,
    })
}

/// The complement x ↦ J·x from W·(full m) onto P·(full m), where P is W with
/// L and R exchanged.
pub fn word_complement_map(w: &LRWord, m: i64) -> Result<MapHandle> {
    if m < 1 {
        return Err(Error::Spec(format!("order must be at least 1, got {m}")));
    }
    let swapped = w.swapped();
    let (wm, domain) = image_of_full(w, m)?;
    let (pm, codomain) = image_of_full(&swapped, m)?;
    Ok(MapHandle {
        label: format!("complement[{w} → {swapped}, m={m}]"),
        matrix: Mat2::J,
        direction: Direction::Reversing,
        injectivity: Injectivity::Bijective,
        domain,
        codomain,
        endpoints: vec![
            (wm.apply(Frac::ZERO)?, pm.apply(Frac::ONE)?),
            (wm.apply(Frac::ONE)?, pm.apply(Frac::ZERO)?),
        ],
        fixed_point: None,
        degenerate: w.is_empty(),
    })
}
