//! Farey sequences, their Boolean-lattice subsequences, cardinality formulas
//! and the monotone unimodular maps between them.
//!
//! All arithmetic is exact: fractions are pairs of `i64` compared by
//! cross-multiplication in `i128`, and every matrix operation is checked.

pub mod counting;
pub mod error;
pub mod maps;
pub mod rational;
pub mod sequence;
pub mod sweep;

pub use counting::{
    cardinality, cardinality_differences, cardinality_full_recursive, mobius_sieve, Balanced,
    Counter, Differences, MobiusTable,
};
pub use error::{Error, Result};
pub use rational::{Frac, Mat2};
pub use sequence::{
    check_identity_laws, check_identity_laws_in, full_sequence, generate, generate_capped,
    next_term, restrict, FareyIter, FareySeq, IdentityReport, LawCheck, SeqSpec, DEFAULT_ORDER_CAP,
};
