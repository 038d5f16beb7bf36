use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::Mat2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    /// [[1,0],[1,1]]
    L,
    /// [[0,1],[−1,2]]
    R,
}

impl Letter {
    pub fn matrix(self) -> Mat2 {
        match self {
            Letter::L => Mat2::L,
            Letter::R => Mat2::R,
        }
    }

    pub fn swapped(self) -> Letter {
        match self {
            Letter::L => Letter::R,
            Letter::R => Letter::L,
        }
    }
}

/// A word over {L, R}, written in the order its factors are multiplied: the
/// word `LR` stands for the product L·R. The first letter is the outermost
/// factor and decides which half of [0, 1] the product's image lands in.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LRWord {
    letters: Vec<Letter>,
}

impl LRWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        LRWord { letters }
    }

    pub fn empty() -> Self {
        LRWord::default()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The outermost factor.
    pub fn first(&self) -> Option<Letter> {
        self.letters.first().copied()
    }

    /// The word with every L replaced by R and vice versa.
    pub fn swapped(&self) -> LRWord {
        LRWord::new(self.letters.iter().map(|l| l.swapped()).collect())
    }

    pub fn matrix(&self) -> Result<Mat2> {
        word_matrix(self)
    }

    /// All 2^len words of the given length, in lexicographic order.
    pub fn all(len: usize) -> impl Iterator<Item = LRWord> {
        assert!(len < 63, "word length {len} too large to enumerate");
        (0u64..1 << len).map(move |bits| {
            LRWord::new(
                (0..len)
                    .map(|i| {
                        if bits >> (len - 1 - i) & 1 == 0 {
                            Letter::L
                        } else {
                            Letter::R
                        }
                    })
                    .collect(),
            )
        })
    }
}

/// The product of the letter matrices, leftmost letter as leftmost factor.
pub fn word_matrix(w: &LRWord) -> Result<Mat2> {
    let mats: Vec<Mat2> = w.letters.iter().map(|l| l.matrix()).collect();
    Mat2::product(&mats)
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Letter::L => "L",
            Letter::R => "R",
        })
    }
}

impl fmt::Display for LRWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("ε");
        }
        self.letters.iter().try_for_each(|l| write!(f, "{l}"))
    }
}

/// Parses strings such as `LRR`. The empty word is `""`, `ε` or `e`.
impl FromStr for LRWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "ε" || s == "e" {
            return Ok(LRWord::empty());
        }
        s.chars()
            .map(|c| match c {
                'L' | 'l' => Ok(Letter::L),
                'R' | 'r' => Ok(Letter::R),
                _ => Err(Error::Parse {
                    input: s.to_string(),
                    reason: "words use only L and R",
                }),
            })
            .collect::<Result<Vec<_>>>()
            .map(LRWord::new)
    }
}

impl Serialize for LRWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for LRWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
