use std::fmt;
use std::str::FromStr;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use super::CalculusError;

/// Default bound on the word length enumerated by [`all_words`].
pub const DEFAULT_WORD_CAP: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    /// The designated strand goes above.
    A,
    /// The designated strand goes below.
    B,
}

impl Letter {
    pub fn flipped(self) -> Letter {
        match self {
            Letter::A => Letter::B,
            Letter::B => Letter::A,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
        }
    }
}

/// A choice of letter at each of `r` ordered sites.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count_b(&self) -> usize {
        self.0.iter().filter(|&&l| l == Letter::B).count()
    }

    /// (-1) to the number of `b`s.
    pub fn sign(&self) -> i64 {
        if self.count_b().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word(self.0.iter().chain(&other.0).copied().collect())
    }

    /// The word with the letter at 0-based `index` removed, and that letter.
    pub fn without(&self, index: usize) -> (Word, Letter) {
        let mut letters = self.0.clone();
        let removed = letters.remove(index);
        (Word(letters), removed)
    }

    /// Letters reindexed: position `i` of the result holds letter `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Word {
        Word(perm.iter().map(|&i| self.0[i]).collect())
    }

    pub fn with_flip(&self, index: usize) -> Word {
        let mut letters = self.0.clone();
        letters[index] = letters[index].flipped();
        Word(letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|l| write!(f, "{}", l.as_char()))
    }
}

/// Serialized as its letters, e.g. `"ab"`.
impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        String::deserialize(deserializer)?.parse().map_err(de::Error::custom)
    }
}

impl FromStr for Word {
    type Err = CalculusError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .map(|c| match c {
                'a' => Ok(Letter::A),
                'b' => Ok(Letter::B),
                other => Err(CalculusError::BadLetter(other)),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }
}

/// All `2^r` words of length `r` in lexicographic order with `a < b`.
pub fn all_words(r: usize, cap: usize) -> Result<Vec<Word>, CalculusError> {
    if r > cap {
        return Err(CalculusError::CapExceeded { r, cap });
    }
    Ok((0u64..1 << r)
        .map(|bits| Word((0..r).map(|i| if bits >> (r - 1 - i) & 1 == 1 { Letter::B } else { Letter::A }).collect()))
        .collect())
}
