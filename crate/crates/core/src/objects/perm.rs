use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `1..=n` in one-line notation.
///
/// Text form is the parenthesized, comma-separated word, e.g. `(3,1,2)`; the
/// parser also accepts the bare word `3,1,2` and ignores spaces.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    word: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pattern {
    P321,
    P132,
}

impl Pattern {
    pub fn name(self) -> &'static str {
        match self {
            Pattern::P321 => "321",
            Pattern::P132 => "132",
        }
    }
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n {
                return Err(Error::NotAPermutation {
                    n,
                    reason: format!("value {v} out of range"),
                });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotAPermutation {
                    n,
                    reason: format!("value {v} repeated"),
                });
            }
        }
        Ok(Self { word })
    }

    pub(crate) fn new_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(Self::new(word.clone()).is_ok());
        Self { word }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            word: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Value at 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    pub fn render(&self) -> String {
        let inner: Vec<String> = self.word.iter().map(ToString::to_string).collect();
        format!("({})", inner.join(","))
    }

    pub fn parse(text: &str) -> Result<Self> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = match compact.strip_prefix('(') {
            Some(rest) => rest.strip_suffix(')').ok_or_else(|| Error::Parse {
                position: text.len(),
                reason: "missing ')'".into(),
            })?,
            None => compact.as_str(),
        };
        if inner.is_empty() {
            return Ok(Self { word: Vec::new() });
        }
        let word = inner
            .split(',')
            .enumerate()
            .map(|(idx, tok)| {
                tok.parse::<usize>().map_err(|_| Error::Parse {
                    position: idx + 1,
                    reason: format!("entry {tok:?} is not a positive integer"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(word)
    }

    pub fn contains_pattern(&self, pattern: Pattern) -> bool {
        contains_pattern(&self.word, pattern)
    }
}

/// True iff some `i < j < k` has `w[i], w[j], w[k]` in the pattern's relative
/// order. Works on any sequence of distinct values.
pub fn contains_pattern(w: &[usize], pattern: Pattern) -> bool {
    match pattern {
        // A 321 ends at k iff some earlier entry is both smaller than an entry
        // before it and larger than w[k].
        Pattern::P321 => {
            let mut max_so_far = 0;
            let mut max_dominated = 0;
            for &v in w {
                if v < max_dominated {
                    return true;
                }
                if v < max_so_far {
                    max_dominated = max_dominated.max(v);
                }
                max_so_far = max_so_far.max(v);
            }
            false
        }
        // A 132 ends at k iff w[k] lies strictly between some w[i] < w[j], i < j.
        Pattern::P132 => {
            for k in 2..w.len() {
                let mut min_before = usize::MAX;
                for j in 0..k {
                    if min_before < w[k] && w[k] < w[j] {
                        return true;
                    }
                    min_before = min_before.min(w[j]);
                }
            }
            false
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}
