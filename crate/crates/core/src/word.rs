//! Words over `V`-basis labels: the basis of the tensor algebra.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::vspec::VLabel;

/// A finite letter sequence. The empty word is the unit of the tensor
/// algebra; the adjoined `uV` unit is never a letter.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Word(Vec<VLabel>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<VLabel>) -> Result<Self> {
        if letters.iter().any(VLabel::is_unit) {
            return Err(Error::UnitLetter);
        }
        Ok(Word(letters))
    }

    pub fn single(letter: VLabel) -> Result<Self> {
        Self::new(vec![letter])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[VLabel] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend(other.0.iter().cloned());
        Word(letters)
    }

    pub fn prefix(&self, k: usize) -> Word {
        Word(self.0[..k].to_vec())
    }

    pub fn suffix(&self, k: usize) -> Word {
        Word(self.0[k..].to_vec())
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> Word {
        Word(self.0[range].to_vec())
    }
}

/// Canonical order: by length, then lexicographically on letters.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(letters: &[&str]) -> Word {
        Word::new(letters.iter().map(|s| VLabel::tok(*s)).collect()).unwrap()
    }

    #[test]
    fn concat_examples() {
        assert_eq!(w(&["a"]).concat(&w(&["b", "c"])), w(&["a", "b", "c"]));
        assert_eq!(Word::empty().concat(&w(&["a"])), w(&["a"]));
        assert_eq!(w(&["a"]).concat(&Word::empty()), w(&["a"]));
    }

    #[test]
    fn order_is_length_then_lex() {
        assert!(w(&["z"]) < w(&["a", "a"]));
        assert!(w(&["a", "b"]) < w(&["b", "a"]));
    }

    #[test]
    fn unit_letter_rejected() {
        assert!(Word::new(vec![VLabel::Unit]).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(w(&["a", "b"]).to_string(), "[a,b]");
        assert_eq!(Word::empty().to_string(), "[]");
    }
}
