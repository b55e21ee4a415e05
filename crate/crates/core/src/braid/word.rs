use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// `σ_index` or its inverse; `index` is 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter {
    pub index: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn pos(index: usize) -> Self {
        Self { index, inverse: false }
    }

    pub fn neg(index: usize) -> Self {
        Self { index, inverse: true }
    }

    pub fn inv(self) -> Self {
        Self {
            index: self.index,
            inverse: !self.inverse,
        }
    }

    pub fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "s{}^-1", self.index)
        } else {
            write!(f, "s{}", self.index)
        }
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(tok: &str) -> Result<Self> {
        let bad = || Error::parse("braid word", format!("bad token {tok:?}"));
        let body = tok.strip_prefix('s').ok_or_else(bad)?;
        let (num, inverse) = match body.strip_suffix("^-1") {
            Some(n) => (n, true),
            None => (body, false),
        };
        let index: usize = num.parse().map_err(|_| bad())?;
        if index == 0 {
            return Err(bad());
        }
        Ok(Self { index, inverse })
    }
}

/// A word in the Artin generators of the braid group on `strands` strands.
///
/// Words compose left to right: in `ab` the braid `a` is performed first.
/// A positive letter `σ_i` crosses the strands at positions `i` and `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self> {
        for l in &letters {
            if l.index == 0 || l.index >= strands {
                return Err(Error::GeneratorOutOfRange {
                    index: l.index,
                    strands,
                });
            }
        }
        Ok(Self { strands, letters })
    }

    /// Signed indices: `3` is `σ_3`, `-3` is `σ_3⁻¹`.
    pub fn from_signed(strands: usize, letters: &[i64]) -> Result<Self> {
        let letters = letters
            .iter()
            .map(|&x| Letter {
                index: x.unsigned_abs() as usize,
                inverse: x < 0,
            })
            .collect();
        Self::new(strands, letters)
    }

    /// Parses whitespace-separated `s<i>` / `s<i>^-1` tokens.
    pub fn parse(strands: usize, text: &str) -> Result<Self> {
        let letters = text
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<Vec<Letter>>>()?;
        Self::new(strands, letters)
    }

    pub fn identity(strands: usize) -> Self {
        Self {
            strands,
            letters: Vec::new(),
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
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

    pub fn inverse(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &BraidWord) -> Result<Self> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch(self.strands, other.strands));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self {
            strands: self.strands,
            letters,
        })
    }

    pub fn pow(&self, k: usize) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.repeat(k),
        }
    }

    /// Cancels adjacent `σ_i σ_i⁻¹` pairs.
    pub fn free_reduced(&self) -> Self {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&l.inv()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Self {
            strands: self.strands,
            letters: out,
        }
    }

    /// `result[j]` is the final position of the strand starting at `j`
    /// (0-based).
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect(); // at[pos] = strand
        for l in &self.letters {
            at.swap(l.index - 1, l.index);
        }
        let mut perm = vec![0; self.strands];
        for (pos, &strand) in at.iter().enumerate() {
            perm[strand] = pos;
        }
        perm
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().iter().enumerate().all(|(i, &p)| i == p)
    }

    pub(crate) fn require_pure(&self) -> Result<()> {
        if self.is_pure() {
            Ok(())
        } else {
            Err(Error::NotPure)
        }
    }

    /// Letters shifted up by `offset` strands inside a wider braid.
    pub(crate) fn shifted_letters(&self, offset: usize) -> impl Iterator<Item = Letter> + '_ {
        self.letters.iter().map(move |l| Letter {
            index: l.index + offset,
            inverse: l.inverse,
        })
    }

    pub(crate) fn from_parts_unchecked(strands: usize, letters: Vec<Letter>) -> Self {
        debug_assert!(letters.iter().all(|l| l.index >= 1 && l.index < strands));
        Self { strands, letters }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> = self.letters.iter().map(Letter::to_string).collect();
        f.write_str(&words.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutations() {
        let s1 = BraidWord::parse(2, "s1").unwrap();
        assert_eq!(s1.permutation(), vec![1, 0]);
        assert!(!s1.is_pure());
        assert!(BraidWord::parse(2, "s1 s1").unwrap().is_pure());
        let w = BraidWord::parse(3, "s1 s2 s1").unwrap();
        assert_eq!(w.permutation(), vec![2, 1, 0]);
    }

    #[test]
    fn text_round_trip() {
        let w = BraidWord::parse(3, "s1^-1 s1^-1 s2 s1 s1 s2").unwrap();
        assert_eq!(w.to_string(), "s1^-1 s1^-1 s2 s1 s1 s2");
        assert_eq!(BraidWord::parse(3, &w.to_string()).unwrap(), w);
        assert!(BraidWord::parse(3, "s3").is_err());
        assert!(BraidWord::parse(3, "t1").is_err());
        assert!(BraidWord::parse(3, "s0").is_err());
    }

    #[test]
    fn free_reduction() {
        let w = BraidWord::parse(3, "s1 s2 s2^-1 s1^-1 s2").unwrap();
        assert_eq!(w.free_reduced().to_string(), "s2");
    }
}
