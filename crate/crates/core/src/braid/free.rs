use std::fmt;

use super::word::BraidWord;

/// A freely reduced word in the free group on `rank` generators.
///
/// Letters are signed and 1-based: `2` is `x_2`, `-2` is `x_2⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<i32>,
}

impl FreeWord {
    pub fn identity(rank: usize) -> Self {
        Self {
            rank,
            letters: Vec::new(),
        }
    }

    pub fn generator(rank: usize, i: usize) -> Self {
        Self {
            rank,
            letters: vec![i as i32],
        }
    }

    pub fn from_letters(rank: usize, letters: &[i32]) -> Self {
        let mut w = Self::identity(rank);
        for &l in letters {
            w.push(l);
        }
        w
    }

    fn push(&mut self, l: i32) {
        debug_assert!(l != 0 && l.unsigned_abs() as usize <= self.rank);
        if self.letters.last() == Some(&-l) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    pub fn letters(&self) -> &[i32] {
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
            rank: self.rank,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    pub fn mul(&self, other: &FreeWord) -> Self {
        let mut out = self.clone();
        for &l in &other.letters {
            out.push(l);
        }
        out
    }

    /// Image under the endomorphism sending `x_j` to `images[j − 1]`.
    pub fn substitute(&self, images: &[FreeWord]) -> Self {
        let mut out = FreeWord::identity(images.first().map_or(self.rank, |w| w.rank));
        for &l in &self.letters {
            let img = &images[l.unsigned_abs() as usize - 1];
            let piece = if l > 0 { img.clone() } else { img.inverse() };
            out = out.mul(&piece);
        }
        out
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&l| {
                if l > 0 {
                    format!("x{l}")
                } else {
                    format!("x{}^-1", -l)
                }
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// Images of `x_1, …, x_n` under the Artin automorphism of the braid.
///
/// `σ_i` sends `x_i ↦ x_i x_{i+1} x_i⁻¹`, `x_{i+1} ↦ x_i` and fixes the
/// other generators. The images are updated letter by letter, so the map of
/// `ab` is the map of `a` composed with the map of `b`.
///
/// Image lengths can grow exponentially with the word length; this is the
/// reference oracle, not the equality test used at scale.
pub fn artin_action(b: &BraidWord) -> Vec<FreeWord> {
    let n = b.strands();
    let mut images: Vec<FreeWord> = (1..=n).map(|i| FreeWord::generator(n, i)).collect();
    for l in b.letters() {
        let i = l.index - 1;
        let (xi, xj) = (images[i].clone(), images[i + 1].clone());
        if l.inverse {
            images[i] = xj.clone();
            images[i + 1] = xj.inverse().mul(&xi).mul(&xj);
        } else {
            images[i] = xi.mul(&xj).mul(&xi.inverse());
            images[i + 1] = xi;
        }
    }
    images
}
