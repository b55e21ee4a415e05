use super::word::{BraidWord, Letter};
use crate::{Error, Result};

/// Side-by-side juxtaposition; each part is shifted past the strands of the
/// parts before it.
pub fn direct_sum(parts: &[BraidWord]) -> BraidWord {
    let strands = parts.iter().map(BraidWord::strands).sum();
    let mut letters = Vec::new();
    let mut offset = 0;
    for p in parts {
        letters.extend(p.shifted_letters(offset));
        offset += p.strands();
    }
    BraidWord::from_parts_unchecked(strands, letters)
}

/// Positive crossing of a width-`a` block over the width-`b` block to its
/// right, starting at strand offset `p` (0-based).
fn block_crossing(p: usize, a: usize, b: usize) -> Vec<Letter> {
    let mut out = Vec::with_capacity(a * b);
    for j in 0..a {
        let q = p + a - 1 - j;
        out.extend((q + 1..=q + b).map(Letter::pos));
    }
    out
}

/// Replaces strand `i` of `b` by `widths[i]` parallel strands (width 0
/// deletes the strand). Each crossing becomes the lattice word of the two
/// blocks, with block widths tracked through the permutation.
pub fn block_braid(b: &BraidWord, widths: &[usize]) -> Result<BraidWord> {
    if widths.len() != b.strands() {
        return Err(Error::ArityMismatch {
            expected: b.strands(),
            found: widths.len(),
        });
    }
    let mut current = widths.to_vec(); // widths by position
    let mut letters = Vec::new();
    for l in b.letters() {
        let i = l.index - 1;
        let p: usize = current[..i].iter().sum();
        let (a, c) = (current[i], current[i + 1]);
        if l.inverse {
            let w = block_crossing(p, c, a);
            letters.extend(w.into_iter().rev().map(Letter::inv));
        } else {
            letters.extend(block_crossing(p, a, c));
        }
        current.swap(i, i + 1);
    }
    Ok(BraidWord::from_parts_unchecked(widths.iter().sum(), letters))
}

/// Operad composition: the cabled `σ` with `τ_i` inserted on strand `i`.
///
/// The word is `(τ_1 ⊕ ⋯ ⊕ τ_n)` followed by `σ⟨k_1, …, k_n⟩`, where `k_i`
/// is the strand count of `τ_i`. For example `γ(s1 s1; s1^-1 s1^-1, 1)` is
/// the word `s1^-1 s1^-1 s2 s1 s1 s2`.
pub fn gamma(sigma: &BraidWord, taus: &[BraidWord]) -> Result<BraidWord> {
    if taus.len() != sigma.strands() {
        return Err(Error::ArityMismatch {
            expected: sigma.strands(),
            found: taus.len(),
        });
    }
    sigma.require_pure()?;
    for t in taus {
        t.require_pure()?;
    }
    let widths: Vec<usize> = taus.iter().map(BraidWord::strands).collect();
    direct_sum(taus).then(&block_braid(sigma, &widths)?)
}

/// `γ(σ; 1, …, τ, …, 1)` with `τ` on strand `i` (1-based).
pub fn cable_at(sigma: &BraidWord, i: usize, tau: &BraidWord) -> Result<BraidWord> {
    if i == 0 || i > sigma.strands() {
        return Err(Error::GeneratorOutOfRange {
            index: i,
            strands: sigma.strands(),
        });
    }
    let mut taus = vec![BraidWord::identity(1); sigma.strands()];
    taus[i - 1] = tau.clone();
    gamma(sigma, &taus)
}
