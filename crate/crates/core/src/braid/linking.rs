use serde::Serialize;

use super::word::BraidWord;
use crate::{Error, Result};

/// Pairwise linking numbers of a pure braid: half the signed count of
/// crossings between two strands. Strands are labelled by start position.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct LinkingMatrix {
    entries: Vec<Vec<i64>>,
}

impl LinkingMatrix {
    pub fn zero(n: usize) -> Self {
        Self {
            entries: vec![vec![0; n]; n],
        }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    /// Entry for strands `i`, `j` (0-based).
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }
}

fn crossing_counts(b: &BraidWord) -> Vec<Vec<i64>> {
    let n = b.strands();
    let mut at: Vec<usize> = (0..n).collect();
    let mut counts = vec![vec![0i64; n]; n];
    for l in b.letters() {
        let (u, v) = (at[l.index - 1], at[l.index]);
        counts[u][v] += l.sign();
        counts[v][u] += l.sign();
        at.swap(l.index - 1, l.index);
    }
    counts
}

pub fn linking_matrix(b: &BraidWord) -> Result<LinkingMatrix> {
    if !b.is_pure() {
        return Err(Error::NotPure);
    }
    let counts = crossing_counts(b);
    debug_assert!(counts.iter().flatten().all(|c| c % 2 == 0));
    Ok(LinkingMatrix {
        entries: counts.into_iter().map(|r| r.into_iter().map(|c| c / 2).collect()).collect(),
    })
}
