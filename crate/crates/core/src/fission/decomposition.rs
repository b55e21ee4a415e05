use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

/// A factor of a pure local wild mapping class group.
///
/// The derived order is the canonical print order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Factor {
    Trivial,
    Z,
    /// Pure braid group on `k` strands.
    PB(usize),
    /// Pure braid group of type `B_k`/`C_k`.
    PBBC(usize),
    /// Fundamental group of the exotic complement on `r + s` variables.
    PBBCD(usize, usize),
    /// Pure braid group of type `G₂`.
    G2Braid,
}

impl Factor {
    /// Canonical representative, or `None` for the trivial group.
    pub fn canonical(self) -> Option<Factor> {
        match self {
            Factor::Trivial | Factor::PB(0 | 1) | Factor::PBBC(0) | Factor::PBBCD(0, 0 | 1) => None,
            Factor::Z => Some(Factor::PB(2)),
            Factor::PBBCD(r, 0) => Factor::PBBC(r).canonical(),
            f => Some(f),
        }
    }

    /// Bracketed annotation printed after the factor.
    pub fn annotation(self) -> Option<String> {
        match self {
            Factor::PBBCD(1, 1) => Some("~ PB_3".into()),
            Factor::PBBCD(0, 2) => Some("= PB_D_2 ~ PB_2^2".into()),
            Factor::PBBCD(0, 3) => Some("= PB_D_3 ~ PB_4".into()),
            Factor::PBBCD(0, s) => Some(format!("= PB_D_{s}")),
            _ => None,
        }
    }

    /// Known isomorphism to a familiar group that is not printed.
    pub fn note(self) -> Option<&'static str> {
        match self {
            Factor::PB(2) | Factor::PBBC(1) | Factor::Z => Some("≅ Z"),
            _ => None,
        }
    }

    /// The factor rewritten through the exceptional isomorphisms
    /// `PB_BC(1) ≅ PB_2`, `PB_BCD(1,1) ≅ PB_3`, `PB_BCD(0,2) ≅ PB_2²` and
    /// `PB_BCD(0,3) ≅ PB_4`.
    pub fn iso_expansion(self) -> Vec<Factor> {
        match self.canonical() {
            None => Vec::new(),
            Some(Factor::PBBC(1)) => vec![Factor::PB(2)],
            Some(Factor::PBBCD(1, 1)) => vec![Factor::PB(3)],
            Some(Factor::PBBCD(0, 2)) => vec![Factor::PB(2), Factor::PB(2)],
            Some(Factor::PBBCD(0, 3)) => vec![Factor::PB(4)],
            Some(f) => vec![f],
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Trivial => write!(f, "1"),
            Factor::Z => write!(f, "Z"),
            Factor::PB(k) => write!(f, "PB_{k}"),
            Factor::PBBC(k) => write!(f, "PB_BC_{k}"),
            Factor::PBBCD(r, s) => write!(f, "PB_BCD({r},{s})"),
            Factor::G2Braid => write!(f, "PBraid(G2)"),
        }
    }
}

/// Canonical multiset of nontrivial factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize)]
pub struct GroupDecomposition {
    factors: BTreeMap<Factor, usize>,
}

impl GroupDecomposition {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn from_factors(factors: impl IntoIterator<Item = Factor>) -> Self {
        let mut map = BTreeMap::new();
        for f in factors.into_iter().filter_map(Factor::canonical) {
            *map.entry(f).or_insert(0) += 1;
        }
        Self { factors: map }
    }

    /// `(factor, multiplicity)` in canonical order.
    pub fn factors(&self) -> impl Iterator<Item = (Factor, usize)> + '_ {
        self.factors.iter().map(|(f, m)| (*f, *m))
    }

    /// Factors with repetition, in canonical order.
    pub fn flat(&self) -> Vec<Factor> {
        self.factors().flat_map(|(f, m)| std::iter::repeat_n(f, m)).collect()
    }

    /// Number of nontrivial factors counted with multiplicity.
    pub fn nontrivial_count(&self) -> usize {
        self.factors.values().sum()
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    /// Product with another decomposition (independent marked points).
    pub fn product(&self, other: &GroupDecomposition) -> Self {
        Self::from_factors(self.flat().into_iter().chain(other.flat()))
    }

    /// Decomposition with every factor rewritten through the exceptional
    /// isomorphisms, so that isomorphic decompositions compare equal in the
    /// low-rank cases those cover.
    pub fn iso_normal_form(&self) -> Self {
        Self::from_factors(self.flat().into_iter().flat_map(Factor::iso_expansion))
    }

    /// Whether the group is infinite cyclic.
    pub fn is_infinite_cyclic(&self) -> bool {
        self.iso_normal_form().flat() == [Factor::PB(2)]
    }
}

impl fmt::Display for GroupDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        // copies of PB_2 are listed one by one, higher factors get exponents
        let mut terms = Vec::new();
        for (factor, m) in self.factors() {
            let mut term = factor.to_string();
            let copies = if factor == Factor::PB(2) { m } else { 1 };
            if copies == 1 && m > 1 {
                term.push_str(&format!("^{m}"));
            }
            if let Some(a) = factor.annotation() {
                term.push_str(&format!(" [{a}]"));
            }
            terms.extend(std::iter::repeat_n(term, copies));
        }
        write!(f, "{}", terms.join(" x "))
    }
}
