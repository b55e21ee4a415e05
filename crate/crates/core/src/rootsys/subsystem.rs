use num_traits::Zero;

use super::system::{CartanElement, Family, RootSystem};
use crate::linalg::RowSpace;
use crate::{Error, Result};

/// A set of roots of an ambient [`RootSystem`], stored as sorted indices.
///
/// Construction through [`RootSubsystem::new`] checks closure under
/// negation and under the reflections of its own members.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSubsystem {
    family: Family,
    rank: usize,
    members: Vec<usize>,
}

impl RootSubsystem {
    pub fn new(rs: &RootSystem, mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        if let Some(&bad) = members.iter().find(|&&i| i >= rs.len()) {
            return Err(Error::InvalidSubsystem(format!("root index {bad} out of range")));
        }
        let sub = Self::unchecked(rs, members);
        sub.validate(rs)?;
        Ok(sub)
    }

    pub(crate) fn unchecked(rs: &RootSystem, members: Vec<usize>) -> Self {
        Self {
            family: rs.family(),
            rank: rs.rank(),
            members,
        }
    }

    pub fn empty(rs: &RootSystem) -> Self {
        Self::unchecked(rs, Vec::new())
    }

    pub fn full(rs: &RootSystem) -> Self {
        Self::unchecked(rs, (0..rs.len()).collect())
    }

    /// Builds the subsystem from explicit covectors (negatives included or not).
    pub fn from_covectors(rs: &RootSystem, covectors: &[Vec<i64>]) -> Result<Self> {
        let mut members = Vec::new();
        for c in covectors {
            let i = rs
                .index_of(c)
                .ok_or_else(|| Error::InvalidSubsystem(format!("{c:?} is not a root")))?;
            members.push(i);
            members.push(rs.negation(i));
        }
        Self::new(rs, members)
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    pub fn is_subset(&self, other: &RootSubsystem) -> bool {
        self.members.iter().all(|&i| other.contains(i))
    }

    pub fn positive_members<'a>(&'a self, rs: &'a RootSystem) -> impl Iterator<Item = usize> + 'a {
        self.members.iter().copied().filter(|&i| rs.is_positive(i))
    }

    pub(crate) fn check_parent(&self, rs: &RootSystem) -> Result<()> {
        if self.family != rs.family() || self.rank != rs.rank() {
            return Err(Error::RootSystemMismatch(
                format!("{}{}", self.family, self.rank),
                rs.label(),
            ));
        }
        Ok(())
    }

    pub(crate) fn span(&self, rs: &RootSystem) -> RowSpace {
        RowSpace::from_rows(rs.ambient_dim(), self.members.iter().map(|&i| rs.root(i)))
    }

    /// Rank of the span of the members.
    pub fn rank(&self, rs: &RootSystem) -> usize {
        self.span(rs).rank()
    }

    /// Checks closure under negation and under member reflections.
    pub fn validate(&self, rs: &RootSystem) -> Result<()> {
        self.check_parent(rs)?;
        for &a in &self.members {
            if !self.contains(rs.negation(a)) {
                return Err(Error::InvalidSubsystem(format!(
                    "not closed under negation at {:?}",
                    rs.root(a)
                )));
            }
            for &b in &self.members {
                if !self.contains(rs.reflect(a, b)) {
                    return Err(Error::InvalidSubsystem(format!(
                        "reflection by {:?} maps {:?} outside",
                        rs.root(a),
                        rs.root(b)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Whether every root in the rational span of the members is a member.
    pub fn is_levi(&self, rs: &RootSystem) -> bool {
        let span = self.span(rs);
        (0..rs.len()).all(|i| span.contains(rs.root(i)) == self.contains(i))
    }

    /// Image under the reflection `s_α`.
    pub fn reflected(&self, rs: &RootSystem, alpha: usize) -> Self {
        let mut members: Vec<usize> = self.members.iter().map(|&b| rs.reflect(alpha, b)).collect();
        members.sort_unstable();
        Self::unchecked(rs, members)
    }

    pub fn intersection(&self, other: &RootSubsystem) -> Self {
        Self {
            family: self.family,
            rank: self.rank,
            members: self.members.iter().copied().filter(|&i| other.contains(i)).collect(),
        }
    }

    pub fn covectors<'a>(&'a self, rs: &'a RootSystem) -> impl Iterator<Item = &'a [i64]> + 'a {
        self.members.iter().map(|&i| rs.root(i))
    }
}

/// The roots annihilated by `element`.
pub fn levi_of_element(rs: &RootSystem, element: &CartanElement) -> Result<RootSubsystem> {
    if element.dim() != rs.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: rs.ambient_dim(),
            found: element.dim(),
        });
    }
    let members = (0..rs.len())
        .filter(|&i| rs.evaluate(i, element).is_zero())
        .collect();
    Ok(RootSubsystem::unchecked(rs, members))
}
