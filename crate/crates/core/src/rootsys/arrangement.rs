use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use super::components::extended_kernel;
use super::subsystem::RootSubsystem;
use super::system::{Family, RootSystem};
use crate::linalg::{dot, primitive, RowSpace, Q64};
use crate::{Error, Result};

/// Model type of one irreducible block of a restricted arrangement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ArrangementKind {
    Empty,
    /// Braid arrangement `z_i ≠ z_j` on `d + 1` variables.
    TypeA(usize),
    /// `z_i ≠ ±z_j`, `z_i ≠ 0` on `d` variables.
    TypeBC(usize),
    /// `z_i ≠ ±z_j` on `d` variables.
    TypeD(usize),
    /// `z_i ≠ ±z_j` on `r + s` variables plus `z_i ≠ 0` on `r` of them.
    Exotic(usize, usize),
    /// The six hyperplanes of the `G₂` reflection arrangement.
    G2Full,
}

impl ArrangementKind {
    pub fn expected_hyperplanes(self) -> usize {
        match self {
            ArrangementKind::Empty => 0,
            ArrangementKind::TypeA(d) => d * (d + 1) / 2,
            ArrangementKind::TypeBC(d) => d * d,
            ArrangementKind::TypeD(d) => d * d.saturating_sub(1),
            ArrangementKind::Exotic(r, s) => (r + s) * (r + s).saturating_sub(1) + r,
            ArrangementKind::G2Full => 6,
        }
    }
}

impl fmt::Display for ArrangementKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArrangementKind::Empty => write!(f, "Empty"),
            ArrangementKind::TypeA(d) => write!(f, "TypeA({d})"),
            ArrangementKind::TypeBC(d) => write!(f, "TypeBC({d})"),
            ArrangementKind::TypeD(d) => write!(f, "TypeD({d})"),
            ArrangementKind::Exotic(r, s) => write!(f, "Exotic({r},{s})"),
            ArrangementKind::G2Full => write!(f, "G2Full"),
        }
    }
}

/// Connected block of hyperplanes sharing kernel variables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArrangementBlock {
    pub kind: ArrangementKind,
    pub variables: Vec<usize>,
    pub hyperplanes: Vec<Vec<i64>>,
}

/// Hyperplanes cut on `Ker(inner)` by the roots of `outer ∖ inner`.
///
/// Kernel coordinates are the primitive null-space vectors of `inner` in
/// the ambient space, without the trace constraint; for type `A` this adds
/// the central line, on which no root vanishes identically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RestrictedArrangement {
    pub kernel: Vec<Vec<i64>>,
    /// Deduplicated primitive covectors in kernel coordinates.
    pub raw_hyperplanes: Vec<Vec<i64>>,
    pub blocks: Vec<ArrangementBlock>,
}

impl RestrictedArrangement {
    /// Block kinds, sorted; empty when there are no hyperplanes.
    pub fn kinds(&self) -> Vec<ArrangementKind> {
        let mut k: Vec<_> = self.blocks.iter().map(|b| b.kind).collect();
        k.sort();
        k
    }

    /// The kind when the arrangement is a single block (or empty).
    pub fn kind(&self) -> Option<ArrangementKind> {
        match self.blocks.as_slice() {
            [] => Some(ArrangementKind::Empty),
            [b] => Some(b.kind),
            _ => None,
        }
    }
}

enum Shape {
    Coordinate(usize),
    Pair(usize, usize, i64),
    Other,
}

fn shape(h: &[i64]) -> Shape {
    let nz: Vec<usize> = (0..h.len()).filter(|&k| h[k] != 0).collect();
    match nz.as_slice() {
        [a] => Shape::Coordinate(*a),
        [a, b] if h[*a] == 1 && h[*b].abs() == 1 => Shape::Pair(*a, *b, h[*b]),
        _ => Shape::Other,
    }
}

fn classify_block(family: Family, vars: &[usize], hyperplanes: &[Vec<i64>]) -> Result<ArrangementKind> {
    let m = vars.len();
    let mut coords = BTreeSet::new();
    let mut pairs: BTreeMap<(usize, usize), BTreeSet<i64>> = BTreeMap::new();
    let mut other = false;
    for h in hyperplanes {
        match shape(h) {
            Shape::Coordinate(a) => {
                coords.insert(a);
            }
            Shape::Pair(a, b, s) => {
                pairs.entry((a, b)).or_default().insert(s);
            }
            Shape::Other => other = true,
        }
    }
    let all_pairs = m * (m - 1) / 2;
    let kind = if other {
        if hyperplanes.len() == 1 {
            Some(ArrangementKind::TypeA(1))
        } else if family == Family::G2 && hyperplanes.len() == 6 {
            let n = hyperplanes[0].len();
            let span = RowSpace::from_rows(n, hyperplanes.iter().map(Vec::as_slice));
            (span.rank() == 2).then_some(ArrangementKind::G2Full)
        } else {
            None
        }
    } else if m == 1 {
        (!coords.is_empty()).then_some(ArrangementKind::TypeBC(1))
    } else if pairs.len() == all_pairs && pairs.values().all(|s| s.len() == 2) {
        let r = coords.len();
        Some(match r {
            0 => ArrangementKind::TypeD(m),
            r if r == m => ArrangementKind::TypeBC(m),
            r => ArrangementKind::Exotic(r, m - r),
        })
    } else if coords.is_empty()
        && pairs.len() == all_pairs
        && pairs.values().all(|s| s.len() == 1)
        && signs_switchable(vars, &pairs)
    {
        Some(ArrangementKind::TypeA(m - 1))
    } else {
        None
    };
    match kind {
        Some(k) if k.expected_hyperplanes() == hyperplanes.len() => Ok(k),
        Some(k) => Err(Error::Unclassifiable(format!(
            "{k} expects {} hyperplanes, found {}",
            k.expected_hyperplanes(),
            hyperplanes.len()
        ))),
        None => Err(Error::Unclassifiable(format!("{hyperplanes:?}"))),
    }
}

/// Whether flipping the signs of some variables turns every `z_a + s z_b`
/// into a difference.
fn signs_switchable(vars: &[usize], pairs: &BTreeMap<(usize, usize), BTreeSet<i64>>) -> bool {
    let sign = |a: usize, b: usize| *pairs[&(a, b)].iter().next().unwrap();
    // every pair is present, so the pairs through the first variable fix all signs
    let first = vars[0];
    let mut eps: BTreeMap<usize, i64> = BTreeMap::new();
    eps.insert(first, 1);
    for &v in &vars[1..] {
        eps.insert(v, -sign(first, v));
    }
    // with z = eps g, z_a + s z_b is proportional to g_a + s eps_a eps_b g_b
    pairs.keys().all(|&(a, b)| sign(a, b) * eps[&a] * eps[&b] == -1)
}

/// Restricts `outer ∖ inner` to the kernel of `inner` and classifies the
/// resulting arrangement block by block.
pub fn restricted_arrangement(
    rs: &RootSystem,
    inner: &RootSubsystem,
    outer: &RootSubsystem,
) -> Result<RestrictedArrangement> {
    inner.validate(rs)?;
    outer.validate(rs)?;
    if !inner.is_subset(outer) {
        return Err(Error::NotIncluded);
    }
    let kernel = extended_kernel(rs, inner);
    let mut set = BTreeSet::new();
    for &a in outer.members() {
        if inner.contains(a) || !rs.is_positive(a) {
            continue;
        }
        let restricted: Vec<Q64> = kernel
            .iter()
            .map(|k| Q64::from_integer(dot(rs.root(a), k)))
            .collect();
        let h = primitive(&restricted).ok_or_else(|| Error::ZeroRestriction(rs.root(a).to_vec()))?;
        set.insert(h);
    }
    let raw_hyperplanes: Vec<Vec<i64>> = set.into_iter().collect();

    // variables linked by a common hyperplane form a block
    let nvars = kernel.len();
    let mut parent: Vec<usize> = (0..nvars).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut used = vec![false; nvars];
    for h in &raw_hyperplanes {
        let nz: Vec<usize> = (0..nvars).filter(|&k| h[k] != 0).collect();
        for &k in &nz {
            used[k] = true;
        }
        for w in nz.windows(2) {
            let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in (0..nvars).filter(|&v| used[v]) {
        let r = find(&mut parent, v);
        groups.entry(r).or_default().push(v);
    }
    let mut blocks = Vec::new();
    for (root, vars) in groups {
        let hyperplanes: Vec<Vec<i64>> = raw_hyperplanes
            .iter()
            .filter(|h| {
                let first = h.iter().position(|&x| x != 0).unwrap();
                find(&mut parent, first) == root
            })
            .cloned()
            .collect();
        let kind = classify_block(rs.family(), &vars, &hyperplanes)?;
        blocks.push(ArrangementBlock {
            kind,
            variables: vars,
            hyperplanes,
        });
    }
    Ok(RestrictedArrangement {
        kernel,
        raw_hyperplanes,
        blocks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::enumerate_levis;

    fn sub(rs: &RootSystem, roots: &[&[i64]]) -> RootSubsystem {
        let covs: Vec<Vec<i64>> = roots.iter().map(|r| r.to_vec()).collect();
        RootSubsystem::from_covectors(rs, &covs).unwrap()
    }

    #[test]
    fn a3_over_a1() {
        let a3 = RootSystem::build(Family::A, 3).unwrap();
        let inner = sub(&a3, &[&[1, -1, 0, 0]]);
        let arr = restricted_arrangement(&a3, &inner, &RootSubsystem::full(&a3)).unwrap();
        assert_eq!(arr.kind(), Some(ArrangementKind::TypeA(2)));
        assert_eq!(arr.raw_hyperplanes.len(), 3);
    }

    #[test]
    fn d3_over_a1_is_exotic() {
        let d3 = RootSystem::build(Family::D, 3).unwrap();
        let inner = sub(&d3, &[&[1, -1, 0]]);
        let arr = restricted_arrangement(&d3, &inner, &RootSubsystem::full(&d3)).unwrap();
        assert_eq!(arr.kind(), Some(ArrangementKind::Exotic(1, 1)));
        assert_eq!(arr.raw_hyperplanes.len(), 3);
    }

    #[test]
    fn full_b2() {
        let b2 = RootSystem::build(Family::B, 2).unwrap();
        let arr =
            restricted_arrangement(&b2, &RootSubsystem::empty(&b2), &RootSubsystem::full(&b2)).unwrap();
        assert_eq!(arr.kind(), Some(ArrangementKind::TypeBC(2)));
        assert_eq!(arr.raw_hyperplanes.len(), 4);
    }

    #[test]
    fn d4_over_two_a1() {
        let d4 = RootSystem::build(Family::D, 4).unwrap();
        let inner = sub(&d4, &[&[1, -1, 0, 0], &[0, 0, 1, -1]]);
        let arr = restricted_arrangement(&d4, &inner, &RootSubsystem::full(&d4)).unwrap();
        // oracle: kernel is spanned by e1+e2 and e3+e4; the 20 roots outside
        // restrict to 2u, 2v, u±v only
        assert_eq!(arr.kernel, vec![vec![1, 1, 0, 0], vec![0, 0, 1, 1]]);
        assert_eq!(arr.raw_hyperplanes, vec![vec![0, 1], vec![1, -1], vec![1, 0], vec![1, 1]]);
        assert_eq!(arr.kind(), Some(ArrangementKind::TypeBC(2)));
    }

    #[test]
    fn g2_cases() {
        let g2 = RootSystem::build(Family::G2, 2).unwrap();
        let full = RootSubsystem::full(&g2);
        let arr = restricted_arrangement(&g2, &RootSubsystem::empty(&g2), &full).unwrap();
        assert_eq!(arr.kind(), Some(ArrangementKind::G2Full));
        for short in [vec![1, -1, 0], vec![2, -1, -1]] {
            let inner = RootSubsystem::from_covectors(&g2, &[short]).unwrap();
            let arr = restricted_arrangement(&g2, &inner, &full).unwrap();
            assert_eq!(arr.kind(), Some(ArrangementKind::TypeA(1)));
        }
    }

    #[test]
    fn errors() {
        let a2 = RootSystem::build(Family::A, 2).unwrap();
        let inner = sub(&a2, &[&[1, -1, 0]]);
        let outer = sub(&a2, &[&[0, 1, -1]]);
        assert_eq!(restricted_arrangement(&a2, &inner, &outer), Err(Error::NotIncluded));

        // ±e1, ±e2 in B2 is not Levi: e1+e2 vanishes on its kernel
        let b2 = RootSystem::build(Family::B, 2).unwrap();
        let inner = sub(&b2, &[&[1, 0], &[0, 1]]);
        let err = restricted_arrangement(&b2, &inner, &RootSubsystem::full(&b2)).unwrap_err();
        assert!(matches!(err, Error::ZeroRestriction(_)));
    }

    /// Independent oracle for type A: the arrangement over a Levi pair is the
    /// product of braid arrangements, one per outer part, on the inner parts
    /// it contains.
    #[test]
    fn type_a_pairs_exhaustive() {
        for n in 1..=4 {
            let rs = RootSystem::build(Family::A, n).unwrap();
            let levis = enumerate_levis(&rs);
            for inner in &levis {
                for outer in levis.iter().filter(|o| inner.is_subset(o)) {
                    let arr = restricted_arrangement(&rs, inner, outer).unwrap();
                    let pi = crate::rootsys::irreducible_components(&rs, inner).unwrap().partition;
                    let po = crate::rootsys::irreducible_components(&rs, outer).unwrap().partition;
                    let mut expected: Vec<ArrangementKind> = po
                        .parts
                        .iter()
                        .map(|p| pi.parts.iter().filter(|q| p.contains(&q[0])).count())
                        .filter(|&k| k >= 2)
                        .map(|k| ArrangementKind::TypeA(k - 1))
                        .collect();
                    expected.sort();
                    assert_eq!(arr.kinds(), expected);
                    assert_eq!(arr.kernel.len(), n + 1 - inner.rank(&rs));
                }
            }
        }
    }

    #[test]
    fn hyperplane_counts_and_no_zero_restrictions_on_levi_pairs() {
        for (family, n) in [(Family::B, 4), (Family::C, 3), (Family::D, 4), (Family::G2, 2)] {
            let rs = RootSystem::build(family, n).unwrap();
            let levis = enumerate_levis(&rs);
            for inner in &levis {
                for outer in levis.iter().filter(|o| inner.is_subset(o)) {
                    let arr = restricted_arrangement(&rs, inner, outer).unwrap();
                    for b in &arr.blocks {
                        assert_eq!(b.kind.expected_hyperplanes(), b.hyperplanes.len());
                    }
                    let total: usize = arr.blocks.iter().map(|b| b.hyperplanes.len()).sum();
                    assert_eq!(total, arr.raw_hyperplanes.len());
                }
            }
        }
    }
}
