use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::subsystem::RootSubsystem;
use super::system::{CartanElement, Family, RootSystem};
use crate::linalg::{dot, RowSpace};
use crate::{Rational, Result};

/// Isomorphism type of an irreducible component, read off its Cartan matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CartanType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    G2,
    /// Rank one on a short root of a two-length ambient system.
    A1Short,
    /// Rank one on a long root of a two-length ambient system.
    A1Long,
}

impl CartanType {
    pub fn rank(self) -> usize {
        match self {
            CartanType::A(k) | CartanType::B(k) | CartanType::C(k) | CartanType::D(k) => k,
            CartanType::G2 => 2,
            CartanType::A1Short | CartanType::A1Long => 1,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CartanType::A(k) => write!(f, "A{k}"),
            CartanType::B(k) => write!(f, "B{k}"),
            CartanType::C(k) => write!(f, "C{k}"),
            CartanType::D(k) => write!(f, "D{k}"),
            CartanType::G2 => write!(f, "G2"),
            CartanType::A1Short => write!(f, "A1(short)"),
            CartanType::A1Long => write!(f, "A1(long)"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    /// Coordinates on which some member root is nonzero.
    pub support: Vec<usize>,
    pub cartan_type: CartanType,
    /// Member root indices, both signs.
    pub roots: Vec<usize>,
}

/// Partition of the ambient coordinates induced by a subsystem: type-A
/// parts (singletons included) plus, for `B`/`C`/`D`, the coordinates of
/// the non-type-A block.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize)]
pub struct CoordinatePartition {
    /// Sorted parts, ordered by minimal coordinate.
    pub parts: Vec<Vec<usize>>,
    /// Sorted block coordinates; empty when there is no block.
    pub block: Vec<usize>,
}

impl CoordinatePartition {
    /// The part or block containing coordinate `i`; `None` means the block.
    pub fn part_of(&self, i: usize) -> Option<usize> {
        self.parts.iter().position(|p| p.contains(&i))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentDecomposition {
    pub components: Vec<Component>,
    pub partition: CoordinatePartition,
}

impl ComponentDecomposition {
    /// Sorted multiset of component types.
    pub fn types(&self) -> Vec<CartanType> {
        let mut t: Vec<_> = self.components.iter().map(|c| c.cartan_type).collect();
        t.sort();
        t
    }
}

fn union_find_root(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (union_find_root(parent, a), union_find_root(parent, b));
    if ra != rb {
        parent[ra.max(rb)] = ra.min(rb);
    }
}

/// Groups `0..n` into classes under the given edges; classes are sorted and
/// ordered by minimal element.
fn classes(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..n).collect();
    for (a, b) in edges {
        union(&mut parent, a, b);
    }
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for x in 0..n {
        let r = union_find_root(&mut parent, x);
        if slot[r] == usize::MAX {
            slot[r] = out.len();
            out.push(Vec::new());
        }
        out[slot[r]].push(x);
    }
    out
}

/// Simple roots of an irreducible positive system given as root indices.
fn simple_roots(rs: &RootSystem, positive: &[usize]) -> Vec<usize> {
    let set: BTreeSet<&[i64]> = positive.iter().map(|&i| rs.root(i)).collect();
    positive
        .iter()
        .copied()
        .filter(|&i| {
            let r = rs.root(i);
            !positive.iter().any(|&j| {
                let diff: Vec<i64> = r.iter().zip(rs.root(j)).map(|(a, b)| a - b).collect();
                set.contains(diff.as_slice())
            })
        })
        .collect()
}

fn classify(rs: &RootSystem, positive: &[usize]) -> CartanType {
    let simple = simple_roots(rs, positive);
    let r = simple.len();
    if r == 1 {
        if !rs.has_two_lengths() {
            return CartanType::A(1);
        }
        let len = rs.squared_length(simple[0]);
        let short = (0..rs.len()).map(|i| rs.squared_length(i)).min().unwrap_or(len);
        return if len == short {
            CartanType::A1Short
        } else {
            CartanType::A1Long
        };
    }
    let cartan = |i: usize, j: usize| rs.cartan_number(simple[i], simple[j]);
    let mut degree = vec![0usize; r];
    let mut max_bond = 0;
    for i in 0..r {
        for j in i + 1..r {
            let bond = cartan(i, j) * cartan(j, i);
            if bond != 0 {
                degree[i] += 1;
                degree[j] += 1;
                max_bond = max_bond.max(bond);
            }
        }
    }
    match max_bond {
        3 => CartanType::G2,
        2 => {
            let lengths: Vec<i64> = simple.iter().map(|&s| rs.squared_length(s)).collect();
            let short = *lengths.iter().min().unwrap();
            let n_short = lengths.iter().filter(|&&l| l == short).count();
            let n_long = r - n_short;
            if r == 2 {
                if rs.family() == Family::C {
                    CartanType::C(2)
                } else {
                    CartanType::B(2)
                }
            } else if n_short == 1 {
                CartanType::B(r)
            } else {
                debug_assert_eq!(n_long, 1);
                CartanType::C(r)
            }
        }
        _ if degree.iter().any(|&d| d >= 3) => CartanType::D(r),
        _ => CartanType::A(r),
    }
}

/// Coordinate partition of a subsystem of a classical system.
fn classical_partition(rs: &RootSystem, sub: &RootSubsystem) -> CoordinatePartition {
    let n = rs.ambient_dim();
    let mut in_block = vec![false; n];
    let mut edges = Vec::new();
    if rs.family() != Family::A {
        for r in sub.covectors(rs) {
            let nz: Vec<usize> = (0..n).filter(|&k| r[k] != 0).collect();
            match nz.as_slice() {
                [i] => in_block[*i] = true,
                [i, j] => {
                    let mut other = r.to_vec();
                    other[*j] = -other[*j];
                    if rs.index_of(&other).is_some_and(|o| sub.contains(o)) {
                        in_block[*i] = true;
                        in_block[*j] = true;
                    }
                }
                _ => unreachable!("classical roots have at most two nonzero coordinates"),
            }
        }
    }
    for r in sub.covectors(rs) {
        let nz: Vec<usize> = (0..n).filter(|&k| r[k] != 0).collect();
        if let [i, j] = nz.as_slice() {
            if !in_block[*i] && !in_block[*j] {
                edges.push((*i, *j));
            }
        }
    }
    let mut parts = Vec::new();
    for class in classes(n, edges) {
        if !in_block[class[0]] {
            parts.push(class);
        }
    }
    CoordinatePartition {
        parts,
        block: (0..n).filter(|&i| in_block[i]).collect(),
    }
}

/// Splits a valid subsystem into irreducible components and computes the
/// induced coordinate partition.
pub fn irreducible_components(
    rs: &RootSystem,
    sub: &RootSubsystem,
) -> Result<ComponentDecomposition> {
    sub.validate(rs)?;
    let positive: Vec<usize> = sub.positive_members(rs).collect();
    let edges = (0..positive.len()).flat_map(|a| {
        let positive = &positive;
        (a + 1..positive.len())
            .filter(move |&b| dot(rs.root(positive[a]), rs.root(positive[b])) != 0)
            .map(move |b| (a, b))
    });
    let groups = classes(positive.len(), edges.collect::<Vec<_>>());
    let n = rs.ambient_dim();
    let mut components: Vec<Component> = groups
        .into_iter()
        .map(|g| {
            let pos: Vec<usize> = g.iter().map(|&k| positive[k]).collect();
            let support = (0..n).filter(|&c| pos.iter().any(|&i| rs.root(i)[c] != 0)).collect();
            let mut roots: Vec<usize> = pos.iter().flat_map(|&i| [i, rs.negation(i)]).collect();
            roots.sort_unstable();
            Component {
                support,
                cartan_type: classify(rs, &pos),
                roots,
            }
        })
        .collect();
    components.sort_by(|a, b| a.support.cmp(&b.support).then(a.roots.cmp(&b.roots)));

    let partition = if rs.family().is_classical() {
        classical_partition(rs, sub)
    } else {
        let edges = components
            .iter()
            .flat_map(|c| c.support.windows(2).map(|w| (w[0], w[1])).collect::<Vec<_>>());
        CoordinatePartition {
            parts: classes(n, edges.collect::<Vec<_>>()),
            block: Vec::new(),
        }
    };
    Ok(ComponentDecomposition {
        components,
        partition,
    })
}

/// Exact basis of the common kernel of `sub` inside the Cartan subalgebra.
///
/// For type `A` the basis consists of differences of fused vectors
/// `|I_m| e_{I_k} − |I_k| e_{I_m}` over the coordinate parts; otherwise it
/// is the reduced-echelon null space (with the trace row added for `G₂`).
pub fn kernel_basis(rs: &RootSystem, sub: &RootSubsystem) -> Result<Vec<CartanElement>> {
    sub.validate(rs)?;
    let n = rs.ambient_dim();
    let to_rational = |v: Vec<i64>| v.into_iter().map(|x| Rational::from_integer(x.into())).collect();
    if rs.family() == Family::A {
        let parts = classical_partition(rs, sub).parts;
        let last = parts.last().expect("at least one part");
        let basis = parts[..parts.len() - 1]
            .iter()
            .map(|part| {
                let mut v = vec![0i64; n];
                for &i in part {
                    v[i] = last.len() as i64;
                }
                for &i in last {
                    v[i] = -(part.len() as i64);
                }
                CartanElement::new(rs, to_rational(v))
            })
            .collect();
        return basis;
    }
    let mut space = sub.span(rs);
    if rs.family().is_trace_free() {
        space.insert(&vec![1; n]);
    }
    space
        .nullspace()
        .into_iter()
        .map(|v| {
            let coords = v
                .iter()
                .map(|q| Rational::new((*q.numer()).into(), (*q.denom()).into()))
                .collect();
            CartanElement::new(rs, coords)
        })
        .collect()
}

/// Extended kernel in integer coordinates: null space of `sub` without the
/// trace constraint, scaled to primitive vectors.
pub(crate) fn extended_kernel(rs: &RootSystem, sub: &RootSubsystem) -> Vec<Vec<i64>> {
    let space: RowSpace = sub.span(rs);
    space
        .nullspace()
        .iter()
        .map(|v| crate::linalg::primitive(v).expect("null space vectors are nonzero"))
        .collect()
}
