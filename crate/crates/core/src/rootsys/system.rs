use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::linalg::dot;
use crate::{Error, Rational, Result};

/// Lie type of a simple root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    G2,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::A, Family::B, Family::C, Family::D, Family::G2];
    pub const CLASSICAL: [Family; 4] = [Family::A, Family::B, Family::C, Family::D];

    /// Families whose Cartan subalgebra is the trace-zero hyperplane of the
    /// ambient coordinates.
    pub fn is_trace_free(self) -> bool {
        matches!(self, Family::A | Family::G2)
    }

    pub fn is_classical(self) -> bool {
        !matches!(self, Family::G2)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::G2 => "G2",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            "G2" | "g2" | "G" | "g" => Ok(Family::G2),
            other => Err(Error::parse("lie_type", format!("unknown Lie type {other:?}"))),
        }
    }
}

/// A simple root system realized by integer covectors in the standard
/// coordinates: `A_n` in `n + 1` coordinates, `B_n`/`C_n`/`D_n` in `n`, and
/// `G₂` in the sum-zero plane of three coordinates.
///
/// Roots are stored in lexicographic order of their coordinates.
#[derive(Debug, Clone)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    ambient_dim: usize,
    roots: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
    negation: Vec<usize>,
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.family == other.family && self.rank == other.rank
    }
}

impl Eq for RootSystem {}

fn unit(dim: usize, i: usize, c: i64) -> Vec<i64> {
    let mut v = vec![0; dim];
    v[i] = c;
    v
}

fn pair(dim: usize, i: usize, j: usize, sj: i64) -> Vec<i64> {
    let mut v = vec![0; dim];
    v[i] = 1;
    v[j] = sj;
    v
}

impl RootSystem {
    pub fn build(family: Family, rank: usize) -> Result<Self> {
        let unsupported = || Error::UnsupportedRank {
            family: family.to_string(),
            rank,
        };
        let (dim, mut positive): (usize, Vec<Vec<i64>>) = match family {
            Family::A if rank >= 1 => {
                let d = rank + 1;
                let roots = (0..d)
                    .flat_map(|i| (i + 1..d).map(move |j| pair(d, i, j, -1)))
                    .collect();
                (d, roots)
            }
            Family::B | Family::C if rank >= 1 => {
                let d = rank;
                let mut roots: Vec<Vec<i64>> = (0..d)
                    .flat_map(|i| {
                        (i + 1..d).flat_map(move |j| [pair(d, i, j, -1), pair(d, i, j, 1)])
                    })
                    .collect();
                let short = if family == Family::B { 1 } else { 2 };
                roots.extend((0..d).map(|i| unit(d, i, short)));
                (d, roots)
            }
            Family::D if rank >= 2 => {
                let d = rank;
                let roots = (0..d)
                    .flat_map(|i| {
                        (i + 1..d).flat_map(move |j| [pair(d, i, j, -1), pair(d, i, j, 1)])
                    })
                    .collect();
                (d, roots)
            }
            Family::G2 if rank == 2 => {
                let mut roots = vec![vec![1, -1, 0], vec![1, 0, -1], vec![0, 1, -1]];
                for i in 0..3 {
                    let mut long = vec![-1; 3];
                    long[i] = 2;
                    roots.push(long);
                }
                // make every long root lexicographically positive
                for r in roots.iter_mut() {
                    if r.iter().find(|x| **x != 0).is_some_and(|x| *x < 0) {
                        r.iter_mut().for_each(|x| *x = -*x);
                    }
                }
                (3, roots)
            }
            _ => return Err(unsupported()),
        };
        let negatives: Vec<Vec<i64>> = positive
            .iter()
            .map(|r| r.iter().map(|x| -x).collect())
            .collect();
        positive.extend(negatives);
        positive.sort();
        let roots = positive;
        let index: HashMap<Vec<i64>, usize> =
            roots.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
        let negation = roots
            .iter()
            .map(|r| index[&r.iter().map(|x| -x).collect::<Vec<_>>()])
            .collect();
        Ok(Self {
            family,
            rank,
            ambient_dim: dim,
            roots,
            index,
            negation,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &[i64] {
        &self.roots[i]
    }

    pub fn index_of(&self, covector: &[i64]) -> Option<usize> {
        self.index.get(covector).copied()
    }

    pub fn negation(&self, i: usize) -> usize {
        self.negation[i]
    }

    /// Positive roots are those whose first nonzero coordinate is positive.
    pub fn is_positive(&self, i: usize) -> bool {
        self.roots[i].iter().find(|x| **x != 0).is_some_and(|x| *x > 0)
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&i| self.is_positive(i))
    }

    /// The Cartan number `<β, α∨> = 2 (β, α) / (α, α)`.
    pub fn cartan_number(&self, beta: usize, alpha: usize) -> i64 {
        let a = &self.roots[alpha];
        let num = 2 * dot(&self.roots[beta], a);
        let den = dot(a, a);
        debug_assert_eq!(num % den, 0);
        num / den
    }

    /// Index of `s_α(β) = β − <β, α∨> α`.
    pub fn reflect(&self, alpha: usize, beta: usize) -> usize {
        let c = self.cartan_number(beta, alpha);
        let image: Vec<i64> = self.roots[beta]
            .iter()
            .zip(&self.roots[alpha])
            .map(|(b, a)| b - c * a)
            .collect();
        self.index[&image]
    }

    pub fn squared_length(&self, i: usize) -> i64 {
        dot(&self.roots[i], &self.roots[i])
    }

    /// Whether the system has two root lengths.
    pub fn has_two_lengths(&self) -> bool {
        !matches!(self.family, Family::A | Family::D) && self.rank > 1
    }

    /// Exact value `α(A)` of root `i` on a Cartan element.
    pub fn evaluate(&self, i: usize, element: &CartanElement) -> Rational {
        self.roots[i]
            .iter()
            .zip(element.coords())
            .filter(|(c, _)| **c != 0)
            .map(|(c, x)| x * Rational::from_integer((*c).into()))
            .fold(Rational::zero(), |acc, x| acc + x)
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.family, if self.family == Family::G2 { String::new() } else { self.rank.to_string() })
    }
}

/// An element of the Cartan subalgebra in ambient coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CartanElement {
    coords: Vec<Rational>,
}

impl CartanElement {
    /// Validates dimension and, for `A`/`G₂`, the trace-zero condition.
    pub fn new(rs: &RootSystem, coords: Vec<Rational>) -> Result<Self> {
        if coords.len() != rs.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: rs.ambient_dim(),
                found: coords.len(),
            });
        }
        if rs.family().is_trace_free() {
            let sum = coords.iter().fold(Rational::zero(), |acc, x| acc + x);
            if !sum.is_zero() {
                return Err(Error::NotTraceFree(sum.to_string()));
            }
        }
        Ok(Self { coords })
    }

    pub fn from_ints(rs: &RootSystem, coords: &[i64]) -> Result<Self> {
        Self::new(rs, coords.iter().map(|&x| Rational::from_integer(x.into())).collect())
    }

    /// Like [`CartanElement::new`], but projects onto the trace-zero
    /// hyperplane for `A`/`G₂` instead of rejecting. The flag reports whether
    /// a projection happened.
    pub fn projected(rs: &RootSystem, mut coords: Vec<Rational>) -> Result<(Self, bool)> {
        if coords.len() != rs.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: rs.ambient_dim(),
                found: coords.len(),
            });
        }
        let mut moved = false;
        if rs.family().is_trace_free() {
            let sum = coords.iter().fold(Rational::zero(), |acc, x| acc + x);
            if !sum.is_zero() {
                let mean = sum / Rational::from_integer(coords.len().into());
                coords.iter_mut().for_each(|x| *x -= &mean);
                moved = true;
            }
        }
        Ok((Self { coords }, moved))
    }

    pub fn zero(rs: &RootSystem) -> Self {
        Self {
            coords: vec![Rational::zero(); rs.ambient_dim()],
        }
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn trace(&self) -> Rational {
        self.coords.iter().fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl fmt::Display for CartanElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}
