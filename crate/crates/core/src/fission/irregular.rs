use num_traits::Zero;

use crate::rootsys::{levi_of_element, CartanElement, RootSubsystem, RootSystem};
use crate::{Error, Rational, Result};

/// `Q = Σ A_i x^i` for `i = 1..=p`; `coefficients[i − 1]` holds `A_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrregularType {
    rs: RootSystem,
    coefficients: Vec<CartanElement>,
}

impl IrregularType {
    pub fn new(rs: &RootSystem, coefficients: Vec<CartanElement>) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(Error::EmptyCoefficients);
        }
        for c in &coefficients {
            if c.dim() != rs.ambient_dim() {
                return Err(Error::DimensionMismatch {
                    expected: rs.ambient_dim(),
                    found: c.dim(),
                });
            }
        }
        Ok(Self {
            rs: rs.clone(),
            coefficients,
        })
    }

    /// Integer coefficients; trace-free families must already be trace-free.
    pub fn from_ints(rs: &RootSystem, rows: &[&[i64]]) -> Result<Self> {
        let coefficients = rows
            .iter()
            .map(|r| CartanElement::from_ints(rs, r))
            .collect::<Result<_>>()?;
        Self::new(rs, coefficients)
    }

    /// Integer coefficients, projected to trace zero where the family needs it.
    pub fn from_ints_projected(rs: &RootSystem, rows: &[&[i64]]) -> Result<Self> {
        let coefficients = rows
            .iter()
            .map(|r| {
                let coords = r.iter().map(|&x| Rational::from_integer(x.into())).collect();
                CartanElement::projected(rs, coords).map(|(el, _)| el)
            })
            .collect::<Result<_>>()?;
        Self::new(rs, coefficients)
    }

    pub fn rs(&self) -> &RootSystem {
        &self.rs
    }

    pub fn p(&self) -> usize {
        self.coefficients.len()
    }

    pub fn coefficients(&self) -> &[CartanElement] {
        &self.coefficients
    }

    /// `A_i`, 1-based; zero past `p`.
    pub fn coefficient(&self, i: usize) -> CartanElement {
        self.coefficients
            .get(i.wrapping_sub(1))
            .cloned()
            .unwrap_or_else(|| CartanElement::zero(&self.rs))
    }

    /// The same type with zero coefficients appended up to `p`.
    pub fn padded(&self, p: usize) -> Self {
        let mut coefficients = self.coefficients.clone();
        while coefficients.len() < p {
            coefficients.push(CartanElement::zero(&self.rs));
        }
        Self {
            rs: self.rs.clone(),
            coefficients,
        }
    }
}

/// `d_α = max{ i : α(A_i) ≠ 0 }`, or 0, for every root index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreeProfile {
    degrees: Vec<usize>,
}

impl DegreeProfile {
    pub fn degree(&self, root: usize) -> usize {
        self.degrees[root]
    }

    /// Degrees indexed by root; `d_α = d_{−α}` holds by construction.
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// `(root index, d_α)` over positive roots.
    pub fn positive<'a>(&'a self, rs: &'a RootSystem) -> impl Iterator<Item = (usize, usize)> + 'a {
        rs.positive_roots().map(|i| (i, self.degrees[i]))
    }
}

pub fn degree_profile(q: &IrregularType) -> DegreeProfile {
    let rs = q.rs();
    let degrees = (0..rs.len())
        .map(|a| {
            (1..=q.p())
                .rev()
                .find(|&i| !rs.evaluate(a, &q.coefficients[i - 1]).is_zero())
                .unwrap_or(0)
        })
        .collect();
    DegreeProfile { degrees }
}

/// `Φ_1 ⊆ … ⊆ Φ_{p+1}`; `levels()[i − 1]` is `Φ_i` and the last level is
/// the full system.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Filtration {
    levels: Vec<RootSubsystem>,
}

impl Filtration {
    /// Validates a chain of Levi subsystems ending in the full system.
    pub fn from_levels(rs: &RootSystem, levels: Vec<RootSubsystem>) -> Result<Self> {
        if levels.len() < 2 {
            return Err(Error::EmptyCoefficients);
        }
        for l in &levels {
            l.validate(rs)?;
            if !l.is_levi(rs) {
                return Err(Error::InvalidSubsystem("filtration level is not Levi".into()));
            }
        }
        if levels.windows(2).any(|w| !w[0].is_subset(&w[1])) {
            return Err(Error::NotIncluded);
        }
        if levels.last().unwrap().len() != rs.len() {
            return Err(Error::InvalidSubsystem("top level must be the full system".into()));
        }
        Ok(Self { levels })
    }

    pub fn levels(&self) -> &[RootSubsystem] {
        &self.levels
    }

    /// `p`, one less than the number of levels.
    pub fn p(&self) -> usize {
        self.levels.len() - 1
    }

    /// `Φ_i`, 1-based.
    pub fn level(&self, i: usize) -> &RootSubsystem {
        &self.levels[i - 1]
    }
}

pub fn filtration(q: &IrregularType) -> Result<Filtration> {
    let rs = q.rs();
    let profile = degree_profile(q);
    let levels = (1..=q.p() + 1)
        .map(|i| {
            let members = (0..rs.len()).filter(|&a| profile.degree(a) < i).collect();
            RootSubsystem::new(rs, members)
        })
        .collect::<Result<Vec<_>>>()?;
    // each level is an intersection of annihilators, hence Levi
    for (i, l) in levels.iter().enumerate() {
        let expected = (i + 1..=q.p())
            .map(|j| levi_of_element(rs, &q.coefficients[j - 1]))
            .try_fold(RootSubsystem::full(rs), |acc, l| l.map(|l| acc.intersection(&l)))?;
        debug_assert_eq!(&expected, l);
        if !l.is_levi(rs) {
            return Err(Error::InvalidSubsystem(format!("level {} is not Levi", i + 1)));
        }
    }
    Filtration::from_levels(rs, levels)
}

/// Whether `q2` lies in the admissible deformation space of `q`: identical
/// degree profiles after padding to a common `p`.
pub fn admissible_equivalent(q: &IrregularType, q2: &IrregularType) -> Result<bool> {
    if q.rs() != q2.rs() {
        return Err(Error::RootSystemMismatch(q.rs().label(), q2.rs().label()));
    }
    let p = q.p().max(q2.p());
    Ok(degree_profile(&q.padded(p)) == degree_profile(&q2.padded(p)))
}
