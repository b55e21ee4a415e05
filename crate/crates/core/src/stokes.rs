//! Braiding of SL₃ Stokes data for a two-level irregular type.
//!
//! A tuple `(h, B₁¹, B₃¹, B₁², B₂², B₃², B₄²)` of determinant-one matrices,
//! `h` diagonal, satisfies `h · B₃¹B₁¹ · B₄²B₃²B₂²B₁² = 1`. Two explicit
//! operations act on such tuples and are checked here in exact arithmetic.

use std::fmt;

use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::{Error, Rational, Result};

/// A 3×3 matrix over the rationals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat3([[Rational; 3]; 3]);

impl Mat3 {
    pub fn from_fn(f: impl Fn(usize, usize) -> Rational) -> Self {
        Mat3(std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))))
    }

    pub fn identity() -> Self {
        Self::from_fn(|i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    pub fn diag(d: [Rational; 3]) -> Self {
        Self::from_fn(|i, j| if i == j { d[i].clone() } else { Rational::zero() })
    }

    pub fn from_ints(rows: [[i64; 3]; 3]) -> Self {
        Self::from_fn(|i, j| Rational::from_integer(rows[i][j].into()))
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.0[i][j]
    }

    pub fn mul(&self, other: &Mat3) -> Mat3 {
        Self::from_fn(|i, j| {
            (0..3).fold(Rational::zero(), |acc, k| acc + &self.0[i][k] * &other.0[k][j])
        })
    }

    pub fn det(&self) -> Rational {
        let m = &self.0;
        &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
            - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
            + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
    }

    pub fn inverse(&self) -> Result<Mat3> {
        let det = self.det();
        if det.is_zero() {
            return Err(Error::Singular);
        }
        let m = &self.0;
        let minor = |r: usize, c: usize| {
            let rows: Vec<usize> = (0..3).filter(|&x| x != r).collect();
            let cols: Vec<usize> = (0..3).filter(|&x| x != c).collect();
            &m[rows[0]][cols[0]] * &m[rows[1]][cols[1]] - &m[rows[0]][cols[1]] * &m[rows[1]][cols[0]]
        };
        // adjugate: transpose of the cofactor matrix
        Ok(Self::from_fn(|i, j| {
            let c = minor(j, i);
            let c = if (i + j) % 2 == 0 { c } else { -c };
            c / &det
        }))
    }

    /// `g⁻¹ · self · g`.
    pub fn conj_by(&self, g: &Mat3) -> Result<Mat3> {
        Ok(g.inverse()?.mul(self).mul(g))
    }

    pub fn is_diagonal(&self) -> bool {
        (0..3).all(|i| (0..3).all(|j| i == j || self.0[i][j].is_zero()))
    }
}

impl fmt::Display for Mat3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .0
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "))
            .collect();
        write!(f, "[[{}]]", rows.join("], ["))
    }
}

/// Stokes data: `h`, level one `(B₁¹, B₃¹)` and level two `(B₁², …, B₄²)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StokesTuple {
    pub h: Mat3,
    pub level1: [Mat3; 2],
    pub level2: [Mat3; 4],
}

/// All entries of a tuple except `B₄²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialStokes {
    pub h: Mat3,
    pub level1: [Mat3; 2],
    pub level2: [Mat3; 3],
}

impl StokesTuple {
    pub fn identity() -> Self {
        Self {
            h: Mat3::identity(),
            level1: [Mat3::identity(), Mat3::identity()],
            level2: std::array::from_fn(|_| Mat3::identity()),
        }
    }

    fn entries(&self) -> impl Iterator<Item = &Mat3> {
        std::iter::once(&self.h).chain(&self.level1).chain(&self.level2)
    }

    /// `h · B₃¹B₁¹ · B₄²B₃²B₂²B₁²`.
    pub fn relation_product(&self) -> Mat3 {
        let [b11, b31] = &self.level1;
        let [b12, b22, b32, b42] = &self.level2;
        self.h.mul(b31).mul(b11).mul(b42).mul(b32).mul(b22).mul(b12)
    }

    pub fn relation_holds(&self) -> bool {
        self.relation_product() == Mat3::identity()
    }

    /// Every violated invariant, described.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.h.is_diagonal() {
            out.push(format!("h is not diagonal: {}", self.h));
        }
        for (k, m) in self.entries().enumerate() {
            if !m.det().is_one() {
                out.push(format!("entry {k} has determinant {}", m.det()));
            }
        }
        if !self.relation_holds() {
            out.push(format!("relation product is {}", self.relation_product()));
        }
        out
    }

    pub fn validate(&self) -> Result<()> {
        match self.violations().first() {
            None => Ok(()),
            Some(v) => Err(Error::InvalidStokes(v.clone())),
        }
    }

    /// Simultaneous conjugation `X ↦ d X d⁻¹` of every entry.
    pub fn conjugated(&self, d: &Mat3) -> Result<Self> {
        let dinv = d.inverse()?;
        let c = |m: &Mat3| d.mul(m).mul(&dinv);
        Ok(Self {
            h: c(&self.h),
            level1: [c(&self.level1[0]), c(&self.level1[1])],
            level2: std::array::from_fn(|k| c(&self.level2[k])),
        })
    }
}

/// Completes a tuple by solving the relation for `B₄²`.
pub fn solve_relation(partial: &PartialStokes) -> Result<StokesTuple> {
    if !partial.h.is_diagonal() {
        return Err(Error::InvalidStokes("h is not diagonal".into()));
    }
    let given = std::iter::once(&partial.h).chain(&partial.level1).chain(&partial.level2);
    for (k, m) in given.enumerate() {
        if !m.det().is_one() {
            return Err(Error::InvalidStokes(format!("entry {k} has determinant {}", m.det())));
        }
    }
    let [b11, b31] = &partial.level1;
    let [b12, b22, b32] = &partial.level2;
    let b42 = b11
        .inverse()?
        .mul(&b31.inverse()?)
        .mul(&partial.h.inverse()?)
        .mul(&b12.inverse()?)
        .mul(&b22.inverse()?)
        .mul(&b32.inverse()?);
    let t = StokesTuple {
        h: partial.h.clone(),
        level1: partial.level1.clone(),
        level2: [b12.clone(), b22.clone(), b32.clone(), b42],
    };
    debug_assert!(t.relation_holds());
    Ok(t)
}

/// `(h, B₁¹, B₃¹, B₃², B₄², h₁⁻¹B₁²h₁, h₁⁻¹B₂²h₁)` with `h₁ = hB₃¹B₁¹`.
pub fn act_sigma(t: &StokesTuple) -> Result<StokesTuple> {
    let [b11, b31] = &t.level1;
    let [b12, b22, b32, b42] = &t.level2;
    let h1 = t.h.mul(b31).mul(b11);
    Ok(StokesTuple {
        h: t.h.clone(),
        level1: t.level1.clone(),
        level2: [b32.clone(), b42.clone(), b12.conj_by(&h1)?, b22.conj_by(&h1)?],
    })
}

/// `(h, B₃¹, h⁻¹b₁h, b₁B_j²b₁⁻¹)` with `b₁ = B₁¹`.
pub fn act_tau1(t: &StokesTuple) -> Result<StokesTuple> {
    let [b1, b31] = &t.level1;
    let b1inv = b1.inverse()?;
    Ok(StokesTuple {
        h: t.h.clone(),
        level1: [b31.clone(), b1.conj_by(&t.h)?],
        level2: std::array::from_fn(|k| b1.mul(&t.level2[k]).mul(&b1inv)),
    })
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct StokesReport {
    pub relation: bool,
    pub sigma_preserves: bool,
    pub tau_preserves: bool,
    pub determinants_preserved: bool,
    pub actions_commute: bool,
    pub torus_equivariant: bool,
    pub violations: Vec<String>,
}

impl StokesReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks relation preservation, commutation of the two actions and
/// equivariance under conjugation by the torus element `d`.
pub fn verify_properties(t: &StokesTuple, d: &Mat3) -> StokesReport {
    let mut r = StokesReport::default();
    let input = t.violations();
    r.relation = input.is_empty();
    r.violations.extend(input.into_iter().map(|v| format!("input: {v}")));
    if !r.relation {
        return r;
    }
    let (Ok(s), Ok(u)) = (act_sigma(t), act_tau1(t)) else {
        r.violations.push("singular entry".into());
        return r;
    };
    let sv = s.violations();
    let uv = u.violations();
    r.sigma_preserves = s.relation_holds();
    r.tau_preserves = u.relation_holds();
    r.determinants_preserved = sv.iter().chain(&uv).all(|v| !v.contains("determinant"));
    r.violations.extend(sv.into_iter().map(|v| format!("sigma: {v}")));
    r.violations.extend(uv.into_iter().map(|v| format!("tau1: {v}")));

    let su = act_sigma(&u).ok();
    let us = act_tau1(&s).ok();
    r.actions_commute = su.is_some() && su == us;
    if !r.actions_commute {
        r.violations.push("sigma and tau1 do not commute".into());
    }

    let equivariant = |act: fn(&StokesTuple) -> Result<StokesTuple>| -> Result<bool> {
        Ok(act(&t.conjugated(d)?)? == act(t)?.conjugated(d)?)
    };
    r.torus_equivariant = equivariant(act_sigma).unwrap_or(false) && equivariant(act_tau1).unwrap_or(false);
    if !r.torus_equivariant {
        r.violations.push(format!("not equivariant under conjugation by {d}"));
    }
    r
}

fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    let num: i64 = rng.gen_range(-3..=3);
    let den: i64 = rng.gen_range(1..=3);
    Rational::new(num.into(), den.into())
}

fn nonzero_rational(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let x = small_rational(rng);
        if !x.is_zero() {
            return x;
        }
    }
}

/// `diag(a, b, 1/(ab))` with random nonzero rationals.
pub fn random_torus(rng: &mut ChaCha8Rng) -> Mat3 {
    let a = nonzero_rational(rng);
    let b = nonzero_rational(rng);
    let c = Rational::one() / (&a * &b);
    Mat3::diag([a, b, c])
}

fn random_unipotent(rng: &mut ChaCha8Rng, upper: bool) -> Mat3 {
    let vals: Vec<Rational> = (0..3).map(|_| small_rational(rng)).collect();
    Mat3::from_fn(|i, j| {
        if i == j {
            Rational::one()
        } else if (i < j) == upper {
            vals[i + j - 1].clone()
        } else {
            Rational::zero()
        }
    })
}

/// Random unipotent entries of alternating shape, completed by
/// [`solve_relation`].
pub fn random_tuple(rng: &mut ChaCha8Rng) -> StokesTuple {
    let partial = PartialStokes {
        h: random_torus(rng),
        level1: [random_unipotent(rng, true), random_unipotent(rng, false)],
        level2: [
            random_unipotent(rng, true),
            random_unipotent(rng, false),
            random_unipotent(rng, true),
        ],
    };
    solve_relation(&partial).expect("unipotent inputs are invertible")
}

/// Verifies `count` random tuples; the reports of failing tuples are kept.
pub fn run_suite(count: usize, seed: u64) -> (usize, Vec<StokesReport>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let mut passed = 0;
    for _ in 0..count {
        let t = random_tuple(&mut rng);
        let d = random_torus(&mut rng);
        let r = verify_properties(&t, &d);
        if r.passed() {
            passed += 1;
        } else {
            failures.push(r);
        }
    }
    (passed, failures)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn inverse_and_det() {
        let m = Mat3::from_ints([[2, 1, 0], [1, 1, 0], [0, 0, 1]]);
        assert!(m.det().is_one());
        assert_eq!(m.mul(&m.inverse().unwrap()), Mat3::identity());
        let s = Mat3::from_ints([[1, 2, 3], [2, 4, 6], [0, 0, 1]]);
        assert_eq!(s.inverse(), Err(Error::Singular));
    }

    #[test]
    fn identity_tuple() {
        let partial = PartialStokes {
            h: Mat3::identity(),
            level1: [Mat3::identity(), Mat3::identity()],
            level2: std::array::from_fn(|_| Mat3::identity()),
        };
        let t = solve_relation(&partial).unwrap();
        assert_eq!(t, StokesTuple::identity());
        assert_eq!(act_sigma(&t).unwrap(), t);
        assert_eq!(act_tau1(&t).unwrap(), t);
        assert!(verify_properties(&t, &Mat3::diag([q(2, 1), q(1, 3), q(3, 2)])).passed());
    }

    #[test]
    fn solve_with_explicit_torus() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let partial = PartialStokes {
            h: Mat3::diag([q(2, 1), q(1, 2), q(1, 1)]),
            level1: [random_unipotent(&mut rng, true), random_unipotent(&mut rng, false)],
            level2: [
                random_unipotent(&mut rng, true),
                random_unipotent(&mut rng, false),
                random_unipotent(&mut rng, true),
            ],
        };
        let t = solve_relation(&partial).unwrap();
        assert!(t.relation_holds());
        assert!(t.validate().is_ok());
    }

    #[test]
    fn solve_against_hand_product() {
        // h = 1 and B₃¹B₁¹ = [[1,1,0],[0,1,0],[0,0,1]] · [[1,0,0],[2,1,0],[0,0,1]];
        // with the other entries trivial, B₄² is the inverse of that product
        let b31 = Mat3::from_ints([[1, 1, 0], [0, 1, 0], [0, 0, 1]]);
        let b11 = Mat3::from_ints([[1, 0, 0], [2, 1, 0], [0, 0, 1]]);
        let partial = PartialStokes {
            h: Mat3::identity(),
            level1: [b11, b31],
            level2: std::array::from_fn(|_| Mat3::identity()),
        };
        let t = solve_relation(&partial).unwrap();
        // product is [[3,1,0],[2,1,0],[0,0,1]], whose inverse is [[1,-1,0],[-2,3,0],[0,0,1]]
        assert_eq!(t.level2[3], Mat3::from_ints([[1, -1, 0], [-2, 3, 0], [0, 0, 1]]));
    }

    #[test]
    fn tau_with_trivial_b1_swaps_level_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let partial = PartialStokes {
            h: random_torus(&mut rng),
            level1: [Mat3::identity(), random_unipotent(&mut rng, false)],
            level2: [
                random_unipotent(&mut rng, true),
                random_unipotent(&mut rng, false),
                random_unipotent(&mut rng, true),
            ],
        };
        let t = solve_relation(&partial).unwrap();
        let u = act_tau1(&t).unwrap();
        assert_eq!(u.level1[0], t.level1[1]);
        assert_eq!(u.level1[1], Mat3::identity());
        assert_eq!(u.level2, t.level2);
    }

    #[test]
    fn sigma_squared_conjugates_level_two_by_h1() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let t = random_tuple(&mut rng);
        let s2 = act_sigma(&act_sigma(&t).unwrap()).unwrap();
        let h1 = t.h.mul(&t.level1[1]).mul(&t.level1[0]);
        for k in 0..4 {
            assert_eq!(s2.level2[k], t.level2[k].conj_by(&h1).unwrap());
        }
        assert_eq!(s2.level1, t.level1);
    }

    #[test]
    fn random_tuples_pass() {
        let (passed, failures) = run_suite(20, 1);
        assert_eq!(passed, 20, "{failures:?}");
    }

    #[test]
    fn corrupted_tuple_is_flagged() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut t = random_tuple(&mut rng);
        t.level2[0] = t.level2[0].mul(&Mat3::from_ints([[1, 1, 0], [0, 1, 0], [0, 0, 1]]));
        let r = verify_properties(&t, &random_torus(&mut rng));
        assert!(!r.relation);
        assert!(!r.passed());
        assert!(r.violations.iter().any(|v| v.contains("relation")));
    }
}
