//! Property suites over exhaustive and random inputs, shared by the
//! acceptance harness and the `selftest` command.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::braid::{
    braids_equal, cabled_group_generators, gamma, leaf_blocks, linking_matrix, standard_generator,
    BraidWord,
};
use crate::fission::{
    decomposition_from_tree, filtration, level_factors, Factor, FissionTree, GroupDecomposition,
    IrregularType,
};
use crate::rootsys::{levi_representatives, CartanElement, Family, RootSystem};
use crate::{stokes, Rational, Result};

const KEPT_FAILURES: usize = 20;

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub cases: usize,
    pub failure_count: usize,
    /// The first few failures, described.
    pub failures: Vec<String>,
    #[serde(serialize_with = "as_millis")]
    pub elapsed: Duration,
}

fn as_millis<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u128(d.as_millis())
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        Self {
            name: name.into(),
            cases: 0,
            failure_count: 0,
            failures: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0 && self.cases > 0
    }

    fn fail(&mut self, what: String) {
        self.failure_count += 1;
        if self.failures.len() < KEPT_FAILURES {
            self.failures.push(what);
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.fail(what());
        }
    }

    fn finish(mut self, start: Instant) -> Self {
        self.elapsed = start.elapsed();
        self
    }
}

fn describe(q: &IrregularType) -> String {
    let coeffs: Vec<String> = q
        .coefficients()
        .iter()
        .map(|c| format!("{c}"))
        .collect();
    format!("{} [{}]", q.rs().label(), coeffs.join("; "))
}

/// Root systems swept by the exhaustive and random suites.
pub fn classical_systems(max_rank: usize) -> Vec<RootSystem> {
    Family::CLASSICAL
        .iter()
        .flat_map(|&f| (1..=max_rank).filter_map(move |n| RootSystem::build(f, n).ok()))
        .collect()
}

/// A regular element: all roots nonzero on it.
pub fn regular_element(rs: &RootSystem) -> CartanElement {
    let n = rs.ambient_dim() as i64;
    let coords: Vec<Rational> = match rs.family() {
        Family::G2 => vec![1, 2, -3],
        Family::A => (0..n).map(|i| 2 * i - (n - 1)).collect(),
        _ => (1..=n).collect(),
    }
    .into_iter()
    .map(|x| Rational::from_integer(x.into()))
    .collect();
    CartanElement::new(rs, coords).expect("regular element is valid")
}

/// The single factor expected for a regular coefficient.
pub fn generic_factor(rs: &RootSystem) -> Factor {
    let n = rs.rank();
    match rs.family() {
        Family::A => Factor::PB(n + 1),
        Family::B | Family::C => Factor::PBBC(n),
        Family::D => Factor::PBBCD(0, n),
        Family::G2 => Factor::G2Braid,
    }
}

/// Regular coefficient at a single level `d ≤ p = 3`, every family of rank
/// ≤ `max_rank` plus `G₂`.
pub fn generic_sweep(max_rank: usize) -> SuiteReport {
    let start = Instant::now();
    let mut r = SuiteReport::new("generic sweep");
    let mut systems = classical_systems(max_rank);
    systems.push(RootSystem::build(Family::G2, 2).unwrap());
    for rs in &systems {
        for d in 1..=3 {
            let coefficients = (1..=3)
                .map(|i| if i == d { regular_element(rs) } else { CartanElement::zero(rs) })
                .collect();
            let q = IrregularType::new(rs, coefficients).unwrap();
            let expected = GroupDecomposition::from_factors([generic_factor(rs)]);
            match crate::fission::decompose_checked(&q) {
                Ok(got) => r.check(got == expected && got.nontrivial_count() == 1, || {
                    format!("{} at level {d}: got {got}, expected {expected}", rs.label())
                }),
                Err(e) => r.check(false, || format!("{} at level {d}: {e}", rs.label())),
            }
        }
    }
    r.finish(start)
}

/// Results of running both decomposition paths and the structural checks
/// over a set of irregular types.
#[derive(Debug, Clone, Serialize)]
pub struct OracleReport {
    pub agreement: SuiteReport,
    pub structural: SuiteReport,
    /// Distinct type-A trees met along the way, one per shape.
    #[serde(skip)]
    pub type_a_trees: Vec<FissionTree>,
}

struct Checker {
    agreement: SuiteReport,
    structural: SuiteReport,
    type_a_trees: Vec<FissionTree>,
    shapes: BTreeSet<Vec<(usize, Option<usize>)>>,
}

impl Checker {
    fn new(name: &str) -> Self {
        Self {
            agreement: SuiteReport::new(&format!("{name}: path agreement")),
            structural: SuiteReport::new(&format!("{name}: structural bounds")),
            type_a_trees: Vec::new(),
            shapes: BTreeSet::new(),
        }
    }

    fn run(&mut self, q: &IrregularType) {
        if let Err(e) = self.try_run(q) {
            self.agreement.check(false, || format!("{}: {e}", describe(q)));
        }
    }

    fn try_run(&mut self, q: &IrregularType) -> Result<()> {
        let rs = q.rs();
        let f = filtration(q)?;
        let levels = level_factors(rs, &f)?;
        let oracle = GroupDecomposition::from_factors(levels.iter().flatten().copied());
        if rs.family().is_classical() {
            let tree = FissionTree::from_filtration(rs, &f)?;
            let from_tree = decomposition_from_tree(&tree)?;
            self.agreement.check(from_tree == oracle, || {
                format!("{}: tree {from_tree} vs arrangements {oracle}", describe(q))
            });
            if rs.family() == Family::A {
                let shape = tree.nodes().iter().map(|n| (n.level, n.parent)).collect();
                if self.shapes.insert(shape) {
                    self.type_a_trees.push(tree);
                }
            }
        }

        let s = &mut self.structural;
        s.check(oracle.nontrivial_count() <= rs.rank(), || {
            format!("{}: {} nontrivial factors exceed the rank", describe(q), oracle.nontrivial_count())
        });
        for (i, factors) in levels.iter().enumerate() {
            let jump = f.levels()[i + 1].rank(rs) - f.levels()[i].rank(rs);
            let level = GroupDecomposition::from_factors(factors.iter().copied());
            match jump {
                0 => s.check(level.is_trivial(), || {
                    format!("{}: level {} has no rank jump but gives {level}", describe(q), i + 1)
                }),
                1 => s.check(level.is_infinite_cyclic(), || {
                    format!("{}: rank-one jump at level {} gives {level}", describe(q), i + 1)
                }),
                _ => {}
            }
        }
        if rs.rank() == 2 && rs.family() != Family::D {
            let full = GroupDecomposition::from_factors([generic_factor(rs)]).iso_normal_form();
            let z = GroupDecomposition::from_factors([Factor::PB(2)]);
            let allowed = [GroupDecomposition::trivial(), z.clone(), z.product(&z), full];
            let got = oracle.iso_normal_form();
            s.check(allowed.contains(&got), || format!("{}: rank-two result {oracle}", describe(q)));
        }
        Ok(())
    }

    fn finish(self, start: Instant) -> OracleReport {
        OracleReport {
            agreement: self.agreement.finish(start),
            structural: self.structural.finish(start),
            type_a_trees: self.type_a_trees,
        }
    }
}

/// Every filtration `Φ_1 ⊆ … ⊆ Φ_p ⊆ Φ` by Levi subsystems, `p ≤ max_p`,
/// for the classical systems of rank ≤ `max_rank`. Each chain is realized by
/// taking a representative element of `Φ_i` as `A_i`; the realized
/// filtration is checked against the chain before both paths run.
pub fn exhaustive_agreement(max_rank: usize, max_p: usize) -> OracleReport {
    let start = Instant::now();
    let mut c = Checker::new("exhaustive");
    for rs in classical_systems(max_rank) {
        let reps = levi_representatives(&rs);
        let within: Vec<Vec<usize>> = reps
            .iter()
            .map(|(outer, _)| (0..reps.len()).filter(|&k| reps[k].0.is_subset(outer)).collect())
            .collect();
        for p in 1..=max_p {
            // chains are built from the top: indices of Φ_p, Φ_{p−1}, …
            let mut stack: Vec<Vec<usize>> = (0..reps.len()).map(|k| vec![k]).collect();
            while let Some(chain) = stack.pop() {
                if chain.len() < p {
                    let last = *chain.last().unwrap();
                    for &k in &within[last] {
                        let mut next = chain.clone();
                        next.push(k);
                        stack.push(next);
                    }
                    continue;
                }
                let coefficients: Vec<CartanElement> = chain.iter().rev().map(|&k| reps[k].1.clone()).collect();
                let q = IrregularType::new(&rs, coefficients).unwrap();
                let realized = filtration(&q).map(|f| {
                    f.levels()[..p].iter().zip(chain.iter().rev()).all(|(l, &k)| *l == reps[k].0)
                });
                if !matches!(realized, Ok(true)) {
                    c.agreement.check(false, || format!("{}: chain not realized", describe(&q)));
                    continue;
                }
                c.run(&q);
            }
        }
    }
    c.finish(start)
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    let num: i64 = rng.gen_range(-4..=4);
    let den: i64 = rng.gen_range(1..=3);
    Rational::new(num.into(), den.into())
}

/// A random coefficient with many coincidences among the coordinates,
/// their negatives and zero, so that small Levi subsystems show up often.
fn random_coefficient(rs: &RootSystem, rng: &mut ChaCha8Rng) -> CartanElement {
    if rng.gen_bool(0.2) {
        return CartanElement::zero(rs);
    }
    let distinct = rng.gen_range(1..=rs.ambient_dim());
    let palette: Vec<Rational> = (0..distinct).map(|_| random_rational(rng)).collect();
    let coords = (0..rs.ambient_dim())
        .map(|_| {
            let x = palette.choose(rng).unwrap().clone();
            match rng.gen_range(0..6) {
                0 if rs.family().is_classical() && rs.family() != Family::A => -x,
                1 if rs.family() != Family::A => Rational::from_integer(0.into()),
                _ => x,
            }
        })
        .collect();
    CartanElement::projected(rs, coords).unwrap().0
}

pub fn random_irregular_type(rs: &RootSystem, max_p: usize, rng: &mut ChaCha8Rng) -> IrregularType {
    let p = rng.gen_range(1..=max_p);
    let coefficients = (0..p).map(|_| random_coefficient(rs, rng)).collect();
    IrregularType::new(rs, coefficients).unwrap()
}

/// `per_family` random irregular types for each classical family at rank
/// ≤ `max_rank` and for `G₂`, with `p ≤ max_p`.
pub fn random_agreement(per_family: usize, max_rank: usize, max_p: usize, seed: u64) -> OracleReport {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut c = Checker::new("random");
    for family in Family::ALL {
        let systems: Vec<RootSystem> =
            (1..=max_rank).filter_map(|n| RootSystem::build(family, n).ok()).collect();
        for _ in 0..per_family {
            let rs = systems.choose(&mut rng).unwrap();
            let q = random_irregular_type(rs, max_p, &mut rng);
            c.run(&q);
        }
    }
    c.finish(start)
}

/// A random pure braid of at most `max_len` letters, as a product of
/// standard generators and their inverses.
pub fn random_pure_braid(n: usize, max_len: usize, rng: &mut ChaCha8Rng) -> BraidWord {
    let mut w = BraidWord::identity(n);
    if n < 2 {
        return w;
    }
    let target = rng.gen_range(0..=max_len);
    loop {
        let i = rng.gen_range(1..n);
        let j = rng.gen_range(i + 1..=n);
        let mut g = standard_generator(n, i, j).unwrap();
        if rng.gen_bool(0.5) {
            g = g.inverse();
        }
        if w.len() + g.len() > target {
            return w;
        }
        w = w.then(&g).unwrap();
    }
}

/// A nontrivial pure braid: a standard generator, or a commutator of two
/// non-commuting ones when that leaves the linking numbers unchanged.
fn perturbation(n: usize, rng: &mut ChaCha8Rng) -> BraidWord {
    if n >= 3 && rng.gen_bool(0.5) {
        let i = rng.gen_range(1..=n - 2);
        let a = standard_generator(n, i, i + 1).unwrap();
        let b = standard_generator(n, i + 1, i + 2).unwrap();
        return a.then(&b).unwrap().then(&a.inverse()).unwrap().then(&b.inverse()).unwrap();
    }
    let i = rng.gen_range(1..n);
    standard_generator(n, i, rng.gen_range(i + 1..=n)).unwrap()
}

fn eq(a: &BraidWord, b: &BraidWord) -> bool {
    braids_equal(a, b).unwrap_or(false)
}

/// Operad laws on `tuples` random inputs and an injectivity falsification
/// search over `trials` perturbed pairs.
pub fn operad_suite(tuples: usize, trials: usize, seed: u64) -> SuiteReport {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut r = SuiteReport::new("braid operad");
    let rand_taus = |n: usize, rng: &mut ChaCha8Rng| -> Vec<BraidWord> {
        (0..n)
            .map(|_| {
                let k = rng.gen_range(1..=3);
                random_pure_braid(k, 10, rng)
            })
            .collect()
    };
    for _ in 0..tuples {
        let n = rng.gen_range(1..=5);
        let s1 = random_pure_braid(n, 10, &mut rng);
        let s2 = random_pure_braid(n, 10, &mut rng);
        let t1 = rand_taus(n, &mut rng);
        let t2: Vec<BraidWord> = t1
            .iter()
            .map(|t| random_pure_braid(t.strands(), 10, &mut rng))
            .collect();

        // homomorphism
        let prod_t: Vec<BraidWord> = t1.iter().zip(&t2).map(|(a, b)| a.then(b).unwrap()).collect();
        let lhs = gamma(&s1.then(&s2).unwrap(), &prod_t).unwrap();
        let rhs = gamma(&s1, &t1).unwrap().then(&gamma(&s2, &t2).unwrap()).unwrap();
        r.check(eq(&lhs, &rhs), || format!("homomorphism fails for {s1} | {s2}"));

        // unity
        let ones = vec![BraidWord::identity(1); n];
        r.check(eq(&gamma(&s1, &ones).unwrap(), &s1), || format!("right unit fails for {s1}"));
        for t in &t1 {
            let g = gamma(&BraidWord::identity(1), std::slice::from_ref(t)).unwrap();
            r.check(eq(&g, t), || format!("left unit fails for {t}"));
        }

        // associativity
        let rhos: Vec<Vec<BraidWord>> = t1.iter().map(|t| rand_taus(t.strands(), &mut rng)).collect();
        let flat: Vec<BraidWord> = rhos.iter().flatten().cloned().collect();
        let lhs = gamma(&gamma(&s1, &t1).unwrap(), &flat).unwrap();
        let inner: Vec<BraidWord> = t1.iter().zip(&rhos).map(|(t, rho)| gamma(t, rho).unwrap()).collect();
        let rhs = gamma(&s1, &inner).unwrap();
        r.check(eq(&lhs, &rhs), || format!("associativity fails for {s1}"));
    }

    for _ in 0..trials {
        let n = rng.gen_range(2..=4);
        let sigma = random_pure_braid(n, 8, &mut rng);
        let taus = rand_taus(n, &mut rng);
        let image = gamma(&sigma, &taus).unwrap();
        let (sigma2, taus2) = match rng.gen_range(0..=n) {
            0 => (sigma.then(&perturbation(n, &mut rng)).unwrap(), taus.clone()),
            k if taus[k - 1].strands() >= 2 => {
                let mut t = taus.clone();
                let pert = perturbation(t[k - 1].strands(), &mut rng);
                t[k - 1] = pert.then(&t[k - 1]).unwrap();
                (sigma.clone(), t)
            }
            _ => (sigma.then(&perturbation(n, &mut rng)).unwrap(), taus.clone()),
        };
        let image2 = gamma(&sigma2, &taus2).unwrap();
        r.check(!eq(&image, &image2), || {
            format!("distinct inputs {sigma} and {sigma2} share the image {image}")
        });
    }
    r.finish(start)
}

/// For each type-A tree: generator counts, commutation across nodes and
/// the linking block pattern.
pub fn cabled_consistency(trees: &[FissionTree]) -> SuiteReport {
    let start = Instant::now();
    let mut r = SuiteReport::new("cabled generators");
    for t in trees {
        let gens = match cabled_group_generators(t) {
            Ok(g) => g,
            Err(e) => {
                r.check(false, || format!("tree {:?}: {e}", t.level_sizes()));
                continue;
            }
        };
        let expected: usize = t
            .nodes()
            .iter()
            .map(|n| t.child_count(n.id))
            .filter(|&k| k >= 2)
            .map(|k| k * (k - 1) / 2)
            .sum();
        let total: usize = gens.iter().map(|g| g.generators.len()).sum();
        r.check(total == expected, || format!("tree {:?}: {total} generators, expected {expected}", t.level_sizes()));

        let leaves = t.leaves().len();
        for g in &gens {
            let blocks = leaf_blocks(t, g.node);
            for (i, j, w) in &g.generators {
                let ok = linking_matrix(w).is_ok_and(|m| {
                    (0..leaves).all(|u| {
                        (0..leaves).all(|v| {
                            let inside = (blocks[i - 1].contains(&u) && blocks[j - 1].contains(&v))
                                || (blocks[i - 1].contains(&v) && blocks[j - 1].contains(&u));
                            m.get(u, v) == inside as i64
                        })
                    })
                });
                r.check(ok, || format!("tree {:?}: node {} A_{i}{j} linking pattern", t.level_sizes(), g.node));
            }
        }
        for (a, ga) in gens.iter().enumerate() {
            for gb in &gens[a + 1..] {
                for (_, _, x) in &ga.generators {
                    for (_, _, y) in &gb.generators {
                        let commute = eq(&x.then(y).unwrap(), &y.then(x).unwrap());
                        r.check(commute, || {
                            format!("tree {:?}: nodes {} and {} do not commute", t.level_sizes(), ga.node, gb.node)
                        });
                    }
                }
            }
        }
    }
    r.finish(start)
}

pub fn stokes_suite(count: usize, seed: u64) -> SuiteReport {
    let start = Instant::now();
    let mut r = SuiteReport::new("stokes");
    let (passed, failures) = stokes::run_suite(count, seed);
    r.cases = passed + failures.len();
    for f in failures {
        r.fail(f.violations.join("; "));
    }
    r.finish(start)
}

/// All property suites with their default sizes.
pub fn run_all(seed: u64) -> Vec<SuiteReport> {
    let exhaustive = exhaustive_agreement(4, 3);
    let random = random_agreement(500, 6, 4, seed);
    let cabled = cabled_consistency(&exhaustive.type_a_trees);
    vec![
        generic_sweep(6),
        exhaustive.agreement,
        exhaustive.structural,
        random.agreement,
        random.structural,
        operad_suite(200, 10_000, seed),
        cabled,
        stokes_suite(100, seed),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        assert!(generic_sweep(3).passed());
        let ex = exhaustive_agreement(2, 2);
        assert!(ex.agreement.passed(), "{:?}", ex.agreement.failures);
        assert!(ex.structural.passed(), "{:?}", ex.structural.failures);
        assert!(!ex.type_a_trees.is_empty());
        assert!(cabled_consistency(&ex.type_a_trees).passed());
        let rnd = random_agreement(20, 4, 3, 9);
        assert!(rnd.agreement.passed(), "{:?}", rnd.agreement.failures);
        assert!(operad_suite(10, 50, 2).passed());
        assert!(stokes_suite(5, 3).passed());
    }

    #[test]
    fn random_pure_braids_are_pure_and_short() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..100 {
            let w = random_pure_braid(5, 10, &mut rng);
            assert!(w.is_pure() && w.len() <= 10);
        }
    }

    #[test]
    fn exhaustive_chain_counts() {
        // A1 has two Levi subsystems, so p levels give p + 1 chains
        let rs = RootSystem::build(Family::A, 1).unwrap();
        let reps = levi_representatives(&rs);
        assert_eq!(reps.len(), 2);
        let ex = exhaustive_agreement(1, 3);
        // A1, B1, C1: 2 Levis each, chains of length p number p + 1
        assert_eq!(ex.agreement.cases, 3 * (2 + 3 + 4));
    }
}
