//! Acceptance criteria 1–9, one PASS/FAIL line each.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use wmcg_core::braid::{braids_equal, cabled_group_generators, gamma, linking_matrix, BraidWord};
use wmcg_core::fission::{decompose_checked, fission_tree, FissionTree, IrregularType};
use wmcg_core::rootsys::{restricted_arrangement, ArrangementKind, Family, RootSubsystem, RootSystem};
use wmcg_core::suites::{self, SuiteReport};

const SEED: u64 = 20_240_601;

struct Outcome {
    passed: bool,
    detail: String,
}

fn ok(detail: impl Into<String>) -> Outcome {
    Outcome { passed: true, detail: detail.into() }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome { passed: false, detail: detail.into() }
}

fn from_reports(reports: &[&SuiteReport]) -> Outcome {
    let cases: usize = reports.iter().map(|r| r.cases).sum();
    let failures: Vec<String> = reports
        .iter()
        .flat_map(|r| r.failures.iter().take(3).map(move |f| format!("{}: {f}", r.name)))
        .collect();
    if reports.iter().all(|r| r.passed()) {
        ok(format!("{cases} cases"))
    } else {
        let total: usize = reports.iter().map(|r| r.failure_count).sum();
        fail(format!("{total} of {cases} cases failed; {}", failures.join(" | ")))
    }
}

fn within(outcome: Outcome, elapsed: Duration, budget: Duration) -> Outcome {
    if outcome.passed && elapsed > budget {
        return fail(format!("{} but took {elapsed:.2?}, budget {budget:.2?}", outcome.detail));
    }
    outcome
}

fn a(n: usize) -> RootSystem {
    RootSystem::build(Family::A, n).unwrap()
}

fn tree_and_string(q: &IrregularType) -> Result<(FissionTree, String), String> {
    let t = fission_tree(q).map_err(|e| e.to_string())?;
    let d = decompose_checked(q).map_err(|e| e.to_string())?;
    Ok((t, d.to_string()))
}

fn criterion_1() -> Outcome {
    let q = IrregularType::from_ints(&a(2), &[&[-1, 1, 0], &[-1, -1, 2]]).unwrap();
    match tree_and_string(&q) {
        Ok((t, s)) if t.nodes().len() == 6 && t.level_sizes() == [3, 2, 1] && s == "PB_2 x PB_2" => {
            ok(format!("6 nodes, levels 3/2/1, {s}"))
        }
        Ok((t, s)) => fail(format!("{} nodes, levels {:?}, {s}", t.nodes().len(), t.level_sizes())),
        Err(e) => fail(e),
    }
}

const ALPHA1: [i64; 9] = [4, 3, 2, 1, 0, -1, -2, -3, -4];
const ALPHA2: [i64; 9] = [4, 4, 3, 2, 1, 0, -3, -4, -7];

/// Name, coefficient rows, tree height and level sizes.
type Presentation<'a> = (&'a str, Vec<&'a [i64]>, usize, Vec<usize>);

fn criterion_2() -> Outcome {
    let cases: [Presentation; 3] = [
        ("I", vec![&ALPHA1, &ALPHA2, &[2, 2, 1, 1, 1, 0, 0, 0, -7]], 3, vec![9, 8, 4, 1]),
        ("II", vec![&ALPHA1, &[4, 1, 1, 0, 0, 0, -2, -2, -2]], 2, vec![9, 4, 1]),
        (
            "III",
            vec![&ALPHA1, &ALPHA2, &[2, 2, 2, 2, 1, 0, -3, -3, -3], &[1, 1, 1, 1, 1, 1, 0, -2, -4]],
            4,
            vec![9, 8, 6, 4, 1],
        ),
    ];
    let mut details = Vec::new();
    for (name, rows, height, sizes) in cases {
        let start = Instant::now();
        let q = IrregularType::from_ints(&a(8), &rows).unwrap();
        let (t, s) = match tree_and_string(&q) {
            Ok(x) => x,
            Err(e) => return fail(format!("Q^{name}: {e}")),
        };
        let elapsed = start.elapsed();
        if s != "PB_2 x PB_3^2 x PB_4" || t.height() != height || t.level_sizes() != sizes {
            return fail(format!("Q^{name}: {s}, height {}, levels {:?}", t.height(), t.level_sizes()));
        }
        if elapsed > Duration::from_secs(1) {
            return fail(format!("Q^{name} took {elapsed:.2?}"));
        }
        details.push(format!("Q^{name} height {height}"));
    }
    ok(format!("{}; all PB_2 x PB_3^2 x PB_4", details.join(", ")))
}

/// Restrictions of `roots` to the span of `kernel`, primitive with a
/// positive leading entry, zero restrictions dropped.
fn restrict(roots: &[Vec<i64>], kernel: &[Vec<i64>]) -> BTreeSet<Vec<i64>> {
    fn gcd(a: i64, b: i64) -> i64 {
        if b == 0 { a.abs() } else { gcd(b, a % b) }
    }
    roots
        .iter()
        .filter_map(|r| {
            let mut h: Vec<i64> = kernel.iter().map(|k| k.iter().zip(r).map(|(x, y)| x * y).sum()).collect();
            let g = h.iter().fold(0, |acc, &x| gcd(acc, x));
            if g == 0 {
                return None;
            }
            let lead = *h.iter().find(|&&x| x != 0).unwrap();
            let s = lead.signum() * g;
            h.iter_mut().for_each(|x| *x /= s);
            Some(h)
        })
        .collect()
}

fn d_roots(n: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut v = vec![0; n];
                v[i] = si;
                v[j] = sj;
                out.push(v);
            }
        }
    }
    out
}

fn exotic_case(
    n: usize,
    inner: &[Vec<i64>],
    kernel: Vec<Vec<i64>>,
    expected: &[[i64; 2]],
    kind: ArrangementKind,
) -> Result<String, String> {
    let rs = RootSystem::build(Family::D, n).unwrap();
    let inner_sub = RootSubsystem::from_covectors(&rs, inner).map_err(|e| e.to_string())?;
    let outer_roots: Vec<Vec<i64>> = d_roots(n)
        .into_iter()
        .filter(|r| !inner.contains(r) && !inner.contains(&r.iter().map(|x| -x).collect()))
        .collect();
    let brute = restrict(&outer_roots, &kernel);
    let frozen: BTreeSet<Vec<i64>> = expected.iter().map(|h| h.to_vec()).collect();
    if brute != frozen {
        return Err(format!("D{n}: brute-force hyperplanes {brute:?}"));
    }
    let arr = restricted_arrangement(&rs, &inner_sub, &RootSubsystem::full(&rs)).map_err(|e| e.to_string())?;
    let mut lib_kernel = arr.kernel.clone();
    lib_kernel.sort();
    let mut sorted = kernel.clone();
    sorted.sort();
    if lib_kernel != sorted {
        return Err(format!("D{n}: kernel {:?}", arr.kernel));
    }
    // the library's hyperplanes are in its own kernel coordinates
    let lib: BTreeSet<Vec<i64>> = restrict(&arr.raw_hyperplanes, &[vec![1, 0], vec![0, 1]]);
    let relabelled = restrict(&outer_roots, &arr.kernel);
    if lib != relabelled || arr.kind() != Some(kind) {
        return Err(format!("D{n}: library gives {:?} with {:?}", arr.raw_hyperplanes, arr.kinds()));
    }
    Ok(format!("D{n} {kind} with {} hyperplanes", brute.len()))
}

fn criterion_6() -> Outcome {
    let d3 = exotic_case(
        3,
        &[vec![1, -1, 0]],
        vec![vec![1, 1, 0], vec![0, 0, 1]],
        &[[1, 0], [1, 1], [1, -1]],
        ArrangementKind::Exotic(1, 1),
    );
    let d4 = exotic_case(
        4,
        &[vec![1, -1, 0, 0], vec![0, 0, 1, -1]],
        vec![vec![1, 1, 0, 0], vec![0, 0, 1, 1]],
        &[[1, 0], [0, 1], [1, 1], [1, -1]],
        ArrangementKind::TypeBC(2),
    );
    let rs = RootSystem::build(Family::D, 3).unwrap();
    let q = IrregularType::from_ints(&rs, &[&[1, 1, 0]]).unwrap();
    let annotated = decompose_checked(&q).map(|d| d.to_string());
    match (d3, d4, annotated) {
        (Ok(x), Ok(y), Ok(s)) if s == "PB_BCD(1,1) [~ PB_3]" => ok(format!("{x}; {y}; {s}")),
        (Ok(_), Ok(_), s) => fail(format!("D3 exotic string {s:?}")),
        (Err(e), _, _) | (_, Err(e), _) => fail(e),
    }
}

fn criterion_7() -> Outcome {
    let w = |n: usize, s: &str| BraidWord::parse(n, s).unwrap();
    let fig = w(3, "s1^-1 s1^-1 s2 s1 s1 s2");
    let g = gamma(&w(2, "s1 s1"), &[w(2, "s1^-1 s1^-1"), BraidWord::identity(1)]).unwrap();
    if !braids_equal(&g, &fig).unwrap() {
        return fail(format!("gamma gives {g}"));
    }
    let m = linking_matrix(&g).unwrap();
    if (m.get(0, 1), m.get(0, 2), m.get(1, 2)) != (-1, 1, 1) {
        return fail(format!("linking matrix {:?}", m.rows()));
    }
    let r = suites::operad_suite(200, 10_000, SEED);
    from_reports(&[&r])
}

fn criterion_8(trees: &[FissionTree]) -> Outcome {
    let q = IrregularType::from_ints(&a(2), &[&[-1, 1, 0], &[-1, -1, 2]]).unwrap();
    let sl3 = cabled_group_generators(&fission_tree(&q).unwrap()).unwrap();
    let words: Vec<String> = sl3.iter().flat_map(|g| g.generators.iter().map(|x| x.2.to_string())).collect();
    if words.len() != 2 || !words.iter().any(|w| w == "s1 s1") {
        return fail(format!("sl3 generators {words:?}"));
    }
    let r = suites::cabled_consistency(trees);
    let out = from_reports(&[&r]);
    if out.passed {
        ok(format!("{} trees, {}", trees.len(), out.detail))
    } else {
        out
    }
}

fn main() {
    let mut all_passed = true;
    let mut report = |n: usize, title: &str, run: &mut dyn FnMut() -> Outcome, budget: Duration| {
        let start = Instant::now();
        let out = run();
        let elapsed = start.elapsed();
        let out = within(out, elapsed, budget);
        all_passed &= out.passed;
        println!(
            "{} criterion {n}: {title} ({:.2?}) {}",
            if out.passed { "PASS" } else { "FAIL" },
            elapsed,
            out.detail
        );
    };
    let secs = Duration::from_secs;

    report(1, "sl3 example", &mut criterion_1, secs(1));
    report(2, "three presentations", &mut criterion_2, secs(3));
    report(3, "generic sweep", &mut || from_reports(&[&suites::generic_sweep(6)]), secs(10));

    let mut exhaustive = None;
    let mut random = None;
    report(
        4,
        "path agreement",
        &mut || {
            let ex = suites::exhaustive_agreement(4, 3);
            let rnd = suites::random_agreement(500, 6, 4, SEED);
            let out = from_reports(&[&ex.agreement, &rnd.agreement]);
            exhaustive = Some(ex);
            random = Some(rnd);
            out
        },
        secs(300),
    );
    let (ex, rnd) = (exhaustive.unwrap(), random.unwrap());
    report(
        5,
        "structural bounds",
        &mut || {
            let mut out = from_reports(&[&ex.structural, &rnd.structural]);
            out.detail.push_str(" from the criterion 4 inputs");
            out
        },
        secs(300),
    );
    report(6, "exotic type D", &mut criterion_6, secs(1));
    report(7, "braid operad", &mut criterion_7, secs(120));
    report(8, "cabled generators", &mut || criterion_8(&ex.type_a_trees), secs(60));
    report(9, "stokes", &mut || from_reports(&[&suites::stokes_suite(100, SEED)]), secs(30));

    if !all_passed {
        std::process::exit(1);
    }
}
