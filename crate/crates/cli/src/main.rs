use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use wmcg_core::braid::cabled_group_generators;
use wmcg_core::fission::{
    decompose_checked, decomposition_via_arrangements, fission_tree, group_decomposition,
    GroupDecomposition,
};
use wmcg_core::io::{emit_tree_dot, emit_tree_json, parse_input_file, ParsedInput};
use wmcg_core::{suites, Error};

/// Fission trees and pure local wild mapping class groups of irregular types.
#[derive(Parser)]
#[command(name = "wmcg", version)]
struct Cli {
    /// Print machine-readable JSON, including errors.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Fission tree and group decomposition of an input file.
    Decompose {
        input: PathBuf,
        /// Use only the restricted-arrangement path.
        #[arg(long, conflicts_with = "check")]
        oracle: bool,
        /// Run the tree and arrangement paths and require agreement.
        #[arg(long)]
        check: bool,
    },
    /// Emit the fission tree of one marked point.
    Tree {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = TreeFormat::Json)]
        format: TreeFormat,
        /// Marked point, counted from 1.
        #[arg(long, default_value_t = 1)]
        point: usize,
    },
    /// Pure braid generators per tree node (type A only).
    Cable {
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        point: usize,
    },
    /// Check the braid actions on random Stokes data.
    StokesVerify {
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Run the property suites.
    Selftest {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Smaller inputs for a fast smoke run.
        #[arg(long)]
        quick: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TreeFormat {
    Json,
    Dot,
}

enum Failure {
    Input(Error),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_input_error() {
            Failure::Input(e)
        } else {
            Failure::Check(e.to_string())
        }
    }
}

type Outcome = Result<(), Failure>;

fn load(path: &Path, json_mode: bool) -> Result<ParsedInput, Failure> {
    let input = parse_input_file(path)?;
    if !json_mode {
        for w in &input.warnings {
            eprintln!("warning: {w}");
        }
    }
    Ok(input)
}

fn point(input: &ParsedInput, k: usize) -> Result<&wmcg_core::fission::IrregularType, Failure> {
    input.points.get(k.wrapping_sub(1)).ok_or_else(|| {
        Failure::Input(Error::Parse {
            context: "--point".into(),
            message: format!("point {k} requested, the input has {}", input.points.len()),
        })
    })
}

fn decompose(path: &Path, oracle: bool, check: bool, json_mode: bool) -> Outcome {
    let input = load(path, json_mode)?;
    let mut total = GroupDecomposition::trivial();
    let mut points = Vec::new();
    for (k, q) in input.points.iter().enumerate() {
        let d = if check {
            decompose_checked(q)?
        } else if oracle {
            decomposition_via_arrangements(q)?
        } else {
            group_decomposition(q)?
        };
        let tree = if q.rs().family().is_classical() {
            Some(fission_tree(q)?)
        } else {
            None
        };
        if !json_mode {
            let sizes = tree
                .as_ref()
                .map(|t| format!("{:?}", t.level_sizes()))
                .unwrap_or_else(|| "none".into());
            println!("# point {}: {}, p = {}, tree level sizes {sizes}", k + 1, q.rs().label(), q.p());
            if input.points.len() > 1 {
                println!("# point {} group: {d}", k + 1);
            }
        }
        points.push(json!({
            "root_system": q.rs().label(),
            "p": q.p(),
            "level_sizes": tree.as_ref().map(|t| t.level_sizes()),
            "decomposition": d.to_string(),
        }));
        total = total.product(&d);
    }
    if json_mode {
        let doc = json!({
            "points": points,
            "decomposition": total.to_string(),
            "checked": check,
            "warnings": input.warnings,
        });
        println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    } else {
        println!("{total}");
    }
    Ok(())
}

fn tree(path: &Path, format: TreeFormat, k: usize, json_mode: bool) -> Outcome {
    let input = load(path, json_mode)?;
    let t = fission_tree(point(&input, k)?)?;
    match format {
        TreeFormat::Json => println!("{}", emit_tree_json(&t)),
        TreeFormat::Dot => print!("{}", emit_tree_dot(&t)),
    }
    Ok(())
}

fn cable(path: &Path, k: usize, json_mode: bool) -> Outcome {
    let input = load(path, json_mode)?;
    let t = fission_tree(point(&input, k)?)?;
    let gens = cabled_group_generators(&t)?;
    if json_mode {
        let nodes: Vec<Value> = gens
            .iter()
            .map(|g| {
                json!({
                    "node": g.node,
                    "level": g.level,
                    "children": g.children,
                    "generators": g.generators.iter().map(|(i, j, w)| json!({
                        "i": i, "j": j, "word": w.to_string()
                    })).collect::<Vec<_>>(),
                })
            })
            .collect();
        let doc = json!({ "strands": t.leaves().len(), "nodes": nodes });
        println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    } else {
        println!("# {} strands", t.leaves().len());
        for g in &gens {
            println!("node {} (level {}, {} children)", g.node, g.level, g.children);
            for (i, j, w) in &g.generators {
                println!("  A_{i},{j}: {w}");
            }
        }
    }
    Ok(())
}

fn report_suites(reports: &[suites::SuiteReport], json_mode: bool) -> Outcome {
    if json_mode {
        println!("{}", serde_json::to_string_pretty(reports).unwrap());
    } else {
        for r in reports {
            println!(
                "{} {} ({} cases, {:.2?})",
                if r.passed() { "PASS" } else { "FAIL" },
                r.name,
                r.cases,
                r.elapsed
            );
            for f in &r.failures {
                println!("  {f}");
            }
        }
    }
    let failed: Vec<&str> = reports.iter().filter(|r| !r.passed()).map(|r| r.name.as_str()).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(format!("failed suites: {}", failed.join(", "))))
    }
}

fn selftest(seed: u64, quick: bool, json_mode: bool) -> Outcome {
    let reports = if quick {
        let ex = suites::exhaustive_agreement(3, 2);
        let rnd = suites::random_agreement(50, 4, 3, seed);
        let cabled = suites::cabled_consistency(&ex.type_a_trees);
        vec![
            suites::generic_sweep(4),
            ex.agreement,
            ex.structural,
            rnd.agreement,
            rnd.structural,
            suites::operad_suite(20, 200, seed),
            cabled,
            suites::stokes_suite(10, seed),
        ]
    } else {
        suites::run_all(seed)
    };
    report_suites(&reports, json_mode)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json_mode = cli.json;
    let outcome = match &cli.command {
        Command::Decompose { input, oracle, check } => decompose(input, *oracle, *check, json_mode),
        Command::Tree { input, format, point } => tree(input, *format, *point, json_mode),
        Command::Cable { input, point } => cable(input, *point, json_mode),
        Command::StokesVerify { count, seed } => {
            report_suites(&[suites::stokes_suite(*count, *seed)], json_mode)
        }
        Command::Selftest { seed, quick } => selftest(*seed, *quick, json_mode),
    };
    let (code, kind, message) = match outcome {
        Ok(()) => return ExitCode::SUCCESS,
        Err(Failure::Check(m)) => (1, "check_failure", m),
        Err(Failure::Input(e)) => (2, e.kind(), e.to_string()),
    };
    if json_mode {
        println!("{}", json!({ "error": { "kind": kind, "message": message, "exit_code": code } }));
    } else {
        eprintln!("error: {message}");
    }
    ExitCode::from(code)
}
