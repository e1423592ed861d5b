//! `fintop`: command-line front end for finite topological spaces.
//!
//! Exit codes: 0 success or property true, 1 property false, 2 invalid input,
//! 3 size limit exceeded.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fintop::census::DEFAULT_CENSUS_LIMIT;
use fintop::enumerate::MAX_TOPOLOGY_POINTS;
use fintop::homeo::decide_homeomorphic;
use fintop::reflect::{reflect, reflect_pre_hausdorff};
use fintop::{
    axiom_profile, bell_number, census_with, example_space, integer_partition_count,
    pre_hausdorff_report, CensusOptions, FiniteSpace, SeparationProfile, SpaceDocument,
};
use serde_json::json;

const EXIT_TRUE: u8 = 0;
const EXIT_FALSE: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_LIMIT: u8 = 3;

/// Largest `n` accepted by `count bell`.
const MAX_BELL_N: usize = 500;
/// Largest `n` accepted by `count partitions`.
const MAX_PARTITIONS_N: usize = 10_000;

#[derive(Parser)]
#[command(
    name = "fintop",
    version,
    about = "Finite topological spaces and their separation axioms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report separation axioms of a space, or test a single one.
    Check {
        file: PathBuf,
        /// Test one axiom: t0, t1, t2, t01, t02 (alias preh), t12, regular,
        /// normal, zero_dim or sober.
        #[arg(long)]
        axiom: Option<String>,
        /// Emit one JSON document instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Reflect a space onto T0, T1, T2 or pre-Hausdorff spaces.
    Reflect {
        file: PathBuf,
        #[arg(long, value_enum)]
        axiom: ReflectAxiom,
        /// Write the reflected space here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print an exact count.
    Count {
        #[arg(value_enum)]
        kind: CountKind,
        #[arg(short = 'n')]
        n: usize,
    },
    /// Tally every topology on n labelled points by separation profile.
    Census {
        #[arg(short = 'n')]
        n: usize,
        /// Write the CSV here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads (default: available cores).
        #[arg(long)]
        workers: Option<usize>,
        /// Permit n = 7.
        #[arg(long)]
        allow_large: bool,
    },
    /// Decide whether two spaces are homeomorphic.
    Homeomorphic { a: PathBuf, b: PathBuf },
    /// Emit a named example space.
    Example {
        /// point, sierpinski, discrete:K, indiscrete:K or partition:0,1/2
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ReflectAxiom {
    T0,
    T1,
    T2,
    Preh,
}

#[derive(Clone, Copy, ValueEnum)]
enum CountKind {
    Bell,
    Partitions,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn invalid(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INVALID,
            message: message.into(),
        }
    }

    fn limit(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_LIMIT,
            message: message.into(),
        }
    }
}

impl From<fintop::Error> for Failure {
    fn from(e: fintop::Error) -> Self {
        match e {
            fintop::Error::SizeLimit { .. } => Failure::limit(e.to_string()),
            _ => Failure::invalid(e.to_string()),
        }
    }
}

type CmdResult = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Check { file, axiom, json } => cmd_check(&file, axiom.as_deref(), json),
        Command::Reflect { file, axiom, out } => cmd_reflect(&file, axiom, out.as_deref()),
        Command::Count { kind, n } => cmd_count(kind, n),
        Command::Census {
            n,
            out,
            workers,
            allow_large,
        } => cmd_census(n, out.as_deref(), workers, allow_large),
        Command::Homeomorphic { a, b } => cmd_homeomorphic(&a, &b),
        Command::Example { name, out } => cmd_example(&name, out.as_deref()),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("fintop: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn read_space(path: &Path) -> Result<FiniteSpace, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::invalid(format!("cannot read {}: {e}", path.display())))?;
    fintop::parse_space(&text).map_err(|e| {
        let f = Failure::from(e);
        Failure {
            message: format!("{}: {}", path.display(), f.message),
            ..f
        }
    })
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, format!("{text}\n"))
            .map_err(|e| Failure::invalid(format!("cannot write {}: {e}", path.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn verdict(value: bool) -> u8 {
    if value {
        EXIT_TRUE
    } else {
        EXIT_FALSE
    }
}

fn profile_json(p: &SeparationProfile) -> serde_json::Value {
    SeparationProfile::FIELDS
        .iter()
        .zip(p.values())
        .map(|(&k, v)| (k.to_string(), json!(v)))
        .collect::<serde_json::Map<_, _>>()
        .into()
}

fn cmd_check(path: &Path, axiom: Option<&str>, as_json: bool) -> CmdResult {
    let space = read_space(path)?;
    let profile = axiom_profile(&space);
    if let Some(name) = axiom {
        let value = profile
            .get(name)
            .ok_or_else(|| Failure::invalid(format!("unknown axiom `{name}`")))?;
        if as_json {
            println!("{}", json!({ "axiom": name, "value": value }));
        } else {
            println!("{value}");
        }
        return Ok(verdict(value));
    }

    let report = pre_hausdorff_report(&space);
    if as_json {
        let doc = json!({
            "points": space.n(),
            "profile": profile_json(&profile),
            "pre_hausdorff": {
                "by_definition": report.by_definition,
                "r0_closed": report.r0_closed,
                "r0_equals_diagonal_closure": report.r0_equals_diagonal_closure,
                "quotient_hausdorff": report.quotient_hausdorff,
                "r0_classes": report.r0.blocks().iter().map(|b| b.to_vec()).collect::<Vec<_>>(),
            },
        });
        println!("{doc}");
    } else {
        println!("points: {}", space.n());
        for (name, value) in SeparationProfile::FIELDS.iter().zip(profile.values()) {
            println!("{name}: {value}");
        }
        let optional = |v: Option<bool>| v.map_or("n/a".to_string(), |b| b.to_string());
        println!("pre-hausdorff by definition: {}", report.by_definition);
        println!("R0 closed in X*X: {}", optional(report.r0_closed));
        println!(
            "R0 equals closure of diagonal: {}",
            optional(report.r0_equals_diagonal_closure)
        );
        println!("X/R0 hausdorff: {}", report.quotient_hausdorff);
        println!("R0 classes: {}", report.r0);
    }
    if !report.consistent() {
        return Err(Failure::invalid(format!(
            "internal cross-check failed: {report:?}"
        )));
    }
    Ok(EXIT_TRUE)
}

fn cmd_reflect(path: &Path, axiom: ReflectAxiom, out: Option<&Path>) -> CmdResult {
    let space = read_space(path)?;
    let doc = match axiom {
        ReflectAxiom::Preh => SpaceDocument::from_space(&reflect_pre_hausdorff(&space)),
        ReflectAxiom::T0 | ReflectAxiom::T1 | ReflectAxiom::T2 => {
            let i = match axiom {
                ReflectAxiom::T0 => 0,
                ReflectAxiom::T1 => 1,
                _ => 2,
            };
            let (reflected, q) = reflect(&space, i)?;
            SpaceDocument::from_space(&reflected).with_projection(&q)
        }
    };
    let text = serde_json::to_string(&doc).expect("documents always serialize");
    emit(out, &text)?;
    let counts = format!("points: {} -> {}", space.n(), doc.points);
    if out.is_some() {
        println!("{counts}");
    } else {
        eprintln!("{counts}");
    }
    Ok(EXIT_TRUE)
}

fn cmd_count(kind: CountKind, n: usize) -> CmdResult {
    let (max, value) = match kind {
        CountKind::Bell => (MAX_BELL_N, bell_number as fn(usize) -> fintop::BigCount),
        CountKind::Partitions => (
            MAX_PARTITIONS_N,
            integer_partition_count as fn(usize) -> fintop::BigCount,
        ),
    };
    if n > max {
        return Err(Failure::invalid(format!("n = {n} is outside 0..={max}")));
    }
    println!("{}", value(n));
    Ok(EXIT_TRUE)
}

fn cmd_census(
    n: usize,
    out: Option<&Path>,
    workers: Option<usize>,
    allow_large: bool,
) -> CmdResult {
    if n > MAX_TOPOLOGY_POINTS {
        return Err(Failure::limit(format!(
            "census supports at most {MAX_TOPOLOGY_POINTS} points"
        )));
    }
    if n > DEFAULT_CENSUS_LIMIT && !allow_large {
        return Err(Failure::limit(format!("n = {n} needs --allow-large")));
    }
    if workers == Some(0) {
        return Err(Failure::invalid("--workers must be at least 1"));
    }
    let report_progress = |done: usize, total: usize| {
        if done * 10 / total != (done - 1) * 10 / total || done == total {
            eprint!("\rcensus: {done}/{total} pieces");
            if done == total {
                eprintln!();
            }
            let _ = std::io::stderr().flush();
        }
    };
    let options = CensusOptions {
        workers,
        allow_large,
        progress: if n >= DEFAULT_CENSUS_LIMIT {
            Some(&report_progress)
        } else {
            None
        },
    };
    let table = census_with(n, &options)?;
    emit(out, table.to_csv().trim_end())?;

    let pre_hausdorff = table.count_where(|p| p.t02);
    let bell_ok = bell_number(n) == pre_hausdorff;
    let summary = format!(
        "total={} preH={} bell_check={}",
        table.total,
        pre_hausdorff,
        if bell_ok { "ok" } else { "FAILED" }
    );
    if out.is_some() {
        println!("{summary}");
    } else {
        eprintln!("{summary}");
    }
    Ok(verdict(bell_ok))
}

fn cmd_homeomorphic(a: &Path, b: &Path) -> CmdResult {
    let sa = read_space(a)?;
    let sb = read_space(b)?;
    let (same, path) = decide_homeomorphic(&sa, &sb)?;
    println!("{same}");
    println!("path={}", path.as_str());
    Ok(verdict(same))
}

fn cmd_example(name: &str, out: Option<&Path>) -> CmdResult {
    let space = example_space(name)?;
    emit(out, &fintop::space_to_json(&space))?;
    Ok(EXIT_TRUE)
}
