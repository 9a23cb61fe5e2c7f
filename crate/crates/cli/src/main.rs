use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ramify_core::analysis::{analyze, analyze_catalog, Analysis};
use ramify_core::cdvf::PrecisionPolicy;
use ramify_core::suites::{run, CheckItem, Status, Suite};
use ramify_core::{catalog, describe, report, Error};

#[derive(Parser)]
#[command(name = "ramify", version, about = "Ramification invariants of Galois p-extensions of complete discrete valuation fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Precision {
    /// Working precision (series window and p-adic digits).
    #[arg(long, env = "RAMIFY_PRECISION", value_parser = clap::value_parser!(i64).range(1..=4096))]
    precision: Option<i64>,
}

impl Precision {
    fn policy(self) -> PrecisionPolicy {
        self.precision.map_or_else(PrecisionPolicy::default, PrecisionPolicy::uniform)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute the full report for an extension description.
    Report {
        file: PathBuf,
        #[command(flatten)]
        precision: Precision,
        /// JSON output (the default).
        #[arg(long, conflicts_with = "table")]
        json: bool,
        /// Plain-text summary.
        #[arg(long)]
        table: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run an invariant suite on a description or on the whole catalog.
    Check {
        #[arg(required_unless_present = "catalog", conflicts_with = "catalog")]
        file: Option<PathBuf>,
        #[arg(long)]
        catalog: bool,
        #[arg(long, default_value = "all")]
        suite: String,
        #[command(flatten)]
        precision: Precision,
    },
    /// List the shipped examples or print one description.
    Catalog {
        #[arg(long, conflicts_with = "emit")]
        list: bool,
        #[arg(long)]
        emit: Option<String>,
    },
}

/// Exit 2 for precision loss, 1 for everything else.
fn fail(err: &Error, policy: Option<PrecisionPolicy>) -> ExitCode {
    match err {
        Error::PrecisionExhausted(_) => {
            eprintln!("error: {err}");
            if let Some(p) = policy {
                eprintln!("hint: retry with a larger --precision (currently {})", p.series_window.max(p.padic_digits));
            }
            ExitCode::from(2)
        }
        Error::Invalid { field, msg } => {
            eprintln!("error: invalid input at {field}: {msg}");
            ExitCode::from(1)
        }
        _ => {
            eprintln!("error: {err} ({})", kind(err));
            ExitCode::from(1)
        }
    }
}

/// Variant name of an error, for diagnostics.
fn kind(err: &Error) -> String {
    let dbg = format!("{err:?}");
    dbg.split(['(', ' ', '{']).next().unwrap_or_default().to_string()
}

fn load(path: &Path, policy: PrecisionPolicy) -> Result<(serde_json::Value, Analysis), Error> {
    let text = fs::read_to_string(path).map_err(|e| Error::invalid(path.display().to_string(), e.to_string()))?;
    let d = describe::parse_str(&text, policy)?;
    let a = analyze(d.build()?)?;
    Ok((d.doc, a))
}

fn write_out(text: &str, out: Option<&Path>) -> Result<(), Error> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Error::invalid(p.display().to_string(), e.to_string())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_report(file: &Path, policy: PrecisionPolicy, table: bool, out: Option<&Path>) -> ExitCode {
    let (doc, a) = match load(file, policy) {
        Ok(x) => x,
        Err(e) => return fail(&e, Some(policy)),
    };
    let document = report::document(&a, &doc, &policy);
    let text = if table { report::table(&document) } else { report::to_text(&document) };
    match write_out(&text, out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => fail(&e, None),
    }
}

fn print_items(extension: &str, items: &[CheckItem]) -> usize {
    let mut failures = 0;
    for it in items {
        let tag = match it.status {
            Status::Pass => "PASS",
            Status::Fail => {
                failures += 1;
                "FAIL"
            }
            Status::ExpectedStrict => "STRICT",
        };
        let slack = it.slack.map(|s| format!("\tslack={s}")).unwrap_or_default();
        println!("{tag}\t{extension}\t{}\texpected={}\tgot={}{slack}", it.key(), it.expected, it.got);
    }
    failures
}

fn cmd_check(file: Option<&Path>, use_catalog: bool, suite: &str, policy: PrecisionPolicy) -> ExitCode {
    let suite: Suite = match suite.parse() {
        Ok(s) => s,
        Err(e) => return fail(&e, None),
    };
    let results: Vec<(String, Result<Analysis, Error>)> = if use_catalog {
        analyze_catalog(policy).into_iter().map(|(n, r)| (n.to_string(), r)).collect()
    } else {
        let path = file.expect("clap requires a file without --catalog");
        let r = load(path, policy);
        let name = match &r {
            Ok((doc, _)) => doc.get("name").and_then(|v| v.as_str()).map(str::to_string),
            Err(_) => None,
        };
        vec![(name.unwrap_or_else(|| path.display().to_string()), r.map(|x| x.1))]
    };
    let (mut checks, mut failures, mut precision) = (0, 0, false);
    for (name, r) in &results {
        match r {
            Ok(a) => {
                let items = run(suite, a);
                checks += items.len();
                failures += print_items(name, &items);
            }
            Err(e) => {
                precision |= e.is_precision();
                failures += 1;
                println!("FAIL\t{name}\tanalysis\texpected=a report\tgot={e}");
            }
        }
    }
    println!("suite {suite}: {checks} checks on {} extensions, {failures} failures", results.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else if precision {
        eprintln!("hint: retry with a larger --precision");
        ExitCode::from(2)
    } else {
        ExitCode::from(1)
    }
}

fn cmd_catalog(list: bool, emit: Option<&str>) -> ExitCode {
    match (list, emit) {
        (_, Some(name)) => match catalog::emit(name) {
            Ok(text) => {
                print!("{text}");
                ExitCode::SUCCESS
            }
            Err(e) => fail(&e, None),
        },
        _ => {
            for e in catalog::entries() {
                println!("{:<18} {}", e.name, e.summary);
            }
            ExitCode::SUCCESS
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Report { file, precision, json: _, table, out } => cmd_report(&file, precision.policy(), table, out.as_deref()),
        Command::Check { file, catalog, suite, precision } => cmd_check(file.as_deref(), catalog, &suite, precision.policy()),
        Command::Catalog { list, emit } => cmd_catalog(list, emit.as_deref()),
    }
}
